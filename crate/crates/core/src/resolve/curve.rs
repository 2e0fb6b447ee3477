use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::univariate::{rational_roots, Dense};
use super::{
    covering_units, graph_id, Blowup, DivisorKind, DivisorRecord, Intersection, Locus,
    ResolutionGraph, ResolveError,
};
use crate::poly::{poly_gcd, MultiIndex, Polynomial, Rational, Substitution};

/// `f = c * prod_e P_e^e` with the `P_e` squarefree, pairwise coprime and
/// primitive; returns the nonconstant `(e, P_e)` by increasing `e`.
pub fn squarefree_decomposition(f: &Polynomial) -> Vec<(u64, Polynomial)> {
    let mut g = f.clone();
    for i in 0..f.nvars() {
        g = poly_gcd(&g, &f.derivative(i));
    }
    let mut w = f.exact_div(&g).expect("gcd divides f");
    let mut y = g;
    let mut out = Vec::new();
    let mut e = 1;
    while !w.is_constant() {
        let z = poly_gcd(&w, &y);
        let q = w.exact_div(&z).expect("gcd divides");
        if !q.is_constant() {
            out.push((e, q.primitive()));
        }
        y = y.exact_div(&z).expect("gcd divides");
        w = z;
        e += 1;
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Axis {
    U,
    V,
}

impl Axis {
    fn index(self) -> usize {
        match self {
            Axis::U => 0,
            Axis::V => 1,
        }
    }
}

/// The strict transform of the `e`-fold part of `f`, vanishing at the site.
#[derive(Clone, Debug)]
struct Cluster {
    e: u64,
    poly: Polynomial,
}

/// A point over the origin, with a chart centered at it.
struct Site {
    map: Substitution,
    exc: Vec<(usize, Axis)>,
    clusters: Vec<Cluster>,
}

enum BranchKind {
    Exc(usize),
    Strict(u64),
}

struct Branch {
    kind: BranchKind,
    eq: Polynomial,
    lin: (Rational, Rational),
}

fn linear_part(p: &Polynomial) -> (Rational, Rational) {
    (
        p.coeff(&MultiIndex::new(alloc::vec![1, 0])),
        p.coeff(&MultiIndex::new(alloc::vec![0, 1])),
    )
}

fn independent(a: &(Rational, Rational), b: &(Rational, Rational)) -> bool {
    !(&a.0 * &b.1 - &a.1 * &b.0).is_zero()
}

/// Sort key putting `y1` before `y2` and `y1 - y2` before `y1 + y2`.
fn direction_key(l: &(Rational, Rational)) -> (u8, Rational) {
    if l.0.is_zero() {
        (1, Rational::zero())
    } else {
        (0, &l.1 / &l.0)
    }
}

/// Linear factors of a binary quadratic form over Q, if it has two distinct ones.
fn split_lines(t: &Polynomial) -> Option<[Polynomial; 2]> {
    let c = |i, j| t.coeff(&MultiIndex::new(alloc::vec![i, j]));
    let (a, b, cc) = (c(2, 0), c(1, 1), c(0, 2));
    let y1 = Polynomial::var(2, 0);
    let y2 = Polynomial::var(2, 1);
    let line = |p: Rational, q: Rational| &y1.scale(&p) + &y2.scale(&q);
    if a.is_zero() {
        // y2 * (b y1 + c y2)
        if b.is_zero() {
            return None;
        }
        return Some([line(b, cc), y2.clone()]);
    }
    // a (y1 - r1 y2)(y1 - r2 y2)
    let (roots, _) = rational_roots(&Dense::new(alloc::vec![cc, b, a])).ok()?;
    match roots[..] {
        [(ref r1, 1), (ref r2, 1)] => Some([
            line(Rational::one(), -r1.clone()),
            line(Rational::one(), -r2.clone()),
        ]),
        _ => None,
    }
}

struct Builder {
    graph: ResolutionGraph,
    strict_count: usize,
}

fn chart_a() -> Substitution {
    let y1 = Polynomial::var(2, 0);
    let y2 = Polynomial::var(2, 1);
    Substitution::new(alloc::vec![y1.clone(), &y1 * &y2]).unwrap()
}

fn chart_b() -> Substitution {
    let y1 = Polynomial::var(2, 0);
    let y2 = Polynomial::var(2, 1);
    Substitution::new(alloc::vec![&y1 * &y2, y2]).unwrap()
}

fn shift(t: &Rational) -> Substitution {
    let y1 = Polynomial::var(2, 0);
    let y2 = &Polynomial::var(2, 1) + &Polynomial::constant(2, t.clone());
    Substitution::new(alloc::vec![y1, y2]).unwrap()
}

impl Builder {
    fn id(&self, idx: usize) -> String {
        self.graph.divisors[idx].id.clone()
    }

    fn new_strict(&mut self, e: u64) -> usize {
        self.strict_count += 1;
        self.graph.divisors.push(DivisorRecord {
            id: format!("S{}", self.strict_count),
            n: e,
            nu: 1,
            kind: DivisorKind::Strict,
        });
        self.graph.divisors.len() - 1
    }

    /// The branches through the site if they cross normally.
    fn snc_branches(site: &Site) -> Option<Vec<Branch>> {
        let mut out: Vec<Branch> = site
            .exc
            .iter()
            .map(|&(i, axis)| {
                let eq = Polynomial::var(2, axis.index());
                Branch {
                    kind: BranchKind::Exc(i),
                    lin: linear_part(&eq),
                    eq,
                }
            })
            .collect();
        for c in &site.clusters {
            match c.poly.order()? {
                1 => out.push(Branch {
                    kind: BranchKind::Strict(c.e),
                    lin: linear_part(&c.poly),
                    eq: c.poly.clone(),
                }),
                2 => {
                    let lines = split_lines(&c.poly.homogeneous_part(2))?;
                    let (l, rest) = lines
                        .iter()
                        .find_map(|l| c.poly.exact_div(l).map(|q| (l.clone(), q)))?;
                    for eq in [l, rest] {
                        out.push(Branch {
                            kind: BranchKind::Strict(c.e),
                            lin: linear_part(&eq),
                            eq,
                        });
                    }
                }
                _ => return None,
            }
        }
        if out.len() > 2 || out.iter().any(|b| b.lin.0.is_zero() && b.lin.1.is_zero()) {
            return None;
        }
        if out.len() == 2 && !independent(&out[0].lin, &out[1].lin) {
            return None;
        }
        Some(out)
    }

    fn process(&mut self, site: Site) -> Result<(), ResolveError> {
        match Self::snc_branches(&site) {
            Some(branches) => {
                self.record(site.map, branches);
                Ok(())
            }
            None => self.blow_up(site),
        }
    }

    fn record(&mut self, map: Substitution, mut branches: Vec<Branch>) {
        branches.sort_by_key(|b| match b.kind {
            BranchKind::Exc(i) => (0, i, (0, Rational::zero())),
            BranchKind::Strict(_) => (1, 0, direction_key(&b.lin)),
        });
        let mut ids = Vec::new();
        let mut visible = Vec::new();
        for b in branches {
            let idx = match b.kind {
                BranchKind::Exc(i) => i,
                BranchKind::Strict(e) => self.new_strict(e),
            };
            ids.push(idx);
            visible.push((self.id(idx), b.eq));
        }
        let chart = self.graph.attach_chart(map, visible);
        if let [a, b] = ids[..] {
            self.graph.intersections.push(Intersection {
                a: self.id(a),
                b: self.id(b),
                chart: Some(chart),
                locus: Some(Locus::Point(Rational::zero(), Rational::zero())),
            });
        }
    }

    fn blow_up(&mut self, site: Site) -> Result<(), ResolveError> {
        let mults: Vec<u32> = site
            .clusters
            .iter()
            .map(|c| c.poly.order().unwrap())
            .collect();
        let n: u64 = site
            .exc
            .iter()
            .map(|&(i, _)| self.graph.divisors[i].n)
            .sum::<u64>()
            + site
                .clusters
                .iter()
                .zip(&mults)
                .map(|(c, &m)| c.e * u64::from(m))
                .sum::<u64>();
        let nu: u64 = 2 + site
            .exc
            .iter()
            .map(|&(i, _)| self.graph.divisors[i].nu - 1)
            .sum::<u64>();
        let new_id = self.graph.fresh_exceptional_id();
        let node = site.exc.is_empty() && mults == [2] && {
            let t = site.clusters[0].poly.homogeneous_part(2);
            let c = |i, j| t.coeff(&MultiIndex::new(alloc::vec![i, j]));
            let disc = &c(1, 1) * &c(1, 1) - Rational::from_integer(4.into()) * c(2, 0) * c(0, 2);
            !disc.is_zero()
        };
        if node {
            self.graph.warnings.push(format!(
                "{new_id} resolves a node; its covering comparison over Q needs square unit ratios"
            ));
        }
        self.graph.blowups.push(Blowup {
            new: new_id.clone(),
            through: site.exc.iter().map(|&(i, _)| self.id(i)).collect(),
        });
        self.graph.divisors.push(DivisorRecord {
            id: new_id.clone(),
            n,
            nu,
            kind: DivisorKind::Exceptional,
        });
        let k = self.graph.divisors.len() - 1;
        let old_u = site.exc.iter().find(|e| e.1 == Axis::U).map(|e| e.0);
        let old_v = site.exc.iter().find(|e| e.1 == Axis::V).map(|e| e.0);

        let (sa, sb) = (chart_a(), chart_b());
        let map_a = site.map.then(&sa)?;
        let mut vis_a = alloc::vec![(new_id.clone(), Polynomial::var(2, 0))];
        if let Some(v) = old_v {
            vis_a.push((self.id(v), Polynomial::var(2, 1)));
        }
        let chart_a_id = self.graph.attach_chart(map_a.clone(), vis_a);

        let mut in_a = Vec::new();
        let mut in_b = Vec::new();
        for (c, &m) in site.clusters.iter().zip(&mults) {
            let pa = c
                .poly
                .substitute(&sa)?
                .div_var_power(0, m)
                .expect("multiplicity divides");
            let pb = c
                .poly
                .substitute(&sb)?
                .div_var_power(1, m)
                .expect("multiplicity divides");
            in_a.push(Cluster { e: c.e, poly: pa });
            in_b.push(Cluster { e: c.e, poly: pb });
        }

        let mut ts: BTreeSet<Rational> = BTreeSet::new();
        if old_v.is_some() {
            ts.insert(Rational::zero());
        }
        let mut irrational: Vec<(usize, Dense)> = Vec::new();
        for (ci, c) in in_a.iter().enumerate() {
            let (roots, rest) = rational_roots(&Dense::restrict(&c.poly, 0))?;
            ts.extend(roots.into_iter().map(|r| r.0));
            if !rest.is_constant() {
                irrational.push((ci, rest));
            }
        }
        let report = |p: &Dense| ResolveError::NonRationalCenter {
            divisor: new_id.clone(),
            poly: p.monic().to_poly(1, 0).to_text("t"),
        };
        for (i, (_, r)) in irrational.iter().enumerate() {
            let rep = r.gcd(&r.derivative());
            if !rep.is_constant() {
                return Err(report(&rep));
            }
            for (_, s) in &irrational[..i] {
                let common = r.gcd(s);
                if !common.is_constant() {
                    return Err(report(&common));
                }
            }
        }
        for (ci, r) in irrational {
            let s = self.new_strict(in_a[ci].e);
            let sid = self.id(s);
            self.graph.attach_chart(
                map_a.clone(),
                alloc::vec![(sid.clone(), in_a[ci].poly.clone())],
            );
            let locus = alloc::vec![Polynomial::var(2, 0), r.to_poly(2, 1).primitive()];
            self.graph.intersections.push(Intersection {
                a: new_id.clone(),
                b: sid,
                chart: Some(chart_a_id.clone()),
                locus: Some(Locus::Ideal(locus)),
            });
        }

        for t in ts {
            let (map, clusters) = if t.is_zero() {
                (map_a.clone(), in_a.clone())
            } else {
                let sh = shift(&t);
                let moved = in_a
                    .iter()
                    .map(|c| {
                        Ok(Cluster {
                            e: c.e,
                            poly: c.poly.substitute(&sh)?,
                        })
                    })
                    .collect::<Result<Vec<_>, ResolveError>>()?;
                (map_a.then(&sh)?, moved)
            };
            let mut exc = alloc::vec![(k, Axis::U)];
            if t.is_zero() {
                if let Some(v) = old_v {
                    exc.push((v, Axis::V));
                }
            }
            let clusters = clusters
                .into_iter()
                .filter(|c| c.poly.constant_term().is_zero())
                .collect();
            self.process(Site { map, exc, clusters })?;
        }

        let through_b: Vec<Cluster> = in_b
            .into_iter()
            .filter(|c| c.poly.constant_term().is_zero())
            .collect();
        if old_u.is_some() || !through_b.is_empty() {
            let mut exc = alloc::vec![(k, Axis::V)];
            if let Some(u) = old_u {
                exc.push((u, Axis::U));
            }
            self.process(Site {
                map: site.map.then(&sb)?,
                exc,
                clusters: through_b,
            })?;
        }
        Ok(())
    }
}

/// Embedded resolution of the germ of `f = 0` at the origin of the plane.
///
/// Blowups happen at rational points only; a strict transform that has to be
/// separated at a non-rational point is an error naming the defining
/// polynomial of that point on the last exceptional line.
pub fn resolve_curve(f: &Polynomial) -> Result<ResolutionGraph, ResolveError> {
    if f.nvars() != 2 {
        return Err(ResolveError::NotPlaneCurve(f.nvars()));
    }
    if f.is_zero() {
        return Err(ResolveError::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(ResolveError::NotAtOrigin);
    }
    let clusters = squarefree_decomposition(f)
        .into_iter()
        .filter(|(_, p)| p.constant_term().is_zero())
        .map(|(e, poly)| Cluster { e, poly })
        .collect();
    let mut graph = ResolutionGraph::empty(graph_id(f), 2);
    graph.source = Some(f.clone());
    let mut b = Builder {
        graph,
        strict_count: 0,
    };
    b.process(Site {
        map: Substitution::identity(2),
        exc: Vec::new(),
        clusters,
    })?;
    let mut graph = b.graph;
    graph.canonicalize();
    graph.derive_strata();
    graph.canonicalize();
    covering_units(&graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> Polynomial {
        parse_poly(s, 2).unwrap()
    }

    fn data(g: &ResolutionGraph) -> Vec<(String, u64, u64)> {
        g.divisors
            .iter()
            .map(|d| (d.id.clone(), d.n, d.nu))
            .collect()
    }

    fn pairs(g: &ResolutionGraph) -> Vec<(String, String)> {
        g.intersections
            .iter()
            .map(|x| (x.a.clone(), x.b.clone()))
            .collect()
    }

    fn s(a: &str) -> String {
        String::from(a)
    }

    #[test]
    fn squarefree_parts() {
        let parts = squarefree_decomposition(&p("x1^2*x2 + x1^3*x2"));
        assert_eq!(parts, [(1, p("x1*x2 + x2")), (2, p("x1"))]);
        let parts = squarefree_decomposition(&p("x1^3 - x2^2"));
        assert_eq!(parts, [(1, p("x1^3 - x2^2"))]);
    }

    #[test]
    fn cusp() {
        let g = resolve_curve(&p("x1^3 - x2^2")).unwrap();
        assert_eq!(
            data(&g),
            [
                (s("E1"), 2, 2),
                (s("E2"), 3, 3),
                (s("E3"), 6, 5),
                (s("S1"), 1, 1)
            ]
        );
        assert_eq!(
            pairs(&g),
            [(s("E1"), s("E3")), (s("E2"), s("E3")), (s("E3"), s("S1"))]
        );
        assert_eq!(g.strata.len(), 7);
        assert!(g.warnings.is_empty());
    }

    #[test]
    fn already_normal_crossings() {
        let g = resolve_curve(&p("x1*x2")).unwrap();
        assert_eq!(data(&g), [(s("S1"), 1, 1), (s("S2"), 1, 1)]);
        assert_eq!(pairs(&g), [(s("S1"), s("S2"))]);
        assert_eq!(g.charts.len(), 1);
        assert_eq!(g.charts[0].map, Substitution::identity(2));
        assert_eq!(g.chart("C1").unwrap().equation("S1"), Some(&p("x1")));

        let g = resolve_curve(&p("x1^2*x2")).unwrap();
        assert_eq!(data(&g), [(s("S1"), 2, 1), (s("S2"), 1, 1)]);

        let g = resolve_curve(&p("x1^2 - x2^2")).unwrap();
        assert_eq!(data(&g), [(s("S1"), 1, 1), (s("S2"), 1, 1)]);
        assert!(g.blowups.is_empty());

        let g = resolve_curve(&p("x2 - x1^2")).unwrap();
        assert_eq!(data(&g), [(s("S1"), 1, 1)]);
        assert!(g.intersections.is_empty());
    }

    #[test]
    fn tacnode_and_nodal_cubic() {
        // two smooth branches with contact order 2
        let g = resolve_curve(&p("x2^2 - x1^4")).unwrap();
        let exc: Vec<_> = g.exceptional().map(|d| (d.n, d.nu)).collect();
        assert_eq!(exc, [(2, 2), (4, 3)]);
        assert_eq!(g.strict().count(), 2);

        // rational tangents but curved branches: one extra blowup
        let g = resolve_curve(&p("x2^2 - x1^2 - x1^3")).unwrap();
        assert_eq!(
            data(&g),
            [(s("E1"), 2, 2), (s("S1"), 1, 1), (s("S2"), 1, 1)]
        );
        assert_eq!(pairs(&g), [(s("E1"), s("S1")), (s("E1"), s("S2"))]);
        assert_eq!(g.warnings.len(), 1);
    }

    #[test]
    fn conjugate_branches() {
        let g = resolve_curve(&p("x1^2 + x2^2")).unwrap();
        assert_eq!(data(&g), [(s("E1"), 2, 2), (s("S1"), 1, 1)]);
        let x = &g.intersections[0];
        assert_eq!(
            x.locus,
            Some(Locus::Ideal(alloc::vec![p("x1"), p("x2^2 + 1")]))
        );
    }

    #[test]
    fn non_rational_center_is_an_error() {
        // (x2^2 - 2 x1^2)^2 + x1^5: the two tangent directions are conjugate
        // and each still carries a singular branch
        let err = resolve_curve(&p("(x2^2 - 2*x1^2)^2 + x1^5")).unwrap_err();
        assert!(
            matches!(err, ResolveError::NonRationalCenter { .. }),
            "{err:?}"
        );
        assert_eq!(
            resolve_curve(&p("x1 + 1")).unwrap_err(),
            ResolveError::NotAtOrigin
        );
        assert_eq!(
            resolve_curve(&Polynomial::zero(2)).unwrap_err(),
            ResolveError::ZeroPolynomial
        );
    }

    #[test]
    fn scaling_does_not_change_the_data() {
        let a = resolve_curve(&p("x1^5 - x2^3 + x1^2*x2^2")).unwrap();
        let b = resolve_curve(&p("-7/3*(x1^5 - x2^3 + x1^2*x2^2)")).unwrap();
        assert_eq!(data(&a), data(&b));
        assert_eq!(pairs(&a), pairs(&b));
        assert_eq!(
            a.charts.iter().map(|c| &c.map).collect::<Vec<_>>(),
            b.charts.iter().map(|c| &c.map).collect::<Vec<_>>()
        );
    }
}
