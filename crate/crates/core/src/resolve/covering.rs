use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{Locus, ResolutionGraph, ResolveError, Stratum};
use crate::groebner::{groebner_basis, MonomialOrder};
use crate::ideal::IdealGens;
use crate::poly::{Polynomial, Rational};
use crate::report::{Report, SubCheck, Verdict};

fn pullbacks(
    f: &Polynomial,
    g: &ResolutionGraph,
) -> Result<BTreeMap<String, Polynomial>, ResolveError> {
    g.charts
        .iter()
        .map(|c| Ok((c.id.clone(), f.substitute(&c.map)?)))
        .collect()
}

/// Largest `k <= cap` with `eq^k | p`; `p` must be nonzero.
fn order_along(p: &Polynomial, eq: &Polynomial, cap: u64) -> u64 {
    let mut k = 0;
    let mut cur = p.clone();
    while k < cap {
        match cur.exact_div(eq) {
            Some(q) => {
                cur = q;
                k += 1;
            }
            None => break,
        }
    }
    k
}

/// Divide `p` by `eq^n` exactly.
fn divide_power(p: &Polynomial, eq: &Polynomial, n: u64) -> Option<Polynomial> {
    let mut cur = p.clone();
    for _ in 0..n {
        cur = cur.exact_div(eq)?;
    }
    Some(cur)
}

/// Recompute, chart by chart, the order of `f` pulled back along every
/// visible divisor and compare with the stored multiplicities. Every divisor
/// has to be visible somewhere.
pub fn verify_pullback_orders(f: &Polynomial, g: &ResolutionGraph) -> bool {
    let Ok(pulled) = pullbacks(f, g) else {
        return false;
    };
    for c in &g.charts {
        let p = &pulled[&c.id];
        if p.is_zero() {
            return false;
        }
        for (id, eq) in &c.visible {
            let Some(d) = g.divisor(id) else {
                return false;
            };
            if order_along(p, eq, d.n + 1) != d.n {
                return false;
            }
        }
    }
    g.divisors
        .iter()
        .all(|d| g.charts.iter().any(|c| c.equation(&d.id).is_some()))
}

/// Fill in the unit `u = h*f / prod eq_i^{N_i}` of every stratum that has a
/// chart, using the graph's source polynomial.
pub fn covering_units(g: &ResolutionGraph) -> Result<ResolutionGraph, ResolveError> {
    let f = g.source.as_ref().ok_or(ResolveError::MissingSource)?;
    let pulled = pullbacks(f, g)?;
    let mut out = g.clone();
    for s in &mut out.strata {
        let Some(cid) = &s.chart else {
            continue;
        };
        let chart = g
            .chart(cid)
            .ok_or_else(|| ResolveError::MissingChart(cid.clone()))?;
        let mut u = pulled[cid].clone();
        for id in &s.ids {
            let eq = chart.equation(id).ok_or_else(|| ResolveError::NotVisible {
                divisor: id.clone(),
                chart: cid.clone(),
            })?;
            let n = g.multiplicity(id)?;
            u = divide_power(&u, eq, n)
                .ok_or_else(|| ResolveError::UnitDivision(s.class.clone()))?;
        }
        s.unit = Some(u);
    }
    Ok(out)
}

/// Issued by [`compare_coverings`] when two graphs were found to carry the
/// same covering data; lets class symbols of the two graphs be identified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringCertificate {
    left: String,
    right: String,
}

impl CoveringCertificate {
    pub fn left(&self) -> &str {
        &self.left
    }

    pub fn right(&self) -> &str {
        &self.right
    }

    /// Whether this certificate relates graphs `a` and `b` (either order).
    pub fn relates(&self, a: &str, b: &str) -> bool {
        (self.left == a && self.right == b) || (self.left == b && self.right == a)
    }
}

#[derive(Clone, Debug)]
pub struct Comparison {
    pub report: Report,
    pub certificate: Option<CoveringCertificate>,
}

/// What a unit restricts to on a stratum: its value at a rational point, or
/// its normal form modulo the ideal of the stratum.
fn restriction(
    g: &ResolutionGraph,
    s: &Stratum,
    u: &Polynomial,
) -> Result<Polynomial, ResolveError> {
    let cid = s
        .chart
        .as_ref()
        .ok_or_else(|| ResolveError::MissingChart(s.class.clone()))?;
    let chart = g
        .chart(cid)
        .ok_or_else(|| ResolveError::MissingChart(cid.clone()))?;
    let d = u.nvars();
    let gens: Vec<Polynomial> = if let [id] = &s.ids[..] {
        let eq = chart.equation(id).ok_or_else(|| ResolveError::NotVisible {
            divisor: id.clone(),
            chart: cid.clone(),
        })?;
        alloc::vec![eq.clone()]
    } else {
        let x = g
            .intersections
            .iter()
            .find(|x| s.ids.contains(&x.a) && s.ids.contains(&x.b))
            .ok_or_else(|| ResolveError::UnknownDivisor(s.class.clone()))?;
        match &x.locus {
            Some(Locus::Point(a, b)) => {
                return Ok(Polynomial::constant(
                    d,
                    u.evaluate(&[a.clone(), b.clone()])?,
                ));
            }
            Some(Locus::Ideal(gens)) => gens.clone(),
            None => {
                let mut gens = Vec::new();
                for id in &s.ids {
                    gens.push(chart.equation(id).cloned().ok_or_else(|| {
                        ResolveError::NotVisible {
                            divisor: id.clone(),
                            chart: cid.clone(),
                        }
                    })?);
                }
                gens
            }
        }
    };
    let gb =
        groebner_basis(&IdealGens::new(d, gens), MonomialOrder::GradedLex).expect("global order");
    Ok(gb.normal_form(u))
}

fn is_nth_power(c: &Rational, n: u64) -> bool {
    let Ok(n) = u32::try_from(n) else {
        return false;
    };
    if c.is_negative() && n % 2 == 0 {
        return false;
    }
    let root = |v: &BigInt| {
        let r = v.nth_root(n);
        r.pow(n) == *v
    };
    root(c.numer()) && root(c.denom())
}

/// Compare the covering data of two resolutions built along the same blowup
/// sequence.
///
/// Divisor data, intersections and cover degrees are compared first; a
/// mismatch there is a FAIL. If they agree but the charts or centers differ
/// the comparison is refused. Otherwise, for every stratum with `N_I > 1`,
/// the two units are restricted to the stratum: equal restrictions pass,
/// restrictions differing by a constant that is an `N_I`-th power in Q pass
/// (the coverings are isomorphic by rescaling `z`), any other constant ratio
/// is UNDECIDED over Q, and anything else fails.
pub fn compare_coverings(
    gf: &ResolutionGraph,
    gg: &ResolutionGraph,
) -> Result<Comparison, ResolveError> {
    let mut r = Report::new("covering comparison");
    let div = |g: &ResolutionGraph| -> Vec<(String, u64, u64, &'static str)> {
        g.divisors
            .iter()
            .map(|d| (d.id.clone(), d.n, d.nu, d.kind.as_str()))
            .collect()
    };
    let (df, dg) = (div(gf), div(gg));
    let first_diff = df.iter().zip(&dg).find(|(a, b)| a != b);
    let c = if df == dg {
        SubCheck::new("divisor data", Verdict::Pass).with_detail(format!("{} divisors", df.len()))
    } else if let Some((a, b)) = first_diff {
        SubCheck::new("divisor data", Verdict::Fail).with_detail(format!(
            "{} has (N, nu) = ({}, {}) against {} with ({}, {})",
            a.0, a.1, a.2, b.0, b.1, b.2
        ))
    } else {
        SubCheck::new("divisor data", Verdict::Fail).with_detail(format!(
            "{} divisors against {}",
            df.len(),
            dg.len()
        ))
    };
    r.push(c);
    let pairs = |g: &ResolutionGraph| -> Vec<(String, String)> {
        g.intersections
            .iter()
            .map(|x| (x.a.clone(), x.b.clone()))
            .collect()
    };
    r.push(SubCheck::new(
        "intersections",
        Verdict::from_bool(pairs(gf) == pairs(gg)),
    ));
    let covers = |g: &ResolutionGraph| -> Vec<(Vec<String>, u64)> {
        g.strata.iter().map(|s| (s.ids.clone(), s.cover)).collect()
    };
    r.push(SubCheck::new(
        "cover degrees",
        Verdict::from_bool(covers(gf) == covers(gg)),
    ));
    if !r.passed() {
        r.note("unit comparison skipped");
        return Ok(Comparison {
            report: r,
            certificate: None,
        });
    }

    if gf.blowups != gg.blowups {
        return Err(ResolveError::DifferentSequences(String::from(
            "blowup centers differ",
        )));
    }
    let maps = |g: &ResolutionGraph| -> Vec<(String, crate::poly::Substitution)> {
        g.charts
            .iter()
            .map(|c| (c.id.clone(), c.map.clone()))
            .collect()
    };
    if maps(gf) != maps(gg) {
        return Err(ResolveError::DifferentSequences(String::from(
            "chart maps differ",
        )));
    }
    let places = |g: &ResolutionGraph| -> Vec<(Option<String>, Option<Locus>)> {
        g.intersections
            .iter()
            .map(|x| (x.chart.clone(), x.locus.clone()))
            .collect()
    };
    if places(gf) != places(gg)
        || gf
            .strata
            .iter()
            .zip(&gg.strata)
            .any(|(a, b)| a.chart != b.chart)
    {
        return Err(ResolveError::DifferentSequences(String::from(
            "intersection or stratum charts differ",
        )));
    }

    for (sf, sg) in gf.strata.iter().zip(&gg.strata) {
        let name = format!("unit on {}", sf.class);
        if sf.cover == 1 {
            r.push(SubCheck::new(&name, Verdict::Pass).with_detail("trivial covering (N_I = 1)"));
            continue;
        }
        let (Some(u), Some(v)) = (&sf.unit, &sg.unit) else {
            r.push(SubCheck::new(&name, Verdict::Undecided).with_detail("unit data missing"));
            continue;
        };
        let (ru, rv) = (restriction(gf, sf, u)?, restriction(gg, sg, v)?);
        if ru == rv {
            r.push(
                SubCheck::new(&name, Verdict::Pass).with_detail("u - v vanishes on the stratum"),
            );
            continue;
        }
        let ratio = match (ru.leading_term(), rv.leading_term()) {
            (Some((_, a)), Some((_, b))) => Some(b / a),
            _ => None,
        };
        match ratio {
            Some(c) if ru.scale(&c) == rv => {
                if is_nth_power(&c, sf.cover) {
                    r.push(SubCheck::new(&name, Verdict::Pass).with_detail(format!(
                        "v = {c} u on the stratum and {c} is an N_I-th power (N_I = {})",
                        sf.cover
                    )));
                } else {
                    r.push(
                        SubCheck::new(&name, Verdict::Undecided).with_detail(format!(
                            "v = {c} u on the stratum; {c} is not an N_I-th power in Q (N_I = {})",
                            sf.cover
                        )),
                    );
                }
            }
            _ => r.push(
                SubCheck::new(&name, Verdict::Fail)
                    .with_detail("u - v does not vanish on the stratum")
                    .with_offending(v - u),
            ),
        }
    }
    let certificate = r.passed().then(|| CoveringCertificate {
        left: gf.id.clone(),
        right: gg.id.clone(),
    });
    Ok(Comparison {
        report: r,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::super::resolve_curve;
    use super::*;
    use crate::poly::parse_poly;
    use num_traits::One;

    fn p(s: &str) -> Polynomial {
        parse_poly(s, 2).unwrap()
    }

    #[test]
    fn pullback_orders() {
        for f in [
            "x1^3 - x2^2",
            "x1*x2",
            "x1^2*x2",
            "x2^2 - x1^5",
            "x1^2 + x2^2",
            "(x1^2 - x2^3)^2*x1",
        ] {
            let g = resolve_curve(&p(f)).unwrap();
            assert!(verify_pullback_orders(&p(f), &g), "{f}");
        }
        let mut g = resolve_curve(&p("x1^3 - x2^2")).unwrap();
        g.divisors[2].n = 5;
        assert!(!verify_pullback_orders(&p("x1^3 - x2^2"), &g));
    }

    #[test]
    fn cusp_units() {
        let g = resolve_curve(&p("x1^3 - x2^2")).unwrap();
        let e3 = g.strata.iter().find(|s| s.ids == ["E3"]).unwrap();
        assert_eq!(e3.cover, 6);
        let u = e3.unit.as_ref().unwrap();
        let chart = g.chart(e3.chart.as_ref().unwrap()).unwrap();
        let pulled = p("x1^3 - x2^2").substitute(&chart.map).unwrap();
        assert_eq!(
            &u.mul_monomial(
                &crate::poly::MultiIndex::new(alloc::vec![6, 0]),
                &Rational::one()
            ),
            &pulled
        );
        let pair = g.strata.iter().find(|s| s.ids == ["E2", "E3"]).unwrap();
        assert_eq!(pair.cover, 3);
    }

    #[test]
    fn unit_multiple_compares_equal() {
        let f = p("x1^3 - x2^2");
        let g = p("(1 + x1^6)*(x1^3 - x2^2)");
        let (gf, gg) = (resolve_curve(&f).unwrap(), resolve_curve(&g).unwrap());
        let c = compare_coverings(&gf, &gg).unwrap();
        assert!(c.report.passed(), "{}", c.report);
        assert!(c.certificate.unwrap().relates(&gf.id, &gg.id));
        let same = compare_coverings(&gf, &gf).unwrap();
        assert!(same.report.passed());
    }

    #[test]
    fn unrelated_curves_fail_on_divisors() {
        let gf = resolve_curve(&p("x1^3 - x2^2")).unwrap();
        let gg = resolve_curve(&p("x1^2 - x2^2")).unwrap();
        let c = compare_coverings(&gf, &gg).unwrap();
        assert_eq!(
            c.report.check("divisor data").unwrap().verdict,
            Verdict::Fail
        );
        assert!(c.certificate.is_none());
    }

    #[test]
    fn constant_ratios() {
        let f = p("x1^2 + x2^2 + x1^3");
        let gf = resolve_curve(&f).unwrap();
        // E1 has N = 2: a ratio of 4 is a square, 2 is not
        let four = resolve_curve(&(&f * &Polynomial::constant(2, crate::poly::rat(4)))).unwrap();
        let two = resolve_curve(&(&f * &Polynomial::constant(2, crate::poly::rat(2)))).unwrap();
        assert!(compare_coverings(&gf, &four).unwrap().report.passed());
        let r = compare_coverings(&gf, &two).unwrap().report;
        assert_eq!(r.verdict(), Verdict::Undecided, "{r}");
        // equal divisor data on different charts is refused
        let a = resolve_curve(&p("x1*x2")).unwrap();
        let mut b = a.clone();
        b.charts[0].map =
            crate::poly::Substitution::new(alloc::vec![p("x1"), p("x2 + x1^2")]).unwrap();
        assert!(matches!(
            compare_coverings(&a, &b),
            Err(ResolveError::DifferentSequences(_))
        ));
    }

    #[test]
    fn nth_powers() {
        assert!(is_nth_power(&crate::poly::ratio(4, 9), 2));
        assert!(!is_nth_power(&crate::poly::ratio(-4, 9), 2));
        assert!(is_nth_power(&crate::poly::ratio(-8, 27), 3));
        assert!(!is_nth_power(&crate::poly::rat(2), 6));
    }
}
