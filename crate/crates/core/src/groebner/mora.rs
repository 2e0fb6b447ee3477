//! Standard bases for the local order via Mora's tangent-cone normal form.
//!
//! Once the leading monomials contain a pure power of every variable, every
//! monomial of degree at least some `D` (the "corner") is in the ideal; from
//! then on all terms of degree `>= D` are discarded and the monomials of
//! degree `D` are appended to the basis.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::sorted::SortedPoly;
use super::MonomialOrder;
use crate::poly::{multiindices_of_degree, MultiIndex, Polynomial, Rational};

const ORD: MonomialOrder = MonomialOrder::LocalGraded;

#[derive(Clone, Debug)]
pub(crate) struct LocalBasis {
    pub elems: Vec<SortedPoly>,
    /// Every monomial of this degree or higher lies in the ideal.
    pub corner: Option<u32>,
}

fn truncate(p: &mut SortedPoly, corner: Option<u32>) {
    if let Some(c) = corner {
        p.terms.retain(|t| t.0.degree() < c);
    }
}

/// Weak normal form of `h` with respect to `basis`.
///
/// Among the reducers whose leading monomial divides that of `h`, the one of
/// smallest écart is used (oldest on ties). When that écart exceeds the écart
/// of `h`, `h` itself joins the reducer set. The result is zero iff `h` lies
/// in the ideal of the localization at the origin (given a standard basis).
pub(crate) fn weak_normal_form(
    h: &SortedPoly,
    basis: &[SortedPoly],
    corner: Option<u32>,
) -> SortedPoly {
    let mut extra: Vec<(SortedPoly, u32)> = Vec::new();
    let base_ecart: Vec<u32> = basis.iter().map(SortedPoly::ecart).collect();
    let mut h = h.clone();
    truncate(&mut h, corner);
    loop {
        if h.is_zero() {
            return h;
        }
        let lm = h.lm().clone();
        let mut best: Option<(u32, usize)> = None;
        let total = basis.len() + extra.len();
        for k in 0..total {
            let (g, e) = if k < basis.len() {
                (&basis[k], base_ecart[k])
            } else {
                let (g, e) = &extra[k - basis.len()];
                (g, *e)
            };
            if g.lm().divides(&lm) && best.is_none_or(|(be, _)| e < be) {
                best = Some((e, k));
            }
        }
        let Some((e, k)) = best else {
            return h;
        };
        let g = if k < basis.len() {
            &basis[k]
        } else {
            &extra[k - basis.len()].0
        };
        let shift = lm.checked_sub(g.lm()).unwrap();
        let q: Rational = h.lc() / g.lc();
        let mut next = h.sub_scaled(&q, &shift, g, ORD);
        truncate(&mut next, corner);
        let eh = h.ecart();
        if e > eh {
            extra.push((h, eh));
        }
        h = next;
    }
}

/// Degree `D` such that every monomial of degree `>= D` is divisible by one
/// of the pure powers among `lms`, if every variable has one.
fn corner_of<'a>(lms: impl Iterator<Item = &'a MultiIndex>, nvars: usize) -> Option<u32> {
    let mut bound: Vec<Option<u32>> = alloc::vec![None; nvars];
    for m in lms {
        let support: Vec<usize> = (0..nvars).filter(|&i| m.get(i) > 0).collect();
        if let [i] = support[..] {
            let e = m.get(i);
            bound[i] = Some(bound[i].map_or(e, |b| b.min(e)));
        }
    }
    let mut sum = 1;
    for b in bound {
        sum += b? - 1;
    }
    Some(sum)
}

enum Outcome {
    Done(Vec<SortedPoly>),
    Unit,
    Restart(u32, Vec<SortedPoly>),
}

fn run(input: Vec<SortedPoly>, corner: Option<u32>, nvars: usize) -> Outcome {
    let mut s: Vec<SortedPoly> = Vec::new();
    for mut q in input {
        truncate(&mut q, corner);
        if q.is_zero() {
            continue;
        }
        q.make_monic();
        if q.lm().is_zero() {
            return Outcome::Unit;
        }
        s.push(q);
    }
    let improves = |c: Option<u32>| match (c, corner) {
        (Some(_), None) => true,
        (Some(a), Some(b)) => a < b,
        _ => false,
    };
    let found = corner_of(s.iter().map(SortedPoly::lm), nvars);
    if improves(found) {
        return Outcome::Restart(found.unwrap(), s);
    }

    let mut pending: BTreeSet<(u32, MultiIndex, usize, usize)> = BTreeSet::new();
    let mut index: BTreeSet<(usize, usize)> = BTreeSet::new();
    let push =
        |pending: &mut BTreeSet<_>, index: &mut BTreeSet<_>, i: usize, j: usize, l: MultiIndex| {
            pending.insert((l.degree(), l, i, j));
            index.insert((i, j));
        };
    for j in 0..s.len() {
        for i in 0..j {
            let l = s[i].lm().lcm(s[j].lm());
            push(&mut pending, &mut index, i, j, l);
        }
    }
    while let Some((_, l, i, j)) = pending.pop_first() {
        index.remove(&(i, j));
        if s[i].lm().is_coprime(s[j].lm()) {
            continue;
        }
        let chain = (0..s.len()).any(|k| {
            k != i
                && k != j
                && s[k].lm().divides(&l)
                && !index.contains(&(i.min(k), i.max(k)))
                && !index.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let sp = SortedPoly::spoly(&s[i], &s[j], ORD);
        let mut h = weak_normal_form(&sp, &s, corner);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lm().is_zero() {
            return Outcome::Unit;
        }
        let k = s.len();
        for i in 0..k {
            let l = s[i].lm().lcm(h.lm());
            push(&mut pending, &mut index, i, k, l);
        }
        s.push(h);
        let found = corner_of(s.iter().map(SortedPoly::lm), nvars);
        if improves(found) {
            return Outcome::Restart(found.unwrap(), s);
        }
    }
    Outcome::Done(s)
}

/// A minimal standard basis of the ideal generated by `gens` in the
/// localization at the origin. The unit ideal yields `[1]`.
pub(crate) fn standard_basis(gens: &[Polynomial]) -> LocalBasis {
    let input: Vec<SortedPoly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| SortedPoly::from_poly(p, ORD))
        .collect();
    let Some(nvars) = gens.first().map(Polynomial::nvars) else {
        return LocalBasis {
            elems: Vec::new(),
            corner: None,
        };
    };
    let mut corner = None;
    let mut input = input;
    let s = loop {
        match run(input, corner, nvars) {
            Outcome::Unit => {
                return LocalBasis {
                    elems: alloc::vec![SortedPoly::from_poly(&Polynomial::one(nvars), ORD)],
                    corner: Some(0),
                }
            }
            Outcome::Done(s) => break s,
            Outcome::Restart(c, s) => {
                corner = Some(c);
                input = s;
            }
        }
    };

    let mut keep: Vec<SortedPoly> = Vec::new();
    for (i, p) in s.iter().enumerate() {
        let redundant = s
            .iter()
            .enumerate()
            .any(|(j, q)| j != i && q.lm().divides(p.lm()) && (q.lm() != p.lm() || j < i));
        if !redundant {
            keep.push(p.clone());
        }
    }
    if let Some(c) = corner {
        let extra: Vec<SortedPoly> = multiindices_of_degree(nvars, c)
            .into_iter()
            .filter(|m| !keep.iter().any(|q| q.lm().divides(m)))
            .map(|m| SortedPoly {
                terms: alloc::vec![(m, Rational::from_integer(1.into()))],
            })
            .collect();
        keep.extend(extra);
    }
    keep.sort_by(|a, b| ORD.cmp(b.lm(), a.lm()));
    LocalBasis {
        elems: keep,
        corner,
    }
}
