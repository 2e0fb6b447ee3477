#![allow(dead_code)]

use hijac_core::poly::{parse_poly, rat, MultiIndex, Polynomial, Rational};
use hijac_core::resolve::{m_separate, resolve_curve, ResolutionGraph, ResolveError};
use proptest::prelude::*;

/// Random polynomial in `d` variables of total degree at most `max_deg`
/// with small integer coefficients.
pub fn poly(d: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, d), -5i64..=5),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(
            d,
            terms
                .into_iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= max_deg)
                .map(|(e, c)| (MultiIndex::new(e), rat(c))),
        )
    })
}

/// Like [`poly`] but vanishing at the origin.
pub fn poly_at_origin(
    d: usize,
    max_deg: u32,
    max_terms: usize,
) -> impl Strategy<Value = Polynomial> {
    poly(d, max_deg, max_terms)
        .prop_map(|p| &p - &Polynomial::constant(p.nvars(), p.constant_term()))
}

pub fn point(d: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-7i64..=7, 1i64..=4), d).prop_map(|v| {
        v.into_iter()
            .map(|(n, q)| Rational::new(n.into(), q.into()))
            .collect()
    })
}

/// `x2^p - c x1^q` or `x1 - c x2^k`.
pub fn branch() -> impl Strategy<Value = Polynomial> {
    prop_oneof![
        (
            1u32..=3,
            1u32..=5,
            prop::sample::select(vec![1i64, -1, 2, 3])
        )
            .prop_map(|(p, q, c)| { parse_poly(&format!("x2^{p} - {c}*x1^{q}"), 2).unwrap() }),
        (2u32..=4, prop::sample::select(vec![1i64, -2]))
            .prop_map(|(k, c)| { parse_poly(&format!("x1 - {c}*x2^{k}"), 2).unwrap() }),
    ]
}

/// Product of one to three branches: a plane-curve germ at the origin.
pub fn germ() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(branch(), 1..=3)
        .prop_map(|bs| bs.iter().fold(Polynomial::one(2), |acc, b| &acc * b))
}

pub fn resolve_or_skip(f: &Polynomial) -> Option<ResolutionGraph> {
    match resolve_curve(f) {
        Ok(g) => Some(g),
        Err(ResolveError::NonRationalCenter { .. } | ResolveError::CoefficientsTooLarge) => None,
        Err(e) => panic!("{f}: {e}"),
    }
}

/// `m_separate`, or `None` when it has to blow up a crossing that is not a
/// rational point.
pub fn separate_or_skip(g: &ResolutionGraph, m: u64) -> Option<ResolutionGraph> {
    match m_separate(g, m) {
        Ok(s) => Some(s),
        Err(ResolveError::NonRationalCenter { .. }) => None,
        Err(e) => panic!("{e}"),
    }
}
