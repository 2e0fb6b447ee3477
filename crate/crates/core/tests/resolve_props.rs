mod common;

use common::{germ, resolve_or_skip, separate_or_skip};
use hijac_core::groebner::local_dimension;
use hijac_core::ideal::IdealGens;
use hijac_core::poly::{rat, Polynomial};
use hijac_core::resolve::{
    compare_coverings, m_separate, resolve_curve, verify_pullback_orders, DivisorKind, Locus,
    ResolutionGraph,
};
use proptest::prelude::*;

fn milnor_number(f: &Polynomial) -> Option<usize> {
    local_dimension(&IdealGens::new(2, [f.derivative(0), f.derivative(1)])).dim()
}

/// Points of `a ∩ b` over the algebraic closure.
fn crossing_points(locus: &Option<Locus>) -> u32 {
    match locus {
        Some(Locus::Ideal(gens)) => gens
            .iter()
            .filter_map(Polynomial::total_degree)
            .max()
            .unwrap_or(1),
        _ => 1,
    }
}

/// Euler characteristic of the Milnor fibre from the resolution:
/// `sum N_i * chi(E_i minus the other divisors)` over exceptional `E_i`.
fn a_campo(g: &ResolutionGraph) -> i64 {
    g.exceptional()
        .map(|e| {
            let meets: u32 = g
                .intersections
                .iter()
                .filter(|x| x.a == e.id || x.b == e.id)
                .map(|x| crossing_points(&x.locus))
                .sum();
            e.n as i64 * (2 - i64::from(meets))
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn pullback_orders_match(f in germ()) {
        let Some(g) = resolve_or_skip(&f) else { return Ok(()) };
        prop_assert!(verify_pullback_orders(&f, &g), "{}", g);
        prop_assert!(g.strata.iter().all(|s| s.unit.is_some()));
    }

    #[test]
    fn log_discrepancies_follow_blowups(f in germ(), m in 1u64..=14) {
        let Some(g) = resolve_or_skip(&f) else { return Ok(()) };
        let Some(g) = separate_or_skip(&g, m) else { return Ok(()) };
        for b in &g.blowups {
            let nu = |id: &str| g.divisor(id).unwrap().nu;
            let expected = 2 + b.through.iter().map(|id| nu(id) - 1).sum::<u64>();
            prop_assert_eq!(nu(&b.new), expected, "{} through {:?}", b.new, b.through);
        }
        for d in g.strict() {
            prop_assert_eq!(d.nu, 1);
        }
    }

    #[test]
    fn separation(f in germ(), m in 1u64..=14) {
        let Some(g) = resolve_or_skip(&f) else { return Ok(()) };
        let Some(s) = separate_or_skip(&g, m) else { return Ok(()) };
        prop_assert!(s.is_m_separating(m));
        prop_assert!(verify_pullback_orders(&f, &s));
        prop_assert_eq!(&m_separate(&s, m).unwrap(), &s);
        for b in &s.blowups[g.blowups.len()..] {
            let n: u64 = b.through.iter().map(|id| s.divisor(id).unwrap().n).sum();
            prop_assert_eq!(s.divisor(&b.new).unwrap().n, n);
        }
    }

    #[test]
    fn scaling_keeps_the_resolution(f in germ(), c in prop::sample::select(vec![-1i64, 2, 9])) {
        let Some(g) = resolve_or_skip(&f) else { return Ok(()) };
        let scaled = resolve_curve(&f.scale(&rat(c))).unwrap();
        let data = |g: &ResolutionGraph| g.divisors.iter().map(|d| (d.n, d.nu, d.kind)).collect::<Vec<_>>();
        prop_assert_eq!(data(&g), data(&scaled));
        let cmp = compare_coverings(&g, &scaled).unwrap();
        prop_assert!(!matches!(cmp.report.verdict(), hijac_core::report::Verdict::Fail), "{}", cmp.report);
    }

    #[test]
    fn euler_characteristic_of_milnor_fibre(f in germ()) {
        let Some(g) = resolve_or_skip(&f) else { return Ok(()) };
        let Some(mu) = milnor_number(&f) else { return Ok(()) };
        let branches = g.divisors.iter().filter(|d| d.kind == DivisorKind::Strict).count() as i64;
        let chi = if g.exceptional().next().is_some() { a_campo(&g) } else { 2 - branches.max(1) };
        prop_assert_eq!(1 - mu as i64, chi, "{}", g);
    }
}
