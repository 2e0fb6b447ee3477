mod common;

use common::{poly, poly_at_origin};
use hijac_core::groebner::{
    gcd_by_elimination, global_dimension, groebner_basis, local_dimension, membership,
    standard_basis, MonomialOrder,
};
use hijac_core::ideal::IdealGens;
use hijac_core::poly::{parse_poly, poly_gcd, poly_lcm, Polynomial};
use proptest::prelude::*;

fn zero_dim_ideal(extra: Vec<Polynomial>) -> IdealGens {
    // x1^3, x2^3 keep the quotient finite whatever else is added
    let mut gens = vec![
        parse_poly("x1^3", 2).unwrap(),
        parse_poly("x2^3 + x1*x2", 2).unwrap(),
    ];
    gens.extend(extra);
    IdealGens::new(2, gens)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn generators_reduce_to_zero(gens in prop::collection::vec(poly(2, 3, 4), 1..=3)) {
        let i = IdealGens::new(2, gens.clone());
        for ord in [MonomialOrder::Lex, MonomialOrder::GradedLex, MonomialOrder::GradedRevLex] {
            let gb = groebner_basis(&i, ord).unwrap();
            for g in &gens {
                prop_assert!(gb.normal_form(g).is_zero());
            }
        }
        let sb = standard_basis(&i);
        for g in &gens {
            prop_assert!(membership(g, &sb));
        }
    }

    #[test]
    fn basis_ignores_generator_order(gens in prop::collection::vec(poly(2, 3, 4), 2..=3)) {
        let mut rev = gens.clone();
        rev.reverse();
        for ord in [MonomialOrder::GradedRevLex, MonomialOrder::LocalGraded] {
            let a = hijac_core::groebner::basis_for(&IdealGens::new(2, gens.clone()), ord);
            let b = hijac_core::groebner::basis_for(&IdealGens::new(2, rev.clone()), ord);
            prop_assert_eq!(a.basis(), b.basis());
        }
    }

    #[test]
    fn local_quotient_is_smaller(extra in prop::collection::vec(poly(2, 3, 3), 0..=2)) {
        let i = zero_dim_ideal(extra);
        let global = global_dimension(&i).dim().unwrap();
        let local = local_dimension(&i).dim().unwrap();
        prop_assert!(local <= global, "local {} > global {}", local, global);
    }

    #[test]
    fn global_membership_implies_local(gens in prop::collection::vec(poly_at_origin(2, 3, 3), 1..=2), h in poly(2, 2, 3)) {
        let i = IdealGens::new(2, gens.clone());
        let f = &h * &gens[0];
        let gb = groebner_basis(&i, MonomialOrder::GradedRevLex).unwrap();
        prop_assert!(gb.contains(&f));
        prop_assert!(standard_basis(&i).contains(&f));
    }

    #[test]
    fn gcd_and_lcm(a in poly(2, 2, 3), b in poly(2, 2, 3), c in poly(2, 2, 3)) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let (f, g) = (&a * &c, &b * &c);
        let d = poly_gcd(&f, &g);
        prop_assert!(f.exact_div(&d).is_some());
        prop_assert!(g.exact_div(&d).is_some());
        prop_assert!(d.exact_div(&c.primitive()).is_some(), "gcd {} misses common factor {}", d, c);
        let l = poly_lcm(&f, &g);
        prop_assert_eq!((&f * &g).primitive(), (&d * &l).primitive());
        prop_assert_eq!(gcd_by_elimination(&f, &g), d);
    }
}
