mod common;

use common::{point, poly};
use hijac_core::poly::{multiindices, parse_poly, MultiIndex, Polynomial, Substitution};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(3, 3, 5), b in poly(3, 3, 5), c in poly(3, 3, 5)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(3), a.clone());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(2, 4, 6), b in poly(2, 4, 6), x in point(2)) {
        let (va, vb) = (a.evaluate(&x).unwrap(), b.evaluate(&x).unwrap());
        prop_assert_eq!((&a * &b).evaluate(&x).unwrap(), &va * &vb);
        prop_assert_eq!((&a + &b).evaluate(&x).unwrap(), va + vb);
    }

    #[test]
    fn mixed_partials_commute(f in poly(3, 5, 8)) {
        for i in 0..3 {
            for j in 0..3 {
                prop_assert_eq!(f.derivative(i).derivative(j), f.derivative(j).derivative(i));
            }
        }
        let alpha = MultiIndex::new(vec![1, 2, 0]);
        let iterated = f.derivative(0).derivative(1).derivative(1);
        prop_assert_eq!(f.partial_derivative(&alpha).unwrap(), iterated);
    }

    #[test]
    fn leibniz_rule(a in poly(2, 4, 6), b in poly(2, 4, 6)) {
        for i in 0..2 {
            let lhs = (&a * &b).derivative(i);
            let rhs = &(&a.derivative(i) * &b) + &(&a * &b.derivative(i));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn taylor_expansion_reassembles_f(f in poly(2, 4, 6)) {
        // f(x + delta) = sum_alpha T_alpha(f)(x) delta^alpha in 4 variables
        let x = |i| Polynomial::var(4, i);
        let shifted = f.substitute(&Substitution::new(vec![&x(0) + &x(2), &x(1) + &x(3)]).unwrap()).unwrap();
        let mut sum = Polynomial::zero(4);
        for alpha in multiindices(2, 0, 4) {
            let t = f.taylor_coefficient(&alpha).unwrap().embed(4, 0);
            let delta = MultiIndex::new(vec![0, 0, alpha.get(0), alpha.get(1)]);
            sum = &sum + &t.mul_monomial(&delta, &hijac_core::poly::rat(1));
        }
        prop_assert_eq!(shifted, sum);
    }

    #[test]
    fn text_round_trip(f in poly(3, 4, 6)) {
        prop_assert_eq!(parse_poly(&f.to_string(), 3).unwrap(), f);
    }

    #[test]
    fn substitution_composes(f in poly(2, 3, 5), s in poly(2, 2, 3), t in poly(2, 2, 3), u in poly(2, 2, 3)) {
        let sigma = Substitution::new(vec![s.clone(), t.clone()]).unwrap();
        let tau = Substitution::new(vec![u.clone(), &s + &t]).unwrap();
        let stepwise = f.substitute(&sigma).unwrap().substitute(&tau).unwrap();
        prop_assert_eq!(stepwise, f.substitute(&sigma.then(&tau).unwrap()).unwrap());
    }

    #[test]
    fn division_identity(a in poly(2, 4, 6), b in poly(2, 3, 4)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a.clone());
        prop_assert_eq!((&a * &b).exact_div(&b), Some(a.clone()));
    }
}
