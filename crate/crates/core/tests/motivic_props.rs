mod common;

use common::{germ, resolve_or_skip, separate_or_skip};
use hijac_core::motivic::{
    check_separating_specialization, contact_locus_class, expand, expand_scaled, gro_equal, limit_t_infinity,
    nearby_cycle, zeta, ClassSymbol, GroVal, MotivicError,
};
use hijac_core::report::Verdict;
use num_bigint::BigInt;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = GroVal> {
    prop::collection::vec((-4i64..=4, -3i64..=3), 0..=4).prop_map(|ts| {
        let mut v = GroVal::zero();
        for (p, c) in ts {
            v.add_term(None, p, BigInt::from(c));
        }
        v
    })
}

fn symbol(name: &str) -> ClassSymbol {
    ClassSymbol {
        origin: "g0".into(),
        stratum: vec![name.into()],
        name: name.into(),
        cover: 2,
        action_order: 2,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn grothendieck_arithmetic(a in scalar(), b in scalar(), c in scalar(), p in -6i64..=6, q in -6i64..=6) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&(&b + &c)).unwrap(), &a.mul(&b).unwrap() + &a.mul(&c).unwrap());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(GroVal::lpow(p).mul(&GroVal::lpow(q)).unwrap(), GroVal::lpow(p + q));
        prop_assert_eq!(a.mul_lpow(p), a.mul(&GroVal::lpow(p)).unwrap());

        let e = GroVal::class(symbol("E1"));
        prop_assert_eq!(e.mul(&a).unwrap().mul(&b).unwrap(), e.mul(&a.mul(&b).unwrap()).unwrap());
        prop_assert_eq!(e.mul(&e), Err(MotivicError::SymbolProduct));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn zeta_expansion_matches_contact_loci(f in germ(), sep in 0u64..=10) {
        let Some(g) = resolve_or_skip(&f) else { return Ok(()) };
        let Some(g) = separate_or_skip(&g, sep) else { return Ok(()) };
        let z = zeta(&g).unwrap();
        let scaled = expand_scaled(&z, 8, 2);
        let raw = expand(&z, 8);
        for m in 1..=8u64 {
            let direct = contact_locus_class(&g, m, 2).unwrap();
            prop_assert_eq!(&scaled[m as usize - 1], &direct, "m = {}", m);
            prop_assert_eq!(&raw[m as usize - 1].mul_lpow(2 * m as i64), &direct);
        }
    }

    #[test]
    fn limit_is_linear_and_routes_agree(f in germ(), h in germ()) {
        let (Some(gf), Some(gh)) = (resolve_or_skip(&f), resolve_or_skip(&h)) else { return Ok(()) };
        let (zf, zh) = (zeta(&gf).unwrap(), zeta(&gh).unwrap());
        prop_assert_eq!(limit_t_infinity(&zf.add(&zh)), &limit_t_infinity(&zf) + &limit_t_infinity(&zh));
        let s = nearby_cycle(&gf).unwrap();
        prop_assert_eq!(&s, &(-&limit_t_infinity(&zf)));
        if gf.id != gh.id {
            let t = nearby_cycle(&gh).unwrap();
            prop_assert!(matches!(gro_equal(&s, &t, None), Err(MotivicError::IncomparableOrigins(..))));
        }
    }

    #[test]
    fn separating_graphs_specialize(f in germ(), m in 1u64..=10) {
        let Some(g) = resolve_or_skip(&f) else { return Ok(()) };
        let Some(s) = separate_or_skip(&g, m) else { return Ok(()) };
        let r = check_separating_specialization(&s, m, 2).unwrap();
        prop_assert_eq!(r.verdict(), Verdict::Pass, "{}", r);
        if !g.is_m_separating(m) {
            let r = check_separating_specialization(&g, m, 2).unwrap();
            prop_assert_eq!(r.verdict(), Verdict::NotApplicable);
        }
    }
}
