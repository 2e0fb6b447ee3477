mod common;

use common::poly_at_origin;
use hijac_core::groebner::ideal_equal;
use hijac_core::jacobian::{
    expected_shape, generic_rank, jac_matrix, maximal_minors, maximal_minors_bareiss,
    verify_kernel_identity, MatrixVersion,
};
use hijac_core::nash::nash_ideal;
use hijac_core::poly::{binomial, rat, Polynomial};
use proptest::prelude::*;

const VERSIONS: [MatrixVersion; 3] = [
    MatrixVersion::ZeroDiagonal,
    MatrixVersion::FDiagonal,
    MatrixVersion::JacobiTaylor,
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn shape_and_rank(f in poly_at_origin(2, 4, 6), n in 1u32..=3) {
        prop_assume!(!f.is_zero());
        let m = jac_matrix(&f, n, MatrixVersion::ZeroDiagonal).unwrap();
        let rows = binomial(1 + u64::from(n), 2) as usize;
        let cols = binomial(2 + u64::from(n), 2) as usize - 1;
        prop_assert_eq!((m.nrows(), m.ncols()), (rows, cols));
        prop_assert_eq!(expected_shape(2, n, MatrixVersion::ZeroDiagonal), (rows, cols));
        prop_assert_eq!(generic_rank(&m), rows);
    }

    #[test]
    fn minors_agree_with_elimination(f in poly_at_origin(2, 4, 5), n in 1u32..=2) {
        for v in VERSIONS {
            let m = jac_matrix(&f, n, v).unwrap();
            prop_assert_eq!(maximal_minors(&m).unwrap(), maximal_minors_bareiss(&m).unwrap());
        }
    }

    #[test]
    fn matrix_is_linear_in_f(f in poly_at_origin(3, 3, 4), g in poly_at_origin(3, 3, 4), n in 1u32..=2) {
        let c = Polynomial::constant(3, rat(-3));
        for v in [MatrixVersion::ZeroDiagonal, MatrixVersion::FDiagonal] {
            let (a, b) = (jac_matrix(&f, n, v).unwrap(), jac_matrix(&g, n, v).unwrap());
            let s = jac_matrix(&(&f + &g), n, v).unwrap();
            let scaled = jac_matrix(&(&c * &f), n, v).unwrap();
            for i in 0..s.nrows() {
                for j in 0..s.ncols() {
                    prop_assert_eq!(s.entry(i, j), &(a.entry(i, j) + b.entry(i, j)));
                    prop_assert_eq!(scaled.entry(i, j), &(&c * a.entry(i, j)));
                }
            }
        }
    }

    #[test]
    fn kernel_identity(f in poly_at_origin(3, 3, 5), n in 1u32..=3) {
        prop_assert!(verify_kernel_identity(&f, n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn diagonal_versions_agree_modulo_f(f in poly_at_origin(2, 3, 4)) {
        prop_assume!(!f.is_zero());
        let a = nash_ideal(&f, 2, MatrixVersion::ZeroDiagonal).unwrap();
        let b = nash_ideal(&f, 2, MatrixVersion::FDiagonal).unwrap();
        prop_assert!(ideal_equal(&a, &b, hijac_core::groebner::MonomialOrder::LocalGraded));
    }
}
