use core::cmp::Ordering;

use crate::poly::MultiIndex;

/// Monomial orders. `LocalGraded` is the degree-anticompatible order used for
/// computations in the localization at the origin: lower total degree is
/// larger, ties broken reverse-lexicographically. It is not a well-order, so
/// it requires Mora normal forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    GradedLex,
    GradedRevLex,
    Lex,
    LocalGraded,
}

impl MonomialOrder {
    /// `Greater` means `a` is the larger (more leading) monomial.
    pub fn cmp(self, a: &MultiIndex, b: &MultiIndex) -> Ordering {
        match self {
            MonomialOrder::GradedLex => a.cmp(b),
            MonomialOrder::GradedRevLex => {
                a.degree().cmp(&b.degree()).then_with(|| a.revlex_cmp(b))
            }
            MonomialOrder::Lex => a.entries().cmp(b.entries()),
            MonomialOrder::LocalGraded => b.degree().cmp(&a.degree()).then_with(|| a.revlex_cmp(b)),
        }
    }

    pub fn is_global(self) -> bool {
        self != MonomialOrder::LocalGraded
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    const ALL: [MonomialOrder; 4] = [
        MonomialOrder::GradedLex,
        MonomialOrder::GradedRevLex,
        MonomialOrder::Lex,
        MonomialOrder::LocalGraded,
    ];

    #[test]
    fn small_cases() {
        use MonomialOrder::*;
        assert_eq!(GradedLex.cmp(&mi(&[1, 0]), &mi(&[0, 1])), Ordering::Greater);
        assert_eq!(Lex.cmp(&mi(&[1, 0]), &mi(&[0, 5])), Ordering::Greater);
        // x1*x3 vs x2^2: grlex says x1*x3, grevlex says x2^2
        assert_eq!(
            GradedLex.cmp(&mi(&[1, 0, 1]), &mi(&[0, 2, 0])),
            Ordering::Greater
        );
        assert_eq!(
            GradedRevLex.cmp(&mi(&[1, 0, 1]), &mi(&[0, 2, 0])),
            Ordering::Less
        );
        assert_eq!(
            LocalGraded.cmp(&mi(&[0, 0]), &mi(&[0, 1])),
            Ordering::Greater
        );
        assert_eq!(
            LocalGraded.cmp(&mi(&[0, 2]), &mi(&[3, 0])),
            Ordering::Greater
        );
        assert!(!LocalGraded.is_global());
        assert!(Lex.is_global());
    }

    fn idx(d: usize) -> impl Strategy<Value = MultiIndex> {
        proptest::collection::vec(0u32..6, d).prop_map(MultiIndex::new)
    }

    proptest! {
        #[test]
        fn orders_are_total_and_multiplicative(
            (a, b, c) in (1usize..5).prop_flat_map(|d| (idx(d), idx(d), idx(d)))
        ) {
            for o in ALL {
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(o.cmp(&a.add(&c), &b.add(&c)), ab);
            }
        }

        #[test]
        fn orders_are_transitive(
            mut v in (1usize..4).prop_flat_map(|d| proptest::collection::vec(idx(d), 3..8))
        ) {
            for o in ALL {
                v.sort_by(|a, b| o.cmp(a, b));
                let sorted: Vec<_> = v.windows(2).map(|w| o.cmp(&w[0], &w[1])).collect();
                prop_assert!(sorted.iter().all(|c| *c != Ordering::Greater));
                for i in 0..v.len() {
                    for j in i..v.len() {
                        prop_assert!(o.cmp(&v[i], &v[j]) != Ordering::Greater);
                    }
                }
            }
        }
    }
}
