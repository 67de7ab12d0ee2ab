//! Property tests for the algebraic invariants of the combinatorics and
//! bundle layers.

use std::collections::BTreeMap;

use proptest::prelude::*;

use grasscoh::bott::{cohomology, euler_char, h};
use grasscoh::bundle::{BundleExpr, IrreducibleWeight};
use grasscoh::schur::{lr_tensor, weyl_dim, GenPartition};

fn gen_partition(len: usize, lo: i64, hi: i64) -> impl Strategy<Value = GenPartition> {
    prop::collection::vec(lo..=hi, len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        GenPartition::new(v).unwrap()
    })
}

fn weight() -> impl Strategy<Value = IrreducibleWeight> {
    (gen_partition(2, -2, 2), gen_partition(3, -2, 2)).prop_map(|(a, b)| {
        let ap = a.parts();
        let bp = b.parts();
        IrreducibleWeight::new([ap[0], ap[1]], [bp[0], bp[1], bp[2]]).unwrap()
    })
}

fn bundle() -> impl Strategy<Value = BundleExpr> {
    prop::collection::vec((weight(), 1u64..=2), 1..=3).prop_map(|parts| {
        parts
            .into_iter()
            .fold(BundleExpr::zero(), |acc, (w, m)| {
                acc + BundleExpr::with_multiplicity(w, m)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lr_is_symmetric(lam in gen_partition(3, -3, 3), mu in gen_partition(3, -3, 3)) {
        prop_assert_eq!(
            lr_tensor(&lam, &mu, 3).unwrap(),
            lr_tensor(&mu, &lam, 3).unwrap()
        );
    }

    /// At the matching rank the truncated expansion preserves dimension.
    #[test]
    fn lr_truncated_dimension_identity(lam in gen_partition(3, -3, 3), mu in gen_partition(3, -3, 3)) {
        let expansion = lr_tensor(&lam, &mu, 3).unwrap();
        prop_assert_eq!(expansion.total_dim(), weyl_dim(&lam) * weyl_dim(&mu));
    }

    /// Without truncation the identity holds at the enlarged rank.
    #[test]
    fn lr_untruncated_dimension_identity(lam in gen_partition(2, 0, 3), mu in gen_partition(2, 0, 3)) {
        let size: i64 = mu.parts().iter().sum();
        let big = 2 + size as usize;
        let expansion = lr_tensor(&lam, &mu, big).unwrap();
        let pad = |g: &GenPartition| {
            let mut v = g.parts().to_vec();
            v.resize(big, 0);
            GenPartition::new(v).unwrap()
        };
        prop_assert_eq!(expansion.total_dim(), weyl_dim(&pad(&lam)) * weyl_dim(&pad(&mu)));
    }

    #[test]
    fn lr_shift_equivariance(lam in gen_partition(3, -2, 2), mu in gen_partition(3, -2, 2), c in -2i64..=2) {
        let plain = lr_tensor(&lam, &mu, 3).unwrap();
        let shifted = lr_tensor(&lam.shifted(c), &mu, 3).unwrap();
        let expected: BTreeMap<_, _> = plain
            .terms
            .iter()
            .map(|(p, &m)| (p.shifted(c), m))
            .collect();
        prop_assert_eq!(shifted.terms, expected);
    }

    #[test]
    fn weyl_dim_of_dual(lam in gen_partition(5, -4, 4)) {
        prop_assert_eq!(weyl_dim(&lam), weyl_dim(&lam.dual()));
    }

    #[test]
    fn tensor_rank_is_multiplicative(x in bundle(), y in bundle()) {
        prop_assert_eq!(x.tensor(&y).rank(), x.rank() * y.rank());
    }

    #[test]
    fn tensor_is_commutative(x in bundle(), y in bundle()) {
        prop_assert_eq!(x.tensor(&y), y.tensor(&x));
    }

    #[test]
    fn tensor_is_associative(x in bundle(), y in bundle(), z in bundle()) {
        prop_assert_eq!(x.tensor(&y).tensor(&z), x.tensor(&y.tensor(&z)));
    }

    #[test]
    fn dual_is_an_involution(x in bundle()) {
        prop_assert_eq!(x.dual().dual(), x);
    }

    #[test]
    fn twist_composes_and_matches_tensor(x in bundle(), s in -3i64..=3, t in -3i64..=3) {
        prop_assert_eq!(x.twist(s).twist(t), x.twist(s + t));
        prop_assert_eq!(x.twist(1), x.tensor(&BundleExpr::line(1)));
    }

    #[test]
    fn chi_is_additive(x in bundle(), y in bundle(), t in -6i64..=6) {
        let sum = x.clone() + y.clone();
        prop_assert_eq!(euler_char(&sum, t), euler_char(&x, t) + euler_char(&y, t));
    }

    #[test]
    fn serre_duality(x in bundle(), t in -8i64..=8) {
        let dual = x.dual();
        for i in 0..=6u8 {
            prop_assert_eq!(h(&x, i, t), h(&dual, 6 - i, -t - 5));
        }
    }

    #[test]
    fn bott_puts_cohomology_in_one_degree(w in weight(), t in -8i64..=8) {
        let x = BundleExpr::irreducible(w);
        prop_assert!(cohomology(&x, t).len() <= 1);
    }
}
