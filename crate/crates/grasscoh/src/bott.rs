//! The exact cohomology oracle.
//!
//! For an irreducible homogeneous bundle with concatenated GL(5) weight
//! alpha = (a1, a2, b1, b2, b3), Bott's theorem reads: set
//! delta = alpha + rho with rho = (4,3,2,1,0). If delta has a repeated
//! entry, all cohomology vanishes. Otherwise exactly one degree carries
//! cohomology: the number of inversions of delta, with dimension the Weyl
//! dimension of sort_desc(delta) - rho. Everything else here is additive
//! bookkeeping over irreducible summands; no state is shared or cached.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::bundle::{BundleExpr, IrreducibleWeight};
use crate::schur::{weyl_dim, GenPartition};

pub const RHO: [i64; 5] = [4, 3, 2, 1, 0];

/// Result of Bott's algorithm on one irreducible weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BottOutcome {
    Vanishes,
    NonZero {
        degree: u8,
        gl5_weight: GenPartition,
        dim: u64,
    },
}

pub fn bott_irreducible(w: &IrreducibleWeight) -> BottOutcome {
    let alpha = w.alpha();
    let mut delta = [0i64; 5];
    for i in 0..5 {
        delta[i] = alpha[i] + RHO[i];
    }
    let mut sorted = delta;
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return BottOutcome::Vanishes;
    }
    let mut inversions = 0u8;
    for i in 0..5 {
        for j in (i + 1)..5 {
            if delta[i] < delta[j] {
                inversions += 1;
            }
        }
    }
    debug_assert!(inversions <= 6, "Levi-dominant weight has at most 6 inversions");
    let weight = GenPartition::dominant(
        sorted
            .iter()
            .zip(RHO.iter())
            .map(|(s, r)| s - r)
            .collect(),
    );
    let dim = weyl_dim(&weight);
    BottOutcome::NonZero {
        degree: inversions,
        gl5_weight: weight,
        dim,
    }
}

/// All cohomology of x(t): degree -> dimension, zero entries omitted.
pub fn cohomology(x: &BundleExpr, t: i64) -> BTreeMap<u8, u64> {
    let mut out = BTreeMap::new();
    for (w, mult) in x.summands() {
        if let BottOutcome::NonZero { degree, dim, .. } = bott_irreducible(&w.twist(t)) {
            *out.entry(degree).or_insert(0) += mult * dim;
        }
    }
    out
}

/// h^i(x(t)).
pub fn h(x: &BundleExpr, degree: u8, t: i64) -> u64 {
    cohomology(x, t).get(&degree).copied().unwrap_or(0)
}

/// Euler characteristic of x(t).
pub fn euler_char(x: &BundleExpr, t: i64) -> i64 {
    cohomology(x, t)
        .iter()
        .map(|(&i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

/// Exact support of the requested intermediate-degree cohomology:
/// degree -> set of twists t with h^degree(x(t)) != 0.
///
/// Per irreducible summand the inversion count of delta is a non-increasing
/// step function of the twist, jumping only at the finitely many twists
/// where a quotient-side entry meets a sub-side entry. The scan covers the
/// prescribed safety window united with all jump points, and asserts degree
/// 6 at the left endpoint and degree 0 at the right, which pins the support
/// exactly.
pub fn nonzero_twists(x: &BundleExpr, degrees: &[u8]) -> BTreeMap<u8, BTreeSet<i64>> {
    assert!(
        degrees.iter().all(|&d| (1..=5).contains(&d)),
        "supports are finite only in degrees 1..5"
    );
    let mut out: BTreeMap<u8, BTreeSet<i64>> = degrees.iter().map(|&d| (d, BTreeSet::new())).collect();
    for (w, _) in x.summands() {
        for (degree, twist) in summand_inner_support(w) {
            if let Some(set) = out.get_mut(&degree) {
                set.insert(twist);
            }
        }
    }
    out
}

/// (degree, twist) pairs with degree in 1..5 for a single irreducible.
fn summand_inner_support(w: &IrreducibleWeight) -> Vec<(u8, i64)> {
    let alpha = w.alpha();
    let spread = alpha.iter().map(|e| e.abs()).max().unwrap() + 4;
    let mut lo = -(spread + 6);
    let mut hi = spread + 6;
    for i in 0..2 {
        for j in 2..5 {
            let jump = alpha[j] + RHO[j] - alpha[i] - RHO[i];
            lo = lo.min(jump - 1);
            hi = hi.max(jump + 1);
        }
    }
    let endpoint_degree = |c: i64| match bott_irreducible(&w.twist(c)) {
        BottOutcome::NonZero { degree, .. } => degree,
        BottOutcome::Vanishes => panic!("scan endpoint must be regular"),
    };
    assert_eq!(endpoint_degree(lo), 6, "left scan endpoint must sit in degree 6");
    assert_eq!(endpoint_degree(hi), 0, "right scan endpoint must sit in degree 0");
    let mut support = Vec::new();
    for c in lo..=hi {
        if let BottOutcome::NonZero { degree, .. } = bott_irreducible(&w.twist(c)) {
            if (1..=5).contains(&degree) {
                support.push((degree, c));
            }
        }
    }
    support
}

/// A computed table of h^i(x(t)) over a twist window, with entries sorted
/// by degree and then twist for byte-stable serialization.
#[derive(Debug, Clone, Serialize)]
pub struct CohomologyTable {
    pub bundle: String,
    pub entries: Vec<(u8, i64, u64)>,
    #[serde(skip)]
    pub window: (i64, i64),
}

impl CohomologyTable {
    pub fn compute(x: &BundleExpr, bundle: String, lo: i64, hi: i64) -> Self {
        let by_twist: Vec<(i64, BTreeMap<u8, u64>)> =
            (lo..=hi).map(|t| (t, cohomology(x, t))).collect();
        let mut entries = Vec::new();
        for degree in 0..=6u8 {
            for (t, table) in &by_twist {
                if let Some(&dim) = table.get(&degree) {
                    entries.push((degree, *t, dim));
                }
            }
        }
        CohomologyTable {
            bundle,
            entries,
            window: (lo, hi),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iw(a: [i64; 2], b: [i64; 3]) -> IrreducibleWeight {
        IrreducibleWeight::new(a, b).unwrap()
    }

    #[test]
    fn bott_on_quotient_bundle() {
        match bott_irreducible(&iw([1, 0], [0, 0, 0])) {
            BottOutcome::NonZero {
                degree,
                gl5_weight,
                dim,
            } => {
                assert_eq!(degree, 0);
                assert_eq!(gl5_weight.parts(), &[1, 0, 0, 0, 0]);
                assert_eq!(dim, 5);
            }
            BottOutcome::Vanishes => panic!("h^0(Q) = 5"),
        }
    }

    #[test]
    fn bott_on_sub_side_vanishes() {
        assert_eq!(bott_irreducible(&iw([0, 0], [1, 0, 0])), BottOutcome::Vanishes);
    }

    #[test]
    fn bott_inner_degree_one_cell() {
        // (Q (x) Sd)(-1)
        match bott_irreducible(&iw([0, -1], [1, 0, 0])) {
            BottOutcome::NonZero {
                degree,
                gl5_weight,
                dim,
            } => {
                assert_eq!(degree, 1);
                assert_eq!(gl5_weight.parts(), &[0, 0, 0, 0, 0]);
                assert_eq!(dim, 1);
            }
            BottOutcome::Vanishes => panic!("expected a degree-1 cell"),
        }
    }

    #[test]
    fn universal_sequence_forces_sections() {
        // h^0(Q) = 5 and h^0(S) = 5 pin the sub/quotient convention
        assert_eq!(h(&BundleExpr::q(), 0, 0), 5);
        assert_eq!(h(&BundleExpr::s(), 0, 0), 5);
        assert_eq!(cohomology(&BundleExpr::s_dual(), 0), BTreeMap::new());
    }

    #[test]
    fn cohomology_of_structure_sheaf() {
        let o = BundleExpr::line(0);
        assert_eq!(cohomology(&o, 0), BTreeMap::from([(0, 1)]));
        assert_eq!(cohomology(&o, -5), BTreeMap::from([(6, 1)]));
        for t in -4..=-1 {
            assert!(cohomology(&o, t).is_empty());
        }
    }

    #[test]
    fn s_tensor_q_top_cell() {
        let x = BundleExpr::s().tensor(&BundleExpr::q());
        assert_eq!(cohomology(&x, -5), BTreeMap::from([(5, 1)]));
    }

    #[test]
    fn universal_bundles_are_acm() {
        let all = [1, 2, 3, 4, 5];
        for x in [
            BundleExpr::line(0),
            BundleExpr::q(),
            BundleExpr::s(),
            BundleExpr::s_dual(),
        ] {
            let sup = nonzero_twists(&x, &all);
            assert!(sup.values().all(BTreeSet::is_empty), "{x} must be ACM");
        }
    }

    #[test]
    fn inner_supports_of_universal_tensors() {
        let q_sd = BundleExpr::q().tensor(&BundleExpr::s_dual());
        let sup = nonzero_twists(&q_sd, &[1]);
        assert_eq!(sup[&1], BTreeSet::from([-1]));
        assert_eq!(h(&q_sd, 1, -1), 1);

        let sd_sd = BundleExpr::s_dual().tensor(&BundleExpr::s_dual());
        let sup = nonzero_twists(&sd_sd, &[2]);
        assert_eq!(sup[&2], BTreeSet::from([-1]));
        assert_eq!(h(&sd_sd, 2, -1), 1);
    }

    #[test]
    fn s_tensor_s_carries_the_dual_inner_cell() {
        // S*S is the one product of universal bundles outside the
        // tensored-with-Q-or-Sd table with intermediate cohomology: its
        // symmetric square contributes h^4 = 1 at twist -4, the Serre dual
        // of the h^2 cell of Sd*Sd.
        let ss = BundleExpr::s().tensor(&BundleExpr::s());
        let sup = nonzero_twists(&ss, &[1, 2, 3, 4, 5]);
        assert_eq!(sup[&4], BTreeSet::from([-4]));
        assert_eq!(h(&ss, 4, -4), 1);
        assert!(sup[&1].is_empty() && sup[&2].is_empty());
        assert!(sup[&3].is_empty() && sup[&5].is_empty());
        let sd_sd = BundleExpr::s_dual().tensor(&BundleExpr::s_dual());
        assert_eq!(h(&sd_sd, 2, -1), h(&ss, 4, -4));
    }

    #[test]
    fn euler_characteristic_anchors() {
        assert_eq!(euler_char(&BundleExpr::line(1), 0), 10);
        assert_eq!(euler_char(&BundleExpr::s_dual(), 0), 0);
        assert_eq!(euler_char(&BundleExpr::line(0), -3), 0);
    }

    #[test]
    fn serre_duality_spot() {
        let x = BundleExpr::q().tensor(&BundleExpr::s()).twist(-2);
        let xd = x.dual();
        for t in -9..=9 {
            for i in 0..=6u8 {
                assert_eq!(h(&x, i, t), h(&xd, 6 - i, -t - 5));
            }
        }
    }

    #[test]
    fn table_entries_are_ordered() {
        let x = BundleExpr::q().tensor(&BundleExpr::s_dual());
        let table = CohomologyTable::compute(&x, "Q*Sd".into(), -3, 1);
        assert_eq!(table.entries, vec![(0, 1, 45), (1, -1, 1)]);
        assert_eq!(
            table.to_json(),
            r#"{"bundle":"Q*Sd","entries":[[0,1,45],[1,-1,1]]}"#
        );
    }
}
