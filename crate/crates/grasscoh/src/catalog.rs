//! The test catalog: every irreducible weight with entries in [-3, 3]
//! (deduplicated in canonical form) plus all sums of up to three line
//! bundles with twists in [-4, 4]. Property sweeps quantify over this set.

use std::collections::BTreeSet;

use crate::bundle::{BundleExpr, IrreducibleWeight};

pub fn irreducible_catalog() -> Vec<BundleExpr> {
    let mut set = BTreeSet::new();
    for a0 in -3..=3 {
        for a1 in -3..=a0 {
            for b0 in -3..=3i64 {
                for b1 in -3..=b0 {
                    for b2 in -3..=b1 {
                        set.insert(IrreducibleWeight::new([a0, a1], [b0, b1, b2]).unwrap());
                    }
                }
            }
        }
    }
    set.into_iter().map(BundleExpr::irreducible).collect()
}

pub fn line_bundle_sums() -> Vec<BundleExpr> {
    let mut out = Vec::new();
    for t1 in -4..=4i64 {
        out.push(BundleExpr::line(t1));
        for t2 in t1..=4 {
            out.push(BundleExpr::line(t1) + BundleExpr::line(t2));
            for t3 in t2..=4 {
                out.push(BundleExpr::line(t1) + BundleExpr::line(t2) + BundleExpr::line(t3));
            }
        }
    }
    out
}

pub fn full_catalog() -> Vec<BundleExpr> {
    let mut out = irreducible_catalog();
    out.extend(line_bundle_sums());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        assert_eq!(line_bundle_sums().len(), 9 + 45 + 165);
        let irr = irreducible_catalog();
        assert!(irr.len() > 1000, "got {}", irr.len());
        // canonical dedup keeps every member distinct
        let set: BTreeSet<_> = irr.iter().map(|x| format!("{x:?}")).collect();
        assert_eq!(set.len(), irr.len());
    }

    #[test]
    fn catalog_contains_generators() {
        let irr = irreducible_catalog();
        for g in [BundleExpr::q(), BundleExpr::s(), BundleExpr::s_dual()] {
            assert!(irr.contains(&g));
        }
    }
}
