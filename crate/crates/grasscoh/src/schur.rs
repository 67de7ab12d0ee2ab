//! Partition combinatorics for GL(n): generalized partitions, the
//! Littlewood-Richardson rule with length truncation, and the Weyl
//! dimension formula.
//!
//! Everything here is exact integer arithmetic. Littlewood-Richardson
//! coefficients are computed by direct enumeration of LR skew tableaux,
//! which is simple and more than fast enough at the partition sizes this
//! crate meets (parts bounded by ~15 in practice).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::SchurError;

/// A weakly decreasing tuple of integers: the highest weight of an
/// irreducible representation of GL(n), where n is the tuple length.
///
/// Entries may be negative; adding a constant to every entry corresponds to
/// tensoring with a power of the determinant character.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenPartition(Vec<i64>);

impl GenPartition {
    pub fn new(parts: Vec<i64>) -> Result<Self, SchurError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SchurError::NotMonotone(parts));
        }
        Ok(GenPartition(parts))
    }

    /// Constructor for weights already known to be non-increasing.
    pub(crate) fn dominant(parts: Vec<i64>) -> Self {
        Self::new(parts).expect("weight must be non-increasing")
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Adds `c` to every part (tensoring with det^c).
    pub fn shifted(&self, c: i64) -> Self {
        GenPartition(self.0.iter().map(|&p| p + c).collect())
    }

    /// Highest weight of the dual representation: reverse and negate.
    pub fn dual(&self) -> Self {
        GenPartition(self.0.iter().rev().map(|&p| -p).collect())
    }
}

impl fmt::Debug for GenPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for GenPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Exact dimension of the irreducible GL(n) representation with highest
/// weight `lam`:
///
/// dim = prod over i < j of (lam_i - lam_j + j - i) / (j - i).
///
/// The quotient is an integer; the product is accumulated in i128 and falls
/// back to big integers if a caller feeds weights large enough to overflow.
pub fn weyl_dim(lam: &GenPartition) -> u64 {
    match weyl_dim_i128(lam) {
        Some(d) => d,
        None => weyl_dim_big(lam),
    }
}

fn weyl_dim_i128(lam: &GenPartition) -> Option<u64> {
    let p = lam.parts();
    let n = p.len();
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..n {
        for j in (i + 1)..n {
            let f = (p[i] - p[j] + (j - i) as i64) as i128;
            num = num.checked_mul(f)?;
            den = den.checked_mul((j - i) as i128)?;
        }
    }
    debug_assert_eq!(num % den, 0);
    u64::try_from(num / den).ok()
}

fn weyl_dim_big(lam: &GenPartition) -> u64 {
    let p = lam.parts();
    let n = p.len();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..n {
        for j in (i + 1)..n {
            num *= BigInt::from(p[i] - p[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    (num / den).to_u64().expect("dimension exceeds u64")
}

/// Multiplicity map of a tensor product decomposition into irreducibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LRExpansion {
    pub terms: BTreeMap<GenPartition, u64>,
}

impl LRExpansion {
    /// Sum of mult * weyl_dim over all terms.
    pub fn total_dim(&self) -> u64 {
        self.terms.iter().map(|(p, m)| m * weyl_dim(p)).sum()
    }
}

/// Decomposes the tensor product of two GL(max_len) weights.
///
/// Inputs of length below `max_len` are zero-padded (only legal when their
/// entries are non-negative). Negative entries are handled by shifting both
/// inputs to non-negative, running the classical rule, and shifting the
/// result back. Output weights always have length `max_len`; classical terms
/// with more than `max_len` rows vanish for GL(max_len) and are dropped.
pub fn lr_tensor(
    lam: &GenPartition,
    mu: &GenPartition,
    max_len: usize,
) -> Result<LRExpansion, SchurError> {
    for g in [lam, mu] {
        if g.len() > max_len {
            return Err(SchurError::LengthExceedsMax {
                parts: g.parts().to_vec(),
                len: g.len(),
                max_len,
            });
        }
        if g.len() < max_len && g.parts().last().is_some_and(|&p| p < 0) {
            return Err(SchurError::NegativePadding {
                parts: g.parts().to_vec(),
                max_len,
            });
        }
    }
    let pad_shift = |g: &GenPartition| -> (Vec<usize>, i64) {
        let mut v = g.parts().to_vec();
        v.resize(max_len, 0);
        let c = -v.iter().min().copied().unwrap_or(0).min(0);
        (v.into_iter().map(|p| (p + c) as usize).collect(), c)
    };
    let (lp, c1) = pad_shift(lam);
    let (mp, c2) = pad_shift(mu);
    let raw = lr_expand_classical(&lp, &mp);
    let back = c1 + c2;
    let mut terms = BTreeMap::new();
    for (nu, mult) in raw {
        if nu.len() > max_len {
            continue;
        }
        let mut v: Vec<i64> = nu.iter().map(|&x| x as i64 - back).collect();
        v.resize(max_len, -back);
        terms.insert(GenPartition::dominant(v), mult);
    }
    Ok(LRExpansion { terms })
}

/// Classical LR expansion for honest partitions (non-negative entries).
/// Returns nu -> c^nu_{lam,mu} with trailing zeros trimmed from nu.
fn lr_expand_classical(lam: &[usize], mu: &[usize]) -> BTreeMap<Vec<usize>, u64> {
    let mut mu = mu.to_vec();
    while mu.last() == Some(&0) {
        mu.pop();
    }
    let rows = lam.len() + mu.len();
    let mut shape = lam.to_vec();
    shape.resize(rows, 0);
    let mut dfs = LrDfs {
        mu: &mu,
        rows,
        out: BTreeMap::new(),
    };
    dfs.place_label(0, &mut shape, None);
    dfs.out
}

/// DFS that adds the boxes of one label at a time as a horizontal strip,
/// enforcing the lattice-word condition via per-row prefix counts: for label
/// k >= 1, the number of k's in rows 0..=r may not exceed the number of
/// (k-1)'s in rows 0..=r-1.
struct LrDfs<'a> {
    mu: &'a [usize],
    rows: usize,
    out: BTreeMap<Vec<usize>, u64>,
}

impl LrDfs<'_> {
    fn place_label(&mut self, k: usize, shape: &mut Vec<usize>, prev_prefix: Option<&[usize]>) {
        if k == self.mu.len() {
            let mut nu = shape.clone();
            while nu.last() == Some(&0) {
                nu.pop();
            }
            *self.out.entry(nu).or_insert(0) += 1;
            return;
        }
        let before = shape.clone();
        let mut prefix = vec![0usize; self.rows];
        self.place_rows(k, 0, self.mu[k], &before, shape, prev_prefix, &mut prefix, 0);
    }

    #[allow(clippy::too_many_arguments)]
    fn place_rows(
        &mut self,
        k: usize,
        r: usize,
        remaining: usize,
        before: &[usize],
        shape: &mut Vec<usize>,
        prev_prefix: Option<&[usize]>,
        prefix: &mut Vec<usize>,
        cum: usize,
    ) {
        if r == self.rows {
            if remaining == 0 {
                let snapshot = prefix.clone();
                self.place_label(k + 1, shape, Some(&snapshot));
            }
            return;
        }
        let cap_strip = if r == 0 {
            remaining
        } else {
            before[r - 1] - before[r]
        };
        let cap_ballot = match prev_prefix {
            None => remaining,
            Some(pp) => {
                let bound = if r == 0 { 0 } else { pp[r - 1] };
                bound.saturating_sub(cum)
            }
        };
        let c_max = remaining.min(cap_strip).min(cap_ballot);
        for c in 0..=c_max {
            shape[r] = before[r] + c;
            prefix[r] = cum + c;
            self.place_rows(
                k,
                r + 1,
                remaining - c,
                before,
                shape,
                prev_prefix,
                prefix,
                cum + c,
            );
        }
        shape[r] = before[r];
        prefix[r] = 0;
    }
}
