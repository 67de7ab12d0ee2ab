//! Shared error types for the symbolic layers.

use thiserror::Error;

/// Invalid input to the partition combinatorics layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchurError {
    #[error("parts must be non-increasing: {0:?}")]
    NotMonotone(Vec<i64>),
    #[error("weight {parts:?} has length {len}, above the bound {max_len}")]
    LengthExceedsMax {
        parts: Vec<i64>,
        len: usize,
        max_len: usize,
    },
    #[error("cannot zero-pad {parts:?} to length {max_len}: trailing part is negative")]
    NegativePadding { parts: Vec<i64>, max_len: usize },
}

/// A symmetric or exterior power the engine does not support.
///
/// The plethysm catalog is deliberately partial: sums of twists of O, Q, S
/// and Sd are fully covered, as are Sym^j Q and the j = 2 powers of the
/// universal bundles. Anything else fails loudly instead of returning a
/// wrong answer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unsupported plethysm Sym^{degree} of {weight}")]
    UnsupportedSym { weight: String, degree: u64 },
    #[error("unsupported plethysm Wedge^{degree} of {weight}")]
    UnsupportedWedge { weight: String, degree: u64 },
}

/// Syntax or evaluation failure while reading a bundle expression.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}
