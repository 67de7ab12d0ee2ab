//! Exact symbolic cohomology of homogeneous vector bundles on the
//! Grassmannian of lines in P4.
//!
//! The crate decomposes formal bundle expressions (built from the structure
//! sheaf, the universal quotient bundle Q and the universal subbundle S)
//! into irreducible summands for the Levi GL(2) x GL(3), evaluates their
//! cohomology exactly through Bott's theorem, and layers verification
//! machinery on top: Euler-characteristic ledgers for the built-in exact
//! sequences, an L-regularity calculus with a rank-2 splitting-criterion
//! classifier, and a feasibility search over minimal monad shapes for
//! low-rank bundles without inner cohomology.
//!
//! All arithmetic is exact; every operation is a pure function over
//! immutable values.

pub mod bott;
pub mod bundle;
pub mod catalog;
pub mod error;
pub mod monad;
pub mod parser;
pub mod regularity;
pub mod schur;
pub mod sequences;
pub mod verify;

pub use bundle::{BundleExpr, IrreducibleWeight};
pub use parser::parse_bundle;
