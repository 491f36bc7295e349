//! Exact computation of volume sets, cross-product sets, subspace
//! decompositions, and incidence counts over F_q^d, with a harness that
//! certifies coverage of the full field by witness tuples and replays the
//! supporting inequality chains on concrete point sets.
//!
//! Everything is integer-exact: field elements are canonical indices,
//! set sizes and counts are enumerated, and comparisons against irrational
//! thresholds are decided by squaring.

pub mod budget;
pub mod cli;
pub mod error;
pub mod gf;
pub mod grassmann;
pub mod linalg;
pub mod par;
pub mod proofcheck;
pub mod sample;
pub mod sets;

pub use budget::{Budget, DEFAULT_BUDGET};
pub use error::{Error, Result};
pub use gf::{Elt, Field};
pub use linalg::{BilinearForm, Vector};
pub use sets::{PointSet, ScalarSet, VectorSet};
