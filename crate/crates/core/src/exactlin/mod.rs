//! Exact linear algebra over Gaussian rationals.
//!
//! This is the substrate for everything algebraic in the crate: an exact
//! complex scalar type, dense exact matrices, row reduction over a generic
//! field, and tagged subspaces (complex spans, or real spans of complex
//! vectors via doubled coordinates).

mod linalg;
mod matrix;
mod scalar;
mod subspace;

pub use linalg::{kernel_basis, rref, solve, Scalar};
pub use matrix::{commutator, ExactMatrix};
pub use scalar::GaussianRational;
pub use subspace::{double_vector, undouble_vector, FieldTag, Subspace};

pub(crate) use subspace::doubled_operator_rows;
