//! Exact computation with algebraic families of Lie algebras and groups
//! over the complex projective line.
//!
//! The library builds, from a complex matrix Lie algebra together with a
//! pair of commuting involutions, a family of Lie algebras over CP^1 whose
//! fixed fibers over RP^1 interpolate between two real forms, degenerating
//! to a semidirect product at the two poles. Everything algebraic is done
//! over Gaussian rationals; the group-level checks run in floating point
//! with documented tolerances.

pub mod catalog;
pub mod exactlin;
pub mod familyalg;
pub mod familygroup;
pub mod involutions;
pub mod liecore;
pub mod report;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
