use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("field tag mismatch: {0}")]
    FieldTag(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not closed under bracket: [B{i}, B{j}] leaves the span (residual {residual})")]
    NotClosed {
        i: usize,
        j: usize,
        residual: String,
    },

    #[error("involution axiom failed: {0}")]
    Involution(String),

    #[error("involutions do not commute (witness: basis element {0})")]
    NonCommuting(usize),

    #[error("semidirect check failed: {0}")]
    Semidirect(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("membership check failed: {0}")]
    Membership(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}
