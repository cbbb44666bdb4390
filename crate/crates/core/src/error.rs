//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid datum: {0}")]
    InvalidDatum(String),

    #[error("incompatible group kinds or coordinate lengths")]
    IncompatibleKinds,

    #[error("{0} is not a root of this datum")]
    NotARoot(String),

    #[error("batch sizes must sum to {expected}, got {got}")]
    BatchMismatch { expected: usize, got: usize },

    #[error("character {0} is not dominant")]
    NotDominant(String),

    #[error(
        "orthogonal set fails the wall condition between cones {cone_a} and {cone_b}: {reason}"
    )]
    InvalidOrthogonalSet {
        cone_a: String,
        cone_b: String,
        reason: String,
    },

    #[error("support function is not convex; the section polytope formula needs a globally generated divisor")]
    NotConvex,

    #[error("characters of an orthogonal set must be integral, got {0}")]
    NonIntegralCharacter(String),

    #[error("unknown cone id `{0}` for this fan")]
    UnknownConeId(String),

    #[error("divisor file: {0}")]
    DivisorFile(String),
}
