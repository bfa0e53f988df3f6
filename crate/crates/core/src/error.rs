use thiserror::Error;

use crate::rootsys::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: {bound}")]
    InvalidRank {
        family: Family,
        rank: usize,
        bound: &'static str,
    },
    #[error("D2 is not simple; use A1xA1 instead")]
    D2NotSimple,
    #[error("a semisimple algebra needs at least one simple factor")]
    EmptyAlgebra,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch { left: String, right: String },
    #[error("{0} does not use the e-basis (only type A blocks do)")]
    UnsupportedBasis(String),
    #[error("character is not faithful")]
    NotFaithful,
    #[error("form is degenerate or not positive definite")]
    DegenerateForm,
    #[error("zero vector has no angle")]
    ZeroVector,
    #[error("factor index {index} out of range for {count} factors")]
    FactorIndex { index: usize, count: usize },
    #[error("highest weight is not integral")]
    NotIntegral,
    #[error("highest weight is not dominant")]
    NotDominant,
    #[error("character is not Weyl-invariant")]
    NotWeylInvariant,
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
