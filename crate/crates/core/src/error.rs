use thiserror::Error;

use crate::reprings::RingTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("ambient variable sets differ ({left} vs {right} variables)")]
    AmbientMismatch { left: usize, right: usize },
    #[error("negative power of a non-unit")]
    NotAUnit,
    #[error("variable {variable} has a negative exponent but its image is not invertible")]
    NonInvertibleSubstitution { variable: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("coordinate {variable} of the evaluation point is zero")]
    ZeroCoordinate { variable: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("element is not a valid member of {0:?}")]
    InvalidElement(RingTag),
    #[error("ring mismatch: expected {expected:?}, found {found:?}")]
    Mismatch { expected: RingTag, found: RingTag },
    #[error("element is not invariant under the Weyl group action")]
    NotInvariant,
    #[error("no ring map from {from:?} to {to:?}")]
    UnsupportedMap { from: RingTag, to: RingTag },
    #[error("Weyl element of size {size} does not act on {ring:?}")]
    WeylMismatch { size: usize, ring: RingTag },
    #[error("internal: {0}")]
    Internal(String),
    #[error("basis decomposition failed: {0}")]
    DecompositionFailed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("step limit of {limit} S-pair reductions exceeded")]
    StepLimit { limit: u64 },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("polynomial is not in the bivariate polynomial ring")]
    NotPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("character has a negative coefficient")]
    NegativeCoefficient,
    #[error("character has a non-integral coefficient")]
    NonIntegralCoefficient,
    #[error("character is zero")]
    ZeroCharacter,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("identity check failed: {0}")]
    IdentityFailed(String),
    #[error("internal: {0}")]
    Internal(String),
}
