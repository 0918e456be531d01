//! Error type shared by the whole crate.
//!
//! Failures of *identities* are not errors: checkers report them as data (see
//! [`crate::report`]). Errors are reserved for structurally impossible
//! requests (mismatched objects, non-idempotent splitting input, singular
//! antipode, invalid instance data).

use thiserror::Error;

use crate::report::Witness;

#[derive(Debug, Clone, Error)]
pub enum CoreError {
    #[error("object mismatch in {context}: {left} vs {right}")]
    ObjectMismatch {
        context: String,
        left: String,
        right: String,
    },

    #[error("matrix shape mismatch in {context}: expected {expected}, got {got}")]
    ShapeMismatch {
        context: String,
        expected: String,
        got: String,
    },

    #[error("operands live over different fields")]
    FieldMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("{candidate} is not prime")]
    NotPrime { candidate: u64 },

    #[error("cannot parse {input:?} as a scalar of {field}")]
    ScalarParse { input: String, field: String },

    #[error("morphism is not idempotent: entry ({row},{col}) of the square is {square} but {original} was expected")]
    NotIdempotent {
        row: usize,
        col: usize,
        square: String,
        original: String,
    },

    #[error("matrix is singular (rank {rank} of {dim})")]
    Singular { rank: usize, dim: usize },

    #[error("antipode is singular (rank {rank} of {dim}); the Yetter-Drinfeld machinery needs an invertible antipode")]
    SingularAntipode { rank: usize, dim: usize },

    #[error("operator violates the interchange identity at entry ({row},{col}): {lhs} vs {rhs}")]
    Eq12Violation {
        row: usize,
        col: usize,
        lhs: String,
        rhs: String,
    },

    #[error("weak Yang-Baxter axiom {identity} fails")]
    WybAxiomViolation { identity: String },

    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),

    #[error("not an exact factorization: {0}")]
    NotExactFactorization(String),

    #[error("not a separable Frobenius algebra: {0}")]
    NotSeparableFrobenius(String),

    #[error("the two canonical tensor-product idempotents differ at entry ({row},{col}): {lhs} vs {rhs}")]
    NablaDeltaMismatch {
        row: usize,
        col: usize,
        lhs: String,
        rhs: String,
    },

    #[error("Yetter-Drinfeld condition {identity} fails on a constructed module")]
    YdViolation {
        identity: String,
        witness: Option<Witness>,
    },

    #[error("map is not a Yetter-Drinfeld morphism: {identity} fails")]
    NotYdMorphism { identity: String },

    #[error("not a morphism of projections: {0}")]
    NotProjectionMorphism(String),

    #[error("invalid projection: {what}")]
    ProjectionInvalid {
        what: String,
        witness: Option<Witness>,
    },

    #[error("adjoint idempotent disagrees with its closed form: {what}")]
    ClosedFormMismatch {
        what: String,
        witness: Option<Witness>,
    },

    #[error("base is not symmetric: its operator is not the flip")]
    NotSymmetricBase,

    #[error("structural predicate not satisfied: {0}")]
    PredicateNotSatisfied(String),
}

impl CoreError {
    /// The first differing entry carried by the error, when there is one.
    pub fn witness(&self) -> Option<Witness> {
        match self {
            CoreError::NotIdempotent {
                row,
                col,
                square,
                original,
            } => Some(Witness {
                row: *row,
                col: *col,
                lhs: square.clone(),
                rhs: original.clone(),
            }),
            CoreError::Eq12Violation { row, col, lhs, rhs }
            | CoreError::NablaDeltaMismatch { row, col, lhs, rhs } => Some(Witness {
                row: *row,
                col: *col,
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            }),
            CoreError::YdViolation { witness, .. }
            | CoreError::ProjectionInvalid { witness, .. }
            | CoreError::ClosedFormMismatch { witness, .. } => witness.clone(),
            _ => None,
        }
    }
}
