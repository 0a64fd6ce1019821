use thiserror::Error;

use crate::morphism::MorphismViolation;
use crate::quiver::QuiverViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient mismatch: [{left}] vs [{right}]")]
    AmbientMismatch { left: String, right: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("division by zero")]
    DivideByZero,

    #[error("{dividend} is not divisible by {divisor} in the Laurent ring")]
    NotDivisible { dividend: String, divisor: String },

    #[error("variable `{0}` occurs with a negative exponent and was assigned 0")]
    ZeroToNegativePower(String),

    #[error("vertex {0} is frozen")]
    FrozenVertex(usize),

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("malformed quiver: {0}")]
    MalformedQuiver(String),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(QuiverViolation),

    #[error("graph-rule and matrix-rule mutation at vertex {vertex} disagree")]
    InconsistentMutation { vertex: usize },

    #[error("mutation #{position} (vertex {vertex}) failed: {source}")]
    MutationFailed {
        position: usize,
        vertex: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("invalid cluster morphism: {0}")]
    InvalidMorphism(MorphismViolation),

    #[error("morphism image is not a union of connected components: {0}")]
    NotAComponent(String),

    #[error("mutation sequence contains killed vertex {0}")]
    KilledVertexInSequence(usize),

    #[error("morphisms are not composable: {0}")]
    NotComposable(String),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("letter {letter} out of range 1..={rank}")]
    InvalidLetter { letter: usize, rank: usize },

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("prefix length {p} out of range 0..={len}")]
    PrefixOutOfRange { p: usize, len: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("exact division failed at vertex {vertex}: {detail}")]
    ExactDivisionFailed { vertex: usize, detail: String },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
