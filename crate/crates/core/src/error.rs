use thiserror::Error;

use crate::diagram::{CrossingId, Strand};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: malformed token `{token}`")]
    MalformedToken { line: usize, token: String },

    #[error("diagram has no components")]
    EmptyDiagram,

    #[error("crossing {id} occurs {count} time(s), expected exactly 2")]
    CrossingOccurrence { id: CrossingId, count: usize },

    #[error("crossing {id} has two {strand} passages")]
    DuplicateStrand { id: CrossingId, strand: Strand },

    #[error("sign mismatch at crossing {0}")]
    SignMismatch(CrossingId),

    #[error("invalid JSON diagram: {0}")]
    Json(String),

    #[error("component index {index} out of range (diagram has {count} components)")]
    ComponentOutOfRange { index: usize, count: usize },

    #[error("component selection is empty")]
    EmptySelection,

    #[error("inconsistent base sequence: {0}")]
    InconsistentBase(String),

    #[error("{count} components exceeds the enumeration limit of {max}")]
    TooManyComponents { count: usize, max: usize },

    #[error("expected a single-component diagram, got {0} components")]
    NotAKnot(usize),

    #[error("diagram has no crossings")]
    NoCrossings,

    #[error("linking number needs two distinct components")]
    SameComponent,

    #[error("invalid o/u word: unexpected character `{0}`")]
    InvalidLetter(char),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("transposition index {index} out of range for a {size}x{size} matrix")]
    TranspositionOutOfRange { index: usize, size: usize },

    #[error("operation needs at least two components")]
    TooFewComponents,

    #[error("census is empty")]
    EmptyCensus,

    #[error("invalid generator parameters: {0}")]
    Generator(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
