//! Error type shared by all modules.

use crate::algebra::Group;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix contains a non-finite entry")]
    InvalidMatrix,
    #[error("matrix carries no single-diagonal band tag")]
    NotSingleDiagonal,
    #[error("alphabet must be nonempty and drawn from a single group")]
    InvalidAlphabet,
    #[error("word contains letters outside the {0:?} alphabet")]
    WrongGroup(Group),
    #[error("the trivial representation l = 0 is excluded here")]
    TrivialRepresentation,
    #[error("representation parameter lambda must be nonzero and finite")]
    InvalidLambda,
    #[error("truncation too small: need 2·|word| < N (|word| = {word_len}, N = {trunc})")]
    TruncationTooSmall { word_len: usize, trunc: usize },
    #[error("word must be nonempty")]
    EmptyWord,
    #[error("factor decomposition needs a word of length >= 2")]
    NeedLengthTwo,
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("multiplier is singular at lambda = 0")]
    SingularAtZero,
    #[error("degenerate (identically zero) profile")]
    DegenerateProfile,
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
}
