use thiserror::Error;

use crate::scalar::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` has no image under the homomorphism")]
    MissingImage(String),
    #[error("generator `{generator}` has no image under d")]
    NotClosedUnderD { generator: String },
    #[error("rule {lhs} -> {rhs_word} is not decreasing under the term order")]
    NotDecreasing { lhs: String, rhs_word: String },
    #[error("rule {lhs} is not grade-homogeneous: {detail}")]
    NotHomogeneous { lhs: String, detail: String },
    #[error("reduction step budget of {budget} exhausted while reducing {word}")]
    BudgetExceeded { budget: usize, word: String },
    #[error("pole in rule {rule}: {source}")]
    RulePole { rule: String, source: ScalarError },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("partial derivative undefined on words starting with `{0}`")]
    UnsupportedLeading(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invalid preset: {0}")]
    InvalidPreset(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
