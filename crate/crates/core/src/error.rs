use thiserror::Error;

/// Errors raised by the core constructions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree {degree} is outside the range {low}..={high}")]
    DegreeOutOfRange { degree: i64, low: i64, high: i64 },

    #[error("face index {index} is out of range for a word of length {len}")]
    FaceOutOfRange { index: usize, len: usize },

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("letter {letter} is not in 1..={n}")]
    LetterOutOfRange { letter: u32, n: usize },

    #[error("letter {letter} already occurs in {word}")]
    LetterOccurs { letter: u32, word: String },

    #[error("filtration level {p} is outside 1..={n}")]
    LevelOutOfRange { p: usize, n: usize },

    #[error("group table fails the {axiom} axiom: {witness}")]
    GroupAxiom {
        axiom: &'static str,
        witness: String,
    },

    #[error("wreath elements have different degrees ({0} and {1})")]
    DegreeMismatch(usize, usize),

    #[error("enumeration of {required} elements exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("malformed document: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
