use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("covers induce a directed cycle")]
    Cycle,
    #[error("incomparable elements {0} and {1} share label {2}")]
    Label(usize, usize, u32),
    #[error("labeling is not a bijection onto 1..p")]
    ImproperLabeling,
    #[error("label images of the two posets intersect")]
    LabelClash,
    #[error("bad shape: {0}")]
    Shape(String),
    #[error("word has repeated letters")]
    DuplicateLetters,
    #[error("duplicate interpolation argument")]
    DuplicateArgument,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("assignment violates the partition conditions")]
    InvalidAssignment,
    #[error("enumeration budget exceeded ({0} candidates)")]
    BudgetExceeded(u64),
    #[error("input too large: {0}")]
    SizeLimit(String),
    #[error("malformed operator word: {0}")]
    MalformedWord(String),
    #[error("labeling is not natural")]
    NotNatural,
    #[error("|values| must be a permutation of 1..p")]
    InvalidSignedPermutation,
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
