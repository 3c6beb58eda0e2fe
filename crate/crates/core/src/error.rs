use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed rational `{0}`")]
    Rational(String),
    #[error("malformed monoid value `{0}`")]
    Value(String),
    #[error("malformed polynomial `{0}`")]
    Poly(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("value tag does not match the presentation")]
    TagMismatch,
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("{0} is not a member")]
    NotAMember(String),
    #[error("{0} admits no canonical decomposition")]
    NotDecomposable(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("search budget of {0} node expansions exhausted")]
    BudgetExhausted(u64),
    #[error("integer overflow while clearing denominators")]
    Overflow,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("field mismatch between operands")]
    FieldMismatch,
    #[error("element is not in R")]
    NotInR,
    #[error("zero element")]
    ZeroElement,
    #[error("mu values disagree: {left} vs {right}")]
    MuMismatch { left: String, right: String },
    #[error("empty candidate set")]
    EmptyCandidateSet,
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
