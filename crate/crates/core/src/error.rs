use thiserror::Error;

/// Errors raised by the exact-arithmetic kernels and the certification layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field of order {0} exceeds the supported maximum of 65536")]
    FieldTooLarge(u64),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation undefined on the zero element")]
    ZeroElement,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("constant polynomial has no discriminant")]
    ConstantPolynomial,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("Wall form is degenerate (determinant 0)")]
    DegenerateWallForm,
    #[error("point budget exceeded: {points} points > budget {budget}")]
    BudgetExceeded { points: u64, budget: u64 },
    #[error("stabilizer chain verification failed after {0} attempts")]
    VerificationFailed(usize),
    #[error("no embedding: {0}")]
    NoEmbedding(String),
}

pub type Result<T> = std::result::Result<T, Error>;
