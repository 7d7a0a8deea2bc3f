use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Resource exhaustion is its own variant so drivers can distinguish "gave up"
/// from "wrong".
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("root of unity of order {needed} is not in Q(zeta_{order})")]
    OrderIncompatible { needed: u32, order: u32 },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix does not have finite order {0}")]
    NotFiniteOrder(u32),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("group closure exceeded bound {0}")]
    BoundExceeded(usize),
    #[error("polynomial is not an eigenvector: {0}")]
    NotEigenvector(String),
    #[error("span is not stable under the group action in degree {0}")]
    NonStableSpan(u32),
    #[error("value is not integral: {0}")]
    NonIntegral(String),
    #[error("valuation of the zero polynomial")]
    ZeroPolynomial,
    #[error("ideal is the unit ideal")]
    UnitIdeal,
    #[error("not a symplectic reflection")]
    NotReflection,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("not an orbit closure: {0}")]
    NotOrbitClosure(String),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
