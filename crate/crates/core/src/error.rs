use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A value, coordinate, position or parameter lies outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    /// The order or table size exceeds what the exhaustive algorithms support.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("variable set must not be empty")]
    EmptySet,

    #[error("invalid partition: {0}")]
    Partition(String),

    #[error("coefficient {a} is not coprime to {k}")]
    CoprimeViolation { a: u64, k: u8 },

    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u8),

    #[error("format error at byte {offset}: {message}")]
    Format { offset: usize, message: String },

    #[error("length error: expected {expected} values, got {got}")]
    Length { expected: usize, got: usize },

    /// A parsed table entry that is not an element of E_k.
    #[error("domain error at byte {offset}: value {value} is not below {k}")]
    ValueOutOfRange { offset: usize, value: u64, k: u8 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
