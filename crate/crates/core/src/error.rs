use thiserror::Error;

/// Errors raised by ring construction, weight computation and code analysis.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring spec: {0}")]
    InvalidSpec(String),

    #[error("ring of cardinality {size} exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: usize },

    #[error("character is not additive at ({0}, {1})")]
    MalformedCharacter(usize, usize),

    #[error("canonical character of {0} is not generating")]
    NotGenerating(String),

    #[error("character sum is not rational (order {order}, remainder degree {degree})")]
    NotRational { order: u32, degree: usize },

    #[error("ring {0} is not local")]
    NotLocal(String),

    #[error("ring {0} is not a chain ring of length 2")]
    NotChainRingLength2(String),

    #[error("expected ring {expected}, got {actual}")]
    WrongRing { expected: String, actual: String },

    #[error("average value must be positive, got {0}")]
    InvalidGamma(String),

    #[error("weight table violates the homogeneity axioms")]
    AxiomViolation,

    #[error("bad element literal {literal:?}: {reason}")]
    BadLiteral { literal: String, reason: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("enumeration of {messages} messages exceeds the cap of {cap}")]
    EnumerationCap { messages: u128, cap: u128 },

    #[error("word is not a codeword")]
    NotACodeword,

    #[error("word does not have minimum Hamming weight")]
    NotMinimumHamming,

    #[error("no decomposition c_i = alpha * u_i exists for the word")]
    StructureViolation,
}

pub type Result<T> = std::result::Result<T, Error>;
