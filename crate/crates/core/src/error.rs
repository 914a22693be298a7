use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("even modulus {0}: 2 is not cancellable in Z/{0}")]
    EvenModulus(u64),
    #[error("ring `{0}` has no distinguished nilpotent generators")]
    NotANilpotentRing(String),
    #[error("invalid ring spec `{spec}`: {reason}")]
    InvalidRingSpec { spec: String, reason: String },
    #[error("variable {var} out of range for {context}")]
    IndexOutOfRange { var: String, context: String },
    #[error("{what} exceeds cap {cap} (got {got})")]
    CapExceeded { what: &'static str, cap: usize, got: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("elements belong to different rings: `{0}` vs `{1}`")]
    RingMismatch(String, String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0} is not invertible in {1}")]
    NotInvertible(String, String),
    #[error("unknown {what} `{name}`")]
    Unknown { what: &'static str, name: String },
    #[error("invalid matrix document: {0}")]
    Document(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
