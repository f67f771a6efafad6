use thiserror::Error;

/// All failures raised by the kernels.
///
/// Every variant maps to a stable category string (see [`Error::category`]) that the
/// command-line front end prints on standard error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("coefficient beyond truncation order: word length {len} > order {order}")]
    OutOfOrder { len: usize, order: usize },
    #[error("insufficient order: {0}")]
    InsufficientOrder(String),
    #[error("not in group: {0}")]
    NotInGroup(String),
    #[error("ring is not a Q-algebra: {0}")]
    NotQAlgebra(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator name clash: `{0}`")]
    NameClash(String),
    #[error("groups are not free: {0}")]
    NotFree(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Machine-readable category, stable across releases.
    pub fn category(&self) -> &'static str {
        match self {
            Error::RingMismatch(_) => "ring-mismatch",
            Error::NotInvertible(_) => "not-invertible",
            Error::Domain(_) => "domain",
            Error::ShapeMismatch(_) => "shape-mismatch",
            Error::OutOfOrder { .. } => "out-of-order",
            Error::InsufficientOrder(_) => "insufficient-order",
            Error::NotInGroup(_) => "not-in-group",
            Error::NotQAlgebra(_) => "not-q-algebra",
            Error::UnknownGenerator(_) => "unknown-generator",
            Error::NameClash(_) => "name-clash",
            Error::NotFree(_) => "not-free",
            Error::Malformed(_) => "malformed",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
