use thiserror::Error;

/// Errors raised by the enumeration library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the operation's domain (zero denominator, r >= 1 for Engel, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A structural invariant of a value was violated.
    #[error("invariant violated: {0}")]
    Invariant(String),
    /// A configured generation limit or size cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// The index has no preimage under an injective-only scheme.
    #[error("{value} is not in the image of `{scheme}`")]
    NotInImage { scheme: String, value: String },
    #[error("unknown scheme `{0}`")]
    NotFound(String),
    #[error("cannot parse `{0}`")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn not_in_image(scheme: &str, value: impl ToString) -> Self {
        Error::NotInImage {
            scheme: scheme.to_string(),
            value: value.to_string(),
        }
    }
}
