use thiserror::Error;

/// Errors raised by the engine. Planner infeasibility is not an error; see
/// [`crate::constructor::Infeasible`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input that does not have the expected shape (wrong table size, bad JSON, ...).
    #[error("malformed input: {0}")]
    Malformed(String),

    /// A documented precondition was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A configured resource cap would be exceeded.
    #[error("resource cap exceeded: {what} needs {needed}, cap is {cap}")]
    ResourceCap {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    /// An exact computation produced a value that cannot be right, such as a
    /// non-integral Burnside average.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    /// The requested value is only available as a certificate.
    #[error("not computable: {0}")]
    NotComputable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
