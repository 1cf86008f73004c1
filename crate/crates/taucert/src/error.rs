use thiserror::Error;

/// Crate-wide error type.
///
/// Variants map onto process exit codes and C ABI status codes: invalid
/// input is a usage error (2), a failed certification is a negative result
/// (1), and everything else is an internal computation error (3).
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input or a violated caller-facing precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A certification check came out negative.  The computation itself is
    /// sound; the certified property simply does not hold for the input.
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    /// Exact division encountered a nonzero remainder.
    #[error("exact division failed: {0}")]
    DivisionFailed(String),
    /// Numeric machinery failed: non-convergence, insufficient precision.
    #[error("computation failed: {0}")]
    Computation(String),
    /// Violated internal invariant; always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI and status code for the C ABI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CertificationFailed(_) => 1,
            Error::InvalidInput(_) => 2,
            Error::DivisionFailed(_) | Error::Computation(_) | Error::Internal(_) => 3,
        }
    }
}
