use thiserror::Error;

/// Errors surfaced by the fallible parts of the crate: float-domain
/// violations, quadrature trouble, and fixture parsing.
#[derive(Debug, Error)]
pub enum Error {
    /// An evaluation point lies outside the domain of the requested formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// Series reciprocation needs a nonzero constant term.
    #[error("reciprocal of a power series with zero constant term")]
    ZeroConstantTerm,

    /// Adaptive quadrature hit its subdivision budget before the error
    /// estimate dropped below tolerance.
    #[error("quadrature did not converge within {subdivisions} subdivisions (error estimate {estimate:.3e})")]
    QuadratureNonConvergence { subdivisions: usize, estimate: f64 },

    /// A truncated integration window leaves a tail larger than the
    /// requested tolerance allows.
    #[error("window truncation bound {bound:.3e} exceeds tolerance {tol:.3e}")]
    Truncation { bound: f64, tol: f64 },

    /// An invalid quadrature configuration (bad tolerances or window).
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A fixture file failed to parse; `line` is 1-based.
    #[error("fixture line {line}: {msg}")]
    Fixture { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
