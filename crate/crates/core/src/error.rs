//! Error and diagnostic types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by model construction and analysis.
#[derive(Debug, Error)]
pub enum Error {
    /// Input contained non-finite entries or mismatched dimensions.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A model failed structural validation.
    #[error("model validation failed: {}", format_diagnostics(.0))]
    Validation(Vec<Diagnostic>),

    /// Structural requirement violated (reducibility, missing block pattern).
    #[error("structural error: {0}")]
    Structural(String),

    /// A linear solve or iteration failed numerically.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// The requested quantity is not defined for this configuration.
    #[error("unsupported case: {0}")]
    Unsupported(String),

    /// A documented precondition does not hold for the given arguments.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Inter-event variance is zero; autocorrelations are undefined.
    #[error("degenerate inter-event variance: M2 = M1^2")]
    DegenerateVariance,

    /// Queue workload at or above one; no stationary distribution exists.
    #[error("unstable queue: utilization {rho} >= 1")]
    Unstable {
        /// Offered workload λ*/μ.
        rho: f64,
    },
}

/// One violated invariant found by model validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    /// Which invariant class was violated.
    pub kind: DiagnosticKind,
    /// Human-readable description with the offending location/value.
    pub message: String,
}

impl Diagnostic {
    pub fn new(kind: DiagnosticKind, message: impl Into<String>) -> Self {
        Self {
            kind,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

/// Classification of validation findings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    /// Entries were NaN or infinite.
    NonFinite,
    /// Matrix or vector dimensions disagree.
    DimensionMismatch,
    /// D contains a negative rate.
    NegativeEventRate,
    /// C has a negative off-diagonal or non-negative diagonal entry.
    InvalidHiddenRate,
    /// A row of Q = C + D does not sum to zero.
    RowSumNonZero,
    /// Q is reducible.
    Reducible,
    /// The initial distribution is not a probability vector.
    InvalidInitial,
}

fn format_diagnostics(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(|d| d.message.as_str())
        .collect::<Vec<_>>()
        .join("; ")
}
