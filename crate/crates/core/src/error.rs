//! Error type shared by all modules.

/// Errors surfaced by special functions, quadrature engines and identity
/// evaluators.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A precondition on an argument was violated. The message names the
    /// violated precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// Gamma evaluated at a pole (non-positive integer).
    #[error("gamma pole at non-positive integer x = {0}")]
    GammaPole(f64),

    /// Result (or a required intermediate) exceeds the binary64 range.
    #[error("overflow: {0}")]
    Overflow(String),

    /// A series did not converge within its term cap.
    #[error("series did not converge within {terms} terms")]
    SeriesNonConvergence { terms: usize },

    /// An integrand produced NaN at the given abscissa.
    #[error("integrand evaluated to a non-finite value near x = {0}")]
    NonFinite(f64),

    /// Successive tanh-sinh levels are not Cauchy: the integral diverges at
    /// an endpoint (singularity u^-1 or worse).
    #[error("divergent endpoint detected: successive refinement levels are not Cauchy")]
    DivergentEndpoint,

    /// A root bracket did not actually bracket the target.
    #[error("bracket violation: {0}")]
    BracketViolation(String),

    /// Oscillatory partial sums failed the Cauchy criterion within the lobe
    /// budget.
    #[error("lobe budget exhausted after {lobes} lobes without convergence")]
    LobeExhaustion { lobes: usize },

    /// The (alpha, a) pair is not covered by the special-case table.
    #[error("uncovered special case: alpha = {alpha}, a = {a}; use the master closed form")]
    UncoveredCase { alpha: f64, a: f64 },

    /// Two supposedly equivalent closed expressions disagree (transcription
    /// guard).
    #[error("closed-form cross-check failed: {0}")]
    ClosedFormMismatch(String),

    /// A sweep grid is empty or violates the target identity's preconditions.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
