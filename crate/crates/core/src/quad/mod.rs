//! Numerical integration engines.
//!
//! Four entry points cover everything the identity checks need:
//!
//! - [`integrate_finite`] — adaptive Gauss-Kronrod (7-15 pair) on a finite
//!   interval;
//! - [`integrate_singular_unit`] — tanh-sinh (double exponential) on (0, 1),
//!   absorbing algebraic endpoint singularities milder than u⁻¹;
//! - [`integrate_semi_infinite_decay`] — truncated integration of an
//!   exponentially decaying integrand on [0, ∞), the tail bound folded into
//!   the error estimate;
//! - [`integrate_oscillatory_phase`] — lobe summation between successive
//!   phase crossings of kπ with Wynn-epsilon acceleration of the
//!   alternating partial sums, for non-decaying oscillatory integrands.
//!
//! All engines are deterministic: fixed nodes, fixed combination order.

mod accel;
mod gauss_kronrod;
mod oscillatory;
mod semi_infinite;
mod tanh_sinh;

pub use gauss_kronrod::integrate_finite;
pub use oscillatory::{find_phase_crossing, integrate_oscillatory_phase};
pub use semi_infinite::integrate_semi_infinite_decay;
pub use tanh_sinh::{integrate_singular, integrate_singular_unit};

pub(crate) use oscillatory::{accelerated_lobe_sum, refine_root};
pub(crate) use tanh_sinh::tanh_sinh_pair;

use crate::error::{Error, Result};

/// Quadrature request: tolerances and effort caps.
#[derive(Debug, Clone)]
pub struct QuadSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Bisection depth for the adaptive engine, refinement level cap for
    /// tanh-sinh.
    pub max_depth: u32,
    pub max_evals: u64,
}

impl Default for QuadSpec {
    fn default() -> Self {
        QuadSpec {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_depth: 30,
            max_evals: 10_000_000,
        }
    }
}

impl QuadSpec {
    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !(self.abs_tol > 0.0) {
            return Err(Error::domain("QuadSpec: tolerances must be positive"));
        }
        if self.max_depth < 1 {
            return Err(Error::domain("QuadSpec: max_depth must be at least 1"));
        }
        Ok(())
    }

    /// Tolerance actually targeted for a value of the given magnitude.
    #[inline]
    pub fn tolerance_for(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }

    /// Same budget with tolerances divided by `factor` (error-budget splits
    /// for inner integrals and per-lobe targets).
    pub(crate) fn tighter(&self, factor: f64) -> QuadSpec {
        QuadSpec {
            rel_tol: (self.rel_tol / factor).max(1e-15),
            abs_tol: (self.abs_tol / factor).max(1e-300),
            ..self.clone()
        }
    }
}

/// Why a result was produced in a non-default way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Note {
    /// Argument below the series switch: the value comes from the series
    /// oracle, not quadrature.
    SeriesFallback,
    /// Sampled tail decays slower than the supplied hint implies.
    HintInconsistent,
    /// Conditionally convergent tail: the estimate is enlarged.
    SlowTail,
}

/// Certified quadrature result.
///
/// `converged == true` implies `error_estimate <= max(abs_tol,
/// rel_tol·|value|)` for the spec the integral was run with.
#[derive(Debug, Clone)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evals: u64,
    pub converged: bool,
    pub note: Option<Note>,
}

impl QuadResult {
    pub(crate) fn new(value: f64, error_estimate: f64, evals: u64, spec: &QuadSpec) -> QuadResult {
        QuadResult {
            value,
            error_estimate,
            evals,
            converged: error_estimate <= spec.tolerance_for(value),
            note: None,
        }
    }

    pub(crate) fn with_note(mut self, note: Note) -> QuadResult {
        self.note = Some(note);
        self
    }

    /// Rescale value and error by a constant factor.
    pub(crate) fn scaled(mut self, factor: f64) -> QuadResult {
        self.value *= factor;
        self.error_estimate *= factor.abs();
        self
    }
}
