//! Integral representations of Bessel functions, machine-verified.
//!
//! The crate pairs closed-form and integral identities for the Bessel
//! functions `J`, `I` and `K` with independent numerical evidence:
//!
//! - [`special`] — ground-truth scalar functions: gamma, beta, the
//!   (non-regularized) incomplete beta, and convergent power-series oracles
//!   for `J_alpha` and `I_alpha`;
//! - [`quad`] — the quadrature engine everything else consumes: adaptive
//!   Gauss-Kronrod on finite intervals, tanh-sinh for endpoint
//!   singularities, truncated integration of exponentially decaying tails,
//!   and lobe summation with sequence acceleration for non-decaying
//!   oscillatory integrands;
//! - [`reps`] — single-, reduction- and double-integral representations of
//!   `J_0`, `I_0`, `J_alpha`, `I_alpha`, certified against the series
//!   oracles;
//! - [`laplace`] — Laplace-transform identities `∫ e^{-at} J_alpha(bt)
//!   t^{-alpha} dt` in closed form (incomplete beta) and by quadrature;
//! - [`kbessel`] — modified Bessel `K`: half-order closed forms, the
//!   cosine (Basset) and exponential integral representations, the
//!   Gaussian-cosine kernel lemma, and the oscillatory
//!   `∫ sin(au² − b/u²) du` identity;
//! - [`verify`] — registered identities, parameter sweeps and pass/fail
//!   reports shared by the test suite and the CLI.
//!
//! # Example
//!
//! ```
//! use bessel_reps::{reps, special, Order, QuadSpec};
//!
//! let spec = QuadSpec::default();
//! let series = special::bessel_j_series(Order::new(0.0)?, 5.0)?;
//! let rep = reps::j0_rep(5.0, &spec)?;
//! let tol = 10.0 * (rep.error_estimate + series.truncation_bound);
//! assert!((rep.value - series.value).abs() <= tol);
//! # Ok::<(), bessel_reps::Error>(())
//! ```

#![forbid(unsafe_code)]
// `!(x > 0.0)`-style precondition checks reject NaN, which `x <= 0.0` would
// let through; quadrature node tables and Lanczos coefficients carry guard
// digits past f64.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::excessive_precision)]

pub mod error;
pub mod kbessel;
pub mod laplace;
pub mod quad;
pub mod reps;
pub mod special;
pub mod verify;

pub(crate) mod dd;

pub use error::{Error, Result};
pub use quad::{QuadResult, QuadSpec};
pub use special::{Order, SeriesResult};
