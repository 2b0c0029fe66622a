//! Lobe summation for non-decaying oscillatory integrands on [lo, ∞).
//!
//! ∫ amplitude(u)·sin(phase(u)) du is split at the successive crossings
//! phase(u) = kπ; the lobe integrals alternate in sign, and Wynn's epsilon
//! algorithm extrapolates the alternating partial sums. Plain truncation
//! cannot converge here since the integrand does not decay.

use super::{accel::wynn_epsilon, gauss_kronrod::integrate_finite, QuadResult, QuadSpec};
use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Hybrid false-position/bisection root refinement on a bracket with
/// g(lo) < 0 < g(hi). Bisections are interleaved so the bracket provably
/// halves every other step.
pub(crate) fn refine_root<F: Fn(f64) -> f64>(
    g: &F,
    mut lo: f64,
    mut hi: f64,
    target_resid: f64,
) -> Result<f64> {
    let mut g_lo = g(lo);
    let mut g_hi = g(hi);
    if g_lo == 0.0 {
        return Ok(lo);
    }
    if g_hi == 0.0 {
        return Ok(hi);
    }
    if !(g_lo < 0.0 && g_hi > 0.0) {
        return Err(Error::BracketViolation(format!(
            "no sign change on [{lo}, {hi}]"
        )));
    }
    let mut best = 0.5 * (lo + hi);
    for iter in 0..200 {
        let mut cand = if iter % 2 == 0 {
            hi - g_hi * (hi - lo) / (g_hi - g_lo)
        } else {
            0.5 * (lo + hi)
        };
        if !(cand > lo && cand < hi) {
            cand = 0.5 * (lo + hi);
        }
        let g_cand = g(cand);
        if !g_cand.is_finite() {
            return Err(Error::NonFinite(cand));
        }
        best = cand;
        if g_cand.abs() <= target_resid {
            return Ok(cand);
        }
        if g_cand < 0.0 {
            lo = cand;
            g_lo = g_cand;
        } else {
            hi = cand;
            g_hi = g_cand;
        }
        if (hi - lo) <= 4.0 * f64::EPSILON * hi.abs().max(1.0) {
            return Ok(0.5 * (lo + hi));
        }
    }
    Ok(best)
}

/// Locates u* with phase(u*) = kπ inside a bracket, by the
/// bisection/secant hybrid. Requires phase(bracket_lo) < kπ <
/// phase(bracket_hi) and a continuous monotone phase on the bracket.
pub fn find_phase_crossing<P: Fn(f64) -> f64>(
    phase: P,
    k: i64,
    bracket_lo: f64,
    bracket_hi: f64,
) -> Result<f64> {
    let target = k as f64 * PI;
    let p_lo = phase(bracket_lo);
    let p_hi = phase(bracket_hi);
    if !(p_lo < target && target < p_hi) {
        return Err(Error::BracketViolation(format!(
            "phase({bracket_lo}) = {p_lo}, phase({bracket_hi}) = {p_hi} do not bracket {k}*pi"
        )));
    }
    let resid_tol = 1e-12 * target.abs().max(1.0);
    refine_root(&|u| phase(u) - target, bracket_lo, bracket_hi, resid_tol)
}

pub(crate) const DEFAULT_MAX_LOBES: usize = 200;

/// Integrates lobes delimited by `next_boundary` and extrapolates the
/// alternating partial sums. `next_boundary(j, prev)` yields the right end
/// of lobe `j`; `None` means the boundary supply is exhausted (finite zero
/// tables), in which case the best extrapolation is returned with an honest
/// error estimate.
pub(crate) fn accelerated_lobe_sum<F, B>(
    f: &F,
    mut next_boundary: B,
    first_lo: f64,
    max_lobes: usize,
    spec: &QuadSpec,
) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
    B: FnMut(usize, f64) -> Result<Option<f64>>,
{
    let lobe_spec = spec.tighter(50.0);
    let mut sums: Vec<f64> = Vec::new();
    let mut running = 0.0f64;
    let mut quad_err = 0.0f64;
    let mut evals: u64 = 0;
    let mut prev = first_lo;

    for j in 0..max_lobes {
        let Some(b) = next_boundary(j, prev)? else {
            break;
        };
        if !(b > prev) {
            return Err(Error::BracketViolation(format!(
                "degenerate lobe boundary {b} after {prev}"
            )));
        }
        let lobe = integrate_finite(f, prev, b, &lobe_spec)?;
        running += lobe.value;
        quad_err += lobe.error_estimate;
        evals += lobe.evals;
        sums.push(running);
        prev = b;

        // extrapolation order >= 6 needs a few lobes in the table first
        if sums.len() >= 8 {
            let est = wynn_epsilon(&sums);
            let total_err = est.error + quad_err;
            if total_err <= spec.tolerance_for(est.value) {
                return Ok(QuadResult {
                    value: est.value,
                    error_estimate: total_err,
                    evals,
                    converged: true,
                    note: None,
                });
            }
        }
    }

    if sums.is_empty() {
        return Err(Error::LobeExhaustion { lobes: 0 });
    }
    let est = wynn_epsilon(&sums);
    Ok(QuadResult::new(
        est.value,
        est.error + quad_err,
        evals,
        spec,
    ))
}

/// ∫_lo^∞ amplitude(u)·sin(phase(u)) du for a strictly increasing phase
/// with phase_deriv > 0 and phase → ∞, amplitude of bounded variation.
///
/// Lobes are delimited by bracketed root-finding on phase(u) − kπ and the
/// alternating partial-sum sequence is accelerated; the error estimate
/// comes from acceleration-table consistency plus the per-lobe quadrature
/// errors.
pub fn integrate_oscillatory_phase<A, P, D>(
    amplitude: A,
    phase: P,
    phase_deriv: D,
    lo: f64,
    spec: &QuadSpec,
) -> Result<QuadResult>
where
    A: Fn(f64) -> f64,
    P: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    spec.validate()?;
    if !lo.is_finite() {
        return Err(Error::domain(
            "integrate_oscillatory_phase: lower bound must be finite",
        ));
    }
    let phi0 = phase(lo);
    if !phi0.is_finite() {
        return Err(Error::domain(
            "integrate_oscillatory_phase: phase must be finite at the lower bound",
        ));
    }
    let k0 = (phi0 / PI).floor() as i64 + 1;

    let integrand = |u: f64| amplitude(u) * phase(u).sin();
    let boundary = |j: usize, prev: f64| -> Result<Option<f64>> {
        let k = k0 + j as i64;
        let target = k as f64 * PI;
        // march out a bracket, first guess from the local phase slope
        let slope = phase_deriv(prev);
        let mut h = if slope.is_finite() && slope > 1e-12 {
            ((target - phase(prev)) / slope).max(1e-9 * (1.0 + prev.abs()))
        } else {
            0.5 * (1.0 + prev.abs())
        };
        if !h.is_finite() || h <= 0.0 {
            h = 1.0;
        }
        let mut hi = prev + h;
        let mut iters = 0;
        while phase(hi) <= target {
            h *= 2.0;
            hi = prev + h;
            iters += 1;
            if iters > 200 || !hi.is_finite() {
                return Err(Error::BracketViolation(format!(
                    "failed to bracket phase crossing {k}*pi beyond u = {prev}"
                )));
            }
        }
        find_phase_crossing(&phase, k, prev, hi).map(Some)
    };

    accelerated_lobe_sum(&integrand, boundary, lo, DEFAULT_MAX_LOBES, spec)
}
