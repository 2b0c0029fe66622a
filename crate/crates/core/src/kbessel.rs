//! Modified Bessel K: half-order closed forms, the cosine (Basset) and
//! exponential integral representations, the Gaussian-cosine kernel lemma,
//! and the oscillatory sin(au² − b/u²) identity.

use crate::error::{Error, Result};
use crate::quad::{self, QuadResult, QuadSpec};
use crate::special::{self, Order};
use std::f64::consts::PI;

/// Parameters of a K evaluation.
#[derive(Debug, Clone, Copy)]
pub struct KParams {
    pub alpha: Order,
    pub z: f64,
}

impl KParams {
    pub fn new(alpha: Order, z: f64) -> Result<Self> {
        if !(z > 0.0) || !z.is_finite() {
            return Err(Error::domain("k-bessel: argument z must be positive"));
        }
        Ok(KParams { alpha, z })
    }
}

/// Parameters of the oscillatory sin(au² − b/u²) identity.
#[derive(Debug, Clone, Copy)]
pub struct HardyParams {
    pub a: f64,
    pub b: f64,
}

impl HardyParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() || !(b > 0.0) || !b.is_finite() {
            return Err(Error::domain("hardy: both parameters must be positive"));
        }
        Ok(HardyParams { a, b })
    }
}

fn require_positive(x: f64, what: &str) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("{what} must be positive")));
    }
    Ok(())
}

/// K_{1/2}(x) = √(π/(2x))·e^{−x}.
pub fn k_half_closed(x: f64) -> Result<f64> {
    require_positive(x, "k_half_closed: x")?;
    Ok((PI / (2.0 * x)).sqrt() * (-x).exp())
}

/// I_{1/2}(x) = √(2/(πx))·sinh x.
pub fn i_half_closed(x: f64) -> Result<f64> {
    require_positive(x, "i_half_closed: x")?;
    Ok((2.0 / (PI * x)).sqrt() * x.sinh())
}

/// I_{−1/2}(x) = √(2/(πx))·cosh x.
pub fn i_neg_half_closed(x: f64) -> Result<f64> {
    require_positive(x, "i_neg_half_closed: x")?;
    Ok((2.0 / (PI * x)).sqrt() * x.cosh())
}

/// K_α(z) by the rewritten Basset formula
/// (Γ(α+1/2)·2^α)/(z^α·Γ(1/2)) · ∫₀^∞ cos(zu)/(u²+1)^{α+1/2} du.
///
/// The integrand decays like u^{−2α−1}: for α > 1/2 it is truncated with
/// the algebraic tail bound in the error estimate; for α ≤ 1/2 the decay is
/// too slow, so the lobes between consecutive zeros of cos(zu) are summed
/// and accelerated.
pub fn k_alpha_basset(alpha: Order, z: f64, spec: &QuadSpec) -> Result<QuadResult> {
    let p = KParams::new(alpha, z)?;
    let al = p.alpha.value();
    if !(al >= 0.0) {
        return Err(Error::domain("k_alpha_basset: alpha must be non-negative"));
    }
    spec.validate()?;

    let pref = (special::log_gamma(al + 0.5)? + al * std::f64::consts::LN_2
        - al * z.ln()
        - special::log_gamma(0.5)?)
    .exp();
    let power = al + 0.5;
    let f = move |u: f64| (z * u).cos() * (-power * (u * u + 1.0).ln()).exp();

    let raw = if al > 0.5 {
        // ∫_T^∞ u^{-2α-1} du = T^{-2α}/(2α)
        let tau = spec.abs_tol.max(1e-13);
        let t_cut = (2.0 * al * tau).powf(-1.0 / (2.0 * al)).min(6.0e4 / z).max(10.0);
        let finite = quad::integrate_finite(f, 0.0, t_cut, spec)?;
        let tail = t_cut.powf(-2.0 * al) / (2.0 * al);
        QuadResult::new(finite.value, finite.error_estimate + tail, finite.evals, spec)
    } else {
        // zeros of cos(zu) at u = (k + 1/2)π/z
        let bounds = |j: usize, _prev: f64| Ok(Some((j as f64 + 0.5) * PI / z));
        let mut r = quad::accelerated_lobe_sum(&f, bounds, 0.0, 200, spec)?;
        r.note = Some(quad::Note::SlowTail);
        r
    };
    Ok(raw.scaled(pref))
}

/// K_α(z) by the exponential representation
/// z^{−α} ∫₀^∞ (2t)^{α−1} e^{−(t + z²/(4t))} dt.
///
/// The integrand vanishes to all orders at t → 0 (essential decay), peaks
/// near t = z/2 and decays like e^{−t}: tanh-sinh covers [0, A] and a
/// decay-truncated pass covers [A, ∞).
pub fn k_alpha_exp(alpha: Order, z: f64, spec: &QuadSpec) -> Result<QuadResult> {
    let p = KParams::new(alpha, z)?;
    let al = p.alpha.value();
    if al.abs() > 10.0 {
        return Err(Error::domain("k_alpha_exp: |alpha| capped at 10"));
    }
    spec.validate()?;

    // log-domain evaluation: (2t)^{α-1} may overflow on its own for
    // negative α while the exponential factor kills the product
    let f = move |t: f64| {
        if t <= 0.0 {
            return 0.0;
        }
        ((al - 1.0) * (2.0 * t).ln() - t - z * z / (4.0 * t)).exp()
    };

    let split = z.max(1.0);
    let left = quad::integrate_singular(f, 0.0, split, spec)?;
    // beyond the split the exponent slope is at least 1 − z²/(4·split²) ≥ 3/4
    let right = quad::integrate_semi_infinite_decay(|s| f(split + s), 0.75, spec)?;

    let scale = (-al * z.ln()).exp();
    let value = scale * (left.value + right.value);
    let err = scale * (left.error_estimate + right.error_estimate);
    Ok(QuadResult::new(value, err, left.evals + right.evals, spec))
}

/// Both sides of the Gaussian-cosine kernel identity
/// (2Γ(p)/√π) ∫₀^∞ cos(2Rx)/(β²+x²)^p dx = ∫₀^∞ t^{p−3/2} e^{−(β²t+R²/t)} dt.
#[derive(Debug, Clone)]
pub struct KernelIdentity {
    pub cos_form: QuadResult,
    pub exp_form: QuadResult,
    pub difference: f64,
}

/// Evaluates both quadratures of the kernel identity for β² > 0, p > 1/2,
/// R ≥ 0 and returns them with their difference.
pub fn gaussian_cosine_kernel(
    beta2: f64,
    p: f64,
    r: f64,
    spec: &QuadSpec,
) -> Result<KernelIdentity> {
    require_positive(beta2, "gaussian_cosine_kernel: beta^2")?;
    if !(p > 0.5) {
        return Err(Error::domain("gaussian_cosine_kernel: p must exceed 1/2"));
    }
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::domain("gaussian_cosine_kernel: R must be non-negative"));
    }
    spec.validate()?;

    let cos_pref = (special::log_gamma(p)?).exp() * 2.0 / PI.sqrt();
    let cos_form = if r == 0.0 {
        // no oscillation to exploit: map x = u/(1−u) onto the unit interval
        // and let tanh-sinh absorb the (1−u)^{2p−2} end
        let raw = quad::tanh_sinh_pair(
            |u, um1| {
                let x = u / um1;
                let ln_den = if x > 1e150 {
                    2.0 * x.ln()
                } else {
                    (beta2 + x * x).ln()
                };
                (-p * ln_den - 2.0 * um1.ln()).exp()
            },
            spec,
        )?;
        raw.scaled(cos_pref)
    } else {
        // lobes between the zeros of cos(2Rx) at x = (k + 1/2)π/(2R)
        let f = move |x: f64| {
            let ln_den = (beta2 + x * x).ln();
            (2.0 * r * x).cos() * (-p * ln_den).exp()
        };
        let bounds = |j: usize, _prev: f64| Ok(Some((j as f64 + 0.5) * PI / (2.0 * r)));
        let raw = quad::accelerated_lobe_sum(&f, bounds, 0.0, 200, spec)?;
        raw.scaled(cos_pref)
    };

    // exp side: essential zero at t → 0 when R > 0, algebraic t^{p-3/2}
    // endpoint when R = 0; peak near t = R/β then e^{−β²t} decay
    let g = move |t: f64| {
        if t <= 0.0 {
            return 0.0;
        }
        ((p - 1.5) * t.ln() - beta2 * t - r * r / t).exp()
    };
    let split = (2.0 * r / beta2.sqrt()).max(1.0 / beta2).max(1.0);
    let left = quad::integrate_singular(g, 0.0, split, spec)?;
    let right = quad::integrate_semi_infinite_decay(|s| g(split + s), beta2, spec)?;
    let exp_form = QuadResult::new(
        left.value + right.value,
        left.error_estimate + right.error_estimate,
        left.evals + right.evals,
        spec,
    );

    let difference = cos_form.value - exp_form.value;
    Ok(KernelIdentity {
        cos_form,
        exp_form,
        difference,
    })
}

/// Inner Gaussian-cosine integral ∫₀^∞ e^{−x²t} cos(2Rx) dx by quadrature.
pub fn gaussian_cosine_inner(r: f64, t: f64, spec: &QuadSpec) -> Result<QuadResult> {
    require_positive(t, "gaussian_cosine_inner: t")?;
    if !(r >= 0.0) {
        return Err(Error::domain("gaussian_cosine_inner: R must be non-negative"));
    }
    // e^{-x²t} <= e^{-xt} for x >= 1
    quad::integrate_semi_infinite_decay(|x| (-x * x * t).exp() * (2.0 * r * x).cos(), t, spec)
}

/// Closed form of the inner integral: (1/2)√(π/t)·e^{−R²/t}.
pub fn gaussian_cosine_inner_closed(r: f64, t: f64) -> Result<f64> {
    require_positive(t, "gaussian_cosine_inner_closed: t")?;
    Ok(0.5 * (PI / t).sqrt() * (-r * r / t).exp())
}

/// ∫₀^∞ sin(au + b/u) du/u by lobe summation.
///
/// The phase au + b/u falls to its minimum 2√(ab) at u* = √(b/a) and rises
/// on either side; the substitution u ↦ (b/a)/u maps the falling branch
/// exactly onto the rising one, so the integral is twice the monotone
/// branch on [u*, ∞).
pub fn hardy_original_check(a: f64, b: f64, spec: &QuadSpec) -> Result<QuadResult> {
    HardyParams::new(a, b)?;
    let u_star = (b / a).sqrt();
    let branch = quad::integrate_oscillatory_phase(
        |u| 1.0 / u,
        |u| a * u + b / u,
        |u| a - b / (u * u),
        u_star,
        spec,
    )?;
    Ok(branch.scaled(2.0))
}

/// ∫₀^∞ sin(au² − b/u²) du by lobe summation.
///
/// The phase is strictly increasing on (0, ∞) with its zero at
/// u₀ = (b/a)^{1/4}. Above u₀ the lobes are summed directly; below u₀ the
/// substitution u = u₀/v turns the shrinking lobes that cluster at 0 into a
/// monotone-phase integral on (1, ∞) with amplitude 1/v², handled by the
/// same machinery.
pub fn hardy_variant_lhs(a: f64, b: f64, spec: &QuadSpec) -> Result<QuadResult> {
    HardyParams::new(a, b)?;
    let u0 = (b / a).powf(0.25);
    let upper = quad::integrate_oscillatory_phase(
        |_| 1.0,
        |u| a * u * u - b / (u * u),
        |u| 2.0 * a * u + 2.0 * b / (u * u * u),
        u0,
        spec,
    )?;
    // lower part: ∫₀^{u₀} sin(au² − b/u²) du = −u₀·∫₁^∞ sin(c(v² − 1/v²))/v² dv
    // with c = √(ab)
    let c = (a * b).sqrt();
    let lower = quad::integrate_oscillatory_phase(
        |v| 1.0 / (v * v),
        |v| c * (v * v - 1.0 / (v * v)),
        |v| c * (2.0 * v + 2.0 / (v * v * v)),
        1.0,
        spec,
    )?;
    let value = upper.value - u0 * lower.value;
    let err = upper.error_estimate + u0 * lower.error_estimate;
    let mut out = QuadResult::new(value, err, upper.evals + lower.evals, spec);
    out.converged = out.converged && upper.converged && lower.converged;
    Ok(out)
}

/// Closed right-hand side of the sin(au² − b/u²) identity, computed from
/// both equivalent expressions and cross-checked at 1e-14 before returning:
///
/// (1/(2√a))·√(π/2)·e^{−2√(ab)} = (b/(4a))^{1/4}·K_{1/2}(2√(ab)).
pub fn hardy_variant_rhs(a: f64, b: f64) -> Result<f64> {
    HardyParams::new(a, b)?;
    let exp_form = 0.5 / a.sqrt() * (PI / 2.0).sqrt() * (-2.0 * (a * b).sqrt()).exp();
    let k_form = (b / (4.0 * a)).powf(0.25) * k_half_closed(2.0 * (a * b).sqrt())?;
    let rel = (exp_form - k_form).abs() / exp_form.abs();
    if rel > 1e-14 {
        return Err(Error::ClosedFormMismatch(format!(
            "hardy_variant_rhs forms disagree by {rel:.3e} at a={a}, b={b}"
        )));
    }
    Ok(exp_form)
}
