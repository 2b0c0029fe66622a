//! Truncated integration of exponentially decaying integrands on [0, ∞).

use super::{gauss_kronrod::integrate_finite, Note, QuadResult, QuadSpec};
use crate::error::{Error, Result};

/// Integrates `f` over [0, ∞) assuming |f(t)| ≤ C·e^{-rt} eventually, with
/// `decay_rate_hint` guiding the truncation point.
///
/// Truncates at T = max(50/hint, first point where |f| stays below
/// abs_tol/100 for three consecutive probes); a tail bound derived from the
/// sampled decay envelope is added into the error estimate. If the sampled
/// tail exceeds what the hint implies, the result carries
/// [`Note::HintInconsistent`].
pub fn integrate_semi_infinite_decay<F: Fn(f64) -> f64>(
    f: F,
    decay_rate_hint: f64,
    spec: &QuadSpec,
) -> Result<QuadResult> {
    spec.validate()?;
    if !(decay_rate_hint > 0.0) || !decay_rate_hint.is_finite() {
        return Err(Error::domain(
            "integrate_semi_infinite_decay: decay_rate_hint must be positive and finite",
        ));
    }

    let step = 5.0 / decay_rate_hint;
    let small = spec.abs_tol / 100.0;
    let mut evals: u64 = 0;

    // envelope constant C with |f| <= C e^{-hint t} across the samples
    let mut envelope: f64 = 0.0;
    let mut envelope_early: f64 = 0.0;
    let mut consecutive_small = 0u32;
    let mut t_probe = None;
    let mut probes: Vec<(f64, f64)> = Vec::with_capacity(60);
    for i in 1..=60u32 {
        let t = i as f64 * step;
        let mag = f(t).abs();
        evals += 1;
        if !mag.is_finite() {
            return Err(Error::NonFinite(t));
        }
        probes.push((t, mag));
        let env = mag * (decay_rate_hint * t).min(700.0).exp();
        if i <= 3 {
            envelope_early = envelope_early.max(env);
        }
        envelope = envelope.max(env);
        if mag < small {
            consecutive_small += 1;
            if consecutive_small >= 3 && t_probe.is_none() {
                t_probe = Some(t);
            }
        } else {
            consecutive_small = 0;
        }
        if t_probe.is_some() && t >= 50.0 / decay_rate_hint {
            break;
        }
    }
    let t_cut = (50.0 / decay_rate_hint).max(t_probe.unwrap_or(60.0 * step));

    let finite = integrate_finite(&f, 0.0, t_cut, spec)?;
    evals += finite.evals;

    // ∫_T^∞ C e^{-rt} dt = C e^{-rT} / r, doubled for slack. When the
    // sampled decay is slower than the hint, the envelope term alone would
    // understate the tail, so it is paired with |f(T)| over the empirical
    // rate of the last decaying probe pair.
    let mag_cut = f(t_cut).abs();
    evals += 1;
    let r_hat = probes
        .windows(2)
        .rev()
        .find(|w| w[0].1 > 0.0 && w[1].1 > 0.0 && w[1].1 < w[0].1)
        .map(|w| (w[0].1 / w[1].1).ln() / (w[1].0 - w[0].0))
        .unwrap_or(decay_rate_hint);
    let r_eff = decay_rate_hint
        .min(r_hat)
        .max(decay_rate_hint / 1e6);
    let tail_bound = 2.0
        * (envelope * (-decay_rate_hint * t_cut).exp() / decay_rate_hint)
            .max(mag_cut / r_eff);
    let err = finite.error_estimate + tail_bound;

    let mut out = QuadResult::new(finite.value, err, evals, spec);
    // a hint-consistent integrand keeps C roughly constant across the
    // probes; a growing envelope means the true decay is slower
    if envelope > 100.0 * envelope_early.max(1e-300) {
        out = out.with_note(Note::HintInconsistent);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_exponential() {
        let spec = QuadSpec::default();
        let r = integrate_semi_infinite_decay(|t| (-t).exp(), 1.0, &spec).unwrap();
        assert!((r.value - 1.0).abs() < 1e-11);
        assert!(r.converged);
        assert!(r.note.is_none());
    }

    #[test]
    fn damped_cosine_laplace_transform() {
        let spec = QuadSpec::default();
        // ∫ e^{-3t} cos 4t dt = 3/25
        let r =
            integrate_semi_infinite_decay(|t| (-3.0 * t).exp() * (4.0 * t).cos(), 3.0, &spec)
                .unwrap();
        assert!((r.value - 0.12).abs() < 1e-11, "got {}", r.value);
    }

    #[test]
    fn gaussian_times_t() {
        let spec = QuadSpec::default();
        let r = integrate_semi_infinite_decay(|t| t * (-t * t).exp(), 1.0, &spec).unwrap();
        assert!((r.value - 0.5).abs() < 1e-11);
    }

    #[test]
    fn slow_decay_flags_hint() {
        let spec = QuadSpec::default();
        // true rate 0.05, hint 1.0: value still right, note set
        let r = integrate_semi_infinite_decay(|t| (-0.05 * t).exp(), 1.0, &spec).unwrap();
        assert_eq!(r.note, Some(Note::HintInconsistent));
        assert!((r.value - 20.0).abs() < 20.0 * 1e-6, "got {}", r.value);
    }

    #[test]
    fn rejects_bad_hint() {
        let spec = QuadSpec::default();
        assert!(integrate_semi_infinite_decay(|t| (-t).exp(), 0.0, &spec).is_err());
        assert!(integrate_semi_infinite_decay(|t| (-t).exp(), -2.0, &spec).is_err());
    }
}
