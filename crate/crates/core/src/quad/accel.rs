//! Wynn's epsilon algorithm for accelerating alternating partial sums.
//!
//! Equivalent to iterated Shanks transformations; even-index columns of the
//! epsilon table approximate the limit. Each even column contributes a
//! candidate, and a candidate's error is measured by the gaps to its two
//! predecessors — the table's own convergence history — rather than any
//! single small difference.

pub(crate) struct LimitEstimate {
    pub value: f64,
    pub error: f64,
}

/// Extrapolates the limit of `sums` (partial sums of an alternating series).
///
/// Falls back to the last sum with a crude difference bound when fewer than
/// three entries are available.
pub(crate) fn wynn_epsilon(sums: &[f64]) -> LimitEstimate {
    let n = sums.len();
    if n == 0 {
        return LimitEstimate {
            value: 0.0,
            error: f64::INFINITY,
        };
    }
    if n < 3 {
        let err = if n == 2 {
            (sums[1] - sums[0]).abs()
        } else {
            f64::INFINITY
        };
        return LimitEstimate {
            value: sums[n - 1],
            error: err,
        };
    }

    let scale = sums.iter().fold(0.0f64, |m, s| m.max(s.abs())).max(1.0);

    // columns of the epsilon table; prev2 = ε_{k-2}, prev = ε_{k-1}
    let mut prev2: Vec<f64> = vec![0.0; n + 1]; // ε_{-1} ≡ 0
    let mut prev: Vec<f64> = sums.to_vec(); // ε_0
    // candidate sequence: the raw last partial sum, then the deepest entry
    // of each even column
    let mut cands: Vec<f64> = vec![sums[n - 1]];

    'table: for k in 1..n {
        let width = n - k;
        let mut curr = Vec::with_capacity(width);
        for i in 0..width {
            let denom = prev[i + 1] - prev[i];
            if denom.abs() < 1e-300 * scale {
                break 'table;
            }
            let e = prev2[i + 1] + 1.0 / denom;
            if !e.is_finite() {
                break 'table;
            }
            curr.push(e);
        }
        if k % 2 == 0 {
            if let Some(&c) = curr.last() {
                cands.push(c);
            }
        }
        prev2 = prev;
        prev = curr;
        if prev.len() < 2 {
            break;
        }
    }

    let floor = 2.0 * f64::EPSILON * scale;
    let mut best = sums[n - 1];
    let mut best_err = (sums[n - 1] - sums[n - 2]).abs().max(floor);
    for k in 1..cands.len() {
        let gap1 = (cands[k] - cands[k - 1]).abs();
        let gap2 = if k >= 2 {
            (cands[k] - cands[k - 2]).abs()
        } else {
            gap1
        };
        let err = (2.0 * (gap1 + gap2)).max(floor);
        if err < best_err {
            best = cands[k];
            best_err = err;
        }
    }

    LimitEstimate {
        value: best,
        error: best_err,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partial_sums(terms: impl Iterator<Item = f64>) -> Vec<f64> {
        let mut s = 0.0;
        terms
            .map(|t| {
                s += t;
                s
            })
            .collect()
    }

    #[test]
    fn accelerates_leibniz_series() {
        // π/4 = 1 - 1/3 + 1/5 - ...
        let sums = partial_sums(
            (0..20).map(|m| if m % 2 == 0 { 1.0 } else { -1.0 } / (2 * m + 1) as f64),
        );
        let est = wynn_epsilon(&sums);
        let truth = std::f64::consts::FRAC_PI_4;
        assert!((est.value - truth).abs() < 1e-12, "value {}", est.value);
        assert!((est.value - truth).abs() <= est.error);
    }

    #[test]
    fn accelerates_eta_function() {
        // ln 2 = 1 - 1/2 + 1/3 - ...
        let sums =
            partial_sums((1..=24).map(|m| if m % 2 == 1 { 1.0 } else { -1.0 } / m as f64));
        let est = wynn_epsilon(&sums);
        assert!((est.value - std::f64::consts::LN_2).abs() < 1e-12);
        assert!((est.value - std::f64::consts::LN_2).abs() <= est.error);
    }

    #[test]
    fn error_covers_truth_on_slow_alternating_decay() {
        // terms ~ k^{-1/2}: the hard regime for premature confidence
        let sums = partial_sums(
            (1..=30).map(|m| if m % 2 == 1 { 1.0 } else { -1.0 } / (m as f64).sqrt()),
        );
        let est = wynn_epsilon(&sums);
        // eta(1/2) = (1 - sqrt(2)) zeta(1/2)
        let truth = 0.6048986434216303702;
        assert!(
            (est.value - truth).abs() <= est.error,
            "value {} err {} truth {truth}",
            est.value,
            est.error
        );
        assert!((est.value - truth).abs() < 1e-9);
    }

    #[test]
    fn short_sequences_fall_back() {
        let est = wynn_epsilon(&[1.0, 1.5]);
        assert_eq!(est.value, 1.5);
        assert_eq!(est.error, 0.5);
    }
}
