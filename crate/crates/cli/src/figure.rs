//! Figure data: sampled integrand curves g_z(φ) whose area over [0, π]
//! equals J₀(z) (or I₀(z) for the hyperbolic kernel).

use bessel_reps::reps;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureKind {
    J0,
    I0,
}

impl FigureKind {
    pub fn from_name(name: &str) -> Option<FigureKind> {
        match name {
            "j0" => Some(FigureKind::J0),
            "i0" => Some(FigureKind::I0),
            _ => None,
        }
    }
}

/// g_z(φ) = (1/(πz))·(sin(z sinφ) + z sinφ·cos(z sinφ))·sinφ, or the
/// hyperbolic analog.
pub fn curve_value(kind: FigureKind, z: f64, phi: f64) -> f64 {
    let kernel = match kind {
        FigureKind::J0 => reps::j0_integrand(z, phi),
        FigureKind::I0 => reps::i0_integrand(z, phi),
    };
    kernel / (PI * z)
}

/// Uniform φ samples on [0, π], endpoints included.
pub fn curve_rows(kind: FigureKind, z: u32, samples: usize) -> Vec<(f64, f64)> {
    let n = samples.max(2);
    (0..n)
        .map(|i| {
            let phi = PI * i as f64 / (n - 1) as f64;
            (phi, curve_value(kind, z as f64, phi))
        })
        .collect()
}

/// Trapezoid sum of sampled rows; approximates J₀(z)/I₀(z), the documented
/// re-integration check on emitted data.
#[cfg(test)]
pub fn trapezoid(rows: &[(f64, f64)]) -> f64 {
    rows.windows(2)
        .map(|w| 0.5 * (w[1].0 - w[0].0) * (w[0].1 + w[1].1))
        .sum()
}
