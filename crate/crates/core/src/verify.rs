//! Registered identities, sweep grids, and pass/fail reports.
//!
//! Each identity couples a left-hand evaluation with its independent
//! right-hand side over a cartesian parameter grid. The default grids here
//! are the single source of truth for the acceptance suite and the CLI's
//! `verify` command.

use crate::error::{Error, Result};
use crate::kbessel;
use crate::laplace;
use crate::quad::QuadSpec;
use crate::reps::{self, RepForm};
use crate::special::{self, Order};

/// Every identity the verification harness knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    RepVsSeriesJ,
    RepVsSeriesI,
    Lipschitz,
    FfoVsNumeric,
    SpecialCases,
    KTriangle,
    BassetVsExp,
    GaussianKernel,
    HardyOriginal,
    HardyVariant,
    Duplication,
    FormEquivalence,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::RepVsSeriesJ,
        Identity::RepVsSeriesI,
        Identity::Lipschitz,
        Identity::FfoVsNumeric,
        Identity::SpecialCases,
        Identity::KTriangle,
        Identity::BassetVsExp,
        Identity::GaussianKernel,
        Identity::HardyOriginal,
        Identity::HardyVariant,
        Identity::Duplication,
        Identity::FormEquivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::RepVsSeriesJ => "rep-vs-series-J",
            Identity::RepVsSeriesI => "rep-vs-series-I",
            Identity::Lipschitz => "lipschitz",
            Identity::FfoVsNumeric => "ffo-vs-numeric",
            Identity::SpecialCases => "special-cases",
            Identity::KTriangle => "k-triangle",
            Identity::BassetVsExp => "basset-vs-exp",
            Identity::GaussianKernel => "gaussian-kernel",
            Identity::HardyOriginal => "hardy-original",
            Identity::HardyVariant => "hardy-variant",
            Identity::Duplication => "duplication",
            Identity::FormEquivalence => "form-equivalence",
        }
    }

    pub fn from_name(name: &str) -> Option<Identity> {
        Identity::ALL.iter().copied().find(|i| i.name() == name)
    }
}

/// Pass threshold: abs_err <= max(abs_floor, tol_mult·(rel_tol·|rhs| +
/// error_estimate)).
#[derive(Debug, Clone, Copy)]
pub struct PassRule {
    pub abs_floor: f64,
    pub tol_mult: f64,
    pub rel_tol: f64,
}

impl PassRule {
    fn threshold(&self, rhs: f64, error_estimate: f64) -> f64 {
        self.abs_floor
            .max(self.tol_mult * (self.rel_tol * rhs.abs() + error_estimate))
    }
}

/// Tuning knobs shared by every identity run.
#[derive(Debug, Clone, Default)]
pub struct VerifyConfig {
    pub spec: QuadSpec,
    /// When set, replaces the identity's own tolerance multiplier.
    pub tol_mult: Option<f64>,
    /// When set, replaces the identity's own absolute floor.
    pub abs_floor: Option<f64>,
}

impl VerifyConfig {
    fn rule_for(&self, identity: Identity, family: &str) -> PassRule {
        let mut rule = default_rule(identity, family);
        if let Some(m) = self.tol_mult {
            rule.tol_mult = m;
        }
        if let Some(f) = self.abs_floor {
            rule.abs_floor = f;
        }
        rule
    }
}

fn default_rule(identity: Identity, family: &str) -> PassRule {
    match identity {
        Identity::RepVsSeriesJ | Identity::RepVsSeriesI => PassRule {
            abs_floor: 0.0,
            tol_mult: 10.0,
            rel_tol: 0.0,
        },
        Identity::Lipschitz | Identity::FfoVsNumeric => PassRule {
            abs_floor: 0.0,
            tol_mult: 10.0,
            rel_tol: 0.0,
        },
        Identity::SpecialCases => PassRule {
            abs_floor: 0.0,
            tol_mult: 1.0,
            rel_tol: 1e-12,
        },
        Identity::KTriangle | Identity::BassetVsExp => PassRule {
            abs_floor: 0.0,
            tol_mult: 10.0,
            rel_tol: 0.0,
        },
        Identity::GaussianKernel => PassRule {
            abs_floor: if family == "inner" { 1e-10 } else { 1e-9 },
            tol_mult: 0.0,
            rel_tol: 0.0,
        },
        Identity::HardyOriginal | Identity::HardyVariant => PassRule {
            abs_floor: 1e-6,
            tol_mult: 10.0,
            rel_tol: 0.0,
        },
        Identity::Duplication => PassRule {
            abs_floor: 0.0,
            tol_mult: 1.0,
            rel_tol: 1e-12,
        },
        Identity::FormEquivalence => PassRule {
            abs_floor: 1e-14,
            tol_mult: 0.0,
            rel_tol: 0.0,
        },
    }
}

/// One verified grid point.
#[derive(Debug, Clone)]
pub struct PointRecord {
    /// Sub-family of the identity this point belongs to (e.g. "reduction",
    /// "double", "cos-vs-exp").
    pub family: &'static str,
    pub params: Vec<(&'static str, f64)>,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub error_estimate: f64,
    pub pass: bool,
}

/// Report of one identity swept over a grid.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub identity: Identity,
    pub points: Vec<PointRecord>,
}

impl IdentityReport {
    pub fn total(&self) -> usize {
        self.points.len()
    }

    pub fn pass_count(&self) -> usize {
        self.points.iter().filter(|p| p.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.pass_count() == self.total()
    }

    pub fn max_rel_err(&self) -> f64 {
        self.points.iter().fold(0.0, |m, p| m.max(p.rel_err))
    }

    pub fn max_rel_err_in(&self, family: &str) -> f64 {
        self.points
            .iter()
            .filter(|p| p.family == family)
            .fold(0.0, |m, p| m.max(p.rel_err))
    }

    pub fn max_abs_err_in(&self, family: &str) -> f64 {
        self.points
            .iter()
            .filter(|p| p.family == family)
            .fold(0.0, |m, p| m.max(p.abs_err))
    }

    /// CSV serialization: header plus one row per point, 17 significant
    /// digits, locale independent.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("identity,family,params,lhs,rhs,abs_err,rel_err,error_estimate,pass\n");
        for p in &self.points {
            let params = p
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(";");
            out.push_str(&format!(
                "{},{},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{}\n",
                self.identity.name(),
                p.family,
                params,
                p.lhs,
                p.rhs,
                p.abs_err,
                p.rel_err,
                p.error_estimate,
                p.pass
            ));
        }
        out
    }
}

/// Cartesian sweep grid. Which lists are consumed depends on the identity;
/// the `x` list doubles as z (K identities), m (duplication) and the x-grid
/// of the representation sweeps.
#[derive(Debug, Clone)]
pub struct SweepGrid {
    pub identity: Identity,
    pub alpha: Vec<f64>,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub x: Vec<f64>,
}

fn range(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let mut v = Vec::new();
    let mut t = lo;
    while t <= hi + 1e-12 {
        v.push(t);
        t += step;
    }
    v
}

impl SweepGrid {
    /// The canonical grid for an identity: the same one the module-level
    /// invariants and the acceptance suite use.
    pub fn default_for(identity: Identity) -> SweepGrid {
        let (alpha, a, b, x) = match identity {
            Identity::RepVsSeriesJ | Identity::RepVsSeriesI => (
                vec![0.5, 1.0, 1.5, 2.0, 3.0],
                vec![],
                vec![],
                vec![0.25, 0.5, 1.0, 2.0, 5.0, 10.0],
            ),
            Identity::Lipschitz => (
                vec![],
                vec![0.5, 1.0, 2.0, 5.0],
                vec![0.5, 1.0, 2.0, 5.0],
                vec![],
            ),
            Identity::FfoVsNumeric => (
                vec![0.5, 1.0, 1.5, 2.0],
                vec![0.5, 1.0, 3.0],
                vec![0.5, 1.0, 2.0, 4.0],
                vec![],
            ),
            Identity::SpecialCases => (
                vec![0.5, 1.0],
                vec![0.0, 0.5, 1.0, 3.0],
                vec![0.5, 1.0, 2.0, 4.0],
                vec![],
            ),
            Identity::KTriangle => (vec![0.5], vec![], vec![], vec![0.5, 1.0, 2.0, 4.0]),
            Identity::BassetVsExp => (
                vec![0.0, 1.0, 1.5, 2.5],
                vec![],
                vec![],
                vec![0.5, 1.0, 2.0],
            ),
            // alpha carries p, a carries β², b carries R
            Identity::GaussianKernel => (
                vec![0.75, 1.0, 1.5, 2.5],
                vec![0.5, 1.0, 2.0],
                vec![0.0, 0.5, 1.0],
                vec![],
            ),
            Identity::HardyOriginal | Identity::HardyVariant => (
                vec![],
                vec![0.5, 1.0, 2.0, 4.0],
                vec![0.5, 1.0, 2.0, 4.0],
                vec![],
            ),
            Identity::Duplication => (vec![], vec![], vec![], range(0.5, 20.0, 0.5)),
            Identity::FormEquivalence => {
                (vec![], vec![], vec![], (1..=25).map(|i| 0.4 * i as f64).collect())
            }
        };
        SweepGrid {
            identity,
            alpha,
            a,
            b,
            x,
        }
    }

    fn require_nonempty(&self, what: &str, values: &[f64]) -> Result<()> {
        if values.is_empty() {
            return Err(Error::InvalidGrid(format!(
                "{}: {what} values must be non-empty",
                self.identity.name()
            )));
        }
        Ok(())
    }

    fn require_all(&self, what: &str, values: &[f64], ok: impl Fn(f64) -> bool) -> Result<()> {
        self.require_nonempty(what, values)?;
        for &v in values {
            if !v.is_finite() || !ok(v) {
                return Err(Error::InvalidGrid(format!(
                    "{}: {what} value {v} violates the identity's preconditions",
                    self.identity.name()
                )));
            }
        }
        Ok(())
    }

    /// Checks emptiness and identity-specific preconditions before a run.
    pub fn validate(&self) -> Result<()> {
        match self.identity {
            Identity::RepVsSeriesJ | Identity::RepVsSeriesI => {
                self.require_all("alpha", &self.alpha, |v| v > 0.0)?;
                self.require_all("x", &self.x, |v| v > 0.0 && v <= 20.0)
            }
            Identity::Lipschitz => {
                self.require_all("a", &self.a, |v| v > 0.0)?;
                self.require_all("b", &self.b, |v| v > 0.0)
            }
            Identity::FfoVsNumeric => {
                self.require_all("alpha", &self.alpha, |v| v > 0.0)?;
                self.require_all("a", &self.a, |v| v > 0.0)?;
                self.require_all("b", &self.b, |v| v > 0.0)
            }
            Identity::SpecialCases => {
                self.require_all("alpha", &self.alpha, |v| v == 0.5 || v == 1.0)?;
                self.require_all("a", &self.a, |v| v >= 0.0)?;
                self.require_all("b", &self.b, |v| v > 0.0)
            }
            Identity::KTriangle => {
                self.require_all("z", &self.x, |v| v > 0.0)
            }
            Identity::BassetVsExp => {
                self.require_all("alpha", &self.alpha, |v| (0.0..=10.0).contains(&v))?;
                self.require_all("z", &self.x, |v| v > 0.0)
            }
            Identity::GaussianKernel => {
                self.require_all("p", &self.alpha, |v| v > 0.5)?;
                self.require_all("beta2", &self.a, |v| v > 0.0)?;
                self.require_all("R", &self.b, |v| v >= 0.0)
            }
            Identity::HardyOriginal | Identity::HardyVariant => {
                self.require_all("a", &self.a, |v| v > 0.0)?;
                self.require_all("b", &self.b, |v| v > 0.0)
            }
            Identity::Duplication => self.require_all("m", &self.x, |v| v > 0.0),
            Identity::FormEquivalence => {
                self.require_all("x", &self.x, |v| v > 0.0 && v <= 60.0)
            }
        }
    }
}

fn record(
    rule: &PassRule,
    family: &'static str,
    params: Vec<(&'static str, f64)>,
    lhs: f64,
    rhs: f64,
    error_estimate: f64,
) -> PointRecord {
    let abs_err = (lhs - rhs).abs();
    let rel_err = abs_err / rhs.abs().max(f64::MIN_POSITIVE);
    let pass = abs_err <= rule.threshold(rhs, error_estimate);
    PointRecord {
        family,
        params,
        lhs,
        rhs,
        abs_err,
        rel_err,
        error_estimate,
        pass,
    }
}

/// Runs one identity over its grid, producing a per-point report.
pub fn run_identity(grid: &SweepGrid, cfg: &VerifyConfig) -> Result<IdentityReport> {
    grid.validate()?;
    let spec = &cfg.spec;
    let mut points = Vec::new();

    match grid.identity {
        Identity::RepVsSeriesJ | Identity::RepVsSeriesI => {
            let hyperbolic = grid.identity == Identity::RepVsSeriesI;
            for &x in &grid.x {
                let series = if hyperbolic {
                    special::bessel_i_series(Order::new(0.0)?, x)?
                } else {
                    special::bessel_j_series(Order::new(0.0)?, x)?
                };
                let rep = if hyperbolic {
                    reps::i0_rep(x, false, spec)?
                } else {
                    reps::j0_rep(x, spec)?
                };
                let rule = cfg.rule_for(grid.identity, RepForm::Single.name());
                points.push(record(
                    &rule,
                    RepForm::Single.name(),
                    vec![("x", x)],
                    rep.value,
                    series.value,
                    rep.error_estimate + series.truncation_bound,
                ));
            }
            for &al in &grid.alpha {
                for &x in &grid.x {
                    let order = Order::new(al)?;
                    let series = if hyperbolic {
                        special::bessel_i_series(order, x)?
                    } else {
                        special::bessel_j_series(order, x)?
                    };
                    let reduction = if hyperbolic {
                        reps::i_alpha_reduction(order, x, spec)?
                    } else {
                        reps::j_alpha_reduction(order, x, spec)?
                    };
                    let rule = cfg.rule_for(grid.identity, RepForm::Reduction.name());
                    points.push(record(
                        &rule,
                        RepForm::Reduction.name(),
                        vec![("alpha", al), ("x", x)],
                        reduction.value,
                        series.value,
                        reduction.error_estimate + series.truncation_bound,
                    ));
                    let double = if hyperbolic {
                        reps::i_alpha_double(order, x, spec)?
                    } else {
                        reps::j_alpha_double(order, x, spec)?
                    };
                    let rule = cfg.rule_for(grid.identity, RepForm::Double.name());
                    points.push(record(
                        &rule,
                        RepForm::Double.name(),
                        vec![("alpha", al), ("x", x)],
                        double.value,
                        series.value,
                        double.error_estimate + series.truncation_bound,
                    ));
                }
            }
        }
        Identity::Lipschitz => {
            let rule = cfg.rule_for(grid.identity, "");
            for &a in &grid.a {
                for &b in &grid.b {
                    let num = laplace::laplace_j0_numeric(a, b, spec)?;
                    let rhs = laplace::lipschitz_rhs(a, b)?;
                    points.push(record(
                        &rule,
                        "lipschitz",
                        vec![("a", a), ("b", b)],
                        num.value,
                        rhs,
                        num.error_estimate,
                    ));
                }
            }
        }
        Identity::FfoVsNumeric => {
            let rule = cfg.rule_for(grid.identity, "");
            for &al in &grid.alpha {
                for &a in &grid.a {
                    for &b in &grid.b {
                        let order = Order::new(al)?;
                        let num = laplace::laplace_j_alpha_numeric(order, a, b, spec)?;
                        let closed = laplace::laplace_j_alpha_closed(order, a, b)?;
                        points.push(record(
                            &rule,
                            "ffo",
                            vec![("alpha", al), ("a", a), ("b", b)],
                            num.value,
                            closed,
                            num.error_estimate,
                        ));
                    }
                }
            }
        }
        Identity::SpecialCases => {
            let rule = cfg.rule_for(grid.identity, "");
            for &al in &grid.alpha {
                for &a in &grid.a {
                    for &b in &grid.b {
                        let order = Order::new(al)?;
                        let master = laplace::laplace_j_alpha_closed(order, a, b)?;
                        let special = laplace::laplace_special_case(order, a, b)?;
                        points.push(record(
                            &rule,
                            "special-case",
                            vec![("alpha", al), ("a", a), ("b", b)],
                            master,
                            special,
                            0.0,
                        ));
                    }
                }
            }
        }
        Identity::KTriangle => {
            let rule = cfg.rule_for(grid.identity, "");
            let order = Order::new(0.5)?;
            for &z in &grid.x {
                let closed = kbessel::k_half_closed(z)?;
                let basset = kbessel::k_alpha_basset(order, z, spec)?;
                let exp = kbessel::k_alpha_exp(order, z, spec)?;
                points.push(record(
                    &rule,
                    "basset-vs-closed",
                    vec![("z", z)],
                    basset.value,
                    closed,
                    basset.error_estimate,
                ));
                points.push(record(
                    &rule,
                    "exp-vs-closed",
                    vec![("z", z)],
                    exp.value,
                    closed,
                    exp.error_estimate,
                ));
                points.push(record(
                    &rule,
                    "basset-vs-exp",
                    vec![("z", z)],
                    basset.value,
                    exp.value,
                    basset.error_estimate + exp.error_estimate,
                ));
            }
        }
        Identity::BassetVsExp => {
            let rule = cfg.rule_for(grid.identity, "");
            for &al in &grid.alpha {
                for &z in &grid.x {
                    let order = Order::new(al)?;
                    let basset = kbessel::k_alpha_basset(order, z, spec)?;
                    let exp = kbessel::k_alpha_exp(order, z, spec)?;
                    points.push(record(
                        &rule,
                        "basset-vs-exp",
                        vec![("alpha", al), ("z", z)],
                        basset.value,
                        exp.value,
                        basset.error_estimate + exp.error_estimate,
                    ));
                }
            }
        }
        Identity::GaussianKernel => {
            let rule = cfg.rule_for(grid.identity, "kernel");
            for &p in &grid.alpha {
                for &beta2 in &grid.a {
                    for &r in &grid.b {
                        let k = kbessel::gaussian_cosine_kernel(beta2, p, r, spec)?;
                        points.push(record(
                            &rule,
                            "cos-vs-exp",
                            vec![("beta2", beta2), ("p", p), ("R", r)],
                            k.cos_form.value,
                            k.exp_form.value,
                            k.cos_form.error_estimate + k.exp_form.error_estimate,
                        ));
                    }
                }
            }
            // inner Gaussian-cosine lemma on its fixed grid (t > 0)
            let rule = cfg.rule_for(grid.identity, "inner");
            for &r in &[0.0, 0.5, 1.0, 2.0] {
                for &t in &[0.5, 1.0, 2.0, 4.0] {
                    let num = kbessel::gaussian_cosine_inner(r, t, spec)?;
                    let closed = kbessel::gaussian_cosine_inner_closed(r, t)?;
                    points.push(record(
                        &rule,
                        "inner",
                        vec![("R", r), ("t", t)],
                        num.value,
                        closed,
                        num.error_estimate,
                    ));
                }
            }
        }
        Identity::HardyOriginal => {
            let rule = cfg.rule_for(grid.identity, "");
            for &a in &grid.a {
                for &b in &grid.b {
                    let lhs = kbessel::hardy_original_check(a, b, spec)?;
                    let arg = 2.0 * (a * b).sqrt();
                    let rhs = std::f64::consts::PI
                        * special::bessel_j_series(Order::new(0.0)?, arg)?.value;
                    points.push(record(
                        &rule,
                        "hardy-original",
                        vec![("a", a), ("b", b)],
                        lhs.value,
                        rhs,
                        lhs.error_estimate,
                    ));
                }
            }
        }
        Identity::HardyVariant => {
            let rule = cfg.rule_for(grid.identity, "");
            for &a in &grid.a {
                for &b in &grid.b {
                    let lhs = kbessel::hardy_variant_lhs(a, b, spec)?;
                    let rhs = kbessel::hardy_variant_rhs(a, b)?;
                    points.push(record(
                        &rule,
                        "hardy-variant",
                        vec![("a", a), ("b", b)],
                        lhs.value,
                        rhs,
                        lhs.error_estimate,
                    ));
                }
            }
        }
        Identity::Duplication => {
            let rule = cfg.rule_for(grid.identity, "");
            for &m in &grid.x {
                let lhs = special::log_gamma(m + 0.5)?.exp();
                let rhs = (special::log_gamma(2.0 * m)? + 0.5 * std::f64::consts::PI.ln()
                    - special::log_gamma(m)?
                    - (2.0 * m - 1.0) * std::f64::consts::LN_2)
                    .exp();
                points.push(record(&rule, "duplication", vec![("m", m)], lhs, rhs, 0.0));
            }
        }
        Identity::FormEquivalence => {
            let rule = cfg.rule_for(grid.identity, "");
            for &x in &grid.x {
                for j in 0..40 {
                    let phi = std::f64::consts::PI * (j as f64 + 0.5) / 40.0;
                    let lhs = reps::j0_integrand(x, phi);
                    let rhs = reps::j0_integrand_derivative_form(x, phi);
                    points.push(record(
                        &rule,
                        "form",
                        vec![("x", x), ("phi", phi)],
                        lhs,
                        rhs,
                        0.0,
                    ));
                }
            }
        }
    }

    Ok(IdentityReport {
        identity: grid.identity,
        points,
    })
}
