//! Command-line front end: evaluate any implemented function or
//! representation, run identity-verification sweeps, and emit figure data
//! as CSV.
//!
//! Exit codes: 0 pass, 1 identity failure, 2 usage/domain error.

// `!(x > 0.0)`-style checks reject NaN inputs from the command line.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod config;
mod figure;

use bessel_reps::verify::{run_identity, Identity, IdentityReport, SweepGrid, VerifyConfig};
use bessel_reps::{kbessel, laplace, reps, special};
use bessel_reps::{Order, QuadSpec};
use clap::{Parser, Subcommand};
use figure::FigureKind;
use std::path::PathBuf;

const FUNCTIONS: [&str; 13] = [
    "j-series",
    "i-series",
    "j0-rep",
    "i0-rep",
    "j-reduction",
    "i-reduction",
    "j-double",
    "i-double",
    "k-basset",
    "k-exp",
    "k-half",
    "laplace-closed",
    "laplace-special",
];

#[derive(Parser)]
#[command(
    name = "bessel-reps",
    version,
    about = "Bessel integral representations: evaluation, identity verification, figure data"
)]
struct Cli {
    /// Relative quadrature tolerance (overrides config)
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
    /// Absolute quadrature tolerance (overrides config)
    #[arg(long, global = true)]
    abs_tol: Option<f64>,
    /// Adaptive bisection / refinement depth cap (overrides config)
    #[arg(long, global = true)]
    max_depth: Option<u32>,
    /// Pass-rule tolerance multiplier (overrides the identity default)
    #[arg(long, global = true)]
    tol_mult: Option<f64>,
    /// Pass-rule absolute floor (overrides the identity default)
    #[arg(long, global = true)]
    abs_floor: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at a point; prints value, error estimate and
    /// evaluation count
    Eval {
        /// One of the registered functions (see `list`)
        function: String,
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        x: Option<f64>,
        /// Alias for --x used by the K-function family
        #[arg(long, allow_negative_numbers = true)]
        z: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        a: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        b: Option<f64>,
        /// For i0-rep: return e^{-x}·I0(x) from the rescaled integrand
        #[arg(long)]
        scaled: bool,
    },
    /// Run one registered identity over a parameter grid; exit 0 iff every
    /// point passes
    Verify {
        /// One of the registered identities (see `list`)
        identity: String,
        /// Comma list or lo..hi[:step] range for alpha
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Alias for --x (K identities)
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Alias for --x (duplication grid)
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        /// Also write the full per-point report to this CSV file
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Emit sampled integrand curves (z, phi, g) as CSV
    FigureData {
        /// j0 or i0
        function: String,
        /// Integer z range, e.g. 4 or 1..10
        #[arg(long, default_value = "1..10")]
        z: String,
        /// Uniform phi samples per curve (>= 2)
        #[arg(long, default_value_t = 512)]
        samples: usize,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Lift the curve range cap from z <= 10 to z <= 60
        #[arg(long)]
        allow_wide: bool,
    },
    /// Print the registered functions and identities
    List,
}

fn main() {
    // behave like a normal unix tool when stdout is closed mid-stream
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    let file_cfg = match config::load_from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let spec = config::resolve_spec(&file_cfg, cli.rel_tol, cli.abs_tol, cli.max_depth);
    let tol_mult = cli.tol_mult.or(file_cfg.tol_mult);
    let abs_floor = cli.abs_floor.or(file_cfg.abs_floor);

    match cli.command {
        Command::Eval {
            function,
            alpha,
            x,
            z,
            a,
            b,
            scaled,
        } => match cmd_eval(&function, alpha, x.or(z), a, b, scaled, &spec) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Command::Verify {
            identity,
            alpha,
            a,
            b,
            x,
            z,
            m,
            csv,
        } => cmd_verify(
            &identity,
            [alpha, a, b, x, z, m],
            csv,
            VerifyConfig {
                spec,
                tol_mult,
                abs_floor,
            },
        ),
        Command::FigureData {
            function,
            z,
            samples,
            out,
            allow_wide,
        } => cmd_figure_data(&function, &z, samples, out, allow_wide),
        Command::List => {
            println!("functions:");
            for f in FUNCTIONS {
                println!("  {f}");
            }
            println!("identities:");
            for id in Identity::ALL {
                println!("  {}", id.name());
            }
            0
        }
    }
}

fn require(value: Option<f64>, name: &str, function: &str) -> Result<f64, String> {
    value.ok_or_else(|| format!("{function} requires --{name}"))
}

fn print_eval(function: &str, value: f64, error_estimate: f64, evals: u64) {
    println!("function = {function}");
    println!("value = {value:.16e}");
    println!("error_estimate = {error_estimate:.16e}");
    println!("evals = {evals}");
}

fn cmd_eval(
    function: &str,
    alpha: Option<f64>,
    x: Option<f64>,
    a: Option<f64>,
    b: Option<f64>,
    scaled: bool,
    spec: &QuadSpec,
) -> Result<(), String> {
    let lib = |e: bessel_reps::Error| e.to_string();
    let order = |v: f64| Order::new(v).map_err(lib);

    match function {
        "j-series" | "i-series" => {
            let al = order(require(alpha, "alpha", function)?)?;
            let xv = require(x, "x", function)?;
            let s = if function == "j-series" {
                special::bessel_j_series(al, xv)
            } else {
                special::bessel_i_series(al, xv)
            }
            .map_err(lib)?;
            print_eval(function, s.value, s.truncation_bound, s.terms_used as u64);
        }
        "j0-rep" => {
            let r = reps::j0_rep(require(x, "x", function)?, spec).map_err(lib)?;
            print_eval(function, r.value, r.error_estimate, r.evals);
        }
        "i0-rep" => {
            let r = reps::i0_rep(require(x, "x", function)?, scaled, spec).map_err(lib)?;
            print_eval(function, r.value, r.error_estimate, r.evals);
        }
        "j-reduction" | "i-reduction" | "j-double" | "i-double" => {
            let al = order(require(alpha, "alpha", function)?)?;
            let xv = require(x, "x", function)?;
            let r = match function {
                "j-reduction" => reps::j_alpha_reduction(al, xv, spec),
                "i-reduction" => reps::i_alpha_reduction(al, xv, spec),
                "j-double" => reps::j_alpha_double(al, xv, spec),
                _ => reps::i_alpha_double(al, xv, spec),
            }
            .map_err(lib)?;
            print_eval(function, r.value, r.error_estimate, r.evals);
        }
        "k-basset" | "k-exp" => {
            let al = order(require(alpha, "alpha", function)?)?;
            let zv = require(x, "z", function)?;
            let r = if function == "k-basset" {
                kbessel::k_alpha_basset(al, zv, spec)
            } else {
                kbessel::k_alpha_exp(al, zv, spec)
            }
            .map_err(lib)?;
            print_eval(function, r.value, r.error_estimate, r.evals);
        }
        "k-half" => {
            let v = kbessel::k_half_closed(require(x, "x", function)?).map_err(lib)?;
            print_eval(function, v, 0.0, 0);
        }
        "laplace-closed" | "laplace-special" => {
            let al = order(require(alpha, "alpha", function)?)?;
            let av = require(a, "a", function)?;
            let bv = require(b, "b", function)?;
            let v = if function == "laplace-closed" {
                laplace::laplace_j_alpha_closed(al, av, bv)
            } else {
                laplace::laplace_special_case(al, av, bv)
            }
            .map_err(lib)?;
            print_eval(function, v, 0.0, 0);
        }
        other => {
            return Err(format!(
                "unknown function {other}; available: {}",
                FUNCTIONS.join(", ")
            ));
        }
    }
    Ok(())
}

/// Comma list (`0.5,1,2`) or range (`0.5..20`, optionally `lo..hi:step`).
fn parse_values(text: &str) -> Result<Vec<f64>, String> {
    let bad = |e| format!("cannot parse {text}: {e}");
    if text.contains("..") {
        let (bounds, step) = match text.split_once(':') {
            Some((r, s)) => (r, s.parse::<f64>().map_err(bad)?),
            None => (text, 1.0),
        };
        let (lo, hi) = bounds
            .split_once("..")
            .ok_or_else(|| format!("cannot parse range {text}"))?;
        let lo: f64 = lo.parse().map_err(bad)?;
        let hi: f64 = hi.parse().map_err(bad)?;
        if !(step > 0.0) || hi < lo {
            return Err(format!("empty or descending range {text}"));
        }
        let mut values = Vec::new();
        let mut v = lo;
        while v <= hi + 1e-12 {
            values.push(v);
            v += step;
        }
        Ok(values)
    } else {
        text.split(',')
            .map(|s| s.trim().parse::<f64>().map_err(|e| format!("cannot parse {s}: {e}")))
            .collect()
    }
}

const TABLE_ROW_CAP: usize = 120;

fn print_report(report: &IdentityReport) {
    println!("identity = {}", report.identity.name());
    println!("family | params | lhs | rhs | abs_err | rel_err | error_estimate | pass");
    for p in report.points.iter().take(TABLE_ROW_CAP) {
        let params = p
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";");
        println!(
            "{} | {} | {:.16e} | {:.16e} | {:.16e} | {:.16e} | {:.16e} | {}",
            p.family, params, p.lhs, p.rhs, p.abs_err, p.rel_err, p.error_estimate, p.pass
        );
    }
    if report.points.len() > TABLE_ROW_CAP {
        println!(
            "... ({} more points; use --csv for the full report)",
            report.points.len() - TABLE_ROW_CAP
        );
    }
    println!(
        "summary: points={} pass={} max_rel_err={:.16e}",
        report.total(),
        report.pass_count(),
        report.max_rel_err()
    );
}

fn cmd_verify(
    identity: &str,
    [alpha, a, b, x, z, m]: [Option<String>; 6],
    csv: Option<PathBuf>,
    cfg: VerifyConfig,
) -> i32 {
    let Some(id) = Identity::from_name(identity) else {
        eprintln!(
            "error: unknown identity {identity}; available: {}",
            Identity::ALL.map(|i| i.name()).join(", ")
        );
        return 2;
    };
    let mut grid = SweepGrid::default_for(id);

    let x_like: Vec<&Option<String>> = [&x, &z, &m].into_iter().filter(|v| v.is_some()).collect();
    if x_like.len() > 1 {
        eprintln!("error: --x, --z and --m are aliases; give at most one");
        return 2;
    }
    let apply = |slot: &mut Vec<f64>, text: &Option<String>| -> Result<(), String> {
        if let Some(t) = text {
            *slot = parse_values(t)?;
        }
        Ok(())
    };
    let applied = apply(&mut grid.alpha, &alpha)
        .and_then(|_| apply(&mut grid.a, &a))
        .and_then(|_| apply(&mut grid.b, &b))
        .and_then(|_| apply(&mut grid.x, x_like.first().copied().unwrap_or(&None)));
    if let Err(e) = applied {
        eprintln!("error: {e}");
        return 2;
    }

    let report = match run_identity(&grid, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    print_report(&report);
    if let Some(path) = csv {
        if let Err(e) = std::fs::write(&path, report.to_csv()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    if report.all_pass() {
        0
    } else {
        1
    }
}

fn cmd_figure_data(
    function: &str,
    z_text: &str,
    samples: usize,
    out: Option<PathBuf>,
    allow_wide: bool,
) -> i32 {
    let Some(kind) = FigureKind::from_name(function) else {
        eprintln!("error: figure-data supports j0 and i0, got {function}");
        return 2;
    };
    let (z_min, z_max) = match parse_z_range(z_text) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let cap = if allow_wide { 60 } else { 10 };
    if z_min < 1 || z_min > z_max || z_max > cap {
        eprintln!(
            "error: z range {z_min}..{z_max} outside 1..{cap}{}",
            if allow_wide { "" } else { " (use --allow-wide)" }
        );
        return 2;
    }
    if samples < 2 {
        eprintln!("error: samples must be at least 2");
        return 2;
    }

    let mut csv = String::from("z,phi,g\n");
    for z in z_min..=z_max {
        for (phi, g) in figure::curve_rows(kind, z, samples) {
            csv.push_str(&format!("{z},{phi:.16e},{g:.16e}\n"));
        }
    }
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, csv) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{csv}"),
    }
    0
}

fn parse_z_range(text: &str) -> Result<(u32, u32), String> {
    let int = |s: &str| {
        s.parse::<u32>()
            .map_err(|e| format!("bad z bound {s}: {e}"))
    };
    if let Some((lo, hi)) = text.split_once("..") {
        Ok((int(lo)?, int(hi)?))
    } else {
        let z = int(text)?;
        Ok((z, z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_list_parsing() {
        assert_eq!(parse_values("0.5,1,2").unwrap(), vec![0.5, 1.0, 2.0]);
        assert_eq!(parse_values("1..3").unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(
            parse_values("0.5..2:0.5").unwrap(),
            vec![0.5, 1.0, 1.5, 2.0]
        );
        assert!(parse_values("a,b").is_err());
        assert!(parse_values("3..1").is_err());
        assert!(parse_values("1..2:-1").is_err());
    }

    #[test]
    fn z_range_parsing() {
        assert_eq!(parse_z_range("1..10").unwrap(), (1, 10));
        assert_eq!(parse_z_range("4").unwrap(), (4, 4));
        assert!(parse_z_range("x..2").is_err());
    }
}
