//! End-to-end tests of the binary: exit codes, output determinism, config
//! handling, the figure-data round-trip, and the full default verification
//! sweep.

use bessel_reps::special::{bessel_i_series, bessel_j_series};
use bessel_reps::verify::Identity;
use bessel_reps::Order;
use std::process::{Command, Output};
use std::time::Instant;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_bessel-reps"));
    c.env_remove("BESSEL_REPS_CONFIG");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn bessel-reps")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn value_line(out: &Output) -> f64 {
    stdout(out)
        .lines()
        .find_map(|l| l.strip_prefix("value = ").map(|v| v.parse::<f64>().unwrap()))
        .expect("value line present")
}

#[test]
fn eval_prints_value_and_estimate() {
    let out = run(&["eval", "j0-rep", "--x", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("function = j0-rep"));
    assert!(text.contains("error_estimate = "));
    assert!(text.contains("evals = "));
    assert!((value_line(&out) - 0.7651976865579666).abs() < 1e-9);
}

#[test]
fn eval_closed_forms() {
    let out = run(&["eval", "k-half", "--x", "1"]);
    assert!(out.status.success());
    assert!((value_line(&out) - 0.46106850444789456).abs() < 1e-14);
    assert!(stdout(&out).contains("error_estimate = 0.0000000000000000e0"));

    let out = run(&["eval", "laplace-special", "--alpha", "1", "--a", "3", "--b", "4"]);
    assert!(out.status.success());
    assert_eq!(value_line(&out), 0.5);
}

#[test]
fn eval_domain_error_exits_2() {
    let out = run(&["eval", "j-reduction", "--alpha", "-1", "--x", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("alpha"), "stderr: {err}");
}

#[test]
fn eval_missing_parameter_exits_2() {
    let out = run(&["eval", "j-series", "--x", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["eval", "no-such-fn", "--x", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_output_is_byte_identical() {
    let a = run(&["eval", "k-basset", "--alpha", "0.5", "--z", "2"]);
    let b = run(&["eval", "k-basset", "--alpha", "0.5", "--z", "2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_custom_grid_and_csv() {
    let csv_path = std::env::temp_dir().join(format!("bessel_reps_test_{}.csv", std::process::id()));
    let out = run(&[
        "verify",
        "lipschitz",
        "--a",
        "0.5,1,2,5",
        "--b",
        "0.5,1,2,5",
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("summary: points=16 pass=16"));
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    std::fs::remove_file(&csv_path).ok();
    assert_eq!(csv.lines().count(), 17);
    assert!(csv.starts_with("identity,family,params"));
}

#[test]
fn verify_invalid_grid_exits_2() {
    let out = run(&["verify", "lipschitz", "--b", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "no-such-identity"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "duplication", "--x", "1", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_applies_and_flags_override() {
    let cfg_path = std::env::temp_dir().join(format!("bessel_reps_cfg_{}.conf", std::process::id()));
    // a zero multiplier with zero floor fails every duplication point
    std::fs::write(&cfg_path, "tol_mult = 0\nabs_floor = 0\n").unwrap();

    let out = bin()
        .env("BESSEL_REPS_CONFIG", &cfg_path)
        .args(["verify", "duplication"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "config not applied");

    // explicit flag wins over the config file
    let out = bin()
        .env("BESSEL_REPS_CONFIG", &cfg_path)
        .args(["verify", "duplication", "--tol-mult", "1", "--abs-floor", "1e-12"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    std::fs::write(&cfg_path, "mystery_knob = 3\n").unwrap();
    let out = bin()
        .env("BESSEL_REPS_CONFIG", &cfg_path)
        .args(["verify", "duplication"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    std::fs::remove_file(&cfg_path).ok();
}

#[test]
fn figure_data_minimal_sampling() {
    let out = run(&["figure-data", "j0", "--z", "1..1", "--samples", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "z,phi,g");
    assert_eq!(rows.len(), 4);
    // phi hits 0, pi/2, pi; the sin(phi) factor zeroes both ends
    let first: Vec<&str> = rows[1].split(',').collect();
    assert_eq!(first[1].parse::<f64>().unwrap(), 0.0);
    assert_eq!(first[2].parse::<f64>().unwrap(), 0.0);
    let last: Vec<&str> = rows[3].split(',').collect();
    assert!((last[1].parse::<f64>().unwrap() - std::f64::consts::PI).abs() < 1e-15);
    assert!(last[2].parse::<f64>().unwrap().abs() < 1e-15);
}

#[test]
fn figure_data_range_validation() {
    assert_eq!(run(&["figure-data", "j0", "--z", "0..5"]).status.code(), Some(2));
    assert_eq!(run(&["figure-data", "j0", "--z", "1..11"]).status.code(), Some(2));
    assert_eq!(
        run(&["figure-data", "j0", "--z", "1..11", "--allow-wide"]).status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["figure-data", "j0", "--z", "1..1", "--samples", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["figure-data", "y0"]).status.code(), Some(2));
}

fn parse_figure_csv(text: &str) -> Vec<(u32, f64, f64)> {
    text.lines()
        .skip(1)
        .map(|l| {
            let cols: Vec<&str> = l.split(',').collect();
            (
                cols[0].parse().unwrap(),
                cols[1].parse().unwrap(),
                cols[2].parse().unwrap(),
            )
        })
        .collect()
}

fn trapezoid_by_curve(rows: &[(u32, f64, f64)]) -> Vec<(u32, f64)> {
    let mut out: Vec<(u32, f64)> = Vec::new();
    let mut z_now = None;
    let mut prev: Option<(f64, f64)> = None;
    for &(z, phi, g) in rows {
        if z_now != Some(z) {
            z_now = Some(z);
            out.push((z, 0.0));
            prev = None;
        }
        if let Some((p_phi, p_g)) = prev {
            out.last_mut().unwrap().1 += 0.5 * (phi - p_phi) * (p_g + g);
        }
        prev = Some((phi, g));
    }
    out
}

/// Acceptance: `verify` over every registered identity with default grids
/// exits 0, and the re-parsed figure-data trapezoid reproduces the series
/// oracles within 1e-4 for z = 1..10, all inside the wall-clock budget.
#[test]
fn criterion_9_cli_round_trip() {
    let started = Instant::now();

    for id in Identity::ALL {
        let out = run(&["verify", id.name()]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "verify {} failed:\n{}",
            id.name(),
            String::from_utf8_lossy(&out.stderr)
        );
    }

    let o = Order::new(0.0).unwrap();
    for kind in ["j0", "i0"] {
        let out = run(&["figure-data", kind, "--z", "1..10", "--samples", "512"]);
        assert!(out.status.success());
        let sums = trapezoid_by_curve(&parse_figure_csv(&stdout(&out)));
        assert_eq!(sums.len(), 10);
        for (z, sum) in sums {
            let oracle = if kind == "j0" {
                bessel_j_series(o, z as f64).unwrap().value
            } else {
                bessel_i_series(o, z as f64).unwrap().value
            };
            let tol = if kind == "j0" { 1e-4 } else { 1e-4 * oracle };
            assert!(
                (sum - oracle).abs() < tol,
                "{kind} z={z}: trapezoid {sum} vs oracle {oracle}"
            );
        }
    }

    let elapsed = started.elapsed().as_secs_f64();
    println!(
        "criterion 9 (cli): PASS (all identities exit 0, figure-data round-trip within 1e-4, {elapsed:.1}s)"
    );
    assert!(elapsed < 300.0, "full CLI sweep took {elapsed:.1}s");
}
