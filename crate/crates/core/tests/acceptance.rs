//! Acceptance suite: every library-level criterion with its pinned
//! tolerance, one pass/fail line per criterion. The CLI criterion lives in
//! the CLI crate's own integration tests.

use bessel_reps::laplace::{
    laplace_j0_numeric, laplace_j_alpha_closed, laplace_j_alpha_numeric, laplace_special_case,
};
use bessel_reps::reps::{j0_kernel_closed, j0_kernel_partial_sum};
use bessel_reps::verify::{run_identity, Identity, SweepGrid, VerifyConfig};
use bessel_reps::{Order, QuadSpec};
use std::time::Instant;

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_1_lipschitz() {
    let started = Instant::now();
    let spec = QuadSpec::default();

    let point = laplace_j0_numeric(3.0, 4.0, &spec).unwrap();
    let point_ok = (point.value - 0.2).abs() <= 1e-8;

    let grid = SweepGrid::default_for(Identity::Lipschitz);
    let rep = run_identity(&grid, &VerifyConfig::default()).unwrap();
    let elapsed = started.elapsed();
    let pass = point_ok && rep.all_pass() && elapsed.as_secs_f64() < 5.0;
    report(
        "1 (lipschitz)",
        pass,
        &format!(
            "|I(3,4)-0.2| = {:.2e}, grid {}/{} pass, {:.2}s",
            (point.value - 0.2).abs(),
            rep.pass_count(),
            rep.total(),
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_2_damped_first_order_moment() {
    let spec = QuadSpec::default();
    let order = Order::new(1.0).unwrap();
    let numeric = laplace_j_alpha_numeric(order, 3.0, 4.0, &spec).unwrap();
    let closed = laplace_j_alpha_closed(order, 3.0, 4.0).unwrap();
    let num_ok = (numeric.value - 0.5).abs() <= 1e-8;
    let closed_ok = (closed - 0.5).abs() <= 1e-12;
    report(
        "2 (alpha=1, a=3, b=4)",
        num_ok && closed_ok,
        &format!(
            "numeric dev {:.2e}, closed dev {:.2e}",
            (numeric.value - 0.5).abs(),
            (closed - 0.5).abs()
        ),
    );
}

#[test]
fn criterion_3_undamped_second_order_moment() {
    let spec = QuadSpec::default();
    let order = Order::new(2.0).unwrap();
    let numeric = laplace_j_alpha_numeric(order, 0.0, 3.0, &spec).unwrap();
    let closed = laplace_special_case(order, 0.0, 3.0).unwrap();
    let num_ok = (numeric.value - 1.0).abs() <= 1e-6;
    let closed_ok = (closed - 1.0).abs() <= 1e-13;
    report(
        "3 (alpha=2, a=0, b=3)",
        num_ok && closed_ok,
        &format!(
            "numeric dev {:.2e}, closed dev {:.2e}",
            (numeric.value - 1.0).abs(),
            (closed - 1.0).abs()
        ),
    );
}

#[test]
fn criterion_4_representations_vs_series() {
    let started = Instant::now();
    let cfg = VerifyConfig::default();
    let j = run_identity(&SweepGrid::default_for(Identity::RepVsSeriesJ), &cfg).unwrap();
    let i = run_identity(&SweepGrid::default_for(Identity::RepVsSeriesI), &cfg).unwrap();
    let elapsed = started.elapsed();

    let single = j.max_rel_err_in("single").max(i.max_rel_err_in("single"));
    let reduction = j
        .max_rel_err_in("reduction")
        .max(i.max_rel_err_in("reduction"));
    let double = j.max_rel_err_in("double").max(i.max_rel_err_in("double"));

    let pass = j.all_pass()
        && i.all_pass()
        && single <= 1e-9
        && reduction <= 1e-9
        && double <= 1e-7
        && elapsed.as_secs_f64() < 60.0;
    report(
        "4 (rep-vs-series)",
        pass,
        &format!(
            "max rel err: single {single:.2e}, reduction {reduction:.2e}, double {double:.2e}, {:.1}s",
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_5_k_triangle_at_half_order() {
    let rep = run_identity(
        &SweepGrid::default_for(Identity::KTriangle),
        &VerifyConfig::default(),
    )
    .unwrap();
    // pairwise within 1e-8 at every z
    let max_abs = rep.points.iter().fold(0.0f64, |m, p| m.max(p.abs_err));
    let pass = rep.all_pass() && max_abs <= 1e-8;
    report(
        "5 (k-triangle)",
        pass,
        &format!("max pairwise deviation {max_abs:.2e}"),
    );
}

#[test]
fn criterion_6_gaussian_cosine_kernel() {
    let rep = run_identity(
        &SweepGrid::default_for(Identity::GaussianKernel),
        &VerifyConfig::default(),
    )
    .unwrap();
    let kernel_max = rep.max_abs_err_in("cos-vs-exp");
    let inner_max = rep.max_abs_err_in("inner");
    let kernel_n = rep.points.iter().filter(|p| p.family == "cos-vs-exp").count();
    let inner_n = rep.points.iter().filter(|p| p.family == "inner").count();
    let pass = rep.all_pass()
        && kernel_n == 36
        && inner_n == 16
        && kernel_max <= 1e-9
        && inner_max <= 1e-10;
    report(
        "6 (gaussian kernel)",
        pass,
        &format!(
            "kernel grid max {kernel_max:.2e} over {kernel_n} pts, inner max {inner_max:.2e} over {inner_n} pts"
        ),
    );
}

#[test]
fn criterion_7_hardy_identities() {
    let started = Instant::now();
    let cfg = VerifyConfig::default();
    let variant = run_identity(&SweepGrid::default_for(Identity::HardyVariant), &cfg).unwrap();
    let original = run_identity(&SweepGrid::default_for(Identity::HardyOriginal), &cfg).unwrap();
    let elapsed = started.elapsed();
    let vmax = variant.points.iter().fold(0.0f64, |m, p| m.max(p.abs_err));
    let omax = original.points.iter().fold(0.0f64, |m, p| m.max(p.abs_err));
    let pass = vmax <= 1e-6 && omax <= 1e-6 && elapsed.as_secs_f64() < 120.0;
    report(
        "7 (hardy)",
        pass,
        &format!(
            "variant max dev {vmax:.2e}, original max dev {omax:.2e}, {:.1}s",
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_8_scalar_identities() {
    let cfg = VerifyConfig::default();
    let dup = run_identity(&SweepGrid::default_for(Identity::Duplication), &cfg).unwrap();
    let dup_max = dup.max_rel_err();

    let form = run_identity(&SweepGrid::default_for(Identity::FormEquivalence), &cfg).unwrap();
    let form_max = form.points.iter().fold(0.0f64, |m, p| m.max(p.abs_err));

    let mut kernel_max = 0.0f64;
    for &z in &[0.1, 1.0, 4.0, 10.0] {
        let brute = j0_kernel_partial_sum(z, 60).unwrap();
        let closed = j0_kernel_closed(z).unwrap();
        kernel_max = kernel_max.max((brute - closed).abs());
    }

    let pass = dup.all_pass()
        && dup_max <= 1e-12
        && form.total() == 1000
        && form_max <= 1e-14
        && kernel_max <= 1e-12;
    report(
        "8 (scalar identities)",
        pass,
        &format!(
            "duplication max rel {dup_max:.2e}, form-equivalence max {form_max:.2e} on {} pts, kernel-sum max {kernel_max:.2e}",
            form.total()
        ),
    );
}
