//! The acceptance gate: ten criteria covering the exact symbolic
//! identities and the numerical product-formula checks, each printing
//! one pass/fail line. Tolerances are the contract; loosening them here
//! defeats the point of the gate.

use std::time::Instant;

use num_complex::Complex64;
use regdet::cyclic::{cyclic_trace, is_commutator_sum};
use regdet::formulas::{
    build_x_m, build_z_bigraded, build_z_m, verify_bigraded_decomposition,
    verify_binomial_expansion, verify_txtilde_derivative,
};
use regdet::matnum::{
    detm_log_deviation, detm_logseries, detm_regularized, detm_spectral, eigenvalues_qr,
    lu_determinant, matrix_exponential, product_formula_residual, random_test_matrix,
    schatten_norm, trace_identity_check, CMatrix,
};

fn conclude(number: u32, name: &str, failures: &[String]) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {number:02} {name}: {verdict}");
    assert!(
        failures.is_empty(),
        "criterion {number:02} {name} failed:\n{}",
        failures.join("\n")
    );
}

/// Trial t of the standard sweep: dimension 6, operator norm 0.4, seeds
/// 42 + 2t and 43 + 2t.
fn sweep_pair(trial: u64) -> (CMatrix, CMatrix) {
    (
        random_test_matrix(6, 0.4, 42 + 2 * trial),
        random_test_matrix(6, 0.4, 43 + 2 * trial),
    )
}

#[test]
fn criterion_01_commutator_trace_exact() {
    let mut failures = Vec::new();
    let start = Instant::now();
    for m in 1..=8 {
        match build_z_m(m) {
            Ok(z) => {
                if !cyclic_trace(&z).is_zero() {
                    failures.push(format!("m={m}: cyclic trace of Z_m not exactly zero"));
                }
            }
            Err(e) => failures.push(format!("m={m}: {e}")),
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 60.0 {
        failures.push(format!("runtime {elapsed:.1}s exceeds 60s"));
    }
    conclude(1, "commutator trace vanishes exactly", &failures);
}

#[test]
fn criterion_02_subset_expansion_exact() {
    let mut failures = Vec::new();
    for j in 1..=8 {
        if !verify_binomial_expansion(j) {
            failures.push(format!("j={j}: subset expansion of (a+b+ab)^j broken"));
        }
    }
    conclude(2, "subset expansion is an exact identity", &failures);
}

#[test]
fn criterion_03_bigraded_blocks() {
    let mut failures = Vec::new();
    for k1 in 1..8u32 {
        for k2 in 1..(8 - k1) {
            if !is_commutator_sum(&build_z_bigraded(k1, k2)) {
                failures.push(format!("block ({k1},{k2}) is not a commutator sum"));
            }
        }
    }
    for m in 1..=8 {
        if !verify_bigraded_decomposition(m) {
            failures.push(format!("m={m}: blocks do not reassemble Z_m"));
        }
    }
    conclude(3, "bigraded blocks vanish and reassemble", &failures);
}

#[test]
fn criterion_04_derivative_replay() {
    let mut failures = Vec::new();
    for m in 1..=8 {
        if !verify_txtilde_derivative(m) {
            failures.push(format!("m={m}: derivative replay failed"));
        }
    }
    conclude(4, "derivative replay of the trace identity", &failures);
}

#[test]
fn criterion_05_degree_window() {
    let mut failures = Vec::new();
    if !build_x_m(1).is_zero() {
        failures.push("m=1: correction polynomial should vanish".to_string());
    }
    for m in 2..=8u32 {
        match build_x_m(m).degree_window() {
            Ok((lo, hi)) => {
                if lo != m as usize || hi != 2 * m as usize - 2 {
                    failures.push(format!(
                        "m={m}: window [{lo},{hi}], want [{m},{}]",
                        2 * m - 2
                    ));
                }
            }
            Err(e) => failures.push(format!("m={m}: {e}")),
        }
    }
    conclude(5, "degree window of the correction", &failures);
}

#[test]
fn criterion_06_product_formula_sweep() {
    let mut failures = Vec::new();
    for trial in 0..20u64 {
        let (a, b) = sweep_pair(trial);
        for m in 1..=5 {
            match product_formula_residual(&a, &b, m) {
                Ok(r) => {
                    let bound = if m == 1 { 1e-12 } else { 1e-9 };
                    if r >= bound {
                        failures.push(format!("trial {trial} m={m}: residual {r:.3e}"));
                    }
                }
                Err(e) => failures.push(format!("trial {trial} m={m}: {e}")),
            }
        }
    }
    conclude(6, "product formula residual", &failures);
}

#[test]
fn criterion_07_cross_path_agreement() {
    let mut failures = Vec::new();
    let rel = |x: Complex64, y: Complex64| (x - y).norm() / x.norm().max(y.norm()).max(1e-300);
    for trial in 0..20u64 {
        let (a, b) = sweep_pair(trial);
        for matrix in [&a, &b] {
            for m in 1..=5 {
                let lu = detm_regularized(matrix, m);
                match detm_spectral(matrix, m) {
                    Ok(eig) => {
                        if rel(lu, eig) >= 1e-8 {
                            failures.push(format!(
                                "trial {trial} m={m}: spectral gap {:.3e}",
                                rel(lu, eig)
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("trial {trial} m={m}: {e}")),
                }
                match detm_logseries(matrix, m, 1e-12) {
                    Ok(series) => {
                        if rel(lu, series) >= 1e-9 {
                            failures.push(format!(
                                "trial {trial} m={m}: series gap {:.3e}",
                                rel(lu, series)
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("trial {trial} m={m}: {e}")),
                }
            }
        }
    }
    conclude(7, "det_m agrees across routes", &failures);
}

#[test]
fn criterion_08_order_of_vanishing() {
    // |det_m(I+zA) − 1| = O(z^m): the log-log slope over four decades of
    // z must reach the regularization order.
    let mut failures = Vec::new();
    let zs = [1e-1, 1e-2, 1e-3, 1e-4];
    for m in 2..=5u32 {
        let a = random_test_matrix(6, 1.0, 880 + u64::from(m));
        let mut points = Vec::new();
        for &z in &zs {
            let scaled = a.scale(Complex64::new(z, 0.0));
            match detm_log_deviation(&scaled, m, 1e-30) {
                Ok(d) if d > 0.0 => points.push((z.ln(), d.ln())),
                Ok(_) => failures.push(format!("m={m} z={z}: deviation collapsed to zero")),
                Err(e) => failures.push(format!("m={m} z={z}: {e}")),
            }
        }
        if points.len() == zs.len() {
            let n = points.len() as f64;
            let xbar = points.iter().map(|p| p.0).sum::<f64>() / n;
            let ybar = points.iter().map(|p| p.1).sum::<f64>() / n;
            let num: f64 = points.iter().map(|p| (p.0 - xbar) * (p.1 - ybar)).sum();
            let den: f64 = points.iter().map(|p| (p.0 - xbar).powi(2)).sum();
            let slope = num / den;
            if slope < f64::from(m) - 0.1 {
                failures.push(format!(
                    "m={m}: slope {slope:.3} below {}",
                    f64::from(m) - 0.1
                ));
            }
        }
    }
    conclude(8, "vanishing order of det_m(I+zA) - 1", &failures);
}

#[test]
fn criterion_09_trace_identity_sweep() {
    let mut failures = Vec::new();
    for trial in 0..20u64 {
        let (a, b) = sweep_pair(trial);
        let na = schatten_norm(&a, 1.0).expect("exponent 1 is valid");
        let nb = schatten_norm(&b, 1.0).expect("exponent 1 is valid");
        for m in 1..=5u32 {
            let bound = 1e-10 * na.max(nb).max(1.0).powi(2 * m as i32);
            match trace_identity_check(&a, &b, m) {
                Ok(gap) => {
                    if gap >= bound {
                        failures.push(format!("trial {trial} m={m}: gap {gap:.3e} vs {bound:.3e}"));
                    }
                }
                Err(e) => failures.push(format!("trial {trial} m={m}: {e}")),
            }
        }
    }
    conclude(9, "traces of both corrections agree", &failures);
}

#[test]
fn criterion_10_numerical_kernel_sanity() {
    let mut failures = Vec::new();

    for n in 2..=8usize {
        let m = random_test_matrix(n, 1.0, 1000 + n as u64);
        let k = random_test_matrix(n, 1.0, 2000 + n as u64);
        let lhs = lu_determinant(&(&m * &k));
        let rhs = lu_determinant(&m) * lu_determinant(&k);
        let rel = (lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(1e-300);
        if rel >= 1e-10 {
            failures.push(format!(
                "n={n}: determinant multiplicativity off by {rel:.3e}"
            ));
        }
    }

    for trial in 0..5u64 {
        let m = random_test_matrix(6, 1.0, 3000 + trial);
        match eigenvalues_qr(&m) {
            Ok(eigs) => {
                let sum: Complex64 = eigs.iter().sum();
                let rel = (sum - m.trace()).norm() / m.trace().norm().max(1.0);
                if rel >= 1e-9 {
                    failures.push(format!("trial {trial}: eigenvalue sum off by {rel:.3e}"));
                }
            }
            Err(e) => failures.push(format!("trial {trial}: {e}")),
        }
    }

    for (i, norm) in [0.5, 1.0, 3.0, 5.0].into_iter().enumerate() {
        let m = random_test_matrix(5, norm, 4000 + i as u64);
        let product = &matrix_exponential(&m) * &matrix_exponential(&-&m);
        let mut gap = 0.0f64;
        for r in 0..5 {
            for c in 0..5 {
                let want = if r == c { 1.0 } else { 0.0 };
                gap = gap.max((product[(r, c)] - Complex64::new(want, 0.0)).norm());
            }
        }
        if gap >= 1e-10 {
            failures.push(format!(
                "norm {norm}: exp(M)exp(-M) off identity by {gap:.3e}"
            ));
        }
    }

    for trial in 0..5u64 {
        let m = random_test_matrix(5, 2.0, 5000 + trial);
        let inf = schatten_norm(&m, f64::INFINITY).expect("infinity is valid");
        let two = schatten_norm(&m, 2.0).expect("exponent 2 is valid");
        let one = schatten_norm(&m, 1.0).expect("exponent 1 is valid");
        if !(inf <= two + 1e-12 && two <= one + 1e-12) {
            failures.push(format!("trial {trial}: Schatten monotonicity violated"));
        }
    }

    conclude(10, "numerical kernels are sane", &failures);
}
