//! The two verification sweeps behind the command line: exact symbolic
//! identities up to a cutoff order, and seeded numerical trials of the
//! product formula. Each case is independent and self-describing.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::cyclic::cyclic_trace;
use crate::formulas::{
    build_x_m, build_z_m, verify_bigraded_decomposition, verify_binomial_expansion,
    verify_txtilde_derivative,
};
use crate::matnum::{
    detm_report, product_formula_residual, random_test_matrix, schatten_norm, trace_identity_check,
    CMatrix, DetmMethod,
};
use crate::parallel::map_cases;

/// One verification case: what ran, with which parameters, and how it
/// came out. `residual` is the measured quantity for numerical cases;
/// `term_count` sizes the polynomial for symbolic ones; `error` records
/// an operation that failed outright (eigensolver breakdown, bad input)
/// rather than a tolerance breach.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseResult {
    pub name: String,
    pub parameters: serde_json::Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub term_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CaseResult {
    fn symbolic(name: &str, parameters: serde_json::Value, pass: bool, terms: usize) -> Self {
        CaseResult {
            name: name.to_string(),
            parameters,
            pass,
            residual: None,
            term_count: Some(terms),
            error: None,
        }
    }

    fn numeric(name: &str, parameters: serde_json::Value, pass: bool, residual: f64) -> Self {
        CaseResult {
            name: name.to_string(),
            parameters,
            pass,
            residual: Some(residual),
            term_count: None,
            error: None,
        }
    }

    fn failed(name: &str, parameters: serde_json::Value, error: String) -> Self {
        CaseResult {
            name: name.to_string(),
            parameters,
            pass: false,
            residual: None,
            term_count: None,
            error: Some(error),
        }
    }
}

enum SymbolicCase {
    Binomial(u32),
    CommutatorTrace(u32),
    DegreeWindow(u32),
    DerivativeReplay(u32),
    Bigraded(u32),
}

/// Exact identities for every applicable index up to `max_m`: the subset
/// expansion of (a+b+ab)^j, vanishing cyclic trace of Z_m, the degree
/// window of X_m, the derivative replay of the trace identity, and the
/// bigraded decomposition of Z_m. All checks are in rational arithmetic;
/// pass means exact equality, never closeness.
pub fn run_symbolic(max_m: u32, parallel: bool) -> Vec<CaseResult> {
    assert!(max_m >= 1, "cutoff order starts at 1");
    let mut cases = Vec::new();
    for j in 1..=max_m {
        cases.push(SymbolicCase::Binomial(j));
    }
    for m in 1..=max_m {
        cases.push(SymbolicCase::CommutatorTrace(m));
    }
    for m in 1..=max_m {
        cases.push(SymbolicCase::DegreeWindow(m));
    }
    for m in 1..=max_m {
        cases.push(SymbolicCase::DerivativeReplay(m));
    }
    for m in 1..=max_m {
        cases.push(SymbolicCase::Bigraded(m));
    }
    map_cases(cases, parallel, run_symbolic_case)
}

fn run_symbolic_case(case: SymbolicCase) -> CaseResult {
    match case {
        SymbolicCase::Binomial(j) => {
            let power = crate::freealg::sum_a_b_ab().pow(j);
            CaseResult::symbolic(
                "binomial-expansion",
                json!({ "j": j }),
                verify_binomial_expansion(j),
                power.term_count(),
            )
        }
        SymbolicCase::CommutatorTrace(m) => match build_z_m(m) {
            Ok(z) => CaseResult::symbolic(
                "commutator-trace",
                json!({ "m": m }),
                cyclic_trace(&z).is_zero(),
                z.term_count(),
            ),
            Err(e) => CaseResult::failed("commutator-trace", json!({ "m": m }), e.to_string()),
        },
        SymbolicCase::DegreeWindow(m) => {
            let x = build_x_m(m);
            let pass = if m == 1 {
                x.is_zero()
            } else {
                x.degree_window()
                    .map(|(lo, hi)| lo == m as usize && hi == 2 * m as usize - 2)
                    .unwrap_or(false)
            };
            CaseResult::symbolic("degree-window", json!({ "m": m }), pass, x.term_count())
        }
        SymbolicCase::DerivativeReplay(m) => CaseResult::symbolic(
            "derivative-replay",
            json!({ "m": m }),
            verify_txtilde_derivative(m),
            build_x_m(m).term_count(),
        ),
        SymbolicCase::Bigraded(m) => match build_z_m(m) {
            Ok(z) => CaseResult::symbolic(
                "bigraded-decomposition",
                json!({ "m": m }),
                verify_bigraded_decomposition(m),
                z.term_count(),
            ),
            Err(e) => {
                CaseResult::failed("bigraded-decomposition", json!({ "m": m }), e.to_string())
            }
        },
    }
}

/// Parameters of the seeded numerical sweep. Trial t draws A from seed
/// `seed + 2t` and B from `seed + 2t + 1`, both rescaled to the target
/// operator norm.
#[derive(Debug, Clone, Copy)]
pub struct NumericParams {
    pub dim: usize,
    pub max_m: u32,
    pub trials: u32,
    pub seed: u64,
    pub norm: f64,
    pub tol: f64,
}

enum NumericCase {
    ProductFormula { trial: u32, m: u32 },
    CrossPath { trial: u32, m: u32 },
    TraceIdentity { trial: u32, m: u32 },
}

/// Numerical trials of the product formula. For each trial and each
/// order m: the relative product-formula residual, the spread of det_m
/// across its three routes, and the normalized trace-identity gap. Pass
/// means the measured quantity is below `tol`.
pub fn run_numeric(params: &NumericParams, parallel: bool) -> Vec<CaseResult> {
    assert!(params.dim >= 1 && params.trials >= 1 && params.max_m >= 1);
    let mut cases = Vec::new();
    for trial in 0..params.trials {
        for m in 1..=params.max_m {
            cases.push(NumericCase::ProductFormula { trial, m });
        }
        for m in 1..=params.max_m {
            cases.push(NumericCase::CrossPath { trial, m });
        }
        for m in 1..=params.max_m {
            cases.push(NumericCase::TraceIdentity { trial, m });
        }
    }
    let p = *params;
    map_cases(cases, parallel, move |case| run_numeric_case(&p, case))
}

fn trial_matrices(p: &NumericParams, trial: u32) -> (CMatrix, CMatrix) {
    let a = random_test_matrix(p.dim, p.norm, p.seed + 2 * u64::from(trial));
    let b = random_test_matrix(p.dim, p.norm, p.seed + 2 * u64::from(trial) + 1);
    (a, b)
}

fn run_numeric_case(p: &NumericParams, case: NumericCase) -> CaseResult {
    match case {
        NumericCase::ProductFormula { trial, m } => {
            let (a, b) = trial_matrices(p, trial);
            let params = json!({ "trial": trial, "m": m });
            match product_formula_residual(&a, &b, m) {
                Ok(r) => CaseResult::numeric("product-formula", params, r < p.tol, r),
                Err(e) => CaseResult::failed("product-formula", params, e.to_string()),
            }
        }
        NumericCase::CrossPath { trial, m } => {
            let (a, _) = trial_matrices(p, trial);
            let params = json!({ "trial": trial, "m": m });
            match detm_report(&a, m, DetmMethod::All) {
                Ok(report) => CaseResult::numeric(
                    "detm-cross-path",
                    params,
                    report.cross_path_spread < p.tol,
                    report.cross_path_spread,
                ),
                Err(e) => CaseResult::failed("detm-cross-path", params, e.to_string()),
            }
        }
        NumericCase::TraceIdentity { trial, m } => {
            let (a, b) = trial_matrices(p, trial);
            let params = json!({ "trial": trial, "m": m });
            match trace_identity_check(&a, &b, m) {
                Ok(gap) => {
                    // Normalize by the natural growth of the inserted
                    // polynomials in the trace norms of the arguments.
                    let one = schatten_norm(&a, 1.0).expect("exponent 1 is valid");
                    let other = schatten_norm(&b, 1.0).expect("exponent 1 is valid");
                    let scale = one.max(other).max(1.0).powi(2 * m as i32);
                    let normalized = gap / scale;
                    CaseResult::numeric("trace-identity", params, normalized < p.tol, normalized)
                }
                Err(e) => CaseResult::failed("trace-identity", params, e.to_string()),
            }
        }
    }
}
