//! Regularized determinants det_m(I + A) along three independent routes:
//! LU of the convergence-factor product, the spectral product, and the
//! tail log-series. The routes share no intermediate results.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{
    eigenvalues_qr, lu_determinant, matrix_exponential, schatten_norm, CMatrix, MatNumError,
};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// det_m(I+A) = det((I+A)·exp(Σ_{j=1}^{m−1} (−A)^j/j)), the defining
/// route. m = 1 reduces to the plain Fredholm determinant det(I+A).
pub fn detm_regularized(a: &CMatrix, m: u32) -> Complex64 {
    assert!(m >= 1, "regularization order starts at 1");
    let n = a.dim();
    let mut factor = CMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            factor[(i, j)] += a[(i, j)];
        }
    }
    let exponent = convergence_exponent(a, m);
    lu_determinant(&(&factor * &matrix_exponential(&exponent)))
}

/// det_m(I+A) = Π_λ (1+λ)·exp(Σ_{j=1}^{m−1} (−λ)^j/j) over the spectrum.
/// Zero eigenvalues contribute (1+0)·exp(0) = 1, so the product over all
/// eigenvalues equals the product over nonzero ones.
pub fn detm_spectral(a: &CMatrix, m: u32) -> Result<Complex64, MatNumError> {
    assert!(m >= 1, "regularization order starts at 1");
    let mut det = ONE;
    for lambda in eigenvalues_qr(a)? {
        let mut exponent = Complex64::new(0.0, 0.0);
        let mut power = ONE;
        for j in 1..m {
            power *= -lambda;
            exponent += power / Complex64::new(f64::from(j), 0.0);
        }
        det *= (ONE + lambda) * exponent.exp();
    }
    Ok(det)
}

/// det_m(I+A) = exp(−Σ_{j=m}^∞ Tr((−A)^j)/j), truncated where the tail
/// bound |Tr(−A)^j| ≤ ‖A^m‖₁·‖A‖^{j−m} pushes the remainder below tol.
/// Valid only for operator norm below one.
pub fn detm_logseries(a: &CMatrix, m: u32, tol: f64) -> Result<Complex64, MatNumError> {
    Ok((-log_series_remainder(a, m, tol)?).exp())
}

/// |det_m(I + A) − 1| evaluated as |expm1(−S)| on the truncated tail sum
/// S. Keeps precision where det_m is within rounding of 1, which the
/// difference of two determinant evaluations cannot.
pub fn detm_log_deviation(a: &CMatrix, m: u32, tol: f64) -> Result<f64, MatNumError> {
    Ok(cexpm1(-log_series_remainder(a, m, tol)?).norm())
}

/// S = Σ_{j=m}^{J} Tr((−A)^j)/j with J from the geometric tail bound
/// ‖A^m‖₁·‖A‖^{J+1−m} / ((J+1)(1−‖A‖)) < tol.
fn log_series_remainder(a: &CMatrix, m: u32, tol: f64) -> Result<Complex64, MatNumError> {
    assert!(m >= 1, "regularization order starts at 1");
    assert!(tol > 0.0, "tolerance must be positive");
    let norm = schatten_norm(a, f64::INFINITY)?;
    if norm >= 1.0 {
        return Err(MatNumError::NormTooLarge(norm));
    }

    let neg = -a;
    let mut power = CMatrix::identity(a.dim());
    for _ in 0..m {
        power = &power * &neg;
    }
    // power = (−A)^m from here on.
    let trace_norm = schatten_norm(&power, 1.0)?;
    if trace_norm == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }

    let mut sum = Complex64::new(0.0, 0.0);
    let mut j = m;
    loop {
        sum += power.trace() / Complex64::new(f64::from(j), 0.0);
        let tail = trace_norm * norm.powi((j + 1 - m) as i32) / (f64::from(j + 1) * (1.0 - norm));
        if tail < tol {
            return Ok(sum);
        }
        power = &power * &neg;
        j += 1;
    }
}

/// Σ_{j=1}^{m−1} (−A)^j / j, the logarithm of the convergence factor.
fn convergence_exponent(a: &CMatrix, m: u32) -> CMatrix {
    let n = a.dim();
    let neg = -a;
    let mut power = CMatrix::identity(n);
    let mut sum = CMatrix::zeros(n);
    for j in 1..m {
        power = &power * &neg;
        let scaled = power.scale(Complex64::new(1.0 / f64::from(j), 0.0));
        sum = &sum + &scaled;
    }
    sum
}

/// exp(z) − 1 without cancellation near z = 0.
fn cexpm1(z: Complex64) -> Complex64 {
    if z.norm() > 0.5 {
        return z.exp() - ONE;
    }
    let mut term = z;
    let mut sum = z;
    for k in 2..64 {
        term *= z / Complex64::new(f64::from(k), 0.0);
        sum += term;
        if term.norm() <= 1e-18 * sum.norm() {
            break;
        }
    }
    sum
}

/// Which routes a determinant report should populate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetmMethod {
    Lu,
    Eig,
    Series,
    All,
}

/// Values of det_m along each requested route, as [re, im] pairs, plus
/// the largest pairwise relative spread among the populated values.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DetmReport {
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_regularized: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_spectral: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_logseries: Option<[f64; 2]>,
    pub cross_path_spread: f64,
}

/// Runs the requested routes. `All` populates every applicable path: the
/// series route is skipped silently when the operator norm is not below
/// one, but an eigensolver failure is an error, not a gap in the report.
pub fn detm_report(a: &CMatrix, m: u32, method: DetmMethod) -> Result<DetmReport, MatNumError> {
    const SERIES_TOL: f64 = 1e-12;
    let mut regularized = None;
    let mut spectral = None;
    let mut logseries = None;

    match method {
        DetmMethod::Lu => regularized = Some(detm_regularized(a, m)),
        DetmMethod::Eig => spectral = Some(detm_spectral(a, m)?),
        DetmMethod::Series => logseries = Some(detm_logseries(a, m, SERIES_TOL)?),
        DetmMethod::All => {
            regularized = Some(detm_regularized(a, m));
            spectral = Some(detm_spectral(a, m)?);
            if schatten_norm(a, f64::INFINITY)? < 1.0 {
                logseries = Some(detm_logseries(a, m, SERIES_TOL)?);
            }
        }
    }

    let values: Vec<Complex64> = [regularized, spectral, logseries]
        .into_iter()
        .flatten()
        .collect();
    let mut spread = 0.0f64;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let denom = values[i].norm().max(values[j].norm()).max(1e-300);
            spread = spread.max((values[i] - values[j]).norm() / denom);
        }
    }

    let pair = |v: Option<Complex64>| v.map(|z| [z.re, z.im]);
    Ok(DetmReport {
        m,
        value_regularized: pair(regularized),
        value_spectral: pair(spectral),
        value_logseries: pair(logseries),
        cross_path_spread: spread,
    })
}
