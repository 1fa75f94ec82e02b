//! Matrix exponential by scaling and squaring.

use num_complex::Complex64;

use super::CMatrix;

/// exp(M): M is scaled by 2^{−s} until its induced 1-norm is at most 1/2,
/// the Taylor series is summed to a relative term size below 1e−18, and the
/// result is squared s times. No Padé tables; the inputs here have modest
/// norm and the plain series at norm ≤ 1/2 converges fast.
pub fn matrix_exponential(m: &CMatrix) -> CMatrix {
    let n = m.dim();
    let norm = m.induced_one_norm();
    let s = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    // 2^{−s} is exact in binary floating point.
    let x = m.scale(Complex64::new(1.0 / 2f64.powi(s as i32), 0.0));

    let mut acc = CMatrix::identity(n);
    let mut term = CMatrix::identity(n);
    for k in 1..=80u32 {
        term = (&term * &x).scale(Complex64::new(1.0 / f64::from(k), 0.0));
        acc = &acc + &term;
        if term.induced_one_norm() <= 1e-18 * acc.induced_one_norm() {
            break;
        }
    }
    let mut result = acc;
    for _ in 0..s {
        result = &result * &result;
    }
    result
}
