//! Characteristic-polynomial route to det(I+M).

use num_complex::Complex64;

use super::CMatrix;

/// det(I+M) as the sum Σ_{k=0}^{n} e_k of the elementary symmetric
/// functions of the spectrum (the traces of the exterior powers Λ^k M),
/// by the Faddeev–LeVerrier recursion
/// B_0 = I; A_k = M·B_{k−1}; c_k = −Tr(A_k)/k; B_k = A_k + c_k·I;
/// e_k = (−1)^k c_k.
///
/// A cross-check for the LU route, not a primary path.
pub fn fredholm_series(m: &CMatrix) -> Complex64 {
    let n = m.dim();
    let mut b = CMatrix::identity(n);
    let mut sum = Complex64::new(1.0, 0.0);
    let mut sign = 1.0;
    for k in 1..=n {
        let a = m * &b;
        let c = -a.trace() / Complex64::new(k as f64, 0.0);
        b = a;
        for i in 0..n {
            b[(i, i)] += c;
        }
        sign = -sign;
        sum += Complex64::new(sign, 0.0) * c;
    }
    sum
}
