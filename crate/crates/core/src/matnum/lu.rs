//! Determinant by LU factorization with partial pivoting.

use num_complex::Complex64;

use super::CMatrix;

/// det(M): product of LU pivots, sign-corrected for row swaps. An exactly
/// singular matrix yields 0 (or a rounding-level value).
pub fn lu_determinant(m: &CMatrix) -> Complex64 {
    let n = m.dim();
    let mut a = m.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let (pivot_row, pivot_mag) = (col..n)
            .map(|r| (r, a[(r, col)].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .expect("column range is nonempty");
        if pivot_mag == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot_row != col {
            for j in 0..n {
                let tmp = a[(col, j)];
                a[(col, j)] = a[(pivot_row, j)];
                a[(pivot_row, j)] = tmp;
            }
            det = -det;
        }
        let pivot = a[(col, col)];
        det *= pivot;
        for r in col + 1..n {
            let factor = a[(r, col)] / pivot;
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in col + 1..n {
                let sub = factor * a[(col, j)];
                a[(r, j)] -= sub;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::super::random_test_matrix;
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn small_exact_cases() {
        assert_eq!(lu_determinant(&CMatrix::identity(3)), c(1.0, 0.0));
        assert_eq!(
            lu_determinant(&CMatrix::diagonal(&[c(2.0, 0.0), c(3.0, 0.0)])),
            c(6.0, 0.0)
        );
        let swap = CMatrix::from_data(2, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(lu_determinant(&swap), c(-1.0, 0.0));
        let singular =
            CMatrix::from_data(2, vec![c(1.0, 0.0), c(2.0, 0.0), c(2.0, 0.0), c(4.0, 0.0)]);
        assert!(lu_determinant(&singular).norm() < 1e-14);
    }

    #[test]
    fn determinant_is_multiplicative() {
        for n in 2..=8 {
            let a = random_test_matrix(n, 1.0, 1000 + n as u64);
            let b = random_test_matrix(n, 1.0, 2000 + n as u64);
            let lhs = lu_determinant(&(&a * &b));
            let rhs = lu_determinant(&a) * lu_determinant(&b);
            let rel = (lhs - rhs).norm() / rhs.norm().max(1e-300);
            assert!(rel < 1e-10, "n = {n}: relative error {rel}");
        }
    }
}
