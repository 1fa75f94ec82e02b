//! Singular values via cyclic Jacobi diagonalization of the Gram matrix
//! M*M, and Schatten norms built on them. Independent of the QR
//! eigensolver by construction.

use num_complex::Complex64;

use super::{CMatrix, MatNumError};

/// Singular values in decreasing order, computed as square roots of the
/// eigenvalues of the Hermitian matrix M*M. Jacobi rotations converge
/// unconditionally for Hermitian input; negatives created by roundoff are
/// clamped at zero before the square root.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    let n = m.dim();
    let mut h = &m.adjoint() * m;
    let target = 1e-15 * frobenius(&h);

    for _sweep in 0..50 {
        if off_diagonal_frobenius(&h) <= target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                jacobi_rotate(&mut h, p, q);
            }
        }
    }

    let mut svs: Vec<f64> = (0..n).map(|i| h[(i, i)].re.max(0.0).sqrt()).collect();
    svs.sort_by(|x, y| y.total_cmp(x));
    svs
}

/// Schatten p-norm (Σ σᵢᵖ)^{1/p}; p = ∞ gives the operator norm. Only
/// p ≥ 1 is a norm, so smaller exponents are rejected.
pub fn schatten_norm(m: &CMatrix, p: f64) -> Result<f64, MatNumError> {
    if p.is_nan() || p < 1.0 {
        return Err(MatNumError::InvalidExponent(p));
    }
    let svs = singular_values(m);
    if p.is_infinite() {
        return Ok(svs[0]);
    }
    Ok(svs.iter().map(|s| s.powf(p)).sum::<f64>().powf(1.0 / p))
}

fn frobenius(h: &CMatrix) -> f64 {
    let n = h.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            sum += h[(i, j)].norm_sqr();
        }
    }
    sum.sqrt()
}

fn off_diagonal_frobenius(h: &CMatrix) -> f64 {
    let n = h.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += h[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// One Hermitian Jacobi rotation zeroing h[p][q]. For the complex case
/// the pivot's phase is factored out so the angle equation reduces to the
/// real symmetric one, solved by the stable small root of
/// t² − 2τt − 1 = 0.
fn jacobi_rotate(h: &mut CMatrix, p: usize, q: usize) {
    let pivot = h[(p, q)];
    let rho = pivot.norm();
    if rho == 0.0 {
        return;
    }
    let u = pivot / Complex64::new(rho, 0.0);
    let tau = (h[(q, q)].re - h[(p, p)].re) / (2.0 * rho);
    let sign = if tau >= 0.0 { 1.0 } else { -1.0 };
    let t = -sign / (tau.abs() + (1.0 + tau * tau).sqrt());
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let (cc, su) = (Complex64::new(c, 0.0), Complex64::new(s, 0.0) * u);

    let n = h.dim();
    // Columns p, q.
    for i in 0..n {
        let (hip, hiq) = (h[(i, p)], h[(i, q)]);
        h[(i, p)] = cc * hip + su.conj() * hiq;
        h[(i, q)] = -su * hip + cc * hiq;
    }
    // Rows p, q.
    for j in 0..n {
        let (hpj, hqj) = (h[(p, j)], h[(q, j)]);
        h[(p, j)] = cc * hpj + su * hqj;
        h[(q, j)] = -su.conj() * hpj + cc * hqj;
    }
    // Hermitian by construction; pin the pivot pair at exact zero.
    h[(p, q)] = Complex64::new(0.0, 0.0);
    h[(q, p)] = Complex64::new(0.0, 0.0);
}
