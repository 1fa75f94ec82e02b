//! Insertion of concrete matrices for the free letters: words become
//! ordered matrix products, and the product-formula correction becomes a
//! trace one can actually compute.

use num_complex::Complex64;

use crate::formulas::{build_x_m, build_xtilde_m};
use crate::freealg::{Letter, NcPoly};

use super::{detm_regularized, CMatrix, MatNumError};

/// The insertion homomorphism: substitute A for a and B for b, mapping
/// each word to the ordered product of its letters and extending
/// linearly. The empty word maps to the identity.
pub fn evaluate_ncpoly(p: &NcPoly, a: &CMatrix, b: &CMatrix) -> Result<CMatrix, MatNumError> {
    if a.dim() != b.dim() {
        return Err(MatNumError::DimensionMismatch(a.dim(), b.dim()));
    }
    let n = a.dim();
    let mut sum = CMatrix::zeros(n);
    for (word, coeff) in p.terms() {
        let mut product = CMatrix::identity(n);
        for letter in word.letters() {
            product = match letter {
                Letter::A => &product * a,
                Letter::B => &product * b,
            };
        }
        let c = Complex64::new(coeff.to_f64(), 0.0);
        for i in 0..n {
            for j in 0..n {
                sum[(i, j)] += c * product[(i, j)];
            }
        }
    }
    Ok(sum)
}

/// Relative gap between the two sides of the product formula
///
///   det_m((I+A)(I+B)) = det_m(I+A)·det_m(I+B)·exp(Tr X_m(A,B)),
///
/// with (I+A)(I+B) = I + (A+B+AB). Both sides are compared as
/// determinant values; logarithms never appear, so branch cuts cannot.
pub fn product_formula_residual(a: &CMatrix, b: &CMatrix, m: u32) -> Result<f64, MatNumError> {
    if a.dim() != b.dim() {
        return Err(MatNumError::DimensionMismatch(a.dim(), b.dim()));
    }
    let combined = &(a + b) + &(a * b);
    let left = detm_regularized(&combined, m);

    let correction = evaluate_ncpoly(&build_x_m(m), a, b)?;
    let right = detm_regularized(a, m) * detm_regularized(b, m) * correction.trace().exp();

    let denom = left.norm().max(right.norm()).max(1e-300);
    Ok((left - right).norm() / denom)
}

/// |Tr X_m(A,B) − Tr X̃_m(A,B)|: the two corrections differ by a sum of
/// commutators, so their traces agree up to rounding.
pub fn trace_identity_check(a: &CMatrix, b: &CMatrix, m: u32) -> Result<f64, MatNumError> {
    let tx = evaluate_ncpoly(&build_x_m(m), a, b)?.trace();
    let txt = evaluate_ncpoly(&build_xtilde_m(m), a, b)?.trace();
    Ok((tx - txt).norm())
}
