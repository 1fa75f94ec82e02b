//! The correction polynomials X_m, X̃_m, Z_m and the derivative identity
//! behind the vanishing of the trace of Z_m.

use crate::cyclic::cyclic_trace;
use crate::freealg::{sum_a_b_ab, Letter, NcPoly, Rational, TSeries, Word};

use super::subsets::{build_y_subset, SubsetMask};
use super::unipoly::UniPoly;
use super::{signed_over_j, FormulaError};

/// X_m: the correction whose trace closes the product formula at order m.
///
/// X_m = Σ_{j=1}^{m−1} ((−1)^j / j) Σ_{A ⊆ {1..j}, j+|A| ≥ m} y_{A,j};
/// the empty sum for m = 1. Every surviving monomial has degree j + |A|, so
/// the support lies in degrees [m, 2m−2].
pub fn build_x_m(m: u32) -> NcPoly {
    assert!(m >= 1, "regularization order must be at least 1");
    let mut out = NcPoly::zero();
    for j in 1..m {
        let mut block = NcPoly::zero();
        for subset in SubsetMask::all(j) {
            if j + subset.cardinality() >= m {
                block = &block + &build_y_subset(&subset);
            }
        }
        out = &out + &block.scale(&signed_over_j(j));
    }
    out
}

/// X̃_m = Σ_{j=1}^{m−1} ((−1)^j / j) ((a+b+ab)^j − a^j − b^j), the variant
/// correction f(a+b+ab) − f(a) − f(b) with no degree filtering.
pub fn build_xtilde_m(m: u32) -> NcPoly {
    assert!(m >= 1, "regularization order must be at least 1");
    let base = sum_a_b_ab();
    let mut out = NcPoly::zero();
    for j in 1..m {
        let mut block = base.pow(j);
        block = &block - &NcPoly::monomial(Word::power(Letter::A, j as usize), Rational::one());
        block = &block - &NcPoly::monomial(Word::power(Letter::B, j as usize), Rational::one());
        out = &out + &block.scale(&signed_over_j(j));
    }
    out
}

/// Z_m = X̃_m − X_m, the trace-free part of the correction.
///
/// Built along two routes that must agree exactly: the subtraction above,
/// and the complementary subset filter
/// Σ_{j=1}^{m−1} ((−1)^j/j) (Σ_{A: j+|A| < m} y_{A,j} − a^j − b^j).
pub fn build_z_m(m: u32) -> Result<NcPoly, FormulaError> {
    assert!(m >= 1, "regularization order must be at least 1");
    let direct = &build_xtilde_m(m) - &build_x_m(m);

    let mut filtered = NcPoly::zero();
    for j in 1..m {
        let mut block = NcPoly::zero();
        for subset in SubsetMask::all(j) {
            if j + subset.cardinality() < m {
                block = &block + &build_y_subset(&subset);
            }
        }
        block = &block - &NcPoly::monomial(Word::power(Letter::A, j as usize), Rational::one());
        block = &block - &NcPoly::monomial(Word::power(Letter::B, j as usize), Rational::one());
        filtered = &filtered + &block.scale(&signed_over_j(j));
    }

    if direct != filtered {
        return Err(FormulaError::Inconsistent(
            "subtraction route and subset-filtered route for the trace-free correction disagree",
        ));
    }
    Ok(direct)
}

/// f(x) = Σ_{j=1}^{m−1} ((−1)^j / j) x^j, so that X̃_m = f(a+b+ab) − f(a) − f(b).
pub fn build_f_poly(m: u32) -> UniPoly {
    assert!(m >= 1, "regularization order must be at least 1");
    UniPoly::from_terms((1..m).map(|j| (j, signed_over_j(j))))
}

/// Replays the derivative identity that forces the trace of Z_m to vanish.
///
/// The expression f′(ta+tb+t²ab)·(a+b+2tab) − f′(ta)·a − f′(tb)·b is built
/// mod t^{m−1} along two routes: Horner evaluation of f′, and the closed
/// forms f′(ta+tb+t²ab) = −(1+tb)⁻¹(1+ta)⁻¹, f′(ta)·a = −(1+ta)⁻¹a,
/// f′(tb)·b = −(1+tb)⁻¹b via series inversion. Returns true iff the routes
/// agree, every coefficient of the expression has vanishing cyclic trace,
/// and independently the cyclic trace of t ↦ X̃_m(ta,tb) vanishes below t^m.
pub fn verify_txtilde_derivative(m: u32) -> bool {
    assert!(m >= 1, "regularization order must be at least 1");
    if m == 1 {
        // f = 0 and X̃_1 = 0: nothing to differentiate.
        return true;
    }
    let n = (m - 1) as usize;

    let pa = NcPoly::letter(Letter::A);
    let pb = NcPoly::letter(Letter::B);
    let ab = NcPoly::monomial(Word::from_letters(&[Letter::A, Letter::B]), Rational::one());
    let a_plus_b = &pa + &pb;

    let series_with = |parts: &[(usize, &NcPoly)]| {
        let mut coeffs = vec![NcPoly::zero(); n];
        for (k, p) in parts {
            if *k < n {
                coeffs[*k] = &coeffs[*k] + p;
            }
        }
        TSeries::from_coeffs(coeffs)
    };

    // u = ta + tb + t²ab and its t-derivative a + b + 2t·ab.
    let u = series_with(&[(1, &a_plus_b), (2, &ab)]);
    let u_prime = series_with(&[(0, &a_plus_b), (1, &ab.scale(&Rational::from_integer(2)))]);
    let ta = series_with(&[(1, &pa)]);
    let tb = series_with(&[(1, &pb)]);

    let f_prime = build_f_poly(m).derivative();
    let horner = &(&(&f_prime.eval_series(&u) * &u_prime)
        - &f_prime.eval_series(&ta).mul_poly(&pa))
        - &f_prime.eval_series(&tb).mul_poly(&pb);

    let inv_a = (&TSeries::one(n) + &ta)
        .inverse()
        .expect("constant term is the unit");
    let inv_b = (&TSeries::one(n) + &tb)
        .inverse()
        .expect("constant term is the unit");
    let inverted =
        &(&inv_a.mul_poly(&pa) + &inv_b.mul_poly(&pb)) - &(&(&inv_b * &inv_a) * &u_prime);

    if horner != inverted {
        return false;
    }
    for k in 0..n {
        if !cyclic_trace(horner.coeff(k)).is_zero() {
            return false;
        }
    }

    // The t-graded trace of X̃_m has no terms below t^m.
    let lifted = TSeries::lift(&build_xtilde_m(m), 1, 1, m as usize);
    (0..m as usize).all(|k| cyclic_trace(lifted.coeff(k)).is_zero())
}
