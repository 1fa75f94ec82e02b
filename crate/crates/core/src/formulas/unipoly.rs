//! Univariate polynomials over Q in a commuting variable x.

use std::collections::BTreeMap;
use std::fmt;

use crate::freealg::{NcPoly, Rational, TSeries, Word};

/// A polynomial Σ c_k x^k with rational coefficients. The variable commutes
/// with everything, so evaluation at a noncommutative argument is
/// unambiguous.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly::default()
    }

    /// Accumulates (exponent, coefficient) pairs; zero totals are dropped.
    pub fn from_terms<I: IntoIterator<Item = (u32, Rational)>>(iter: I) -> UniPoly {
        let mut coeffs: BTreeMap<u32, Rational> = BTreeMap::new();
        for (k, c) in iter {
            let entry = coeffs.entry(k).or_insert_with(Rational::zero);
            *entry += &c;
            if entry.is_zero() {
                coeffs.remove(&k);
            }
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: u32) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::from_terms(
            self.coeffs
                .iter()
                .filter(|(k, _)| **k > 0)
                .map(|(k, c)| (k - 1, c * &Rational::from_integer(i64::from(*k)))),
        )
    }

    /// Horner evaluation at a noncommutative polynomial argument.
    pub fn eval_poly(&self, x: &NcPoly) -> NcPoly {
        let Some(deg) = self.degree() else {
            return NcPoly::zero();
        };
        let mut acc = NcPoly::zero();
        for k in (0..=deg).rev() {
            acc = &(&acc * x) + &NcPoly::monomial(Word::unit(), self.coeff(k));
        }
        acc
    }

    /// Horner evaluation at a truncated series argument; the result keeps the
    /// truncation order of `x`.
    pub fn eval_series(&self, x: &TSeries) -> TSeries {
        let n = x.truncation_order();
        let Some(deg) = self.degree() else {
            return TSeries::zero(n);
        };
        let mut acc = TSeries::zero(n);
        for k in (0..=deg).rev() {
            let c = TSeries::constant(NcPoly::monomial(Word::unit(), self.coeff(k)), n);
            acc = &(&acc * x) + &c;
        }
        acc
    }
}

/// Terms in ascending degree as "c", "c x", "c x^k"; zero prints "0".
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} x")?,
                _ => write!(f, "{c} x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::sum_a_b_ab;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn derivative_and_degree() {
        // -x + x^2/2 differentiates to -1 + x.
        let f = UniPoly::from_terms([(1, r(-1, 1)), (2, r(1, 2))]);
        let fp = f.derivative();
        assert_eq!(fp, UniPoly::from_terms([(0, r(-1, 1)), (1, r(1, 1))]));
        assert_eq!(f.degree(), Some(2));
        assert_eq!(UniPoly::zero().degree(), None);
        assert!(UniPoly::zero().derivative().is_zero());
    }

    #[test]
    fn cancellation_in_from_terms() {
        let f = UniPoly::from_terms([(3, r(1, 2)), (3, r(-1, 2))]);
        assert!(f.is_zero());
    }

    #[test]
    fn horner_matches_direct_powers() {
        let f = UniPoly::from_terms([(1, r(-1, 1)), (2, r(1, 2)), (3, r(-1, 3))]);
        let x = sum_a_b_ab();
        let direct =
            &(&x.scale(&r(-1, 1)) + &x.pow(2).scale(&r(1, 2))) + &x.pow(3).scale(&r(-1, 3));
        assert_eq!(f.eval_poly(&x), direct);
        assert!(f.eval_poly(&NcPoly::zero()).is_zero());
    }

    #[test]
    fn series_evaluation_truncates() {
        // f(x) = x^2 at x = t(a+b): t^2 (a+b)^2, gone at order 2.
        let f = UniPoly::from_terms([(2, r(1, 1))]);
        let x3 = TSeries::lift(&"1 a + 1 b".parse().unwrap(), 1, 1, 3);
        let y = f.eval_series(&x3);
        assert_eq!(y.coeff(2), &"1 aa + 1 ab + 1 ba + 1 bb".parse().unwrap());
        let x2 = TSeries::lift(&"1 a + 1 b".parse().unwrap(), 1, 1, 2);
        assert!(f.eval_series(&x2).is_zero());
    }

    #[test]
    fn display_forms() {
        let f = UniPoly::from_terms([(0, r(2, 1)), (1, r(-1, 1)), (3, r(1, 3))]);
        assert_eq!(f.to_string(), "2 + -1 x + 1/3 x^3");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }
}
