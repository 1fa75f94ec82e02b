//! Truncated polynomials in a central indeterminate t with coefficients in
//! Q⟨a,b⟩, i.e. elements of Q⟨a,b⟩[t]/(t^N).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{FreeAlgError, NcPoly, Rational};

/// An element of Q⟨a,b⟩[t]/(t^N): `coeffs[k]` is the coefficient of t^k.
///
/// The truncation order N = `coeffs.len()` is part of the value, not global
/// state; binary operations truncate to the smaller order of their operands,
/// and two series compare equal only at equal order.
#[derive(Clone, PartialEq, Eq)]
pub struct TSeries {
    coeffs: Vec<NcPoly>,
}

impl TSeries {
    /// Wraps explicit coefficients; the truncation order is their count.
    pub fn from_coeffs(coeffs: Vec<NcPoly>) -> TSeries {
        assert!(!coeffs.is_empty(), "truncation order must be at least 1");
        TSeries { coeffs }
    }

    pub fn zero(n: usize) -> TSeries {
        assert!(n >= 1, "truncation order must be at least 1");
        TSeries {
            coeffs: vec![NcPoly::zero(); n],
        }
    }

    /// The unit series 1 + O(t^N).
    pub fn one(n: usize) -> TSeries {
        let mut s = TSeries::zero(n);
        s.coeffs[0] = NcPoly::one();
        s
    }

    /// A polynomial placed at t^0.
    pub fn constant(p: NcPoly, n: usize) -> TSeries {
        let mut s = TSeries::zero(n);
        s.coeffs[0] = p;
        s
    }

    /// Substitutes a → t^{exp_a}·a and b → t^{exp_b}·b in `p`: each word w
    /// lands at t-exponent exp_a·deg_a(w) + exp_b·deg_b(w). Exponents at or
    /// above N are dropped.
    pub fn lift(p: &NcPoly, exp_a: u32, exp_b: u32, n: usize) -> TSeries {
        let mut s = TSeries::zero(n);
        for (w, c) in p.terms() {
            let (da, db) = w.bidegree();
            let k = exp_a as usize * da + exp_b as usize * db;
            if k < n {
                s.coeffs[k] = &s.coeffs[k] + &NcPoly::monomial(*w, c.clone());
            }
        }
        s
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of t^k; panics if k is at or beyond the truncation order.
    pub fn coeff(&self, k: usize) -> &NcPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[NcPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(NcPoly::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(s)).collect(),
        }
    }

    /// Multiplies by a polynomial constant in t.
    pub fn mul_poly(&self, p: &NcPoly) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|q| q * p).collect(),
        }
    }

    /// The inverse mod t^N, by the Neumann recursion
    /// x_0 = 1, x_k = -Σ_{i=1}^{k} s_i · x_{k-i}.
    ///
    /// Requires the constant coefficient to be exactly the unit; anything
    /// else is rejected rather than normalized.
    pub fn inverse(&self) -> Result<TSeries, FreeAlgError> {
        if self.coeffs[0] != NcPoly::one() {
            return Err(FreeAlgError::NotInvertible);
        }
        let n = self.truncation_order();
        let mut inv = vec![NcPoly::one()];
        for k in 1..n {
            let mut acc = NcPoly::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc = &acc + &(&self.coeffs[i] * &inv[k - i]);
                }
            }
            inv.push(-&acc);
        }
        Ok(TSeries { coeffs: inv })
    }

    /// The formal derivative d/dt, sending t^k to k·t^{k-1}. The result has
    /// truncation order N-1; differentiating an order-1 series is an error
    /// because an order-0 series cannot hold any information.
    pub fn derivative(&self) -> Result<TSeries, FreeAlgError> {
        let n = self.truncation_order();
        if n == 1 {
            return Err(FreeAlgError::EmptyTruncation);
        }
        let coeffs = (1..n)
            .map(|k| self.coeffs[k].scale(&Rational::from_integer(k as i64)))
            .collect();
        Ok(TSeries { coeffs })
    }
}

impl Add for &TSeries {
    type Output = TSeries;
    fn add(self, rhs: &TSeries) -> TSeries {
        let n = self.truncation_order().min(rhs.truncation_order());
        TSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &TSeries {
    type Output = TSeries;
    fn sub(self, rhs: &TSeries) -> TSeries {
        let n = self.truncation_order().min(rhs.truncation_order());
        TSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &TSeries {
    type Output = TSeries;
    fn mul(self, rhs: &TSeries) -> TSeries {
        let n = self.truncation_order().min(rhs.truncation_order());
        let mut coeffs = vec![NcPoly::zero(); n];
        for (i, p) in self.coeffs.iter().enumerate().take(n) {
            if p.is_zero() {
                continue;
            }
            for (j, q) in rhs.coeffs.iter().enumerate().take(n - i) {
                if q.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(p * q);
            }
        }
        TSeries { coeffs }
    }
}

impl Neg for &TSeries {
    type Output = TSeries;
    fn neg(self) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|p| -p).collect(),
        }
    }
}

impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({p})")?,
                1 => write!(f, "({p}) t")?,
                _ => write!(f, "({p}) t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.truncation_order())
    }
}

impl fmt::Debug for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TSeries({self})")
    }
}
