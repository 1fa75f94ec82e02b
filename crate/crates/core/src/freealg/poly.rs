//! Sparse polynomials in Q⟨a,b⟩.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{FreeAlgError, Letter, Rational, Word};

/// An element of the free polynomial algebra Q⟨a,b⟩.
///
/// Stored as a map from words to nonzero coefficients; the map order is
/// graded lexicographic, which makes iteration (and therefore printing)
/// deterministic. Equality of polynomials is equality of maps.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NcPoly {
    pub fn zero() -> NcPoly {
        NcPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit (the empty word with coefficient 1).
    pub fn one() -> NcPoly {
        NcPoly::monomial(Word::unit(), Rational::one())
    }

    pub fn letter(l: Letter) -> NcPoly {
        NcPoly::monomial(Word::single(l), Rational::one())
    }

    pub fn monomial(word: Word, coeff: Rational) -> NcPoly {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NcPoly { terms }
    }

    /// Builds a polynomial from arbitrary (word, coefficient) pairs,
    /// accumulating repeats and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(iter: I) -> NcPoly {
        let mut p = NcPoly::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }

    fn add_term(&mut self, word: Word, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    /// Iterates terms in graded-lexicographic word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, s: &Rational) -> NcPoly {
        if s.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, c)| (*w, c * s)).collect(),
        }
    }

    /// `self^j`, with `p^0` the unit.
    pub fn pow(&self, j: u32) -> NcPoly {
        let mut acc = NcPoly::one();
        for _ in 0..j {
            acc = &acc * self;
        }
        acc
    }

    /// The terms whose words contain exactly `k1` letters a and `k2`
    /// letters b. Summing over all (k1, k2) reconstitutes the polynomial.
    pub fn bigraded_component(&self, k1: usize, k2: usize) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.bidegree() == (k1, k2))
                .map(|(w, c)| (*w, c.clone()))
                .collect(),
        }
    }

    /// The terms of total degree `d`.
    pub fn degree_component(&self, d: usize) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == d)
                .map(|(w, c)| (*w, c.clone()))
                .collect(),
        }
    }

    /// Minimum and maximum word length over the stored terms.
    pub fn degree_window(&self) -> Result<(usize, usize), FreeAlgError> {
        let min = self.terms.keys().next().ok_or(FreeAlgError::DegreeOfZero)?;
        let max = self.terms.keys().next_back().unwrap();
        // Keys are graded-lex ordered, so first/last give the extremes.
        Ok((min.len(), max.len()))
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, c.clone());
        }
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, -c);
        }
        out
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().map(|(w, c)| (*w, -c)).collect(),
        }
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if w.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c} {w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly({self})")
    }
}

impl FromStr for NcPoly {
    type Err = FreeAlgError;

    /// Parses the same grammar `Display` emits: terms of the form
    /// `coeff [word]` joined by `+`, or `0` for the zero polynomial.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(NcPoly::zero());
        }
        if s.is_empty() {
            return Err(FreeAlgError::Parse("empty polynomial".into()));
        }
        let mut poly = NcPoly::zero();
        for piece in s.split('+') {
            let tokens: Vec<&str> = piece.split_whitespace().collect();
            let (coeff, word) = match tokens.as_slice() {
                [c] => (c.parse::<Rational>()?, Word::unit()),
                [c, w] => (c.parse::<Rational>()?, w.parse::<Word>()?),
                _ => {
                    return Err(FreeAlgError::Parse(format!("bad term {piece:?}")));
                }
            };
            poly.add_term(word, coeff);
        }
        Ok(poly)
    }
}

/// a + b + ab, the generating polynomial of the subset expansion.
pub(crate) fn sum_a_b_ab() -> NcPoly {
    let a = NcPoly::letter(Letter::A);
    let b = NcPoly::letter(Letter::B);
    &(&a + &b) + &(&a * &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> NcPoly {
        s.parse().unwrap()
    }

    #[test]
    fn mul_is_noncommutative() {
        let a = NcPoly::letter(Letter::A);
        let b = NcPoly::letter(Letter::B);
        assert_eq!(&a * &b, p("1 ab"));
        assert_eq!(&b * &a, p("1 ba"));
        assert_ne!(&a * &b, &b * &a);
    }

    #[test]
    fn cancellation_leaves_empty_map() {
        let ab = p("1 ab");
        let sum = &ab + &p("-1 ab");
        assert!(sum.is_zero());
        assert_eq!(sum.term_count(), 0);
    }

    #[test]
    fn product_against_hand_expansion() {
        // (a+b)·ab expanded term by term by concatenation.
        let lhs = &p("1 a + 1 b") * &p("1 ab");
        assert_eq!(lhs, p("1 aab + 1 bab"));
    }

    #[test]
    fn pow_small_cases() {
        let g = sum_a_b_ab();
        assert_eq!(g.pow(1), g);
        assert_eq!(
            g.pow(2),
            p("1 aa + 1 bb + 1 ab + 1 ba + 1 aab + 1 aba + 1 bab + 1 abb + 1 abab")
        );
        assert_eq!(NcPoly::letter(Letter::A).pow(3), p("1 aaa"));
        assert_eq!(g.pow(0), NcPoly::one());
    }

    #[test]
    fn bigraded_component_splits_support() {
        let q = p("1 ab + 1 ba + 1 aa");
        assert_eq!(q.bigraded_component(1, 1), p("1 ab + 1 ba"));
        assert_eq!(q.bigraded_component(2, 0), p("1 aa"));
        assert!(q.bigraded_component(3, 3).is_zero());
    }

    #[test]
    fn degree_window_and_zero_error() {
        assert_eq!(p("1 ab + 1 abab").degree_window().unwrap(), (2, 4));
        assert_eq!(
            NcPoly::zero().degree_window(),
            Err(FreeAlgError::DegreeOfZero)
        );
    }

    #[test]
    fn display_is_graded_lex_and_parses_back() {
        let q = p("1/2 aab + -1 ab + 3");
        assert_eq!(q.to_string(), "3 + -1 ab + 1/2 aab");
        assert_eq!(q.to_string().parse::<NcPoly>().unwrap(), q);
        assert_eq!(NcPoly::zero().to_string(), "0");
    }
}
