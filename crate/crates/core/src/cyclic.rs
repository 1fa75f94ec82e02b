//! The trace quotient of Q⟨a,b⟩: the quotient vector space by the span of
//! all commutators [p, q].
//!
//! Two words have the same image in the quotient exactly when one is a
//! rotation of the other, so the quotient has the necklaces (words up to
//! rotation) as a basis. Reducing a polynomial to this basis decides
//! membership in the commutator subspace: a polynomial is a sum of
//! commutators iff its reduction vanishes.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::freealg::{NcPoly, Rational, TSeries, Word};

/// The lexicographically least rotation of `w`, by Booth's algorithm.
///
/// All rotations share a length, so least-rotation is well defined under the
/// graded-lexicographic word order and picks one representative per necklace.
pub fn cyclic_normal_form(w: Word) -> Word {
    let n = w.len();
    if n <= 1 {
        return w;
    }
    let s: Vec<u8> = w.letters().map(|l| l.bit() as u8).collect();
    let at = |i: usize| s[i % n];

    // Booth's least-rotation scan over the doubled word. `f` is the failure
    // function of the rotation starting at `k`, the best start seen so far.
    const NONE: usize = usize::MAX;
    let mut f = vec![NONE; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = f[j - k - 1];
        while i != NONE && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = f[i];
        }
        if i == NONE && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            f[j - k] = NONE;
        } else {
            f[j - k] = if i == NONE { 0 } else { i + 1 };
        }
    }
    w.rotated(k)
}

/// An element of the trace quotient, stored on the necklace basis: every key
/// is its own cyclic normal form.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CyclicPoly {
    terms: BTreeMap<Word, Rational>,
}

impl CyclicPoly {
    pub fn zero() -> CyclicPoly {
        CyclicPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the necklace containing `w` (any rotation works).
    pub fn coeff(&self, w: Word) -> Rational {
        self.terms
            .get(&cyclic_normal_form(w))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Necklace representatives with nonzero coefficient, in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, s: &Rational) -> CyclicPoly {
        if s.is_zero() {
            return CyclicPoly::zero();
        }
        CyclicPoly {
            terms: self.terms.iter().map(|(w, c)| (*w, c * s)).collect(),
        }
    }

    fn add_term(&mut self, normal: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(normal) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl Add for &CyclicPoly {
    type Output = CyclicPoly;
    fn add(self, rhs: &CyclicPoly) -> CyclicPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(*w, c.clone());
        }
        out
    }
}

impl Sub for &CyclicPoly {
    type Output = CyclicPoly;
    fn sub(self, rhs: &CyclicPoly) -> CyclicPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(*w, -c);
        }
        out
    }
}

impl Neg for &CyclicPoly {
    type Output = CyclicPoly;
    fn neg(self) -> CyclicPoly {
        CyclicPoly {
            terms: self.terms.iter().map(|(w, c)| (*w, -c)).collect(),
        }
    }
}

impl fmt::Display for CyclicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (w, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c} [{w}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicPoly({self})")
    }
}

/// The image of `p` in the trace quotient.
pub fn cyclic_trace(p: &NcPoly) -> CyclicPoly {
    let mut out = CyclicPoly::zero();
    for (w, c) in p.terms() {
        out.add_term(cyclic_normal_form(*w), c.clone());
    }
    out
}

/// Whether `p` lies in the span of commutators, i.e. has vanishing trace.
pub fn is_commutator_sum(p: &NcPoly) -> bool {
    cyclic_trace(p).is_zero()
}

/// Checks that reduction to the trace quotient commutes with d/dt on `s`,
/// coefficient by coefficient. Both routes are computed independently; a
/// `false` return means the quotient reduction itself is inconsistent.
///
/// Panics if the truncation order of `s` is 1 (no derivative exists).
pub fn trace_derivative_compat(s: &TSeries) -> bool {
    let d = s
        .derivative()
        .expect("series of truncation order >= 2 required");
    for k in 0..d.truncation_order() {
        // Route 1: differentiate, then reduce.
        let via_derivative = cyclic_trace(d.coeff(k));
        // Route 2: reduce, then differentiate the reduced coefficients.
        let via_trace = cyclic_trace(s.coeff(k + 1)).scale(&Rational::from_integer((k + 1) as i64));
        if via_derivative != via_trace {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{Letter, MAX_WORD_LEN};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> NcPoly {
        s.parse().unwrap()
    }

    /// Reference normal form: scan every rotation.
    fn least_rotation_naive(v: Word) -> Word {
        (0..v.len().max(1)).map(|k| v.rotated(k)).min().unwrap()
    }

    #[test]
    fn booth_matches_exhaustive_scan() {
        // Every word of length at most 12, by bit pattern.
        for len in 0..=12usize {
            for bits in 0u64..(1 << len) {
                let letters: Vec<Letter> = (0..len)
                    .map(|i| Letter::from_bit((bits >> (len - 1 - i)) & 1))
                    .collect();
                let v = Word::from_letters(&letters);
                assert_eq!(cyclic_normal_form(v), least_rotation_naive(v), "word {v}");
            }
        }
    }

    #[test]
    fn normal_form_at_capacity() {
        let letters: Vec<Letter> = (0..MAX_WORD_LEN)
            .map(|i| if i == 0 { Letter::B } else { Letter::A })
            .collect();
        let v = Word::from_letters(&letters);
        assert_eq!(cyclic_normal_form(v), least_rotation_naive(v));
    }

    #[test]
    fn trace_identifies_rotations() {
        let t = cyclic_trace(&p("1 ab + 1 ba"));
        assert_eq!(t.term_count(), 1);
        assert_eq!(t.coeff(w("ab")), Rational::from_integer(2));
        assert_eq!(t.coeff(w("ba")), Rational::from_integer(2));

        assert!(is_commutator_sum(&p("1 ab + -1 ba")));
        assert!(is_commutator_sum(&p("1 aab + -1 aba")));
        assert!(!is_commutator_sum(&p("1 ab + -1 aab")));
        assert!(is_commutator_sum(&NcPoly::zero()));
    }

    #[test]
    fn trace_of_commutator_vanishes() {
        let pairs = [
            ("1 a + 2 ab", "1 b + 1/3 ba"),
            ("1 aab + -1 b", "1 a + 1 bb + 1 abab"),
        ];
        for (x, y) in pairs {
            let (x, y) = (p(x), p(y));
            let comm = &(&x * &y) - &(&y * &x);
            assert!(is_commutator_sum(&comm), "[{x}, {y}]");
        }
    }

    #[test]
    fn display_uses_necklace_brackets() {
        let t = cyclic_trace(&p("1 ba + 1/2 aba"));
        assert_eq!(t.to_string(), "1 [ab] + 1/2 [aab]");
        assert_eq!(CyclicPoly::zero().to_string(), "0");
        assert_eq!(cyclic_trace(&p("3")).to_string(), "3 [1]");
    }

    #[test]
    fn derivative_commutes_with_trace() {
        let q = p("1 ab + -1 ba + 1/2 aab");
        let s = TSeries::lift(&q, 1, 1, 4);
        assert!(trace_derivative_compat(&s));
        let s = TSeries::from_coeffs(vec![p("1"), p("2 ab"), p("1 ba")]);
        assert!(trace_derivative_compat(&s));
    }
}
