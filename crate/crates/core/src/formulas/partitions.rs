//! Tripartitions of ordered slots and the bidegree blocks z_{k1,k2} of Z_m.

use crate::cyclic::cyclic_trace;
use crate::freealg::{Letter, NcPoly, Rational, Word};

use super::correction::build_z_m;
use super::signed_over_j;

/// The monomial one slot contributes to a tripartition product.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Slot {
    A,
    B,
    Ab,
}

impl Slot {
    fn letters(self) -> &'static [Letter] {
        match self {
            Slot::A => &[Letter::A],
            Slot::B => &[Letter::B],
            Slot::Ab => &[Letter::A, Letter::B],
        }
    }
}

/// An ordered assignment of the slots {1,…,j} to the monomials a, b, ab,
/// i.e. a partition of the slots into three classes π1, π2, π3. The classes
/// are disjoint and exhaustive by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriPartition {
    slots: Vec<Slot>,
}

impl TriPartition {
    /// Panics unless 1 ≤ slot count ≤ 32 (two letters per slot must fit a
    /// word).
    pub fn new(slots: Vec<Slot>) -> TriPartition {
        assert!(!slots.is_empty(), "slot count must be at least 1");
        assert!(slots.len() <= 32, "slot count exceeds word capacity");
        TriPartition { slots }
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// (k1, k2) = (number of a letters, number of b letters) of the product;
    /// k1 + k2 is at least the slot count.
    pub fn bidegree(&self) -> (usize, usize) {
        let mut k1 = 0;
        let mut k2 = 0;
        for s in &self.slots {
            match s {
                Slot::A => k1 += 1,
                Slot::B => k2 += 1,
                Slot::Ab => {
                    k1 += 1;
                    k2 += 1;
                }
            }
        }
        (k1, k2)
    }

    /// All tripartitions of j slots with bidegree (k1, k2), enumerated by a
    /// base-3 counter on the slots (slot 1 most significant; a < b < ab).
    pub fn enumerate(j: u32, k1: u32, k2: u32) -> Vec<TriPartition> {
        assert!((1..=32).contains(&j), "slot count {j} outside 1..=32");
        let mut out = Vec::new();
        for code in 0..3u64.pow(j) {
            let mut c = code;
            let mut slots = vec![Slot::A; j as usize];
            for i in (0..j as usize).rev() {
                slots[i] = match c % 3 {
                    0 => Slot::A,
                    1 => Slot::B,
                    _ => Slot::Ab,
                };
                c /= 3;
            }
            let pi = TriPartition { slots };
            if pi.bidegree() == (k1 as usize, k2 as usize) {
                out.push(pi);
            }
        }
        out
    }
}

/// z_π: the single word obtained by concatenating the slot monomials, with
/// coefficient 1.
pub fn build_z_partition(pi: &TriPartition) -> NcPoly {
    let letters: Vec<Letter> = pi
        .slots()
        .iter()
        .flat_map(|s| s.letters().iter().copied())
        .collect();
    NcPoly::monomial(Word::from_letters(&letters), Rational::one())
}

/// z_{k1,k2} = Σ_{j=1}^{k1+k2} ((−1)^j / j) Σ_{π with j slots and bidegree
/// (k1,k2)} z_π: the bidegree-(k1,k2) block of the corrections.
///
/// For (0,0) the sum is empty and the result is 0. For (0,k2) only the
/// all-b assignment with k2 slots survives, giving ((−1)^{k2}/k2)·b^{k2},
/// and symmetrically for (k1,0).
pub fn build_z_bigraded(k1: u32, k2: u32) -> NcPoly {
    let mut out = NcPoly::zero();
    for j in 1..=k1 + k2 {
        let mut block = NcPoly::zero();
        for pi in TriPartition::enumerate(j, k1, k2) {
            block = &block + &build_z_partition(&pi);
        }
        out = &out + &block.scale(&signed_over_j(j));
    }
    out
}

/// Whether Z_m = Σ_{k1,k2 ≥ 1, k1+k2 < m} z_{k1,k2} with every block
/// individually trace-free. Returns false as well if the two-route
/// construction of Z_m itself disagrees.
pub fn verify_bigraded_decomposition(m: u32) -> bool {
    assert!(m >= 1, "regularization order must be at least 1");
    let Ok(z) = build_z_m(m) else {
        return false;
    };
    let mut sum = NcPoly::zero();
    for k1 in 1..m {
        for k2 in 1..m.saturating_sub(k1) {
            let block = build_z_bigraded(k1, k2);
            if !cyclic_trace(&block).is_zero() {
                return false;
            }
            sum = &sum + &block;
        }
    }
    sum == z
}
