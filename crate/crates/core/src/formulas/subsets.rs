//! Subsets of {1,…,j} and the ordered products y_{A,j}.

use crate::freealg::{sum_a_b_ab, Letter, NcPoly, Rational, Word};

/// A subset A of the slots {1,…,j}, encoded as a bitmask with bit k−1
/// standing for membership of k.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SubsetMask {
    j: u32,
    mask: u64,
}

impl SubsetMask {
    /// Panics unless 1 ≤ j ≤ 32 (two letters per slot must fit a word) and
    /// the mask stays within the j slots.
    pub fn new(j: u32, mask: u64) -> SubsetMask {
        assert!(j >= 1, "slot count must be at least 1");
        assert!(j <= 32, "slot count {j} exceeds word capacity");
        assert!(mask < (1 << j), "subset mask has members beyond slot {j}");
        SubsetMask { j, mask }
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// |A|.
    pub fn cardinality(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Membership of slot k, 1-based.
    pub fn contains(&self, k: u32) -> bool {
        assert!(k >= 1 && k <= self.j, "slot {k} outside 1..={}", self.j);
        self.mask >> (k - 1) & 1 == 1
    }

    /// All 2^j subsets of {1,…,j}, in increasing mask order.
    pub fn all(j: u32) -> impl Iterator<Item = SubsetMask> {
        assert!((1..=32).contains(&j), "slot count {j} outside 1..=32");
        (0..1u64 << j).map(move |mask| SubsetMask { j, mask })
    }
}

/// y_{A,j}: the ordered product over k = 1..j of (ab if k ∈ A, else a+b).
///
/// Every monomial of the expansion has degree exactly j + |A|.
pub fn build_y_subset(subset: &SubsetMask) -> NcPoly {
    let ab = NcPoly::monomial(Word::from_letters(&[Letter::A, Letter::B]), Rational::one());
    let a_plus_b = &NcPoly::letter(Letter::A) + &NcPoly::letter(Letter::B);
    let mut out = NcPoly::one();
    for k in 1..=subset.j() {
        out = &out * if subset.contains(k) { &ab } else { &a_plus_b };
    }
    out
}

/// Whether (a+b+ab)^j equals the sum of y_{A,j} over all 2^j subsets A.
pub fn verify_binomial_expansion(j: u32) -> bool {
    let mut sum = NcPoly::zero();
    for subset in SubsetMask::all(j) {
        sum = &sum + &build_y_subset(&subset);
    }
    sum == sum_a_b_ab().pow(j)
}
