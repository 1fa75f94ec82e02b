//! Constructors and exact verifiers for the correction polynomials of the
//! determinant product formula.
//!
//! Everything here is exact rational arithmetic in Q⟨a,b⟩. The cast: the
//! subset products y_{A,j} that expand (a+b+ab)^j, the correction polynomial
//! X_m whose trace closes the product formula, the variant X̃_m assembled
//! from the single-variable polynomial f, their difference Z_m (a sum of
//! commutators, hence trace-free), and the bidegree blocks z_{k1,k2} that
//! decompose Z_m.

mod correction;
mod partitions;
mod subsets;
mod unipoly;

pub use correction::{
    build_f_poly, build_x_m, build_xtilde_m, build_z_m, verify_txtilde_derivative,
};
pub use partitions::{
    build_z_bigraded, build_z_partition, verify_bigraded_decomposition, Slot, TriPartition,
};
pub use subsets::{build_y_subset, verify_binomial_expansion, SubsetMask};
pub use unipoly::UniPoly;

use thiserror::Error;

use crate::freealg::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    /// Two constructions that must agree produced different polynomials.
    #[error("internal consistency failure: {0}")]
    Inconsistent(&'static str),
}

/// (−1)^j / j, the weight of every degree-j block in the corrections.
pub(crate) fn signed_over_j(j: u32) -> Rational {
    let sign = if j.is_multiple_of(2) { 1 } else { -1 };
    Rational::new(sign, i64::from(j))
}
