//! Dense complex matrices as finite-rank operators: regularized
//! determinants along independent routes, spectra, Schatten norms, and the
//! numerical side of the product formula.
//!
//! Every kernel is self-contained (LU, Faddeev–LeVerrier recursion,
//! scaling-and-squaring exponential, shifted QR, cyclic Jacobi) so the three
//! det_m routes stay independent: the LU route never touches the
//! eigensolver, the spectral route never touches LU, and the log-series
//! route uses only traces of matrix powers. Agreement between them is
//! evidence, not construction.

mod charpoly;
mod cmatrix;
mod detm;
mod eig;
mod expm;
mod insert;
mod lu;
mod random;
mod svd;

pub use charpoly::fredholm_series;
pub use cmatrix::CMatrix;
pub use detm::{
    detm_log_deviation, detm_logseries, detm_regularized, detm_report, detm_spectral, DetmMethod,
    DetmReport,
};
pub use eig::eigenvalues_qr;
pub use expm::matrix_exponential;
pub use insert::{evaluate_ncpoly, product_formula_residual, trace_identity_check};
pub use lu::lu_determinant;
pub use random::random_test_matrix;
pub use svd::{schatten_norm, singular_values};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatNumError {
    #[error("QR failed to converge")]
    QrNonConvergence,
    #[error("log-series requires norm < 1 (operator norm is {0})")]
    NormTooLarge(f64),
    #[error("Schatten exponent must be at least 1 (got {0})")]
    InvalidExponent(f64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix parse error: {0}")]
    Parse(String),
}
