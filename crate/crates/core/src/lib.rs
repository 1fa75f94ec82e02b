//! Exact and numerical machinery for higher regularized Fredholm determinants.
//!
//! The crate has two halves that check each other:
//!
//! * an exact symbolic half ([`freealg`], [`cyclic`], [`formulas`]) working in
//!   the free noncommutative polynomial algebra Q⟨a,b⟩, which constructs the
//!   correction polynomials of the determinant product formula and proves the
//!   commutator-trace identities behind it by direct computation;
//! * a numerical half ([`matnum`]) treating dense complex matrices as
//!   finite-rank operators, which computes det_m along three independent
//!   routes and measures the product-formula residual.
//!
//! [`suite`] bundles both into the verification sweeps exposed by the CLI.
//! Sweeps run on rayon when the `parallel` feature (default) is enabled and
//! fall back to sequential iteration otherwise.

pub mod cyclic;
pub mod formulas;
pub mod freealg;
pub mod matnum;
mod parallel;
pub mod suite;

pub use parallel::map_cases;
