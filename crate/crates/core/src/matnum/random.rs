//! Deterministic test matrices. The generator is ChaCha8 seeded directly
//! with the given integer, so a (dim, norm, seed) triple names one matrix
//! forever, across platforms and runs.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::svd::singular_values;
use super::CMatrix;

/// Entries drawn complex-uniform from the unit square, then rescaled so
/// the operator norm equals `target_norm` exactly (up to rounding).
pub fn random_test_matrix(n: usize, target_norm: f64, seed: u64) -> CMatrix {
    assert!(n >= 1, "matrix dimension starts at 1");
    assert!(target_norm > 0.0, "target norm must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = CMatrix::from_fn(n, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    let opnorm = singular_values(&m)[0];
    if opnorm > 0.0 {
        m = m.scale(Complex64::new(target_norm / opnorm, 0.0));
    }
    m
}
