//! Dense complex square matrices.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::MatNumError;

/// An n×n complex matrix, entries row-major. Dimension at least 1.
#[derive(Clone, PartialEq, Debug)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

/// The JSON wire form: {"dim": n, "data": [[re, im], …]} with n² row-major
/// pairs.
#[derive(Serialize, Deserialize)]
struct RawMatrix {
    dim: usize,
    data: Vec<[f64; 2]>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> CMatrix {
        assert!(dim >= 1, "dimension must be at least 1");
        CMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> CMatrix {
        let mut m = CMatrix::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Row-major entries; their count must be a perfect square matching dim.
    pub fn from_data(dim: usize, data: Vec<Complex64>) -> CMatrix {
        assert!(dim >= 1, "dimension must be at least 1");
        assert_eq!(data.len(), dim * dim, "entry count must be dim squared");
        CMatrix { dim, data }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> CMatrix {
        let mut m = CMatrix::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn diagonal(entries: &[Complex64]) -> CMatrix {
        let mut m = CMatrix::zeros(entries.len());
        for (i, v) in entries.iter().enumerate() {
            m[(i, i)] = *v;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: Complex64) -> CMatrix {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    /// Largest entry modulus; the scale reference for deflation thresholds.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Induced 1-norm (maximum column sum). Cheap bound used to pick the
    /// exponential scaling; distinct from the Schatten 1-norm.
    pub fn induced_one_norm(&self) -> f64 {
        (0..self.dim)
            .map(|j| (0..self.dim).map(|i| self[(i, j)].norm()).sum())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|v| v.re.is_finite() && v.im.is_finite())
    }

    /// Parses the JSON wire form, rejecting wrong entry counts and
    /// nonfinite values.
    pub fn parse_json(s: &str) -> Result<CMatrix, MatNumError> {
        let raw: RawMatrix =
            serde_json::from_str(s).map_err(|e| MatNumError::Parse(e.to_string()))?;
        if raw.dim < 1 {
            return Err(MatNumError::Parse("dim must be at least 1".into()));
        }
        if raw.data.len() != raw.dim * raw.dim {
            return Err(MatNumError::Parse(format!(
                "expected {} entries for dim {}, got {}",
                raw.dim * raw.dim,
                raw.dim,
                raw.data.len()
            )));
        }
        if raw
            .data
            .iter()
            .any(|[re, im]| !re.is_finite() || !im.is_finite())
        {
            return Err(MatNumError::Parse("nonfinite entry".into()));
        }
        Ok(CMatrix {
            dim: raw.dim,
            data: raw
                .data
                .iter()
                .map(|[re, im]| Complex64::new(*re, *im))
                .collect(),
        })
    }

    pub fn to_json(&self) -> String {
        let raw = RawMatrix {
            dim: self.dim,
            data: self.data.iter().map(|v| [v.re, v.im]).collect(),
        };
        serde_json::to_string(&raw).expect("matrix serialization cannot fail")
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let lik = self[(i, k)];
                if lik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += lik * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Neg for &CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}
