use std::fmt;

use crate::error::{Error, Result};

/// Dense real symmetric matrix stored row-major.
///
/// Construction validates finiteness and symmetry (to `1e-12 * max(1, maxabs)`)
/// and then stores the exact average of the matrix and its transpose, so every
/// value of this type is exactly symmetric.
#[derive(Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

const SYMMETRY_TOL: f64 = 1e-12;

impl SymMatrix {
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::BadShape { expected: 1, got: 0 });
        }
        if data.len() != dim * dim {
            return Err(Error::BadShape {
                expected: dim * dim,
                got: data.len(),
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let maxabs = data.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let tol = SYMMETRY_TOL * maxabs.max(1.0);
        for i in 0..dim {
            for j in (i + 1)..dim {
                let gap = (data[i * dim + j] - data[j * dim + i]).abs();
                if gap > tol {
                    return Err(Error::NotSymmetric { row: i, col: j, gap });
                }
            }
        }
        Ok(Self::from_raw_symmetrized(dim, data))
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::BadShape {
                    expected: dim,
                    got: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::new(dim, data)
    }

    /// Averages `data` with its transpose without validation. Used after
    /// products, where asymmetry is rounding drift only.
    pub(crate) fn from_raw_symmetrized(dim: usize, mut data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), dim * dim);
        for i in 0..dim {
            for j in (i + 1)..dim {
                let avg = 0.5 * (data[i * dim + j] + data[j * dim + i]);
                data[i * dim + j] = avg;
                data[j * dim + i] = avg;
            }
        }
        Self { dim, data }
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "dimension must be positive");
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1.0;
        }
        m
    }

    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.data[i * values.len() + i] = v;
        }
        m
    }

    /// The rank-one operator `|v><v|`.
    pub fn outer(v: &[f64]) -> Self {
        let n = v.len();
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = v[i] * v[j];
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.dim + col]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks(self.dim)
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Self { dim: self.dim, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Self { dim: self.dim, data })
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|v| c * v).collect(),
        }
    }

    /// `self - c * other`, the operator whose positivity defines graded entailment.
    pub fn sub_scaled(&self, c: f64, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - c * b).collect();
        Ok(Self { dim: self.dim, data })
    }

    /// `self * m * self`, symmetrized. Symmetric whenever `self` and `m` are.
    pub fn sandwich(&self, m: &Self) -> Result<Self> {
        self.check_dim(m)?;
        let n = self.dim;
        let left = matmul(&self.data, &m.data, n);
        Ok(Self::from_raw_symmetrized(n, matmul(&left, &self.data, n)))
    }

    /// `trace(self * other)`.
    pub fn trace_product(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        // both symmetric, so tr(AB) = sum_ij A_ij B_ij
        Ok(self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum())
    }

    /// Frobenius norm of the (generally non-symmetric) product `self * other`.
    pub fn product_norm(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        let p = matmul(&self.data, &other.data, self.dim);
        Ok(p.iter().map(|v| v * v).sum::<f64>().sqrt())
    }

    /// Entrywise product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a * b).collect();
        Ok(Self { dim: self.dim, data })
    }

    /// Quadratic form `v^T M v`.
    pub fn quadratic_form(&self, v: &[f64]) -> f64 {
        assert_eq!(v.len(), self.dim);
        self.rows()
            .zip(v)
            .map(|(row, vi)| vi * row.iter().zip(v).map(|(a, b)| a * b).sum::<f64>())
            .sum()
    }
}

/// Row-major `n x n` product.
pub(crate) fn matmul(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0.0 {
                continue;
            }
            let brow = &b[k * n..(k + 1) * n];
            let orow = &mut out[i * n..(i + 1) * n];
            for (o, bkj) in orow.iter_mut().zip(brow) {
                *o += aik * bkj;
            }
        }
    }
    out
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymMatrix({}x{}) [", self.dim, self.dim)?;
        for row in self.rows() {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}
