use crate::error::{Error, Result};

use super::SymMatrix;

/// Eigenvalues in descending order with their orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[i]` pairs with `eigenvalues[i]`.
    pub eigenvectors: Vec<Vec<f64>>,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn min_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    /// `sum_i f(lambda_i) v_i v_i^T`, skipping terms where `f` returns zero.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> SymMatrix {
        let n = self.dim();
        let mut data = vec![0.0; n * n];
        for (&lambda, v) in self.eigenvalues.iter().zip(&self.eigenvectors) {
            let w = f(lambda);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let wi = w * v[i];
                if wi == 0.0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += wi * v[j];
                }
            }
        }
        SymMatrix::from_raw_symmetrized(n, data)
    }

    pub fn reconstruct(&self) -> SymMatrix {
        self.map_spectrum(|l| l)
    }
}

/// Off-diagonal Frobenius mass at which the sweep loop stops, relative to `||M||_F`.
const CONVERGENCE: f64 = 1e-14;

/// Cyclic Jacobi eigendecomposition.
///
/// Sweeps over all `(p, q)` pairs, annihilating each off-diagonal entry with a
/// plane rotation, until the off-diagonal mass drops below `1e-14 * ||M||_F`.
/// Gives up after `100 * dim` sweeps.
pub fn eig(m: &SymMatrix) -> Result<EigenDecomposition> {
    let n = m.dim();
    let mut a = m.as_slice().to_vec();
    if a.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let threshold = CONVERGENCE * m.frobenius_norm();
    let budget = 100 * n;
    let mut converged = false;
    for _ in 0..=budget {
        if off_diagonal_norm(&a, n) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
        if a.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: budget });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let eigenvalues = order.iter().map(|&i| a[i * n + i]).collect();
    let eigenvectors = order
        .iter()
        .map(|&col| (0..n).map(|row| v[row * n + col]).collect())
        .collect();
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// One Jacobi rotation zeroing `a[p][q]`; accumulates the rotation into `v`.
fn rotate(a: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // smaller root of t^2 + 2 theta t - 1 = 0
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = arp - s * (arq + tau * arp);
        let new_rq = arq + s * (arp - tau * arq);
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
    for r in 0..n {
        let vrp = v[r * n + p];
        let vrq = v[r * n + q];
        v[r * n + p] = vrp - s * (vrq + tau * vrp);
        v[r * n + q] = vrq + s * (vrp - tau * vrq);
    }
}
