//! Oracles shared by the integration tests. Nothing here calls into the
//! eigensolver or entailment code under test.

#![allow(dead_code)]

use densem_core::psd::SymMatrix;
use nalgebra::{Cholesky, DMatrix, SymmetricEigen};

pub fn to_na(m: &SymMatrix) -> DMatrix<f64> {
    DMatrix::from_row_slice(m.dim(), m.dim(), m.as_slice())
}

pub fn na_eigenvalues(m: &SymMatrix) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new(to_na(m)).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

pub fn na_min_max(m: &DMatrix<f64>) -> (f64, f64) {
    let ev = SymmetricEigen::new(m.clone()).eigenvalues;
    (ev.min(), ev.max())
}

/// Largest `k` with `B - k A` positive, by bisection on the sign of
/// `B - k A` restricted to the range of `B`. Positive definiteness of the
/// restriction is decided by whether a Cholesky factorization exists.
pub fn k_bisect(a: &SymMatrix, b: &SymMatrix) -> f64 {
    let (na, nb) = (to_na(a), to_na(b));
    let eig = SymmetricEigen::new(nb.clone());
    let lmax = eig.eigenvalues.max();
    let keep: Vec<usize> = (0..b.dim()).filter(|&i| eig.eigenvalues[i] > 1e-10 * lmax).collect();
    let u = DMatrix::from_fn(b.dim(), keep.len(), |r, c| eig.eigenvectors[(r, keep[c])]);
    let (ar, br) = (u.transpose() * &na * &u, u.transpose() * &nb * &u);
    let positive = |k: f64| Cholesky::new(&br - &ar * k).is_some();
    let mut lo = 0.0;
    let mut hi = 1.0;
    while positive(hi) {
        lo = hi;
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if positive(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 * hi {
            break;
        }
    }
    0.5 * (lo + hi)
}

pub fn frob(m: &DMatrix<f64>) -> f64 {
    m.norm()
}
