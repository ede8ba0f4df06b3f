//! Seeded generators for random operators, shared by tests and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::psd::SymMatrix;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(-1.0..1.0)).collect()
}

pub fn random_unit_vector(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    loop {
        let v = random_vector(rng, n);
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

pub fn random_symmetric(rng: &mut impl Rng, n: usize) -> SymMatrix {
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let v = rng.random_range(-1.0..1.0);
            data[i * n + j] = v;
            data[j * n + i] = v;
        }
    }
    SymMatrix::new(n, data).expect("symmetric by construction")
}

/// `X X^T` for an `n x cols` matrix `X` given column by column.
fn gram(n: usize, cols: &[Vec<f64>]) -> SymMatrix {
    let mut data = vec![0.0; n * n];
    for c in cols {
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] += c[i] * c[j];
            }
        }
    }
    SymMatrix::from_raw_symmetrized(n, data)
}

/// Full-rank (almost surely) positive operator.
pub fn random_psd(rng: &mut impl Rng, n: usize) -> SymMatrix {
    random_psd_rank(rng, n, n)
}

/// Positive operator of rank `rank` (almost surely).
pub fn random_psd_rank(rng: &mut impl Rng, n: usize, rank: usize) -> SymMatrix {
    let cols: Vec<Vec<f64>> = (0..rank).map(|_| random_vector(rng, n)).collect();
    gram(n, &cols)
}

/// Trace-one positive operator of the given rank.
pub fn random_density(rng: &mut impl Rng, n: usize, rank: usize) -> SymMatrix {
    let m = random_psd_rank(rng, n, rank);
    let t = m.trace();
    m.scale(1.0 / t)
}

/// Orthogonal projector onto the span of `rank` random vectors.
pub fn random_projector(rng: &mut impl Rng, n: usize, rank: usize) -> SymMatrix {
    let cols: Vec<Vec<f64>> = (0..rank).map(|_| random_vector(rng, n)).collect();
    projector_onto(n, &cols)
}

/// Orthogonal projector onto the span of `vectors` (Gram-Schmidt).
pub fn projector_onto(n: usize, vectors: &[Vec<f64>]) -> SymMatrix {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let d: f64 = w.iter().zip(b).map(|(x, y)| x * y).sum();
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= d * bi;
                }
            }
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-10 {
            basis.push(w.into_iter().map(|x| x / norm).collect());
        }
    }
    gram(n, &basis)
}

/// A pair `(A, B)` of positive operators with `supp(A) ⊆ supp(B)`.
///
/// `B = X X^T` has rank `b_rank`; `A = X Z Z^T X^T` has rank at most
/// `min(a_rank, b_rank)`, so its range lies inside the range of `X`.
pub fn random_nested_pair(rng: &mut impl Rng, n: usize, b_rank: usize, a_rank: usize) -> (SymMatrix, SymMatrix) {
    let x: Vec<Vec<f64>> = (0..b_rank).map(|_| random_vector(rng, n)).collect();
    let b = gram(n, &x);
    let a_cols: Vec<Vec<f64>> = (0..a_rank)
        .map(|_| {
            let z = random_vector(rng, b_rank);
            let mut col = vec![0.0; n];
            for (xc, zc) in x.iter().zip(&z) {
                for (c, xi) in col.iter_mut().zip(xc) {
                    *c += zc * xi;
                }
            }
            col
        })
        .collect();
    (gram(n, &a_cols), b)
}
