//! Real qubit states as points of the Bloch disc and entailment-strength grids over it.

use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::format::sig9;
use crate::psd::{self, SymMatrix, Tolerances};

use super::hyponymy::k_max;
use super::normalize::{normalize, NormalizationStrategy};

/// Slack on the unit-disc test, absorbing rounding in `x^2 + z^2`.
const DISC_EPS: f64 = 1e-12;

fn in_disc(x: f64, z: f64) -> bool {
    x.is_finite() && z.is_finite() && x * x + z * z <= 1.0 + DISC_EPS
}

/// `(I + x X + z Z) / 2`.
pub fn from_bloch(x: f64, z: f64) -> Result<SymMatrix> {
    if !in_disc(x, z) {
        return Err(Error::OutsideDisc { x, z });
    }
    SymMatrix::from_rows(&[vec![(1.0 + z) / 2.0, x / 2.0], vec![x / 2.0, (1.0 - z) / 2.0]])
}

/// Bloch coordinates `(x, z)` of a real 2x2 density matrix.
pub fn to_bloch(m: &SymMatrix, tol: &Tolerances) -> Result<(f64, f64)> {
    if m.dim() != 2 {
        return Err(Error::NotQubit(m.dim()));
    }
    psd::ensure_density(m, tol)?;
    Ok((2.0 * m.get(0, 1), m.get(0, 0) - m.get(1, 1)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscPoint {
    pub x: f64,
    pub z: f64,
    /// Strength with which the state at `(x, z)` entails the target; 0 when
    /// the supports are not contained.
    pub k: f64,
}

/// Lattice coordinate `i` of `resolution` equally spaced points on `[-1, 1]`.
///
/// Computed as `(2i - (res - 1)) / (res - 1)` so that the lattice is exactly
/// symmetric about 0.
pub fn lattice_coordinate(i: usize, resolution: usize) -> f64 {
    let n = (resolution - 1) as f64;
    (2.0 * i as f64 - n) / n
}

/// Entailment strengths `k_max(state(x, z) -> target)` over the lattice points
/// inside the disc, z descending in the outer loop and x ascending inside.
pub fn disc_grid(
    target: &SymMatrix,
    resolution: usize,
    strategy: NormalizationStrategy,
    tol: &Tolerances,
) -> Result<Vec<DiscPoint>> {
    if resolution < 2 {
        return Err(Error::BadResolution(resolution));
    }
    to_bloch(target, tol)?;
    let target = normalize(target, strategy, tol)?;
    let mut out = Vec::new();
    for zi in (0..resolution).rev() {
        let z = lattice_coordinate(zi, resolution);
        for xi in 0..resolution {
            let x = lattice_coordinate(xi, resolution);
            if !in_disc(x, z) {
                continue;
            }
            let source = normalize(&from_bloch(x, z)?, strategy, tol)?;
            let k = k_max(&source, &target, tol)?.k_max.unwrap_or(0.0);
            out.push(DiscPoint { x, z, k });
        }
    }
    Ok(out)
}

/// Writes `x,z,k` rows with a header line.
pub fn write_disc_csv(points: &[DiscPoint], mut w: impl Write) -> io::Result<()> {
    writeln!(w, "x,z,k")?;
    for p in points {
        writeln!(w, "{},{},{}", sig9(p.x), sig9(p.z), sig9(p.k))?;
    }
    Ok(())
}
