//! Primitives for real symmetric positive-semidefinite operators: spectral
//! decomposition, pseudo-inverse, square root, support projectors, the Löwner
//! order and satisfaction `tr(rho A)`.
//!
//! All comparisons are relative and controlled by [`Tolerances`].

mod eigen;
mod matrix;

pub use eigen::{eig, EigenDecomposition};
pub use matrix::SymMatrix;

use crate::error::{Error, Result};

/// Relative tolerances used by the positivity and rank decisions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// `M` is positive when `lambda_min >= -psd_tol * max(1, lambda_max)`.
    pub psd_tol: f64,
    /// Eigenvalues at or below `rank_tol * lambda_max` count as zero.
    pub rank_tol: f64,
    /// Residual threshold for support containment and similar comparisons.
    pub compare_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            psd_tol: 1e-9,
            rank_tol: 1e-10,
            compare_tol: 1e-8,
        }
    }
}

impl Tolerances {
    pub fn new(psd_tol: f64, rank_tol: f64, compare_tol: f64) -> Option<Self> {
        let t = Self {
            psd_tol,
            rank_tol,
            compare_tol,
        };
        t.is_valid().then_some(t)
    }

    pub fn is_valid(&self) -> bool {
        [self.psd_tol, self.rank_tol, self.compare_tol]
            .iter()
            .all(|v| v.is_finite() && *v > 0.0)
    }
}

fn spectrum_is_psd(e: &EigenDecomposition, tol: &Tolerances) -> bool {
    e.min_eigenvalue() >= -tol.psd_tol * e.max_eigenvalue().max(1.0)
}

/// Eigendecomposition of a matrix that must be positive semidefinite.
pub(crate) fn eig_psd(m: &SymMatrix, tol: &Tolerances) -> Result<EigenDecomposition> {
    let e = eig(m)?;
    if !spectrum_is_psd(&e, tol) {
        return Err(Error::NotPsd {
            min_eigenvalue: e.min_eigenvalue(),
        });
    }
    Ok(e)
}

pub(crate) fn ensure_psd(m: &SymMatrix, tol: &Tolerances) -> Result<()> {
    eig_psd(m, tol).map(|_| ())
}

pub fn is_psd(m: &SymMatrix, tol: &Tolerances) -> Result<bool> {
    Ok(spectrum_is_psd(&eig(m)?, tol))
}

/// Löwner order: `A ⊑ B` iff `B - A` is positive.
pub fn loewner_leq(a: &SymMatrix, b: &SymMatrix, tol: &Tolerances) -> Result<bool> {
    is_psd(&b.sub(a)?, tol)
}

fn rank_cutoff(e: &EigenDecomposition, tol: &Tolerances) -> f64 {
    tol.rank_tol * e.max_eigenvalue()
}

/// Moore-Penrose pseudo-inverse of a positive operator.
pub fn pseudo_inverse(m: &SymMatrix, tol: &Tolerances) -> Result<SymMatrix> {
    let e = eig_psd(m, tol)?;
    Ok(pseudo_inverse_from(&e, tol))
}

pub(crate) fn pseudo_inverse_from(e: &EigenDecomposition, tol: &Tolerances) -> SymMatrix {
    if e.max_eigenvalue() <= 0.0 {
        return SymMatrix::zeros(e.dim());
    }
    let cutoff = rank_cutoff(e, tol);
    e.map_spectrum(|l| if l > cutoff { 1.0 / l } else { 0.0 })
}

/// Positive square root; negative rounding noise in the spectrum is clamped to zero.
pub fn sqrt_psd(m: &SymMatrix, tol: &Tolerances) -> Result<SymMatrix> {
    let e = eig_psd(m, tol)?;
    Ok(e.map_spectrum(|l| l.max(0.0).sqrt()))
}

/// Orthogonal projector onto the support (range) of a positive operator,
/// i.e. `M M^+`.
pub fn support_projector(m: &SymMatrix, tol: &Tolerances) -> Result<SymMatrix> {
    let e = eig_psd(m, tol)?;
    Ok(support_projector_from(&e, tol))
}

pub(crate) fn support_projector_from(e: &EigenDecomposition, tol: &Tolerances) -> SymMatrix {
    if e.max_eigenvalue() <= 0.0 {
        return SymMatrix::zeros(e.dim());
    }
    let cutoff = rank_cutoff(e, tol);
    e.map_spectrum(|l| if l > cutoff { 1.0 } else { 0.0 })
}

/// Number of eigenvalues above `rank_tol * lambda_max`.
pub fn rank(m: &SymMatrix, tol: &Tolerances) -> Result<usize> {
    let e = eig(m)?;
    if e.max_eigenvalue() <= 0.0 {
        return Ok(0);
    }
    let cutoff = rank_cutoff(&e, tol);
    Ok(e.eigenvalues.iter().filter(|&&l| l > cutoff).count())
}

pub fn max_eigenvalue(m: &SymMatrix) -> Result<f64> {
    Ok(eig(m)?.max_eigenvalue())
}

/// Trace tolerance for density operators.
pub const DENSITY_TRACE_TOL: f64 = 1e-8;

/// Checks that `rho` is positive with unit trace.
pub fn ensure_density(rho: &SymMatrix, tol: &Tolerances) -> Result<()> {
    let trace = rho.trace();
    if (trace - 1.0).abs() > DENSITY_TRACE_TOL {
        return Err(Error::NotDensity { trace });
    }
    ensure_psd(rho, tol)
}

/// Degree `tr(rho A)` to which state `rho` satisfies predicate `A`.
pub fn satisfaction(rho: &SymMatrix, a: &SymMatrix, tol: &Tolerances) -> Result<f64> {
    if rho.dim() != a.dim() {
        return Err(Error::DimMismatch {
            left: rho.dim(),
            right: a.dim(),
        });
    }
    ensure_density(rho, tol)?;
    ensure_psd(a, tol)?;
    // both positive: any negative value is rounding
    Ok(rho.trace_product(a)?.max(0.0))
}
