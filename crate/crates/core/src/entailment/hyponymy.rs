use crate::error::{Error, Result};
use crate::psd::{self, EigenDecomposition, SymMatrix, Tolerances};

/// Outcome of a maximal-strength query `A ⊑_k B`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntailmentResult {
    pub supports_contained: bool,
    /// `min(1, raw_k)`; present iff the supports are contained.
    pub k_max: Option<f64>,
    /// Unclipped `1 / witness_eigenvalue`.
    pub raw_k: Option<f64>,
    /// `lambda_max(A^{1/2} B^+ A^{1/2})`.
    pub witness_eigenvalue: Option<f64>,
}

impl EntailmentResult {
    fn not_contained() -> Self {
        Self {
            supports_contained: false,
            k_max: None,
            raw_k: None,
            witness_eigenvalue: None,
        }
    }
}

fn same_dim(a: &SymMatrix, b: &SymMatrix) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(())
}

fn contained_given(a: &SymMatrix, eb: &EigenDecomposition, tol: &Tolerances) -> Result<bool> {
    let p = psd::support_projector_from(eb, tol);
    let complement = SymMatrix::identity(a.dim()).sub(&p)?;
    let residual = complement.product_norm(a)?;
    Ok(residual <= tol.compare_tol * a.frobenius_norm().max(1.0))
}

/// `supp(A) ⊆ supp(B)`, decided by the residual `||(I - P_B) A||_F`.
pub fn supports_contained(a: &SymMatrix, b: &SymMatrix, tol: &Tolerances) -> Result<bool> {
    same_dim(a, b)?;
    psd::ensure_psd(a, tol)?;
    let eb = psd::eig_psd(b, tol)?;
    contained_given(a, &eb, tol)
}

/// Whether `B - k A` is positive, for `k` in `(0, 1]`.
pub fn is_k_hyponym(a: &SymMatrix, b: &SymMatrix, k: f64, tol: &Tolerances) -> Result<bool> {
    if !(k > 0.0 && k <= 1.0) {
        return Err(Error::BadK(k));
    }
    same_dim(a, b)?;
    psd::ensure_psd(a, tol)?;
    psd::ensure_psd(b, tol)?;
    psd::is_psd(&b.sub_scaled(k, a)?, tol)
}

/// Largest `k` with `A ⊑_k B`, via `1 / lambda_max(A^{1/2} B^+ A^{1/2})`.
pub fn k_max(a: &SymMatrix, b: &SymMatrix, tol: &Tolerances) -> Result<EntailmentResult> {
    same_dim(a, b)?;
    let ea = psd::eig_psd(a, tol)?;
    if ea.max_eigenvalue() <= 0.0 {
        return Err(Error::ZeroOperator);
    }
    let eb = psd::eig_psd(b, tol)?;
    if !contained_given(a, &eb, tol)? {
        return Ok(EntailmentResult::not_contained());
    }
    let sqrt_a = ea.map_spectrum(|l| l.max(0.0).sqrt());
    let b_pinv = psd::pseudo_inverse_from(&eb, tol);
    let lambda = psd::max_eigenvalue(&sqrt_a.sandwich(&b_pinv)?)?;
    if lambda <= 0.0 {
        // A is nonzero inside supp(B), so this only happens when B is zero
        return Ok(EntailmentResult::not_contained());
    }
    let raw = 1.0 / lambda;
    Ok(EntailmentResult {
        supports_contained: true,
        k_max: Some(raw.min(1.0)),
        raw_k: Some(raw),
        witness_eigenvalue: Some(lambda),
    })
}
