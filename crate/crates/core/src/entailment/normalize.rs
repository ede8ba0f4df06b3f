use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::psd::{self, EigenDecomposition, SymMatrix, Tolerances};

/// How operators are scaled before they are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NormalizationStrategy {
    #[default]
    None,
    TraceOne,
    MaxEigOne,
    Bayesian,
}

impl NormalizationStrategy {
    pub const ALL: [Self; 4] = [Self::None, Self::TraceOne, Self::MaxEigOne, Self::Bayesian];

    pub fn name(self) -> &'static str {
        match self {
            Self::None => "none",
            Self::TraceOne => "trace",
            Self::MaxEigOne => "maxeig",
            Self::Bayesian => "bayes",
        }
    }
}

impl fmt::Display for NormalizationStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NormalizationStrategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| format!("unknown normalization '{s}' (expected none, trace, maxeig or bayes)"))
    }
}

pub fn normalize(m: &SymMatrix, strategy: NormalizationStrategy, tol: &Tolerances) -> Result<SymMatrix> {
    match strategy {
        NormalizationStrategy::None => Ok(m.clone()),
        NormalizationStrategy::TraceOne => {
            psd::ensure_psd(m, tol)?;
            let t = m.trace();
            if t <= 0.0 {
                return Err(Error::ZeroOperator);
            }
            Ok(m.scale(1.0 / t))
        }
        NormalizationStrategy::MaxEigOne => {
            let l = psd::eig_psd(m, tol)?.max_eigenvalue();
            if l <= 0.0 {
                return Err(Error::ZeroOperator);
            }
            Ok(m.scale(1.0 / l))
        }
        NormalizationStrategy::Bayesian => bayes_transform(m, tol),
    }
}

/// Replaces the descending spectrum `d_0 >= d_1 >= ..` by its running products
/// `d_0, d_0 d_1, d_0 d_1 d_2, ..`, keeping the eigenvectors.
///
/// Within a repeated eigenvalue the assignment of products to eigenvectors
/// follows the eigensolver's (deterministic) basis.
pub fn bayes_transform(m: &SymMatrix, tol: &Tolerances) -> Result<SymMatrix> {
    let e = psd::eig_psd(m, tol)?;
    let mut acc = 1.0;
    let eigenvalues = e
        .eigenvalues
        .iter()
        .map(|&d| {
            acc *= d.max(0.0);
            acc
        })
        .collect();
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors: e.eigenvectors,
    }
    .reconstruct())
}
