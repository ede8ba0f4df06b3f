//! The error-term view of entailment: `A` entails `B` up to an error `E` when
//! `A + D = B + E` for some `D`, with a size map on the possible errors.

use crate::error::{Error, Result};
use crate::psd::{self, SymMatrix, Tolerances};

use super::hyponymy::k_max;

/// Error terms with `A + D = B + E`, both positive.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorDecomposition {
    pub e: SymMatrix,
    pub d: SymMatrix,
}

/// Splits `A - B` spectrally into its positive part `E` and negative part `D`.
pub fn general_error(a: &SymMatrix, b: &SymMatrix, tol: &Tolerances) -> Result<ErrorDecomposition> {
    psd::ensure_psd(a, tol)?;
    psd::ensure_psd(b, tol)?;
    let diff = psd::eig(&a.sub(b)?)?;
    Ok(ErrorDecomposition {
        e: diff.map_spectrum(|l| l.max(0.0)),
        d: diff.map_spectrum(|l| (-l).max(0.0)),
    })
}

/// A subset of `{0, .., universe - 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSetProposition {
    universe: usize,
    bits: Vec<u64>,
}

impl FiniteSetProposition {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            bits: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn from_elements(universe: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut p = Self::empty(universe);
        for e in elements {
            p.insert(e)?;
        }
        Ok(p)
    }

    pub fn insert(&mut self, element: usize) -> Result<()> {
        if element >= self.universe {
            return Err(Error::OutsideUniverse {
                element,
                universe: self.universe,
            });
        }
        self.bits[element / 64] |= 1 << (element % 64);
        Ok(())
    }

    pub fn contains(&self, element: usize) -> bool {
        element < self.universe && self.bits[element / 64] & (1 << (element % 64)) != 0
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// `self \ other`.
    pub fn difference(&self, other: &Self) -> Self {
        Self {
            universe: self.universe,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & !b).collect(),
        }
    }
}

/// `(A ⊆ B, |A \ B| / |A|)`; the error size is the conditional probability of
/// `not B` given `A` under the uniform distribution.
pub fn set_entailment(a: &FiniteSetProposition, b: &FiniteSetProposition) -> Result<(bool, f64)> {
    if a.universe != b.universe {
        return Err(Error::DimMismatch {
            left: a.universe,
            right: b.universe,
        });
    }
    if a.is_empty() {
        return Err(Error::EmptyProposition);
    }
    let err = a.difference(b).len() as f64 / a.len() as f64;
    Ok((a.is_subset(b), err))
}

/// A proposition type with crisp entailment and a size for the smallest error.
pub trait GradedEntailment {
    fn entails(&self, other: &Self, tol: &Tolerances) -> Result<bool>;

    /// Size of the smallest admissible error term in `[0, 1]`, or `None` when
    /// no admissible error exists.
    fn error_size(&self, other: &Self, tol: &Tolerances) -> Result<Option<f64>>;
}

impl GradedEntailment for FiniteSetProposition {
    fn entails(&self, other: &Self, _tol: &Tolerances) -> Result<bool> {
        set_entailment(self, other).map(|(e, _)| e)
    }

    fn error_size(&self, other: &Self, _tol: &Tolerances) -> Result<Option<f64>> {
        set_entailment(self, other).map(|(_, s)| Some(s))
    }
}

/// Positive operators with errors restricted to `E = (1 - k) A`, sized by `1 - k`.
impl GradedEntailment for SymMatrix {
    fn entails(&self, other: &Self, tol: &Tolerances) -> Result<bool> {
        psd::loewner_leq(self, other, tol)
    }

    fn error_size(&self, other: &Self, tol: &Tolerances) -> Result<Option<f64>> {
        Ok(k_max(self, other, tol)?.k_max.map(|k| 1.0 - k))
    }
}
