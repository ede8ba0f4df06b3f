use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::pregroup::PregroupType;
use crate::psd::{self, SymMatrix, Tolerances};

use super::tensor::{checked_size, Tensor};

/// Dimension of the space each atomic base type is sent to.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpaceAssignment {
    dims: BTreeMap<String, usize>,
}

impl SpaceAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, base: impl Into<String>, dim: usize) -> Self {
        self.insert(base, dim);
        self
    }

    pub fn insert(&mut self, base: impl Into<String>, dim: usize) {
        assert!(dim >= 1, "space dimension must be at least 1");
        self.dims.insert(base.into(), dim);
    }

    pub fn get(&self, base: &str) -> Option<usize> {
        self.dims.get(base).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.dims.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// Space dimensions of each simple in `ty`; adjoints use their base's space.
    pub fn dims_of(&self, ty: &PregroupType) -> Result<Vec<usize>> {
        ty.bases()
            .map(|b| self.get(b).ok_or_else(|| Error::UnknownBase(b.to_string())))
            .collect()
    }
}

/// Positive operator over `spaces[0] ⊗ ... ⊗ spaces[m-1]`.
///
/// Stored as a `D x D` row-major matrix with `D = prod(spaces)`, which is the
/// same memory layout as a `2m`-leg tensor with all ket legs before all bra
/// legs. A tensor over no spaces is a scalar.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityTensor {
    spaces: Vec<usize>,
    matrix: SymMatrix,
}

impl DensityTensor {
    /// Validates shape, symmetry and positivity.
    pub fn new(spaces: Vec<usize>, matrix: SymMatrix, tol: &Tolerances) -> Result<Self> {
        let t = Self::from_matrix(spaces, matrix)?;
        psd::ensure_psd(&t.matrix, tol)?;
        Ok(t)
    }

    /// Shape check only; positivity is the caller's responsibility.
    pub fn from_matrix(spaces: Vec<usize>, matrix: SymMatrix) -> Result<Self> {
        let flat = checked_size(&spaces)?;
        checked_size(&[flat, flat])?;
        if matrix.dim() != flat {
            return Err(Error::DimMismatch {
                left: matrix.dim(),
                right: flat,
            });
        }
        Ok(Self { spaces, matrix })
    }

    pub fn scalar(v: f64) -> Self {
        Self {
            spaces: Vec::new(),
            matrix: SymMatrix::diag(&[v]),
        }
    }

    pub fn spaces(&self) -> &[usize] {
        &self.spaces
    }

    pub fn flat_dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> SymMatrix {
        self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace()
    }

    /// The single entry of a tensor over no spaces.
    pub fn as_scalar(&self) -> Option<f64> {
        self.spaces.is_empty().then(|| self.matrix.get(0, 0))
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            spaces: self.spaces.clone(),
            matrix: self.matrix.scale(c),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_spaces(other)?;
        Ok(Self {
            spaces: self.spaces.clone(),
            matrix: self.matrix.add(&other.matrix)?,
        })
    }

    pub(crate) fn same_spaces(&self, other: &Self) -> Result<()> {
        if self.spaces != other.spaces {
            return Err(Error::DimMismatch {
                left: self.flat_dim(),
                right: other.flat_dim(),
            });
        }
        Ok(())
    }

    pub(crate) fn to_tensor(&self) -> Tensor {
        let dims = self.spaces.iter().chain(&self.spaces).copied().collect();
        Tensor::new(dims, self.matrix.as_slice().to_vec())
    }

    /// Reads back a tensor whose legs are `spaces` kets followed by `spaces` bras.
    pub(crate) fn from_tensor(spaces: Vec<usize>, t: Tensor) -> Self {
        let flat = spaces.iter().product();
        debug_assert_eq!(t.data.len(), flat * flat);
        Self {
            spaces,
            matrix: SymMatrix::from_raw_symmetrized(flat, t.data),
        }
    }
}

/// The rank-one tensor `|v><v|` over `spaces`.
pub fn double(vector: &[f64], spaces: &[usize]) -> Result<DensityTensor> {
    let flat = checked_size(spaces)?;
    if vector.len() != flat {
        return Err(Error::DimMismatch {
            left: vector.len(),
            right: flat,
        });
    }
    if vector.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite);
    }
    DensityTensor::from_matrix(spaces.to_vec(), SymMatrix::outer(vector))
}

#[derive(Debug, Clone, PartialEq)]
pub struct MixtureComponent {
    pub weight: f64,
    pub vector: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Meaning {
    /// `sum_i p_i |w_i><w_i|` with `p_i >= 0` and `sum_i p_i = 1`.
    PureMixture(Vec<MixtureComponent>),
    /// An explicit positive operator on the flattened type space.
    Explicit(SymMatrix),
}

impl Meaning {
    pub fn pure(vector: Vec<f64>) -> Self {
        Meaning::PureMixture(vec![MixtureComponent { weight: 1.0, vector }])
    }

    pub fn mixture(parts: impl IntoIterator<Item = (f64, Vec<f64>)>) -> Self {
        Meaning::PureMixture(
            parts
                .into_iter()
                .map(|(weight, vector)| MixtureComponent { weight, vector })
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WordEntry {
    pub word: String,
    pub ty: PregroupType,
    pub meaning: Meaning,
}

const WEIGHT_SUM_TOL: f64 = 1e-8;

/// Builds the density tensor of a lexicon entry over its type's spaces.
pub fn word_meaning(entry: &WordEntry, spaces: &SpaceAssignment, tol: &Tolerances) -> Result<DensityTensor> {
    let dims = spaces.dims_of(&entry.ty)?;
    match &entry.meaning {
        Meaning::PureMixture(parts) => {
            if parts.is_empty() {
                return Err(Error::BadWeights("empty mixture".into()));
            }
            if let Some(p) = parts.iter().find(|p| p.weight < 0.0 || !p.weight.is_finite()) {
                return Err(Error::BadWeights(format!("weight {} is negative", p.weight)));
            }
            let total: f64 = parts.iter().map(|p| p.weight).sum();
            if (total - 1.0).abs() > WEIGHT_SUM_TOL {
                return Err(Error::BadWeights(format!("weights sum to {total}, not 1")));
            }
            let mut acc: Option<DensityTensor> = None;
            for p in parts {
                let term = double(&p.vector, &dims)?.scale(p.weight);
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term)?,
                });
            }
            Ok(acc.expect("nonempty mixture"))
        }
        Meaning::Explicit(m) => DensityTensor::new(dims, m.clone(), tol),
    }
}
