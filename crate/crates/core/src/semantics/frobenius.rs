//! The basis-induced Frobenius algebra, undoubled on vectors and doubled on
//! density tensors, and the subject relative clause built from it.

use crate::error::{Error, Result};

use super::density::DensityTensor;
use super::tensor::Tensor;

/// How a deleted wire is removed in the doubled setting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IotaMode {
    /// `iota_* ⊗ iota`: sum of all entries over the ket/bra index pair.
    #[default]
    EntrySum,
    /// Partial trace over the ket/bra index pair.
    Trace,
}

/// Doubled merge on equal spaces: the entrywise (Hadamard) product.
pub fn frobenius_mu(rho: &DensityTensor, sigma: &DensityTensor) -> Result<DensityTensor> {
    rho.same_spaces(sigma)?;
    DensityTensor::from_matrix(rho.spaces().to_vec(), rho.matrix().hadamard(sigma.matrix())?)
}

/// Deletes space `space_index` of `rho`.
pub fn frobenius_iota(rho: &DensityTensor, space_index: usize, mode: IotaMode) -> Result<DensityTensor> {
    let m = rho.spaces().len();
    if space_index >= m {
        return Err(Error::IndexOutOfRange {
            index: space_index,
            len: m,
        });
    }
    let t = rho.to_tensor();
    let reduced = match mode {
        IotaMode::EntrySum => t.sum_legs(&[space_index, m + space_index]),
        IotaMode::Trace => t.trace_pairs(&[(space_index, m + space_index)])?,
    };
    let mut spaces = rho.spaces().to_vec();
    spaces.remove(space_index);
    Ok(DensityTensor::from_tensor(spaces, reduced))
}

/// Meaning of `subj who verb obj`: `(mu_N ⊗ iota_S ⊗ eps_N)(subj ⊗ verb ⊗ obj)`.
///
/// The object is contracted into the verb's third space, the verb's sentence
/// space is deleted and the verb's subject space is merged with `subj`.
pub fn relative_clause(
    subj: &DensityTensor,
    verb: &DensityTensor,
    obj: &DensityTensor,
    mode: IotaMode,
) -> Result<DensityTensor> {
    let vs = verb.spaces();
    if vs.len() != 3 {
        return Err(Error::PatternMismatch(format!(
            "verb must have three spaces, has {}",
            vs.len()
        )));
    }
    if subj.spaces() != [vs[0]] {
        return Err(Error::DimMismatch {
            left: subj.flat_dim(),
            right: vs[0],
        });
    }
    if obj.spaces() != [vs[2]] {
        return Err(Error::DimMismatch {
            left: obj.flat_dim(),
            right: vs[2],
        });
    }
    // verb legs: [k_subj, k_s, k_obj, b_subj, b_s, b_obj]
    let with_obj = verb.to_tensor().contract(&obj.to_tensor(), &[(2, 0), (5, 1)])?;
    let without_s = frobenius_iota(&DensityTensor::from_tensor(vec![vs[0], vs[1]], with_obj), 1, mode)?;
    frobenius_mu(subj, &without_s)
}

/// The doubled Frobenius subject relative pronoun of type `n.r n s.l n`:
/// `|w><w|` with `w = sum_{i,q} e_i ⊗ e_i ⊗ s_q ⊗ e_i`.
pub fn subject_pronoun(noun_dim: usize, sentence_dim: usize) -> Result<DensityTensor> {
    let spaces = [noun_dim, noun_dim, sentence_dim, noun_dim];
    let mut w = vec![0.0; spaces.iter().product()];
    for i in 0..noun_dim {
        for q in 0..sentence_dim {
            let idx = ((i * noun_dim + i) * sentence_dim + q) * noun_dim + i;
            w[idx] = 1.0;
        }
    }
    super::double(&w, &spaces)
}

/// Undoubled copy `Δ: v_i ↦ v_i ⊗ v_i`, returned as a `d x d` row-major tensor.
pub fn copy(v: &[f64]) -> Vec<f64> {
    let d = v.len();
    let mut out = vec![0.0; d * d];
    for (i, x) in v.iter().enumerate() {
        out[i * d + i] = *x;
    }
    out
}

/// Undoubled merge `μ: v_i ⊗ v_j ↦ δ_ij v_i` on a `d x d` tensor.
pub fn merge(t: &[f64], d: usize) -> Vec<f64> {
    assert_eq!(t.len(), d * d);
    (0..d).map(|i| t[i * d + i]).collect()
}

/// Undoubled delete `ι: v_i ↦ 1`.
pub fn delete(v: &[f64]) -> f64 {
    v.iter().sum()
}

/// Undoubled unit `ζ: 1 ↦ sum_i v_i`.
pub fn unit(d: usize) -> Vec<f64> {
    vec![1.0; d]
}

/// Swap of the two factors of a `d x d` tensor.
pub fn swap(t: &[f64], d: usize) -> Vec<f64> {
    Tensor::new(vec![d, d], t.to_vec()).permute(&[1, 0]).data
}
