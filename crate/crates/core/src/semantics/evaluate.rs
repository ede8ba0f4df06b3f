use crate::error::{Error, Result};
use crate::pregroup::{flatten, PregroupType, ReductionPattern};

use super::density::{DensityTensor, SpaceAssignment};
use super::tensor::Tensor;

/// Applies the doubled reduction map of `pattern` to `words[0] ⊗ ... ⊗ words[n-1]`.
///
/// Words are folded in left to right and every cup is contracted as soon as
/// both of its ends are present, so the full tensor product is never built.
/// The result lives on the spaces of the surviving simples, in order.
pub fn evaluate(
    words: &[DensityTensor],
    types: &[PregroupType],
    pattern: &ReductionPattern,
    spaces: &SpaceAssignment,
) -> Result<DensityTensor> {
    if words.len() != types.len() {
        return Err(Error::PatternMismatch(format!(
            "{} word meanings for {} types",
            words.len(),
            types.len()
        )));
    }
    let flat = flatten(types);
    pattern.check_structure(&flat)?;
    let mut flat_dims = Vec::with_capacity(flat.len());
    for (w, ty) in words.iter().zip(types) {
        let dims = spaces.dims_of(ty)?;
        if w.spaces() != dims.as_slice() {
            return Err(Error::DimMismatch {
                left: w.flat_dim(),
                right: dims.iter().product(),
            });
        }
        flat_dims.extend(dims);
    }
    for &(i, j) in &pattern.matches {
        if flat_dims[i] != flat_dims[j] {
            return Err(Error::DimMismatch {
                left: flat_dims[i],
                right: flat_dims[j],
            });
        }
    }

    let partner_of = |p: usize| {
        pattern
            .matches
            .iter()
            .find_map(|&(i, j)| (j == p).then_some(i).or((i == p).then_some(j)))
    };

    // acc has ket legs for `open` followed by the matching bra legs
    let mut acc = Tensor::scalar(1.0);
    let mut open: Vec<usize> = Vec::new();
    let mut offset = 0;
    for w in words {
        let m = w.spaces().len();
        let range = offset..offset + m;
        let mut tensor = w.to_tensor();
        let mut local: Vec<usize> = range.clone().collect();

        let internal: Vec<(usize, usize)> = pattern
            .matches
            .iter()
            .filter(|(i, j)| range.contains(i) && range.contains(j))
            .map(|&(i, j)| (i - offset, j - offset))
            .collect();
        if !internal.is_empty() {
            let pairs: Vec<(usize, usize)> = internal.iter().flat_map(|&(a, b)| [(a, b), (m + a, m + b)]).collect();
            tensor = tensor.trace_pairs(&pairs)?;
            local.retain(|p| !internal.iter().any(|&(a, b)| *p == a + offset || *p == b + offset));
        }

        let na = open.len();
        let nw = local.len();
        let mut pairs = Vec::new();
        let mut joined_acc = Vec::new();
        let mut joined_word = Vec::new();
        for (wl, &p) in local.iter().enumerate() {
            if let Some(q) = partner_of(p).filter(|q| *q < offset) {
                let al = open
                    .iter()
                    .position(|&o| o == q)
                    .ok_or_else(|| Error::PatternMismatch(format!("position {q} already consumed")))?;
                pairs.push((al, wl));
                pairs.push((na + al, nw + wl));
                joined_acc.push(q);
                joined_word.push(p);
            }
        }
        let merged = acc.contract(&tensor, &pairs)?;
        let fa = na - joined_acc.len();
        let fw = nw - joined_word.len();
        // [acc kets, acc bras, word kets, word bras] -> [acc kets, word kets, acc bras, word bras]
        let perm: Vec<usize> = (0..fa)
            .chain(2 * fa..2 * fa + fw)
            .chain(fa..2 * fa)
            .chain(2 * fa + fw..2 * fa + 2 * fw)
            .collect();
        acc = merged.permute(&perm);
        open.retain(|o| !joined_acc.contains(o));
        open.extend(local.into_iter().filter(|p| !joined_word.contains(p)));
        offset += m;
    }

    if open != pattern.survivors {
        return Err(Error::PatternMismatch(format!(
            "open positions {open:?} differ from survivors {:?}",
            pattern.survivors
        )));
    }
    let survivor_dims = open.iter().map(|&p| flat_dims[p]).collect();
    Ok(DensityTensor::from_tensor(survivor_dims, acc))
}

/// Normalized Hilbert-Schmidt overlap `tr(rho sigma) / sqrt(tr(rho^2) tr(sigma^2))`.
pub fn similarity(rho: &DensityTensor, sigma: &DensityTensor) -> Result<f64> {
    rho.same_spaces(sigma)?;
    let overlap = rho.matrix().trace_product(sigma.matrix())?;
    let nr = rho.matrix().trace_product(rho.matrix())?;
    let ns = sigma.matrix().trace_product(sigma.matrix())?;
    if nr <= 0.0 || ns <= 0.0 {
        return Err(Error::ZeroOperator);
    }
    Ok((overlap / (nr * ns).sqrt()).clamp(0.0, 1.0))
}

const SNAKE_TOL: f64 = 1e-12;

/// Verifies both snake equations for the cup and cap on a space of dimension
/// `dim`, undoubled and doubled.
pub fn snake_check(dim: usize) -> bool {
    if dim == 0 {
        return false;
    }
    let mut unit = vec![0.0; dim * dim];
    for i in 0..dim {
        unit[i * dim + i] = 1.0;
    }
    let eta = Tensor::new(vec![dim, dim], unit.clone());
    let eps = Tensor::new(vec![dim, dim], unit.clone());
    let identity = Tensor::new(vec![dim, dim], unit);

    let close = |t: Result<Tensor>, expected: &Tensor| -> bool {
        t.map(|t| {
            t.dims == expected.dims
                && t.data
                    .iter()
                    .zip(&expected.data)
                    .all(|(a, b)| (a - b).abs() <= SNAKE_TOL)
        })
        .unwrap_or(false)
    };
    // (1 ⊗ eps)(eta ⊗ 1) and (eps ⊗ 1)(1 ⊗ eta) as maps V -> V
    let left = close(eta.contract(&eps, &[(1, 0)]), &identity);
    let right = close(eps.contract(&eta, &[(1, 0)]), &identity);

    // doubled wires: legs grouped per wire as (ket, bra, ket, bra)
    let doubled = |t: &Tensor| t.contract(t, &[]).map(|d| d.permute(&[0, 2, 1, 3]));
    let (Ok(eta2), Ok(eps2), Ok(id2)) = (doubled(&eta), doubled(&eps), doubled(&identity)) else {
        return false;
    };
    let doubled_left = close(eta2.contract(&eps2, &[(2, 0), (3, 1)]), &id2);
    let doubled_right = close(eps2.contract(&eta2, &[(2, 0), (3, 1)]), &id2);

    left && right && doubled_left && doubled_right
}
