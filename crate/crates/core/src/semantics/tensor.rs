//! Small dense tensor engine: permutation, pairwise contraction and partial traces.

use crate::error::{Error, Result};

/// Upper bound on the number of stored entries of any tensor.
pub const MAX_ENTRIES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Tensor {
    pub dims: Vec<usize>,
    pub data: Vec<f64>,
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

pub(crate) fn checked_size(dims: &[usize]) -> Result<usize> {
    let mut n: usize = 1;
    for &d in dims {
        n = n.saturating_mul(d);
    }
    if n > MAX_ENTRIES {
        return Err(Error::TooLarge {
            entries: n,
            limit: MAX_ENTRIES,
        });
    }
    Ok(n)
}

impl Tensor {
    pub fn new(dims: Vec<usize>, data: Vec<f64>) -> Self {
        debug_assert_eq!(dims.iter().product::<usize>(), data.len());
        Self { dims, data }
    }

    pub fn scalar(v: f64) -> Self {
        Self::new(Vec::new(), vec![v])
    }

    /// Reorders legs so that leg `k` of the result is leg `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        debug_assert_eq!(perm.len(), self.dims.len());
        if perm.iter().enumerate().all(|(k, &p)| k == p) {
            return self.clone();
        }
        let src_strides = strides(&self.dims);
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let walk: Vec<usize> = perm.iter().map(|&p| src_strides[p]).collect();
        let mut data = Vec::with_capacity(self.data.len());
        let mut idx = vec![0usize; dims.len()];
        let mut offset = 0usize;
        for _ in 0..self.data.len() {
            data.push(self.data[offset]);
            for k in (0..dims.len()).rev() {
                idx[k] += 1;
                offset += walk[k];
                if idx[k] < dims[k] {
                    break;
                }
                offset -= walk[k] * dims[k];
                idx[k] = 0;
            }
        }
        Tensor { dims, data }
    }

    /// Contracts leg `a` of `self` with leg `b` of `other` for every `(a, b)`
    /// in `pairs`. Result legs: free legs of `self` in order, then free legs
    /// of `other` in order.
    pub fn contract(&self, other: &Tensor, pairs: &[(usize, usize)]) -> Result<Tensor> {
        for &(a, b) in pairs {
            if self.dims[a] != other.dims[b] {
                return Err(Error::DimMismatch {
                    left: self.dims[a],
                    right: other.dims[b],
                });
            }
        }
        let free_a: Vec<usize> = (0..self.dims.len())
            .filter(|i| !pairs.iter().any(|p| p.0 == *i))
            .collect();
        let free_b: Vec<usize> = (0..other.dims.len())
            .filter(|i| !pairs.iter().any(|p| p.1 == *i))
            .collect();
        let mut out_dims: Vec<usize> = free_a.iter().map(|&i| self.dims[i]).collect();
        out_dims.extend(free_b.iter().map(|&i| other.dims[i]));
        checked_size(&out_dims)?;

        let perm_a: Vec<usize> = free_a.iter().copied().chain(pairs.iter().map(|p| p.0)).collect();
        let perm_b: Vec<usize> = pairs.iter().map(|p| p.1).chain(free_b.iter().copied()).collect();
        let a = self.permute(&perm_a);
        let b = other.permute(&perm_b);
        let rows: usize = free_a.iter().map(|&i| self.dims[i]).product();
        let inner: usize = pairs.iter().map(|p| self.dims[p.0]).product();
        let cols: usize = free_b.iter().map(|&i| other.dims[i]).product();

        let mut data = vec![0.0; rows * cols];
        for r in 0..rows {
            let arow = &a.data[r * inner..(r + 1) * inner];
            let orow = &mut data[r * cols..(r + 1) * cols];
            for (k, &av) in arow.iter().enumerate() {
                if av == 0.0 {
                    continue;
                }
                let brow = &b.data[k * cols..(k + 1) * cols];
                for (o, bv) in orow.iter_mut().zip(brow) {
                    *o += av * bv;
                }
            }
        }
        Ok(Tensor::new(out_dims, data))
    }

    /// Sums over the diagonal of each leg pair in `pairs`; the remaining legs
    /// keep their order.
    pub fn trace_pairs(&self, pairs: &[(usize, usize)]) -> Result<Tensor> {
        for &(a, b) in pairs {
            if self.dims[a] != self.dims[b] {
                return Err(Error::DimMismatch {
                    left: self.dims[a],
                    right: self.dims[b],
                });
            }
        }
        let traced = |i: &usize| pairs.iter().any(|p| p.0 == *i || p.1 == *i);
        let free: Vec<usize> = (0..self.dims.len()).filter(|i| !traced(i)).collect();
        let perm: Vec<usize> = free
            .iter()
            .copied()
            .chain(pairs.iter().map(|p| p.0))
            .chain(pairs.iter().map(|p| p.1))
            .collect();
        let t = self.permute(&perm);
        let rows: usize = free.iter().map(|&i| self.dims[i]).product();
        let inner: usize = pairs.iter().map(|p| self.dims[p.0]).product();
        let mut data = vec![0.0; rows];
        for (r, out) in data.iter_mut().enumerate() {
            let block = &t.data[r * inner * inner..(r + 1) * inner * inner];
            *out = (0..inner).map(|k| block[k * inner + k]).sum();
        }
        Ok(Tensor::new(free.iter().map(|&i| self.dims[i]).collect(), data))
    }

    /// Sums each leg in `legs` out entirely.
    pub fn sum_legs(&self, legs: &[usize]) -> Tensor {
        let free: Vec<usize> = (0..self.dims.len()).filter(|i| !legs.contains(i)).collect();
        let perm: Vec<usize> = free.iter().copied().chain(legs.iter().copied()).collect();
        let t = self.permute(&perm);
        let rows: usize = free.iter().map(|&i| self.dims[i]).product();
        let inner: usize = legs.iter().map(|&i| self.dims[i]).product();
        let data = (0..rows)
            .map(|r| t.data[r * inner..(r + 1) * inner].iter().sum())
            .collect();
        Tensor::new(free.iter().map(|&i| self.dims[i]).collect(), data)
    }
}
