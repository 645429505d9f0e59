//! Sparse tensors holding structure constants.
//!
//! Axis convention used throughout the crate: input axes first, then output
//! axes. A multiplication tensor `mult[i][j][k]` is the coefficient of `e_k` in
//! `e_i e_j`; a matrix `m[i][j]` is the coefficient of `e_j` in the image of
//! `e_i`.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::sparse::SparseVec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<F> {
    shape: Vec<usize>,
    entries: BTreeMap<Vec<usize>, F>,
}

/// Row-major flattening of a multi-index.
pub fn flatten(shape: &[usize], index: &[usize]) -> usize {
    index.iter().zip(shape).fold(0, |acc, (&i, &d)| acc * d + i)
}

pub fn unflatten(shape: &[usize], mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; shape.len()];
    for (slot, &d) in out.iter_mut().zip(shape).rev() {
        *slot = flat % d;
        flat /= d;
    }
    out
}

/// Iterates all multi-indices of `shape` in lexicographic order.
pub fn multi_indices(shape: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = shape.iter().product();
    (0..total).map(move |f| unflatten(shape, f))
}

impl<F: Field> Tensor<F> {
    pub fn zeros(shape: Vec<usize>) -> Self {
        Tensor { shape, entries: BTreeMap::new() }
    }

    pub fn from_entries(
        shape: Vec<usize>,
        entries: impl IntoIterator<Item = (Vec<usize>, F)>,
    ) -> Result<Self> {
        let mut t = Self::zeros(shape);
        for (idx, c) in entries {
            t.add(&idx, c)?;
        }
        Ok(t)
    }

    pub fn identity(n: usize) -> Self {
        let mut t = Self::zeros(vec![n, n]);
        for i in 0..n {
            t.entries.insert(vec![i, i], F::one());
        }
        t
    }

    pub fn vector(values: &[F]) -> Self {
        let mut t = Self::zeros(vec![values.len()]);
        for (i, c) in values.iter().enumerate() {
            if !c.is_zero() {
                t.entries.insert(vec![i], c.clone());
            }
        }
        t
    }

    /// Reads a sparse vector whose flat index is row-major over `shape`.
    pub fn from_sparse(shape: Vec<usize>, v: &SparseVec<F>) -> Self {
        let mut t = Self::zeros(shape);
        for (i, c) in v.iter() {
            let idx = unflatten(&t.shape, i);
            t.entries.insert(idx, c.clone());
        }
        t
    }

    pub fn to_sparse(&self) -> SparseVec<F> {
        let mut v = SparseVec::zero();
        for (idx, c) in &self.entries {
            v.add_term(flatten(&self.shape, idx), c.clone());
        }
        v
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &F)> + '_ {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn check_index(&self, idx: &[usize]) -> Result<()> {
        if idx.len() != self.shape.len() || idx.iter().zip(&self.shape).any(|(i, d)| i >= d) {
            return Err(Error::Shape(format!("index {idx:?} outside shape {:?}", self.shape)));
        }
        Ok(())
    }

    pub fn get(&self, idx: &[usize]) -> F {
        self.entries.get(idx).cloned().unwrap_or_else(F::zero)
    }

    pub fn set(&mut self, idx: &[usize], c: F) -> Result<()> {
        self.check_index(idx)?;
        if c.is_zero() {
            self.entries.remove(idx);
        } else {
            self.entries.insert(idx.to_vec(), c);
        }
        Ok(())
    }

    pub fn add(&mut self, idx: &[usize], c: F) -> Result<()> {
        let s = self.get(idx) + c;
        self.set(idx, s)
    }

    /// Reorders axes: output axis `a` is input axis `perm[a]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.rank() {
            return Err(Error::Shape(format!("permutation {perm:?} for rank {}", self.rank())));
        }
        let shape = perm.iter().map(|&p| self.shape[p]).collect();
        let mut t = Self::zeros(shape);
        for (idx, c) in &self.entries {
            t.entries.insert(perm.iter().map(|&p| idx[p]).collect(), c.clone());
        }
        Ok(t)
    }

    /// Sums over the paired axes `(axis of self, axis of other)`. The result
    /// carries the unpaired axes of `self` followed by those of `other`, each in
    /// their original order. No pairs gives the outer (Kronecker) product.
    pub fn contract(&self, other: &Tensor<F>, pairs: &[(usize, usize)]) -> Result<Tensor<F>> {
        for &(a, b) in pairs {
            if a >= self.rank() || b >= other.rank() {
                return Err(Error::Shape(format!("pair ({a},{b}) out of range")));
            }
            if self.shape[a] != other.shape[b] {
                return Err(Error::Shape(format!(
                    "paired axes ({a},{b}) have dimensions {} and {}",
                    self.shape[a], other.shape[b]
                )));
            }
        }
        let mine: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let theirs: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        if has_duplicates(&mine) || has_duplicates(&theirs) {
            return Err(Error::Shape("axis paired twice".into()));
        }
        let free_self: Vec<usize> = (0..self.rank()).filter(|a| !mine.contains(a)).collect();
        let free_other: Vec<usize> = (0..other.rank()).filter(|a| !theirs.contains(a)).collect();
        let shape = free_self
            .iter()
            .map(|&a| self.shape[a])
            .chain(free_other.iter().map(|&a| other.shape[a]))
            .collect();

        let mut grouped: HashMap<Vec<usize>, Vec<(Vec<usize>, &F)>> = HashMap::new();
        for (idx, c) in &other.entries {
            let key = theirs.iter().map(|&a| idx[a]).collect();
            let rest = free_other.iter().map(|&a| idx[a]).collect();
            grouped.entry(key).or_default().push((rest, c));
        }
        let mut out = Self::zeros(shape);
        for (idx, c) in &self.entries {
            let key: Vec<usize> = mine.iter().map(|&a| idx[a]).collect();
            let Some(partners) = grouped.get(&key) else { continue };
            let head: Vec<usize> = free_self.iter().map(|&a| idx[a]).collect();
            for (rest, d) in partners {
                let mut full = head.clone();
                full.extend_from_slice(rest);
                let s = out.get(&full) + c.clone() * *d;
                if s.is_zero() {
                    out.entries.remove(&full);
                } else {
                    out.entries.insert(full, s);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> Tensor<F> {
        let mut t = Self::zeros(self.shape.clone());
        if !c.is_zero() {
            for (idx, v) in &self.entries {
                t.entries.insert(idx.clone(), v.clone() * c);
            }
        }
        t
    }

    pub fn plus(&self, other: &Tensor<F>) -> Result<Tensor<F>> {
        if self.shape != other.shape {
            return Err(Error::Shape(format!("{:?} vs {:?}", self.shape, other.shape)));
        }
        let mut t = self.clone();
        for (idx, c) in &other.entries {
            t.add(idx, c.clone())?;
        }
        Ok(t)
    }
}

fn has_duplicates(v: &[usize]) -> bool {
    v.iter().enumerate().any(|(i, a)| v[..i].contains(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};
    use num_traits::One;

    #[test]
    fn identity_composed_with_identity() {
        let id = Tensor::<Q>::identity(2);
        assert_eq!(id.contract(&id, &[(1, 0)]).unwrap(), id);
    }

    #[test]
    fn outer_product_shape() {
        let v = Tensor::vector(&[Q::one(), Q::from_i64(2)]);
        let w = Tensor::vector(&[Q::one(), Q::one(), Q::from_i64(3)]);
        let o = v.contract(&w, &[]).unwrap();
        assert_eq!(o.shape(), &[2, 3]);
        assert_eq!(o.get(&[1, 2]), Q::from_i64(6));
    }

    #[test]
    fn shape_mismatch_is_error() {
        let a = Tensor::<Fp<5>>::identity(2);
        let b = Tensor::<Fp<5>>::identity(3);
        assert!(a.contract(&b, &[(1, 0)]).is_err());
        assert!(a.contract(&a, &[(0, 0), (0, 1)]).is_err());
    }

    #[test]
    fn flatten_roundtrip() {
        let shape = [2, 3, 4];
        for f in 0..24 {
            assert_eq!(flatten(&shape, &unflatten(&shape, f)), f);
        }
        let all: Vec<_> = multi_indices(&shape).collect();
        assert_eq!(all.first().unwrap(), &vec![0, 0, 0]);
        assert_eq!(all[1], vec![0, 0, 1]);
    }
}
