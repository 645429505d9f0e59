//! Sparse vectors over a flat basis index. Zero coefficients are never stored.

use std::collections::BTreeMap;

use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec<F> {
    entries: BTreeMap<usize, F>,
}

impl<F: Field> Default for SparseVec<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> SparseVec<F> {
    pub fn zero() -> Self {
        SparseVec { entries: BTreeMap::new() }
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, F::one())
    }

    pub fn term(i: usize, c: F) -> Self {
        let mut v = Self::zero();
        v.add_term(i, c);
        v
    }

    pub fn from_dense(values: &[F]) -> Self {
        let mut v = Self::zero();
        for (i, c) in values.iter().enumerate() {
            v.add_term(i, c.clone());
        }
        v
    }

    pub fn to_dense(&self, len: usize) -> Vec<F> {
        let mut out = vec![F::zero(); len];
        for (&i, c) in &self.entries {
            out[i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> F {
        self.entries.get(&i).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> + '_ {
        self.entries.iter().map(|(&i, c)| (i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn add_term(&mut self, i: usize, c: F) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&i) {
            Some(slot) => {
                let s = slot.clone() + c;
                if s.is_zero() {
                    self.entries.remove(&i);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.entries.insert(i, c);
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &SparseVec<F>, c: &F) {
        if c.is_zero() {
            return;
        }
        for (i, x) in other.iter() {
            self.add_term(i, x.clone() * c);
        }
    }

    pub fn add_assign(&mut self, other: &SparseVec<F>) {
        for (i, x) in other.iter() {
            self.add_term(i, x.clone());
        }
    }

    pub fn scaled(&self, c: &F) -> SparseVec<F> {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> SparseVec<F> {
        self.scaled(&-F::one())
    }

    pub fn sub(&self, other: &SparseVec<F>) -> SparseVec<F> {
        let mut out = self.clone();
        out.add_scaled(other, &-F::one());
        out
    }

    /// Outer product into a space indexed by `i * right_dim + j`.
    pub fn outer(&self, other: &SparseVec<F>, right_dim: usize) -> SparseVec<F> {
        let mut out = Self::zero();
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                out.add_term(i * right_dim + j, a.clone() * b);
            }
        }
        out
    }

    /// Applies a linear map given by the images of basis vectors.
    pub fn map(&self, images: impl Fn(usize) -> SparseVec<F>) -> SparseVec<F> {
        let mut out = Self::zero();
        for (i, c) in self.iter() {
            out.add_scaled(&images(i), c);
        }
        out
    }

    /// Dot product with a dense covector.
    pub fn pair(&self, covector: &[F]) -> F {
        let mut acc = F::zero();
        for (i, c) in self.iter() {
            acc = acc + c.clone() * &covector[i];
        }
        acc
    }
}

/// Dense scratch accumulator for hot loops; drained into a [`SparseVec`].
pub struct Accumulator<F> {
    values: Vec<F>,
    touched: Vec<usize>,
    marked: Vec<bool>,
}

impl<F: Field> Accumulator<F> {
    pub fn new(len: usize) -> Self {
        Accumulator { values: vec![F::zero(); len], touched: Vec::new(), marked: vec![false; len] }
    }

    pub fn add(&mut self, i: usize, c: F) {
        if !self.marked[i] {
            self.marked[i] = true;
            self.touched.push(i);
        }
        let v = std::mem::replace(&mut self.values[i], F::zero());
        self.values[i] = v + c;
    }

    pub fn drain(&mut self) -> SparseVec<F> {
        let mut out = SparseVec::zero();
        for i in self.touched.drain(..) {
            self.marked[i] = false;
            let v = std::mem::replace(&mut self.values[i], F::zero());
            if !v.is_zero() {
                out.entries.insert(i, v);
            }
        }
        out
    }
}
