//! Associative unital algebras given by structure constants.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::report::{check_identity, Report};
use crate::sparse::{Accumulator, SparseVec};
use crate::tensor::Tensor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra<F> {
    dim: usize,
    /// `table[i * dim + j] = e_i e_j`
    table: Vec<SparseVec<F>>,
    unit: SparseVec<F>,
}

impl<F: Field> FinAlgebra<F> {
    /// Builds and verifies associativity and unit laws.
    pub fn new(mult: &Tensor<F>, unit: &Tensor<F>) -> Result<Self> {
        let a = Self::from_tensors_unchecked(mult, unit)?;
        let r = a.verify();
        if !r.passed {
            return Err(Error::AxiomFailure(format!("{} at {:?}", r.axiom, r.witness)));
        }
        Ok(a)
    }

    pub fn from_tensors_unchecked(mult: &Tensor<F>, unit: &Tensor<F>) -> Result<Self> {
        let n = unit.shape().first().copied().unwrap_or(0);
        if unit.rank() != 1 || mult.shape() != [n, n, n] {
            return Err(Error::Shape(format!(
                "algebra of dim {n}: mult {:?}, unit {:?}",
                mult.shape(),
                unit.shape()
            )));
        }
        let mut table = vec![SparseVec::zero(); n * n];
        for (idx, c) in mult.entries() {
            table[idx[0] * n + idx[1]].add_term(idx[2], c.clone());
        }
        Ok(FinAlgebra { dim: n, table, unit: unit.to_sparse() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &SparseVec<F> {
        &self.unit
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.table[i * self.dim + j]
    }

    pub fn mul(&self, a: &SparseVec<F>, b: &SparseVec<F>) -> SparseVec<F> {
        let mut acc = Accumulator::new(self.dim);
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let xy = x.clone() * y;
                for (k, c) in self.mul_basis(i, j).iter() {
                    acc.add(k, xy.clone() * c);
                }
            }
        }
        acc.drain()
    }

    pub fn mult_tensor(&self) -> Tensor<F> {
        let n = self.dim;
        let mut t = Tensor::zeros(vec![n, n, n]);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.mul_basis(i, j).iter() {
                    t.set(&[i, j, k], c.clone()).expect("in range");
                }
            }
        }
        t
    }

    pub fn unit_tensor(&self) -> Tensor<F> {
        Tensor::from_sparse(vec![self.dim], &self.unit)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    /// The opposite algebra.
    pub fn opposite(&self) -> Self {
        let n = self.dim;
        let mut table = vec![SparseVec::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = self.mul_basis(j, i).clone();
            }
        }
        FinAlgebra { dim: n, table, unit: self.unit.clone() }
    }

    /// Exhaustive associativity then unit check.
    pub fn verify(&self) -> Report<F> {
        let r = self.verify_associativity();
        if !r.passed {
            return r;
        }
        self.verify_unit()
    }

    pub fn verify_unit(&self) -> Report<F> {
        let n = self.dim;
        check_identity("unit", &[n], &[2, n], |idx| {
            let e = SparseVec::basis(idx[0]);
            let left = self.mul(&self.unit, &e);
            let right = self.mul(&e, &self.unit);
            (stack2(&left, &right, n), stack2(&e, &e, n))
        })
    }

    pub fn verify_associativity(&self) -> Report<F> {
        let n = self.dim;
        let mut l = Accumulator::new(n);
        let mut r = Accumulator::new(n);
        check_identity("associativity", &[n, n, n], &[n], |idx| {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            for (a, c) in self.mul_basis(i, j).iter() {
                for (b, d) in self.mul_basis(a, k).iter() {
                    l.add(b, c.clone() * d);
                }
            }
            for (a, c) in self.mul_basis(j, k).iter() {
                for (b, d) in self.mul_basis(i, a).iter() {
                    r.add(b, c.clone() * d);
                }
            }
            (l.drain(), r.drain())
        })
    }
}

/// Places two vectors of length `n` side by side in a space of length `2n`.
pub(crate) fn stack2<F: Field>(a: &SparseVec<F>, b: &SparseVec<F>, n: usize) -> SparseVec<F> {
    let mut out = a.clone();
    for (i, c) in b.iter() {
        out.add_term(n + i, c.clone());
    }
    out
}
