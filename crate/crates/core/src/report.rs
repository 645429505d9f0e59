//! Pass/fail verdicts carrying the first violating basis tuple.

use crate::field::Field;
use crate::sparse::SparseVec;
use crate::tensor::{multi_indices, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report<F> {
    pub passed: bool,
    /// The check that passed, or the first one that failed.
    pub axiom: String,
    /// Lexicographically first violating basis multi-index.
    pub witness: Option<Vec<usize>>,
    pub lhs: Option<Tensor<F>>,
    pub rhs: Option<Tensor<F>>,
}

impl<F: Field> Report<F> {
    pub fn pass(axiom: impl Into<String>) -> Self {
        Report { passed: true, axiom: axiom.into(), witness: None, lhs: None, rhs: None }
    }

    pub fn fail(axiom: impl Into<String>, witness: Vec<usize>, lhs: Tensor<F>, rhs: Tensor<F>) -> Self {
        Report { passed: false, axiom: axiom.into(), witness: Some(witness), lhs: Some(lhs), rhs: Some(rhs) }
    }

    /// A failure with no tensor sides (e.g. a rank condition).
    pub fn fail_bare(axiom: impl Into<String>, witness: Vec<usize>) -> Self {
        Report { passed: false, axiom: axiom.into(), witness: Some(witness), lhs: None, rhs: None }
    }

    pub fn relabel(mut self, axiom: impl Into<String>) -> Self {
        self.axiom = axiom.into();
        self
    }
}

/// Runs `sides` over every multi-index of `inputs` in lexicographic order and
/// reports the first index where the two sides differ. Both sides are flat
/// vectors over `out_shape`.
pub fn check_identity<F: Field>(
    axiom: &str,
    inputs: &[usize],
    out_shape: &[usize],
    mut sides: impl FnMut(&[usize]) -> (SparseVec<F>, SparseVec<F>),
) -> Report<F> {
    for idx in multi_indices(inputs) {
        let (l, r) = sides(&idx);
        if l != r {
            return Report::fail(
                axiom,
                idx,
                Tensor::from_sparse(out_shape.to_vec(), &l),
                Tensor::from_sparse(out_shape.to_vec(), &r),
            );
        }
    }
    Report::pass(axiom)
}
