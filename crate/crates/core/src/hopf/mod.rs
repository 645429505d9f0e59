//! Finite-dimensional Hopf algebras by structure constants.
//!
//! [`HopfStructure`] is raw, unverified data (what a file parses into).
//! [`FinHopfAlgebra`] can only be obtained through verification, so every
//! downstream operation works with a Hopf algebra whose axioms hold and whose
//! antipode inverse is cached.

mod builtin;

pub use builtin::{function_algebra, group_algebra, sweedler, taft, Group};

use std::collections::BTreeMap;

use crate::algebra::{stack2, FinAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::matrix::Matrix;
use crate::report::{check_identity, Report};
use crate::sparse::{Accumulator, SparseVec};
use crate::tensor::Tensor;

/// Unverified structure constants of a would-be Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfStructure<F> {
    pub basis_names: Vec<String>,
    /// `(n, n, n)`: coefficient of `e_k` in `e_i e_j`
    pub mult: Tensor<F>,
    /// `(n)`
    pub unit: Tensor<F>,
    /// `(n, n, n)`: coefficient of `e_j ⊗ e_k` in `Δ(e_i)`
    pub comult: Tensor<F>,
    /// `(n)`
    pub counit: Tensor<F>,
    /// `(n, n)`: coefficient of `e_j` in `S(e_i)`
    pub antipode: Tensor<F>,
}

impl<F: Field> HopfStructure<F> {
    pub fn dim(&self) -> usize {
        self.unit.shape().first().copied().unwrap_or(0)
    }

    fn check_shapes(&self) -> Result<usize> {
        let n = self.dim();
        let ok = self.unit.rank() == 1
            && self.mult.shape() == [n, n, n]
            && self.comult.shape() == [n, n, n]
            && self.counit.shape() == [n]
            && self.antipode.shape() == [n, n]
            && (self.basis_names.is_empty() || self.basis_names.len() == n);
        if !ok {
            return Err(Error::Shape(format!(
                "dim {n}: mult {:?}, comult {:?}, counit {:?}, antipode {:?}, {} names",
                self.mult.shape(),
                self.comult.shape(),
                self.counit.shape(),
                self.antipode.shape(),
                self.basis_names.len()
            )));
        }
        Ok(n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Op,
    Cop,
    OpCop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementKind {
    GroupLike,
    Character,
}

/// A verified finite-dimensional Hopf algebra.
#[derive(Clone, Debug)]
pub struct FinHopfAlgebra<F> {
    names: Vec<String>,
    algebra: FinAlgebra<F>,
    coproduct: Vec<Vec<(usize, usize, F)>>,
    coproduct3: Vec<Vec<(usize, usize, usize, F)>>,
    counit: Vec<F>,
    antipode: Vec<SparseVec<F>>,
    antipode_inv: Vec<SparseVec<F>>,
}

impl<F: Field> PartialEq for FinHopfAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.structure_eq(other)
    }
}

impl<F: Field> Eq for FinHopfAlgebra<F> {}

/// Table form shared by verification and the verified type.
struct Tables<F> {
    algebra: FinAlgebra<F>,
    coproduct: Vec<Vec<(usize, usize, F)>>,
    coproduct_vec: Vec<SparseVec<F>>,
    counit: Vec<F>,
    antipode: Vec<SparseVec<F>>,
}

impl<F: Field> Tables<F> {
    fn new(raw: &HopfStructure<F>) -> Result<Self> {
        let n = raw.check_shapes()?;
        let algebra = FinAlgebra::from_tensors_unchecked(&raw.mult, &raw.unit)?;
        let mut coproduct = vec![Vec::new(); n];
        let mut coproduct_vec = vec![SparseVec::zero(); n];
        for (idx, c) in raw.comult.entries() {
            coproduct[idx[0]].push((idx[1], idx[2], c.clone()));
            coproduct_vec[idx[0]].add_term(idx[1] * n + idx[2], c.clone());
        }
        let counit = (0..n).map(|i| raw.counit.get(&[i])).collect();
        let mut antipode = vec![SparseVec::zero(); n];
        for (idx, c) in raw.antipode.entries() {
            antipode[idx[0]].add_term(idx[1], c.clone());
        }
        Ok(Tables { algebra, coproduct, coproduct_vec, counit, antipode })
    }

    fn dim(&self) -> usize {
        self.algebra.dim()
    }

    fn coproduct_of(&self, v: &SparseVec<F>) -> SparseVec<F> {
        v.map(|i| self.coproduct_vec[i].clone())
    }

    fn counit_of(&self, v: &SparseVec<F>) -> F {
        v.pair(&self.counit)
    }

    fn antipode_matrix(&self) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, col) in self.antipode.iter().enumerate() {
            for (j, c) in col.iter() {
                m[(i, j)] = c.clone();
            }
        }
        m
    }

    /// Product in `H ⊗ H` of flat vectors.
    fn mul2(&self, a: &SparseVec<F>, b: &SparseVec<F>) -> SparseVec<F> {
        let n = self.dim();
        let mut acc = Accumulator::new(n * n);
        for (ia, x) in a.iter() {
            let (a1, a2) = (ia / n, ia % n);
            for (ib, y) in b.iter() {
                let (b1, b2) = (ib / n, ib % n);
                let xy = x.clone() * y;
                for (p, c) in self.algebra.mul_basis(a1, b1).iter() {
                    let xyc = xy.clone() * c;
                    for (q, d) in self.algebra.mul_basis(a2, b2).iter() {
                        acc.add(p * n + q, xyc.clone() * d);
                    }
                }
            }
        }
        acc.drain()
    }

    fn verify(&self) -> Report<F> {
        let n = self.dim();
        let r = self.algebra.verify_associativity();
        if !r.passed {
            return r;
        }
        let r = self.algebra.verify_unit();
        if !r.passed {
            return r;
        }
        let r = check_identity("coassociativity", &[n], &[n, n, n], |idx| {
            let mut l = SparseVec::zero();
            let mut r = SparseVec::zero();
            for (a, b, c) in &self.coproduct[idx[0]] {
                for (p, q, d) in &self.coproduct[*a] {
                    l.add_term((p * n + q) * n + b, c.clone() * d);
                }
                for (p, q, d) in &self.coproduct[*b] {
                    r.add_term((a * n + p) * n + q, c.clone() * d);
                }
            }
            (l, r)
        });
        if !r.passed {
            return r;
        }
        let r = check_identity("counit", &[n], &[2, n], |idx| {
            let mut l = SparseVec::zero();
            let mut r = SparseVec::zero();
            for (a, b, c) in &self.coproduct[idx[0]] {
                l.add_term(*b, self.counit[*a].clone() * c);
                r.add_term(*a, self.counit[*b].clone() * c);
            }
            let e = SparseVec::basis(idx[0]);
            (stack2(&l, &r, n), stack2(&e, &e, n))
        });
        if !r.passed {
            return r;
        }
        // Δ(1) = 1⊗1 and ε(1) = 1 first, then multiplicativity on basis pairs.
        let unit = self.algebra.unit();
        let r = check_identity("bialgebra compatibility (unit)", &[1], &[n * n + 1], |_| {
            let mut l = self.coproduct_of(unit);
            l.add_term(n * n, self.counit_of(unit));
            let mut r = unit.outer(unit, n);
            r.add_term(n * n, F::one());
            (l, r)
        });
        if !r.passed {
            return r;
        }
        let r = check_identity("bialgebra compatibility", &[n, n], &[n * n + 1], |idx| {
            let prod = self.algebra.mul_basis(idx[0], idx[1]);
            let mut l = self.coproduct_of(prod);
            l.add_term(n * n, self.counit_of(prod));
            let mut r = self.mul2(&self.coproduct_vec[idx[0]], &self.coproduct_vec[idx[1]]);
            r.add_term(n * n, self.counit[idx[0]].clone() * &self.counit[idx[1]]);
            (l, r)
        });
        if !r.passed {
            return r;
        }
        let r = check_identity("antipode", &[n], &[2, n], |idx| {
            let mut l = SparseVec::zero();
            let mut r = SparseVec::zero();
            for (a, b, c) in &self.coproduct[idx[0]] {
                let sa = self.algebra.mul(&self.antipode[*a], &SparseVec::basis(*b));
                l.add_scaled(&sa, c);
                let sb = self.algebra.mul(&SparseVec::basis(*a), &self.antipode[*b]);
                r.add_scaled(&sb, c);
            }
            let eps = unit.scaled(&self.counit[idx[0]]);
            (stack2(&l, &r, n), stack2(&eps, &eps, n))
        });
        if !r.passed {
            return r;
        }
        let rank = self.antipode_matrix().rank();
        if rank < n {
            return Report::fail_bare("antipode bijectivity", vec![rank]);
        }
        Report::pass("hopf axioms")
    }
}

/// Checks, in order: associativity, unit, coassociativity, counit, bialgebra
/// compatibility, the antipode axiom, and invertibility of the antipode.
/// Inconsistent shapes are an `Err`, distinct from a failed axiom.
pub fn verify_hopf_axioms<F: Field>(raw: &HopfStructure<F>) -> Result<Report<F>> {
    Ok(Tables::new(raw)?.verify())
}

impl<F: Field> FinHopfAlgebra<F> {
    /// Verifies `raw` and caches `S⁻¹`.
    pub fn new(raw: HopfStructure<F>) -> Result<Self> {
        let tables = Tables::new(&raw)?;
        let report = tables.verify();
        if !report.passed {
            if report.axiom == "antipode bijectivity" || report.axiom == "antipode" {
                let rank = tables.antipode_matrix().rank();
                if rank < tables.dim() {
                    return Err(Error::AntipodeNotBijective { rank, size: tables.dim() });
                }
            }
            return Err(Error::AxiomFailure(format!("{} at {:?}", report.axiom, report.witness)));
        }
        let n = tables.dim();
        let inv = tables.antipode_matrix().inverse().map_err(|e| match e {
            Error::NotInvertible { rank, size } => Error::AntipodeNotBijective { rank, size },
            other => other,
        })?;
        let antipode_inv = (0..n).map(|i| SparseVec::from_dense(inv.row(i))).collect();
        let names = if raw.basis_names.is_empty() {
            (0..n).map(|i| format!("e{i}")).collect()
        } else {
            raw.basis_names
        };
        let mut h = FinHopfAlgebra {
            names,
            algebra: tables.algebra,
            coproduct: tables.coproduct,
            coproduct3: Vec::new(),
            counit: tables.counit,
            antipode: tables.antipode,
            antipode_inv,
        };
        h.coproduct3 = (0..n)
            .map(|i| {
                let mut acc: BTreeMap<(usize, usize, usize), F> = BTreeMap::new();
                for (a, b, c) in &h.coproduct[i] {
                    for (p, q, d) in &h.coproduct[*a] {
                        let e = acc.entry((*p, *q, *b)).or_insert_with(F::zero);
                        *e = e.clone() + c.clone() * d;
                    }
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((a, b, c), x)| (a, b, c, x)).collect()
            })
            .collect();
        Ok(h)
    }

    pub fn field(&self) -> FieldSpec {
        F::spec()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn algebra(&self) -> &FinAlgebra<F> {
        &self.algebra
    }

    pub fn unit(&self) -> &SparseVec<F> {
        self.algebra.unit()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<F> {
        self.algebra.mul_basis(i, j)
    }

    pub fn mul(&self, a: &SparseVec<F>, b: &SparseVec<F>) -> SparseVec<F> {
        self.algebra.mul(a, b)
    }

    /// Terms `(j, k, c)` of `Δ(e_i) = Σ c e_j ⊗ e_k`.
    pub fn coproduct(&self, i: usize) -> &[(usize, usize, F)] {
        &self.coproduct[i]
    }

    /// Terms of `(Δ ⊗ id)Δ(e_i)`.
    pub fn coproduct3(&self, i: usize) -> &[(usize, usize, usize, F)] {
        &self.coproduct3[i]
    }

    /// `Δ(v)` flattened as `j * n + k`.
    pub fn coproduct_vec(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let n = self.dim();
        let mut out = SparseVec::zero();
        for (i, x) in v.iter() {
            for (a, b, c) in &self.coproduct[i] {
                out.add_term(a * n + b, x.clone() * c);
            }
        }
        out
    }

    pub fn counit(&self, i: usize) -> &F {
        &self.counit[i]
    }

    pub fn counit_vec(&self) -> &[F] {
        &self.counit
    }

    pub fn antipode(&self, i: usize) -> &SparseVec<F> {
        &self.antipode[i]
    }

    pub fn antipode_inv(&self, i: usize) -> &SparseVec<F> {
        &self.antipode_inv[i]
    }

    pub fn apply_antipode(&self, v: &SparseVec<F>) -> SparseVec<F> {
        v.map(|i| self.antipode[i].clone())
    }

    pub fn apply_antipode_inv(&self, v: &SparseVec<F>) -> SparseVec<F> {
        v.map(|i| self.antipode_inv[i].clone())
    }

    pub fn mult_tensor(&self) -> Tensor<F> {
        self.algebra.mult_tensor()
    }

    pub fn unit_tensor(&self) -> Tensor<F> {
        self.algebra.unit_tensor()
    }

    pub fn comult_tensor(&self) -> Tensor<F> {
        let n = self.dim();
        let mut t = Tensor::zeros(vec![n, n, n]);
        for (i, terms) in self.coproduct.iter().enumerate() {
            for (a, b, c) in terms {
                t.set(&[i, *a, *b], c.clone()).expect("in range");
            }
        }
        t
    }

    pub fn counit_tensor(&self) -> Tensor<F> {
        Tensor::vector(&self.counit)
    }

    pub fn antipode_tensor(&self) -> Tensor<F> {
        columns_to_tensor(&self.antipode)
    }

    /// Matrix of `S⁻¹`, same axis convention as the antipode.
    pub fn antipode_inverse(&self) -> Tensor<F> {
        columns_to_tensor(&self.antipode_inv)
    }

    pub fn structure(&self) -> HopfStructure<F> {
        HopfStructure {
            basis_names: self.names.clone(),
            mult: self.mult_tensor(),
            unit: self.unit_tensor(),
            comult: self.comult_tensor(),
            counit: self.counit_tensor(),
            antipode: self.antipode_tensor(),
        }
    }

    /// Entrywise equality of all structure constants (basis names ignored).
    pub fn structure_eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.comult_tensor() == other.comult_tensor()
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    pub fn is_cocommutative(&self) -> bool {
        let t = self.comult_tensor();
        t.permute(&[0, 2, 1]).expect("rank 3") == t
    }

    pub fn antipode_is_involutive(&self) -> bool {
        self.antipode == self.antipode_inv
    }

    /// `(Δ ⊗ id^{k-2}) ∘ … ∘ Δ` as a tensor with one input axis and `k` output axes.
    pub fn iterated_coproduct(&self, k: usize) -> Result<Tensor<F>> {
        if k == 0 {
            return Err(Error::Invalid("iterated coproduct needs k >= 1".into()));
        }
        let n = self.dim();
        let mut t = Tensor::zeros(vec![n; k + 1]);
        for i in 0..n {
            let mut legs: BTreeMap<Vec<usize>, F> = BTreeMap::new();
            legs.insert(vec![i], F::one());
            for _ in 1..k {
                let mut next: BTreeMap<Vec<usize>, F> = BTreeMap::new();
                for (idx, c) in legs {
                    for (a, b, d) in &self.coproduct[idx[0]] {
                        let mut key = vec![*a, *b];
                        key.extend_from_slice(&idx[1..]);
                        let e = next.entry(key).or_insert_with(F::zero);
                        *e = e.clone() + c.clone() * d;
                    }
                }
                legs = next;
            }
            for (idx, c) in legs {
                let mut full = vec![i];
                full.extend(idx);
                t.add(&full, c)?;
            }
        }
        Ok(t)
    }

    /// The dual Hopf algebra on the dual basis `{e_i*}`.
    pub fn dual(&self) -> FinHopfAlgebra<F> {
        let raw = HopfStructure {
            basis_names: self.names.iter().map(|s| format!("{s}*")).collect(),
            mult: self.comult_tensor().permute(&[1, 2, 0]).expect("rank 3"),
            unit: self.counit_tensor(),
            comult: self.mult_tensor().permute(&[2, 0, 1]).expect("rank 3"),
            counit: self.unit_tensor(),
            antipode: self.antipode_tensor().permute(&[1, 0]).expect("rank 2"),
        };
        FinHopfAlgebra::new(raw).expect("dual of a Hopf algebra is a Hopf algebra")
    }

    /// `H^op`, `H^cop` (antipode `S⁻¹`) or `H^{op,cop}` (antipode `S`).
    pub fn variant(&self, which: Variant) -> FinHopfAlgebra<F> {
        let mut raw = self.structure();
        if matches!(which, Variant::Op | Variant::OpCop) {
            raw.mult = raw.mult.permute(&[1, 0, 2]).expect("rank 3");
        }
        if matches!(which, Variant::Cop | Variant::OpCop) {
            raw.comult = raw.comult.permute(&[0, 2, 1]).expect("rank 3");
        }
        if which != Variant::OpCop {
            raw.antipode = self.antipode_inverse();
        }
        FinHopfAlgebra::new(raw).expect("variants of a Hopf algebra are Hopf algebras")
    }

    /// Re-expresses the structure in the basis whose `i`-th vector is row `i`
    /// of `change` (coordinates in the current basis).
    pub fn change_basis(&self, change: &Matrix<F>) -> Result<FinHopfAlgebra<F>> {
        let n = self.dim();
        if change.rows() != n || change.cols() != n {
            return Err(Error::Shape("change of basis must be n x n".into()));
        }
        let back = change.inverse()?;
        let new_of = |v: &[F]| back.transpose().apply(v);
        let rows: Vec<SparseVec<F>> = (0..n).map(|i| SparseVec::from_dense(change.row(i))).collect();
        let mut mult = Tensor::zeros(vec![n, n, n]);
        let mut comult = Tensor::zeros(vec![n, n, n]);
        let mut antipode = Tensor::zeros(vec![n, n]);
        let mut counit = Tensor::zeros(vec![n]);
        for i in 0..n {
            for j in 0..n {
                let p = new_of(&self.mul(&rows[i], &rows[j]).to_dense(n));
                for (k, c) in p.into_iter().enumerate() {
                    mult.set(&[i, j, k], c)?;
                }
            }
            // Δ in old ⊗ old coordinates, then convert each leg.
            let d = self.coproduct_vec(&rows[i]);
            let mut m = Matrix::zeros(n, n);
            for (f, c) in d.iter() {
                m[(f / n, f % n)] = c.clone();
            }
            let conv = back.transpose().mul(&m)?.mul(&back)?;
            for a in 0..n {
                for b in 0..n {
                    comult.set(&[i, a, b], conv[(a, b)].clone())?;
                }
            }
            counit.set(&[i], rows[i].pair(&self.counit))?;
            let s = new_of(&self.apply_antipode(&rows[i]).to_dense(n));
            for (k, c) in s.into_iter().enumerate() {
                antipode.set(&[i, k], c)?;
            }
        }
        let unit = Tensor::vector(&new_of(&self.unit().to_dense(n)));
        FinHopfAlgebra::new(HopfStructure {
            basis_names: (0..n).map(|i| format!("b{i}")).collect(),
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    pub fn is_group_like(&self, v: &[F]) -> bool {
        let sv = SparseVec::from_dense(v);
        sv.pair(&self.counit) == F::one() && self.coproduct_vec(&sv) == sv.outer(&sv, self.dim())
    }

    /// `δ(1) = 1` and `δ(e_i e_j) = δ(e_i) δ(e_j)` on all basis pairs.
    pub fn is_character(&self, delta: &[F]) -> bool {
        let n = self.dim();
        self.unit().pair(delta) == F::one()
            && (0..n).all(|i| {
                (0..n).all(|j| self.mul_basis(i, j).pair(delta) == delta[i].clone() * &delta[j])
            })
    }

    pub fn check_element(&self, v: &[F], kind: ElementKind) -> bool {
        if v.len() != self.dim() {
            return false;
        }
        match kind {
            ElementKind::GroupLike => self.is_group_like(v),
            ElementKind::Character => self.is_character(v),
        }
    }

    /// Exhaustive enumeration of all group-like elements over a prime field,
    /// in lexicographic order of coordinates.
    pub fn find_group_likes(&self) -> Result<Vec<Vec<F>>> {
        GroupLikeSearch::new(self)?.run()
    }

    /// All characters, found as the group-likes of the dual.
    pub fn find_characters(&self) -> Result<Vec<Vec<F>>> {
        self.dual().find_group_likes()
    }

    /// `Δ(g)` for group-like basis elements `g`, used by builtins and tests.
    pub fn basis_is_group_like(&self, i: usize) -> bool {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        self.is_group_like(&v)
    }
}

fn columns_to_tensor<F: Field>(cols: &[SparseVec<F>]) -> Tensor<F> {
    let n = cols.len();
    let mut t = Tensor::zeros(vec![n, n]);
    for (i, col) in cols.iter().enumerate() {
        for (j, c) in col.iter() {
            t.set(&[i, j], c.clone()).expect("in range");
        }
    }
    t
}

/// Budget on visited search nodes for [`FinHopfAlgebra::find_group_likes`].
pub const GROUP_LIKE_SEARCH_BUDGET: u64 = 1 << 20;

/// Backtracking over coordinates. Each equation `v_j v_k = Σ_i Δ[i,j,k] v_i` is
/// checked as soon as every variable it mentions is assigned.
struct GroupLikeSearch<'a, F> {
    h: &'a FinHopfAlgebra<F>,
    elements: Vec<F>,
    /// `equations[t]`: `(j, k, rhs terms)` whose largest variable is `t`.
    equations: Vec<Vec<(usize, usize, Vec<(usize, F)>)>>,
    visited: u64,
}

impl<'a, F: Field> GroupLikeSearch<'a, F> {
    fn new(h: &'a FinHopfAlgebra<F>) -> Result<Self> {
        let elements = F::elements().ok_or_else(|| {
            Error::GuardExceeded(format!(
                "group-like enumeration needs a prime field, not {}; check candidates with check_element",
                F::spec()
            ))
        })?;
        let n = h.dim();
        let mut rhs: BTreeMap<(usize, usize), Vec<(usize, F)>> = BTreeMap::new();
        for i in 0..n {
            for (a, b, c) in h.coproduct(i) {
                rhs.entry((*a, *b)).or_default().push((i, c.clone()));
            }
        }
        let mut equations = vec![Vec::new(); n];
        for j in 0..n {
            for k in 0..n {
                let terms = rhs.remove(&(j, k)).unwrap_or_default();
                let level = terms.iter().map(|t| t.0).chain([j, k]).max().expect("nonempty");
                equations[level].push((j, k, terms));
            }
        }
        Ok(GroupLikeSearch { h, elements, equations, visited: 0 })
    }

    fn run(mut self) -> Result<Vec<Vec<F>>> {
        let mut found = Vec::new();
        let mut v = Vec::with_capacity(self.h.dim());
        self.descend(&mut v, &mut found)?;
        Ok(found)
    }

    fn descend(&mut self, v: &mut Vec<F>, found: &mut Vec<Vec<F>>) -> Result<()> {
        let t = v.len();
        if t == self.h.dim() {
            if self.h.counit_vec().iter().zip(v.iter()).fold(F::zero(), |acc, (e, x)| acc + e.clone() * x)
                == F::one()
            {
                found.push(v.clone());
            }
            return Ok(());
        }
        for x in self.elements.clone() {
            self.visited += 1;
            if self.visited > GROUP_LIKE_SEARCH_BUDGET {
                return Err(Error::GuardExceeded(format!(
                    "more than {GROUP_LIKE_SEARCH_BUDGET} search nodes; check candidates with check_element"
                )));
            }
            v.push(x);
            let consistent = self.equations[t].iter().all(|(j, k, terms)| {
                let rhs = terms.iter().fold(F::zero(), |acc, (i, c)| acc + c.clone() * &v[*i]);
                v[*j].clone() * &v[*k] == rhs
            });
            if consistent {
                self.descend(v, found)?;
            }
            v.pop();
        }
        Ok(())
    }
}
