//! Actions and coactions on finite-dimensional spaces, and the passage between
//! right `H`-comodules and left `H*`-modules.

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::FinHopfAlgebra;
use crate::report::{check_identity, Report};
use crate::sparse::SparseVec;
use crate::tensor::Tensor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// An action of an algebra of dimension `n` on a space of dimension `m`,
/// stored as the operator of each algebra basis element: tensor `(n, m, m)`
/// with `rho[a][x][y]` the coefficient of `m_y` in `a·m_x` (left) or `m_x·a`
/// (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionStructure<F> {
    side: Side,
    alg_dim: usize,
    dim: usize,
    table: Vec<SparseVec<F>>,
}

impl<F: Field> ActionStructure<F> {
    pub fn from_tensor(side: Side, rho: &Tensor<F>) -> Result<Self> {
        let s = rho.shape();
        if s.len() != 3 || s[1] != s[2] {
            return Err(Error::Shape(format!("action tensor must be (n, m, m), got {s:?}")));
        }
        let (n, m) = (s[0], s[1]);
        let mut table = vec![SparseVec::zero(); n * m];
        for (idx, c) in rho.entries() {
            table[idx[0] * m + idx[1]].add_term(idx[2], c.clone());
        }
        Ok(ActionStructure { side, alg_dim: n, dim: m, table })
    }

    /// Builds from a closure giving the image of each `(algebra basis, space basis)` pair.
    pub fn from_fn(side: Side, alg_dim: usize, dim: usize, f: impl Fn(usize, usize) -> SparseVec<F>) -> Self {
        let mut table = Vec::with_capacity(alg_dim * dim);
        for a in 0..alg_dim {
            for x in 0..dim {
                table.push(f(a, x));
            }
        }
        ActionStructure { side, alg_dim, dim, table }
    }

    /// `a·m = ε(a) m`.
    pub fn trivial(side: Side, counit: &[F], dim: usize) -> Self {
        Self::from_fn(side, counit.len(), dim, |a, x| SparseVec::term(x, counit[a].clone()))
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Image of the space basis vector `x` under the algebra basis element `a`.
    pub fn act(&self, a: usize, x: usize) -> &SparseVec<F> {
        &self.table[a * self.dim + x]
    }

    /// Bilinear extension of [`act`](Self::act).
    pub fn act_vec(&self, a: &SparseVec<F>, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = SparseVec::zero();
        for (i, c) in a.iter() {
            for (x, d) in v.iter() {
                out.add_scaled(self.act(i, x), &(c.clone() * d));
            }
        }
        out
    }

    pub fn to_tensor(&self) -> Tensor<F> {
        let mut t = Tensor::zeros(vec![self.alg_dim, self.dim, self.dim]);
        for a in 0..self.alg_dim {
            for x in 0..self.dim {
                for (y, c) in self.act(a, x).iter() {
                    t.set(&[a, x, y], c.clone()).expect("in range");
                }
            }
        }
        t
    }

    /// Same tensor read on the other side (a left `A`-action is a right `A^op`-action).
    pub fn with_side(&self, side: Side) -> Self {
        ActionStructure { side, ..self.clone() }
    }
}

/// A coaction of a Hopf algebra of dimension `n` on a space of dimension `m`.
/// Left coactions are tensors `(m, n, m)` (`m ↦ m(-1) ⊗ m(0)`), right
/// coactions `(m, m, n)` (`m ↦ m(0) ⊗ m(1)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionStructure<F> {
    side: Side,
    hopf_dim: usize,
    dim: usize,
    /// `terms[x]`: `(h, y, c)` meaning `c · e_h ⊗ m_y` in either order
    terms: Vec<Vec<(usize, usize, F)>>,
}

impl<F: Field> CoactionStructure<F> {
    pub fn from_tensor(side: Side, t: &Tensor<F>) -> Result<Self> {
        let s = t.shape();
        let ok = s.len() == 3
            && match side {
                Side::Left => s[0] == s[2],
                Side::Right => s[0] == s[1],
            };
        if !ok {
            return Err(Error::Shape(format!("{side:?} coaction tensor has shape {s:?}")));
        }
        let (m, n) = match side {
            Side::Left => (s[0], s[1]),
            Side::Right => (s[0], s[2]),
        };
        let mut terms = vec![Vec::new(); m];
        for (idx, c) in t.entries() {
            let (h, y) = match side {
                Side::Left => (idx[1], idx[2]),
                Side::Right => (idx[2], idx[1]),
            };
            terms[idx[0]].push((h, y, c.clone()));
        }
        let mut c = CoactionStructure { side, hopf_dim: n, dim: m, terms };
        c.normalize();
        Ok(c)
    }

    /// Builds from the terms `(h, y, c)` of each basis vector's image.
    pub fn from_terms(side: Side, hopf_dim: usize, dim: usize, terms: Vec<Vec<(usize, usize, F)>>) -> Self {
        assert_eq!(terms.len(), dim);
        let mut c = CoactionStructure { side, hopf_dim, dim, terms };
        c.normalize();
        c
    }

    /// `m ↦ 1 ⊗ m` (or `m ⊗ 1`).
    pub fn trivial(side: Side, h: &FinHopfAlgebra<F>, dim: usize) -> Self {
        let terms = (0..dim)
            .map(|x| h.unit().iter().map(|(u, c)| (u, x, c.clone())).collect())
            .collect();
        Self::from_terms(side, h.dim(), dim, terms)
    }

    /// `Δ` itself as a coaction of `H` on `H`.
    pub fn regular(side: Side, h: &FinHopfAlgebra<F>) -> Self {
        let terms = (0..h.dim())
            .map(|i| {
                h.coproduct(i)
                    .iter()
                    .map(|(a, b, c)| match side {
                        Side::Left => (*a, *b, c.clone()),
                        Side::Right => (*b, *a, c.clone()),
                    })
                    .collect()
            })
            .collect();
        Self::from_terms(side, h.dim(), h.dim(), terms)
    }

    fn normalize(&mut self) {
        for t in &mut self.terms {
            let mut acc: std::collections::BTreeMap<(usize, usize), F> = Default::default();
            for (h, y, c) in t.drain(..) {
                let e = acc.entry((h, y)).or_insert_with(F::zero);
                *e = e.clone() + c;
            }
            t.extend(acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((h, y), c)| (h, y, c)));
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn hopf_dim(&self) -> usize {
        self.hopf_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `(h, y, c)`: the image of `m_x` contains `c · e_h ⊗ m_y`.
    pub fn terms(&self, x: usize) -> &[(usize, usize, F)] {
        &self.terms[x]
    }

    /// Flat index of `e_h ⊗ m_y` in the output space for this side.
    pub fn out_index(&self, h: usize, y: usize) -> usize {
        match self.side {
            Side::Left => h * self.dim + y,
            Side::Right => y * self.hopf_dim + h,
        }
    }

    pub fn out_shape(&self) -> [usize; 2] {
        match self.side {
            Side::Left => [self.hopf_dim, self.dim],
            Side::Right => [self.dim, self.hopf_dim],
        }
    }

    pub fn coact(&self, x: usize) -> SparseVec<F> {
        let mut out = SparseVec::zero();
        for (h, y, c) in &self.terms[x] {
            out.add_term(self.out_index(*h, *y), c.clone());
        }
        out
    }

    pub fn coact_vec(&self, v: &SparseVec<F>) -> SparseVec<F> {
        v.map(|x| self.coact(x))
    }

    pub fn to_tensor(&self) -> Tensor<F> {
        let shape = match self.side {
            Side::Left => vec![self.dim, self.hopf_dim, self.dim],
            Side::Right => vec![self.dim, self.dim, self.hopf_dim],
        };
        let mut t = Tensor::zeros(shape);
        for (x, terms) in self.terms.iter().enumerate() {
            for (h, y, c) in terms {
                let idx = match self.side {
                    Side::Left => [x, *h, *y],
                    Side::Right => [x, *y, *h],
                };
                t.add(&idx, c.clone()).expect("in range");
            }
        }
        t
    }

    /// Same coefficients read on the other side (a left `H`-coaction is a right `H^cop`-coaction).
    pub fn with_side(&self, side: Side) -> Self {
        CoactionStructure { side, ..self.clone() }
    }
}

/// Unit and associativity of an action on all basis pairs.
pub fn verify_action<F: Field>(alg: &FinAlgebra<F>, a: &ActionStructure<F>) -> Result<Report<F>> {
    if alg.dim() != a.alg_dim() {
        return Err(Error::Shape(format!("algebra dim {} vs action over dim {}", alg.dim(), a.alg_dim())));
    }
    let m = a.dim();
    let r = check_identity("action unit", &[m], &[m], |idx| {
        (a.act_vec(alg.unit(), &SparseVec::basis(idx[0])), SparseVec::basis(idx[0]))
    });
    if !r.passed {
        return Ok(r);
    }
    let n = alg.dim();
    Ok(check_identity("action associativity", &[n, n, m], &[m], |idx| {
        let (i, j, x) = (idx[0], idx[1], idx[2]);
        let ex = SparseVec::basis(x);
        match a.side() {
            Side::Left => {
                let lhs = a.act_vec(alg.mul_basis(i, j), &ex);
                let rhs = a.act_vec(&SparseVec::basis(i), a.act(j, x));
                (lhs, rhs)
            }
            Side::Right => {
                let lhs = a.act_vec(alg.mul_basis(i, j), &ex);
                let rhs = a.act_vec(&SparseVec::basis(j), a.act(i, x));
                (lhs, rhs)
            }
        }
    }))
}

/// Coassociativity and counit law on every basis vector.
pub fn verify_coaction<F: Field>(h: &FinHopfAlgebra<F>, c: &CoactionStructure<F>) -> Result<Report<F>> {
    if h.dim() != c.hopf_dim() {
        return Err(Error::Shape(format!("Hopf dim {} vs coaction over dim {}", h.dim(), c.hopf_dim())));
    }
    let (n, m) = (h.dim(), c.dim());
    let out = match c.side() {
        Side::Left => [n, n, m],
        Side::Right => [m, n, n],
    };
    let r = check_identity("coaction coassociativity", &[m], &out, |idx| {
        let mut lhs = SparseVec::zero();
        let mut rhs = SparseVec::zero();
        for (hh, y, k) in c.terms(idx[0]) {
            for (a, b, d) in h.coproduct(*hh) {
                let i = match c.side() {
                    Side::Left => (a * n + b) * m + y,
                    Side::Right => (y * n + a) * n + b,
                };
                lhs.add_term(i, k.clone() * d);
            }
            for (h2, z, d) in c.terms(*y) {
                let i = match c.side() {
                    // (id⊗λ)λ: h ⊗ h2 ⊗ z
                    Side::Left => (hh * n + h2) * m + z,
                    // (ρ⊗id)ρ: z ⊗ h2 ⊗ h
                    Side::Right => (z * n + h2) * n + hh,
                };
                rhs.add_term(i, k.clone() * d);
            }
        }
        (lhs, rhs)
    });
    if !r.passed {
        return Ok(r);
    }
    Ok(check_identity("coaction counit", &[m], &[m], |idx| {
        let mut lhs = SparseVec::zero();
        for (hh, y, k) in c.terms(idx[0]) {
            lhs.add_term(*y, h.counit(*hh).clone() * k);
        }
        (lhs, SparseVec::basis(idx[0]))
    }))
}

/// A right `H`-comodule as a left `H*`-module: `φ·m = φ(m(1)) m(0)`.
pub fn comodule_to_dual_action<F: Field>(h: &FinHopfAlgebra<F>, c: &CoactionStructure<F>) -> Result<ActionStructure<F>> {
    if c.side() != Side::Right || c.hopf_dim() != h.dim() {
        return Err(Error::Precondition("expected a right coaction of H".into()));
    }
    Ok(ActionStructure::from_fn(Side::Left, h.dim(), c.dim(), |a, x| {
        let mut v = SparseVec::zero();
        for (hh, y, k) in c.terms(x) {
            if *hh == a {
                v.add_term(*y, k.clone());
            }
        }
        v
    }))
}

/// A left `H*`-module as a right `H`-comodule: `m ↦ Σ_i h_i*·m ⊗ h_i`.
pub fn dual_action_to_comodule<F: Field>(h: &FinHopfAlgebra<F>, a: &ActionStructure<F>) -> Result<CoactionStructure<F>> {
    if a.side() != Side::Left || a.alg_dim() != h.dim() {
        return Err(Error::Precondition("expected a left action of H*".into()));
    }
    let terms = (0..a.dim())
        .map(|x| {
            (0..h.dim())
                .flat_map(|i| a.act(i, x).iter().map(move |(y, c)| (i, y, c.clone())).collect::<Vec<_>>())
                .collect()
        })
        .collect();
    Ok(CoactionStructure::from_terms(Side::Right, h.dim(), a.dim(), terms))
}

/// A left module over a plain algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraModule<F> {
    pub algebra: FinAlgebra<F>,
    pub action: ActionStructure<F>,
}

impl<F: Field> AlgebraModule<F> {
    /// Verifies unit and associativity before accepting.
    pub fn new(algebra: FinAlgebra<F>, action: ActionStructure<F>) -> Result<Self> {
        if action.side() != Side::Left {
            return Err(Error::Precondition("algebra modules are left modules".into()));
        }
        let r = verify_action(&algebra, &action)?;
        if !r.passed {
            return Err(Error::AxiomFailure(format!("{} at {:?}", r.axiom, r.witness)));
        }
        Ok(AlgebraModule { algebra, action })
    }

    /// The left regular module.
    pub fn regular(algebra: FinAlgebra<F>) -> Self {
        let n = algebra.dim();
        let action = ActionStructure::from_fn(Side::Left, n, n, |a, x| algebra.mul_basis(a, x).clone());
        AlgebraModule { algebra, action }
    }

    pub fn dim(&self) -> usize {
        self.action.dim()
    }
}
