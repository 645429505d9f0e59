//! Entwining structures `ψ: C⊗A → A⊗C` and entwined modules, right-right
//! convention.

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::FinHopfAlgebra;
use crate::rep::{ActionStructure, CoactionStructure, Side};
use crate::report::{check_identity, Report};
use crate::sparse::SparseVec;
use crate::tensor::Tensor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EntwiningKind {
    Yd,
    Ayd,
}

/// An algebra `A` and the coalgebra of a Hopf algebra `C` together with
/// `ψ(c⊗a) = a_α ⊗ c^α`.
#[derive(Clone, Debug)]
pub struct EntwiningData<F> {
    pub algebra: FinAlgebra<F>,
    pub coalgebra: FinHopfAlgebra<F>,
    /// `psi[c * dim A + a]` in `A⊗C`, flat index `a' * dim C + c'`
    psi: Vec<SparseVec<F>>,
}

impl<F: Field> PartialEq for EntwiningData<F> {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.coalgebra == other.coalgebra && self.psi == other.psi
    }
}

impl<F: Field> EntwiningData<F> {
    /// `psi` has shape `(dim C, dim A, dim A, dim C)`; the axioms are checked.
    pub fn new(algebra: FinAlgebra<F>, coalgebra: FinHopfAlgebra<F>, psi: &Tensor<F>) -> Result<Self> {
        let (na, nc) = (algebra.dim(), coalgebra.dim());
        if psi.shape() != [nc, na, na, nc] {
            return Err(Error::Shape(format!("ψ must have shape {:?}, got {:?}", [nc, na, na, nc], psi.shape())));
        }
        let mut table = vec![SparseVec::zero(); nc * na];
        for (idx, c) in psi.entries() {
            table[idx[0] * na + idx[1]].add_term(idx[2] * nc + idx[3], c.clone());
        }
        let e = EntwiningData { algebra, coalgebra, psi: table };
        let r = e.verify();
        if !r.passed {
            return Err(Error::AxiomFailure(format!("{} at {:?}", r.axiom, r.witness.unwrap_or_default())));
        }
        Ok(e)
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn coalgebra_dim(&self) -> usize {
        self.coalgebra.dim()
    }

    /// `ψ(e_c ⊗ e_a)` in `A⊗C`.
    pub fn apply(&self, c: usize, a: usize) -> &SparseVec<F> {
        &self.psi[c * self.algebra.dim() + a]
    }

    pub fn to_tensor(&self) -> Tensor<F> {
        let (na, nc) = (self.algebra.dim(), self.coalgebra.dim());
        let mut t = Tensor::zeros(vec![nc, na, na, nc]);
        for c in 0..nc {
            for a in 0..na {
                for (f, v) in self.apply(c, a).iter() {
                    t.set(&[c, a, f / nc, f % nc], v.clone()).expect("in range");
                }
            }
        }
        t
    }

    /// The four entwining identities, in order: multiplicativity, unit,
    /// comultiplicativity, counit.
    pub fn verify(&self) -> Report<F> {
        let (na, nc) = (self.algebra.dim(), self.coalgebra.dim());
        let alg = &self.algebra;
        let co = &self.coalgebra;
        // ψ(c⊗ab) = a_α b_β ⊗ c^{αβ}
        let r = check_identity("entwining multiplicativity", &[nc, na, na], &[na, nc], |idx| {
            let (c, a, b) = (idx[0], idx[1], idx[2]);
            let mut lhs = SparseVec::zero();
            for (ab, k) in alg.mul_basis(a, b).iter() {
                lhs.add_scaled(self.apply(c, ab), k);
            }
            let mut rhs = SparseVec::zero();
            for (f, k) in self.apply(c, a).iter() {
                let (a1, c1) = (f / nc, f % nc);
                for (g, l) in self.apply(c1, b).iter() {
                    let (b1, c2) = (g / nc, g % nc);
                    for (p, u) in alg.mul_basis(a1, b1).iter() {
                        rhs.add_term(p * nc + c2, k.clone() * l * u);
                    }
                }
            }
            (lhs, rhs)
        });
        if !r.passed {
            return r;
        }
        let r = check_identity("entwining unit", &[nc], &[na, nc], |idx| {
            let c = idx[0];
            let mut lhs = SparseVec::zero();
            for (u, k) in alg.unit().iter() {
                lhs.add_scaled(self.apply(c, u), k);
            }
            let rhs = alg.unit().outer(&SparseVec::basis(c), nc);
            (lhs, rhs)
        });
        if !r.passed {
            return r;
        }
        // (id⊗Δ)ψ = (ψ⊗id)(id⊗ψ)(Δ⊗id)
        let r = check_identity("entwining comultiplicativity", &[nc, na], &[na, nc, nc], |idx| {
            let (c, a) = (idx[0], idx[1]);
            let mut lhs = SparseVec::zero();
            for (f, k) in self.apply(c, a).iter() {
                let (a1, c1) = (f / nc, f % nc);
                for (p, q, l) in co.coproduct(c1) {
                    lhs.add_term((a1 * nc + p) * nc + q, k.clone() * l);
                }
            }
            let mut rhs = SparseVec::zero();
            for (p, q, l) in co.coproduct(c) {
                for (f, k) in self.apply(*q, a).iter() {
                    let (a1, q1) = (f / nc, f % nc);
                    for (g, m) in self.apply(*p, a1).iter() {
                        let (a2, p1) = (g / nc, g % nc);
                        rhs.add_term((a2 * nc + p1) * nc + q1, l.clone() * k * m);
                    }
                }
            }
            (lhs, rhs)
        });
        if !r.passed {
            return r;
        }
        check_identity("entwining counit", &[nc, na], &[na], |idx| {
            let (c, a) = (idx[0], idx[1]);
            let mut lhs = SparseVec::zero();
            for (f, k) in self.apply(c, a).iter() {
                lhs.add_term(f / nc, k.clone() * co.counit(f % nc));
            }
            (lhs, SparseVec::term(a, co.counit(c).clone()))
        })
    }
}

/// `ψ(h'⊗h) = h(2) ⊗ T(h(1)) h' h(3)` with `T = S` (Yetter-Drinfeld) or
/// `T = S⁻¹` (anti-Yetter-Drinfeld).
pub fn entwining_map<F: Field>(h: &FinHopfAlgebra<F>, kind: EntwiningKind) -> EntwiningData<F> {
    let n = h.dim();
    let mut psi = Vec::with_capacity(n * n);
    for hp in 0..n {
        for hh in 0..n {
            let mut v = SparseVec::zero();
            for (a, b, c, k) in h.coproduct3(hh) {
                let t = match kind {
                    EntwiningKind::Yd => h.antipode(*a),
                    EntwiningKind::Ayd => h.antipode_inv(*a),
                };
                let right = h.mul(&h.mul(t, &SparseVec::basis(hp)), &SparseVec::basis(*c));
                v.add_scaled(&SparseVec::basis(*b).outer(&right, n), k);
            }
            psi.push(v);
        }
    }
    EntwiningData { algebra: h.algebra().clone(), coalgebra: h.clone(), psi }
}

/// `ρ(m·a) = m(0)·a_α ⊗ m(1)^α` on all basis pairs, for a right `A`-action
/// and a right `C`-coaction on the same space.
pub fn check_entwined_module<F: Field>(
    e: &EntwiningData<F>,
    action: &ActionStructure<F>,
    coaction: &CoactionStructure<F>,
) -> Result<Report<F>> {
    let (na, nc) = (e.algebra_dim(), e.coalgebra_dim());
    if action.side() != Side::Right || coaction.side() != Side::Right {
        return Err(Error::Precondition("entwined modules carry a right action and a right coaction".into()));
    }
    if action.alg_dim() != na || coaction.hopf_dim() != nc || action.dim() != coaction.dim() {
        return Err(Error::Shape("action, coaction and entwining dimensions disagree".into()));
    }
    let m = action.dim();
    Ok(check_identity("entwined module", &[na, m], &[m, nc], |idx| {
        let (a, x) = (idx[0], idx[1]);
        let lhs = coaction.coact_vec(action.act(a, x));
        let mut rhs = SparseVec::zero();
        for (c, y, k) in coaction.terms(x) {
            for (f, l) in e.apply(*c, a).iter() {
                let (a1, c1) = (f / nc, f % nc);
                for (z, u) in action.act(a1, *y).iter() {
                    rhs.add_term(z * nc + c1, k.clone() * l * u);
                }
            }
        }
        (lhs, rhs)
    }))
}
