//! Comodule algebras, coinvariants, the canonical and translation maps, and
//! the Miyashita-Ulbrich actions.

use crate::algebra::FinAlgebra;
use crate::ayd::TwoSidedStructure;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::FinHopfAlgebra;
use crate::matrix::{Matrix, Subspace};
use crate::rep::{verify_action, verify_coaction, ActionStructure, CoactionStructure, Side};
use crate::report::{check_identity, Report};
use crate::sparse::SparseVec;

/// An algebra `P` with a right coaction of `H` that is an algebra map.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra<F> {
    pub algebra: FinAlgebra<F>,
    pub hopf: FinHopfAlgebra<F>,
    pub coaction: CoactionStructure<F>,
}

impl<F: Field> ComoduleAlgebra<F> {
    pub fn new(algebra: FinAlgebra<F>, hopf: FinHopfAlgebra<F>, coaction: CoactionStructure<F>) -> Result<Self> {
        if coaction.side() != Side::Right {
            return Err(Error::Precondition("comodule algebras carry a right coaction".into()));
        }
        let r = check_comodule_algebra(&algebra, &hopf, &coaction)?;
        if !r.passed {
            return Err(Error::AxiomFailure(format!("{} at {:?}", r.axiom, r.witness.unwrap_or_default())));
        }
        Ok(ComoduleAlgebra { algebra, hopf, coaction })
    }

    /// `P = H` with `Δ_P = Δ`.
    pub fn regular(h: &FinHopfAlgebra<F>) -> Self {
        ComoduleAlgebra {
            algebra: h.algebra().clone(),
            hopf: h.clone(),
            coaction: CoactionStructure::regular(Side::Right, h),
        }
    }

    /// `p ↦ p⊗1`.
    pub fn trivial(algebra: FinAlgebra<F>, h: &FinHopfAlgebra<F>) -> Self {
        let coaction = CoactionStructure::trivial(Side::Right, h, algebra.dim());
        ComoduleAlgebra { algebra, hopf: h.clone(), coaction }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Coassociativity, counit, `λ(ab) = λ(a)λ(b)` and `λ(1) = 1⊗1` for a right
/// coaction of `K` on the algebra `A`.
pub fn check_comodule_algebra<F: Field>(
    a: &FinAlgebra<F>,
    k: &FinHopfAlgebra<F>,
    lambda: &CoactionStructure<F>,
) -> Result<Report<F>> {
    if lambda.side() != Side::Right || lambda.dim() != a.dim() || lambda.hopf_dim() != k.dim() {
        return Err(Error::Shape("expected a right coaction of K on A".into()));
    }
    let r = verify_coaction(k, lambda)?;
    if !r.passed {
        return Ok(r);
    }
    let (m, n) = (a.dim(), k.dim());
    // product in A⊗K on flat indices p * n + h
    let mul_ak = |u: &SparseVec<F>, v: &SparseVec<F>| -> SparseVec<F> {
        let mut out = SparseVec::zero();
        for (f, c) in u.iter() {
            for (g, d) in v.iter() {
                let cd = c.clone() * d;
                for (p, x) in a.mul_basis(f / n, g / n).iter() {
                    for (q, y) in k.mul_basis(f % n, g % n).iter() {
                        out.add_term(p * n + q, cd.clone() * x * y);
                    }
                }
            }
        }
        out
    };
    let r = check_identity("coaction unit", &[1], &[m, n], |_| {
        (lambda.coact_vec(a.unit()), a.unit().outer(k.unit(), n))
    });
    if !r.passed {
        return Ok(r);
    }
    Ok(check_identity("coaction multiplicativity", &[m, m], &[m, n], |idx| {
        let lhs = lambda.coact_vec(a.mul_basis(idx[0], idx[1]));
        let rhs = mul_ak(&lambda.coact(idx[0]), &lambda.coact(idx[1]));
        (lhs, rhs)
    }))
}

/// Basis of `B = {p : Δ_P(p) = p⊗1}`.
pub fn coinvariants<F: Field>(p: &ComoduleAlgebra<F>) -> Result<Vec<Vec<F>>> {
    let (m, n) = (p.dim(), p.hopf.dim());
    let mut mat = Matrix::zeros(m * n, m);
    for x in 0..m {
        let mut v = p.coaction.coact(x);
        v.add_scaled(&SparseVec::basis(x).outer(p.hopf.unit(), n), &-F::one());
        for (f, c) in v.iter() {
            mat[(f, x)] = c.clone();
        }
    }
    let basis = Subspace::span(m, &mat.kernel()).basis().to_vec();
    let sub = Subspace::span(m, &basis);
    for b1 in &basis {
        for b2 in &basis {
            let prod = p.algebra.mul(&SparseVec::from_dense(b1), &SparseVec::from_dense(b2));
            if !sub.contains(&prod.to_dense(m)) {
                return Err(Error::Internal("coinvariants are not closed under multiplication".into()));
            }
        }
    }
    Ok(basis)
}

/// Basis of `Z_B(P) = {p : bp = pb for all b ∈ B}`, checked to be a subcomodule.
pub fn centralizer<F: Field>(p: &ComoduleAlgebra<F>, b_basis: &[Vec<F>]) -> Result<Vec<Vec<F>>> {
    let (m, n) = (p.dim(), p.hopf.dim());
    if b_basis.iter().any(|b| b.len() != m) {
        return Err(Error::Shape("B-basis vectors must lie in P".into()));
    }
    let mut mat = Matrix::zeros(b_basis.len().max(1) * m, m);
    for (k, b) in b_basis.iter().enumerate() {
        let b = SparseVec::from_dense(b);
        for x in 0..m {
            let ex = SparseVec::basis(x);
            let comm = p.algebra.mul(&b, &ex).sub(&p.algebra.mul(&ex, &b));
            for (f, c) in comm.iter() {
                mat[(k * m + f, x)] = c.clone();
            }
        }
    }
    let z = Subspace::span(m, &mat.kernel());
    for v in z.basis() {
        let image = p.coaction.coact_vec(&SparseVec::from_dense(v));
        for h in 0..n {
            let leg: Vec<F> = (0..m).map(|y| image.get(y * n + h)).collect();
            if !z.contains(&leg) {
                return Err(Error::AxiomFailure("the centralizer of B is not a subcomodule".into()));
            }
        }
    }
    Ok(z.basis().to_vec())
}

/// `P⊗_B P` as the quotient of `P⊗P` (flat index `i * dim P + j`) by the
/// span of `pb⊗p' - p⊗bp'`. Classes are represented by the coordinates not
/// used as pivots of the relation space.
#[derive(Clone, Debug)]
pub struct RelativeTensor<F> {
    factor_dim: usize,
    relations: Subspace<F>,
    complement: Vec<usize>,
}

impl<F: Field> RelativeTensor<F> {
    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn relations(&self) -> &Subspace<F> {
        &self.relations
    }

    /// The projection `q: P⊗P → P⊗_B P` in class coordinates.
    pub fn project(&self, v: &SparseVec<F>) -> Vec<F> {
        let r = self.relations.reduce(&v.to_dense(self.factor_dim * self.factor_dim));
        self.complement.iter().map(|&c| r[c].clone()).collect()
    }

    /// A representative of class `k`: a pure tensor of basis vectors.
    pub fn section(&self, k: usize) -> SparseVec<F> {
        SparseVec::basis(self.complement[k])
    }

    /// A second representative of class `k`, differing from
    /// [`section`](Self::section) by a nonzero relation when one exists.
    pub fn alternate_section(&self, k: usize) -> SparseVec<F> {
        let mut v = self.section(k);
        let rels = self.relations.basis();
        if !rels.is_empty() {
            v.add_assign(&SparseVec::from_dense(&rels[k % rels.len()]));
        }
        v
    }

    /// Lifts class coordinates through the chosen section.
    pub fn lift(&self, coords: &[F], alternate: bool) -> SparseVec<F> {
        let mut out = SparseVec::zero();
        for (k, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                let rep = if alternate { self.alternate_section(k) } else { self.section(k) };
                out.add_scaled(&rep, c);
            }
        }
        out
    }
}

pub fn relative_tensor<F: Field>(p: &ComoduleAlgebra<F>, b_basis: &[Vec<F>]) -> Result<RelativeTensor<F>> {
    let m = p.dim();
    if b_basis.iter().any(|b| b.len() != m) {
        return Err(Error::Shape("B-basis vectors must lie in P".into()));
    }
    let mut gens = Vec::new();
    for b in b_basis {
        let b = SparseVec::from_dense(b);
        for i in 0..m {
            let ib = p.algebra.mul(&SparseVec::basis(i), &b);
            for j in 0..m {
                let bj = p.algebra.mul(&b, &SparseVec::basis(j));
                let rel = ib.outer(&SparseVec::basis(j), m).sub(&SparseVec::basis(i).outer(&bj, m));
                if !rel.is_zero() {
                    gens.push(rel.to_dense(m * m));
                }
            }
        }
    }
    let relations = Subspace::span(m * m, &gens);
    let complement = (0..m * m).filter(|c| !relations.pivots().contains(c)).collect();
    Ok(RelativeTensor { factor_dim: m, relations, complement })
}

/// Everything needed to decide the Galois property and run the
/// Miyashita-Ulbrich constructions.
#[derive(Clone, Debug)]
pub struct GaloisData<F> {
    pub source: ComoduleAlgebra<F>,
    pub b_basis: Vec<Vec<F>>,
    pub quotient: RelativeTensor<F>,
    /// columns: classes of `P⊗_B P`; rows: `P⊗H`, flat `p * dim H + h`
    pub can: Matrix<F>,
    can_inverse: Option<Matrix<F>>,
}

impl<F: Field> GaloisData<F> {
    pub fn new(source: ComoduleAlgebra<F>) -> Result<Self> {
        let b_basis = coinvariants(&source)?;
        let quotient = relative_tensor(&source, &b_basis)?;
        let (m, n) = (source.dim(), source.hopf.dim());
        let mut can = Matrix::zeros(m * n, quotient.dim());
        for k in 0..quotient.dim() {
            let v = can_apply(&source, &quotient.section(k));
            for (f, c) in v.iter() {
                can[(f, k)] = c.clone();
            }
        }
        // can must vanish on the relations for the quotient to make sense
        for rel in quotient.relations().basis() {
            if !can_apply(&source, &SparseVec::from_dense(rel)).is_zero() {
                return Err(Error::Internal("can does not factor through P⊗_B P".into()));
            }
        }
        let can_inverse = if can.rows() == can.cols() { can.inverse().ok() } else { None };
        Ok(GaloisData { source, b_basis, quotient, can, can_inverse })
    }

    pub fn is_galois(&self) -> bool {
        self.can_inverse.is_some()
    }

    /// `T(e_i) = can⁻¹(1⊗e_i)` in class coordinates of `P⊗_B P`.
    pub fn translation_map(&self) -> Result<Vec<Vec<F>>> {
        let inv = self
            .can_inverse
            .as_ref()
            .ok_or_else(|| Error::Precondition("the canonical map is not bijective".into()))?;
        let (m, n) = (self.source.dim(), self.source.hopf.dim());
        let one = self.source.algebra.unit();
        Ok((0..n)
            .map(|h| inv.apply(&one.outer(&SparseVec::basis(h), n).to_dense(m * n)))
            .collect())
    }

    /// `can` applied to class coordinates.
    pub fn can_apply(&self, coords: &[F]) -> SparseVec<F> {
        SparseVec::from_dense(&self.can.apply(coords))
    }

    /// `can` applied to a representative in `P⊗P`.
    pub fn can_on_tensor(&self, v: &SparseVec<F>) -> SparseVec<F> {
        can_apply(&self.source, v)
    }

    pub fn b_is_central(&self) -> bool {
        let alg = &self.source.algebra;
        self.b_basis.iter().all(|b| {
            let b = SparseVec::from_dense(b);
            (0..alg.dim()).all(|x| {
                let ex = SparseVec::basis(x);
                alg.mul(&b, &ex) == alg.mul(&ex, &b)
            })
        })
    }
}

/// `can(p⊗p') = p p'(0) ⊗ p'(1)` on an element of `P⊗P`.
fn can_apply<F: Field>(p: &ComoduleAlgebra<F>, v: &SparseVec<F>) -> SparseVec<F> {
    let (m, n) = (p.dim(), p.hopf.dim());
    let mut out = SparseVec::zero();
    for (f, c) in v.iter() {
        let (i, j) = (f / m, f % m);
        for (h, y, d) in p.coaction.terms(j) {
            for (q, u) in p.algebra.mul_basis(i, *y).iter() {
                out.add_term(q * n + h, c.clone() * d * u);
            }
        }
    }
    out
}

/// Either `Σ u p v` (`flip = false`) or `Σ v p u` (`flip = true`) for
/// `Σ u⊗v` in `P⊗P`.
fn sandwich<F: Field>(alg: &FinAlgebra<F>, t: &SparseVec<F>, p: &SparseVec<F>, flip: bool) -> SparseVec<F> {
    let m = alg.dim();
    let mut out = SparseVec::zero();
    for (f, c) in t.iter() {
        let (u, v) = (SparseVec::basis(f / m), SparseVec::basis(f % m));
        let (l, r) = if flip { (v, u) } else { (u, v) };
        out.add_scaled(&alg.mul(&alg.mul(&l, p), &r), c);
    }
    out
}

/// The Miyashita-Ulbrich action `p·h = h[1] p h[2]` on `Z_B(P)` (in the
/// returned echelon basis of the centralizer), or with `flipped` the action
/// `p·h = (S⁻¹h)[2] p (S⁻¹h)[1]` on all of `P`, which needs `B` central.
/// Both representatives of every translation-map class are evaluated; any
/// disagreement is reported as an error.
pub fn mu_action<F: Field>(g: &GaloisData<F>, flipped: bool) -> Result<(Vec<Vec<F>>, ActionStructure<F>)> {
    let p = &g.source;
    let (m, n) = (p.dim(), p.hopf.dim());
    let t = g.translation_map()?;
    let target: Vec<Vec<F>> = if flipped {
        if !g.b_is_central() {
            return Err(Error::Precondition("B is not central in P".into()));
        }
        (0..m).map(|x| SparseVec::basis(x).to_dense(m)).collect()
    } else {
        centralizer(p, &g.b_basis)?
    };
    let space = Subspace::span(m, &target);
    // the element of P⊗_B P used for basis element h
    let class_of = |h: usize| -> Vec<F> {
        if !flipped {
            return t[h].clone();
        }
        let mut acc = vec![F::zero(); g.quotient.dim()];
        for (l, c) in p.hopf.antipode_inv(h).iter() {
            for (a, tl) in acc.iter_mut().zip(&t[l]) {
                *a = a.clone() + c.clone() * tl;
            }
        }
        acc
    };
    let mut table = Vec::with_capacity(n * target.len());
    for h in 0..n {
        let cls = class_of(h);
        let first = g.quotient.lift(&cls, false);
        let second = g.quotient.lift(&cls, true);
        for (x, z) in target.iter().enumerate() {
            let z = SparseVec::from_dense(z);
            let v1 = sandwich(&p.algebra, &first, &z, flipped);
            let v2 = sandwich(&p.algebra, &second, &z, flipped);
            if v1 != v2 {
                return Err(Error::AxiomFailure(format!(
                    "Miyashita-Ulbrich action depends on the representative at (h, p) = ({h}, {x})"
                )));
            }
            let coords = space.coordinates(&v1.to_dense(m)).ok_or_else(|| {
                Error::AxiomFailure(format!("Miyashita-Ulbrich action leaves the target space at ({h}, {x})"))
            })?;
            table.push(SparseVec::from_dense(&coords));
        }
    }
    let dim = target.len();
    let action = ActionStructure::from_fn(Side::Right, n, dim, |h, x| table[h * dim + x].clone());
    let r = verify_action(p.hopf.algebra(), &action)?;
    if !r.passed {
        return Err(Error::AxiomFailure(format!("{} at {:?}", r.axiom, r.witness.unwrap_or_default())));
    }
    Ok((space.basis().to_vec(), action))
}

/// The standard Miyashita-Ulbrich action on `Z_B(P)` with the restricted
/// coaction, as a right-right structure.
pub fn mu_module<F: Field>(g: &GaloisData<F>) -> Result<TwoSidedStructure<F>> {
    let (basis, action) = mu_action(g, false)?;
    let p = &g.source;
    let (m, n) = (p.dim(), p.hopf.dim());
    let space = Subspace::span(m, &basis);
    let terms = basis
        .iter()
        .map(|z| {
            let image = p.coaction.coact_vec(&SparseVec::from_dense(z));
            let mut out = Vec::new();
            for h in 0..n {
                let leg: Vec<F> = (0..m).map(|y| image.get(y * n + h)).collect();
                let coords = space.coordinates(&leg).ok_or_else(|| Error::Internal("centralizer leg".into()))?;
                out.extend(coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(y, c)| (h, y, c)));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let coaction = CoactionStructure::from_terms(Side::Right, n, basis.len(), terms);
    TwoSidedStructure::new_unchecked(p.hopf.clone(), action, coaction)
}

/// `P` with the flipped Miyashita-Ulbrich action and its own coaction, a
/// right-right stable anti-Yetter-Drinfeld module when `P` is Hopf-Galois
/// with central coinvariants.
pub fn make_sayd_prop5<F: Field>(p: &ComoduleAlgebra<F>) -> Result<TwoSidedStructure<F>> {
    let g = GaloisData::new(p.clone())?;
    if !g.is_galois() {
        return Err(Error::Precondition("P is not Hopf-Galois: the canonical map is not bijective".into()));
    }
    if !g.b_is_central() {
        return Err(Error::Precondition("the coinvariants are not central in P".into()));
    }
    let (_, action) = mu_action(&g, true)?;
    let s = TwoSidedStructure::new_unchecked(p.hopf.clone(), action, p.coaction.clone())?;
    for r in [crate::ayd::check_ayd(&s), crate::ayd::check_stability(&s)] {
        if !r.passed {
            return Err(Error::AxiomFailure(format!("{} at {:?}", r.axiom, r.witness.unwrap_or_default())));
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests;
