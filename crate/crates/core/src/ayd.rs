//! Anti-Yetter-Drinfeld and Yetter-Drinfeld modules in all four side
//! conventions, stability, and the standard constructions.

use std::fmt;
use std::str::FromStr;

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{group_algebra, ElementKind, FinHopfAlgebra, Group, Variant};
use crate::matrix::Matrix;
use crate::rep::{verify_action, verify_coaction, ActionStructure, CoactionStructure, Side};
use crate::report::{check_identity, Report};
use crate::sparse::SparseVec;

/// Action side followed by coaction side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    Ll,
    Lr,
    Rl,
    Rr,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::Ll, Case::Lr, Case::Rl, Case::Rr];

    pub fn from_sides(action: Side, coaction: Side) -> Case {
        match (action, coaction) {
            (Side::Left, Side::Left) => Case::Ll,
            (Side::Left, Side::Right) => Case::Lr,
            (Side::Right, Side::Left) => Case::Rl,
            (Side::Right, Side::Right) => Case::Rr,
        }
    }

    pub fn action_side(self) -> Side {
        match self {
            Case::Ll | Case::Lr => Side::Left,
            Case::Rl | Case::Rr => Side::Right,
        }
    }

    pub fn coaction_side(self) -> Side {
        match self {
            Case::Ll | Case::Rl => Side::Left,
            Case::Lr | Case::Rr => Side::Right,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::Ll => "ll",
            Case::Lr => "lr",
            Case::Rl => "rl",
            Case::Rr => "rr",
        })
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Case> {
        match s {
            "ll" => Ok(Case::Ll),
            "lr" => Ok(Case::Lr),
            "rl" => Ok(Case::Rl),
            "rr" => Ok(Case::Rr),
            _ => Err(Error::Invalid(format!("unknown case {s:?}, expected ll, lr, rl or rr"))),
        }
    }
}

/// A space that is both a module and a comodule over the same Hopf algebra.
#[derive(Clone, Debug)]
pub struct TwoSidedStructure<F> {
    pub hopf: FinHopfAlgebra<F>,
    pub action: ActionStructure<F>,
    pub coaction: CoactionStructure<F>,
}

impl<F: Field> PartialEq for TwoSidedStructure<F> {
    fn eq(&self, other: &Self) -> bool {
        self.hopf == other.hopf && self.action == other.action && self.coaction == other.coaction
    }
}

impl<F: Field> Eq for TwoSidedStructure<F> {}

impl<F: Field> TwoSidedStructure<F> {
    /// Verifies the action and coaction separately before accepting.
    pub fn new(hopf: FinHopfAlgebra<F>, action: ActionStructure<F>, coaction: CoactionStructure<F>) -> Result<Self> {
        let s = Self::new_unchecked(hopf, action, coaction)?;
        for r in [verify_action(s.hopf.algebra(), &s.action)?, verify_coaction(&s.hopf, &s.coaction)?] {
            if !r.passed {
                return Err(Error::AxiomFailure(format!("{} at {:?}", r.axiom, r.witness.unwrap_or_default())));
            }
        }
        Ok(s)
    }

    /// Checks only that the dimensions fit together.
    pub fn new_unchecked(
        hopf: FinHopfAlgebra<F>,
        action: ActionStructure<F>,
        coaction: CoactionStructure<F>,
    ) -> Result<Self> {
        let n = hopf.dim();
        if action.alg_dim() != n || coaction.hopf_dim() != n {
            return Err(Error::Shape(format!(
                "action over dim {}, coaction over dim {}, Hopf algebra of dim {n}",
                action.alg_dim(),
                coaction.hopf_dim()
            )));
        }
        if action.dim() != coaction.dim() {
            return Err(Error::Shape(format!(
                "action on dim {} but coaction on dim {}",
                action.dim(),
                coaction.dim()
            )));
        }
        Ok(TwoSidedStructure { hopf, action, coaction })
    }

    pub fn case(&self) -> Case {
        Case::from_sides(self.action.side(), self.coaction.side())
    }

    pub fn dim(&self) -> usize {
        self.action.dim()
    }

    /// The same structure constants read in another case, over the variant of
    /// `H` that makes the reading consistent: flipping the action side passes
    /// to `H^op`, flipping the coaction side to `H^cop`.
    pub fn mirror(&self, target: Case) -> Self {
        let flip_a = target.action_side() != self.action.side();
        let flip_c = target.coaction_side() != self.coaction.side();
        let hopf = match (flip_a, flip_c) {
            (false, false) => self.hopf.clone(),
            (true, false) => self.hopf.variant(Variant::Op),
            (false, true) => self.hopf.variant(Variant::Cop),
            (true, true) => self.hopf.variant(Variant::OpCop),
        };
        TwoSidedStructure {
            hopf,
            action: self.action.with_side(target.action_side()),
            coaction: self.coaction.with_side(target.coaction_side()),
        }
    }
}

/// `k` with action `ε` and coaction `1 ↦ 1⊗1`.
pub fn trivial_module<F: Field>(h: &FinHopfAlgebra<F>, case: Case) -> TwoSidedStructure<F> {
    TwoSidedStructure {
        hopf: h.clone(),
        action: ActionStructure::trivial(case.action_side(), h.counit_vec(), 1),
        coaction: CoactionStructure::trivial(case.coaction_side(), h, 1),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Compat {
    Ayd,
    Yd,
}

/// The anti-Yetter-Drinfeld condition for the case given by the sides.
pub fn check_ayd<F: Field>(m: &TwoSidedStructure<F>) -> Report<F> {
    compatibility(m, Compat::Ayd)
}

/// The Yetter-Drinfeld condition: the anti-Yetter-Drinfeld condition with
/// `S` and `S⁻¹` exchanged.
pub fn check_yd<F: Field>(m: &TwoSidedStructure<F>) -> Report<F> {
    compatibility(m, Compat::Yd)
}

fn compatibility<F: Field>(m: &TwoSidedStructure<F>, kind: Compat) -> Report<F> {
    let h = &m.hopf;
    let (act, co) = (&m.action, &m.coaction);
    let case = m.case();
    // aYD uses S⁻¹ in the ll and rr equations and S in lr and rl; YD swaps them.
    let use_inverse = matches!(
        (case, kind),
        (Case::Ll | Case::Rr, Compat::Ayd) | (Case::Lr | Case::Rl, Compat::Yd)
    );
    let twist = |i: usize| if use_inverse { h.antipode_inv(i) } else { h.antipode(i) };
    let name = match kind {
        Compat::Ayd => format!("anti-Yetter-Drinfeld ({case})"),
        Compat::Yd => format!("Yetter-Drinfeld ({case})"),
    };
    let out = co.out_shape();
    check_identity(&name, &[h.dim(), m.dim()], &out, |idx| {
        let (hi, x) = (idx[0], idx[1]);
        let lhs = co.coact_vec(act.act(hi, x));
        let mut rhs = SparseVec::zero();
        for (a, b, c, k) in h.coproduct3(hi) {
            for (y, z, d) in co.terms(x) {
                let hpart = match case {
                    // h1 m(-1) T(h3)
                    Case::Ll => h.mul(h.mul_basis(*a, *y), twist(*c)),
                    // h3 m(1) T(h1)
                    Case::Lr => h.mul(h.mul_basis(*c, *y), twist(*a)),
                    // T(h3) m(-1) h1
                    Case::Rl => h.mul(&h.mul(twist(*c), &SparseVec::basis(*y)), &SparseVec::basis(*a)),
                    // T(h1) m(1) h3
                    Case::Rr => h.mul(&h.mul(twist(*a), &SparseVec::basis(*y)), &SparseVec::basis(*c)),
                };
                // h2 acting on m(0), on the module's side
                let mpart = act.act(*b, *z);
                let coef = k.clone() * d;
                for (p, u) in hpart.iter() {
                    for (q, v) in mpart.iter() {
                        rhs.add_term(co.out_index(p, q), coef.clone() * u * v);
                    }
                }
            }
        }
        (lhs, rhs)
    })
}

/// The action undoes the coaction: `m(-1)m(0) = m` and its three mirror images.
pub fn check_stability<F: Field>(m: &TwoSidedStructure<F>) -> Report<F> {
    let dim = m.dim();
    check_identity(&format!("stability ({})", m.case()), &[dim], &[dim], |idx| {
        let mut lhs = SparseVec::zero();
        for (y, z, d) in m.coaction.terms(idx[0]) {
            lhs.add_scaled(m.action.act(*y, *z), d);
        }
        (lhs, SparseVec::basis(idx[0]))
    })
}

/// `N⊗M` (ll, lr) or `M⊗N` (rl, rr) for a Yetter-Drinfeld module `N` and an
/// anti-Yetter-Drinfeld module `M`. Tensor basis vectors are indexed with the
/// left factor major.
pub fn tensor_product<F: Field>(
    n: &TwoSidedStructure<F>,
    m: &TwoSidedStructure<F>,
    case: Case,
) -> Result<TwoSidedStructure<F>> {
    for (label, s) in [("N", n), ("M", m)] {
        if s.case() != case {
            return Err(Error::Precondition(format!("{label} is a {} structure, expected {case}", s.case())));
        }
    }
    if !n.hopf.structure_eq(&m.hopf) {
        return Err(Error::Precondition("N and M are over different Hopf algebras".into()));
    }
    let r = check_yd(n);
    if !r.passed {
        return Err(Error::Precondition(format!("N fails {} at {:?}", r.axiom, r.witness.unwrap_or_default())));
    }
    let r = check_ayd(m);
    if !r.passed {
        return Err(Error::Precondition(format!("M fails {} at {:?}", r.axiom, r.witness.unwrap_or_default())));
    }
    let h = &n.hopf;
    let (dn, dm) = (n.dim(), m.dim());
    let dim = dn * dm;
    // (left factor, right factor, dim of right factor)
    let (left, right) = match case {
        Case::Ll | Case::Lr => (n, m),
        Case::Rl | Case::Rr => (m, n),
    };
    let dr = right.dim();
    let action = ActionStructure::from_fn(case.action_side(), h.dim(), dim, |hi, x| {
        let (xl, xr) = (x / dr, x % dr);
        let mut v = SparseVec::zero();
        for (a, b, c) in h.coproduct(hi) {
            // which coproduct leg acts on the left factor
            let (on_left, on_right) = match case {
                Case::Ll | Case::Rr => (*a, *b),
                Case::Lr | Case::Rl => (*b, *a),
            };
            let vl = left.action.act(on_left, xl);
            let vr = right.action.act(on_right, xr);
            v.add_scaled(&vl.outer(vr, dr), c);
        }
        v
    });
    let terms = (0..dim)
        .map(|x| {
            let (xl, xr) = (x / dr, x % dr);
            let mut out = Vec::new();
            for (yl, zl, cl) in left.coaction.terms(xl) {
                for (yr, zr, cr) in right.coaction.terms(xr) {
                    // coaction components multiply in the order of the factors
                    for (p, u) in h.mul_basis(*yl, *yr).iter() {
                        out.push((p, zl * dr + zr, cl.clone() * cr * u));
                    }
                }
            }
            out
        })
        .collect();
    let coaction = CoactionStructure::from_terms(case.coaction_side(), h.dim(), dim, terms);
    TwoSidedStructure::new_unchecked(h.clone(), action, coaction)
}

/// `k` as a right module via the character `δ` and a left comodule via the
/// group-like `σ`.
pub fn one_dim_module<F: Field>(h: &FinHopfAlgebra<F>, delta: &[F], sigma: &[F]) -> Result<TwoSidedStructure<F>> {
    if !h.check_element(delta, ElementKind::Character) {
        return Err(Error::Precondition("δ is not a character".into()));
    }
    if !h.check_element(sigma, ElementKind::GroupLike) {
        return Err(Error::Precondition("σ is not group-like".into()));
    }
    let action = ActionStructure::from_fn(Side::Right, h.dim(), 1, |a, _| SparseVec::term(0, delta[a].clone()));
    let terms = vec![sigma.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, 0, c.clone())).collect()];
    let coaction = CoactionStructure::from_terms(Side::Left, h.dim(), 1, terms);
    TwoSidedStructure::new_unchecked(h.clone(), action, coaction)
}

/// `δ(σ) = 1` and `S_δ²(h) = σhσ⁻¹` for all basis elements, where
/// `S_δ(h) = δ(h(1)) S(h(2))`.
pub fn check_modular_pair<F: Field>(h: &FinHopfAlgebra<F>, delta: &[F], sigma: &[F]) -> bool {
    let n = h.dim();
    if delta.len() != n || sigma.len() != n {
        return false;
    }
    let sig = SparseVec::from_dense(sigma);
    if sig.pair(delta) != F::one() {
        return false;
    }
    let s_delta = |v: &SparseVec<F>| -> SparseVec<F> {
        let mut out = SparseVec::zero();
        for (i, c) in v.iter() {
            for (a, b, k) in h.coproduct(i) {
                let coef = c.clone() * k * &delta[*a];
                if !coef.is_zero() {
                    out.add_scaled(h.antipode(*b), &coef);
                }
            }
        }
        out
    };
    // σ is group-like, so σ⁻¹ = S(σ)
    let sig_inv = h.apply_antipode(&sig);
    (0..n).all(|i| {
        let e = SparseVec::basis(i);
        s_delta(&s_delta(&e)) == h.mul(&h.mul(&sig, &e), &sig_inv)
    })
}

/// Checks the hypotheses under which an algebra `M` with a left coaction and
/// an algebra surjection `π: H → M` is a stable module, then stability itself.
/// `pi[i]` is `π(e_i)`. The report names the first hypothesis that fails.
pub fn check_pi_stability<F: Field>(
    h: &FinHopfAlgebra<F>,
    m: &FinAlgebra<F>,
    coaction: &CoactionStructure<F>,
    pi: &[SparseVec<F>],
) -> Result<Report<F>> {
    let (n, dm) = (h.dim(), m.dim());
    if pi.len() != n || pi.iter().any(|v| v.max_index().is_some_and(|i| i >= dm)) {
        return Err(Error::Shape(format!("π must map {n} basis vectors into dimension {dm}")));
    }
    if coaction.side() != Side::Left || coaction.dim() != dm || coaction.hopf_dim() != n {
        return Err(Error::Shape("expected a left coaction of H on M".into()));
    }
    let r = verify_coaction(h, coaction)?;
    if !r.passed {
        return Ok(r);
    }
    let img = |v: &SparseVec<F>| v.map(|i| pi[i].clone());
    let r = check_identity("π multiplicative", &[n, n], &[dm], |idx| {
        (img(h.mul_basis(idx[0], idx[1])), m.mul(&pi[idx[0]], &pi[idx[1]]))
    });
    if !r.passed {
        return Ok(r);
    }
    if img(h.unit()) != *m.unit() {
        return Ok(Report::fail_bare("π unital", vec![]));
    }
    let rows: Vec<Vec<F>> = pi.iter().map(|v| v.to_dense(dm)).collect();
    let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(&rows)?.rank() };
    if rank < dm {
        return Ok(Report::fail_bare("π surjective", vec![rank]));
    }
    let action = ActionStructure::from_fn(Side::Left, n, dm, |a, x| m.mul(&pi[a], &SparseVec::basis(x)));
    let module = TwoSidedStructure::new_unchecked(h.clone(), action, coaction.clone())?;
    let r = check_ayd(&module);
    if !r.passed {
        return Ok(r);
    }
    // π(1(-1)) 1(0) = 1_M
    let mut lhs = SparseVec::zero();
    for (x, c) in m.unit().iter() {
        for (y, z, d) in coaction.terms(x) {
            lhs.add_scaled(&m.mul(&pi[*y], &SparseVec::basis(*z)), &(c.clone() * d));
        }
    }
    if lhs != *m.unit() {
        return Ok(Report::fail_bare("unit condition", vec![]));
    }
    Ok(check_stability(&module))
}

/// A `G`-graded space with a `G`-action given by signed permutations:
/// `action[g][x] = (y, c)` means `g·m_x = c m_y`. The coaction is
/// `m ↦ g⊗m` on `M_g`.
pub fn group_graded_module<F: Field>(
    g: &Group,
    grading: &[usize],
    action: &[Vec<(usize, F)>],
) -> Result<TwoSidedStructure<F>> {
    let dim = grading.len();
    if grading.iter().any(|&d| d >= g.order()) {
        return Err(Error::Invalid("grading names a non-element of G".into()));
    }
    if action.len() != g.order() || action.iter().any(|row| row.len() != dim || row.iter().any(|(y, _)| *y >= dim)) {
        return Err(Error::Shape(format!("action must give {dim} images for each of {} elements", g.order())));
    }
    let e = g.identity();
    if (0..dim).any(|x| action[e][x] != (x, F::one())) {
        return Err(Error::Invalid("the identity of G does not act as the identity".into()));
    }
    let h = group_algebra::<F>(g);
    let act = ActionStructure::from_fn(Side::Left, g.order(), dim, |a, x| {
        let (y, c) = &action[a][x];
        SparseVec::term(*y, c.clone())
    });
    let terms = (0..dim).map(|x| vec![(grading[x], x, F::one())]).collect();
    let co = CoactionStructure::from_terms(Side::Left, g.order(), dim, terms);
    TwoSidedStructure::new(h, act, co)
}

/// `H` with the coaction `Δ` and the adjoint action, a Yetter-Drinfeld module
/// in the given case: `h·m = h(1) m S(h(2))` (ll), `h(2) m S⁻¹(h(1))` (lr),
/// `m·h = S⁻¹(h(2)) m h(1)` (rl), `S(h(1)) m h(2)` (rr).
pub fn adjoint_yd_module<F: Field>(h: &FinHopfAlgebra<F>, case: Case) -> TwoSidedStructure<F> {
    let n = h.dim();
    let action = ActionStructure::from_fn(case.action_side(), n, n, |a, x| {
        let mut v = SparseVec::zero();
        for (p, q, c) in h.coproduct(a) {
            let ex = SparseVec::basis(x);
            let term = match case {
                Case::Ll => h.mul(&h.mul(&SparseVec::basis(*p), &ex), h.antipode(*q)),
                Case::Lr => h.mul(&h.mul(&SparseVec::basis(*q), &ex), h.antipode_inv(*p)),
                Case::Rl => h.mul(&h.mul(h.antipode_inv(*q), &ex), &SparseVec::basis(*p)),
                Case::Rr => h.mul(&h.mul(h.antipode(*p), &ex), &SparseVec::basis(*q)),
            };
            v.add_scaled(&term, c);
        }
        v
    });
    TwoSidedStructure {
        hopf: h.clone(),
        action,
        coaction: CoactionStructure::regular(case.coaction_side(), h),
    }
}

#[cfg(test)]
mod tests;
