//! The algebra `A(H)` on `H*⊗H`, the Drinfeld double `D(H)` with its Hopf
//! structure, module conversions, and the `D(H)`-comodule algebra structure
//! on `A(H)`.
//!
//! Basis of `H*⊗H`: `f_a ⊗ e_b` at flat index `a * n + b`, where `f_a` is the
//! dual basis of `H*`.

use std::collections::HashMap;

use crate::algebra::FinAlgebra;
use crate::ayd::{check_ayd, check_yd, Case, TwoSidedStructure};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::galois::check_comodule_algebra;
use crate::hopf::{FinHopfAlgebra, HopfStructure};
use crate::rep::{ActionStructure, AlgebraModule, CoactionStructure, Side};
use crate::sparse::{Accumulator, SparseVec};
use crate::tensor::Tensor;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Twist {
    /// `A(H)`: the cross relation carries `S²`.
    SquaredAntipode,
    /// `D(H)`
    Identity,
}

/// `f_a f_x` in `H*`, i.e. `(φφ')(h) = φ(h(1))φ'(h(2))`.
fn dual_products<F: Field>(h: &FinHopfAlgebra<F>) -> Vec<SparseVec<F>> {
    let n = h.dim();
    let mut table = vec![SparseVec::zero(); n * n];
    for k in 0..n {
        for (a, x, c) in h.coproduct(k) {
            table[a * n + x].add_term(k, c.clone());
        }
    }
    table
}

/// `ε` in the dual basis.
fn dual_unit<F: Field>(h: &FinHopfAlgebra<F>) -> SparseVec<F> {
    SparseVec::from_dense(h.counit_vec())
}

fn cross_product<F: Field>(h: &FinHopfAlgebra<F>, twist: Twist) -> Vec<SparseVec<F>> {
    let n = h.dim();
    let nn = n * n;
    let dmul = dual_products(h);
    let s2: Vec<SparseVec<F>> = (0..n).map(|i| h.apply_antipode(h.antipode(i))).collect();
    // (u, w) ↦ [S⁻¹(e_u) e_x T(e_w) for x]
    let mut sandwiches: HashMap<(usize, usize), Vec<SparseVec<F>>> = HashMap::new();
    let mut table = vec![SparseVec::zero(); nn * nn];
    let mut acc = Accumulator::new(nn);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    for (b1, b2, b3, k) in h.coproduct3(b) {
                        let sand = sandwiches.entry((*b3, *b1)).or_insert_with(|| {
                            let right = match twist {
                                Twist::SquaredAntipode => s2[*b1].clone(),
                                Twist::Identity => SparseVec::basis(*b1),
                            };
                            let left = h.antipode_inv(*b3);
                            (0..n).map(|x| h.mul(&h.mul(left, &SparseVec::basis(x)), &right)).collect()
                        });
                        // ψ(x) = f_c(sandwich x)
                        for (x, s) in sand.iter().enumerate() {
                            let psi = s.get(c);
                            if psi.is_zero() {
                                continue;
                            }
                            let coeff = k.clone() * &psi;
                            for (phi, u) in dmul[a * n + x].iter() {
                                for (hh, v) in h.mul_basis(*b2, d).iter() {
                                    acc.add(phi * n + hh, coeff.clone() * u * v);
                                }
                            }
                        }
                    }
                    table[(a * n + b) * nn + c * n + d] = acc.drain();
                }
            }
        }
    }
    table
}

fn table_to_tensor<F: Field>(table: &[SparseVec<F>], dim: usize) -> Tensor<F> {
    let mut t = Tensor::zeros(vec![dim, dim, dim]);
    for (ij, v) in table.iter().enumerate() {
        for (k, c) in v.iter() {
            t.set(&[ij / dim, ij % dim, k], c.clone()).expect("in range");
        }
    }
    t
}

/// `ε⊗1`.
fn tensor_unit<F: Field>(h: &FinHopfAlgebra<F>) -> SparseVec<F> {
    dual_unit(h).outer(h.unit(), h.dim())
}

fn unverified<F: Field>(h: &FinHopfAlgebra<F>, twist: Twist) -> FinAlgebra<F> {
    let nn = h.dim() * h.dim();
    let table = cross_product(h, twist);
    let mult = table_to_tensor(&table, nn);
    let unit = Tensor::from_sparse(vec![nn], &tensor_unit(h));
    FinAlgebra::from_tensors_unchecked(&mult, &unit).expect("shapes agree")
}

fn build<F: Field>(h: &FinHopfAlgebra<F>, twist: Twist) -> Result<FinAlgebra<F>> {
    let alg = unverified(h, twist);
    let r = alg.verify();
    if !r.passed {
        return Err(Error::Internal(format!("{:?} product: {} fails at {:?}", twist, r.axiom, r.witness)));
    }
    Ok(alg)
}

/// The product of [`build_ah`] without the associativity and unit checks.
pub fn ah_unverified<F: Field>(h: &FinHopfAlgebra<F>) -> FinAlgebra<F> {
    unverified(h, Twist::SquaredAntipode)
}

/// The product of [`build_double`] without the associativity and unit checks.
pub fn double_unverified<F: Field>(h: &FinHopfAlgebra<F>) -> FinAlgebra<F> {
    unverified(h, Twist::Identity)
}

/// `A(H)` with `(φ⊗h)(φ'⊗h') = φ'(1)(S⁻¹h(3)) φ'(3)(S²h(1)) φφ'(2) ⊗ h(2)h'`.
/// Associativity and unit are checked exhaustively.
pub fn build_ah<F: Field>(h: &FinHopfAlgebra<F>) -> Result<FinAlgebra<F>> {
    build(h, Twist::SquaredAntipode)
}

/// The Drinfeld double on `H*⊗H`: the product of [`build_ah`] with `S²`
/// replaced by the identity.
pub fn build_double<F: Field>(h: &FinHopfAlgebra<F>) -> Result<FinAlgebra<F>> {
    build(h, Twist::Identity)
}

pub fn tensor_basis_names<F: Field>(h: &FinHopfAlgebra<F>) -> Vec<String> {
    let names = h.basis_names();
    let mut out = Vec::with_capacity(names.len() * names.len());
    for a in names {
        for b in names {
            out.push(format!("{a}*⊗{b}"));
        }
    }
    out
}

/// `D(H)` as a Hopf algebra: `Δ(φ⊗h) = (φ(2)⊗h(1)) ⊗ (φ(1)⊗h(2))`,
/// `ε(φ⊗h) = φ(1)ε(h)`, `S(φ⊗h) = (ε⊗S(h))(φ∘S⁻¹⊗1)`.
pub fn double_structure<F: Field>(h: &FinHopfAlgebra<F>) -> HopfStructure<F> {
    let n = h.dim();
    let nn = n * n;
    let algebra = double_unverified(h);

    let mut comult = Tensor::zeros(vec![nn, nn, nn]);
    for (x, y, v) in double_coproduct_terms(h) {
        let old = comult.get(&[x, y / nn, y % nn]);
        comult.set(&[x, y / nn, y % nn], old + v).expect("in range");
    }

    let mut counit = Tensor::zeros(vec![nn]);
    for a in 0..n {
        let one_a = h.unit().get(a);
        for b in 0..n {
            counit.set(&[a * n + b], one_a.clone() * h.counit(b)).expect("in range");
        }
    }

    // φ∘S⁻¹ on f_a is Σ_x f_a(S⁻¹ e_x) f_x
    let mut antipode = Tensor::zeros(vec![nn, nn]);
    let eps = dual_unit(h);
    for a in 0..n {
        let mut phi = SparseVec::zero();
        for x in 0..n {
            let c = h.antipode_inv(x).get(a);
            if !c.is_zero() {
                phi.add_term(x, c);
            }
        }
        let right = phi.outer(h.unit(), n);
        for b in 0..n {
            let left = eps.outer(h.antipode(b), n);
            for (k, c) in algebra.mul(&left, &right).iter() {
                antipode.set(&[a * n + b, k], c.clone()).expect("in range");
            }
        }
    }

    HopfStructure {
        basis_names: tensor_basis_names(h),
        mult: algebra.mult_tensor(),
        unit: algebra.unit_tensor(),
        comult,
        counit,
        antipode,
    }
}

/// [`double_structure`], verified.
pub fn double_hopf<F: Field>(h: &FinHopfAlgebra<F>) -> Result<FinHopfAlgebra<F>> {
    FinHopfAlgebra::new(double_structure(h)).map_err(|e| Error::Internal(format!("D(H) Hopf structure: {e}")))
}

/// `(source, flat target, coefficient)` of `(f_a⊗e_b) ↦ Σ (f_j⊗e_{b1}) ⊗ (f_i⊗e_{b2})`
/// where `Δf_a = Σ f_i⊗f_j`; the flat target is `left * n² + right`.
fn double_coproduct_terms<F: Field>(h: &FinHopfAlgebra<F>) -> Vec<(usize, usize, F)> {
    let n = h.dim();
    let nn = n * n;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (a, c) in h.mul_basis(i, j).iter() {
                for b in 0..n {
                    for (b1, b2, d) in h.coproduct(b) {
                        out.push((a * n + b, (j * n + b1) * nn + i * n + b2, c.clone() * d));
                    }
                }
            }
        }
    }
    out
}

/// `(φ⊗h) ↦ (φ(2)⊗h(1)) ⊗ (φ(1)⊗h(2))` as a right coaction of `D(H)` on
/// `A(H)`, unverified.
pub fn ah_coaction<F: Field>(h: &FinHopfAlgebra<F>) -> CoactionStructure<F> {
    let nn = h.dim() * h.dim();
    let mut terms = vec![Vec::new(); nn];
    for (x, y, v) in double_coproduct_terms(h) {
        terms[x].push((y % nn, y / nn, v));
    }
    CoactionStructure::from_terms(Side::Right, nn, nn, terms)
}

/// [`ah_coaction`] with the Hopf structure of `D(H)` and the comodule
/// algebra property both verified; returns `A(H)`, `D(H)` and the coaction.
pub fn ah_double_coaction<F: Field>(
    h: &FinHopfAlgebra<F>,
) -> Result<(FinAlgebra<F>, FinHopfAlgebra<F>, CoactionStructure<F>)> {
    let ah = build_ah(h)?;
    let d = double_hopf(h)?;
    let lambda = ah_coaction(h);
    let r = check_comodule_algebra(&ah, &d, &lambda)?;
    if !r.passed {
        return Err(Error::Internal(format!("A(H) over D(H): {} fails at {:?}", r.axiom, r.witness)));
    }
    Ok((ah, d, lambda))
}

fn lr_to_module<F: Field>(algebra: &FinAlgebra<F>, m: &TwoSidedStructure<F>) -> Result<AlgebraModule<F>> {
    let n = m.hopf.dim();
    if m.case() != Case::Lr {
        return Err(Error::Precondition(format!("expected an lr structure, got {}", m.case())));
    }
    if algebra.dim() != n * n {
        return Err(Error::Shape(format!("algebra of dim {} is not built on H*⊗H", algebra.dim())));
    }
    // (f_a⊗e_b)·m = f_a((e_b m)(1)) (e_b m)(0)
    let action = ActionStructure::from_fn(Side::Left, n * n, m.dim(), |ab, x| {
        let (a, b) = (ab / n, ab % n);
        let mut v = SparseVec::zero();
        for (y, c) in m.action.act(b, x).iter() {
            for (hh, z, k) in m.coaction.terms(y) {
                if *hh == a {
                    v.add_term(*z, c.clone() * k);
                }
            }
        }
        v
    });
    AlgebraModule::new(algebra.clone(), action)
}

/// Left `A(H)`-module of an lr-case aYD module.
pub fn ayd_to_ah_module<F: Field>(ah: &FinAlgebra<F>, m: &TwoSidedStructure<F>) -> Result<AlgebraModule<F>> {
    if m.case() == Case::Lr {
        let r = check_ayd(m);
        if !r.passed {
            return Err(Error::Precondition(format!("{} fails at {:?}", r.axiom, r.witness.unwrap_or_default())));
        }
    }
    lr_to_module(ah, m)
}

/// Left `D(H)`-module of an lr-case YD module.
pub fn yd_to_double_module<F: Field>(double: &FinAlgebra<F>, m: &TwoSidedStructure<F>) -> Result<AlgebraModule<F>> {
    if m.case() == Case::Lr {
        let r = check_yd(m);
        if !r.passed {
            return Err(Error::Precondition(format!("{} fails at {:?}", r.axiom, r.witness.unwrap_or_default())));
        }
    }
    lr_to_module(double, m)
}

/// `hm = (ε⊗h)m` and `ρ(m) = Σ_i (f_i⊗1)m ⊗ e_i`. Works for modules over
/// either `A(H)` or `D(H)`; the result is not re-verified.
pub fn module_to_lr<F: Field>(h: &FinHopfAlgebra<F>, v: &AlgebraModule<F>) -> Result<TwoSidedStructure<F>> {
    let n = h.dim();
    if v.algebra.dim() != n * n {
        return Err(Error::Shape(format!("algebra of dim {} is not built on H*⊗H", v.algebra.dim())));
    }
    let dim = v.dim();
    let eps = dual_unit(h);
    let action = ActionStructure::from_fn(Side::Left, n, dim, |b, x| {
        v.action.act_vec(&eps.outer(&SparseVec::basis(b), n), &SparseVec::basis(x))
    });
    let terms = (0..dim)
        .map(|x| {
            let mut out = Vec::new();
            for i in 0..n {
                let fi = SparseVec::basis(i).outer(h.unit(), n);
                for (y, c) in v.action.act_vec(&fi, &SparseVec::basis(x)).iter() {
                    out.push((i, y, c.clone()));
                }
            }
            out
        })
        .collect();
    let coaction = CoactionStructure::from_terms(Side::Right, n, dim, terms);
    TwoSidedStructure::new_unchecked(h.clone(), action, coaction)
}

/// The lr aYD module of an `A(H)`-module.
pub fn ah_module_to_ayd<F: Field>(h: &FinHopfAlgebra<F>, v: &AlgebraModule<F>) -> Result<TwoSidedStructure<F>> {
    module_to_lr(h, v)
}
