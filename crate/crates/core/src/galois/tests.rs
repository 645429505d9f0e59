use super::*;
use crate::ayd::{adjoint_yd_module, check_ayd, check_stability, check_yd, Case};
use crate::field::{Fp, Q};
use crate::hopf::{function_algebra, group_algebra, sweedler, taft, Group};
use crate::tensor::Tensor;
use num_traits::{One, Zero};

type F7 = Fp<7>;

fn builtins_f7() -> Vec<(&'static str, FinHopfAlgebra<F7>)> {
    vec![
        ("kC2", group_algebra(&Group::cyclic(2))),
        ("kC3", group_algebra(&Group::cyclic(3))),
        ("kS3", group_algebra(&Group::symmetric3())),
        ("k^C2", function_algebra(&Group::cyclic(2))),
        ("k^S3", function_algebra(&Group::symmetric3())),
        ("sweedler", sweedler()),
        ("taft3", taft(3, F7::new(2)).unwrap()),
    ]
}

fn unit_dense<F: Field>(h: &FinHopfAlgebra<F>) -> Vec<F> {
    h.unit().to_dense(h.dim())
}

#[test]
fn regular_coinvariants_are_scalars() {
    for (name, h) in builtins_f7() {
        let p = ComoduleAlgebra::regular(&h);
        assert!(check_comodule_algebra(&p.algebra, &h, &p.coaction).unwrap().passed, "{name}");
        let b = coinvariants(&p).unwrap();
        assert_eq!(b.len(), 1, "{name}");
        assert!(Subspace::span(h.dim(), &b).contains(&unit_dense(&h)), "{name}");
    }
}

#[test]
fn trivial_coaction_has_everything_coinvariant() {
    let h = sweedler::<Q>();
    let p = ComoduleAlgebra::trivial(h.algebra().clone(), &h);
    assert_eq!(coinvariants(&p).unwrap().len(), 4);
}

#[test]
fn comodule_algebra_rejects_bad_unit() {
    let h = sweedler::<Q>();
    // the regular coaction with the image of 1 removed
    let mut terms: Vec<Vec<(usize, usize, Q)>> = (0..4).map(|x| CoactionStructure::regular(Side::Right, &h).terms(x).to_vec()).collect();
    terms[0] = vec![];
    let bad = CoactionStructure::from_terms(Side::Right, 4, 4, terms);
    let r = check_comodule_algebra(h.algebra(), &h, &bad).unwrap();
    assert!(!r.passed);
    assert!(ComoduleAlgebra::new(h.algebra().clone(), h.clone(), bad).is_err());
    let good = ComoduleAlgebra::new(h.algebra().clone(), h.clone(), CoactionStructure::regular(Side::Right, &h));
    assert!(good.is_ok());
}

#[test]
fn centralizer_examples() {
    let h = sweedler::<Q>();
    let p = ComoduleAlgebra::regular(&h);
    let one = unit_dense(&h);
    assert_eq!(centralizer(&p, std::slice::from_ref(&one)).unwrap().len(), 4);
    // B = span{1, g}: x and gx anticommute with g
    let g = SparseVec::basis(1).to_dense(4);
    let z = centralizer(&p, &[one, g.clone()]).unwrap();
    assert_eq!(z.len(), 2);
    let s = Subspace::span(4, &z);
    assert!(s.contains(&g) && s.contains(&unit_dense(&h)));

    let k = function_algebra::<Q>(&Group::symmetric3());
    let p = ComoduleAlgebra::regular(&k);
    let all: Vec<Vec<Q>> = (0..6).map(|i| SparseVec::basis(i).to_dense(6)).collect();
    assert_eq!(centralizer(&p, &all).unwrap().len(), 6);
}

#[test]
fn relative_tensor_dimensions() {
    for (name, h) in builtins_f7() {
        let p = ComoduleAlgebra::regular(&h);
        let q = relative_tensor(&p, &[unit_dense(&h)]).unwrap();
        assert_eq!(q.dim(), h.dim() * h.dim(), "{name}");
    }
    // B = P = k^{C2}: P⊗_P P = P
    let k = function_algebra::<Q>(&Group::cyclic(2));
    let p = ComoduleAlgebra::trivial(k.algebra().clone(), &k);
    let b = coinvariants(&p).unwrap();
    let q = relative_tensor(&p, &b).unwrap();
    assert_eq!(q.dim(), 2);
    // q is onto: every class is the image of its section
    for c in 0..q.dim() {
        let mut e = vec![Q::zero(); q.dim()];
        e[c] = Q::one();
        assert_eq!(q.project(&q.section(c)), e);
        assert_eq!(q.project(&q.alternate_section(c)), e);
    }
}

#[test]
fn canonical_map_is_bijective_for_p_equal_h() {
    for (name, h) in builtins_f7() {
        let g = GaloisData::new(ComoduleAlgebra::regular(&h)).unwrap();
        assert!(g.is_galois(), "{name}");
    }
    let g = GaloisData::new(ComoduleAlgebra::regular(&sweedler::<Q>())).unwrap();
    assert!(g.is_galois());
}

#[test]
fn trivial_coaction_is_not_galois() {
    let h = group_algebra::<Q>(&Group::cyclic(2));
    let g = GaloisData::new(ComoduleAlgebra::trivial(h.algebra().clone(), &h)).unwrap();
    assert!(!g.is_galois());
    assert!(g.translation_map().is_err());
    assert!(make_sayd_prop5(&g.source).is_err());
}

/// `H×H` with `Δ` on each factor.
fn doubled(h: &FinHopfAlgebra<Q>) -> ComoduleAlgebra<Q> {
    let m = h.dim();
    let mut mult = Tensor::zeros(vec![2 * m, 2 * m, 2 * m]);
    let mut unit = Tensor::zeros(vec![2 * m]);
    for c in 0..2 {
        for i in 0..m {
            for j in 0..m {
                for (k, v) in h.mul_basis(i, j).iter() {
                    mult.set(&[c * m + i, c * m + j, c * m + k], v.clone()).unwrap();
                }
            }
        }
        for (u, v) in h.unit().iter() {
            unit.set(&[c * m + u], v.clone()).unwrap();
        }
    }
    let alg = FinAlgebra::new(&mult, &unit).unwrap();
    let terms = (0..2 * m)
        .map(|x| {
            let (c, i) = (x / m, x % m);
            h.coproduct(i).iter().map(|(a, b, v)| (*b, c * m + a, v.clone())).collect()
        })
        .collect();
    let co = CoactionStructure::from_terms(Side::Right, m, 2 * m, terms);
    ComoduleAlgebra::new(alg, h.clone(), co).unwrap()
}

#[test]
fn product_of_two_copies_is_galois_over_its_idempotents() {
    let h = group_algebra::<Q>(&Group::cyclic(2));
    let g = GaloisData::new(doubled(&h)).unwrap();
    assert_eq!(g.b_basis.len(), 2);
    // cross terms vanish over B = k×k, leaving 2·m² = dim(P⊗H)
    assert_eq!(g.quotient.dim(), 8);
    assert_eq!(g.can.rows(), 8);
    assert!(g.is_galois());
    let s = make_sayd_prop5(&g.source).unwrap();
    assert!(check_ayd(&s).passed && check_stability(&s).passed);
}

#[test]
fn translation_map_examples() {
    for (name, h) in builtins_f7() {
        let n = h.dim();
        let g = GaloisData::new(ComoduleAlgebra::regular(&h)).unwrap();
        let t = g.translation_map().unwrap();
        let one = h.unit();
        // T(1) = q(1⊗1)
        let t1: Vec<F7> = (0..g.quotient.dim()).map(|k| t.iter().zip(one.to_dense(n)).fold(F7::zero(), |acc, (ti, c)| acc + ti[k] * c)).collect();
        assert_eq!(t1, g.quotient.project(&one.outer(one, n)), "{name}");
        for i in 0..n {
            // can(T(h)) = 1⊗h, through either section
            let expect = one.outer(&SparseVec::basis(i), n);
            assert_eq!(g.can_apply(&t[i]), expect, "{name}");
            assert_eq!(g.can_on_tensor(&g.quotient.lift(&t[i], false)), expect, "{name}");
            assert_eq!(g.can_on_tensor(&g.quotient.lift(&t[i], true)), expect, "{name}");
            // P = H: T(h) = q(S(h1)⊗h2)
            let mut s = SparseVec::zero();
            for (a, b, c) in h.coproduct(i) {
                s.add_scaled(&h.antipode(*a).outer(&SparseVec::basis(*b), n), c);
            }
            assert_eq!(t[i], g.quotient.project(&s), "{name}");
            assert_eq!(g.can_on_tensor(&s), expect, "{name}");
        }
    }
}

#[test]
fn translation_map_is_linear() {
    let h = sweedler::<Q>();
    let g = GaloisData::new(ComoduleAlgebra::regular(&h)).unwrap();
    let t = g.translation_map().unwrap();
    let inv = g.can.inverse().unwrap();
    let (a, b) = (Q::from_i64(3), Q::from_i64(-2) / Q::from_i64(5));
    let v = SparseVec::basis(1).scaled(&a);
    let mut w = v.clone();
    w.add_scaled(&SparseVec::basis(2), &b);
    let direct = inv.apply(&h.unit().outer(&w, 4).to_dense(16));
    let combined: Vec<Q> = (0..16).map(|k| a.clone() * &t[1][k] + b.clone() * &t[2][k]).collect();
    assert_eq!(direct, combined);
}

#[test]
fn commutative_p_gives_trivial_mu_actions() {
    for name in ["kC2", "kC3", "k^C2", "k^S3"] {
        let h = builtins_f7().into_iter().find(|(n, _)| *n == name).unwrap().1;
        let g = GaloisData::new(ComoduleAlgebra::regular(&h)).unwrap();
        for flipped in [false, true] {
            let (basis, act) = mu_action(&g, flipped).unwrap();
            assert_eq!(basis.len(), h.dim());
            let triv = ActionStructure::trivial(Side::Right, h.counit_vec(), h.dim());
            // in the echelon basis of P, which is the standard basis here
            assert_eq!(act.to_tensor(), triv.to_tensor(), "{name} flipped={flipped}");
        }
    }
}

#[test]
fn group_algebra_mu_action_is_right_adjoint() {
    let grp = Group::symmetric3();
    let h = group_algebra::<Q>(&grp);
    let g = GaloisData::new(ComoduleAlgebra::regular(&h)).unwrap();
    let t = g.translation_map().unwrap();
    for x in 0..6 {
        // T(g) = g⁻¹⊗g
        let expect = g.quotient.project(&SparseVec::basis(grp.inv(x) * 6 + x));
        assert_eq!(t[x], expect);
    }
    let (basis, act) = mu_action(&g, false).unwrap();
    assert_eq!(basis.len(), 6);
    for a in 0..6 {
        for p in 0..6 {
            let conj = grp.mul(grp.mul(grp.inv(a), p), a);
            assert_eq!(act.act(a, p), &SparseVec::basis(conj));
        }
    }
}

#[test]
fn sweedler_flipped_action_negates_x_under_g() {
    let h = sweedler::<Q>();
    let g = GaloisData::new(ComoduleAlgebra::regular(&h)).unwrap();
    let (_, act) = mu_action(&g, true).unwrap();
    // basis 1, g, x, gx; x·g = -x
    assert_eq!(act.act(1, 2), &SparseVec::term(2, Q::from_i64(-1)));
    assert_eq!(act.act(1, 0), &SparseVec::basis(0));
}

#[test]
fn prop5_modules_are_stable_ayd() {
    for (name, h) in builtins_f7() {
        let s = make_sayd_prop5(&ComoduleAlgebra::regular(&h)).unwrap();
        assert_eq!(s.case(), Case::Rr);
        assert!(check_ayd(&s).passed, "{name}");
        assert!(check_stability(&s).passed, "{name}");
        // p·h = S⁻¹(h1) p h2 on P = H
        for a in 0..h.dim() {
            for p in 0..h.dim() {
                let mut expect = SparseVec::zero();
                for (x, y, c) in h.coproduct(a) {
                    let v = h.mul(&h.mul(h.antipode_inv(*x), &SparseVec::basis(p)), &SparseVec::basis(*y));
                    expect.add_scaled(&v, c);
                }
                assert_eq!(s.action.act(a, p), &expect, "{name}");
            }
        }
    }
}

#[test]
fn prop5_on_commutative_function_algebra_has_trivial_action() {
    let h = function_algebra::<Q>(&Group::cyclic(2));
    let s = make_sayd_prop5(&ComoduleAlgebra::regular(&h)).unwrap();
    assert_eq!(s.action, ActionStructure::trivial(Side::Right, h.counit_vec(), 2));
}

#[test]
fn standard_mu_module_is_yd() {
    for (name, h) in builtins_f7() {
        let g = GaloisData::new(ComoduleAlgebra::regular(&h)).unwrap();
        let m = mu_module(&g).unwrap();
        let r = check_yd(&m);
        assert!(r.passed, "{name}: {} at {:?}", r.axiom, r.witness);
        // on P = H with B = k this is exactly the adjoint module
        assert_eq!(m, adjoint_yd_module(&h, Case::Rr), "{name}");
    }
}

/// `kS3` graded by the sign over `kC2`: Galois with `B = kA3`, which is not central.
fn sign_graded_s3() -> ComoduleAlgebra<Q> {
    let grp = Group::symmetric3();
    let p = group_algebra::<Q>(&grp);
    let h = group_algebra::<Q>(&Group::cyclic(2));
    let odd = |x: usize| usize::from([1, 2, 5].contains(&x));
    let terms = (0..6).map(|x| vec![(odd(x), x, Q::one())]).collect();
    let co = CoactionStructure::from_terms(Side::Right, 2, 6, terms);
    ComoduleAlgebra::new(p.algebra().clone(), h, co).unwrap()
}

#[test]
fn sign_graded_s3_is_galois_with_noncentral_coinvariants() {
    let p = sign_graded_s3();
    let g = GaloisData::new(p.clone()).unwrap();
    assert_eq!(g.b_basis.len(), 3);
    assert!(g.is_galois());
    assert!(!g.b_is_central());
    let err = mu_action(&g, true).unwrap_err();
    assert!(err.to_string().contains("not central"), "{err}");
    assert!(make_sayd_prop5(&p).is_err());
    // Z_B(P): fixed by conjugation with the 3-cycles, so 1, r, r², and the sum of reflections
    let (basis, _) = mu_action(&g, false).unwrap();
    assert_eq!(basis.len(), 4);
    let m = mu_module(&g).unwrap();
    assert!(check_yd(&m).passed);
}
