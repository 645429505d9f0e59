use super::*;
use crate::entwining::{check_entwined_module, entwining_map, EntwiningKind};
use crate::field::{Fp, Q};
use crate::hopf::{function_algebra, sweedler, taft};
use num_traits::One;

type F5 = Fp<5>;
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

fn variant_between(from: Case, to: Case) -> Option<Variant> {
    match (from.action_side() != to.action_side(), from.coaction_side() != to.coaction_side()) {
        (false, false) => None,
        (true, false) => Some(Variant::Op),
        (false, true) => Some(Variant::Cop),
        (true, true) => Some(Variant::OpCop),
    }
}

/// Re-homes a structure built over a variant of `h` onto `h` itself.
fn rehome<F: Field>(mut s: TwoSidedStructure<F>, h: &FinHopfAlgebra<F>) -> TwoSidedStructure<F> {
    assert!(s.hopf.structure_eq(h));
    s.hopf = h.clone();
    s
}

/// All one-dimensional structures `^σk_δ`, moved into the requested case.
fn one_dims<F: Field>(h: &FinHopfAlgebra<F>, case: Case) -> Vec<TwoSidedStructure<F>> {
    let k = match variant_between(Case::Rl, case) {
        Some(v) => h.variant(v),
        None => h.clone(),
    };
    let chars = k.find_characters().unwrap();
    let gls = k.find_group_likes().unwrap();
    let mut out = Vec::new();
    for d in &chars {
        for s in &gls {
            out.push(rehome(one_dim_module(&k, d, s).unwrap().mirror(case), h));
        }
    }
    out
}

/// Every structure we can cheaply produce in `case`, valid or not.
fn pool<F: Field>(h: &FinHopfAlgebra<F>, case: Case) -> Vec<TwoSidedStructure<F>> {
    let mut out = vec![trivial_module(h, case), adjoint_yd_module(h, case)];
    let ones = one_dims(h, case);
    for m in &ones {
        if check_ayd(m).passed {
            let yd = adjoint_yd_module(h, case);
            out.push(tensor_product(&yd, m, case).unwrap());
        }
    }
    out.extend(ones);
    out
}

#[test]
fn trivial_module_is_yd_and_stable_and_ayd_iff_s_squared_is_identity() {
    for (name, h) in builtins_f7() {
        for case in Case::ALL {
            let m = trivial_module(&h, case);
            assert!(check_yd(&m).passed, "{name} {case}");
            assert!(check_stability(&m).passed, "{name} {case}");
            assert_eq!(check_ayd(&m).passed, h.antipode_is_involutive(), "{name} {case}");
        }
    }
    // on sweedler h(1)S⁻¹(h(2)) = 2x at h = x, not ε(x) = 0
    let h = sweedler::<Q>();
    let r = check_ayd(&trivial_module(&h, Case::Ll));
    assert_eq!(r.witness, Some(vec![2, 0]));
    assert_eq!(r.rhs.unwrap().get(&[2, 0]), Q::from_i64(2));
}

fn conjugation_module<F: Field>(g: &Group) -> TwoSidedStructure<F> {
    let n = g.order();
    let grading: Vec<usize> = (0..n).collect();
    let action: Vec<Vec<(usize, F)>> = (0..n).map(|a| (0..n).map(|x| (g.conj(a, x), F::one())).collect()).collect();
    group_graded_module(g, &grading, &action).unwrap()
}

/// `h·m ∈ M_{hgh⁻¹}` for homogeneous basis vectors, checked directly.
fn conjugation_rule(g: &Group, grading: &[usize], action: &[Vec<(usize, F7)>]) -> bool {
    (0..g.order()).all(|h| (0..grading.len()).all(|x| grading[action[h][x].0] == g.conj(h, grading[x])))
}

#[test]
fn ks3_adjoint_module_is_stable_ayd() {
    let g = Group::symmetric3();
    let m = conjugation_module::<Q>(&g);
    assert_eq!(m.case(), Case::Ll);
    assert!(check_ayd(&m).passed);
    assert!(check_yd(&m).passed);
    assert!(check_stability(&m).passed);
}

#[test]
fn group_graded_modules_follow_the_conjugation_rule() {
    let g = Group::symmetric3();
    let n = g.order();
    // every grading of a 2-dim space with G acting by the sign representation
    // on one vector and trivially on the other
    let sign = |a: usize| if [1, 2, 5].contains(&a) { -F7::one() } else { F7::one() };
    for d0 in 0..n {
        for d1 in 0..n {
            let grading = [d0, d1];
            let action: Vec<Vec<(usize, F7)>> = (0..n).map(|a| vec![(0, sign(a)), (1, F7::one())]).collect();
            let m = group_graded_module(&g, &grading, &action).unwrap();
            assert_eq!(check_ayd(&m).passed, conjugation_rule(&g, &grading, &action), "grading {grading:?}");
            assert_eq!(check_ayd(&m).passed, check_yd(&m).passed);
        }
    }
}

#[test]
fn identity_graded_module_is_always_ayd_and_stable() {
    let g = Group::cyclic(3);
    let e = g.identity();
    let triv: Vec<Vec<(usize, F7)>> = (0..3).map(|_| vec![(0, F7::one()), (1, F7::one())]).collect();
    let m = group_graded_module(&g, &[e, e], &triv).unwrap();
    assert!(check_ayd(&m).passed && check_stability(&m).passed);
    // the character g ↦ 2 (2³ = 1 in F7) on the second vector; stability only
    // involves the identity acting on M_e
    let chi: Vec<Vec<(usize, F7)>> = (0..3).map(|a| vec![(0, F7::one()), (1, F7::new(2).pow(a as u64))]).collect();
    let m = group_graded_module(&g, &[e, e], &chi).unwrap();
    assert!(check_ayd(&m).passed);
    assert!(check_stability(&m).passed);
    // regrading the second vector by g makes it fail exactly there
    let m = group_graded_module(&g, &[e, 1], &chi).unwrap();
    assert!(check_ayd(&m).passed);
    let r = check_stability(&m);
    assert_eq!(r.witness, Some(vec![1]));
}

#[test]
fn grading_off_the_conjugate_fails_with_witness() {
    let g = Group::cyclic(2);
    // g swaps m0 ∈ M_e and m1 ∈ M_g
    let action: Vec<Vec<(usize, F7)>> = vec![vec![(0, F7::one()), (1, F7::one())], vec![(1, F7::one()), (0, F7::one())]];
    let m = group_graded_module(&g, &[0, 1], &action).unwrap();
    let r = check_ayd(&m);
    assert!(!r.passed);
    assert_eq!(r.witness, Some(vec![1, 0]));
    assert!(!check_yd(&m).passed);
}

#[test]
fn group_graded_rejects_non_unital_action() {
    let g = Group::cyclic(2);
    let action: Vec<Vec<(usize, F7)>> = vec![vec![(0, F7::new(2))], vec![(0, F7::one())]];
    assert!(group_graded_module(&g, &[0], &action).is_err());
}

#[test]
fn sign_twisted_grading_is_not_stable() {
    let g = Group::cyclic(2);
    let action: Vec<Vec<(usize, F7)>> = vec![vec![(0, F7::one())], vec![(0, -F7::one())]];
    let m = group_graded_module(&g, &[1], &action).unwrap();
    assert!(check_ayd(&m).passed);
    assert!(!check_stability(&m).passed);
}

#[test]
fn yd_and_ayd_agree_when_antipode_is_involutive() {
    for (name, h) in builtins_f7() {
        if !h.antipode_is_involutive() {
            continue;
        }
        for case in Case::ALL {
            for m in pool(&h, case) {
                assert_eq!(check_ayd(&m).passed, check_yd(&m).passed, "{name} {case}");
            }
        }
    }
}

#[test]
fn some_yd_module_over_sweedler_is_not_ayd() {
    let h = sweedler::<F5>();
    let mut found = Vec::new();
    for case in Case::ALL {
        for m in pool(&h, case) {
            assert!(m.dim() <= 4);
            if check_yd(&m).passed && !check_ayd(&m).passed {
                found.push((case, m.dim()));
            }
        }
    }
    assert!(!found.is_empty());
    // the adjoint module is the four-dimensional witness in every case
    for case in Case::ALL {
        let m = adjoint_yd_module(&h, case);
        assert!(check_yd(&m).passed, "{case}");
        assert!(!check_ayd(&m).passed, "{case}");
    }
}

#[test]
fn adjoint_modules_are_verified_structures() {
    for (name, h) in builtins_f7() {
        for case in Case::ALL {
            let m = adjoint_yd_module(&h, case);
            let checked = TwoSidedStructure::new(m.hopf.clone(), m.action.clone(), m.coaction.clone());
            assert!(checked.is_ok(), "{name} {case}");
            assert!(check_yd(&m).passed, "{name} {case}");
        }
    }
}

#[test]
fn mirrored_checks_agree() {
    for (name, h) in builtins_f7() {
        for case in Case::ALL {
            for m in pool(&h, case) {
                let a = check_ayd(&m).passed;
                let y = check_yd(&m).passed;
                let s = check_stability(&m).passed;
                for target in Case::ALL {
                    let mm = m.mirror(target);
                    assert_eq!(check_ayd(&mm).passed, a, "{name} {case}->{target}");
                    assert_eq!(check_yd(&mm).passed, y, "{name} {case}->{target}");
                    assert_eq!(check_stability(&mm).passed, s, "{name} {case}->{target}");
                }
            }
        }
    }
}

#[test]
fn tensor_product_with_trivial_is_identity() {
    let h = sweedler::<F5>();
    for case in Case::ALL {
        let n = trivial_module(&h, case);
        for m in pool(&h, case).into_iter().filter(|m| check_ayd(m).passed) {
            let t = tensor_product(&n, &m, case).unwrap();
            assert_eq!(t.dim(), m.dim());
            assert_eq!(t, m);
        }
    }
}

#[test]
fn tensor_product_kc2_crossed_with_adjoint() {
    let g = Group::cyclic(2);
    let n = conjugation_module::<Q>(&g);
    // crossed module: k² graded by g, g acting by -1 on both
    let action: Vec<Vec<(usize, Q)>> = vec![
        vec![(0, Q::from_i64(1)), (1, Q::from_i64(1))],
        vec![(0, Q::from_i64(-1)), (1, Q::from_i64(-1))],
    ];
    let crossed = group_graded_module(&g, &[1, 1], &action).unwrap();
    let t = tensor_product(&crossed, &n, Case::Ll).unwrap();
    assert_eq!(t.dim(), 4);
    assert!(check_ayd(&t).passed);
    assert!(TwoSidedStructure::new(t.hopf.clone(), t.action.clone(), t.coaction.clone()).is_ok());
}

#[test]
fn tensor_products_of_pools_are_ayd() {
    for (name, h) in builtins_f7() {
        if h.dim() > 6 && name != "sweedler" {
            continue;
        }
        for case in Case::ALL {
            let p = pool(&h, case);
            let yds: Vec<_> = p.iter().filter(|m| check_yd(m).passed).collect();
            let ayds: Vec<_> = p.iter().filter(|m| check_ayd(m).passed).collect();
            assert!(!yds.is_empty() && !ayds.is_empty());
            for n in &yds {
                for m in &ayds {
                    let t = tensor_product(n, m, case).unwrap();
                    assert_eq!(t.dim(), n.dim() * m.dim());
                    let r = check_ayd(&t);
                    assert!(r.passed, "{name} {case}: {} at {:?}", r.axiom, r.witness);
                }
            }
        }
    }
}

#[test]
fn tensor_product_names_failing_input() {
    let h = sweedler::<F5>();
    let adj = adjoint_yd_module(&h, Case::Ll);
    let err = tensor_product(&adj, &adj, Case::Ll).unwrap_err();
    assert!(err.to_string().contains("M fails"), "{err}");
    let triv = trivial_module(&h, Case::Lr);
    assert!(tensor_product(&triv, &adj, Case::Ll).unwrap_err().to_string().contains("N is a lr"));
}

#[test]
fn modular_pair_examples() {
    let kg = group_algebra::<F7>(&Group::symmetric3());
    let one = kg.unit().to_dense(6);
    assert!(check_modular_pair(&kg, kg.counit_vec(), &one));

    let h = sweedler::<F5>();
    let eps = h.counit_vec().to_vec();
    let unit = h.unit().to_dense(4);
    let g = SparseVec::basis(1).to_dense(4);
    assert!(check_modular_pair(&h, &eps, &g));
    assert!(!check_modular_pair(&h, &eps, &unit));

    let m = one_dim_module(&h, &eps, &g).unwrap();
    assert!(check_ayd(&m).passed && check_stability(&m).passed);
    let m = one_dim_module(&h, &eps, &unit).unwrap();
    assert!(!check_ayd(&m).passed);
}

#[test]
fn one_dim_module_rejects_non_characters() {
    let h = sweedler::<F5>();
    let bad = vec![F5::one(); 4];
    assert!(one_dim_module(&h, &bad, &h.unit().to_dense(4)).is_err());
    assert!(one_dim_module(&h, h.counit_vec(), &bad).is_err());
}

#[test]
fn modular_pairs_are_exactly_stable_ayd_one_dim_modules() {
    for (name, h) in builtins_f7() {
        let chars = h.find_characters().unwrap();
        let gls = h.find_group_likes().unwrap();
        for d in &chars {
            for s in &gls {
                let m = one_dim_module(&h, d, s).unwrap();
                let ayd = check_ayd(&m).passed && check_stability(&m).passed;
                assert_eq!(check_modular_pair(&h, d, s), ayd, "{name} δ={d:?} σ={s:?}");
                let ds = SparseVec::from_dense(s).pair(d);
                assert_eq!(check_stability(&m).passed, ds == F7::one(), "{name}");
            }
        }
    }
}

#[test]
fn one_dim_with_nontrivial_pairing_is_not_stable() {
    // on sweedler the character g ↦ -1, x ↦ 0 pairs to -1 with g
    let h = sweedler::<F5>();
    let delta = vec![F5::one(), -F5::one(), F5::new(0), F5::new(0)];
    assert!(h.is_character(&delta));
    let g = SparseVec::basis(1).to_dense(4);
    let r = check_stability(&one_dim_module(&h, &delta, &g).unwrap());
    assert!(!r.passed);
}

#[test]
fn entwining_maps_satisfy_axioms() {
    for (name, h) in builtins_f7() {
        for kind in [EntwiningKind::Yd, EntwiningKind::Ayd] {
            let e = entwining_map(&h, kind);
            let r = e.verify();
            assert!(r.passed, "{name} {kind:?}: {} at {:?}", r.axiom, r.witness);
        }
    }
}

#[test]
fn entwining_examples() {
    let g = Group::symmetric3();
    let h = group_algebra::<Q>(&g);
    for kind in [EntwiningKind::Yd, EntwiningKind::Ayd] {
        let e = entwining_map(&h, kind);
        for hp in 0..6 {
            for x in 0..6 {
                // ψ(h'⊗g) = g ⊗ g⁻¹h'g
                let expect = SparseVec::basis(x * 6 + g.mul(g.mul(g.inv(x), hp), x));
                assert_eq!(e.apply(hp, x), &expect);
            }
        }
    }
    let s = sweedler::<Q>();
    let ayd = entwining_map(&s, EntwiningKind::Ayd);
    let yd = entwining_map(&s, EntwiningKind::Yd);
    assert_ne!(ayd.to_tensor(), yd.to_tensor());
    // ψ(1⊗h) = h2 ⊗ S⁻¹(h1) h3
    for hh in 0..4 {
        let mut expect = SparseVec::zero();
        for (a, b, c, k) in s.coproduct3(hh) {
            let right = s.mul(s.antipode_inv(*a), &SparseVec::basis(*c));
            expect.add_scaled(&SparseVec::basis(*b).outer(&right, 4), k);
        }
        assert_eq!(ayd.apply(0, hh), &expect);
    }
}

#[test]
fn broken_entwining_is_rejected() {
    let h = sweedler::<Q>();
    let mut t = entwining_map(&h, EntwiningKind::Ayd).to_tensor();
    let v = t.get(&[0, 0, 0, 0]);
    t.set(&[0, 0, 0, 0], v + Q::from_i64(1)).unwrap();
    assert!(crate::entwining::EntwiningData::new(h.algebra().clone(), h.clone(), &t).is_err());
}

#[test]
fn rr_checks_match_entwined_modules() {
    for (name, h) in builtins_f7() {
        let ayd = entwining_map(&h, EntwiningKind::Ayd);
        let yd = entwining_map(&h, EntwiningKind::Yd);
        for m in pool(&h, Case::Rr) {
            let ea = check_entwined_module(&ayd, &m.action, &m.coaction).unwrap().passed;
            let ey = check_entwined_module(&yd, &m.action, &m.coaction).unwrap().passed;
            assert_eq!(check_ayd(&m).passed, ea, "{name}");
            assert_eq!(check_yd(&m).passed, ey, "{name}");
        }
    }
}

#[test]
fn rr_ayd_over_sweedler_is_not_entwined_for_yd() {
    let h = sweedler::<F5>();
    let yd = entwining_map(&h, EntwiningKind::Yd);
    let witness = pool(&h, Case::Rr)
        .into_iter()
        .find(|m| check_ayd(m).passed && !check_yd(m).passed)
        .expect("an rr aYD module that is not YD");
    assert!(!check_entwined_module(&yd, &witness.action, &witness.coaction).unwrap().passed);
}

#[test]
fn pi_stability_function_algebra_of_c2() {
    let g = Group::cyclic(2);
    let h = function_algebra::<Q>(&g);
    let co = CoactionStructure::trivial(Side::Left, &h, 2);
    let pi: Vec<_> = (0..2).map(SparseVec::basis).collect();
    let r = check_pi_stability(&h, h.algebra(), &co, &pi).unwrap();
    assert!(r.passed, "{} {:?}", r.axiom, r.witness);
}

fn transposition_model() -> (FinHopfAlgebra<Q>, FinAlgebra<Q>, CoactionStructure<Q>, Vec<SparseVec<Q>>) {
    let g = Group::symmetric3();
    let h = function_algebra::<Q>(&g);
    let xs = [1usize, 2, 5];
    let pos = |y: usize| xs.iter().position(|&x| x == y).expect("transposition");
    let mut mult = crate::tensor::Tensor::zeros(vec![3, 3, 3]);
    for i in 0..3 {
        mult.set(&[i, i, i], Q::from_i64(1)).unwrap();
    }
    let m = FinAlgebra::new(&mult, &crate::tensor::Tensor::vector(&[Q::from_i64(1), Q::from_i64(1), Q::from_i64(1)]))
        .unwrap();
    // λ(δ_y) = Σ_g δ_g ⊗ δ_{g⁻¹yg}
    let terms = (0..3)
        .map(|yi| (0..6).map(|gi| (gi, pos(g.conj(g.inv(gi), xs[yi])), Q::from_i64(1))).collect())
        .collect();
    let co = CoactionStructure::from_terms(Side::Left, 6, 3, terms);
    let pi = (0..6)
        .map(|gi| match xs.iter().position(|&x| x == gi) {
            Some(p) => SparseVec::basis(p),
            None => SparseVec::zero(),
        })
        .collect();
    (h, m, co, pi)
}

#[test]
fn pi_stability_transpositions_in_s3() {
    let (h, m, co, pi) = transposition_model();
    assert!(verify_coaction(&h, &co).unwrap().passed);
    let r = check_pi_stability(&h, &m, &co, &pi).unwrap();
    assert!(r.passed, "{} {:?}", r.axiom, r.witness);
}

#[test]
fn pi_stability_reports_non_surjective() {
    let g = Group::cyclic(2);
    let h = function_algebra::<Q>(&g);
    let co = CoactionStructure::trivial(Side::Left, &h, 2);
    // δ_e ↦ 1, δ_g ↦ 0 is an algebra map onto the scalars only
    let pi = vec![h.unit().clone(), SparseVec::zero()];
    let r = check_pi_stability(&h, h.algebra(), &co, &pi).unwrap();
    assert!(!r.passed);
    assert_eq!(r.axiom, "π surjective");
}

#[test]
fn pi_stability_reports_non_multiplicative() {
    let (h, m, co, mut pi) = transposition_model();
    // δ_e and δ_(12) both sent to the same idempotent
    pi[0] = pi[1].clone();
    let r = check_pi_stability(&h, &m, &co, &pi).unwrap();
    assert!(!r.passed);
    assert_eq!(r.axiom, "π multiplicative");
}

#[test]
fn case_parsing_round_trips() {
    for c in Case::ALL {
        assert_eq!(c.to_string().parse::<Case>().unwrap(), c);
        assert_eq!(Case::from_sides(c.action_side(), c.coaction_side()), c);
    }
    assert!("lx".parse::<Case>().is_err());
}
