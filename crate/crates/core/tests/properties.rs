use hayd_core::hopf::{function_algebra, group_algebra, sweedler, taft, verify_hopf_axioms, Group};
use hayd_core::{invert_matrix, Field, FinHopfAlgebra, Matrix, SparseVec, Tensor, Variant, F5, F7, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn f7() -> impl Strategy<Value = F7> {
    (0u64..7).prop_map(F7::new)
}

fn f5() -> impl Strategy<Value = F5> {
    (0u64..5).prop_map(F5::new)
}

fn q() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Q::from_ratio(&BigInt::from(n), &BigInt::from(d)).unwrap())
}

fn tensor_f5(shape: Vec<usize>) -> impl Strategy<Value = Tensor<F5>> {
    let len: usize = shape.iter().product();
    prop::collection::vec(f5(), len).prop_map(move |vals| {
        let mut t = Tensor::zeros(shape.clone());
        for (flat, c) in vals.into_iter().enumerate() {
            let idx = hayd_core::tensor::unflatten(&shape, flat);
            t.set(&idx, c).unwrap();
        }
        t
    })
}

fn square_f5(n: usize) -> impl Strategy<Value = Matrix<F5>> {
    prop::collection::vec(prop::collection::vec(f5(), n), n).prop_map(|rows| Matrix::from_rows(&rows).unwrap())
}

fn field_laws<F: Field>(a: F, b: F, c: F) {
    assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
    assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
    assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
    assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
    assert_eq!(a.clone() + F::zero(), a);
    assert_eq!(a.clone() * F::one(), a);
    assert!((a.clone() - a.clone()).is_zero());
    match a.inv() {
        Ok(i) => assert_eq!(i * a, F::one()),
        Err(_) => assert!(a.is_zero()),
    }
}

proptest! {
    #[test]
    fn prime_field_axioms(a in f7(), b in f7(), c in f7()) {
        field_laws(a, b, c);
    }

    #[test]
    fn rational_field_axioms(a in q(), b in q(), c in q()) {
        field_laws(a, b, c);
    }

    #[test]
    fn rationals_stay_normalized(a in q(), b in q()) {
        for x in [a.clone() + b.clone(), a.clone() * b.clone(), a.clone() - b.clone()] {
            prop_assert!(x.denom().is_positive());
            prop_assert!(num_integer::Integer::gcd(x.numer(), x.denom()).is_one());
        }
    }

    #[test]
    fn prime_field_values_are_reduced(a in any::<i64>()) {
        prop_assert!(F7::from_i64(a).value() < 7);
    }

    #[test]
    fn inverse_of_inverse(m in square_f5(4)) {
        let t = m.to_tensor();
        match invert_matrix(&t) {
            Ok(inv) => {
                prop_assert_eq!(invert_matrix(&inv).unwrap(), t.clone());
                let prod = Matrix::from_tensor(&inv).unwrap().mul(&m).unwrap();
                prop_assert_eq!(prod, Matrix::identity(4));
            }
            Err(_) => prop_assert!(m.rank() < 4),
        }
    }

    #[test]
    fn contraction_is_bilinear(
        x in tensor_f5(vec![2, 3]),
        y in tensor_f5(vec![2, 3]),
        z in tensor_f5(vec![3, 2, 2]),
        a in f5(),
        b in f5(),
    ) {
        let lhs = x.scale(&a).plus(&y.scale(&b)).unwrap().contract(&z, &[(1, 0)]).unwrap();
        let rhs = x.contract(&z, &[(1, 0)]).unwrap().scale(&a)
            .plus(&y.contract(&z, &[(1, 0)]).unwrap().scale(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = z.contract(&x.scale(&a).plus(&y.scale(&b)).unwrap(), &[(1, 0)]).unwrap();
        let rhs = z.contract(&x, &[(1, 0)]).unwrap().scale(&a)
            .plus(&z.contract(&y, &[(1, 0)]).unwrap().scale(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_is_associative(
        x in tensor_f5(vec![2, 3]),
        y in tensor_f5(vec![3, 2, 4]),
        z in tensor_f5(vec![4, 2]),
    ) {
        // x_{ab} y_{bcd} z_{de}
        let left = x.contract(&y, &[(1, 0)]).unwrap().contract(&z, &[(2, 0)]).unwrap();
        let right = x.contract(&y.contract(&z, &[(2, 0)]).unwrap(), &[(1, 0)]).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn change_of_basis_keeps_sweedler_a_hopf_algebra(m in square_f5(4)) {
        prop_assume!(m.rank() == 4);
        let h: FinHopfAlgebra<F5> = sweedler();
        let k = h.change_basis(&m).unwrap();
        prop_assert!(verify_hopf_axioms(&k.structure()).unwrap().passed);
        prop_assert_eq!(k.antipode_is_involutive(), false);
    }
}

fn builtins() -> Vec<FinHopfAlgebra<F7>> {
    vec![
        group_algebra(&Group::cyclic(2)),
        group_algebra(&Group::cyclic(3)),
        group_algebra(&Group::symmetric3()),
        function_algebra(&Group::cyclic(2)),
        function_algebra(&Group::symmetric3()),
        sweedler(),
        taft(3, F7::new(2)).unwrap(),
    ]
}

#[test]
fn antipode_is_an_antialgebra_map() {
    for h in builtins() {
        let n = h.dim();
        for g in 0..n {
            for k in 0..n {
                let gk = h.apply_antipode(h.mul_basis(g, k));
                assert_eq!(gk, h.mul(h.antipode(k), h.antipode(g)));
            }
        }
    }
}

#[test]
fn antipode_inverse_both_orders() {
    for h in builtins() {
        for i in 0..h.dim() {
            assert_eq!(h.apply_antipode(h.antipode_inv(i)), SparseVec::basis(i));
            assert_eq!(h.apply_antipode_inv(h.antipode(i)), SparseVec::basis(i));
        }
    }
}

#[test]
fn dual_of_op_is_cop_of_dual() {
    for h in builtins() {
        assert!(h.variant(Variant::Op).dual().structure_eq(&h.dual().variant(Variant::Cop)));
    }
}

#[test]
fn antipode_axiom_entrywise() {
    for h in builtins() {
        for i in 0..h.dim() {
            let mut v = SparseVec::zero();
            for (a, b, c) in h.coproduct(i) {
                v.add_scaled(&h.mul(h.antipode(*a), &SparseVec::basis(*b)), c);
            }
            assert_eq!(v, h.unit().scaled(h.counit(i)));
        }
    }
}

#[test]
fn rational_scalars_reject_zero_denominator() {
    assert!(Q::from_ratio(&BigInt::from(1), &BigInt::zero()).is_err());
}
