use std::collections::BTreeMap;

use hayd_cli::doc::{parse_document, Document, Entry, Kind, Scalar};
use hayd_core::tensor::unflatten;
use hayd_core::{Case, FieldSpec, Side, Q};
use num_bigint::BigInt;
use proptest::prelude::*;

fn scalar(field: FieldSpec) -> BoxedStrategy<Scalar> {
    match field {
        FieldSpec::PrimeField(p) => (1..p).prop_map(Scalar::Residue).boxed(),
        FieldSpec::Rationals => (-40i64..40, 1i64..12)
            .prop_filter("nonzero", |(a, _)| *a != 0)
            .prop_map(|(a, b)| Scalar::Rational(Q::new(BigInt::from(a), BigInt::from(b))))
            .boxed(),
    }
}

fn skeleton() -> impl Strategy<Value = Document> {
    let kinds = prop::sample::select(Kind::ALL.to_vec());
    let fields = prop::sample::select(vec![FieldSpec::PrimeField(7), FieldSpec::PrimeField(2), FieldSpec::Rationals]);
    (kinds, fields, 1usize..4, 1usize..4, prop::sample::select(Case::ALL.to_vec()), any::<bool>(), any::<bool>()).prop_map(
        |(kind, field, dim, other, case, left, named)| {
            let mut d = Document {
                kind,
                field,
                dim,
                hopf_dim: None,
                algebra_dim: None,
                case: None,
                side: None,
                basis_names: None,
                tensors: BTreeMap::new(),
            };
            let side = if left { Side::Left } else { Side::Right };
            match kind {
                Kind::Hopf | Kind::Algebra => {}
                Kind::TwoSided => {
                    d.hopf_dim = Some(other);
                    d.case = Some(case);
                }
                Kind::Action => {
                    d.algebra_dim = Some(other);
                    d.side = Some(side);
                }
                Kind::Coaction => {
                    d.hopf_dim = Some(other);
                    d.side = Some(side);
                }
                Kind::ComoduleAlgebra => d.hopf_dim = Some(other),
            }
            if named {
                d.basis_names = Some((0..dim).map(|i| format!("b{i}")).collect());
            }
            d
        },
    )
}

fn document() -> impl Strategy<Value = Document> {
    skeleton().prop_flat_map(|d| {
        let tensors: Vec<_> = d
            .expected_tensors()
            .into_iter()
            .map(|(name, shape)| {
                let size: usize = shape.iter().product();
                prop::collection::btree_map(0..size, scalar(d.field), 0..6).prop_map(move |m| {
                    let entries: Vec<Entry> =
                        m.into_iter().map(|(flat, c)| Entry { index: unflatten(&shape, flat), c }).collect();
                    (name.to_string(), entries)
                })
            })
            .collect();
        (Just(d), tensors).prop_map(|(mut d, ts)| {
            d.tensors = ts.into_iter().collect();
            d
        })
    })
}

proptest! {
    #[test]
    fn serialize_then_parse_is_identity(d in document()) {
        let compact = parse_document(&d.to_json().to_string(), 64).unwrap();
        prop_assert_eq!(&compact, &d);
        let pretty = parse_document(&d.to_pretty(), 64).unwrap();
        prop_assert_eq!(&pretty, &d);
        prop_assert_eq!(pretty.to_pretty(), d.to_pretty());
    }
}
