//! Named example Hopf algebras. A name may carry a field suffix, `@q` or
//! `@f<p>`; the default field is `F7`.

use std::fmt;

use hayd_core::hopf::{function_algebra, group_algebra, taft, Group};
use hayd_core::{Error, Field, FieldSpec, FinHopfAlgebra, Result};

use crate::fields::SUPPORTED_PRIMES;

pub const DEFAULT_FIELD: FieldSpec = FieldSpec::PrimeField(7);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    GroupAlgebraC2,
    GroupAlgebraC3,
    GroupAlgebraS3,
    FunctionAlgebraC2,
    FunctionAlgebraS3,
    Sweedler,
    Taft3,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::GroupAlgebraC2,
        Family::GroupAlgebraC3,
        Family::GroupAlgebraS3,
        Family::FunctionAlgebraC2,
        Family::FunctionAlgebraS3,
        Family::Sweedler,
        Family::Taft3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::GroupAlgebraC2 => "group_algebra_c2",
            Family::GroupAlgebraC3 => "group_algebra_c3",
            Family::GroupAlgebraS3 => "group_algebra_s3",
            Family::FunctionAlgebraC2 => "function_algebra_c2",
            Family::FunctionAlgebraS3 => "function_algebra_s3",
            Family::Sweedler => "sweedler",
            Family::Taft3 => "taft3",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Family::GroupAlgebraC2 | Family::FunctionAlgebraC2 => 2,
            Family::GroupAlgebraC3 => 3,
            Family::GroupAlgebraS3 | Family::FunctionAlgebraS3 => 6,
            Family::Sweedler => 4,
            Family::Taft3 => 9,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Family::GroupAlgebraC2 => "group algebra of the cyclic group of order 2",
            Family::GroupAlgebraC3 => "group algebra of the cyclic group of order 3",
            Family::GroupAlgebraS3 => "group algebra of the symmetric group S3",
            Family::FunctionAlgebraC2 => "functions on the cyclic group of order 2",
            Family::FunctionAlgebraS3 => "functions on S3",
            Family::Sweedler => "Sweedler's 4-dimensional algebra, S^2 != id",
            Family::Taft3 => "Taft algebra of order 3 (needs a primitive cube root of unity)",
        }
    }

    pub fn build<F: Field>(self) -> Result<FinHopfAlgebra<F>> {
        Ok(match self {
            Family::GroupAlgebraC2 => group_algebra(&Group::cyclic(2)),
            Family::GroupAlgebraC3 => group_algebra(&Group::cyclic(3)),
            Family::GroupAlgebraS3 => group_algebra(&Group::symmetric3()),
            Family::FunctionAlgebraC2 => function_algebra(&Group::cyclic(2)),
            Family::FunctionAlgebraS3 => function_algebra(&Group::symmetric3()),
            Family::Sweedler => {
                if F::spec() == FieldSpec::PrimeField(2) {
                    return Err(Error::Invalid("sweedler needs characteristic other than 2".into()));
                }
                taft(2, -F::one())?
            }
            Family::Taft3 => {
                let zeta = cube_root::<F>()
                    .ok_or_else(|| Error::Invalid(format!("{} has no primitive cube root of unity", F::spec())))?;
                taft(3, zeta)?
            }
        })
    }
}

/// Smallest primitive cube root of unity in a finite field.
fn cube_root<F: Field>() -> Option<F> {
    F::elements()?.into_iter().find(|z| *z != F::one() && z.pow(3) == F::one())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Builtin {
    pub family: Family,
    pub field: FieldSpec,
}

impl Builtin {
    pub fn all() -> Vec<Builtin> {
        Family::ALL.into_iter().map(|family| Builtin { family, field: DEFAULT_FIELD }).collect()
    }

    pub fn parse(s: &str) -> Option<Builtin> {
        let (name, field) = match s.split_once('@') {
            Some((n, f)) => (n, parse_suffix(f)?),
            None => (s, DEFAULT_FIELD),
        };
        let family = Family::ALL.into_iter().find(|f| f.name() == name)?;
        Some(Builtin { family, field })
    }
}

fn parse_suffix(s: &str) -> Option<FieldSpec> {
    let s = s.to_ascii_lowercase();
    if s == "q" {
        return Some(FieldSpec::Rationals);
    }
    let p: u64 = s.strip_prefix('f')?.parse().ok()?;
    SUPPORTED_PRIMES.contains(&p).then_some(FieldSpec::PrimeField(p))
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.name())?;
        match self.field {
            x if x == DEFAULT_FIELD => Ok(()),
            FieldSpec::Rationals => write!(f, "@q"),
            FieldSpec::PrimeField(p) => write!(f, "@f{p}"),
        }
    }
}
