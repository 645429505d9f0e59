//! Exact scalar fields: the rationals and prime fields `F_p`.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::FieldError;

/// Which ground field a structure lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Validates a prime-field characteristic.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(*p),
        }
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field. Every value is kept in normal form, so `==` is field equality.
pub trait Field:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn spec() -> FieldSpec;

    /// Multiplicative inverse; errors on zero.
    fn inv(&self) -> Result<Self, FieldError>;

    fn from_i64(v: i64) -> Self;

    /// Image of an integer fraction; errors if the denominator vanishes in this field.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Result<Self, FieldError>;

    /// Parses `"a"` or `"a/b"`.
    fn parse(s: &str) -> Result<Self, FieldError> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| FieldError::Parse(s.to_string()))?;
        let den = BigInt::from_str(den).map_err(|_| FieldError::Parse(s.to_string()))?;
        Self::from_ratio(&num, &den)
    }

    /// All elements in a fixed order, for finite fields.
    fn elements() -> Option<Vec<Self>>;

    fn div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self.clone() * other.inv()?)
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            base = base.clone() * &base;
            e >>= 1;
        }
        acc
    }
}

/// Rationals with arbitrary-precision numerator and denominator.
pub type Q = BigRational;

impl Field for BigRational {
    fn spec() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn elements() -> Option<Vec<Self>> {
        None
    }
}

/// The prime field `Z/PZ`. Values are residues in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const CHECK: () = assert!(P >= 2 && P < (1 << 31), "modulus out of range");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp(v % P)
    }

    pub fn from_signed(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<'a, const P: u64> Add<&'a Fp<P>> for Fp<P> {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        self + *rhs
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<'a, const P: u64> Mul<&'a Fp<P>> for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        self * *rhs
    }
}

impl<const P: u64> Field for Fp<P> {
    fn spec() -> FieldSpec {
        FieldSpec::PrimeField(P)
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if self.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        // Fermat; P is assumed prime (checked where the modulus enters from input).
        Ok(Field::pow(self, P - 2))
    }

    fn from_i64(v: i64) -> Self {
        Fp::from_signed(v)
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Result<Self, FieldError> {
        let p = BigInt::from(P);
        let reduce = |x: &BigInt| -> Fp<P> {
            let mut r = x % &p;
            if r.is_negative() {
                r += &p;
            }
            Fp(r.to_u64().expect("residue fits in u64"))
        };
        let d = reduce(den);
        if d.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(reduce(num) * d.inv()?)
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Fp).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn inverses() {
        assert_eq!(Q::from_i64(2).inv().unwrap(), Q::new(1.into(), 2.into()));
        assert_eq!(F7::new(2).inv().unwrap(), F7::new(4));
        assert_eq!(Q::zero().inv(), Err(FieldError::DivisionByZero));
        assert_eq!(F7::zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn normal_forms() {
        let q = Q::parse("6/-4").unwrap();
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(F7::from_i64(-1).value(), 6);
        assert_eq!(F7::parse("1/2").unwrap(), F7::new(4));
        assert!(F7::parse("1/7").is_err());
        assert!(Q::parse("x").is_err());
    }

    #[test]
    fn primality() {
        assert!(FieldSpec::prime(7).is_ok());
        assert_eq!(FieldSpec::prime(6), Err(FieldError::NotPrime(6)));
        assert!(!is_prime(1));
    }

    #[test]
    fn enumerates_finite_fields() {
        assert_eq!(F7::elements().unwrap().len(), 7);
        assert!(Q::elements().is_none());
    }
}
