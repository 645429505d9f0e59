//! Runtime field selection. Generic code is instantiated for the rationals
//! and a fixed list of primes.

pub const SUPPORTED_PRIMES: [u64; 11] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

/// Runs `$body` with the type alias `$f` bound to the scalar type of
/// `$spec`. Unsupported primes evaluate to `$unsupported(p)`.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $f:ident => $body:expr, $unsupported:expr) => {
        match $spec {
            hayd_core::FieldSpec::Rationals => {
                type $f = hayd_core::Q;
                $body
            }
            hayd_core::FieldSpec::PrimeField(2) => {
                type $f = hayd_core::Fp<2>;
                $body
            }
            hayd_core::FieldSpec::PrimeField(3) => {
                type $f = hayd_core::Fp<3>;
                $body
            }
            hayd_core::FieldSpec::PrimeField(5) => {
                type $f = hayd_core::Fp<5>;
                $body
            }
            hayd_core::FieldSpec::PrimeField(7) => {
                type $f = hayd_core::Fp<7>;
                $body
            }
            hayd_core::FieldSpec::PrimeField(11) => {
                type $f = hayd_core::Fp<11>;
                $body
            }
            hayd_core::FieldSpec::PrimeField(13) => {
                type $f = hayd_core::Fp<13>;
                $body
            }
            hayd_core::FieldSpec::PrimeField(17) => {
                type $f = hayd_core::Fp<17>;
                $body
            }
            hayd_core::FieldSpec::PrimeField(19) => {
                type $f = hayd_core::Fp<19>;
                $body
            }
            hayd_core::FieldSpec::PrimeField(23) => {
                type $f = hayd_core::Fp<23>;
                $body
            }
            hayd_core::FieldSpec::PrimeField(29) => {
                type $f = hayd_core::Fp<29>;
                $body
            }
            hayd_core::FieldSpec::PrimeField(31) => {
                type $f = hayd_core::Fp<31>;
                $body
            }
            hayd_core::FieldSpec::PrimeField(p) => $unsupported(p),
        }
    };
}
