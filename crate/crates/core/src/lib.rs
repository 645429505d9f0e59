//! Exact structure-constant computations for finite-dimensional Hopf algebras:
//! axiom verification, (anti-)Yetter-Drinfeld modules and stability,
//! entwinings, Hopf-Galois extensions with Miyashita-Ulbrich actions, and the
//! algebra `A(H)` alongside the Drinfeld double `D(H)`.
//!
//! Everything is generic over an exact [`Field`]; the aliases below fix the
//! scalar type for the common cases.

pub mod algebra;
pub mod ayd;
pub mod double;
pub mod entwining;
pub mod error;
pub mod field;
pub mod galois;
pub mod hopf;
pub mod matrix;
pub mod rep;
pub mod report;
pub mod sparse;
pub mod tensor;

pub use algebra::FinAlgebra;
pub use ayd::{Case, TwoSidedStructure};
pub use entwining::{EntwiningData, EntwiningKind};
pub use error::{Error, FieldError, Result};
pub use field::{Field, FieldSpec, Fp, Q};
pub use galois::{ComoduleAlgebra, GaloisData};
pub use hopf::{FinHopfAlgebra, HopfStructure, Variant};
pub use matrix::{invert_matrix, Matrix};
pub use rep::{ActionStructure, CoactionStructure, Side};
pub use report::Report;
pub use sparse::SparseVec;
pub use tensor::Tensor;

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;

pub type HopfQ = FinHopfAlgebra<Q>;
pub type HopfF5 = FinHopfAlgebra<F5>;
pub type HopfF7 = FinHopfAlgebra<F7>;
