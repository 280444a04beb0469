//! Exact scalar arithmetic: rationals, prime fields, cyclotomic fields, and the
//! linear algebra and polynomial tools built on them.

use thiserror::Error;

pub mod algebra;
pub mod cyclotomic;
pub mod factor;
mod field;
pub(crate) mod gf;
mod matrix;
mod poly;

pub use field::{is_prime, FieldElem, FieldTag};
pub use matrix::ExactMatrix;
pub use poly::Poly;
pub use algebra::{split_commutative_algebra, AlgebraByStructureConstants, AlgebraError, Block};

pub(crate) use field::{addmod, invmod, mulmod};
pub(crate) use matrix::SparseEchelon;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cyclotomic index must be at least 1, got {0}")]
    BadCyclotomicIndex(u32),
    #[error("denominator vanishes modulo {0}")]
    DenominatorVanishes(u64),
    #[error("unrecognized field code {0:?}")]
    BadFieldCode(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldTag, found: FieldTag },
}
