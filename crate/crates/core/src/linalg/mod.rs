//! Dense exact linear algebra over arbitrary-precision rationals.

mod matrix;
mod poly;

pub use matrix::{is_unit_fraction, parse_rational, ExactMatrix, CHARPOLY_MAX_ORDER};
pub use poly::Polynomial;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

