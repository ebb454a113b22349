//! Exact symmetric-matrix calculus over the integers and rationals.

mod bounds;
mod inertia;
mod matrix;
mod rational;
mod spectrum;

pub use bounds::*;
pub use inertia::Inertia;
pub use matrix::IntSymMatrix;
pub use rational::{nullspace, rank, rref, to_rational_rows};
pub use spectrum::*;

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Exact rational from an integer ratio.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
