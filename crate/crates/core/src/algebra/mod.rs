//! Exact arithmetic foundation: rationals, monomials, monomial orders and
//! sparse multivariate polynomials.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::{AffinePoint, Polynomial};
pub use ring::Ring;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

pub(crate) use parse::PolyParser;

/// Shorthand for an integer-valued [`Rational`].
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
