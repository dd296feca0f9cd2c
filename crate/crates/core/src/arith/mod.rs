//! Exact scalars: rationals and real algebraic fields `Q(α)`.
//!
//! Every coordinate in the crate is a [`FieldElement`]. All elements of one
//! computation live in a single [`RealAlgebraicField`], which carries a monic
//! squarefree polynomial and an isolating interval for its distinguished real
//! root. Signs are decided exactly: zero from the power-basis coefficients,
//! everything else by bisecting the isolating interval until an interval
//! enclosure of the element excludes zero.

mod element;
mod field;
pub mod poly;

use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

pub use element::FieldElement;
pub use field::RealAlgebraicField;
pub use poly::Poly;

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("minimal polynomial is not squarefree")]
    NotSquarefree,
    #[error("no root of the minimal polynomial in the interval")]
    NoRootInInterval,
    #[error("more than one root of the minimal polynomial in the interval")]
    MultipleRootsInInterval,
    #[error("invalid minimal polynomial: {0}")]
    InvalidMinpoly(String),
    #[error("interval endpoints must satisfy lo < hi")]
    InvalidInterval,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("element is not invertible; the minimal polynomial is reducible")]
    NotInvertible,
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
}

/// Parses `"p/q"` or an integer literal.
pub fn parse_rational(text: &str) -> Result<Rational, ArithError> {
    let t = text.trim();
    Rational::from_str(t).map_err(|_| ArithError::BadRational(text.to_string()))
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Sum of a sequence of field elements, `zero` when empty.
pub fn sum<'a>(zero: &FieldElement, items: impl IntoIterator<Item = &'a FieldElement>) -> FieldElement {
    items.into_iter().fold(zero.clone(), |acc, x| &acc + x)
}
