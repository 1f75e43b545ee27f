//! Exact sparse multivariate polynomials over ℚ and prime fields, the
//! action of the symmetric group, and Vandermonde/Specht constructors.

mod field;
mod monomial;
mod parse;
mod permutation;
mod polynomial;
mod vandermonde;

pub use field::{FieldSpec, Scalar};
pub use monomial::Monomial;
pub use parse::{parse_monomial, parse_polynomial};
pub use permutation::Permutation;
pub use polynomial::Polynomial;
pub use vandermonde::{specht_polynomial, vandermonde};

pub(crate) use vandermonde::sort_with_sign;
