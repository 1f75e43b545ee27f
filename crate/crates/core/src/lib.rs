//! Specht polynomials and symmetric ideals.
//!
//! - [`combinatorics`]: partitions, dominance, tableaux, `μ(m)`.
//! - [`polyring`]: exact sparse polynomials over ℚ and `𝔽_p`.
//! - [`specht`]: Specht ideal generators, variety membership and ideal
//!   membership certificates with an exact verifier.
//! - [`reduction`]: solving symmetric systems through few-variable restricted
//!   systems, with a brute-force oracle.
//! - [`isotypic`]: killed and surviving isotypic labels and block sizes.

pub mod combinatorics;
pub mod error;
pub mod isotypic;
pub mod polyring;
pub mod reduction;
pub mod specht;

pub use error::{Error, Result};
