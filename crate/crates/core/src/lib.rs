//! Exact and numeric falling/rising factorial transforms.

pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod numeric;
pub mod polynomial;
pub mod scalar;
pub mod series;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use polynomial::{Basis, BasisPolynomial, OperatorExpr};
pub use scalar::Rational;
