//! Exact coefficients, monomials and orders, polynomials, and structured
//! polynomial matrices.

pub mod field;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod ring;

pub use field::{Field, GroundField, PrimeField, Rationals, DEFAULT_PRIME};
pub use matrix::{build_matrix, combinations, MatrixKind, PolyMatrix};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use ring::PolyRing;
