//! Coefficient fields, monomials, polynomials and polynomial matrices.

pub mod field;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod univariate;

pub use field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use matrix::{determinant, DenseMatrix, PolyMatrix};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::{parse_poly, Y_NAMES, ZY_NAMES, Z_NAMES};
pub use poly::{exact_divide, partial_derivative, poly_mul, Polynomial, Ring};

#[cfg(test)]
mod tests;
