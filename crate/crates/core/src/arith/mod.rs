//! Coefficient arithmetic: integer polynomials and multivariate Laurent
//! polynomials over Z and Z/kZ.

mod laurent;
mod poly;

pub use laurent::LaurentPolynomial;
pub use poly::{poly_gcd, IntPolynomial};
