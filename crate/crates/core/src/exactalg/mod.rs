//! Exact integer substrate: big-integer matrices, Smith normal form,
//! polynomials, resultants, and surgery-coefficient rationals.

mod matrix;
mod poly;
mod rational;
mod resultant;
mod snf;

pub use matrix::BigIntMatrix;
pub use poly::{cyclotomic_quotient, IntPoly, LaurentPoly};
pub use rational::Rational;
pub use resultant::{circulant_of_poly, multiplication_matrix, resultant, sylvester_matrix};
pub use snf::{smith_normal_form, AbelianGroup, SnfResult};
