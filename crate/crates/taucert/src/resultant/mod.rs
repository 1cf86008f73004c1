//! Resultants and fraction-free linear algebra over polynomial rings.
//!
//! The orientation is fixed once: `res(f, g) = lc(f)^deg(g) * prod g(a)`
//! over the roots `a` of `f` in the elimination variable.  Everything
//! downstream (A-polynomials, torsion annihilators, slope eliminants)
//! assumes this convention.

pub mod divisibility;
pub mod matrix;
pub mod transforms;

pub use divisibility::{check_derivative_divisibility, DivisibilityCertificate};
pub use matrix::{
    determinant, determinant_int, resultant, resultant_by_interpolation, sylvester_matrix,
    PolyMatrix,
};
pub use transforms::{alg_combine, poly_of_squares, shift_invert, CombineMode};
