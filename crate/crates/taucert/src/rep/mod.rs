//! Group-presentation words, Fox calculus, and the Riley representation of
//! twist knots, producing Riley polynomials, longitude eigenvalues, and the
//! exterior torsion ratio as exact polynomials in `s^{±1}` and `t`.

pub mod fox;
pub mod riley;
pub mod word;

pub use fox::{fox_derivative, fox_eval};
pub use riley::{
    complement_torsion, longitude_eigenvalue, mat2, mat2_add, mat2_adjugate, mat2_det,
    mat2_identity, mat2_mul, mat2_scale, mat2_sub, mat2_zero, riley_polynomial, riley_rep,
    word_eval, Presentation, Rep2x2, TwistKnotFamily,
};
pub use word::{parse_word, Gen, Word};
