//! Exact arithmetic layer: big integers, rationals, multivariate Laurent
//! polynomials, dense univariate polynomials, and squarefree decomposition.

pub mod gcd;
pub mod multipoly;
pub mod parse;
pub(crate) mod ratpoly;
pub mod squarefree;
pub mod unipoly;

pub use gcd::gcd_in_var;
pub use multipoly::{Mono, MultiPoly};
pub use parse::{parse_multipoly, parse_unipoly};
pub use squarefree::{squarefree_decompose, squarefree_part};
pub use unipoly::{gcd_univariate, lagrange_interpolate, UniPoly};
