//! Exact symbolic-numeric toolkit for certifying that Reidemeister torsions
//! of surgeries on twist knots and of Seifert fibered spaces are algebraic
//! integers.
//!
//! The pipeline computes Riley polynomials and A-polynomials of the twist
//! knot family J(2,2m) by exact elimination, solves the Dehn surgery
//! character equations numerically at arbitrary precision, builds monic
//! integer annihilator polynomials for the torsion values by iterated
//! resultants, and emits machine-checkable certificates.  A parallel track
//! handles Seifert fibered spaces through Chebyshev polynomial identities.
//!
//! Layering, bottom to top:
//!
//! * [`exact`] - arbitrary-precision integers, rationals, Laurent
//!   polynomials, squarefree decomposition.
//! * [`resultant`] - Sylvester matrices, fraction-free determinants,
//!   derivative-divisibility certificates, algebraic-number transforms.
//! * [`numeric`] - high-precision complex root finding (Aberth-Ehrlich).
//! * [`rep`] - group words, Fox calculus, the Riley representation, and
//!   the two-bridge complement torsion formula.
//! * [`apoly`] - A-polynomials by elimination and by the Hoste-Shanahan
//!   recursion, with the verification suite for their structural lemmas.
//! * [`surgery`] - the surgery pipeline: character solving, torsion
//!   annihilators, integrality certificates, Perron checks, splice tests.
//! * [`seifert`] - Seifert torsion values and integrality certificates.

pub mod apoly;
pub mod error;
pub mod exact;
pub mod manifest;
pub mod numeric;
pub mod rep;
pub mod resultant;
pub mod seifert;
pub mod surgery;

pub use error::{Error, Result};
