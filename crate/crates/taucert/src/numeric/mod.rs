//! High-precision complex numerics: arbitrary-precision complex
//! arithmetic, polynomial root isolation, and the numeric side of the
//! certificates (witness residuals, Perron checks, near-integer tests).
//!
//! Everything here is floating point at a caller-chosen precision; no
//! certified claim rests on these routines alone.  They select candidates
//! and witness residuals, while the exact layer carries the proofs.

pub mod complex;
pub mod roots;

pub use complex::{bigint_to_float, coefficient_scale, eval_multipoly, float_to_bigint, Complex};
pub use roots::{
    back_substitute, eval_unipoly, near_integer_vector, perron_check, roots, roots_complex,
    PerronReport,
};
