//! Dehn surgery pipeline: slope bookkeeping, character solutions, torsion
//! values, and integrality certificates.
//!
//! Surgery on a twist knot exterior with a slope `p/q` imposes the
//! equation `s^p * Lambda^q = 1` on the Riley variety.  The resulting
//! finite character set carries one Reidemeister torsion value per acyclic
//! point; this module computes those values at controlled precision,
//! produces the exact annihilating polynomial of the torsion multiset, and
//! packages the monic certificates that exhibit the values as algebraic
//! integers.

pub mod annihilator;
pub mod slope;
pub mod solve;
pub mod special;
pub mod splice;

pub use annihilator::{torsion_annihilator, torsion_eliminant, AnnihilatorCertificate, MatchedFactor, TORSION_VAR};
pub use slope::SurgerySlope;
pub use solve::{
    solve_representations, solve_system, surgery_system, torsion_expression,
    torsion_expression_with, SolutionPoint, SurgerySystem,
};
pub use special::{
    integer_surgery_eliminant, integrality_chain, one_over_q_certificate, ChainStep,
    IntegerSurgeryReport, IntegralityChain, OneOverQReport,
};
pub use splice::{splice_condition_check, SpliceReport, SpliceWitness, SPLICE_CURVE};
