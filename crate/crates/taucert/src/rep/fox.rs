//! Fox free-differential calculus on words.

use crate::error::Result;
use crate::rep::riley::{mat2_add, mat2_scale, mat2_zero, word_eval, Rep2x2};
use crate::rep::word::{Gen, Word};
use crate::resultant::PolyMatrix;

/// The Fox derivative `∂w/∂g` as a formal integer combination of words.
///
/// The rules `∂(uv)/∂g = ∂u/∂g + u·∂v/∂g`, `∂g/∂g = 1` and
/// `∂g^{-1}/∂g = -g^{-1}` unroll over the letters of `w`: each occurrence of
/// `g` contributes the preceding prefix with sign `+1`, each occurrence of
/// `g^{-1}` contributes the prefix up to and including that letter with sign
/// `-1`.
pub fn fox_derivative(w: &Word, gen: Gen) -> Vec<(i8, Word)> {
    let mut terms = Vec::new();
    for (i, &(g, e)) in w.letters().iter().enumerate() {
        if g != gen {
            continue;
        }
        if e == 1 {
            terms.push((1, w.prefix(i)));
        } else {
            terms.push((-1, w.prefix(i + 1)));
        }
    }
    terms
}

/// Evaluates a formal sum of words under a representation:
/// `Σ c_k · ρ(w_k)` as an exact 2×2 polynomial matrix.
pub fn fox_eval(sum: &[(i8, Word)], rep: &Rep2x2) -> Result<PolyMatrix> {
    let mut acc = mat2_zero();
    for (c, w) in sum {
        let m = word_eval(w, rep)?;
        acc = mat2_add(&acc, &mat2_scale(&m, i64::from(*c)))?;
    }
    Ok(acc)
}
