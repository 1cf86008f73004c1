//! Annihilator transforms: polynomials whose roots are sums, products,
//! squares, reciprocals-after-shift of the roots of given polynomials.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, UniPoly};
use crate::resultant::matrix::resultant;

/// How [`alg_combine`] combines the two root sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    /// Roots `a + b`.
    Sum,
    /// Roots `a * b`; requires `q(0) != 0`.
    Product,
}

/// Returns a polynomial vanishing on `{a ? b}` for all roots `a` of `p`
/// and `b` of `q`, by eliminating the auxiliary variable from the standard
/// resultant construction.  Monic inputs give a monic output (after sign
/// normalization); the output is not minimized, so it may be a proper
/// multiple of the minimal polynomial.  The output keeps `p`'s variable.
pub fn alg_combine(p: &UniPoly, q: &UniPoly, mode: CombineMode) -> Result<UniPoly> {
    let dp = p.degree().unwrap_or(0);
    let dq = q.degree().unwrap_or(0);
    if p.is_zero() || q.is_zero() || dp == 0 || dq == 0 {
        return Err(Error::InvalidInput(
            "alg_combine requires two nonconstant polynomials".into(),
        ));
    }
    // Internal names cannot collide: the MultiPolys below are rebuilt from
    // coefficient lists, not from the callers' variables.
    let (xv, yv) = ("x", "y");
    let py = MultiPoly::from_unipoly(&p.with_var(yv));
    let gx = match mode {
        CombineMode::Sum => {
            // q(x - y)
            let shift = &MultiPoly::variable(xv) - &MultiPoly::variable(yv);
            MultiPoly::from_unipoly(&q.with_var(xv)).substitute(xv, &shift)?
        }
        CombineMode::Product => {
            // y^n q(x/y), the homogenization; its leading y-coefficient is
            // q(0), which must not vanish for the Sylvester dimension.
            if q.coeff(0).is_zero() {
                return Err(Error::InvalidInput(
                    "product combination requires q(0) != 0 (strip zero roots first)".into(),
                ));
            }
            let mut acc = MultiPoly::zero();
            for (j, b) in q.coeffs().iter().enumerate() {
                let term =
                    MultiPoly::monomial(&[xv, yv], &[j as i32, (dq - j) as i32], b.clone());
                acc = &acc + &term;
            }
            acc
        }
    };
    let res = resultant(&py, &gx, yv)?;
    let out = res.to_unipoly(xv)?.with_var(p.var());
    Ok(if out.lc().is_negative() { out.neg() } else { out })
}

/// Returns a monic polynomial vanishing on `{1/(a - 1)}` over the roots
/// `a` of the monic input `f`: the composition `x^m f(1/x + 1)`.
///
/// `f(1) = 0` is rejected (a root at 1 has no shifted inverse) and
/// `|f(1)| != 1` is a certification failure: the leading coefficient of
/// the transform is `f(1)`, so the shifted inverses can only be certified
/// as algebraic integers when `f(1)` is a unit.
pub fn shift_invert(f: &UniPoly) -> Result<UniPoly> {
    let m = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::InvalidInput("shift_invert requires positive degree".into())),
    };
    if !f.is_monic() {
        return Err(Error::InvalidInput("shift_invert requires a monic input".into()));
    }
    let f1 = f.eval_int(&1.into());
    if f1.is_zero() {
        return Err(Error::InvalidInput(
            "f(1) = 0: strip the root at 1 before inverting the shift".into(),
        ));
    }
    if !f1.abs().is_one() {
        return Err(Error::CertificationFailed(format!(
            "f(1) = {f1} is not a unit, so x^deg * f(1/x + 1) is not monic"
        )));
    }
    // g = sum_k a_k x^(m-k) (x+1)^k; lc(g) = f(1), g(0) = lc(f) = 1.
    let xp1 = UniPoly::from_i64(f.var(), &[1, 1]);
    let mut g = UniPoly::zero(f.var());
    for (k, a) in f.coeffs().iter().enumerate() {
        let term = xp1.pow(k as u32).shift_up(m - k).scale(a);
        g = g.add(&term);
    }
    debug_assert_eq!(g.lc(), f1);
    debug_assert!(g.coeff(0).is_one());
    Ok(g.sign_normalized())
}

/// Returns the monic-degree-preserving polynomial vanishing on the squares
/// of the roots of `p`: the even part of `p(x) p(-x)` reindexed in `x`.
/// Monic inputs give monic outputs of the same degree.
pub fn poly_of_squares(p: &UniPoly) -> Result<UniPoly> {
    let m = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::InvalidInput("poly_of_squares requires positive degree".into())),
    };
    let p_neg = UniPoly::from_coeffs(
        p.var(),
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .collect(),
    );
    let mut q = p.mul(&p_neg);
    if m % 2 == 1 {
        q = q.neg();
    }
    // p(x) p(-x) is even, so only even coefficients survive.
    let mut coeffs = Vec::with_capacity(m + 1);
    for (k, c) in q.coeffs().iter().enumerate() {
        if k % 2 == 0 {
            coeffs.push(c.clone());
        } else if !c.is_zero() {
            return Err(Error::Internal("p(x) p(-x) was not even".into()));
        }
    }
    Ok(UniPoly::from_coeffs(p.var(), coeffs))
}
