//! Polynomial gcd in one distinguished variable by the primitive
//! pseudo-remainder sequence.
//!
//! The coefficient ring may contain at most one further variable, so
//! content extraction reduces to univariate gcds; that covers every gcd
//! this crate needs (squarefree parts of bivariate A-polynomials).

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::multipoly::{Mono, MultiPoly};
use crate::exact::unipoly::gcd_univariate;
use crate::exact::UniPoly;

/// Pseudo-remainder of `f` by `g` in `var`: the remainder of
/// `lc_var(g)^j * f` under division by `g`, where one factor of the leading
/// coefficient is absorbed per reduction step so every step stays in the
/// coefficient ring.  Both inputs must be non-Laurent in `var` and `g` must
/// be nonzero; a divisor constant in `var` yields the zero remainder.
fn pseudo_rem(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<MultiPoly> {
    if g.is_zero() {
        return Err(Error::InvalidInput("pseudo-remainder by zero".into()));
    }
    if f.is_laurent_in(var) || g.is_laurent_in(var) {
        return Err(Error::InvalidInput(format!(
            "pseudo-remainder requires nonnegative exponents of `{var}`"
        )));
    }
    let (mut r, g) = MultiPoly::unified(f, g);
    let dg = g.max_deg(var).expect("divisor is nonzero");
    if dg == 0 {
        return Ok(MultiPoly::zero());
    }
    let lcg = g.leading_coefficient_in(var);
    let vi = g
        .vars()
        .iter()
        .position(|v| v == var)
        .expect("divisor has positive degree in var");
    loop {
        let dr = match r.max_deg(var) {
            Some(d) if d >= dg => d,
            _ => break,
        };
        let lcr = r.coeff_of(var, dr);
        let mut shift = Mono(vec![0; g.vars().len()]);
        shift.0[vi] = dr - dg;
        let aligned = g.mul_term(&shift, &BigInt::one());
        // Leading terms cancel exactly, so the degree in `var` drops.
        r = &(&r * &lcg) - &(&lcr * &aligned);
    }
    Ok(r)
}

/// Variables other than `var` that actually occur in `p`.
fn coefficient_vars(p: &MultiPoly, var: &str) -> Vec<String> {
    p.compact().vars().iter().filter(|v| v.as_str() != var).cloned().collect()
}

/// Densifies a polynomial free of the main variable into the coefficient
/// variable `u`, working up to a Laurent unit.
fn as_coefficient_unipoly(p: &MultiPoly, u: &str) -> Result<UniPoly> {
    let (cleared, _) = p.clear_units();
    cleared.compact().in_context(&[u.to_string()])?.to_unipoly(u)
}

/// Gcd of two polynomials free of `var`, over at most one shared variable.
fn gcd_free_of_var(a: &MultiPoly, b: &MultiPoly, coeff_var: Option<&str>) -> Result<MultiPoly> {
    match coeff_var {
        None => {
            let ga = a.int_content();
            let gb = b.int_content();
            Ok(MultiPoly::constant(ga.gcd(&gb)))
        }
        Some(u) => {
            let au = as_coefficient_unipoly(a, u)?;
            let bu = as_coefficient_unipoly(b, u)?;
            Ok(MultiPoly::from_unipoly(&gcd_univariate(&au, &bu)?))
        }
    }
}

/// Greatest common divisor of `f` and `g` as polynomials in `var`,
/// content included, normalized to a positive graded-lex leading
/// coefficient with all Laurent units cleared.  The result divides both
/// inputs exactly; that is re-checked before returning.  At most one
/// variable besides `var` may occur in the inputs.
pub fn gcd_in_var(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<MultiPoly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::InvalidInput("gcd(0, 0) is undefined".into()));
    }
    let (fc, _) = f.clear_units();
    let (gc, _) = g.clear_units();
    if fc.is_zero() || gc.is_zero() {
        let nz = if fc.is_zero() { gc } else { fc };
        let (n, _) = nz.sign_normalized();
        return Ok(n);
    }
    let mut others = coefficient_vars(&fc, var);
    for v in coefficient_vars(&gc, var) {
        if !others.contains(&v) {
            others.push(v);
        }
    }
    if others.len() > 1 {
        return Err(Error::InvalidInput(format!(
            "gcd_in_var supports at most one coefficient variable besides `{var}`, found {others:?}"
        )));
    }
    let coeff_var = others.first().map(|s| s.as_str());
    let (cf, fp) = fc.content_primitive(var)?;
    let (cg, gp) = gc.content_primitive(var)?;
    let content = gcd_free_of_var(&cf, &cg, coeff_var)?;
    // Primitive pseudo-remainder sequence on the primitive parts.
    let (mut a, mut b) = if fp.max_deg(var).unwrap_or(0) >= gp.max_deg(var).unwrap_or(0) {
        (fp, gp)
    } else {
        (gp, fp)
    };
    loop {
        if b.max_deg(var).unwrap_or(0) == 0 {
            // A primitive polynomial constant in `var` is a unit here.
            b = MultiPoly::constant(1);
            break;
        }
        let r = pseudo_rem(&a, &b, var)?;
        if r.is_zero() {
            break;
        }
        let (_, rp) = r.content_primitive(var)?;
        a = b;
        b = rp;
    }
    let (bp, _) = b.sign_normalized();
    let (combined, _) = (&content * &bp).clear_units();
    let (result, _) = combined.sign_normalized();
    if !fc.is_divisible_by(&result) || !gc.is_divisible_by(&result) {
        return Err(Error::Internal(
            "pseudo-remainder gcd fails to divide an input".into(),
        ));
    }
    Ok(result)
}
