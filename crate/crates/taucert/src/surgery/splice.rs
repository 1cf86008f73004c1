//! The splice common-zero condition: whether the trefoil-cable curve
//! polynomial and the knot's A-polynomial (with swapped arguments) share a
//! zero away from the degenerate locus.  A witness implies the splice of
//! the knot with the trefoil's cable admits infinitely many torsion
//! values.

use crate::apoly::hoste_shanahan;
use crate::error::{Error, Result};
use crate::exact::parse_multipoly;
use crate::numeric::{back_substitute, coefficient_scale, eval_multipoly, roots, Complex};
use rug::Float;

/// The curve polynomial of the trefoil cable space, restricted to the
/// image of the boundary character variety.
pub const SPLICE_CURVE: &str = "L^2*M^16 - L*M^32 + 4*L*M^30 + 2*L*M^28 - 16*L*M^26 \
                                - 13*L*M^24 + 32*L*M^22 + 46*L*M^20 - 20*L*M^18 - 70*L*M^16 \
                                - 20*L*M^14 + 46*L*M^12 + 32*L*M^10 - 13*L*M^8 - 16*L*M^6 \
                                + 2*L*M^4 + 4*L*M^2 - L + M^16";

/// A common zero certifying the splice condition.
#[derive(Clone, Debug)]
pub struct SpliceWitness {
    pub l0: Complex,
    pub m0: Complex,
    /// `|f_C(L0, M0)|`.
    pub curve_residual: f64,
    /// `|A(M0, L0)|` with the knot's A-polynomial argument order.
    pub apoly_residual: f64,
}

/// Outcome of the splice condition check for one twist knot.
#[derive(Clone, Debug)]
pub struct SpliceReport {
    pub m: i64,
    pub satisfied: bool,
    pub witness: Option<SpliceWitness>,
}

/// Checks whether the curve polynomial and `A(M, L)` of `J(2,2m)` share a
/// zero `(L0, M0)` with `L0, M0 != 0` and not both in `{1, -1}`.  An empty
/// witness set is a valid negative answer, not an error.
pub fn splice_condition_check(m: i64) -> Result<SpliceReport> {
    let a = hoste_shanahan(m)?;
    if a.poly().total_degree().unwrap_or(0) == 0 {
        // A unit A-polynomial has no zeros at all.
        return Ok(SpliceReport { m, satisfied: false, witness: None });
    }
    let curve = parse_multipoly(SPLICE_CURVE)?;
    let swapped = a.poly().swap_vars("L", "M")?;
    let eliminant = resultant_elim_m(&curve, &swapped)?;
    let prec = 256;
    let tol = Float::with_val(prec, 1) >> (prec / 4);
    let witness_tol = Float::with_val(prec, 1e-10);
    for (l0, _) in roots(&eliminant, prec)? {
        if l0.abs() < tol {
            continue;
        }
        let m_candidates = match back_substitute(&curve, "L", &l0, "M", prec) {
            Ok(v) => v,
            Err(_) => continue,
        };
        for m0 in m_candidates {
            if m0.abs() < tol {
                continue;
            }
            let point = [("L", &l0), ("M", &m0)];
            let a_val = eval_multipoly(&swapped, &point)?.abs();
            let a_scale = coefficient_scale(&swapped, &point)?;
            let a_res = a_val / Float::with_val(prec, 1f32).max(&a_scale);
            if a_res > witness_tol {
                continue;
            }
            let near = |z: &Complex, x: f64| {
                (z.re.clone() - Float::with_val(prec, x)).abs() < tol
                    && z.im.clone().abs() < tol
            };
            let l_unit = near(&l0, 1.0) || near(&l0, -1.0);
            let m_unit = near(&m0, 1.0) || near(&m0, -1.0);
            if l_unit && m_unit {
                continue;
            }
            let curve_val = eval_multipoly(&curve, &point)?.abs();
            let curve_scale = coefficient_scale(&curve, &point)?;
            let curve_res = curve_val / Float::with_val(prec, 1f32).max(&curve_scale);
            if curve_res > witness_tol {
                continue;
            }
            return Ok(SpliceReport {
                m,
                satisfied: true,
                witness: Some(SpliceWitness {
                    l0,
                    m0,
                    curve_residual: curve_res.to_f64(),
                    apoly_residual: a_res.to_f64(),
                }),
            });
        }
    }
    Ok(SpliceReport { m, satisfied: false, witness: None })
}

fn resultant_elim_m(
    curve: &crate::exact::MultiPoly,
    swapped: &crate::exact::MultiPoly,
) -> Result<crate::exact::UniPoly> {
    let r = crate::resultant::resultant_by_interpolation(curve, swapped, "M", "L")?;
    if r.is_zero() {
        return Err(Error::Computation(
            "the curve polynomial and the A-polynomial share a component".into(),
        ));
    }
    Ok(r)
}
