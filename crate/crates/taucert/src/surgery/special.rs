//! Closed-form certificates for the figure-eight surgeries `p/1` and
//! `1/q`, and the integrality chain for odd-denominator slopes across the
//! twist knot family.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::apoly::{hoste_shanahan, monic_slope_poly};
use crate::error::{Error, Result};
use crate::exact::{MultiPoly, UniPoly};
use crate::rep::{riley_polynomial, TwistKnotFamily};
use crate::resultant::{resultant_by_interpolation, shift_invert};
use crate::surgery::annihilator::TORSION_VAR;

/// The exact eliminant of integer surgery on the figure-eight knot:
/// `h(x) = res_s(x*(s-1)^2 - 2*(s^2-s+1), A(s^{-p}, s))` with its verified
/// leading coefficient and the monic quotient after dividing the
/// parity-dependent constant factor.
#[derive(Clone, Debug)]
pub struct IntegerSurgeryReport {
    /// The surgery coefficient.
    pub p: i64,
    /// The raw eliminant `h`.
    pub eliminant: UniPoly,
    /// Its leading coefficient; always `16` or `-16`.
    pub leading_coefficient: BigInt,
    /// `4*(2x - 3)^2` for odd `p`, the constant `16` for even `p`.
    pub divisor: UniPoly,
    /// The monic exact quotient `h / divisor` (negated when needed).
    pub quotient: UniPoly,
    /// Whether the quotient required negation to be monic.
    pub negated: bool,
}

/// Specializes the figure-eight A-polynomial to `A(s^{-p}, s)`, cleared of
/// unit monomials: the meridian equation of the integer surgery `p/1`.
fn figure_eight_integer_locus(p: i64) -> Result<MultiPoly> {
    let a = hoste_shanahan(-1)?;
    let e: i32 = (-p)
        .try_into()
        .map_err(|_| Error::InvalidInput(format!("surgery coefficient {p} out of range")))?;
    let value = MultiPoly::monomial(&["M"], &[e], BigInt::one());
    let g = a.poly().substitute("L", &value)?;
    let (g, _) = g.clear_units();
    g.rename_var("M", "s")
}

/// Certifies the eliminant structure of `S^3_p(4_1)`: the leading
/// coefficient is `+-16` exactly, and dividing by `4*(2x-3)^2` (odd `p`)
/// or `16` (even `p`) leaves a monic integer polynomial.  Any failed check
/// is fatal; it would contradict the divisibility the construction rests
/// on.
pub fn integer_surgery_eliminant(p: i64) -> Result<IntegerSurgeryReport> {
    if p == 0 {
        return Err(Error::InvalidInput("p = 0 is not an integer surgery".into()));
    }
    let g = figure_eight_integer_locus(p)?;
    // x*(s-1)^2 - 2*(s^2-s+1)
    let s = MultiPoly::variable("s");
    let x = MultiPoly::variable(TORSION_VAR);
    let shifted = &s - &MultiPoly::constant(1);
    let trace_form = &(&x * &shifted.pow(2))
        - &(&MultiPoly::constant(2) * &(&(&s * &s) - &(&s - &MultiPoly::constant(1))));
    let eliminant = resultant_by_interpolation(&trace_form, &g, "s", TORSION_VAR)?;
    let leading = eliminant.lc();
    if leading.abs() != BigInt::from(16) {
        return Err(Error::Internal(format!(
            "integer surgery eliminant for p = {p} has leading coefficient {leading}, expected +-16"
        )));
    }
    let divisor = if p.rem_euclid(2) == 1 {
        // 4*(2x - 3)^2 = 16x^2 - 48x + 36
        UniPoly::from_i64(TORSION_VAR, &[36, -48, 16])
    } else {
        UniPoly::constant(TORSION_VAR, 16)
    };
    let quotient = eliminant.divide_exact(&divisor)?;
    let negated = quotient.lc().is_negative();
    let quotient = if negated { quotient.neg() } else { quotient };
    if !quotient.is_monic() {
        return Err(Error::Internal(format!(
            "integer surgery quotient for p = {p} is not monic"
        )));
    }
    Ok(IntegerSurgeryReport { p, eliminant, leading_coefficient: leading, divisor, quotient, negated })
}

/// Certificate for the longitude eigenvalue of `S^3_{1/q}(4_1)`: the
/// specialized A-polynomial factors as `(L+1)^2 h(L)` with `h(1) = 1`, so
/// `1/(L_0 - 1)` is an algebraic integer for every solution `L_0`.
#[derive(Clone, Debug)]
pub struct OneOverQReport {
    /// The surgery denominator.
    pub q: i64,
    /// `f(L) = A(L, L^{-q})` cleared of units, with the sign fixed so that
    /// `f(1) = 4`.
    pub f: UniPoly,
    /// Whether the canonical A-polynomial sign had to be flipped.
    pub sign_flipped: bool,
    /// The exact quotient `f / (L+1)^2`.
    pub h: UniPoly,
    /// Monic annihilator of `1/(L_0 - 1)` over the roots `L_0` of `h`.
    pub shift_certificate: UniPoly,
}

/// Runs the `1/q` surgery certificate on the figure-eight knot: verifies
/// `f(-1) = f'(-1) = 0` and `f(1) = 4` exactly, extracts `h = f/(L+1)^2`
/// with `h(1) = 1`, and emits the annihilator of the shifted inverses.
/// Every exact check failing is fatal.
pub fn one_over_q_certificate(q: i64) -> Result<OneOverQReport> {
    if q == 0 {
        return Err(Error::InvalidInput("q = 0 is not a surgery denominator".into()));
    }
    let a = hoste_shanahan(-1)?;
    let e: i32 = (-q)
        .try_into()
        .map_err(|_| Error::InvalidInput(format!("denominator {q} out of range")))?;
    let value = MultiPoly::monomial(&["L"], &[e], BigInt::one());
    let fm = a.poly().substitute("M", &value)?;
    let (fm, _) = fm.clear_units();
    let mut f = fm.to_unipoly("L")?;
    let one = BigInt::one();
    let minus_one = -BigInt::one();
    let mut sign_flipped = false;
    if f.eval_int(&one) == BigInt::from(-4) {
        f = f.neg();
        sign_flipped = true;
    }
    if f.eval_int(&one) != BigInt::from(4) {
        return Err(Error::Internal(format!(
            "A(L, L^-q) at L = 1 is {}, expected +-4",
            f.eval_int(&one)
        )));
    }
    if !f.eval_int(&minus_one).is_zero() || !f.derivative().eval_int(&minus_one).is_zero() {
        return Err(Error::Internal(format!(
            "(L+1)^2 does not divide A(L, L^-{q})"
        )));
    }
    let h = f.divide_exact(&UniPoly::from_i64("L", &[1, 2, 1]))?;
    if !h.eval_int(&one).is_one() {
        return Err(Error::Internal(format!(
            "quotient h(1) = {} for q = {q}, expected 1",
            h.eval_int(&one)
        )));
    }
    let monic_h = if h.is_monic() {
        h.clone()
    } else if (-h.lc()).is_one() {
        h.neg()
    } else {
        return Err(Error::Internal(format!(
            "quotient for q = {q} has non-unit leading coefficient {}",
            h.lc()
        )));
    };
    let shift_certificate = shift_invert(&monic_h)?;
    Ok(OneOverQReport { q, f, sign_flipped, h, shift_certificate })
}

/// One certified quantity in an integrality chain.
#[derive(Clone, Debug)]
pub struct ChainStep {
    /// What the annihilator certifies, relative to a root `s0` of the
    /// slope polynomial.
    pub quantity: String,
    /// A monic integer polynomial vanishing at the quantity.
    pub annihilator: UniPoly,
    /// How the annihilator was obtained.
    pub derivation: String,
}

/// A structured integrality certificate for slope `1/q` with odd `q`: the
/// chain `s0`, `1/s0`, `t0`, `1/(s0 - 1)` of algebraic integers whose
/// combination exhibits the filled-manifold torsion as an algebraic
/// integer.
#[derive(Clone, Debug)]
pub struct IntegralityChain {
    pub m: i64,
    pub q: i64,
    pub steps: Vec<ChainStep>,
    /// True when every step's annihilator came out monic.
    pub verified: bool,
}

fn monic_up_to_sign(f: UniPoly, what: &str) -> Result<UniPoly> {
    if f.is_monic() {
        return Ok(f);
    }
    let neg = f.neg();
    if neg.is_monic() {
        return Ok(neg);
    }
    Err(Error::CertificationFailed(format!(
        "{what} has non-unit leading coefficient {}",
        f.neg().lc()
    )))
}

/// Emits the integrality chain for slope `1/q`, `q` odd, on `J(2,2m)`.
/// The slope polynomial is monic with `|f(1)| = 1` there, so all four
/// annihilators come out monic; any failure is a certification error.
pub fn integrality_chain(m: i64, q: i64) -> Result<IntegralityChain> {
    if q == 0 || q.rem_euclid(2) == 0 {
        return Err(Error::InvalidInput(
            "the integrality chain applies to odd surgery denominators".into(),
        ));
    }
    let f = monic_slope_poly(m, q.abs())?;
    let mut steps = Vec::new();
    steps.push(ChainStep {
        quantity: "s0".into(),
        annihilator: f.clone(),
        derivation: "monic slope eliminant".into(),
    });
    let rev = monic_up_to_sign(f.reverse()?, "reversed slope eliminant")?;
    steps.push(ChainStep {
        quantity: "1/s0".into(),
        annihilator: rev,
        derivation: "coefficient reversal of the slope eliminant".into(),
    });
    let family = TwistKnotFamily::new(m)?;
    let phi = riley_polynomial(&family)?;
    let (phi, _) = phi.clear_units();
    let t_ann = resultant_by_interpolation(&phi, &MultiPoly::from_unipoly(&f), "s", "t")?;
    let t_ann = monic_up_to_sign(t_ann.primitive(), "trace-parameter resultant")?;
    steps.push(ChainStep {
        quantity: "t0".into(),
        annihilator: t_ann,
        derivation: "resultant of the Riley polynomial with the slope eliminant".into(),
    });
    steps.push(ChainStep {
        quantity: "1/(s0 - 1)".into(),
        annihilator: shift_invert(&f)?,
        derivation: "shifted-inverse transform of the slope eliminant".into(),
    });
    let verified = steps.iter().all(|s| s.annihilator.is_monic());
    Ok(IntegralityChain { m, q, steps, verified })
}
