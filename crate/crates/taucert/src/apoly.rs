//! A-polynomials of the twist knot family: elimination, recursion,
//! and structural verification.
//!
//! The A-polynomial of `J(2,2m)` is computed two independent ways: by
//! eliminating the trace variable from the Riley polynomial and the
//! longitude eigenvalue, and by the family's three-term recursion.  The
//! verification suite checks the structural facts the surgery pipeline
//! relies on: unit extreme coefficients in `L`, even Newton polygon
//! slopes, unit extremes of slope resultants, and the derivative
//! divisibilities at `L = -1` that make the slope polynomials integral.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{gcd_in_var, parse_multipoly, MultiPoly, UniPoly};
use crate::rep::{longitude_eigenvalue, riley_polynomial, TwistKnotFamily};
use crate::resultant::{check_derivative_divisibility, resultant};

/// Longitude eigenvalue variable.
pub const VAR_L: &str = "L";
/// Meridian eigenvalue variable.
pub const VAR_M: &str = "M";

/// How an [`APoly`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Elimination of the trace variable from the Riley polynomial and the
    /// longitude eigenvalue, followed by the raw-eliminant cleanup.
    Eliminant,
    /// The three-term recursion across the twist knot family.
    Recursion,
}

/// One factor removed while normalizing a raw polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct RemovedFactor {
    /// Cleanup stage that removed the factor.
    pub stage: String,
    /// The factor, rendered canonically.
    pub factor: String,
    /// How many times it was divided out.
    pub multiplicity: u32,
}

/// A-polynomial of a twist knot: primitive, free of monomial and `L - 1`
/// factors, squarefree in `L`, with positive graded-lex leading
/// coefficient.  The context is always exactly `(L, M)`.
#[derive(Clone, Debug, Serialize)]
pub struct APoly {
    m: i64,
    poly: MultiPoly,
    provenance: Provenance,
    removed: Vec<RemovedFactor>,
}

impl APoly {
    /// Twist parameter of the knot `J(2,2m)`; `0` is the unknot.
    pub fn m(&self) -> i64 {
        self.m
    }

    /// The normalized polynomial.
    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    /// How the polynomial was obtained.
    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Factors divided out during normalization, in removal order.
    pub fn removed_factors(&self) -> &[RemovedFactor] {
        &self.removed
    }

    /// Degree in `L`.
    pub fn degree_l(&self) -> i32 {
        self.poly.max_deg(VAR_L).unwrap_or(0)
    }

    /// Runs the raw-eliminant cleanup on a supplied polynomial.  Intended
    /// for auditing externally provided candidates with the same
    /// verification suite as the computed family.
    pub fn from_raw(m: i64, raw: MultiPoly) -> Result<Self> {
        normalize(m, raw, Provenance::Eliminant)
    }
}

/// Shared cleanup: unit monomials, integer content, polynomial content in
/// `L`, all `L - 1` factors, the repeated-factor part in `L`, then sign
/// canonicalization.  Every removed factor is logged.
fn normalize(m: i64, raw: MultiPoly, provenance: Provenance) -> Result<APoly> {
    if raw.is_zero() {
        return Err(Error::Computation(
            "eliminant vanished identically; the longitude word does not lie in the group presented"
                .into(),
        ));
    }
    let mut removed = Vec::new();
    let (mut p, units) = raw.clear_units();
    for (v, e) in units {
        removed.push(RemovedFactor {
            stage: "unit-monomial".into(),
            factor: format!("{v}^{e}"),
            multiplicity: 1,
        });
    }
    let c = p.int_content();
    if !c.is_one() {
        p = p.primitive_int();
        removed.push(RemovedFactor {
            stage: "integer-content".into(),
            factor: c.to_string(),
            multiplicity: 1,
        });
    }
    if p.max_deg(VAR_L).unwrap_or(0) > 0 {
        let (content, prim) = p.content_primitive(VAR_L)?;
        if !content.is_one() {
            removed.push(RemovedFactor {
                stage: "polynomial-content".into(),
                factor: content.to_string(),
                multiplicity: 1,
            });
            p = prim;
        }
    }
    let l_minus_one = &MultiPoly::variable(VAR_L) - &MultiPoly::constant(1);
    let mut k = 0u32;
    while p.is_divisible_by(&l_minus_one) {
        p = p.divide_exact(&l_minus_one)?;
        k += 1;
    }
    if k > 0 {
        removed.push(RemovedFactor {
            stage: "abelian-factor".into(),
            factor: l_minus_one.to_string(),
            multiplicity: k,
        });
    }
    if p.max_deg(VAR_L).unwrap_or(0) > 0 {
        let dp = p.derivative_in(VAR_L)?;
        if !dp.is_zero() {
            let g = gcd_in_var(&p, &dp, VAR_L)?;
            if g.total_degree().unwrap_or(0) > 0 {
                p = p.divide_exact(&g)?;
                removed.push(RemovedFactor {
                    stage: "repeated-factor".into(),
                    factor: g.to_string(),
                    multiplicity: 1,
                });
            }
        }
    }
    // Divisions can expose fresh units or content.
    let (p2, units2) = p.clear_units();
    p = p2;
    for (v, e) in units2 {
        removed.push(RemovedFactor {
            stage: "unit-monomial".into(),
            factor: format!("{v}^{e}"),
            multiplicity: 1,
        });
    }
    let c2 = p.int_content();
    if !c2.is_one() {
        p = p.primitive_int();
        removed.push(RemovedFactor {
            stage: "integer-content".into(),
            factor: c2.to_string(),
            multiplicity: 1,
        });
    }
    let (p, _) = p.sign_normalized();
    let ctx = [VAR_L.to_string(), VAR_M.to_string()];
    let poly = p.compact().in_context(&ctx).map_err(|_| {
        Error::Internal("normalized A-polynomial carries an unexpected variable".into())
    })?;
    Ok(APoly { m, poly, provenance, removed })
}

/// A-polynomial of a twist knot by elimination: the normalized resultant
/// `res_t(L - Lambda(M,t), phi(M,t))` of the longitude eigenvalue and the
/// Riley polynomial.
pub fn a_polynomial(family: &TwistKnotFamily) -> Result<APoly> {
    let phi = riley_polynomial(family)?.rename_var("s", VAR_M)?;
    let lam = longitude_eigenvalue(family)?.rename_var("s", VAR_M)?;
    let mut f = &MultiPoly::variable(VAR_L) - &lam;
    // Reducing modulo phi first changes the resultant by a power of phi's
    // leading t-coefficient, a unit monomial, and keeps the Sylvester
    // matrix at the size of the trace degree.
    let dphi = phi.max_deg("t").unwrap_or(0);
    if f.max_deg("t").unwrap_or(0) >= dphi {
        f = f.reduce_mod_in_var(&phi, "t")?;
    }
    let raw = resultant(&f, &phi, "t")?;
    normalize(family.m(), raw, Provenance::Eliminant)
}

/// First recursion operand `x(L, M)`.
fn recursion_x() -> MultiPoly {
    parse_multipoly(
        "-L + L^2 + 2*L*M^2 + M^4 + 2*L*M^4 + L^2*M^4 + 2*L*M^6 + M^8 - L*M^8",
    )
    .expect("fixed literal")
}

/// Second recursion operand `y(L, M) = M^4 (L + M^2)^4`.
fn recursion_y() -> MultiPoly {
    let base = parse_multipoly("L + M^2").expect("fixed literal");
    let sq = &base * &base;
    &parse_multipoly("M^4").expect("fixed literal") * &(&sq * &sq)
}

/// Recursion seed: the canonical eliminant of index `k`, sign-flipped
/// where the chain demands it.  The positive chain ascends from
/// `(-A_1, A_2)`; the negative chain descends from `(A_{-1}, -1)`, the
/// `-1` playing the unknot's role.  Degree counting in `L` rules out any
/// single chain through zero, and these seeds are the unique unit-monomial
/// gauge (up to rescaling the whole chain) found by exhaustive search;
/// the recursion-versus-elimination tests re-verify them on every run.
fn recursion_seed(k: i64) -> Result<MultiPoly> {
    let seed = match k {
        1 => -&a_polynomial(&TwistKnotFamily::new(1)?)?.poly,
        2 => a_polynomial(&TwistKnotFamily::new(2)?)?.poly,
        -1 => a_polynomial(&TwistKnotFamily::new(-1)?)?.poly,
        0 => MultiPoly::constant(-1),
        _ => return Err(Error::Internal(format!("no recursion seed at index {k}"))),
    };
    Ok(seed)
}

/// A-polynomial by the family's three-term recursion with operands
/// `x(L,M)` and `y(L,M)`: ascending `B_j = x B_{j-1} - y B_{j-2}` for
/// `m > 2`, descending `B_j = x B_{j+1} - y B_{j+2}` for `m < -1`, each
/// from seeds fixed by [`recursion_seed`]; other `m` come from elimination
/// and the unknot's constant `1`.
pub fn hoste_shanahan(m: i64) -> Result<APoly> {
    if m == 0 {
        return normalize(0, MultiPoly::constant(1), Provenance::Recursion);
    }
    if (-1..=2).contains(&m) {
        return a_polynomial(&TwistKnotFamily::new(m)?);
    }
    let x = recursion_x();
    let y = recursion_y();
    let (mut prev, mut cur, steps) = if m > 2 {
        (recursion_seed(1)?, recursion_seed(2)?, m - 2)
    } else {
        (recursion_seed(0)?, recursion_seed(-1)?, -m - 1)
    };
    for _ in 0..steps {
        let next = &(&x * &cur) - &(&y * &prev);
        prev = cur;
        cur = next;
    }
    normalize(m, cur, Provenance::Recursion)
}

/// Convex hull of the exponent support with exact side slopes.
#[derive(Clone, Debug, Serialize)]
pub struct NewtonPolygon {
    /// Hull vertices `(deg_L, deg_M)`, counterclockwise from the
    /// lexicographically smallest.
    vertices: Vec<(i32, i32)>,
    /// Side slopes `delta_M / delta_L` as reduced `(numerator,
    /// denominator)` pairs with positive denominator; `None` marks a
    /// vertical side.  One entry per side, in vertex order.
    slopes: Vec<Option<(i64, i64)>>,
    /// True when the support is a single point or collinear.
    degenerate: bool,
}

impl NewtonPolygon {
    /// Hull vertices in counterclockwise order.
    pub fn vertices(&self) -> &[(i32, i32)] {
        &self.vertices
    }

    /// Reduced side slopes; `None` is a vertical side.
    pub fn slopes(&self) -> &[Option<(i64, i64)>] {
        &self.slopes
    }

    /// True when the support spans less than two dimensions.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// True when the polygon has sides and every slope is an even integer.
    pub fn all_slopes_even(&self) -> bool {
        !self.slopes.is_empty()
            && self.slopes.iter().all(|s| matches!(s, Some((n, 1)) if n % 2 == 0))
    }
}

fn cross(o: (i32, i32), a: (i32, i32), b: (i32, i32)) -> i64 {
    (a.0 - o.0) as i64 * (b.1 - o.1) as i64 - (a.1 - o.1) as i64 * (b.0 - o.0) as i64
}

/// Monotone-chain convex hull, counterclockwise, collinear points dropped.
fn convex_hull(mut pts: Vec<(i32, i32)>) -> Vec<(i32, i32)> {
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<(i32, i32)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i32, i32)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        // All points collinear: keep the two extremes.
        let mut ends = vec![pts[0], *pts.last().expect("nonempty")];
        ends.dedup();
        return ends;
    }
    lower
}

fn edge_slope(a: (i32, i32), b: (i32, i32)) -> Option<(i64, i64)> {
    let dl = (b.0 - a.0) as i64;
    let dm = (b.1 - a.1) as i64;
    if dl == 0 {
        return None;
    }
    let g = dm.gcd(&dl);
    let (mut num, mut den) = (dm / g, dl / g);
    if den < 0 {
        num = -num;
        den = -den;
    }
    Some((num, den))
}

/// Newton polygon of the support of `a` in the `(L, M)` exponent plane.
pub fn newton_polygon(a: &APoly) -> Result<NewtonPolygon> {
    let pts = a.poly.support_in(VAR_L, VAR_M)?;
    if pts.is_empty() {
        return Err(Error::InvalidInput("Newton polygon of the zero polynomial".into()));
    }
    let vertices = convex_hull(pts);
    let degenerate = vertices.len() <= 2;
    let slopes = match vertices.len() {
        0 | 1 => Vec::new(),
        2 => vec![edge_slope(vertices[0], vertices[1])],
        n => (0..n).map(|i| edge_slope(vertices[i], vertices[(i + 1) % n])).collect(),
    };
    Ok(NewtonPolygon { vertices, slopes, degenerate })
}

/// Extreme `L`-coefficients of an A-polynomial, each certified to be a
/// unit `±M^k`.
#[derive(Clone, Debug, Serialize)]
pub struct UnitExtremesReport {
    /// Degree in `L` of the leading coefficient's term.
    pub leading_l_degree: i32,
    /// `M`-power of the leading `L`-coefficient.
    pub leading_m_power: i32,
    /// Sign of the leading `L`-coefficient.
    pub leading_sign: i8,
    /// Degree in `L` of the trailing coefficient's term.
    pub trailing_l_degree: i32,
    /// `M`-power of the trailing `L`-coefficient.
    pub trailing_m_power: i32,
    /// Sign of the trailing `L`-coefficient.
    pub trailing_sign: i8,
}

fn unit_coefficient(p: &MultiPoly, which: &str) -> Result<(i32, i8)> {
    let (_, c) = p.as_unit_monomial().ok_or_else(|| {
        Error::CertificationFailed(format!("{which} L-coefficient {p} is not a unit monomial"))
    })?;
    let power = p.max_deg(VAR_M).unwrap_or(0);
    let sign = if c.is_negative() { -1 } else { 1 };
    Ok((power, sign))
}

/// Verifies that the leading and trailing `L`-coefficients of `a` are
/// units `±M^k`; the error names the offending coefficient.
pub fn verify_unit_extremes(a: &APoly) -> Result<UnitExtremesReport> {
    let hi = a
        .poly
        .max_deg(VAR_L)
        .ok_or_else(|| Error::InvalidInput("unit extremes of the zero polynomial".into()))?;
    let lo = a.poly.min_deg(VAR_L).expect("nonzero polynomial");
    let (leading_m_power, leading_sign) = unit_coefficient(&a.poly.coeff_of(VAR_L, hi), "leading")?;
    let (trailing_m_power, trailing_sign) =
        unit_coefficient(&a.poly.coeff_of(VAR_L, lo), "trailing")?;
    Ok(UnitExtremesReport {
        leading_l_degree: hi,
        leading_m_power,
        leading_sign,
        trailing_l_degree: lo,
        trailing_m_power,
        trailing_sign,
    })
}

/// Extreme coefficients of `res_L(A, M^p L^q - 1)`, certified to be `±1`.
#[derive(Clone, Debug, Serialize)]
pub struct ResExtremesReport {
    /// Slope numerator, `1` or `-1`.
    pub p: i64,
    /// Slope denominator, positive.
    pub q: i64,
    /// Lowest `M`-degree of the resultant.
    pub low_degree: i32,
    /// Its coefficient, `1` or `-1`.
    pub low_coeff: i8,
    /// Highest `M`-degree of the resultant.
    pub high_degree: i32,
    /// Its coefficient, `1` or `-1`.
    pub high_coeff: i8,
}

fn extreme_coeff(r: &MultiPoly, deg: i32, which: &str) -> Result<i8> {
    let c = r.coeff_of(VAR_M, deg).as_constant().ok_or_else(|| {
        Error::Internal(format!("slope resultant is not univariate in M at degree {deg}"))
    })?;
    if c.abs().is_one() {
        Ok(if c.is_negative() { -1 } else { 1 })
    } else {
        Err(Error::CertificationFailed(format!(
            "{which} coefficient of the slope resultant is {c}*M^{deg}, not a unit"
        )))
    }
}

/// Computes `res_L(A, M^p L^q - 1)` exactly and verifies that its highest
/// and lowest degree coefficients are `±1`.  Negative `q` reduces to this
/// case through the `(L, M) -> (L^-1, M^-1)` symmetry, so only `q > 0` is
/// accepted.
pub fn verify_res_extremes(a: &APoly, p: i64, q: i64) -> Result<ResExtremesReport> {
    if p != 1 && p != -1 {
        return Err(Error::InvalidInput(format!("p must be 1 or -1, got {p}")));
    }
    if q <= 0 {
        return Err(Error::InvalidInput(format!("q must be positive, got {q}")));
    }
    let q32 = i32::try_from(q).map_err(|_| Error::InvalidInput("q too large".into()))?;
    let g = &MultiPoly::monomial(&[VAR_L, VAR_M], &[q32, p as i32], BigInt::one())
        - &MultiPoly::constant(1);
    let r = resultant(&a.poly, &g, VAR_L)?;
    if r.is_zero() {
        return Err(Error::CertificationFailed(format!(
            "res_L(A, M^{p}L^{q} - 1) vanishes identically"
        )));
    }
    let hi = r.max_deg(VAR_M).expect("nonzero resultant");
    let lo = r.min_deg(VAR_M).expect("nonzero resultant");
    let high_coeff = extreme_coeff(&r, hi, "highest")?;
    let low_coeff = extreme_coeff(&r, lo, "lowest")?;
    Ok(ResExtremesReport { p, q, low_degree: lo, low_coeff, high_degree: hi, high_coeff })
}

/// Quotients of the scaled `L`-derivatives of an A-polynomial at `L = -1`
/// by descending powers of `M^2 - 1`.
#[derive(Clone, Debug, Serialize)]
pub struct DiffDivisibilityReport {
    /// Twist parameter.
    pub m: i64,
    /// Trace degree `d(m)`; orders `0..d(m)` are checked.
    pub degree: u32,
    /// `quotients[n] = ((1/n!) d^n A / dL^n)(-1, M) / (M^2 - 1)^(d(m)-n)`.
    pub quotients: Vec<MultiPoly>,
}

/// For each `0 <= n < d(m)`, divides the `n`-th scaled `L`-derivative of
/// `A_{J(2,2m)}` at `L = -1` exactly by `(M^2 - 1)^(d(m)-n)`, storing the
/// quotients; a failed division names `n`.
pub fn verify_diff_divisibility(m: i64) -> Result<DiffDivisibilityReport> {
    let degree = u32::try_from(TwistKnotFamily::new(m)?.phi_degree())
        .map_err(|_| Error::InvalidInput("trace degree overflow".into()))?;
    let a = hoste_shanahan(m)?;
    let base = &MultiPoly::monomial(&[VAR_M], &[2], BigInt::one()) - &MultiPoly::constant(1);
    let minus_one = MultiPoly::constant(-1);
    let mut quotients = Vec::with_capacity(degree as usize);
    for n in 0..degree {
        let value = a.poly.scaled_derivative(VAR_L, n)?.substitute(VAR_L, &minus_one)?;
        let quot = value.divide_exact(&base.pow(degree - n)).map_err(|e| {
            Error::CertificationFailed(format!(
                "order {n}: (M^2 - 1)^{} does not divide the scaled derivative: {e}",
                degree - n
            ))
        })?;
        quotients.push(quot);
    }
    Ok(DiffDivisibilityReport { m, degree, quotients })
}

/// The slope polynomial `f(s) = res_L(A(L,s), s L^q - 1) / (s(-1)^q - 1)^d(m)`,
/// cleared of units and normalized to a positive leading coefficient.
///
/// The derivative-divisibility certificate for the divisor power is
/// checked first; the quotient is then required to be monic, and for odd
/// `q` to satisfy `|f(1)| = 1`.  Failures of those two conclusions are
/// internal errors: the divisibility hypotheses make them unreachable.
pub fn monic_slope_poly(m: i64, q: i64) -> Result<UniPoly> {
    if q <= 0 {
        return Err(Error::InvalidInput(format!("q must be positive, got {q}")));
    }
    let degree = u32::try_from(TwistKnotFamily::new(m)?.phi_degree())
        .map_err(|_| Error::InvalidInput("trace degree overflow".into()))?;
    let q32 = i32::try_from(q).map_err(|_| Error::InvalidInput("q too large".into()))?;
    let a = hoste_shanahan(m)?;
    let g = &MultiPoly::monomial(&[VAR_L, VAR_M], &[q32, 1], BigInt::one())
        - &MultiPoly::constant(1);
    let cert =
        check_derivative_divisibility(&a.poly, &g, VAR_L, &MultiPoly::constant(-1), degree)?;
    let (cleared, _) = cert.resultant_quotient.clear_units();
    let cleared = cleared.compact();
    let f = if cleared.vars().is_empty() {
        UniPoly::constant("s", cleared.as_constant().expect("constant polynomial"))
    } else {
        cleared.rename_var(VAR_M, "s")?.to_unipoly("s")?
    }
    .sign_normalized();
    if !f.is_monic() {
        return Err(Error::Internal(format!(
            "slope polynomial for m={m}, q={q} is not monic: {f}"
        )));
    }
    if q % 2 == 1 {
        let f1 = f.eval_int(&BigInt::one());
        if !f1.abs().is_one() {
            return Err(Error::Internal(format!(
                "slope polynomial for m={m}, q={q} has f(1) = {f1}, expected a unit"
            )));
        }
    }
    Ok(f)
}
