//! The surgery representation system and its numeric solutions.

use num_bigint::BigInt;
use num_traits::One;
use rug::Float;

use crate::apoly::RemovedFactor;
use crate::error::{Error, Result};
use crate::exact::{squarefree_part, MultiPoly, UniPoly};
use crate::numeric::{back_substitute, coefficient_scale, eval_multipoly, roots, Complex};
use crate::rep::{
    complement_torsion, longitude_eigenvalue, mat2_identity, mat2_sub, riley_polynomial,
    riley_rep, word_eval, Gen, TwistKnotFamily, Word,
};
use crate::resultant::resultant;
use crate::surgery::slope::SurgerySlope;

/// The exact polynomial system cutting out the characters of
/// `S^3_{p/q}(J(2,2m))`: the Riley polynomial, the cleared surgery
/// equation, and the eliminated slope polynomial in `s`.
#[derive(Clone, Debug)]
pub struct SurgerySystem {
    m: i64,
    slope: SurgerySlope,
    phi: MultiPoly,
    longitude: MultiPoly,
    p_poly: MultiPoly,
    s_poly: UniPoly,
    removed: Vec<RemovedFactor>,
    s_one_removed: bool,
}

impl SurgerySystem {
    /// Twist parameter of the family.
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn slope(&self) -> SurgerySlope {
        self.slope
    }

    /// The Riley polynomial `phi(s, t)`.
    pub fn phi(&self) -> &MultiPoly {
        &self.phi
    }

    /// The longitude eigenvalue `Lambda(s, t)`.
    pub fn longitude(&self) -> &MultiPoly {
        &self.longitude
    }

    /// Numerator of the surgery equation `s^p Lambda^q - 1`, reduced
    /// modulo `phi` in `t` and cleared of unit monomials.
    pub fn p_poly(&self) -> &MultiPoly {
        &self.p_poly
    }

    /// The slope polynomial `S(s)`: squarefree primitive part of
    /// `res_t(phi, P)` with unit monomials and trace-parabolic factors
    /// divided out.
    pub fn s_poly(&self) -> &UniPoly {
        &self.s_poly
    }

    /// Factors divided out while normalizing `S`, in removal order.
    pub fn removed_factors(&self) -> &[RemovedFactor] {
        &self.removed
    }

    /// Whether a positive power of `s - 1` was divided out of the raw
    /// eliminant; solving re-adds the candidate `s = 1` in that case.
    pub fn s_one_removed(&self) -> bool {
        self.s_one_removed
    }
}

/// One numeric character of the filled manifold.
#[derive(Clone, Debug)]
pub struct SolutionPoint {
    /// Meridian eigenvalue; the representative of `{s, 1/s}` with positive
    /// imaginary part, or with modulus at most 1 when real.
    pub s: Complex,
    /// Riley parameter.
    pub t: Complex,
    /// Longitude eigenvalue `Lambda(s, t)`.
    pub longitude: Complex,
    /// Torsion of the filled manifold; zero by convention when not acyclic.
    pub tau: Complex,
    /// False exactly when the torsion denominator vanishes at this point.
    pub acyclic: bool,
    /// Residual `|phi(s, t)|`.
    pub phi_residual: Float,
    /// Residual `|s^p Lambda^q - 1|`.
    pub equation_residual: Float,
    /// Working precision in bits.
    pub precision: u32,
}

fn push_removed(removed: &mut Vec<RemovedFactor>, stage: &str, factor: String, multiplicity: u32) {
    removed.push(RemovedFactor { stage: stage.into(), factor, multiplicity });
}

/// Divides out every power of `factor`, returning the count.
fn strip_factor(p: &mut MultiPoly, factor: &MultiPoly) -> Result<u32> {
    let mut k = 0;
    while p.is_divisible_by(factor) {
        *p = p.divide_exact(factor)?;
        k += 1;
    }
    Ok(k)
}

/// Builds the exact system for `S^3_{p/q}(J(2,2m))`.  The surgery equation
/// `s^p Lambda^q = 1` is cleared to the polynomial `P` and eliminated
/// against `phi` to produce the slope polynomial `S(s)`.
pub fn surgery_system(family: &TwistKnotFamily, slope: SurgerySlope) -> Result<SurgerySystem> {
    let phi = riley_polynomial(family)?;
    let longitude = longitude_eigenvalue(family)?;
    let q: u32 = slope
        .q()
        .try_into()
        .map_err(|_| Error::InvalidInput(format!("denominator {} out of range", slope.q())))?;
    let p: i32 = slope
        .p()
        .try_into()
        .map_err(|_| Error::InvalidInput(format!("numerator {} out of range", slope.p())))?;
    // Reducing Lambda modulo phi first keeps the t-degree of P below the
    // degree of phi; the resultant changes by a power of phi's leading
    // t-coefficient, a unit monomial absorbed by the cleanup below.
    let lam_red = longitude.reduce_mod_in_var(&phi, "t")?;
    let eq = &(&MultiPoly::monomial(&["s"], &[p], BigInt::from(1)) * &lam_red.pow(q))
        - &MultiPoly::constant(1);
    let (mut p_poly, _) = eq.clear_units();
    if p_poly.max_deg("t").unwrap_or(0) >= phi.max_deg("t").unwrap_or(0) {
        p_poly = p_poly.reduce_mod_in_var(&phi, "t")?;
        let (reduced, _) = p_poly.clear_units();
        p_poly = reduced;
    }
    if p_poly.is_zero() {
        return Err(Error::Computation(
            "surgery equation reduces to zero modulo the Riley polynomial".into(),
        ));
    }
    let raw = resultant(&phi, &p_poly, "t")?;
    if raw.is_zero() {
        return Err(Error::Computation("degenerate elimination: res_t(phi, P) = 0".into()));
    }
    let mut removed = Vec::new();
    let (mut r, units) = raw.clear_units();
    for (v, e) in units {
        push_removed(&mut removed, "unit-monomial", format!("{v}^{e}"), 1);
    }
    let c = r.int_content();
    if !c.is_one() {
        r = r.primitive_int();
        push_removed(&mut removed, "integer-content", c.to_string(), 1);
    }
    let s_var = MultiPoly::variable("s");
    let s_minus_one = &s_var - &MultiPoly::constant(1);
    let k_one = strip_factor(&mut r, &s_minus_one)?;
    if k_one > 0 {
        push_removed(&mut removed, "trace-two", s_minus_one.to_string(), k_one);
    }
    // tr rho(mu) = -2 is excluded only where proven: the figure-eight
    // slopes 1/q.
    if family.m() == -1 && slope.p() == 1 {
        let s_plus_one = &s_var + &MultiPoly::constant(1);
        let k = strip_factor(&mut r, &s_plus_one)?;
        if k > 0 {
            push_removed(&mut removed, "trace-minus-two", s_plus_one.to_string(), k);
        }
    }
    let u = r.to_unipoly("s")?;
    let sf = squarefree_part(&u)?;
    if sf.degree() < u.degree() {
        let repeated = u.divide_exact(&sf)?;
        push_removed(&mut removed, "repeated-factor", repeated.sign_normalized().to_string(), 1);
    }
    let s_poly = sf.primitive().sign_normalized();
    if s_poly.degree().unwrap_or(0) == 0 && k_one == 0 {
        return Err(Error::Computation(
            "slope polynomial is constant: the system has no off-parabolic characters".into(),
        ));
    }
    Ok(SurgerySystem {
        m: family.m(),
        slope,
        phi,
        longitude,
        p_poly,
        s_poly,
        removed,
        s_one_removed: k_one > 0,
    })
}

/// The filled-manifold torsion as an exact fraction `tau = N / D` in
/// `(s, t)` for a chosen continuation `(p', q')`: with `xi = s^{p'}
/// Lambda^{q'}` written as `u / v` over nonnegative powers of `Lambda`,
///
/// `N = -N_E * u * v`, `D = D_E * (u - v)^2`,
///
/// since `det(rho(mu^{p'} lambda^{q'}) - I) = 2 - xi - 1/xi
/// = -(xi - 1)^2 / xi`.  Common unit monomials are cleared.
pub fn torsion_expression_with(
    family: &TwistKnotFamily,
    continuation: (i64, i64),
) -> Result<(MultiPoly, MultiPoly)> {
    let (n_e, d_e) = complement_torsion(family)?;
    let lam = longitude_eigenvalue(family)?;
    let (pc, qc) = continuation;
    let pc: i32 = pc
        .try_into()
        .map_err(|_| Error::InvalidInput("continuation out of range".into()))?;
    let a: u32 = qc.max(0) as u32;
    let b: u32 = (-qc).max(0) as u32;
    let u = &MultiPoly::monomial(&["s"], &[pc], BigInt::from(1)) * &lam.pow(a);
    let v = lam.pow(b);
    let n = -&(&(&n_e * &u) * &v);
    let d = &d_e * &(&u - &v).pow(2);
    Ok(clear_common_units(&n, &d))
}

/// [`torsion_expression_with`] at the slope's stored continuation.
pub fn torsion_expression(
    family: &TwistKnotFamily,
    slope: SurgerySlope,
) -> Result<(MultiPoly, MultiPoly)> {
    torsion_expression_with(family, slope.continuation())
}

/// Multiplies numerator and denominator by the same monomial so that no
/// variable has a negative exponent in both.
fn clear_common_units(n: &MultiPoly, d: &MultiPoly) -> (MultiPoly, MultiPoly) {
    let mut n = n.clone();
    let mut d = d.clone();
    let vars: Vec<String> = n
        .vars()
        .iter()
        .chain(d.vars().iter())
        .cloned()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    for v in &vars {
        let k = n.min_deg(v).unwrap_or(0).min(d.min_deg(v).unwrap_or(0));
        if k != 0 {
            let shift = MultiPoly::monomial(&[v], &[-k], BigInt::from(1));
            n = &n * &shift;
            d = &d * &shift;
        }
    }
    (n, d)
}

fn tolerance(prec: u32) -> Float {
    Float::with_val(prec, 1) >> (prec / 4)
}

/// Whether every entry of the relation matrix vanishes at the point,
/// relative to the evaluated coefficient scale.
fn matrix_relation_holds(
    relation: &crate::resultant::PolyMatrix,
    point: &[(&str, &Complex)],
    tol: &Float,
) -> Result<bool> {
    for i in 0..2 {
        for j in 0..2 {
            let entry = relation.at(i, j);
            if entry.is_zero() {
                continue;
            }
            let value = eval_multipoly(entry, point)?.abs();
            let scale = coefficient_scale(entry, point)?;
            let prec = scale.prec();
            if value > Float::with_val(prec, tol * &(Float::with_val(prec, 1) + scale)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct Candidate {
    s: Complex,
    t: Complex,
    longitude: Complex,
    character: Complex,
    phi_residual: Float,
    equation_residual: Float,
}

/// Solves the system numerically and evaluates the torsion at every
/// character.  Candidates `(s, t)` and `(1/s, t)` describe the same
/// character and are merged; the survivor is the one with positive
/// imaginary part, or modulus at most 1 when real.  Rows are sorted by
/// `(|tau|, arg tau, |s|)`.
pub fn solve_system(sys: &SurgerySystem, prec: u32) -> Result<Vec<SolutionPoint>> {
    if prec < 53 {
        return Err(Error::InvalidInput("precision below 53 bits".into()));
    }
    let family = TwistKnotFamily::new(sys.m)?;
    let (n_expr, d_expr) = torsion_expression(&family, sys.slope)?;
    let tol = tolerance(prec);
    let wp = prec + 32;
    let p = sys.slope.p();
    let q = sys.slope.q();

    let mut s_values: Vec<Complex> = Vec::new();
    if sys.s_poly.degree().unwrap_or(0) > 0 {
        for (z, _) in roots(&sys.s_poly, prec)? {
            s_values.push(z);
        }
    }
    if sys.s_one_removed {
        s_values.push(Complex::one(wp));
    }

    // At s = +-1 the peripheral images are triangular with equal
    // eigenvalues and the eigenvalue equation misses the unipotent part;
    // those candidates must satisfy the matrix relation entrywise.
    let filled_relation = {
        let rep = riley_rep();
        let word = Word::gen(Gen::X).pow(p as i64).mul(&family.longitude().pow(q as i64));
        let holonomy = word_eval(&word, &rep)?;
        mat2_sub(&holonomy, &mat2_identity())?
    };

    let mut candidates: Vec<Candidate> = Vec::new();
    for s0 in &s_values {
        let ts = back_substitute(&sys.phi, "s", s0, "t", prec)?;
        for t0 in ts {
            let point = [("s", s0), ("t", &t0)];
            let lam0 = eval_multipoly(&sys.longitude, &point)?;
            let val = s0.powi(p)?.mul(&lam0.powi(q)?);
            let eq_res = val.sub(&Complex::one(wp)).abs();
            let eq_scale = Float::with_val(wp, 1) + val.abs();
            if eq_res > Float::with_val(wp, &tol * &eq_scale) {
                continue;
            }
            let parabolic = s0.sub(&Complex::one(wp)).abs() < tol
                || s0.add(&Complex::one(wp)).abs() < tol;
            if parabolic && !matrix_relation_holds(&filled_relation, &point, &tol)? {
                continue;
            }
            let phi_res = eval_multipoly(&sys.phi, &point)?.abs();
            let character = s0.add(&s0.recip()?);
            candidates.push(Candidate {
                s: s0.clone(),
                t: t0,
                longitude: lam0,
                character,
                phi_residual: phi_res,
                equation_residual: eq_res,
            });
        }
    }

    // Merge (s, t) with (1/s, t): same character, same torsion.
    let mut groups: Vec<Vec<Candidate>> = Vec::new();
    'next: for c in candidates {
        for g in &mut groups {
            let lead = &g[0];
            let sep = Float::with_val(
                wp,
                &tol * &(Float::with_val(wp, 1) + lead.character.abs() + lead.t.abs()),
            );
            if c.character.dist(&lead.character) < sep && c.t.dist(&lead.t) < sep {
                g.push(c);
                continue 'next;
            }
        }
        groups.push(vec![c]);
    }

    let mut points: Vec<SolutionPoint> = Vec::new();
    for g in groups {
        let rep = select_representative(g, &tol);
        let point = [("s", &rep.s), ("t", &rep.t)];
        let d_val = eval_multipoly(&d_expr, &point)?;
        let d_scale = coefficient_scale(&d_expr, &point)?;
        let acyclic = d_val.abs() > Float::with_val(wp, &tol * &d_scale);
        let tau = if acyclic {
            eval_multipoly(&n_expr, &point)?.div(&d_val)?
        } else {
            Complex::zero(wp)
        };
        points.push(SolutionPoint {
            s: rep.s,
            t: rep.t,
            longitude: rep.longitude,
            tau,
            acyclic,
            phi_residual: rep.phi_residual,
            equation_residual: rep.equation_residual,
            precision: prec,
        });
    }

    points.sort_by(|a, b| {
        let ka = (a.tau.abs(), a.tau.arg(), a.s.abs());
        let kb = (b.tau.abs(), b.tau.arg(), b.s.abs());
        ka.partial_cmp(&kb).unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(points)
}

fn select_representative(group: Vec<Candidate>, tol: &Float) -> Candidate {
    let mut best: Option<Candidate> = None;
    for c in group {
        let better = match &best {
            None => true,
            Some(b) => {
                let c_complex = c.s.im.clone().abs() > *tol;
                let b_complex = b.s.im.clone().abs() > *tol;
                if c_complex || b_complex {
                    // Positive imaginary part wins.
                    c.s.im > b.s.im
                } else {
                    // Both real: modulus at most 1 wins.
                    c.s.abs() < b.s.abs()
                }
            }
        };
        if better {
            best = Some(c);
        }
    }
    best.expect("groups are nonempty")
}

/// Characters and torsions of `S^3_{p/q}(J(2,2m))` at the given precision.
pub fn solve_representations(
    family: &TwistKnotFamily,
    slope: SurgerySlope,
    prec: u32,
) -> Result<Vec<SolutionPoint>> {
    let sys = surgery_system(family, slope)?;
    solve_system(&sys, prec)
}
