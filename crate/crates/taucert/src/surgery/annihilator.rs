//! Exact annihilator polynomials for surgery torsions.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rug::ops::Pow;
use rug::Float;

use crate::apoly::RemovedFactor;
use crate::error::{Error, Result};
use crate::exact::{squarefree_decompose, MultiPoly, UniPoly};
use crate::numeric::{eval_unipoly, Complex};
use crate::rep::TwistKnotFamily;
use crate::resultant::{resultant, resultant_by_interpolation};
use crate::surgery::slope::SurgerySlope;
use crate::surgery::solve::{
    solve_system, surgery_system, torsion_expression, SolutionPoint, SurgerySystem,
};

/// Variable used for torsion annihilator polynomials.
pub const TORSION_VAR: &str = "x";

/// One squarefree factor of the eliminant kept because torsion values
/// vanish on it.
#[derive(Clone, Debug)]
pub struct MatchedFactor {
    /// The primitive squarefree factor.
    pub factor: UniPoly,
    /// Its multiplicity in the eliminant.
    pub multiplicity: usize,
    /// Indices into the solution list whose `tau` is a root.
    pub matched_solutions: Vec<usize>,
}

/// Certificate that the acyclic torsion values of a surgery are algebraic
/// integers: a monic integer polynomial vanishing on all of them, with the
/// factor provenance, the exact-division witness against the eliminant,
/// and the numeric residuals.
#[derive(Clone, Debug)]
pub struct AnnihilatorCertificate {
    /// The slope the certificate is for.
    pub slope: SurgerySlope,
    /// Product of the matched squarefree factors, normalized monic when
    /// the leading coefficient is a unit.
    pub annihilator: UniPoly,
    /// Whether the annihilator is monic; integrality is certified only
    /// then.
    pub monic: bool,
    /// Leading coefficient of the matched product before normalization.
    pub leading_coefficient: BigInt,
    /// The matched factors with multiplicities and solution indices.
    pub factors: Vec<MatchedFactor>,
    /// Factors divided out of the slope polynomial during elimination.
    pub removed: Vec<RemovedFactor>,
    /// Exact-division witness: `eliminant = annihilator * quotient`.
    pub eliminant_quotient: UniPoly,
    /// `(solution index, |annihilator(tau)|)` for every acyclic solution.
    pub witnesses: Vec<(usize, f64)>,
    /// True when every acyclic torsion is a root of the monic annihilator.
    pub verified: bool,
    /// Why verification failed, when it did.
    pub reason: Option<String>,
}

fn factor_vanishes(f: &UniPoly, tau: &Complex) -> bool {
    let prec = tau.prec();
    let deg = f.degree().unwrap_or(0) as i32;
    let scale = (Float::with_val(prec, 1) + tau.abs()).pow(deg);
    eval_unipoly(f, tau).abs() < Float::with_val(prec, 1e-10) * scale
}

/// The exact eliminant of the torsion variable: `res_s(res_t(x*D - N,
/// phi), S)`, cleared of unit monomials, integer content, and the
/// `x`-free polynomial content.  Each clearing multiplies the result by a
/// nonzero integer only, which the squarefree factor matching absorbs.
pub fn torsion_eliminant(sys: &SurgerySystem) -> Result<UniPoly> {
    let family = TwistKnotFamily::new(sys.m())?;
    let (n, d) = torsion_expression(&family, sys.slope())?;
    let x = MultiPoly::variable(TORSION_VAR);
    let h = &(&x * &d) - &n;
    let (mut h, _) = h.clear_units();
    let phi = sys.phi();
    if h.max_deg("t").unwrap_or(0) >= phi.max_deg("t").unwrap_or(0) {
        h = h.reduce_mod_in_var(phi, "t")?;
    }
    if h.is_zero() {
        return Err(Error::Computation(
            "torsion expression reduces to zero modulo the Riley polynomial".into(),
        ));
    }
    let r = resultant(&h, phi, "t")?;
    let (r, _) = r.clear_units();
    let r = r.primitive_int();
    // The x-free content contributes a constant factor to the final
    // resultant against S(s); drop it to keep the Sylvester blocks small.
    let r = if r.max_deg(TORSION_VAR).unwrap_or(0) > 0 {
        r.content_primitive(TORSION_VAR)?.1
    } else {
        r
    };
    let s_multi = MultiPoly::from_unipoly(sys.s_poly());
    let raw = resultant_by_interpolation(&r, &s_multi, "s", TORSION_VAR)?;
    if raw.is_zero() {
        return Err(Error::Computation(
            "torsion eliminant vanished identically; numerator and denominator share a zero on the slope locus"
                .into(),
        ));
    }
    Ok(raw.primitive().sign_normalized())
}

/// Builds the annihilator certificate for the torsions of
/// `S^3_{p/q}(J(2,2m))`: squarefree factors of the exact eliminant are
/// matched against the numeric torsion multiset, their product is
/// normalized monic, and exact division into the eliminant witnesses the
/// factorization.  A non-unit leading coefficient is reported as a failed
/// certification, not an error.
pub fn torsion_annihilator(
    family: &TwistKnotFamily,
    slope: SurgerySlope,
    prec: u32,
) -> Result<AnnihilatorCertificate> {
    let sys = surgery_system(family, slope)?;
    let solutions = solve_system(&sys, prec)?;
    let eliminant = torsion_eliminant(&sys)?;
    let acyclic: Vec<(usize, &SolutionPoint)> = solutions
        .iter()
        .enumerate()
        .filter(|(_, p)| p.acyclic)
        .collect();
    if acyclic.is_empty() {
        return Err(Error::Computation(
            "no acyclic solutions: the torsion multiset is empty".into(),
        ));
    }
    let (_, factors) = squarefree_decompose(&eliminant)?;
    let mut matched: Vec<MatchedFactor> = Vec::new();
    for (f, mult) in &factors {
        let hits: Vec<usize> = acyclic
            .iter()
            .filter(|(_, p)| factor_vanishes(f, &p.tau))
            .map(|(i, _)| *i)
            .collect();
        if !hits.is_empty() {
            matched.push(MatchedFactor {
                factor: f.clone(),
                multiplicity: *mult,
                matched_solutions: hits,
            });
        }
    }
    if matched.is_empty() {
        return Err(Error::Internal(
            "no eliminant factor vanishes at any torsion value".into(),
        ));
    }
    let mut product = UniPoly::one(TORSION_VAR);
    for m in &matched {
        product = product.mul(&m.factor);
    }
    let leading = product.lc();
    let mut verified = true;
    let mut reason = None;
    let mut annihilator = product.clone();
    if leading.abs().is_one() {
        if leading.is_negative() {
            annihilator = annihilator.neg();
        }
    } else {
        verified = false;
        reason = Some(format!(
            "matched factor product has non-unit leading coefficient {leading}"
        ));
    }
    let monic = annihilator.is_monic();
    let mut witnesses = Vec::new();
    for (i, p) in &acyclic {
        witnesses.push((*i, eval_unipoly(&annihilator, &p.tau).abs().to_f64()));
        if !factor_vanishes(&annihilator, &p.tau) && verified {
            verified = false;
            reason = Some(format!(
                "acyclic solution {i} has torsion not annihilated by the matched product"
            ));
        }
    }
    let eliminant_quotient = eliminant.divide_exact(&annihilator)?;
    Ok(AnnihilatorCertificate {
        slope,
        annihilator,
        monic,
        leading_coefficient: leading,
        factors: matched,
        removed: sys.removed_factors().to_vec(),
        eliminant_quotient,
        witnesses,
        verified: verified && monic,
        reason,
    })
}
