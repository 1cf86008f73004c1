//! Polynomial root isolation by the Aberth-Ehrlich method.
//!
//! Integer polynomials are first decomposed into squarefree factors
//! exactly, so every numeric solve sees only simple roots; multiplicities
//! come from the exact decomposition, never from clustering heuristics.

use num_bigint::BigInt;
use num_traits::Signed;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rug::Float;

use super::complex::{bigint_to_float, float_to_bigint, Complex};
use crate::error::{Error, Result};
use crate::exact::{squarefree_decompose, UniPoly};

/// Fixed jitter seed: root finding is deterministic across runs.
const JITTER_SEED: u64 = 0x7461_7563_6572_7421;

/// Evaluates `f` at a complex point by Horner's rule.
pub fn eval_unipoly(f: &UniPoly, z: &Complex) -> Complex {
    let prec = z.prec();
    let mut acc = Complex::zero(prec);
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(z).add(&Complex::from_bigint(prec, c));
    }
    acc
}

/// `sum |a_k| |z|^k`, the natural residual scale of `f` at `z`.
pub fn residual_scale(f: &UniPoly, z: &Complex) -> Float {
    let prec = z.prec();
    let az = z.abs();
    let mut acc = Float::with_val(prec, 0);
    let mut pw = Float::with_val(prec, 1);
    for c in f.coeffs() {
        acc += bigint_to_float(prec, &c.abs()) * pw.clone();
        pw *= az.clone();
    }
    acc
}

/// All complex roots of a nonzero integer polynomial with multiplicities,
/// sorted by (re, im).  Multiplicities are exact (from the squarefree
/// decomposition); root positions are accurate to roughly `2^-prec`.
pub fn roots(f: &UniPoly, prec: u32) -> Result<Vec<(Complex, usize)>> {
    if f.is_zero() {
        return Err(Error::InvalidInput("roots of the zero polynomial".into()));
    }
    let (_, factors) = squarefree_decompose(f)?;
    let mut out: Vec<(Complex, usize)> = Vec::new();
    for (fac, mult) in &factors {
        for z in roots_squarefree(fac, prec)? {
            out.push((z, *mult));
        }
    }
    sort_roots(&mut out);
    Ok(out)
}

fn sort_roots(roots: &mut [(Complex, usize)]) {
    roots.sort_by(|a, b| {
        a.0.re
            .partial_cmp(&b.0.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.0.im.partial_cmp(&b.0.im).unwrap_or(std::cmp::Ordering::Equal))
    });
}

fn roots_squarefree(f: &UniPoly, prec: u32) -> Result<Vec<Complex>> {
    let coeffs: Vec<Complex> = f
        .coeffs()
        .iter()
        .map(|c| Complex::from_bigint(prec + 32, c))
        .collect();
    let zs = roots_complex(&coeffs, prec)?;
    // Residual acceptance: |f(z)| below 2^(-prec/2) relative to the
    // coefficient scale at z.
    for z in &zs {
        let resid = eval_unipoly(f, z).abs();
        let scale = residual_scale(f, z);
        let tol = Float::with_val(prec + 32, &scale) >> (prec / 2);
        if resid > tol {
            return Err(Error::Computation(format!(
                "root residual {resid:.3e} exceeds tolerance at precision {prec}"
            )));
        }
    }
    Ok(zs)
}

/// All roots of a polynomial given by complex coefficients (constant term
/// first; the leading coefficient must be nonzero).  Used both for integer
/// polynomials (after exact squarefree reduction) and for
/// back-substitution into polynomials with complex coefficients.  Retries
/// at doubled working precision until the Aberth iteration converges.
pub fn roots_complex(coeffs: &[Complex], prec: u32) -> Result<Vec<Complex>> {
    let coeffs = trim_leading(coeffs, prec);
    let n = coeffs.len().saturating_sub(1);
    if coeffs.is_empty() {
        return Err(Error::InvalidInput("roots of the zero polynomial".into()));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut wp = prec + 32;
    for _ in 0..4 {
        let lifted: Vec<Complex> = coeffs.iter().map(|c| c.with_prec(wp)).collect();
        if let Some(zs) = aberth(&lifted, wp, prec) {
            return Ok(zs.into_iter().map(|z| z.with_prec(prec)).collect());
        }
        wp *= 2;
    }
    Err(Error::Computation(format!(
        "Aberth iteration failed to converge at precision {prec} (degree {n})"
    )))
}

fn trim_leading(coeffs: &[Complex], prec: u32) -> Vec<Complex> {
    // Drop exactly-zero leading coefficients (degree bookkeeping only).
    let tiny = Float::with_val(prec, 0);
    let mut v: Vec<Complex> = coeffs.to_vec();
    while let Some(last) = v.last() {
        if last.abs() == tiny && v.len() > 1 {
            v.pop();
        } else {
            break;
        }
    }
    if v.len() == 1 && v[0].abs() == tiny {
        v.clear();
    }
    v
}

fn aberth(coeffs: &[Complex], wp: u32, prec: u32) -> Option<Vec<Complex>> {
    let n = coeffs.len() - 1;
    // Derivative coefficients.
    let deriv: Vec<Complex> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.scale(&Float::with_val(wp, k as u32)))
        .collect();
    let eval = |cs: &[Complex], z: &Complex| -> Complex {
        let mut acc = Complex::zero(wp);
        for c in cs.iter().rev() {
            acc = acc.mul(z).add(c);
        }
        acc
    };

    // Initial guesses on a slightly jittered circle at the Cauchy bound.
    let lead = coeffs[n].clone();
    let mut radius = Float::with_val(wp, 0);
    for c in &coeffs[..n] {
        let r = c.abs() / lead.abs();
        if r > radius {
            radius = r;
        }
    }
    radius += 1u32;
    let mut rng = ChaCha8Rng::seed_from_u64(JITTER_SEED);
    let two_pi = Float::with_val(wp, rug::float::Constant::Pi) * 2u32;
    let mut zs: Vec<Complex> = (0..n)
        .map(|k| {
            let jit: f64 = rng.gen_range(-0.05..0.05);
            let angle = Float::with_val(wp, &two_pi) * Float::with_val(wp, (k as f64 + 0.35 + jit) / n as f64);
            let (sin, cos) = angle.sin_cos(Float::new(wp));
            Complex::new(
                Float::with_val(wp, &cos * &radius),
                Float::with_val(wp, &sin * &radius),
            )
        })
        .collect();

    // Convergence threshold: relative step below 2^-(prec+16).
    let max_iter = 200usize.saturating_mul(n).max(400);
    for _ in 0..max_iter {
        let mut worst = Float::with_val(wp, 0);
        for i in 0..n {
            let fz = eval(coeffs, &zs[i]);
            let dz = eval(&deriv, &zs[i]);
            if dz.abs().is_zero() {
                // Nudge off a critical point.
                zs[i] = zs[i].add(&Complex::from_f64(wp, 1e-3, 1e-3));
                worst = Float::with_val(wp, 1);
                continue;
            }
            let newton = fz.div(&dz).ok()?;
            let mut sum = Complex::zero(wp);
            for j in 0..n {
                if j != i {
                    let diff = zs[i].sub(&zs[j]);
                    if diff.abs().is_zero() {
                        return None;
                    }
                    sum = sum.add(&diff.recip().ok()?);
                }
            }
            let denom = Complex::one(wp).sub(&newton.mul(&sum));
            let w = if denom.abs().is_zero() { newton.clone() } else { newton.div(&denom).ok()? };
            zs[i] = zs[i].sub(&w);
            let rel = w.abs() / (Float::with_val(wp, 1) + zs[i].abs());
            if rel > worst {
                worst = rel;
            }
        }
        let thresh = Float::with_val(wp, 1) >> (prec + 16).min(wp - 8);
        if worst < thresh {
            return Some(zs);
        }
    }
    None
}

/// Roots in `root_var` of a multivariate polynomial specialized at
/// `fixed_var = value`.  Rejects Laurent exponents in `root_var`,
/// degree-0 specializations, and points where the specialized leading
/// coefficient is negligible against the coefficient scale (the root
/// count would silently drop there).
pub fn back_substitute(
    phi: &crate::exact::MultiPoly,
    fixed_var: &str,
    value: &Complex,
    root_var: &str,
    prec: u32,
) -> Result<Vec<Complex>> {
    use super::complex::eval_multipoly;
    if phi.min_deg(root_var).unwrap_or(0) < 0 {
        return Err(Error::InvalidInput(format!(
            "back-substitution requires nonnegative exponents in `{root_var}`"
        )));
    }
    let deg = phi.max_deg(root_var).unwrap_or(0);
    if deg == 0 {
        return Err(Error::InvalidInput(format!(
            "specialization has degree 0 in `{root_var}`"
        )));
    }
    let wp = prec + 32;
    let v = value.with_prec(wp);
    let mut coeffs = Vec::with_capacity(deg as usize + 1);
    for k in 0..=deg {
        // Compacting drops `root_var` (exponent zeroed) from the context.
        coeffs.push(eval_multipoly(&phi.coeff_of(root_var, k).compact(), &[(fixed_var, &v)])?);
    }
    let mut scale = Float::with_val(wp, 0);
    for c in &coeffs {
        let a = c.abs();
        if a > scale {
            scale = a;
        }
    }
    if scale.is_zero() {
        return Err(Error::Computation(
            "specialized polynomial vanishes identically at the working precision".into(),
        ));
    }
    let lead = coeffs.last().expect("nonempty").abs();
    if lead < scale >> (prec / 2) {
        return Err(Error::Computation(format!(
            "specialized leading coefficient in `{root_var}` is negligible ({lead:.3e})"
        )));
    }
    roots_complex(&coeffs, prec)
}

/// Rounds each value to the nearest integer vector if all are within
/// `tol` (both the imaginary part and the distance to the integer).
pub fn near_integer_vector(values: &[Complex], tol: &Float) -> Option<Vec<BigInt>> {
    let mut out = Vec::with_capacity(values.len());
    for z in values {
        if z.im.clone().abs() > *tol {
            return None;
        }
        let n = float_to_bigint(&z.re)?;
        let dist = (z.re.clone() - bigint_to_float(z.re.prec(), &n)).abs();
        if dist > *tol {
            return None;
        }
        out.push(n);
    }
    Some(out)
}

/// What the dominant root of a polynomial looks like: the evidence for or
/// against it being a Perron number.
#[derive(Clone, Debug)]
pub struct PerronReport {
    /// Root of maximal modulus (ties broken by the deterministic sort).
    pub dominant: Complex,
    /// Multiplicity of the dominant root's squarefree factor.
    pub multiplicity: usize,
    /// Imaginary part negligible at the working precision.
    pub is_real: bool,
    /// Multiplicity one and strictly dominant modulus.
    pub is_simple_dominant: bool,
    /// |dominant| > 1.
    pub exceeds_one: bool,
    /// Relative modulus gap to the second-largest root (1.0 if none).
    pub margin: f64,
    /// All of the above: a real simple dominant root exceeding one.
    pub is_perron: bool,
    /// Why `is_perron` is false, when it is.
    pub reason: Option<String>,
    /// Exact integers `(a, a+1)` with `f(a) f(a+1) < 0` bracketing the
    /// dominant root, when such a bracket exists.
    pub bracket: Option<(BigInt, BigInt)>,
}

/// Locates the dominant root and tests the Perron property numerically,
/// with an exact integer sign-change bracket when available.
pub fn perron_check(f: &UniPoly, prec: u32) -> Result<PerronReport> {
    let all = roots(f, prec)?;
    if all.is_empty() {
        return Err(Error::InvalidInput("constant polynomial has no roots".into()));
    }
    let (dom_idx, _) = all
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| {
            a.0.abs().partial_cmp(&b.0.abs()).unwrap_or(std::cmp::Ordering::Equal)
        })
        .unwrap();
    let (dominant, multiplicity) = all[dom_idx].clone();
    let dom_abs = dominant.abs();
    let mut second = Float::with_val(prec, 0);
    for (i, (z, _)) in all.iter().enumerate() {
        if i != dom_idx {
            let a = z.abs();
            if a > second {
                second = a;
            }
        }
    }
    let margin = if all.len() == 1 {
        1.0
    } else {
        ((dom_abs.clone() - second.clone()) / dom_abs.clone()).to_f64()
    };
    let real_tol = (Float::with_val(prec, 1) + dominant.re.clone().abs()) >> (prec / 4);
    let is_real = dominant.im.clone().abs() <= real_tol;
    let is_simple_dominant = multiplicity == 1 && margin > 1e-6;
    let exceeds_one = dom_abs > 1u32;
    let positive = dominant.re.is_sign_positive();
    let is_perron = is_real && positive && is_simple_dominant && exceeds_one;
    let reason = if is_perron {
        None
    } else if !is_real || !positive {
        Some("dominant root is not a positive real".to_string())
    } else if !exceeds_one {
        Some("dominant root does not exceed 1".to_string())
    } else {
        Some(format!(
            "dominant root is not strictly simple (multiplicity {multiplicity}, margin {margin:.2e})"
        ))
    };
    let bracket = if is_real {
        float_to_bigint(&dominant.re.clone().floor()).and_then(|a| {
            let b = &a + 1;
            let fa = f.eval_int(&a);
            let fb = f.eval_int(&b);
            if (fa.is_negative() && fb.is_positive()) || (fa.is_positive() && fb.is_negative()) {
                Some((a, b))
            } else {
                None
            }
        })
    } else {
        None
    };
    Ok(PerronReport {
        dominant,
        multiplicity,
        is_real,
        is_simple_dominant,
        exceeds_one,
        margin,
        is_perron,
        reason,
        bracket,
    })
}
