//! Squarefree decomposition over Q by Yun's algorithm, with the result
//! expressed in primitive integer factors.

use num_bigint::BigInt;

use super::ratpoly::RatPoly;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Squarefree decomposition `f = c * prod F_i^(m_i)` with each `F_i`
/// primitive over Z, squarefree, pairwise coprime, and with positive
/// leading coefficient.  The constant `c` is recovered by exact division,
/// which also re-verifies the factorization.  Requires `f` nonzero.
pub fn squarefree_decompose(f: &UniPoly) -> Result<(BigInt, Vec<(UniPoly, usize)>)> {
    if f.is_zero() {
        return Err(Error::InvalidInput(
            "squarefree decomposition of zero is undefined".into(),
        ));
    }
    let mut factors: Vec<(UniPoly, usize)> = Vec::new();
    if f.degree() == Some(0) {
        return Ok((f.lc(), factors));
    }
    let fq = RatPoly::from_unipoly(f);
    let df = fq.derivative();
    let a0 = fq.gcd(&df)?;
    let mut b = fq.div_exact(&a0)?;
    let mut d = df.div_exact(&a0)?.sub(&b.derivative());
    let mut mult = 0usize;
    while b.degree() != Some(0) {
        mult += 1;
        let p = b.gcd(&d)?;
        b = b.div_exact(&p)?;
        d = d.div_exact(&p)?.sub(&b.derivative());
        if p.degree() != Some(0) {
            factors.push((p.to_integer_primitive(f.var())?, mult));
        }
    }
    // Recover the constant by dividing f by the reassembled product; this
    // doubles as a verification of the decomposition.
    let mut prod = UniPoly::one(f.var());
    for (fac, m) in &factors {
        prod = prod.mul(&fac.pow(u32::try_from(*m).expect("multiplicity fits u32")));
    }
    let q = f.divide_exact(&prod)?;
    if q.degree() != Some(0) {
        return Err(Error::Internal(
            "squarefree factor product does not divide the input".into(),
        ));
    }
    Ok((q.lc(), factors))
}

/// Product of the distinct irreducible factors of `f`, primitive with
/// positive leading coefficient: the radical of a nonzero polynomial.
pub fn squarefree_part(f: &UniPoly) -> Result<UniPoly> {
    let (_, factors) = squarefree_decompose(f)?;
    let mut prod = UniPoly::one(f.var());
    for (fac, _) in &factors {
        prod = prod.mul(fac);
    }
    Ok(prod)
}
