//! Dense univariate polynomials over Q, used internally where monic
//! Euclidean division is more convenient than pseudo-division: squarefree
//! decomposition and interpolation.  Results convert back to integer
//! polynomials with an explicit integrality check.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Polynomial over Q, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_unipoly(f: &UniPoly) -> Self {
        RatPoly::from_coeffs(
            f.coeffs().iter().map(|c| BigRational::from(c.clone())).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division over Q; requires `g` nonzero.
    pub fn div_rem(&self, g: &Self) -> Result<(Self, Self)> {
        if g.is_zero() {
            return Err(Error::DivisionFailed("division by zero polynomial".into()));
        }
        let dg = g.degree().unwrap();
        let lcg = g.lc();
        let mut r = self.clone();
        let mut q = vec![BigRational::zero(); self.coeffs.len()];
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let c = r.lc() / &lcg;
            q[dr - dg] = c.clone();
            let mut t = vec![BigRational::zero(); dr - dg + 1];
            t[dr - dg] = c;
            r = r.sub(&RatPoly::from_coeffs(t).mul(g));
        }
        Ok((RatPoly::from_coeffs(q), r))
    }

    /// Exact division; errors on a nonzero remainder.
    pub fn div_exact(&self, g: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(g)?;
        if !r.is_zero() {
            return Err(Error::DivisionFailed(format!(
                "nonzero remainder of degree {}",
                r.degree().unwrap()
            )));
        }
        Ok(q)
    }

    /// Scales to leading coefficient 1; requires nonzero.
    pub fn monic(&self) -> Self {
        let lc = self.lc();
        if lc.is_zero() || lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.recip())
    }

    /// Monic gcd by the Euclidean algorithm; gcd(0, 0) is an error.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::InvalidInput("gcd(0, 0) is undefined".into()));
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Converts to an integer polynomial; errors if any coefficient has a
    /// denominator other than 1.
    pub fn to_unipoly_exact(&self, var: &str) -> Result<UniPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.denom().is_one() {
                return Err(Error::Computation(format!(
                    "expected integer coefficient, found {c}"
                )));
            }
            coeffs.push(c.numer().clone());
        }
        Ok(UniPoly::from_coeffs(var, coeffs))
    }

    /// Clears denominators and integer content: returns the primitive
    /// integer polynomial with positive leading coefficient that has the
    /// same roots.  Requires nonzero.
    pub fn to_integer_primitive(&self, var: &str) -> Result<UniPoly> {
        if self.is_zero() {
            return Err(Error::InvalidInput(
                "cannot normalize the zero polynomial".into(),
            ));
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let coeffs: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| {
                let scaled = c * BigRational::from(denom_lcm.clone());
                debug_assert!(scaled.denom().is_one());
                scaled.numer().clone()
            })
            .collect();
        let f = UniPoly::from_coeffs(var, coeffs).primitive();
        Ok(if f.lc().is_negative() { f.neg() } else { f })
    }
}
