//! Dense univariate polynomials over Z: torsion polynomials, Chebyshev
//! polynomials, eliminants, and every emitted annihilator.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::multipoly::MultiPoly;
use super::ratpoly::RatPoly;
use crate::error::{Error, Result};

/// Dense polynomial in one variable with exact integer coefficients,
/// constant term first.  The leading stored coefficient is nonzero unless
/// the polynomial is zero (empty coefficient list).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    var: String,
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero(var: &str) -> Self {
        UniPoly { var: var.to_string(), coeffs: Vec::new() }
    }

    pub fn one(var: &str) -> Self {
        UniPoly::constant(var, BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(var: &str, c: T) -> Self {
        UniPoly::from_coeffs(var, vec![c.into()])
    }

    /// The monomial `x` itself.
    pub fn x(var: &str) -> Self {
        UniPoly::from_coeffs(var, vec![BigInt::zero(), BigInt::one()])
    }

    /// Builds from constant-first coefficients, trimming trailing zeros.
    pub fn from_coeffs(var: &str, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { var: var.to_string(), coeffs }
    }

    /// Builds from i64 coefficients, constant term first.
    pub fn from_i64(var: &str, coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(var, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    /// Constant-first coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_one()
    }

    /// Renames the variable.
    pub fn with_var(&self, var: &str) -> Self {
        UniPoly { var: var.to_string(), coeffs: self.coeffs.clone() }
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        UniPoly::from_coeffs(&self.var, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly { var: self.var.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.var);
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(&self.var, coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return UniPoly::zero(&self.var);
        }
        UniPoly { var: self.var.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { var: self.var.clone(), coeffs }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = UniPoly::one(&self.var);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(&self.var);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        UniPoly::from_coeffs(&self.var, coeffs)
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content; zero stays zero.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        UniPoly { var: self.var.clone(), coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Negates if the leading coefficient is negative.
    pub fn sign_normalized(&self) -> Self {
        if self.lc().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Pseudo-division: returns `(q, r)` with `lc(g)^(deg f - deg g + 1) * f
    /// = q*g + r` and `deg r < deg g`.  Exact over Z; requires `g` nonzero.
    pub fn pseudo_div(&self, g: &Self) -> Result<(Self, Self)> {
        if g.is_zero() {
            return Err(Error::DivisionFailed("pseudo-division by zero".into()));
        }
        let df = match self.degree() {
            None => return Ok((UniPoly::zero(&self.var), UniPoly::zero(&self.var))),
            Some(d) => d,
        };
        let dg = g.degree().unwrap();
        if df < dg {
            return Ok((UniPoly::zero(&self.var), self.clone()));
        }
        let lcg = g.lc();
        let mut e = (df - dg + 1) as i64;
        let mut r = self.clone();
        let mut q = UniPoly::zero(&self.var);
        while !r.is_zero() && r.degree().unwrap() >= dg {
            let dr = r.degree().unwrap();
            let t = UniPoly::from_coeffs(&self.var, {
                let mut c = vec![BigInt::zero(); dr - dg + 1];
                c[dr - dg] = r.lc();
                c
            });
            q = q.scale(&lcg).add(&t);
            r = r.scale(&lcg).sub(&t.mul(g));
            e -= 1;
        }
        // Force the exact power lc(g)^(df-dg+1) regardless of early exit.
        let factor = lcg.pow(u32::try_from(e).expect("pseudo-division exponent fits u32"));
        Ok((q.scale(&factor), r.scale(&factor)))
    }

    /// Exact division; errors with the remainder's leading term on failure.
    pub fn divide_exact(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::DivisionFailed("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(UniPoly::zero(&self.var));
        }
        let dg = g.degree().unwrap();
        let lcg = g.lc();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len()];
        while let Some(dr) = r.degree() {
            if dr < dg {
                return Err(Error::DivisionFailed(format!(
                    "nonzero remainder of degree {dr} (leading coefficient {})",
                    r.lc()
                )));
            }
            let (c, rem) = r.lc().div_rem(&lcg);
            if !rem.is_zero() {
                return Err(Error::DivisionFailed(format!(
                    "leading coefficient {} not divisible by {}",
                    r.lc(),
                    lcg
                )));
            }
            q[dr - dg] = c.clone();
            let t = UniPoly::from_coeffs(&self.var, {
                let mut v = vec![BigInt::zero(); dr - dg + 1];
                v[dr - dg] = c;
                v
            });
            r = r.sub(&t.mul(g));
        }
        Ok(UniPoly::from_coeffs(&self.var, q))
    }

    pub fn is_divisible_by(&self, g: &Self) -> bool {
        self.divide_exact(g).is_ok()
    }

    /// Coefficient reversal `x^(deg f) * f(1/x)`; requires `f(0) != 0` so
    /// that degrees are preserved and roots map to their reciprocals.
    pub fn reverse(&self) -> Result<Self> {
        if self.coeff(0).is_zero() {
            return Err(Error::InvalidInput(
                "reversal requires a nonzero constant term (no zero roots)".into(),
            ));
        }
        let coeffs: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        Ok(UniPoly::from_coeffs(&self.var, coeffs))
    }

    /// View as a multivariate polynomial.
    pub fn to_multi(&self) -> MultiPoly {
        MultiPoly::from_unipoly(self)
    }
}

/// Greatest common divisor by the subresultant polynomial remainder
/// sequence (exact, no modular arithmetic).  The result is primitive up to
/// the gcd of the integer contents and has a positive leading coefficient.
pub fn gcd_univariate(f: &UniPoly, g: &UniPoly) -> Result<UniPoly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::InvalidInput("gcd(0, 0) is undefined".into()));
    }
    if f.is_zero() {
        return Ok(g.sign_normalized());
    }
    if g.is_zero() {
        return Ok(f.sign_normalized());
    }
    let content = f.content().gcd(&g.content());
    let mut a = f.primitive();
    let mut b = g.primitive();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let (_, r) = a.pseudo_div(&b)?;
        if r.is_zero() {
            break;
        }
        if r.degree() == Some(0) {
            b = UniPoly::one(f.var());
            break;
        }
        a = b;
        let divisor = &gg * h.pow(u32::try_from(delta).expect("delta fits u32"));
        b = exact_scalar_div(&r, &divisor)?;
        gg = a.lc();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            d => {
                let d = u32::try_from(d).expect("delta fits u32");
                let (q, rem) = gg.pow(d).div_rem(&h.pow(d - 1));
                debug_assert!(rem.is_zero(), "subresultant h update must divide exactly");
                q
            }
        };
    }
    Ok(b.primitive().sign_normalized().scale(&content))
}

fn exact_scalar_div(p: &UniPoly, d: &BigInt) -> Result<UniPoly> {
    let mut coeffs = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        let (q, r) = c.div_rem(d);
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "subresultant PRS division by {d} not exact"
            )));
        }
        coeffs.push(q);
    }
    Ok(UniPoly::from_coeffs(p.var(), coeffs))
}

/// Interpolates the unique integer polynomial of degree < nodes.len()
/// through the given (node, value) pairs.  Errors if the interpolant has a
/// non-integer coefficient.
pub fn lagrange_interpolate(var: &str, nodes: &[(i64, BigInt)]) -> Result<UniPoly> {
    for (i, (x, _)) in nodes.iter().enumerate() {
        for (y, _) in &nodes[i + 1..] {
            if x == y {
                return Err(Error::InvalidInput(format!("duplicate interpolation node {x}")));
            }
        }
    }
    // Newton's divided differences stay rational; the final conversion
    // certifies integrality.
    let n = nodes.len();
    let mut table: Vec<BigRational> =
        nodes.iter().map(|(_, v)| BigRational::from(v.clone())).collect();
    let xs: Vec<BigRational> = nodes
        .iter()
        .map(|(x, _)| BigRational::from(BigInt::from(*x)))
        .collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &table[i] - &table[i - 1];
            let den = &xs[i] - &xs[i - level];
            table[i] = num / den;
        }
    }
    let mut acc = RatPoly::zero();
    for i in (0..n).rev() {
        // acc = acc * (x - x_i) + c_i
        let linear = RatPoly::from_coeffs(vec![-xs[i].clone(), BigRational::one()]);
        acc = acc.mul(&linear).add(&RatPoly::constant(table[i].clone()));
    }
    acc.to_unipoly_exact(var)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multi())
    }
}
