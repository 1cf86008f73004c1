//! Complex numbers over `rug::Float` at explicit precision.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use rug::float::Round;
use rug::ops::DivAssignRound;
use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::exact::MultiPoly;

/// A complex number; both parts carry the same precision.
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

/// Converts an exact big integer to a float of the given precision.
pub fn bigint_to_float(prec: u32, n: &BigInt) -> Float {
    let (sign, bytes) = n.to_bytes_le();
    let mag = Integer::from_digits(&bytes, rug::integer::Order::Lsf);
    let f = Float::with_val(prec, mag);
    if sign == Sign::Minus {
        -f
    } else {
        f
    }
}

/// Rounds a float to the nearest exact big integer.
pub fn float_to_bigint(f: &Float) -> Option<BigInt> {
    let int = f.to_integer()?;
    let len = int.significant_digits::<u8>();
    let mut bytes = vec![0u8; len];
    int.write_digits(&mut bytes, rug::integer::Order::Lsf);
    let mag = BigInt::from_bytes_le(Sign::Plus, &bytes);
    Some(if int < 0 { -mag } else { mag })
}

fn rational_to_float(prec: u32, r: &BigRational) -> Float {
    let mut f = bigint_to_float(prec + 32, r.numer());
    f.div_assign_round(bigint_to_float(prec + 32, r.denom()), Round::Nearest);
    Float::with_val(prec, &f)
}

impl Complex {
    pub fn new(re: Float, im: Float) -> Self {
        Complex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Complex { re: Float::with_val(prec, 0), im: Float::with_val(prec, 0) }
    }

    pub fn one(prec: u32) -> Self {
        Complex { re: Float::with_val(prec, 1), im: Float::with_val(prec, 0) }
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        Complex { re: Float::with_val(prec, re), im: Float::with_val(prec, im) }
    }

    pub fn from_bigint(prec: u32, n: &BigInt) -> Self {
        Complex { re: bigint_to_float(prec, n), im: Float::with_val(prec, 0) }
    }

    pub fn from_rational(prec: u32, r: &BigRational) -> Self {
        Complex { re: rational_to_float(prec, r), im: Float::with_val(prec, 0) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// Re-rounds both parts to a new precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        Complex {
            re: Float::with_val(prec, &self.re),
            im: Float::with_val(prec, &self.im),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn add(&self, o: &Self) -> Self {
        let prec = self.prec().max(o.prec());
        Complex {
            re: Float::with_val(prec, &self.re + &o.re),
            im: Float::with_val(prec, &self.im + &o.im),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let prec = self.prec().max(o.prec());
        Complex {
            re: Float::with_val(prec, &self.re - &o.re),
            im: Float::with_val(prec, &self.im - &o.im),
        }
    }

    pub fn neg(&self) -> Self {
        Complex { re: Float::with_val(self.re.prec(), -&self.re), im: Float::with_val(self.im.prec(), -&self.im) }
    }

    pub fn conj(&self) -> Self {
        Complex { re: self.re.clone(), im: Float::with_val(self.im.prec(), -&self.im) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let prec = self.prec().max(o.prec());
        let re = Float::with_val(prec, &self.re * &o.re) - Float::with_val(prec, &self.im * &o.im);
        let im = Float::with_val(prec, &self.re * &o.im) + Float::with_val(prec, &self.im * &o.re);
        Complex { re: Float::with_val(prec, re), im: Float::with_val(prec, im) }
    }

    pub fn scale(&self, f: &Float) -> Self {
        let prec = self.prec().max(f.prec());
        Complex {
            re: Float::with_val(prec, &self.re * f),
            im: Float::with_val(prec, &self.im * f),
        }
    }

    pub fn norm_sqr(&self) -> Float {
        let prec = self.prec();
        Float::with_val(prec, &self.re * &self.re) + Float::with_val(prec, &self.im * &self.im)
    }

    pub fn abs(&self) -> Float {
        self.re.clone().hypot(&self.im)
    }

    /// Argument in (-pi, pi].
    pub fn arg(&self) -> Float {
        self.im.clone().atan2(&self.re)
    }

    pub fn dist(&self, o: &Self) -> Float {
        self.sub(o).abs()
    }

    pub fn recip(&self) -> Result<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(Error::Computation("division by complex zero".into()));
        }
        let prec = self.prec();
        let neg_im = Float::with_val(prec, -&self.im);
        Ok(Complex {
            re: Float::with_val(prec, &self.re / &n),
            im: Float::with_val(prec, &neg_im / &n),
        })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.recip()?))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let prec = self.prec();
        if e == 0 {
            return Ok(Complex::one(prec));
        }
        let mut base = if e < 0 { self.recip()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Complex::one(prec);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        Ok(acc)
    }

    /// True when both parts round-trip to within `tol` of the other value.
    pub fn approx_eq(&self, o: &Self, tol: &Float) -> bool {
        self.dist(o) < *tol
    }
}

/// Coefficient-magnitude scale of `p` at a point: the sum of
/// `|c| * prod |z_i|^{e_i}` over the terms.  An evaluation smaller than
/// this scale by the working tolerance is indistinguishable from zero, so
/// residual and vanishing tests divide by it.
pub fn coefficient_scale(p: &MultiPoly, point: &[(&str, &Complex)]) -> Result<Float> {
    use rug::ops::Pow;
    let prec = point.iter().map(|(_, z)| z.prec()).max().unwrap_or(64);
    let vars = p.vars().to_vec();
    let mut mags: Vec<Float> = Vec::with_capacity(vars.len());
    for v in &vars {
        let z = point
            .iter()
            .find(|(name, _)| *name == v.as_str())
            .map(|(_, z)| *z)
            .ok_or_else(|| Error::InvalidInput(format!("no value bound for `{v}`")))?;
        mags.push(z.abs());
    }
    let mut acc = Float::with_val(prec, 0);
    for (m, c) in p.terms() {
        let mut t = bigint_to_float(prec, c).abs();
        for (i, &e) in m.0.iter().enumerate() {
            if e != 0 {
                if mags[i].is_zero() && e < 0 {
                    return Err(Error::Computation(format!(
                        "negative exponent of `{}` at zero",
                        vars[i]
                    )));
                }
                t *= Float::with_val(prec, (&mags[i]).pow(e));
            }
        }
        acc += t;
    }
    Ok(acc)
}

/// Evaluates a multivariate Laurent polynomial at a complex point; every
/// context variable must be bound, and variables appearing with negative
/// exponents must not be bound to zero.
pub fn eval_multipoly(p: &MultiPoly, point: &[(&str, &Complex)]) -> Result<Complex> {
    let prec = point.iter().map(|(_, z)| z.prec()).max().unwrap_or(64);
    let vars = p.vars().to_vec();
    let mut values: Vec<&Complex> = Vec::with_capacity(vars.len());
    for v in &vars {
        let z = point
            .iter()
            .find(|(name, _)| *name == v.as_str())
            .map(|(_, z)| *z)
            .ok_or_else(|| Error::InvalidInput(format!("no value bound for `{v}`")))?;
        values.push(z);
    }
    let mut acc = Complex::zero(prec);
    for (m, c) in p.terms() {
        let mut t = Complex::from_bigint(prec, c);
        for (i, &e) in m.0.iter().enumerate() {
            if e != 0 {
                t = t.mul(&values[i].powi(e as i64)?);
            }
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}
