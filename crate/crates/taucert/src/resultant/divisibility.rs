//! Derivative-divisibility certificates.
//!
//! If the Taylor coefficients of `f` at `var = zeta` satisfy
//! `g(zeta)^(m-k) | (1/k!) f^(k)(zeta)` for `0 <= k < m`, then
//! `g(zeta)^m` divides `res_var(f, g)`.  The check and the conclusion are
//! both established by exact division, and every quotient is retained so
//! the certificate can be re-verified by multiplication alone.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::MultiPoly;
use crate::resultant::matrix::resultant;

/// Proof object: all dividends and quotients of a successful run of
/// [`check_derivative_divisibility`].
#[derive(Clone, Debug, Serialize)]
pub struct DivisibilityCertificate {
    /// The elimination variable.
    pub var: String,
    /// The substituted value.
    pub zeta: MultiPoly,
    /// `g(zeta)`, the divisor base; nonzero by precondition.
    pub base: MultiPoly,
    /// The vanishing order `m` being certified.
    pub order: u32,
    /// `(1/k!) f^(k)(zeta)` for `k = 0..m`.
    pub derivative_values: Vec<MultiPoly>,
    /// Quotients `derivative_values[k] / base^(m-k)`.
    pub derivative_quotients: Vec<MultiPoly>,
    /// `res_var(f, g)`.
    pub resultant: MultiPoly,
    /// `resultant / base^m`.
    pub resultant_quotient: MultiPoly,
}

impl DivisibilityCertificate {
    /// Re-verifies every divisibility claim by multiplying the stored
    /// quotients back; no division is needed to audit the certificate.
    pub fn verify(&self) -> bool {
        if self.derivative_values.len() != self.order as usize
            || self.derivative_quotients.len() != self.order as usize
        {
            return false;
        }
        for (k, (value, quot)) in self
            .derivative_values
            .iter()
            .zip(&self.derivative_quotients)
            .enumerate()
        {
            let power = self.base.pow(self.order - k as u32);
            if &(&power * quot) != value {
                return false;
            }
        }
        &(&self.base.pow(self.order) * &self.resultant_quotient) == &self.resultant
    }
}

/// Certifies that `g(zeta)^(m-k)` divides the scaled derivative
/// `(1/k!) d^k f / d var^k` evaluated at `var = zeta` for every `k < m`,
/// then confirms the implied conclusion `g(zeta)^m | res_var(f, g)`.
///
/// A failed hypothesis is a certification failure naming the first
/// violated order; a failed conclusion is an internal error, since it
/// cannot happen when the hypotheses hold.
pub fn check_derivative_divisibility(
    f: &MultiPoly,
    g: &MultiPoly,
    var: &str,
    zeta: &MultiPoly,
    order: u32,
) -> Result<DivisibilityCertificate> {
    if order == 0 {
        return Err(Error::InvalidInput("vanishing order must be positive".into()));
    }
    let base = g.substitute(var, zeta)?;
    if base.is_zero() {
        return Err(Error::InvalidInput(
            "g(zeta) = 0: the divisor base vanishes".into(),
        ));
    }
    let mut derivative_values = Vec::with_capacity(order as usize);
    let mut derivative_quotients = Vec::with_capacity(order as usize);
    for k in 0..order {
        let value = f.scaled_derivative(var, k)?.substitute(var, zeta)?;
        let quot = value.divide_exact(&base.pow(order - k)).map_err(|e| {
            Error::CertificationFailed(format!(
                "derivative order {k}: ({base})^{} does not divide the scaled derivative: {e}",
                order - k
            ))
        })?;
        derivative_values.push(value);
        derivative_quotients.push(quot);
    }
    let res = resultant(f, g, var)?;
    let resultant_quotient = res.divide_exact(&base.pow(order)).map_err(|e| {
        Error::Internal(format!(
            "hypotheses hold but ({base})^{order} failed to divide the resultant: {e}"
        ))
    })?;
    Ok(DivisibilityCertificate {
        var: var.to_string(),
        zeta: zeta.clone(),
        base,
        order,
        derivative_values,
        derivative_quotients,
        resultant: res,
        resultant_quotient,
    })
}
