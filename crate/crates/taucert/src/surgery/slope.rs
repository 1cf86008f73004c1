//! Surgery slopes `p/q` and their continuations.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A surgery slope `p/q` in lowest terms with `q > 0`, together with a
/// continuation `(p', q')` satisfying `p*q' - q*p' = 1`.  The continuation
/// picks out the curve `mu^{p'} lambda^{q'}` whose image detects the core
/// of the filling torus; the torsion of the filled manifold divides the
/// exterior torsion by `det(rho(mu^{p'} lambda^{q'}) - I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurgerySlope {
    p: i64,
    q: i64,
    p_cont: i64,
    q_cont: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended Euclid: returns `(x, y)` with `a*x + b*y = gcd(a, b)`.
fn ext_euclid(a: i64, b: i64) -> (i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i64, 0i64);
    let (mut y0, mut y1) = (0i64, 1i64);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (x0, x1) = (x1, x0 - k * x1);
        (y0, y1) = (y1, y0 - k * y1);
    }
    if r0 < 0 {
        (-x0, -y0)
    } else {
        (x0, y0)
    }
}

impl SurgerySlope {
    /// Builds a slope from coprime `(p, q)` with `q != 0`, normalizing the
    /// sign to `q > 0` (the filling is the same manifold).  The continuation
    /// is the solution of `p*q' - q*p' = 1` minimizing `(|p'|, |q'|)`, with
    /// ties broken toward `q' > 0`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidInput("slope p/0 is not a closed surgery".into()));
        }
        if gcd(p, q) != 1 {
            return Err(Error::InvalidInput(format!(
                "slope {p}/{q} is not in lowest terms"
            )));
        }
        let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
        // p*q' - q*p' = 1: from a*p + b*q = 1 take (p0, q0) = (-b, a); the
        // general solution is (p0 + k*p, q0 + k*q).
        let (a, b) = ext_euclid(p, q);
        let (p0, q0) = (-b, a);
        debug_assert_eq!(p * q0 - q * p0, 1);
        let mut candidates = Vec::new();
        if p != 0 {
            let base = (-p0).div_euclid(p);
            candidates.extend(base - 2..=base + 2);
        }
        let base_q = (-q0).div_euclid(q);
        candidates.extend(base_q - 2..=base_q + 2);
        let (p_cont, q_cont) = candidates
            .into_iter()
            .map(|k| (p0 + k * p, q0 + k * q))
            .min_by_key(|&(pc, qc)| (pc.abs(), qc.abs(), if qc > 0 { 0 } else { 1 }))
            .expect("candidate list is nonempty");
        Ok(SurgerySlope { p, q, p_cont, q_cont })
    }

    /// Parses `"p/q"` or a bare integer `"p"` (meaning `p/1`).
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let (p_text, q_text) = match text.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (text, "1"),
        };
        let p = p_text
            .parse::<i64>()
            .map_err(|_| Error::InvalidInput(format!("cannot parse slope `{text}`")))?;
        let q = q_text
            .parse::<i64>()
            .map_err(|_| Error::InvalidInput(format!("cannot parse slope `{text}`")))?;
        SurgerySlope::new(p, q)
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// The stored continuation `(p', q')`.
    pub fn continuation(&self) -> (i64, i64) {
        (self.p_cont, self.q_cont)
    }

    /// The next continuation `(p' + p, q' + q)`; torsion values do not
    /// depend on the choice, which makes this a useful cross-check.
    pub fn alternative_continuation(&self) -> (i64, i64) {
        (self.p_cont + self.p, self.q_cont + self.q)
    }
}

impl fmt::Display for SurgerySlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}
