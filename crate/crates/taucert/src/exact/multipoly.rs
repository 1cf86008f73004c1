//! Multivariate Laurent polynomials over Z with a global graded-lex term
//! order.
//!
//! `MultiPoly` is the universal coefficient carrier of the crate: Riley
//! polynomials phi(s,t), A-polynomials A(L,M), and the splice polynomial
//! f_C(L,M) all live here.  Exponents may be negative (Laurent terms);
//! operations that need plain polynomials (derivatives, exact division,
//! Sylvester rows) clear units first and keep the bookkeeping explicit,
//! never silently working "up to units".

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Exponent vector of a single term, aligned with the owning polynomial's
/// variable context.  Entries may be negative.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Mono(pub Vec<i32>);

impl Mono {
    /// Sum of exponents; may be negative for Laurent terms.
    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn zero(n: usize) -> Self {
        Mono(vec![0; n])
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn add(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn scale(&self, k: i32) -> Mono {
        Mono(self.0.iter().map(|e| e * k).collect())
    }
}

/// Graded lexicographic order: higher total degree wins; ties go to the
/// leftmost differing exponent, larger exponent first.  Fixed globally so
/// printed outputs are byte-stable.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                for (a, b) in self.0.iter().zip(&other.0) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                self.0.len().cmp(&other.0.len())
            })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate Laurent polynomial over Z.
///
/// Invariants: `vars` is sorted and duplicate-free; every stored
/// coefficient is nonzero; every exponent vector has `vars.len()` entries.
/// The zero polynomial has an empty term map.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Mono, BigInt>,
}

impl MultiPoly {
    /// The zero polynomial in an empty variable context.
    pub fn zero() -> Self {
        MultiPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    /// A constant polynomial.
    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::zero(0), c);
        }
        MultiPoly { vars: Vec::new(), terms }
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn variable(name: &str) -> Self {
        MultiPoly::monomial(&[name], &[1], BigInt::one())
    }

    /// A single term `coeff * vars[0]^exps[0] * ...`.  Variables are sorted
    /// into canonical order internally.
    pub fn monomial(vars: &[&str], exps: &[i32], coeff: BigInt) -> Self {
        assert_eq!(vars.len(), exps.len(), "monomial: vars/exps length mismatch");
        let mut pairs: Vec<(&str, i32)> = vars.iter().copied().zip(exps.iter().copied()).collect();
        pairs.sort_by(|a, b| a.0.cmp(b.0));
        for w in pairs.windows(2) {
            assert_ne!(w[0].0, w[1].0, "monomial: duplicate variable");
        }
        let ctx: Vec<String> = pairs.iter().map(|(v, _)| v.to_string()).collect();
        let mono = Mono(pairs.iter().map(|&(_, e)| e).collect());
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        MultiPoly { vars: ctx, terms }
    }

    /// Builds a polynomial from raw terms in the given (sorted, deduped)
    /// context.  Zero coefficients are dropped; duplicate monomials are
    /// accumulated.
    pub fn from_terms(vars: Vec<String>, raw: Vec<(Vec<i32>, BigInt)>) -> Result<Self> {
        for w in vars.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInput(format!(
                    "variable context not sorted/deduped: {:?}",
                    vars
                )));
            }
        }
        let mut terms: BTreeMap<Mono, BigInt> = BTreeMap::new();
        for (exps, c) in raw {
            if exps.len() != vars.len() {
                return Err(Error::InvalidInput(format!(
                    "exponent vector length {} does not match context size {}",
                    exps.len(),
                    vars.len()
                )));
            }
            let m = Mono(exps);
            let entry = terms.entry(m).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(MultiPoly { vars, terms })
    }

    /// The variable context, sorted.
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Iterates terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Returns the constant value if the polynomial has no variable
    /// dependence (including the zero polynomial).
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            return Some(BigInt::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_constant() {
                return Some(c.clone());
            }
        }
        None
    }

    /// Returns `Some((exponents, coeff))` when the polynomial is a single
    /// term whose coefficient is +1 or -1: a unit of the Laurent ring.
    pub fn as_unit_monomial(&self) -> Option<(Mono, BigInt)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if c.abs().is_one() {
            Some((m.clone(), c.clone()))
        } else {
            None
        }
    }

    /// Leading term in graded-lex order; None for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.last_key_value()
    }

    /// Total degree (max over terms); None for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    fn var_index(&self, var: &str) -> Result<usize> {
        self.vars
            .binary_search_by(|v| v.as_str().cmp(var))
            .map_err(|_| Error::InvalidInput(format!("variable `{var}` not in context {:?}", self.vars)))
    }

    /// Highest exponent of `var` over all terms; None for the zero
    /// polynomial.  A variable absent from the context has degree 0.
    pub fn max_deg(&self, var: &str) -> Option<i32> {
        if self.is_zero() {
            return None;
        }
        match self.var_index(var) {
            Ok(i) => self.terms.keys().map(|m| m.0[i]).max(),
            Err(_) => Some(0),
        }
    }

    /// Lowest exponent of `var` over all terms; None for zero.
    pub fn min_deg(&self, var: &str) -> Option<i32> {
        if self.is_zero() {
            return None;
        }
        match self.var_index(var) {
            Ok(i) => self.terms.keys().map(|m| m.0[i]).min(),
            Err(_) => Some(0),
        }
    }

    /// True if any term carries a negative exponent of `var`.
    pub fn is_laurent_in(&self, var: &str) -> bool {
        self.min_deg(var).map(|d| d < 0).unwrap_or(false)
    }

    /// Re-embeds the polynomial into a larger sorted context.
    pub fn in_context(&self, vars: &[String]) -> Result<Self> {
        if self.vars == vars {
            return Ok(self.clone());
        }
        let mut positions = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let idx = vars
                .binary_search(v)
                .map_err(|_| Error::Internal(format!("context embedding lost variable `{v}`")))?;
            positions.push(idx);
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = vec![0i32; vars.len()];
            for (j, &e) in m.0.iter().enumerate() {
                exps[positions[j]] = e;
            }
            terms.insert(Mono(exps), c.clone());
        }
        Ok(MultiPoly { vars: vars.to_vec(), terms })
    }

    /// Merges two polynomials into a common sorted context.
    pub fn unified(a: &Self, b: &Self) -> (Self, Self) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let mut vars: Vec<String> = a.vars.iter().chain(b.vars.iter()).cloned().collect();
        vars.sort();
        vars.dedup();
        let ea = a.in_context(&vars).expect("unify embeds its own union");
        let eb = b.in_context(&vars).expect("unify embeds its own union");
        (ea, eb)
    }

    /// Drops context variables that no term uses.
    pub fn compact(&self) -> Self {
        let used: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] != 0))
            .collect();
        if used.len() == self.vars.len() {
            return self.clone();
        }
        let vars: Vec<String> = used.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Mono(used.iter().map(|&i| m.0[i]).collect()), c.clone()))
            .collect();
        MultiPoly { vars, terms }
    }

    /// Multiplies by a single term.
    pub fn mul_term(&self, mono: &Mono, coeff: &BigInt) -> Self {
        if coeff.is_zero() {
            return MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.add(mono), c * coeff))
            .collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    /// Multiplies every coefficient by an integer.
    pub fn mul_int(&self, c: &BigInt) -> Self {
        self.mul_term(&Mono::zero(self.vars.len()), c)
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = MultiPoly::constant(1).in_context(&self.vars).unwrap();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Coefficient of `var^k` as a polynomial in the same context (the
    /// exponent of `var` is zeroed).
    pub fn coeff_of(&self, var: &str, k: i32) -> Self {
        let Ok(i) = self.var_index(var) else {
            return if k == 0 {
                self.clone()
            } else {
                MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() }
            };
        };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[i] == k)
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e[i] = 0;
                (Mono(e), c.clone())
            })
            .collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    /// All nonzero coefficients of powers of `var`, ascending in the
    /// exponent, each in the full context with `var` zeroed out.
    pub fn coefficients_in(&self, var: &str) -> Vec<(i32, Self)> {
        let Ok(i) = self.var_index(var) else {
            return if self.is_zero() { Vec::new() } else { vec![(0, self.clone())] };
        };
        let mut buckets: BTreeMap<i32, BTreeMap<Mono, BigInt>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[i];
            e[i] = 0;
            buckets.entry(k).or_default().insert(Mono(e), c.clone());
        }
        buckets
            .into_iter()
            .map(|(k, terms)| (k, MultiPoly { vars: self.vars.clone(), terms }))
            .collect()
    }

    /// Coefficient of the highest power of `var`.
    pub fn leading_coefficient_in(&self, var: &str) -> Self {
        match self.max_deg(var) {
            Some(d) => self.coeff_of(var, d),
            None => MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() },
        }
    }

    /// Divides out the minimal power of each variable, returning the
    /// normalized polynomial together with the removed exponents (one per
    /// context variable).  The removed monomial is a unit of the Laurent
    /// ring, so this changes the polynomial only up to a unit.
    pub fn clear_units(&self) -> (Self, Vec<(String, i32)>) {
        if self.is_zero() {
            return (self.clone(), Vec::new());
        }
        let n = self.vars.len();
        let mut mins = vec![i32::MAX; n];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                mins[i] = mins[i].min(e);
            }
        }
        let shift = Mono(mins.clone());
        if shift.is_constant() {
            return (self.clone(), Vec::new());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.sub(&shift), c.clone()))
            .collect();
        let removed = self
            .vars
            .iter()
            .zip(&mins)
            .filter(|(_, &e)| e != 0)
            .map(|(v, &e)| (v.clone(), e))
            .collect();
        (MultiPoly { vars: self.vars.clone(), terms }, removed)
    }

    /// Divides out the minimal power of one variable; returns the removed
    /// exponent.
    pub fn clear_units_in(&self, var: &str) -> (Self, i32) {
        let Some(min) = self.min_deg(var) else { return (self.clone(), 0) };
        if min == 0 {
            return (self.clone(), 0);
        }
        let i = self.var_index(var).expect("min_deg found the variable");
        let mut shift = Mono::zero(self.vars.len());
        shift.0[i] = min;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.sub(&shift), c.clone()))
            .collect();
        (MultiPoly { vars: self.vars.clone(), terms }, min)
    }

    /// Positive gcd of all coefficients; zero for the zero polynomial.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by the integer content (no-op on zero).
    pub fn primitive_int(&self) -> Self {
        let g = self.int_content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c / &g)).collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    /// Negates if the graded-lex leading coefficient is negative; the
    /// returned sign is +1 or -1 with `self = sign * result`.
    pub fn sign_normalized(&self) -> (Self, i8) {
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => ((-self).clone(), -1),
            _ => (self.clone(), 1),
        }
    }

    /// Substitutes `value` for `var`.  Nonnegative powers of `var` accept
    /// any value; negative powers require `value` to be a unit (a single
    /// term with coefficient +1 or -1), since Laurent inversion is only
    /// defined for units.  A polynomial free of `var` is returned as is.
    pub fn substitute(&self, var: &str, value: &Self) -> Result<Self> {
        if self.var_index(var).is_err() {
            return Ok(self.clone());
        }
        let parts = self.coefficients_in(var);
        let ctx = {
            let (a, _) = MultiPoly::unified(self, value);
            a.vars
        };
        let value = value.in_context(&ctx)?;
        let mut result = MultiPoly { vars: ctx.clone(), terms: BTreeMap::new() };

        // Nonnegative exponents are combined by Horner's scheme.
        let nonneg: Vec<&(i32, MultiPoly)> = parts.iter().filter(|(k, _)| *k >= 0).collect();
        if let Some(&&(kmax, _)) = nonneg.last() {
            let by_exp: BTreeMap<i32, &MultiPoly> = nonneg.iter().map(|(k, p)| (*k, p)).collect();
            let mut acc = MultiPoly { vars: ctx.clone(), terms: BTreeMap::new() };
            for k in (0..=kmax).rev() {
                acc = &acc * &value;
                if let Some(p) = by_exp.get(&k) {
                    acc = &acc + &p.in_context(&ctx)?;
                }
            }
            result = acc;
        }

        // Negative exponents invert the unit monomial directly.
        let negs: Vec<&(i32, MultiPoly)> = parts.iter().filter(|(k, _)| *k < 0).collect();
        if !negs.is_empty() {
            let (mono, coeff) = value.as_unit_monomial().ok_or_else(|| {
                Error::InvalidInput(format!(
                    "substituting a non-unit for `{var}` at a negative exponent"
                ))
            })?;
            for &(k, ref p) in negs {
                // value^k = coeff^k * mono^k with coeff = +-1.
                let c = if coeff.is_negative() && k % 2 != 0 {
                    -BigInt::one()
                } else {
                    BigInt::one()
                };
                let term = p.in_context(&ctx)?.mul_term(&mono.scale(k), &c);
                result = &result + &term;
            }
        }
        Ok(result)
    }

    /// Evaluates at a rational point; every context variable must be bound
    /// and variables with negative exponents must not be bound to zero.
    pub fn eval_rational(&self, point: &[(&str, BigRational)]) -> Result<BigRational> {
        let mut values = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let r = point
                .iter()
                .find(|(name, _)| name == v)
                .map(|(_, r)| r.clone())
                .ok_or_else(|| Error::InvalidInput(format!("no value bound for `{v}`")))?;
            values.push(r);
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                t *= rat_pow(&values[i], e)?;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// The k-th scaled derivative (1/k!) d^k/d var^k.  Binomial
    /// coefficients absorb the factorial so the result stays integral.
    /// Requires the polynomial to be non-Laurent in `var`.
    pub fn scaled_derivative(&self, var: &str, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(self.clone());
        }
        let i = match self.var_index(var) {
            Ok(i) => i,
            // Variable absent: derivative of a constant (in var) is zero.
            Err(_) => return Ok(MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() }),
        };
        if self.is_laurent_in(var) {
            return Err(Error::InvalidInput(format!(
                "scaled_derivative requires nonnegative exponents of `{var}`"
            )));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e < k as i32 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] = e - k as i32;
            let coeff = c * binomial(e as u64, k as u64);
            let entry = terms.entry(Mono(exps)).or_insert_with(BigInt::zero);
            *entry += coeff;
        }
        terms.retain(|_, c: &mut BigInt| !c.is_zero());
        Ok(MultiPoly { vars: self.vars.clone(), terms })
    }

    /// Plain first derivative in `var` (non-Laurent required).
    pub fn derivative_in(&self, var: &str) -> Result<Self> {
        Ok(self.scaled_derivative(var, 1)?)
    }

    /// Exact division in the Laurent ring.  Both operands are cleared of
    /// unit monomials first (their ratio is reattached to the quotient), so
    /// the core loop runs over plain polynomials where graded-lex
    /// leading-term reduction terminates by well-ordering.  A non-exact
    /// division reports the nonzero remainder's leading term.
    pub fn divide_exact(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::DivisionFailed("division by zero polynomial".into()));
        }
        let (f, g) = MultiPoly::unified(self, g);
        if f.is_zero() {
            return Ok(MultiPoly { vars: f.vars, terms: BTreeMap::new() });
        }
        let (fn_, fshift) = f.clear_units_all();
        let (gn, gshift) = g.clear_units_all();
        let qshift = fshift.sub(&gshift);

        let (glt_m, glt_c) = gn.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut r = fn_;
        let mut q_terms: BTreeMap<Mono, BigInt> = BTreeMap::new();
        while let Some((rm, rc)) = r.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let diff = rm.sub(&glt_m);
            if diff.0.iter().any(|&e| e < 0) {
                return Err(Error::DivisionFailed(format!(
                    "remainder leading term {} not divisible by divisor leading term",
                    format_term(&r.vars, &rm, &rc)
                )));
            }
            let (quot, rem) = rc.div_rem(&glt_c);
            if !rem.is_zero() {
                return Err(Error::DivisionFailed(format!(
                    "remainder leading term {} has coefficient not divisible by {}",
                    format_term(&r.vars, &rm, &rc),
                    glt_c
                )));
            }
            q_terms.insert(diff.clone(), quot.clone());
            r = &r - &gn.mul_term(&diff, &quot);
        }
        let q = MultiPoly { vars: gn.vars.clone(), terms: q_terms };
        Ok(q.mul_term(&qshift, &BigInt::one()))
    }

    fn clear_units_all(&self) -> (Self, Mono) {
        let n = self.vars.len();
        if self.is_zero() {
            return (self.clone(), Mono::zero(n));
        }
        let mut mins = vec![i32::MAX; n];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                mins[i] = mins[i].min(e);
            }
        }
        let shift = Mono(mins);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.sub(&shift), c.clone()))
            .collect();
        (MultiPoly { vars: self.vars.clone(), terms }, shift)
    }

    /// True when `g` divides `self` exactly in the Laurent ring.
    pub fn is_divisible_by(&self, g: &Self) -> bool {
        self.divide_exact(g).is_ok()
    }

    /// Splits off the content with respect to `var`: `self = content *
    /// primitive` with `content` free of `var` and `primitive` having
    /// coprime coefficients as a polynomial in `var`.  True polynomial
    /// content is extracted when at most one other variable occurs;
    /// otherwise only the integer content and per-variable minimal
    /// monomials are split off (sufficient for this crate's pipelines).
    pub fn content_primitive(&self, var: &str) -> Result<(Self, Self)> {
        if self.is_zero() {
            return Err(Error::InvalidInput("content of the zero polynomial".into()));
        }
        let parts = self.coefficients_in(var);
        let coeffs: Vec<&MultiPoly> = parts.iter().map(|(_, p)| p).collect();
        let mut others: Vec<String> = Vec::new();
        for p in &coeffs {
            for (i, v) in p.vars.iter().enumerate() {
                if v != var && p.terms.keys().any(|m| m.0[i] != 0) && !others.contains(v) {
                    others.push(v.clone());
                }
            }
        }
        let content = if others.is_empty() {
            let mut g = BigInt::zero();
            for p in &coeffs {
                g = g.gcd(&p.as_constant().expect("no other variables occur"));
            }
            MultiPoly::constant(g)
        } else if others.len() == 1 {
            let u = &others[0];
            // Clear a common Laurent shift so the coefficients become plain
            // polynomials in u, then gcd them densely.
            let min_u = coeffs.iter().filter_map(|p| p.min_deg(u)).min().unwrap();
            let mut g = UniPoly::zero(u);
            for p in &coeffs {
                let shifted = if min_u != 0 {
                    p.mul_term(&shift_mono(p, u, -min_u), &BigInt::one())
                } else {
                    (*p).clone()
                };
                let up = shifted.to_unipoly(u)?;
                g = super::unipoly::gcd_univariate(&g, &up)?;
                if g.degree() == Some(0) && g.lc().abs().is_one() {
                    break;
                }
            }
            let gm = MultiPoly::from_unipoly(&g);
            gm.mul_term(&shift_mono(&gm, u, min_u), &BigInt::one())
        } else {
            let mut mono = Mono::zero(self.vars.len());
            for (i, v) in self.vars.iter().enumerate() {
                if v == var {
                    continue;
                }
                let min = self.terms.keys().map(|m| m.0[i]).min().unwrap();
                mono.0[i] = min;
            }
            let mut c = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
            c.terms.insert(mono, self.int_content());
            c
        };
        let primitive = self.divide_exact(&content)?;
        Ok((content, primitive))
    }

    /// Remainder of `self` modulo `g` as polynomials in `var`.  Exact over
    /// the Laurent coefficient ring because the leading `var`-coefficient
    /// of `g` must be a unit monomial.  Both inputs must be non-Laurent in
    /// `var` itself.
    pub fn reduce_mod_in_var(&self, g: &Self, var: &str) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::InvalidInput("reduction modulo zero".into()));
        }
        if self.is_laurent_in(var) || g.is_laurent_in(var) {
            return Err(Error::InvalidInput(format!(
                "reduce_mod_in_var requires nonnegative exponents of `{var}`"
            )));
        }
        let (mut r, g) = MultiPoly::unified(self, g);
        let dg = g.max_deg(var).expect("g nonzero");
        let lcg = g.leading_coefficient_in(var);
        let (lc_mono, lc_coeff) = lcg.as_unit_monomial().ok_or_else(|| {
            Error::InvalidInput(format!(
                "leading coefficient of the modulus in `{var}` must be a unit monomial, got {lcg}"
            ))
        })?;
        let vi = g.var_index(var)?;
        loop {
            let dr = match r.max_deg(var) {
                Some(d) if d >= dg => d,
                _ => break,
            };
            // factor = lc_r(var) * lcg^{-1} * var^{dr-dg}
            let lcr = r.coeff_of(var, dr);
            let mut inv_mono = lc_mono.scale(-1);
            inv_mono.0[vi] += dr - dg;
            let factor = lcr.mul_term(&inv_mono, &lc_coeff); // (+-1)^{-1} = +-1
            r = &r - &(&factor * &g);
        }
        Ok(r)
    }

    /// Renames a variable; the new name must not already occur.
    pub fn rename_var(&self, old: &str, new: &str) -> Result<Self> {
        let i = self.var_index(old)?;
        if self.vars.iter().any(|v| v == new) {
            return Err(Error::InvalidInput(format!("variable `{new}` already in context")));
        }
        let mut order: Vec<usize> = (0..self.vars.len()).collect();
        let mut names: Vec<String> = self.vars.clone();
        names[i] = new.to_string();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let vars: Vec<String> = order.iter().map(|&j| names[j].clone()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Mono(order.iter().map(|&j| m.0[j]).collect()), c.clone()))
            .collect();
        Ok(MultiPoly { vars, terms })
    }

    /// Swaps two context variables (exchanging their exponents).
    pub fn swap_vars(&self, a: &str, b: &str) -> Result<Self> {
        let ia = self.var_index(a)?;
        let ib = self.var_index(b)?;
        if ia == ib {
            return Ok(self.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.swap(ia, ib);
                (Mono(e), c.clone())
            })
            .collect();
        Ok(MultiPoly { vars: self.vars.clone(), terms })
    }

    /// Exponent support projected onto `(var_a, var_b)`.
    pub fn support_in(&self, var_a: &str, var_b: &str) -> Result<Vec<(i32, i32)>> {
        let ia = self.var_index(var_a)?;
        let ib = self.var_index(var_b)?;
        let mut pts: Vec<(i32, i32)> = self.terms.keys().map(|m| (m.0[ia], m.0[ib])).collect();
        pts.sort();
        pts.dedup();
        Ok(pts)
    }

    /// Converts to a dense univariate polynomial; every other context
    /// variable must be unused and `var` must be non-Laurent.
    pub fn to_unipoly(&self, var: &str) -> Result<UniPoly> {
        if self.is_zero() {
            return Ok(UniPoly::zero(var));
        }
        let c = self.compact();
        let deg = match c.max_deg(var) {
            Some(d) if d >= 0 => d as usize,
            Some(_) => {
                return Err(Error::InvalidInput(format!(
                    "cannot densify: negative exponents of `{var}` present"
                )))
            }
            None => unreachable!("nonzero polynomial"),
        };
        if c.is_laurent_in(var) {
            return Err(Error::InvalidInput(format!(
                "cannot densify: negative exponents of `{var}` present"
            )));
        }
        for v in c.vars() {
            if v != var {
                return Err(Error::InvalidInput(format!(
                    "cannot densify: variable `{v}` still occurs"
                )));
            }
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        match c.vars().len() {
            0 => {
                coeffs[0] = c.as_constant().unwrap();
            }
            _ => {
                for (m, coeff) in &c.terms {
                    coeffs[m.0[0] as usize] = coeff.clone();
                }
            }
        }
        Ok(UniPoly::from_coeffs(var, coeffs))
    }

    /// Embeds a univariate polynomial.
    pub fn from_unipoly(p: &UniPoly) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.insert(Mono(vec![k as i32]), c.clone());
            }
        }
        MultiPoly { vars: vec![p.var().to_string()], terms }
    }

    /// Equality up to a unit monomial and a global sign, the equivalence
    /// the A-polynomial literature works in.
    pub fn eq_up_to_unit_and_sign(a: &Self, b: &Self) -> bool {
        let (na, _) = a.clear_units();
        let (nb, _) = b.clear_units();
        let (na, _) = na.sign_normalized();
        let (nb, _) = nb.sign_normalized();
        na == nb
    }
}

fn shift_mono(p: &MultiPoly, var: &str, amount: i32) -> Mono {
    let mut m = Mono::zero(p.vars.len());
    if amount != 0 {
        if let Ok(i) = p.var_index(var) {
            m.0[i] = amount;
        }
    }
    m
}

/// Exact binomial coefficient C(n, k).
fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 1..=k {
        acc = acc * BigInt::from(n - k + j) / BigInt::from(j);
    }
    acc
}

fn rat_pow(base: &BigRational, e: i32) -> Result<BigRational> {
    if e == 0 {
        return Ok(BigRational::one());
    }
    if base.is_zero() && e < 0 {
        return Err(Error::InvalidInput("zero raised to a negative power".into()));
    }
    let p = BigRational::new(
        base.numer().pow(e.unsigned_abs()),
        base.denom().pow(e.unsigned_abs()),
    );
    Ok(if e < 0 { p.recip() } else { p })
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        let a = self.compact();
        let b = other.compact();
        a.vars == b.vars && a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = MultiPoly::unified(self, rhs);
        let mut terms = a.terms;
        for (m, c) in b.terms {
            let entry = terms.entry(m).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { vars: a.vars, terms }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = MultiPoly::unified(self, rhs);
        let mut terms = a.terms;
        for (m, c) in b.terms {
            let entry = terms.entry(m).or_insert_with(BigInt::zero);
            *entry -= c;
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { vars: a.vars, terms }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = MultiPoly::unified(self, rhs);
        let mut terms: BTreeMap<Mono, BigInt> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m = ma.add(mb);
                let entry = terms.entry(m).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { vars: a.vars, terms }
    }
}

fn format_term(vars: &[String], m: &Mono, c: &BigInt) -> String {
    let mut factors: Vec<String> = Vec::new();
    let abs = c.abs();
    let mut pieces: Vec<String> = Vec::new();
    for (v, &e) in vars.iter().zip(&m.0) {
        if e == 1 {
            pieces.push(v.clone());
        } else if e != 0 {
            pieces.push(format!("{v}^{e}"));
        }
    }
    if pieces.is_empty() || !abs.is_one() {
        factors.push(abs.to_string());
    }
    factors.extend(pieces);
    let body = factors.join("*");
    if c.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

/// Canonical text form: terms in descending graded-lex order, ` + ` / ` - `
/// separators, `*` between factors, `var^exp` with possibly negative
/// exponents.  Example: `L^2*M^4 - L*M^8 + M^4`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let t = format_term(&self.vars, m, &c.abs());
            if first {
                if c.is_negative() {
                    write!(f, "-{t}")?;
                } else {
                    write!(f, "{t}")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - {t}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}
