//! Text and JSON forms of polynomials.
//!
//! Text grammar (no parentheses; used by the CLI and by tests):
//!
//! ```text
//! poly    := [sign] term (sign term)*
//! term    := factor ('*' factor)*
//! factor  := integer | var ['^' ['-'] integer]
//! ```
//!
//! so `L^2*M^4 - L*M^8 + M^4` and `s^-2 + 2 - s^2` both parse.  The JSON
//! form is `{"vars": [...], "terms": [[[exps...], "coeff"], ...]}` with
//! terms in descending graded-lex order and coefficients as decimal
//! strings (BigInt-safe).

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::multipoly::MultiPoly;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Int(BigInt),
    Ident(String),
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n = BigInt::from_str(&digits)
                    .map_err(|e| Error::InvalidInput(format!("bad integer at byte {pos}: {e}")))?;
                tokens.push(Token::Int(n));
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(name));
            }
            other => {
                return Err(Error::InvalidInput(format!(
                    "unexpected character `{other}` at byte {pos}"
                )));
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    /// One signed term: (exponent map, coefficient).
    fn term(&mut self, negate: bool) -> Result<(BTreeMap<String, i32>, BigInt)> {
        let mut coeff = if negate { -BigInt::one() } else { BigInt::one() };
        let mut exps: BTreeMap<String, i32> = BTreeMap::new();
        loop {
            match self.next() {
                Some(Token::Int(n)) => {
                    if matches!(self.peek(), Some(Token::Caret)) {
                        return Err(Error::InvalidInput(
                            "exponent on an integer literal is not supported".into(),
                        ));
                    }
                    coeff *= n;
                }
                Some(Token::Ident(name)) => {
                    let mut e: i32 = 1;
                    if matches!(self.peek(), Some(Token::Caret)) {
                        self.next();
                        let neg = if matches!(self.peek(), Some(Token::Minus)) {
                            self.next();
                            true
                        } else {
                            false
                        };
                        match self.next() {
                            Some(Token::Int(n)) => {
                                let v = i32::try_from(&n).map_err(|_| {
                                    Error::InvalidInput(format!("exponent {n} out of range"))
                                })?;
                                e = if neg { -v } else { v };
                            }
                            other => {
                                return Err(Error::InvalidInput(format!(
                                    "expected exponent after `^`, found {other:?}"
                                )));
                            }
                        }
                    }
                    *exps.entry(name).or_insert(0) += e;
                }
                other => {
                    return Err(Error::InvalidInput(format!(
                        "expected a factor, found {other:?}"
                    )));
                }
            }
            if matches!(self.peek(), Some(Token::Star)) {
                self.next();
                continue;
            }
            break;
        }
        exps.retain(|_, e| *e != 0);
        Ok((exps, coeff))
    }
}

/// Parses the text form of a multivariate Laurent polynomial.
pub fn parse_multipoly(input: &str) -> Result<MultiPoly> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::InvalidInput("empty polynomial".into()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let mut raw: Vec<(BTreeMap<String, i32>, BigInt)> = Vec::new();
    let mut negate = match p.peek() {
        Some(Token::Minus) => {
            p.next();
            true
        }
        Some(Token::Plus) => {
            p.next();
            false
        }
        _ => false,
    };
    loop {
        raw.push(p.term(negate)?);
        match p.next() {
            None => break,
            Some(Token::Plus) => negate = false,
            Some(Token::Minus) => negate = true,
            Some(other) => {
                return Err(Error::InvalidInput(format!(
                    "expected `+` or `-` between terms, found {other:?}"
                )));
            }
        }
    }
    let mut vars: Vec<String> = raw
        .iter()
        .flat_map(|(exps, _)| exps.keys().cloned())
        .collect();
    vars.sort();
    vars.dedup();
    let terms = raw
        .into_iter()
        .map(|(exps, c)| {
            let vec = vars
                .iter()
                .map(|v| exps.get(v).copied().unwrap_or(0))
                .collect();
            (vec, c)
        })
        .collect();
    MultiPoly::from_terms(vars, terms)
}

impl FromStr for MultiPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_multipoly(s)
    }
}

/// Wire form of a polynomial: sorted variable context plus terms as
/// (exponent vector, decimal coefficient) pairs in descending graded-lex
/// order.
#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<(Vec<i32>, String)>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let c = self.compact();
        let terms = c
            .terms()
            .map(|(m, coeff)| (m.0.clone(), coeff.to_string()))
            .rev()
            .collect();
        PolyJson { vars: c.vars().to_vec(), terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for (exps, c) in raw.terms {
            let coeff = BigInt::from_str(&c)
                .map_err(|e| D::Error::custom(format!("bad coefficient `{c}`: {e}")))?;
            terms.push((exps, coeff));
        }
        MultiPoly::from_terms(raw.vars, terms).map_err(D::Error::custom)
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_multi().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let m = MultiPoly::deserialize(deserializer)?;
        let var = m
            .vars()
            .first()
            .cloned()
            .unwrap_or_else(|| "x".to_string());
        m.to_unipoly(&var).map_err(D::Error::custom)
    }
}

/// Parses the text form into a univariate polynomial in the expected
/// variable; constants are accepted.
pub fn parse_unipoly(input: &str, var: &str) -> Result<UniPoly> {
    let m = parse_multipoly(input)?;
    m.to_unipoly(var)
}
