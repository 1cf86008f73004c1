//! Words in the free group on the two generators `x` and `y`.

use std::fmt;

use crate::error::{Error, Result};

/// Generator of the rank-two free group behind a two-bridge presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X,
    Y,
}

impl Gen {
    /// Name used by the word grammar and in displays.
    pub fn name(self) -> &'static str {
        match self {
            Gen::X => "x",
            Gen::Y => "y",
        }
    }
}

/// A word in `x` and `y`, stored as single letters with exponent `+1` or
/// `-1`.  Construction never reduces; call [`Word::freely_reduced`] when a
/// reduced representative is wanted.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word {
    letters: Vec<(Gen, i8)>,
}

impl Word {
    /// The empty word.
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    /// A single generator.
    pub fn gen(g: Gen) -> Self {
        Word { letters: vec![(g, 1)] }
    }

    /// A single letter with exponent `+1` or `-1`.
    pub fn letter(g: Gen, exp: i8) -> Result<Self> {
        if exp != 1 && exp != -1 {
            return Err(Error::InvalidInput(format!("letter exponent must be ±1, got {exp}")));
        }
        Ok(Word { letters: vec![(g, exp)] })
    }

    /// The letters in order.
    pub fn letters(&self) -> &[(Gen, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation, without free reduction.
    pub fn mul(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// The inverse word: letters reversed with exponents flipped.
    pub fn inverse(&self) -> Self {
        let letters = self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect();
        Word { letters }
    }

    /// Integer power; negative exponents use the inverse word.
    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(self.letters.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word { letters }
    }

    /// The commutator `a b a^{-1} b^{-1}`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// The freely reduced representative: adjacent inverse pairs cancelled.
    pub fn freely_reduced(&self) -> Self {
        let mut out: Vec<(Gen, i8)> = Vec::with_capacity(self.letters.len());
        for &(g, e) in &self.letters {
            match out.last() {
                Some(&(h, f)) if h == g && f == -e => {
                    out.pop();
                }
                _ => out.push((g, e)),
            }
        }
        Word { letters: out }
    }

    /// Prefix consisting of the first `n` letters.
    pub fn prefix(&self, n: usize) -> Self {
        Word { letters: self.letters[..n].to_vec() }
    }

    /// Sum of letter exponents per generator, i.e. the image in the
    /// abelianization, as `(x exponent, y exponent)`.
    pub fn exponent_sums(&self) -> (i64, i64) {
        let mut x = 0i64;
        let mut y = 0i64;
        for &(g, e) in &self.letters {
            match g {
                Gen::X => x += i64::from(e),
                Gen::Y => y += i64::from(e),
            }
        }
        (x, y)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "{}", g.name())?;
            } else {
                write!(f, "{}^-1", g.name())?;
            }
        }
        Ok(())
    }
}

/// Parses the word grammar: generators `x` and `y`, `^` integer powers,
/// juxtaposition as product, `[a,b]` for the commutator `a b a^{-1} b^{-1}`,
/// and parentheses for grouping.
pub fn parse_word(text: &str) -> Result<Word> {
    let bytes: Vec<char> = text.chars().collect();
    let mut parser = WordParser { chars: &bytes, pos: 0 };
    let word = parser.word(&[])?;
    parser.skip_ws();
    if parser.pos != parser.chars.len() {
        return Err(Error::InvalidInput(format!(
            "unexpected `{}` at offset {} in word",
            parser.chars[parser.pos], parser.pos
        )));
    }
    Ok(word)
}

struct WordParser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl WordParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// Parses a juxtaposed product until one of `stop` or end of input.
    fn word(&mut self, stop: &[char]) -> Result<Word> {
        let mut acc = Word::identity();
        loop {
            match self.peek() {
                None => return Ok(acc),
                Some(c) if stop.contains(&c) => return Ok(acc),
                Some(_) => {
                    let item = self.item()?;
                    acc = acc.mul(&item);
                }
            }
        }
    }

    fn item(&mut self) -> Result<Word> {
        let atom = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let n = self.integer()?;
            Ok(atom.pow(n))
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(Word::gen(Gen::X))
            }
            Some('y') => {
                self.pos += 1;
                Ok(Word::gen(Gen::Y))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.word(&[')'])?;
                if self.peek() != Some(')') {
                    return Err(Error::InvalidInput("unbalanced `(` in word".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('[') => {
                self.pos += 1;
                let a = self.word(&[',', ']'])?;
                if self.peek() != Some(',') {
                    return Err(Error::InvalidInput("expected `,` inside commutator bracket".into()));
                }
                self.pos += 1;
                let b = self.word(&[']', ','])?;
                if self.peek() != Some(']') {
                    return Err(Error::InvalidInput("unbalanced `[` in word".into()));
                }
                self.pos += 1;
                Ok(Word::commutator(&a, &b))
            }
            Some(c) => Err(Error::InvalidInput(format!(
                "unknown generator `{c}` at offset {} in word",
                self.pos
            ))),
            None => Err(Error::InvalidInput("unexpected end of word".into())),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') || self.peek() == Some('+') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(Error::InvalidInput(format!(
                "malformed exponent at offset {start} in word"
            )));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<i64>()
            .map_err(|_| Error::InvalidInput(format!("exponent `{text}` out of range")))
    }
}
