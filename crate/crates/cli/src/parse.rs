//! Surface syntax for braid words.
//!
//! ```text
//! expr := term*
//! term := atom ('^' INT)*
//! atom := 's' INT | 'D' INT | 'W' INT | 'F' INT | 'A' INT ',' INT | 'e' | '(' expr ')'
//! ```
//!
//! `D m` is the half twist on `m` strands, `W n` the block crossing on `2n`
//! strands, `F m` the full twist and `A i,j` a pure generator. Named braids on
//! fewer strands than declared sit on the leftmost strands.

use std::fmt;

use mixbraid::braid::{a_gen, delta, full_twist, omega};
use mixbraid::BraidWord;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("index error: {0}")]
    Index(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Gen(usize),
    Delta(usize),
    Omega(usize),
    FullTwist(usize),
    A(usize, usize),
    Identity,
    Group(BraidExpr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub atom: Atom,
    /// Applied left to right: `x^2^-1` is `(x^2)^-1`.
    pub exponents: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BraidExpr(pub Vec<Term>);

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Gen(i) => write!(f, "s{i}"),
            Atom::Delta(m) => write!(f, "D{m}"),
            Atom::Omega(n) => write!(f, "W{n}"),
            Atom::FullTwist(m) => write!(f, "F{m}"),
            Atom::A(i, j) => write!(f, "A{i},{j}"),
            Atom::Identity => write!(f, "e"),
            Atom::Group(e) => write!(f, "({e})"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.atom)?;
        for k in &self.exponents {
            write!(f, "^{k}")?;
        }
        Ok(())
    }
}

impl fmt::Display for BraidExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn unsigned(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn signed(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let v = self.unsigned()?;
        let v = i64::try_from(v).or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })?;
        Ok(if negative { -v } else { v })
    }

    fn expr(&mut self, nested: bool) -> Result<BraidExpr, ParseError> {
        let mut terms = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None if nested => return self.err("expected ')'"),
                None => return Ok(BraidExpr(terms)),
                Some(b')') if nested => return Ok(BraidExpr(terms)),
                Some(b')') => return self.err("unmatched ')'"),
                Some(_) => terms.push(self.term()?),
            }
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let atom = self.atom()?;
        let mut exponents = Vec::new();
        loop {
            self.skip_ws();
            if self.peek() != Some(b'^') {
                break;
            }
            self.pos += 1;
            self.skip_ws();
            exponents.push(self.signed()?);
        }
        Ok(Term { atom, exponents })
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let Some(c) = self.peek() else {
            return self.err("expected a generator");
        };
        self.pos += 1;
        match c {
            b's' => Ok(Atom::Gen(self.unsigned()?)),
            b'D' => Ok(Atom::Delta(self.unsigned()?)),
            b'W' => Ok(Atom::Omega(self.unsigned()?)),
            b'F' => Ok(Atom::FullTwist(self.unsigned()?)),
            b'A' => {
                let i = self.unsigned()?;
                self.skip_ws();
                if self.peek() != Some(b',') {
                    return self.err("expected ',' in A i,j");
                }
                self.pos += 1;
                self.skip_ws();
                Ok(Atom::A(i, self.unsigned()?))
            }
            b'e' => Ok(Atom::Identity),
            b'(' => {
                let inner = self.expr(true)?;
                self.pos += 1;
                Ok(Atom::Group(inner))
            }
            _ => {
                self.pos -= 1;
                let ch = std::str::from_utf8(&self.src[self.pos..])
                    .ok()
                    .and_then(|s| s.chars().next())
                    .unwrap_or('?');
                self.err(format!("unexpected character {ch:?}"))
            }
        }
    }
}

pub fn parse_expr(text: &str) -> Result<BraidExpr, ParseError> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
    }
    .expr(false)
}

impl Atom {
    fn min_strands(&self) -> usize {
        match self {
            Atom::Gen(i) => i + 1,
            Atom::Delta(m) | Atom::FullTwist(m) => *m,
            Atom::Omega(n) => 2 * n,
            Atom::A(_, j) => *j,
            Atom::Identity => 1,
            Atom::Group(e) => e.min_strands(),
        }
    }
}

impl BraidExpr {
    /// Fewest strands on which every atom makes sense (at least one).
    pub fn min_strands(&self) -> usize {
        self.0
            .iter()
            .map(|t| t.atom.min_strands())
            .max()
            .unwrap_or(1)
            .max(1)
    }

    pub fn elaborate(&self, strands: usize) -> Result<BraidWord, ParseError> {
        if strands == 0 {
            return Err(ParseError::Index("at least one strand is required".into()));
        }
        let mut out = BraidWord::identity(strands);
        for t in &self.0 {
            let mut w = t.atom.elaborate(strands)?;
            for &k in &t.exponents {
                w = w.pow(k);
            }
            out = out.concat(&w).expect("same strand count");
        }
        Ok(out)
    }

    /// The word as a product of `s i` and `s i^-1` terms.
    pub fn from_word(w: &BraidWord) -> BraidExpr {
        BraidExpr(
            w.letters()
                .iter()
                .map(|l| Term {
                    atom: Atom::Gen(l.index),
                    exponents: if l.positive { vec![] } else { vec![-1] },
                })
                .collect(),
        )
    }
}

fn place(w: BraidWord, atom: &Atom, strands: usize) -> Result<BraidWord, ParseError> {
    if w.strands() > strands {
        return Err(ParseError::Index(format!(
            "{atom} needs {} strands but only {strands} are declared",
            w.strands()
        )));
    }
    w.shifted(0, strands)
        .map_err(|e| ParseError::Index(e.to_string()))
}

impl Atom {
    fn elaborate(&self, strands: usize) -> Result<BraidWord, ParseError> {
        let positive = |k: usize| {
            if k == 0 {
                Err(ParseError::Index(format!("{self} needs a positive size")))
            } else {
                Ok(k)
            }
        };
        match self {
            Atom::Gen(i) => {
                if *i == 0 || *i >= strands {
                    return Err(ParseError::Index(format!(
                        "generator s{i} needs 1 <= index <= {}",
                        strands.saturating_sub(1)
                    )));
                }
                Ok(BraidWord::generator(strands, *i).expect("index checked"))
            }
            Atom::Delta(m) => place(delta(positive(*m)?), self, strands),
            Atom::FullTwist(m) => place(full_twist(positive(*m)?), self, strands),
            Atom::Omega(n) => place(omega(positive(*n)?), self, strands),
            Atom::A(i, j) => {
                if *j > strands {
                    return Err(ParseError::Index(format!(
                        "{self} needs {j} strands but only {strands} are declared"
                    )));
                }
                a_gen(*i, *j, strands).map_err(|e| ParseError::Index(e.to_string()))
            }
            Atom::Identity => Ok(BraidWord::identity(strands)),
            Atom::Group(e) => e.elaborate(strands),
        }
    }
}

/// Parses and elaborates a braid word on `strands` strands.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord, ParseError> {
    parse_expr(text)?.elaborate(strands)
}
