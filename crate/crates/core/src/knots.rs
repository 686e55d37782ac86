//! Knot expressions over torus knots and their cables, and the complexes
//! they denote.
//!
//! ```text
//! expr   := term { "#" term }
//! term   := ["-"] factor
//! factor := INT "*" factor | atom
//! atom   := "U" | "T(" INT "," INT ")" | "C(" INT "," INT ";" expr ")" | "(" expr ")"
//! ```

use std::fmt;

use crate::cfk::{dual, staircase, tensor, BifilteredComplex};
use crate::error::{parse_err, Error, Result};
use crate::laurent::{cable_alexander, staircase_exponents, torus_alexander, LaurentPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KnotExpr {
    Unknot,
    Torus(i64, i64),
    /// `(s, t)`-cable, `s` the longitudinal winding.
    Cable(i64, i64, Box<KnotExpr>),
    Mirror(Box<KnotExpr>),
    Sum(Vec<KnotExpr>),
    /// `n` copies summed; negative `n` sums copies of the mirror.
    Multiple(i64, Box<KnotExpr>),
}

impl KnotExpr {
    pub fn mirror(e: KnotExpr) -> Self {
        KnotExpr::Mirror(Box::new(e))
    }

    pub fn cable(s: i64, t: i64, companion: KnotExpr) -> Self {
        KnotExpr::Cable(s, t, Box::new(companion))
    }

    pub fn multiple(n: i64, e: KnotExpr) -> Self {
        KnotExpr::Multiple(n, Box::new(e))
    }

    fn is_atom(&self) -> bool {
        matches!(
            self,
            KnotExpr::Unknot | KnotExpr::Torus(..) | KnotExpr::Cable(..)
        )
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // operands that would not read back as a factor get parentheses
        fn operand(e: &KnotExpr) -> String {
            match e {
                KnotExpr::Sum(_) | KnotExpr::Mirror(_) => format!("({e})"),
                KnotExpr::Multiple(n, _) if *n < 0 => format!("({e})"),
                _ => e.to_string(),
            }
        }
        match self {
            KnotExpr::Unknot => write!(f, "U"),
            KnotExpr::Torus(p, q) => write!(f, "T({p},{q})"),
            KnotExpr::Cable(s, t, k) => write!(f, "C({s},{t};{k})"),
            KnotExpr::Mirror(e) => write!(f, "-{}", operand(e)),
            KnotExpr::Sum(terms) => {
                let parts: Vec<String> = terms
                    .iter()
                    .map(|t| {
                        if matches!(t, KnotExpr::Sum(_)) {
                            format!("({t})")
                        } else {
                            t.to_string()
                        }
                    })
                    .collect();
                write!(f, "{}", parts.join(" # "))
            }
            KnotExpr::Multiple(n, e) if *n < 0 => {
                write!(f, "-({}*{})", n.unsigned_abs(), operand(e))
            }
            KnotExpr::Multiple(n, e) => write!(f, "{n}*{}", operand(e)),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        let column = self.text[..self.pos].chars().count() + 1;
        parse_err(format!("column {column}"), message)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = match self.peek() {
                Some(f) => format!("{f:?}"),
                None => "end of input".into(),
            };
            Err(self.error(format!("expected {c:?}, found {found}")))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[self.pos..];
        let sign = usize::from(rest.starts_with('-'));
        let digits = rest[sign..]
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        self.pos += sign + digits;
        self.text[start..self.pos].parse().map_err(|_| {
            self.pos = start;
            self.error("integer out of range")
        })
    }

    fn expr(&mut self) -> Result<KnotExpr> {
        let mut terms = vec![self.term()?];
        while self.eat('#') {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            KnotExpr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<KnotExpr> {
        if self.eat('-') {
            Ok(KnotExpr::mirror(self.factor()?))
        } else {
            self.factor()
        }
    }

    fn factor(&mut self) -> Result<KnotExpr> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.int()?;
            self.expect('*')?;
            return Ok(KnotExpr::multiple(n, self.factor()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<KnotExpr> {
        match self.peek() {
            Some('U') => {
                self.pos += 1;
                Ok(KnotExpr::Unknot)
            }
            Some('T') => {
                self.pos += 1;
                self.expect('(')?;
                let p = self.int()?;
                self.expect(',')?;
                let q = self.int()?;
                self.expect(')')?;
                Ok(KnotExpr::Torus(p, q))
            }
            Some('C') => {
                self.pos += 1;
                self.expect('(')?;
                let s = self.int()?;
                self.expect(',')?;
                let t = self.int()?;
                self.expect(';')?;
                let companion = self.expr()?;
                self.expect(')')?;
                Ok(KnotExpr::cable(s, t, companion))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) => Err(self.error(format!(
                "unexpected {c:?}; expected U, T(, C(, ( or a multiple"
            ))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

pub fn parse(text: &str) -> Result<KnotExpr> {
    let mut p = Parser { text, pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(c) => Err(p.error(format!("unexpected {c:?} after expression"))),
    }
}

/// Alexander polynomial, multiplicative under `#` and unchanged by mirroring.
pub fn alexander(e: &KnotExpr) -> Result<LaurentPoly> {
    match e {
        KnotExpr::Unknot => Ok(LaurentPoly::one()),
        KnotExpr::Torus(p, q) => torus_alexander(*p, *q),
        KnotExpr::Cable(s, t, k) => cable_alexander(*s, *t, &alexander(k)?),
        KnotExpr::Mirror(k) => alexander(k),
        KnotExpr::Sum(terms) => terms
            .iter()
            .try_fold(LaurentPoly::one(), |acc, t| Ok(&acc * &alexander(t)?)),
        KnotExpr::Multiple(n, k) => Ok(alexander(k)?.pow(n.unsigned_abs() as u32)),
    }
}

fn atom_complex(e: &KnotExpr) -> Result<BifilteredComplex> {
    let named = |err: Error| Error::Unsupported(format!("{e}: {err}"));
    match e {
        KnotExpr::Unknot => Ok(BifilteredComplex::unknot()),
        KnotExpr::Torus(..) => {
            let delta = alexander(e).map_err(named)?;
            Ok(staircase(&staircase_exponents(&delta).map_err(named)?))
        }
        KnotExpr::Cable(_, t, k) => {
            if !k.is_atom() {
                return Err(named(Error::Unsupported(
                    "cable companions must be U, T(p,q) or a cable".into(),
                )));
            }
            atom_complex(k).map_err(named)?;
            if *t < 0 {
                return Err(named(Error::Unsupported(
                    "negative cables of these companions are not L-space knots".into(),
                )));
            }
            let delta = alexander(e).map_err(named)?;
            Ok(staircase(&staircase_exponents(&delta).map_err(named)?))
        }
        _ => unreachable!("not an atom"),
    }
}

/// The complex of an expression: atoms become staircases, mirrors duals, and
/// sums and multiples tensor products.
pub fn build(e: &KnotExpr) -> Result<BifilteredComplex> {
    match e {
        KnotExpr::Unknot | KnotExpr::Torus(..) | KnotExpr::Cable(..) => atom_complex(e),
        KnotExpr::Mirror(k) => Ok(dual(&build(k)?)),
        KnotExpr::Sum(terms) => {
            let mut parts = terms.iter().map(build);
            let first = parts.next().expect("sums have terms")?;
            parts.try_fold(first, |acc, c| Ok(tensor(&acc, &c?)))
        }
        KnotExpr::Multiple(n, k) => {
            let one = if *n < 0 { dual(&build(k)?) } else { build(k)? };
            let mut acc = BifilteredComplex::unknot();
            for step in 0..n.unsigned_abs() {
                acc = if step == 0 {
                    one.clone()
                } else {
                    tensor(&acc, &one)
                };
            }
            Ok(acc)
        }
    }
}
