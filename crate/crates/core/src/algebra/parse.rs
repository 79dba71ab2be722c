//! Recursive-descent parser for the plain-text polynomial grammar:
//! `+ - * / ^`, parentheses, integer literals, and identifiers matching
//! `[a-zA-Z][a-zA-Z0-9]*`. Multiplication may be implicit (`3x^2`, `2(x+y)`).
//! Division is only by nonzero constants.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(s[start..i].parse().unwrap())));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Tok::Ident(s[start..i].to_string())));
                continue;
            }
            other => return Err(Error::parse(i, format!("unexpected character `{other}`"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    vars: &'a [String],
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                -&self.term()?
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let at = self.offset();
                    let d = self.factor()?;
                    let c = d
                        .as_constant()
                        .filter(|c| !c.is_zero())
                        .ok_or_else(|| Error::parse(at, "division only by nonzero constants"))?;
                    acc = acc.scale(&c.recip());
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let at = self.offset();
            match self.bump() {
                Some(Tok::Num(n)) => {
                    let e = n
                        .to_u32()
                        .ok_or_else(|| Error::parse(at, "exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::parse(at, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Polynomial> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(Polynomial::constant_in(self.vars, Rational::from_integer(n))),
            Some(Tok::Ident(name)) => {
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::parse(at, format!("unknown variable `{name}`")))?;
                Ok(Polynomial::variable(self.vars, idx))
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::parse(self.offset(), "expected `)`")),
                }
            }
            Some(t) => Err(Error::parse(at, format!("unexpected token {t:?}"))),
            None => Err(Error::parse(at, "unexpected end of input")),
        }
    }
}

pub(crate) fn parse_polynomial(s: &str, vars: Option<&[String]>) -> Result<Polynomial> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    let found: Vec<String> = {
        let mut seen = Vec::new();
        for (_, t) in &toks {
            if let Tok::Ident(n) = t {
                if !seen.contains(n) {
                    seen.push(n.clone());
                }
            }
        }
        seen
    };
    let vars: Vec<String> = match vars {
        Some(v) => v.to_vec(),
        None => found,
    };
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        vars: &vars,
        end: s.len(),
    };
    let out = p.expr()?;
    if p.pos < toks.len() {
        return Err(Error::parse(p.offset(), "trailing input"));
    }
    Ok(out)
}
