//! Polynomial expressions in x: integer and p/q literals, + - * ^ and
//! parentheses. Multiplication must be written out.


use crate::error::{Error, Result};
use crate::exactmath::rational::parse_rational;
use crate::exactmath::{Rational, UniPoly};

/// Exponents above this are rejected to keep inputs small.
const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        let tok = match c {
            ' ' | '\t' | '\n' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                if i < b.len() && b[i] == b'/' {
                    i += 1;
                    let d = i;
                    while i < b.len() && b[i].is_ascii_digit() {
                        i += 1;
                    }
                    if d == i {
                        return Err(err(d, "expected a denominator after '/'"));
                    }
                }
                let text = &src[start..i];
                let v = parse_rational(text).ok_or_else(|| err(start, format!("bad literal `{text}`")))?;
                out.push((start, Tok::Num(v)));
                continue;
            }
            'x' | 'X' => Tok::X,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '/' => return Err(err(i, "division is only allowed inside a literal p/q")),
            _ => return Err(err(i, format!("unexpected character `{c}`"))),
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn expr(&mut self) -> Result<UniPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<UniPoly> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.at += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<UniPoly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.at += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<UniPoly> {
        let base = self.atom()?;
        let base = if let Some(Tok::Caret) = self.peek() {
            self.at += 1;
            let pos = self.pos();
            match self.peek() {
                Some(Tok::Num(n)) if n.is_integer() => {
                    let e: u32 = n
                        .to_integer()
                        .try_into()
                        .ok()
                        .filter(|e| *e <= MAX_EXPONENT)
                        .ok_or_else(|| err(pos, format!("exponent above {MAX_EXPONENT}")))?;
                    self.at += 1;
                    base.pow(e)
                }
                _ => return Err(err(pos, "expected a nonnegative integer exponent")),
            }
        } else {
            base
        };
        if matches!(self.peek(), Some(Tok::Num(_) | Tok::X | Tok::LParen)) {
            return Err(err(self.pos(), "implicit multiplication is not allowed, write `*`"));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<UniPoly> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else {
            return Err(err(pos, "unexpected end of input"));
        };
        self.at += 1;
        match tok {
            Tok::Num(v) => Ok(UniPoly::constant(v)),
            Tok::X => Ok(UniPoly::x()),
            Tok::LParen => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    _ => Err(err(self.pos(), "expected `)`")),
                }
            }
            t => Err(err(pos, format!("unexpected {t:?}"))),
        }
    }
}

pub fn parse_poly(src: &str) -> Result<UniPoly> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(err(0, "empty expression"));
    }
    let mut p = Parser { toks, at: 0, end: src.len() };
    let f = p.expr()?;
    if p.at < p.toks.len() {
        return Err(err(p.pos(), "unexpected trailing input"));
    }
    Ok(f)
}

/// "c_n,...,c_0", degree-descending.
pub fn parse_coeffs(src: &str) -> Result<UniPoly> {
    let mut cs = Vec::new();
    let mut pos = 0;
    for part in src.split(',') {
        let text = part.trim();
        let v = parse_rational(text).ok_or_else(|| err(pos, format!("bad coefficient `{text}`")))?;
        cs.push(v);
        pos += part.len() + 1;
    }
    cs.reverse();
    let f = UniPoly::new(cs);
    if f.is_zero() {
        return Err(err(0, "zero polynomial"));
    }
    Ok(f)
}
