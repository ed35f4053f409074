//! Expression parser for the polynomial grammar: integers, rationals p/q,
//! the field generator, declared variables, + - * / ^, unary minus,
//! parentheses. '*' is mandatory between factors; '^' binds tighter than '*'
//! binds tighter than '+'/'-'. Division requires a nonzero constant divisor.

use num::{BigInt, BigRational};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;
use crate::ring::{Ring, RingContext};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn lex(src: &str) -> Result<Lexer> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().unwrap();
                toks.push((start, Tok::Int(n)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((start, Tok::Ident(src[start..i].to_string())));
            }
            _ => return Err(err(i, format!("unexpected character '{c}'"))),
        }
    }
    Ok(Lexer {
        toks,
        pos: 0,
        len: src.len(),
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.len)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        let pos = self.here();
        match self.next() {
            Some(got) if got == t => Ok(()),
            _ => Err(err(pos, format!("expected {what}"))),
        }
    }
}

struct Parser<'a> {
    lx: Lexer,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.lx.peek() {
                Some(Tok::Plus) => {
                    self.lx.next();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.lx.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.lx.peek() {
                Some(Tok::Star) => {
                    self.lx.next();
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    let pos = self.lx.here();
                    self.lx.next();
                    let rhs = self.unary()?;
                    if !rhs.is_constant() {
                        return Err(err(pos, "divisor must be a nonzero constant"));
                    }
                    let c = rhs.constant_term();
                    let inv = self
                        .ring
                        .field
                        .inv(&c)
                        .map_err(|_| err(pos, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if let Some(Tok::Minus) = self.lx.peek() {
            self.lx.next();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.lx.peek() {
            let pos = self.lx.here();
            self.lx.next();
            match self.lx.next() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| err(pos, "exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(err(
                    pos,
                    "malformed exponent: expected a non-negative integer",
                )),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let pos = self.lx.here();
        match self.lx.next() {
            Some(Tok::Int(n)) => Ok(Polynomial::constant(
                self.ring,
                self.ring.field.from_rational(BigRational::from(n)),
            )),
            Some(Tok::Ident(name)) => {
                if let Some(i) = self.ring.var_index(&name) {
                    Ok(Polynomial::var(self.ring, i))
                } else if Some(name.as_str()) == self.ring.field.generator_name() {
                    Ok(Polynomial::constant(
                        self.ring,
                        self.ring.field.gen_power(1),
                    ))
                } else {
                    Err(err(pos, format!("unknown identifier '{name}'")))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.lx.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(err(pos, "expected a number, identifier, or '('")),
        }
    }
}

/// Parse an expression into a canonical polynomial over the given ring.
pub fn poly_parse(src: &str, ring: &Ring) -> Result<Polynomial> {
    let lx = lex(src)?;
    let mut p = Parser { lx, ring };
    let out = p.expr()?;
    if p.lx.peek().is_some() {
        return Err(err(p.lx.here(), "unexpected trailing input"));
    }
    Ok(out)
}

/// Parse a constant expression into a field element.
pub fn element_parse(src: &str, field: &Field) -> Result<FieldElement> {
    let scratch = RingContext::new(field.clone(), vec!["@x".to_string()])
        .map_err(|e| Error::Internal(e.to_string()))?;
    let p = poly_parse(src, &scratch)?;
    if !p.is_constant() {
        return Err(Error::Parse {
            pos: 0,
            msg: "expected a constant expression".into(),
        });
    }
    Ok(p.constant_term())
}
