//! Parser for the plain-text forms printed by this crate:
//! `2*x1^2*x2 - 1/3`, `(x1 + x2)/(x1*x2)` and vector fields such as
//! `-2*x1*d/dx1 - x2*d/dx2`.

use std::collections::BTreeMap;
use std::str::FromStr;

use super::{Polynomial, Rational, RationalFunction, Vars};
use crate::error::{Error, Result};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Token {
    Int(BigInt),
    Ident(String),
    /// `d/d<name>`
    Direction(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '/' => {
                out.push(Token::Slash);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::LParen);
                i += 1
            }
            ')' => {
                out.push(Token::RParen);
                i += 1
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token::Int(s.parse().expect("digits")));
            }
            c if is_ident_start(c) => {
                // `d/d<ident>` is a single direction token
                if c == 'd'
                    && chars.get(i + 1) == Some(&'/')
                    && chars.get(i + 2) == Some(&'d')
                    && chars.get(i + 3).is_some_and(|&c| is_ident_start(c))
                {
                    let start = i + 3;
                    let mut j = start;
                    while j < chars.len() && is_ident_char(chars[j]) {
                        j += 1;
                    }
                    out.push(Token::Direction(chars[start..j].iter().collect()));
                    i = j;
                    continue;
                }
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character `{other}` in `{src}`"
                )))
            }
        }
    }
    Ok(out)
}

/// Intermediate value: a scalar plus formal linear atoms (directions).
#[derive(Clone, Debug)]
pub(crate) struct Value {
    pub scalar: RationalFunction,
    pub atoms: BTreeMap<usize, RationalFunction>,
}

impl Value {
    fn scalar(s: RationalFunction) -> Self {
        Value {
            scalar: s,
            atoms: BTreeMap::new(),
        }
    }

    fn is_scalar(&self) -> bool {
        self.atoms.is_empty()
    }

    fn add(mut self, other: Value) -> Value {
        self.scalar = &self.scalar + &other.scalar;
        for (k, v) in other.atoms {
            let e = self
                .atoms
                .entry(k)
                .or_insert_with(|| RationalFunction::zero(v.vars().clone()));
            *e = &*e + &v;
        }
        self.atoms.retain(|_, v| !v.is_zero());
        self
    }

    fn neg(self) -> Value {
        Value {
            scalar: -self.scalar,
            atoms: self.atoms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }

    fn scale(self, s: &RationalFunction) -> Value {
        let mut atoms: BTreeMap<usize, RationalFunction> =
            self.atoms.into_iter().map(|(k, v)| (k, &v * s)).collect();
        atoms.retain(|_, v| !v.is_zero());
        Value {
            scalar: &self.scalar * s,
            atoms,
        }
    }
}

pub(crate) struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a Vars,
    /// Number of leading variables that may appear as `d/d<var>` atoms.
    directions: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    pub fn new(src: &'a str, vars: &'a Vars, directions: usize) -> Result<Self> {
        Ok(Parser {
            tokens: tokenize(src)?,
            pos: 0,
            vars,
            directions,
            src,
        })
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in `{}`", self.src))
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    pub fn parse_all(mut self) -> Result<Value> {
        if self.tokens.is_empty() {
            return Err(self.err("empty expression"));
        }
        let v = self.expr()?;
        if self.pos != self.tokens.len() {
            return Err(self.err("trailing input"));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        // polynomial summands are merged in one pass; adding them one at a
        // time is quadratic in the number of terms
        let mut poly = Vec::new();
        let mut push = |v: Value, acc: &mut Value| {
            if v.is_scalar() && v.scalar.is_polynomial() {
                poly.extend(
                    v.scalar
                        .numer()
                        .terms()
                        .map(|(m, c)| (m.clone(), c.clone())),
                );
            } else {
                *acc = std::mem::replace(
                    acc,
                    Value::scalar(RationalFunction::zero(self.vars.clone())),
                )
                .add(v);
            }
        };
        let mut rest = Value::scalar(RationalFunction::zero(self.vars.clone()));
        push(acc, &mut rest);
        loop {
            let negate = match self.peek() {
                Some(Token::Plus) => false,
                Some(Token::Minus) => true,
                _ => break,
            };
            self.pos += 1;
            let t = self.term()?;
            push(if negate { t.neg() } else { t }, &mut rest);
        }
        acc = Value::scalar(RationalFunction::from_polynomial(Polynomial::from_terms(
            self.vars.clone(),
            poly,
        )));
        Ok(acc.add(rest))
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = if rhs.is_scalar() {
                        acc.scale(&rhs.scalar)
                    } else if acc.is_scalar() {
                        rhs.scale(&acc.scalar)
                    } else {
                        return Err(self.err("product of two derivations"));
                    };
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    if !rhs.is_scalar() {
                        return Err(self.err("division by a derivation"));
                    }
                    let inv = rhs.scalar.inv().map_err(|_| self.err("division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Value> {
        if let Some(Token::Minus) = self.peek() {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.base()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            let e = match self.next() {
                Some(Token::Int(n)) => {
                    u32::try_from(n).map_err(|_| self.err("exponent too large"))?
                }
                _ => return Err(self.err("expected a nonnegative integer exponent")),
            };
            if !base.is_scalar() {
                return Err(self.err("power of a derivation"));
            }
            return Ok(Value::scalar(base.scalar.pow(e)));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Value> {
        match self.next() {
            Some(Token::Int(n)) => Ok(Value::scalar(RationalFunction::constant(
                self.vars.clone(),
                Rational::from_integer(n),
            ))),
            Some(Token::Ident(name)) => match self.vars.index_of(&name) {
                Some(i) => Ok(Value::scalar(RationalFunction::var(self.vars.clone(), i))),
                None => Err(self.err(&format!("unknown variable `{name}`"))),
            },
            Some(Token::Direction(name)) => match self.vars.index_of(&name) {
                Some(i) if i < self.directions => {
                    let mut atoms = BTreeMap::new();
                    atoms.insert(i, RationalFunction::one(self.vars.clone()));
                    Ok(Value {
                        scalar: RationalFunction::zero(self.vars.clone()),
                        atoms,
                    })
                }
                _ => Err(self.err(&format!("`d/d{name}` is not a derivation direction"))),
            },
            Some(Token::LParen) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(v),
                    _ => Err(self.err("missing `)`")),
                }
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

/// Parses a rational number such as `-3/4`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::Parse(format!("not a rational number: `{s}`")))
}

/// Parses a rational function over `vars`.
pub fn parse_rational_function(s: &str, vars: &Vars) -> Result<RationalFunction> {
    let v = Parser::new(s, vars, 0)?.parse_all()?;
    Ok(v.scalar)
}

/// Parses a polynomial over `vars`; fails if the expression has a
/// nonconstant denominator.
pub fn parse_polynomial(s: &str, vars: &Vars) -> Result<Polynomial> {
    let f = parse_rational_function(s, vars)?;
    match f.as_polynomial() {
        Some(p) => Ok(p.clone()),
        None => Err(Error::Parse(format!("`{s}` is not a polynomial"))),
    }
}
