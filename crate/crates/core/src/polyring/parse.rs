//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := number | variable | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants, which covers rational
//! coefficients written as `1/12*x^4`.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{format::var_name, ExponentVector, Polynomial};
use crate::scalar::parse_rational;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            Self::Syntax { pos, .. } | Self::UnknownVariable { pos, .. } | Self::NegativeExponent { pos } => *pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

impl Lexer {
    fn new(text: &str) -> Result<Self, ParseError> {
        let chars: Vec<(usize, char)> = text.char_indices().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let (pos, c) = chars[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() || c == '.' {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_digit() || chars[i].1 == '.') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                toks.push((Tok::Num(s), pos));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                toks.push((Tok::Ident(s), pos));
            } else if "+-*/^()".contains(c) {
                toks.push((Tok::Op(c), pos));
                i += 1;
            } else {
                return Err(ParseError::Syntax { pos, message: format!("unexpected character `{c}`") });
            }
        }
        toks.push((Tok::End, text.len()));
        Ok(Self { toks })
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    n: usize,
}

type PResult = Result<Polynomial<Rational>, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax { pos: self.pos(), message: message.into() }
    }

    fn expr(&mut self) -> PResult {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Op('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Op('/') => {
                    let pos = self.pos();
                    self.bump();
                    let divisor = self.unary()?;
                    let c = constant_value(&divisor).ok_or_else(|| ParseError::Syntax {
                        pos,
                        message: "division by a non-constant expression".into(),
                    })?;
                    if c.is_zero() {
                        return Err(ParseError::Syntax { pos, message: "division by zero".into() });
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> PResult {
        match self.peek() {
            Tok::Op('-') => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Op('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> PResult {
        let base = self.atom()?;
        if self.peek() != &Tok::Op('^') {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            (Tok::Num(s), _) => {
                let e: u32 = s.parse().map_err(|_| ParseError::Syntax {
                    pos,
                    message: format!("exponent `{s}` is not a non-negative integer"),
                })?;
                Ok(base.pow(e))
            }
            (Tok::Op('-'), _) => Err(ParseError::NegativeExponent { pos }),
            _ => Err(ParseError::Syntax { pos, message: "expected integer exponent".into() }),
        }
    }

    fn atom(&mut self) -> PResult {
        let n = self.n;
        match self.bump() {
            (Tok::Num(s), pos) => {
                let v = parse_rational(&s)
                    .ok_or_else(|| ParseError::Syntax { pos, message: format!("malformed number `{s}`") })?;
                Ok(Polynomial::constant(n, v))
            }
            (Tok::Ident(name), pos) => variable(&name, n)
                .ok_or(ParseError::UnknownVariable { pos, name }),
            (Tok::Op('('), _) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::Op(')'), _) => Ok(inner),
                    (_, pos) => Err(ParseError::Syntax { pos, message: "expected `)`".into() }),
                }
            }
            (Tok::End, pos) => Err(ParseError::Syntax { pos, message: "unexpected end of input".into() }),
            (tok, pos) => Err(ParseError::Syntax { pos, message: format!("unexpected token {tok:?}") }),
        }
    }
}

fn variable(name: &str, n: usize) -> Option<Polynomial<Rational>> {
    if name == "t" {
        return Some(Polynomial::t(n));
    }
    if let Some(idx) = name.strip_prefix('x').filter(|s| !s.is_empty()) {
        let i: usize = idx.parse().ok()?;
        return (1..=n).contains(&i).then(|| Polynomial::x(n, i - 1));
    }
    (0..n.min(3)).find(|&i| var_name(3, i) == name).map(|i| Polynomial::x(n, i))
}

fn constant_value(p: &Polynomial<Rational>) -> Option<Rational> {
    let n = p.spatial_dim();
    match p.num_terms() {
        0 => Some(Rational::from_integer(BigInt::zero())),
        1 => {
            let (e, c) = p.terms().next()?;
            (*e == ExponentVector::constant(n)).then(|| c.clone())
        }
        _ => None,
    }
}

/// Parses an expression in `x1..xn` (aliases `x, y, z` for `n <= 3`) and `t`.
pub fn parse_poly(text: &str, n: usize) -> Result<Polynomial<Rational>, ParseError> {
    let lexer = Lexer::new(text)?;
    let mut parser = Parser { toks: lexer.toks, at: 0, n };
    let p = parser.expr()?;
    if parser.peek() != &Tok::End {
        return Err(parser.syntax("trailing input"));
    }
    Ok(p)
}
