//! Recursive-descent reader for the plain-text form of Q(α) elements.
//!
//! Accepts everything [`AlphaFrac`]'s `Display` produces, plus `*`, `·`,
//! whitespace, and the spellings `α`, `a`, `alpha` for the indeterminate.
//! Juxtaposition multiplies with the same precedence as `*` and `/`, so
//! `1/2α` is `(1/2)·α`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{AlphaFrac, FieldError};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Alpha,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Token>, FieldError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Token::Int(digits.parse().expect("ascii digits")));
            }
            'α' => out.push(Token::Alpha),
            'a' => {
                let rest: String = chars[i..].iter().take(5).collect();
                if rest == "alpha" {
                    i += 4;
                }
                out.push(Token::Alpha);
            }
            '+' => out.push(Token::Plus),
            '-' | '−' => out.push(Token::Minus),
            '*' | '·' => out.push(Token::Star),
            '/' => out.push(Token::Slash),
            '^' => out.push(Token::Caret),
            '(' => out.push(Token::LParen),
            ')' => out.push(Token::RParen),
            other => {
                return Err(FieldError::Parse(format!(
                    "unexpected character {other:?} at offset {i}"
                )))
            }
        }
        i += 1;
    }
    Ok(out)
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
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<AlphaFrac, FieldError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<AlphaFrac, FieldError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs)?;
                }
                Some(Token::Int(_) | Token::Alpha | Token::LParen) => {
                    acc = acc * self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<AlphaFrac, FieldError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<AlphaFrac, FieldError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let exp = match self.next() {
            Some(Token::Int(k)) => {
                i32::try_from(k).map_err(|_| FieldError::Parse("exponent too large".into()))?
            }
            other => {
                return Err(FieldError::Parse(format!(
                    "expected integer exponent, found {other:?}"
                )))
            }
        };
        base.pow(if negative { -exp } else { exp })
    }

    fn atom(&mut self) -> Result<AlphaFrac, FieldError> {
        match self.next() {
            Some(Token::Int(k)) => Ok(AlphaFrac::from_rational(BigRational::from_integer(k))),
            Some(Token::Alpha) => Ok(AlphaFrac::alpha()),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(FieldError::Parse("unbalanced parenthesis".into())),
                }
            }
            other => Err(FieldError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl FromStr for AlphaFrac {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens = tokenize(s)?;
        if tokens.is_empty() {
            return Err(FieldError::Parse("empty expression".into()));
        }
        let mut p = Parser { tokens, pos: 0 };
        let v = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(FieldError::Parse(format!(
                "trailing input after token {}",
                p.pos
            )));
        }
        Ok(v)
    }
}
