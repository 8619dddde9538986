//! Polynomial text grammar: variables `[a-zA-Z][a-zA-Z0-9]*`, integer and
//! `p/q` rational literals, operators `+ - * ^`, parentheses. Implicit
//! multiplication is not allowed.

use super::{PolyError, Polynomial, Ring};
use crate::numeric::Rational;
use num::bigint::BigInt;
use num::One;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Number(Rational),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>, PolyError> {
    let bytes: Vec<char> = input.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = bytes[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| PolyError::Parse("bad integer".into()))?;
                // A '/' directly after an integer continues a rational literal.
                if i < bytes.len() && bytes[i] == '/' {
                    i += 1;
                    let dstart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return Err(PolyError::Parse("expected denominator digits after '/'".into()));
                    }
                    let denom: BigInt = bytes[dstart..i]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| PolyError::Parse("bad denominator".into()))?;
                    if denom == BigInt::from(0) {
                        return Err(PolyError::Parse("zero denominator in literal".into()));
                    }
                    out.push(Token::Number(Rational::new(numer, denom)));
                } else {
                    out.push(Token::Number(Rational::from_integer(numer)));
                }
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                i += 1;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric()) {
                    i += 1;
                }
                out.push(Token::Ident(bytes[start..i].iter().collect()));
            }
            '/' => {
                return Err(PolyError::Parse(
                    "'/' is only allowed inside a rational literal like 2/3".into(),
                ))
            }
            other => {
                return Err(PolyError::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
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

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            self.next();
            negate = true;
        } else if self.peek() == Some(&Token::Plus) {
            self.next();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Token::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.next();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.base()?;
        if self.peek() == Some(&Token::Caret) {
            self.next();
            match self.next() {
                Some(Token::Number(n)) if n.denom().is_one() && !num::Signed::is_negative(n.numer()) => {
                    let e: u32 = n
                        .numer()
                        .to_string()
                        .parse()
                        .map_err(|_| PolyError::Parse("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(PolyError::Parse("expected a non-negative integer exponent".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial, PolyError> {
        match self.next() {
            Some(Token::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(e),
                    _ => Err(PolyError::Parse("missing `)`".into())),
                }
            }
            Some(Token::Ident(name)) => Polynomial::var(self.ring, &name),
            Some(Token::Number(n)) => Ok(Polynomial::constant(self.ring, n)),
            Some(Token::Minus) => {
                // Allow a unary minus directly before a base, e.g. `2*-3` is
                // rejected but `(-x)` and leading `-x` are handled in expr;
                // reaching here means a stray minus.
                Err(PolyError::Parse("unexpected `-`".into()))
            }
            other => Err(PolyError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse a polynomial in the given ring.
pub fn parse_polynomial(ring: &Ring, input: &str) -> Result<Polynomial, PolyError> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(PolyError::Parse("empty input".into()));
    }
    let mut p = Parser { ring, tokens, pos: 0 };
    let poly = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(PolyError::Parse("trailing input".into()));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_round_trip() {
        let r = Ring::new(vec!["x", "y", "z"]);
        for s in ["x^2 + y - 3*z", "2*x*y - 1/2*z^3", "-x + 1", "0"] {
            let p = parse_polynomial(&r, s).unwrap();
            assert_eq!(p.to_canonical_string(), s);
        }
    }

    #[test]
    fn rejects_implicit_multiplication() {
        let r = Ring::new(vec!["x", "y", "z"]);
        assert!(parse_polynomial(&r, "2x").is_err());
        assert!(parse_polynomial(&r, "x y").is_err());
        assert!(parse_polynomial(&r, "2*x").is_ok());
    }

    #[test]
    fn rejects_unknown_variable_and_division() {
        let r = Ring::new(vec!["x", "y"]);
        assert!(matches!(
            parse_polynomial(&r, "x + w"),
            Err(PolyError::UnknownVariable(_))
        ));
        assert!(parse_polynomial(&r, "x/2").is_err());
        assert!(parse_polynomial(&r, "1/2*x").is_ok());
    }

    #[test]
    fn parenthesized_expressions() {
        let r = Ring::new(vec!["x", "y"]);
        let p = parse_polynomial(&r, "(x + y)^2 - (x - y)^2").unwrap();
        assert_eq!(p.to_canonical_string(), "4*x*y");
    }
}
