//! Polynomial text grammar.
//!
//! ```text
//! list   := expr (',' expr)*
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ['/' integer] | identifier | '(' expr ')'
//! ```
//!
//! Juxtaposition is rejected: `2x` must be written `2*x`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Polynomial, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    column: usize,
}

fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Int(s.parse().expect("digits")),
                column,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                column,
            });
        } else if "+-*^/(),".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                column,
            });
            i += 1;
        } else {
            return Err(Error::Syntax {
                line,
                column,
                token: out.len() + 1,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

pub(crate) struct PolyParser<'a> {
    ring: &'a Ring,
    tokens: Vec<Token>,
    pos: usize,
    line: usize,
    end_column: usize,
    lex_error: Option<Error>,
}

impl<'a> PolyParser<'a> {
    /// `line` and `col0` locate `text` inside a larger document for error messages.
    pub(crate) fn new(ring: &'a Ring, text: &str, line: usize, col0: usize) -> Self {
        let (tokens, lex_error) = match tokenize(text, line, col0) {
            Ok(t) => (t, None),
            Err(e) => (Vec::new(), Some(e)),
        };
        PolyParser {
            ring,
            tokens,
            pos: 0,
            line,
            end_column: col0 + text.chars().count(),
            lex_error,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let column = self
            .tokens
            .get(self.pos)
            .map(|t| t.column)
            .unwrap_or(self.end_column);
        Error::Syntax {
            line: self.line,
            column,
            token: self.pos + 1,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn parse_all(mut self) -> Result<Polynomial> {
        if let Some(e) = self.lex_error.take() {
            return Err(e);
        }
        let p = self.expr()?;
        if self.pos != self.tokens.len() {
            return Err(self.error("expected operator or end of input"));
        }
        Ok(p)
    }

    pub(crate) fn parse_list(mut self) -> Result<Vec<Polynomial>> {
        if let Some(e) = self.lex_error.take() {
            return Err(e);
        }
        let mut out = vec![self.expr()?];
        while self.eat(',') {
            out.push(self.expr()?);
        }
        if self.pos != self.tokens.len() {
            return Err(self.error("expected `,` or end of input"));
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let n = self.ring.nvars();
        let mut acc = Polynomial::zero(n);
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(e)) => {
                    self.pos += 1;
                    let e: u32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.error("expected non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let n = self.ring.nvars();
        match self.peek().cloned() {
            Some(Tok::Int(num)) => {
                self.pos += 1;
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Int(den)) if !den.is_zero() => {
                            self.pos += 1;
                            Ok(Polynomial::constant(n, Rational::new(num, den)))
                        }
                        Some(Tok::Int(_)) => Err(self.error("zero denominator")),
                        _ => Err(self.error("expected integer denominator")),
                    }
                } else {
                    Ok(Polynomial::constant(n, Rational::from_integer(num)))
                }
            }
            Some(Tok::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Polynomial::var(n, i))
                }
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(e)
            }
            _ => Err(self.error("expected number, variable or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::new(["x", "y"]).unwrap()
    }

    #[test]
    fn parses_rationals_and_powers() {
        let r = ring();
        let p = r.parse("1/2*x^2 - (x + y)^2 + 2*x*y").unwrap();
        assert_eq!(p, r.parse("-1/2*x^2 - y^2").unwrap());
    }

    #[test]
    fn juxtaposition_rejected() {
        let r = ring();
        match r.parse("2x") {
            Err(Error::Syntax { token, .. }) => assert_eq!(token, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_variable() {
        assert_eq!(
            ring().parse("x + w"),
            Err(Error::UnknownVariable("w".into()))
        );
    }

    #[test]
    fn lists() {
        let r = ring();
        let l = r.parse_list("x, y^2, x - y").unwrap();
        assert_eq!(l.len(), 3);
        assert!(r.parse_list("").unwrap().is_empty());
        assert!(r.parse_list("x,,y").is_err());
    }
}
