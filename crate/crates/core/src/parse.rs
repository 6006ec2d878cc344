//! Polynomial expression parser.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := base ('^' nat)?
//! base   := nat | var | '(' expr ')'
//! var    := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! Implicit multiplication is accepted only when the next factor starts with a
//! variable or an opening parenthesis (`2x`, `x y`, `(x+1)(y-1)`).

use crate::context::Ring;
use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub pos: usize,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b',' => Tok::Comma,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token { tok: Tok::Num(text[start..i].to_string()), pos: start });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Token { tok: Tok::Ident(text[start..i].to_string()), pos: start });
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(Error::Syntax { pos: start, msg: format!("unexpected character `{ch}`") });
            }
        };
        out.push(Token { tok, pos: start });
        i += 1;
    }
    Ok(out)
}

pub(crate) struct Parser<'a> {
    toks: Vec<Token>,
    idx: usize,
    end: usize,
    pub ring: &'a Ring,
}

impl<'a> Parser<'a> {
    pub fn new(text: &str, ring: &'a Ring) -> Result<Self> {
        Ok(Parser { toks: tokenize(text)?, idx: 0, end: text.len(), ring })
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|t| &t.tok)
    }

    pub fn peek_at(&self, ahead: usize) -> Option<&Tok> {
        self.toks.get(self.idx + ahead).map(|t| &t.tok)
    }

    pub fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|t| t.pos).unwrap_or(self.end)
    }

    pub fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|t| t.tok.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    pub fn at_end(&self) -> bool {
        self.idx >= self.toks.len()
    }

    pub fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    pub fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.idx += 1;
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    pub fn finish(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.error("unexpected trailing input")
        }
    }

    pub fn expr(&mut self) -> Result<Poly> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                negate = true;
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    pub fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.checked_mul(&self.factor()?)?;
                }
                Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.checked_mul(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    pub fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let e = self.exponent()?;
            return base.pow(e as u64);
        }
        Ok(base)
    }

    pub fn exponent(&mut self) -> Result<u32> {
        match self.bump() {
            Some(Tok::Num(digits)) => digits.parse::<u32>().map_err(|_| Error::ExponentOverflow),
            _ => {
                self.idx = self.idx.saturating_sub(1);
                self.error("expected a natural-number exponent")
            }
        }
    }

    /// Parses a natural number literal and reduces it mod p.
    pub fn reduce_literal(&self, digits: &str) -> u64 {
        let p = self.ring.p() as u64;
        digits.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p)
    }

    fn base(&mut self) -> Result<Poly> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(digits)) => Ok(Poly::constant(self.ring, self.reduce_literal(&digits))),
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(Poly::var(self.ring, i)),
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(_) => Err(Error::Syntax { pos, msg: "expected a number, variable or `(`".into() }),
            None => Err(Error::Syntax { pos, msg: "unexpected end of input".into() }),
        }
    }
}

/// Parses and fully expands a polynomial expression in the given ring.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Poly> {
    let mut parser = Parser::new(text, ring)?;
    if parser.at_end() {
        return parser.error("empty expression");
    }
    let p = parser.expr()?;
    parser.finish()?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::{MonomialOrder, RingContext};

    fn ring(p: u32, vars: &[&str]) -> Ring {
        RingContext::new(p, vars, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn spec_examples() {
        let r2 = ring(2, &["x", "y"]);
        assert_eq!(parse_poly("(x+y)^2", &r2).unwrap(), parse_poly("x^2 + y^2", &r2).unwrap());
        let r3 = ring(3, &["x", "y"]);
        assert_eq!(parse_poly("x^2 + 3*y", &r3).unwrap().to_string(), "x^2");
        let r5 = ring(5, &["x", "y"]);
        assert!(parse_poly("x*y - y*x", &r5).unwrap().is_zero());
    }

    #[test]
    fn implicit_multiplication_and_unary_minus() {
        let r = ring(7, &["x", "y"]);
        let a = parse_poly("2x y (x+1)(y - 1)", &r).unwrap();
        let b = parse_poly("2*x*y*(x+1)*(y-1)", &r).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_poly("-x + (-y)", &r).unwrap().to_string(), "6*x + 6*y");
        assert_eq!(parse_poly("  x ^ 2 ", &r).unwrap().to_string(), "x^2");
    }

    #[test]
    fn large_literals_reduce() {
        let r = ring(7, &["x"]);
        assert_eq!(parse_poly("123456789012345678901234567890", &r).unwrap().constant_term(), {
            // 123456789012345678901234567890 mod 7, folded by hand in decimal chunks
            let mut acc = 0u64;
            for d in "123456789012345678901234567890".bytes() {
                acc = (acc * 10 + (d - b'0') as u64) % 7;
            }
            acc as u32
        });
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring(5, &["x", "y"]);
        assert!(matches!(parse_poly("x + ", &r), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_poly("x $ y", &r), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("(x + y", &r), Err(Error::Syntax { pos: 6, .. })));
        assert!(matches!(parse_poly("x 2", &r), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("", &r), Err(Error::Syntax { .. })));
        assert_eq!(parse_poly("z", &r), Err(Error::UnknownVariable("z".into())));
        assert_eq!(parse_poly("x^99999999999", &r), Err(Error::ExponentOverflow));
        assert!(matches!(parse_poly("x^y", &r), Err(Error::Syntax { .. })));
    }
}
