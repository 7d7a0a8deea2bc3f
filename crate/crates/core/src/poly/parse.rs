//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar: rational literals, ring variables, `z` (the primitive N-th root of
//! unity, unless the ring has a variable called `z`), `+ - * / ^` and
//! parentheses. Division is only allowed by nonzero constants; negative
//! exponents only on constants.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{Poly, PolyRing};
use crate::arith::{CycNum, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
}

impl<'a> Lexer<'a> {
    fn run(src: &'a str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer { src, toks: Vec::new() };
        let b = src.as_bytes();
        let mut i = 0;
        while i < b.len() {
            let c = b[i] as char;
            if c.is_ascii_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let s = i;
                while i < b.len() && (b[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = lx.src[s..i].parse().expect("digits");
                lx.toks.push((Tok::Num(n), s));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let s = i;
                while i < b.len() && ((b[i] as char).is_ascii_alphanumeric() || b[i] == b'_') {
                    i += 1;
                }
                lx.toks.push((Tok::Ident(lx.src[s..i].to_string()), s));
            } else if "+-*/^()".contains(c) {
                lx.toks.push((Tok::Op(c), i));
                i += 1;
            } else {
                return Err(Error::Parse { line, col: col0 + i + 1, msg: format!("unexpected character '{c}'") });
            }
        }
        Ok(lx.toks)
    }
}

struct Parser<'r> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'r Arc<PolyRing>,
    line: usize,
    col0: usize,
    end: usize,
}

impl<'r> Parser<'r> {
    fn err<T>(&self, at: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: self.line, col: self.col0 + at + 1, msg: msg.into() })
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end)
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some((Tok::Op(c), _)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let at = self.here();
            let rhs = self.unary()?;
            if c == '*' {
                acc = &acc * &rhs;
            } else {
                if !rhs.is_constant() {
                    return self.err(at, "division by a non-constant");
                }
                let d = rhs.constant_term();
                if d.is_zero() {
                    return self.err(at, "division by zero");
                }
                acc = acc.scale(&d.inverse()?);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let at = self.here();
        let mut neg = false;
        let mut paren = false;
        if self.peek_op() == Some('(') {
            paren = true;
            self.pos += 1;
        }
        if self.peek_op() == Some('-') {
            neg = true;
            self.pos += 1;
        }
        let n = match self.toks.get(self.pos) {
            Some((Tok::Num(n), _)) => n.clone(),
            _ => return self.err(at, "expected integer exponent"),
        };
        self.pos += 1;
        if paren {
            if self.peek_op() != Some(')') {
                return self.err(self.here(), "expected ')'");
            }
            self.pos += 1;
        }
        let n: i64 = match i64::try_from(n) {
            Ok(v) if v <= u16::MAX as i64 => v,
            _ => return self.err(at, "exponent too large"),
        };
        Ok(if neg { -n } else { n })
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let at = self.here();
            let e = self.exponent()?;
            if e >= 0 {
                return Ok(base.pow(e as u32));
            }
            if !base.is_constant() {
                return self.err(at, "negative exponent on a non-constant");
            }
            let c = base.constant_term();
            if c.is_zero() {
                return self.err(at, "division by zero");
            }
            return Ok(Poly::constant(self.ring, c.pow(e)?));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let at = self.here();
        let tok = match self.toks.get(self.pos) {
            Some((t, _)) => t.clone(),
            None => return self.err(at, "unexpected end of input"),
        };
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(Poly::constant(self.ring, CycNum::from_rational(self.ring.field(), Rational::from(n)))),
            Tok::Ident(name) => {
                if let Some(i) = self.ring.index_of(&name) {
                    Ok(Poly::var(self.ring, i))
                } else if name == "z" {
                    Ok(Poly::constant(self.ring, self.ring.field().zeta_pow(1)))
                } else {
                    self.err(at, format!("unknown variable '{name}'"))
                }
            }
            Tok::Op('(') => {
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return self.err(self.here(), "expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Op(c) => self.err(at, format!("unexpected '{c}'")),
        }
    }
}

/// Parses `src` as a polynomial in `ring`, reporting errors at `line` with
/// columns offset by `col0`.
pub(crate) fn parse_expr_at(src: &str, ring: &Arc<PolyRing>, line: usize, col0: usize) -> Result<Poly> {
    let toks = Lexer::run(src, line, col0)?;
    let mut p = Parser { toks, pos: 0, ring, line, col0, end: src.len() };
    if p.toks.is_empty() {
        return p.err(0, "empty expression");
    }
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err(p.here(), "trailing input");
    }
    Ok(out)
}

pub fn parse_expr(src: &str, ring: &Arc<PolyRing>) -> Result<Poly> {
    parse_expr_at(src, ring, 1, 0)
}

/// Parses a constant expression over ℚ(ζ_N).
pub fn parse_scalar(src: &str, field: &'static crate::arith::CycField) -> Result<CycNum> {
    parse_scalar_at(src, field, 1, 0)
}

pub(crate) fn parse_scalar_at(src: &str, field: &'static crate::arith::CycField, line: usize, col0: usize) -> Result<CycNum> {
    let ring = PolyRing::new::<&str>(&[], field);
    Ok(parse_expr_at(src, &ring, line, col0)?.constant_term())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycField;

    #[test]
    fn scalars() {
        let f = CycField::get(12);
        assert_eq!(parse_scalar("z^12", f).unwrap(), CycNum::one(f));
        assert_eq!(parse_scalar("z^-1", f).unwrap(), f.zeta_pow(11));
        assert_eq!(parse_scalar("-1/2*(1+z^3)*z^4", f).unwrap(), {
            let a = &CycNum::one(f) + &f.zeta_pow(3);
            (&a * &f.zeta_pow(4)).scale(&Rational::new(-1, 2))
        });
    }

    #[test]
    fn errors_have_positions() {
        let f = CycField::get(12);
        match parse_scalar("1/(0)", f) {
            Err(Error::Parse { col, msg, .. }) => {
                assert_eq!(col, 3);
                assert!(msg.contains("division by zero"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_scalar("1 + ", f), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("q", f), Err(Error::Parse { .. })));
    }
}
