//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace allowed between tokens, no implicit multiplication):
//!
//! ```text
//! expr     := ('-' | '+')? term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | var ('^' uint)?
//! rational := int ('/' uint)?
//! int      := '-'? uint
//! uint     := digit+
//! ```
//!
//! `Display` on [`Polynomial`] emits a subset of this grammar (signs are
//! always separators except for a leading minus), and
//! parse-print-parse is a fixed point.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingContext;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next token together with its starting offset.
    fn next(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((Tok::End, start));
        }
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'0'..=b'9' => {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                return Ok((Tok::Int(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()), start));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                return Ok((Tok::Ident(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()), start));
            }
            other => {
                return Err(Error::Parse {
                    position: start,
                    message: format!("unexpected character `{}`", other as char),
                })
            }
        };
        self.pos += 1;
        Ok((tok, start))
    }
}

struct Parser<'a, C: Scalar> {
    ctx: &'a RingContext,
    toks: Vec<(Tok, usize)>,
    at: usize,
    _marker: std::marker::PhantomData<C>,
}

impl<'a, C: Scalar> Parser<'a, C> {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn parse_expr(&mut self) -> Result<Polynomial<C>> {
        let mut sign = match self.peek().0 {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = Polynomial::zero(self.ctx);
        loop {
            let term = self.parse_term()?;
            acc = if sign { &acc - &term } else { &acc + &term };
            match self.peek().0 {
                Tok::Plus => {
                    sign = false;
                    self.bump();
                }
                Tok::Minus => {
                    sign = true;
                    self.bump();
                }
                Tok::End => return Ok(acc),
                _ => {
                    let (tok, pos) = self.peek().clone();
                    return Err(Error::Parse {
                        position: pos,
                        message: format!("expected `+`, `-` or end of input, found {tok:?}"),
                    });
                }
            }
        }
    }

    fn parse_term(&mut self) -> Result<Polynomial<C>> {
        let mut acc = self.parse_factor()?;
        while self.peek().0 == Tok::Star {
            self.bump();
            let f = self.parse_factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Polynomial<C>> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Int(digits) => {
                let num = parse_uint::<C>(&digits);
                if self.peek().0 == Tok::Slash {
                    self.bump();
                    let (dtok, dpos) = self.bump();
                    match dtok {
                        Tok::Int(den_digits) => {
                            let den = parse_uint::<C>(&den_digits);
                            if den.is_zero() {
                                return Err(Error::Parse {
                                    position: dpos,
                                    message: "zero denominator".into(),
                                });
                            }
                            Ok(Polynomial::constant(self.ctx, num / den))
                        }
                        other => Err(Error::Parse {
                            position: dpos,
                            message: format!("expected denominator digits, found {other:?}"),
                        }),
                    }
                } else {
                    Ok(Polynomial::constant(self.ctx, num))
                }
            }
            // A sign directly in front of digits (signed integer literal).
            Tok::Minus => {
                let (tok, npos) = self.peek().clone();
                match tok {
                    Tok::Int(_) => {
                        let inner = self.parse_factor()?;
                        Ok(-&inner)
                    }
                    _ => Err(Error::Parse {
                        position: npos,
                        message: "expected digits after `-`".into(),
                    }),
                }
            }
            Tok::Ident(name) => {
                let index = self.ctx.var_index(&name).ok_or(Error::UnknownVariable {
                    name: name.clone(),
                    position: pos,
                })?;
                if self.peek().0 == Tok::Caret {
                    self.bump();
                    let (etok, epos) = self.bump();
                    match etok {
                        Tok::Int(digits) => {
                            let exp: u32 = digits.parse().map_err(|_| Error::Parse {
                                position: epos,
                                message: "exponent out of range".into(),
                            })?;
                            if exp > u16::MAX as u32 {
                                return Err(Error::Parse {
                                    position: epos,
                                    message: "exponent out of range".into(),
                                });
                            }
                            Ok(Polynomial::monomial(
                                self.ctx,
                                C::one(),
                                Monomial::var_power(self.ctx.n_vars(), index, exp as u16),
                            ))
                        }
                        other => Err(Error::Parse {
                            position: epos,
                            message: format!("expected exponent digits, found {other:?}"),
                        }),
                    }
                } else {
                    Ok(Polynomial::variable(self.ctx, index))
                }
            }
            other => Err(Error::Parse {
                position: pos,
                message: format!("expected a rational or a variable, found {other:?}"),
            }),
        }
    }
}

/// Fold decimal digits into a scalar; exact for arbitrary length.
fn parse_uint<C: Scalar>(digits: &str) -> C {
    let ten = C::from_int(10);
    let mut acc = C::zero();
    for d in digits.bytes() {
        acc = acc * ten.clone() + C::from_int((d - b'0') as i64);
    }
    acc
}

impl<C: Scalar> Polynomial<C> {
    /// Parse `text` over `ctx`; the result is in canonical form.
    pub fn parse(text: &str, ctx: &RingContext) -> Result<Self> {
        let mut lexer = Lexer::new(text);
        let mut toks = Vec::new();
        loop {
            let (tok, pos) = lexer.next()?;
            let end = tok == Tok::End;
            toks.push((tok, pos));
            if end {
                break;
            }
        }
        let mut parser = Parser::<C> { ctx, toks, at: 0, _marker: std::marker::PhantomData };
        parser.parse_expr()
    }
}

impl RingContext {
    /// Shorthand for [`Polynomial::parse`] with the crate's default scalar.
    pub fn poly(&self, text: &str) -> Result<Polynomial<crate::Coeff>> {
        Polynomial::parse(text, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Coeff;

    fn ctx() -> RingContext {
        RingContext::new(["x", "y"]).unwrap()
    }

    #[test]
    fn parses_square() {
        let p = ctx().poly("x^2 - 2*x*y + y^2").unwrap();
        let xmy = ctx().poly("x - y").unwrap();
        assert_eq!(p, &xmy * &xmy);
    }

    #[test]
    fn merges_rational_coefficients() {
        assert_eq!(ctx().poly("1/2*x + 1/2*x").unwrap(), ctx().poly("x").unwrap());
    }

    #[test]
    fn syntax_error_position() {
        match ctx().poly("x^") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_variable() {
        match ctx().poly("x + z") {
            Err(Error::UnknownVariable { name, position }) => {
                assert_eq!(name, "z");
                assert_eq!(position, 4);
            }
            other => panic!("expected unknown variable, got {other:?}"),
        }
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(ctx().poly("1/0*x").is_err());
    }

    #[test]
    fn no_implicit_multiplication() {
        assert!(ctx().poly("2x").is_err());
        assert!(ctx().poly("x y").is_err());
    }

    #[test]
    fn signed_literals_and_leading_minus() {
        assert_eq!(ctx().poly("-x + y").unwrap(), ctx().poly("y - x").unwrap());
        assert_eq!(ctx().poly("-3*x").unwrap(), ctx().poly("0 - 3*x").unwrap());
        assert_eq!(ctx().poly("x - -2*y").unwrap(), ctx().poly("x + 2*y").unwrap());
    }

    #[test]
    fn print_parse_roundtrip() {
        for s in ["x^2 - 2*x*y + y^2", "-x - 1/2*y", "0", "7/3", "x*y^3 + 5"] {
            let p: Polynomial<Coeff> = ctx().poly(s).unwrap();
            let printed = p.to_string();
            let reparsed = ctx().poly(&printed).unwrap();
            assert_eq!(p, reparsed, "roundtrip failed for `{s}` -> `{printed}`");
        }
    }

    #[test]
    fn big_integer_literals() {
        let p = ctx().poly("123456789012345678901234567890*x").unwrap();
        assert_eq!(p.to_string(), "123456789012345678901234567890*x");
    }
}
