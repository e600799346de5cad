//! Textual expressions for Laurent polynomials.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' exponent)?
//! exponent := '-'? INT | '(' '-'? INT ')'
//! atom   := INT | 's' | IDENT | '(' expr ')'
//! ```
//!
//! `s` denotes √d. Division and negative powers require the divisor (base)
//! to normalize to a single term.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, Monomial, ParseError, ParseErrorKind, Rational, Scalar, ScalarError};

pub fn parse_expr(text: &str, d: u32) -> Result<LaurentPoly, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        d,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err(ParseErrorKind::Syntax(format!(
            "unexpected '{}'",
            p.src[p.pos] as char
        ))));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    d: u32,
}

impl Parser<'_> {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { pos: self.pos, kind }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn lift(&self, at: usize, e: ScalarError) -> ParseError {
        let kind = match e {
            ScalarError::NonMonomialDivisor => ParseErrorKind::NonMonomialDivisor,
            ScalarError::DivisionByZero => ParseErrorKind::DivisionByZero,
            other => ParseErrorKind::Syntax(other.to_string()),
        };
        ParseError { pos: at, kind }
    }

    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let rhs = self.unary()?;
                acc = acc.div(&rhs).map_err(|e| self.lift(at, e))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<LaurentPoly, ParseError> {
        if self.eat(b'-') {
            Ok(-self.unary()?)
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<LaurentPoly, ParseError> {
        let at = self.pos;
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let Some(mag) = self.integer()? else {
            return Err(self.err(ParseErrorKind::Syntax("expected integer exponent".into())));
        };
        if paren && !self.eat(b')') {
            return Err(self.err(ParseErrorKind::Syntax("expected ')'".into())));
        }
        let mag: i32 = mag
            .try_into()
            .ok()
            .filter(|m: &i32| *m <= 1024)
            .ok_or_else(|| self.err(ParseErrorKind::Syntax("exponent too large".into())))?;
        let k = if neg { -mag } else { mag };
        base.pow(k).map_err(|e| self.lift(at, e))
    }

    fn integer(&mut self) -> Result<Option<BigInt>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(Some(s.parse().expect("digits parse")))
    }

    fn atom(&mut self) -> Result<LaurentPoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err(ParseErrorKind::Syntax("expected ')'".into())));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?.expect("digit present");
                Ok(LaurentPoly::constant(Scalar::from_rational(Rational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii ident");
                if name == "s" {
                    Ok(LaurentPoly::constant(Scalar::sqrt_d(self.d)))
                } else {
                    Ok(LaurentPoly::var(name))
                }
            }
            Some(c) => Err(self.err(ParseErrorKind::Syntax(format!("unexpected '{}'", c as char)))),
            None => Err(self.err(ParseErrorKind::Syntax("unexpected end of input".into()))),
        }
    }
}

fn rational_term(coeff: &Rational, sqrt: bool, m: &Monomial) -> String {
    let mut out = String::new();
    if coeff.is_negative() {
        out.push('-');
    }
    let mag = coeff.abs();
    let mut factors: Vec<String> = Vec::new();
    if !mag.is_one() || (!sqrt && m.is_one()) {
        if mag.is_integer() {
            factors.push(mag.numer().to_string());
        } else {
            factors.push(format!("{}/{}", mag.numer(), mag.denom()));
        }
    }
    if sqrt {
        factors.push("s".into());
    }
    if !m.is_one() {
        factors.push(m.to_string());
    }
    out.push_str(&factors.join("*"));
    out
}

/// Canonical text of a polynomial. Terms follow monomial order; each
/// coefficient `p + q·√d` contributes a rational term and an `s` term.
/// The output parses back to the same polynomial.
pub fn render(p: &LaurentPoly) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (m, c) in p.terms() {
        if !c.rat().is_zero() {
            parts.push(rational_term(c.rat(), false, m));
        }
        if !c.irr().is_zero() {
            parts.push(rational_term(c.irr(), true, m));
        }
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in parts.iter().enumerate() {
        if i == 0 {
            out.push_str(t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(t);
        }
    }
    out
}
