use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Monomial, Poly, PolyRing, Term};
use crate::error::ParseError;
use crate::ring::Ring;

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let at = self.pos;
        let n = self.number()?;
        u32::try_from(n).map_err(|_| ParseError::Syntax { pos: at, msg: "exponent too large".into() })
    }
}

pub(super) fn parse<R: Ring>(ring: &PolyRing<R>, text: &str) -> Result<Poly<R::Elem>, ParseError> {
    let mut cur = Cursor { text, pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return Err(cur.error("empty polynomial"));
            }
            break;
        }
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') {
            false
        } else if first {
            false
        } else {
            return Err(cur.error("expected `+` or `-`"));
        };
        first = false;
        let mut t = term(ring, &mut cur)?;
        if negative {
            t.coeff = ring.ring().neg(&t.coeff);
        }
        terms.push(t);
    }
    Ok(ring.from_terms(terms))
}

fn term<R: Ring>(ring: &PolyRing<R>, cur: &mut Cursor<'_>) -> Result<Term<R::Elem>, ParseError> {
    let base = ring.ring();
    let mut coeff = base.one();
    let mut exps = vec![0u32; ring.nvars()];
    loop {
        cur.skip_ws();
        let start = cur.pos;
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = cur.number()?;
                let value = if cur.eat(b'/') {
                    let den = cur.number()?;
                    if den.is_zero() {
                        return Err(ParseError::Syntax { pos: start, msg: "zero denominator".into() });
                    }
                    BigRational::new(num, den)
                } else {
                    BigRational::from_integer(num)
                };
                let elem = base.from_rational(&value).ok_or_else(|| ParseError::BadLiteral {
                    pos: start,
                    literal: cur.text[start..cur.pos].trim().to_string(),
                })?;
                coeff = base.mul(&coeff, &elem);
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = cur.take_while(|c| c.is_ascii_alphanumeric() || c == b'_');
                let e = if cur.eat(b'^') { cur.exponent()? } else { 1 };
                if let Some(i) = ring.vars().iter().position(|v| v == name) {
                    exps[i] += e;
                } else if let Some(v) = base.aux_variable(name) {
                    for _ in 0..e {
                        coeff = base.mul(&coeff, &v);
                    }
                } else {
                    return Err(ParseError::UnknownVariable { pos: start, name: name.to_string() });
                }
            }
            _ => return Err(cur.error("expected a number or a variable")),
        }
        if !cur.eat(b'*') {
            break;
        }
    }
    Ok(Term::new(coeff, Monomial::new(exps)))
}
