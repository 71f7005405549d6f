//! Parser for the canonical polynomial text form.
//!
//! Accepts sums of products of rational constants, named variables and parenthesised
//! subexpressions, with integer powers (`t^-2`, `(1+t)^3`). Every variable name is bound
//! to a [`LaurentPoly`], so a name may stand for a derived element (e.g. `t3` in the
//! eliminated SU(3) torus coordinates).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::ParseError;
use crate::laurent::LaurentPoly;

/// Parses `input` with the given variable bindings into a polynomial in `nvars` variables.
pub fn parse_poly(
    input: &str,
    bindings: &[(&str, LaurentPoly)],
    nvars: usize,
) -> Result<LaurentPoly, ParseError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
        bindings,
        nvars,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(ParseError::new(0, "empty polynomial"));
    }
    let v = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(ParseError::new(
            p.pos,
            format!("unexpected '{}'", p.peek_char()),
        ));
    }
    Ok(v)
}

/// Binds `names[i]` to the i-th variable.
pub fn plain_bindings<'a>(names: &[&'a str]) -> Vec<(&'a str, LaurentPoly)> {
    let n = names.len();
    names
        .iter()
        .enumerate()
        .map(|(i, &name)| (name, LaurentPoly::var(n, i, 1)))
        .collect()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    bindings: &'a [(&'a str, LaurentPoly)],
    nvars: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_char(&self) -> char {
        std::str::from_utf8(&self.src[self.pos..])
            .ok()
            .and_then(|s| s.chars().next())
            .unwrap_or('?')
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
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

    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        self.skip_ws();
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
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
        let mut acc = self.power()?;
        while self.eat(b'*') {
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<LaurentPoly, ParseError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let at = self.pos;
            let e = self.signed_int()?;
            return base
                .pow(e)
                .map_err(|_| ParseError::new(at, "negative power of a non-unit"));
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let paren = self.eat(b'(');
        self.skip_ws();
        let neg = self.eat(b'-');
        self.skip_ws();
        let at = self.pos;
        let n = self.digits()?;
        let v: i64 = n
            .try_into()
            .map_err(|_| ParseError::new(at, "exponent out of range"))?;
        if paren && !self.eat(b')') {
            return Err(ParseError::new(self.pos, "expected ')'"));
        }
        Ok(if neg { -v } else { v })
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::new(start, "expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<LaurentPoly, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(ParseError::new(self.pos, "expected ')'"));
                }
                Ok(v)
            }
            Some(b'0'..=b'9') => {
                let num = self.digits()?;
                let mut c = BigRational::from_integer(num);
                // a '/' directly after an integer makes it a rational constant
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let den = self.digits()?;
                    if den.is_zero() {
                        return Err(ParseError::new(at, "zero denominator"));
                    }
                    c /= BigRational::from_integer(den);
                }
                Ok(LaurentPoly::constant(self.nvars, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                self.bindings
                    .iter()
                    .find(|(n, _)| *n == name)
                    .map(|(_, p)| p.clone())
                    .ok_or_else(|| ParseError::new(start, format!("unknown variable '{name}'")))
            }
            Some(_) => Err(ParseError::new(
                start,
                format!("unexpected '{}'", self.peek_char()),
            )),
            None => Err(ParseError::new(start, "unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::ratio;

    #[test]
    fn parses_canonical_forms() {
        let b = plain_bindings(&["t1", "t2"]);
        let p = parse_poly("3/2*t1^2*t2^-1 - t1 + 4", &b, 2).unwrap();
        assert_eq!(p.to_text(&["t1", "t2"]), "3/2*t1^2*t2^-1 - t1 + 4");
        assert_eq!(
            p.coeff_of(&crate::laurent::Monomial::new(vec![2, -1])),
            ratio(3, 2)
        );
    }

    #[test]
    fn powers_and_parentheses() {
        let b = plain_bindings(&["t"]);
        let p = parse_poly("(1+t)^3", &b, 1).unwrap();
        assert_eq!(p.to_text(&["t"]), "t^3 + 3*t^2 + 3*t + 1");
        assert!(parse_poly("(1+t)^-1", &b, 1).is_err());
        assert_eq!(
            parse_poly("t^(-2)", &b, 1).unwrap(),
            LaurentPoly::var(1, 0, -2)
        );
    }

    #[test]
    fn error_positions() {
        let b = plain_bindings(&["t"]);
        let e = parse_poly("1 + q", &b, 1).unwrap_err();
        assert_eq!(e.position, 4);
        let e = parse_poly("1 + ", &b, 1).unwrap_err();
        assert_eq!(e.position, 4);
        assert!(parse_poly("", &b, 1).is_err());
        assert!(parse_poly("1/0", &b, 1).is_err());
    }
}
