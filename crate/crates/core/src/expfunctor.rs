//! Exponential functors, represented by their line character F(t).
//!
//! Grammar of the functor DSL:
//!
//! ```text
//! expr    := factor ('*' factor)*
//! factor  := primary ('^' uint)?
//! primary := 'ext_top' | 'ext_full' | 'fw' '(' uint ')' | '(' expr ')'
//!          | 'poly:' '(' laurent ')' | 'poly:' laurent-to-end-of-input
//! ```
//!
//! `ext_top` is Λ^top (t), `ext_full` is Λ* (1 + t) and `fw(b)` is 1 + b·t.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{FunctorError, LaurentError, ParseError, PipelineError};
use crate::laurent::{LaurentPoly, Monomial};
use crate::reprings::{
    restrict, symmetric_pair_to_u2, to_invariant_ring, torus3_var, Restriction, RingElem, RingTag,
};
use crate::text::{parse_poly, plain_bindings};
use crate::unipoly::UniPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentialFunctor {
    character: LaurentPoly,
    name: Option<String>,
    preset: bool,
}

/// Which of the SU(2) and SU(3) computations apply.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Hypotheses {
    /// F(t) ≠ F(t^{-1}).
    pub su2_ok: bool,
    /// deg F(t) > 0.
    pub su3_ok: bool,
}

/// F(ρ) in R(SU(2)) and R(SU(3)), λ_F = F(d^{-1}), μ_F = F(s) in R(U(2)), ν_F = F(t_1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedElements {
    pub f_rho_su2: RingElem,
    pub f_rho_su3: RingElem,
    pub lambda: RingElem,
    pub mu: RingElem,
    pub nu: RingElem,
}

/// `x · inverse = den^k`, i.e. x^{-1} = inverse / F(ρ)^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCertificate {
    pub name: &'static str,
    pub element: RingElem,
    pub inverse: RingElem,
    pub k: u32,
}

impl ExponentialFunctor {
    /// Validates a character: one variable, nonzero, nonnegative integer coefficients.
    pub fn from_character(character: LaurentPoly) -> Result<Self, FunctorError> {
        if character.nvars() != 1 {
            return Err(FunctorError::Parse(ParseError::new(
                0,
                "a character has exactly one variable",
            )));
        }
        if character.is_zero() {
            return Err(FunctorError::ZeroCharacter);
        }
        for (_, c) in character.terms() {
            if !c.is_integer() {
                return Err(FunctorError::NonIntegralCoefficient);
            }
            if c.is_negative() {
                return Err(FunctorError::NegativeCoefficient);
            }
        }
        Ok(ExponentialFunctor {
            character,
            name: None,
            preset: false,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn character(&self) -> &LaurentPoly {
        &self.character
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The DSL name if there is one, else the canonical form.
    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.canonical())
    }

    /// `poly:<terms>`, always re-parseable.
    pub fn canonical(&self) -> String {
        format!("poly:{}", self.character.to_text(&["t"]))
    }

    /// Built only from `ext_top`, `ext_full` and `fw(b)`.
    pub fn is_preset(&self) -> bool {
        self.preset
    }

    /// d(F) = F(1).
    pub fn dimension(&self) -> BigInt {
        self.character
            .terms()
            .fold(BigInt::zero(), |acc, (_, c)| acc + c.to_integer())
    }

    pub fn min_degree(&self) -> i32 {
        self.character.trailing().unwrap().0.exponents()[0]
    }

    pub fn max_degree(&self) -> i32 {
        self.character.leading().unwrap().0.exponents()[0]
    }

    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.min_degree() < 0 {
            w.push(format!(
                "character has negative exponents (min degree {})",
                self.min_degree()
            ));
        }
        if !self.preset {
            w.push("formal character: not built from preset functors".to_string());
        }
        w
    }

    /// F evaluated at a unit `line`.
    pub fn at(&self, line: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if !line.is_unit() {
            return Err(LaurentError::NotAUnit);
        }
        self.character.substitute(std::slice::from_ref(line))
    }

    /// ∏ F(line) over unit monomials in an `nvars`-variable ring; the empty product is 1.
    pub fn f_of_lines(
        &self,
        lines: &[LaurentPoly],
        nvars: usize,
    ) -> Result<LaurentPoly, LaurentError> {
        let mut acc = LaurentPoly::one(nvars);
        for l in lines {
            if l.nvars() != nvars {
                return Err(LaurentError::AmbientMismatch {
                    left: nvars,
                    right: l.nvars(),
                });
            }
            acc = &acc * &self.at(l)?;
        }
        Ok(acc)
    }

    /// F(t_i) in the SU(3) torus ring.
    pub fn f_torus(&self, i: usize) -> RingElem {
        let p = self.at(&torus3_var(i)).expect("torus characters are units");
        RingElem::new(RingTag::TorusSU3, p).unwrap()
    }

    pub fn derived(&self) -> DerivedElements {
        let t = LaurentPoly::var(1, 0, 1);
        let tinv = LaurentPoly::var(1, 0, -1);
        let rho2 = self.f_of_lines(&[t, tinv], 1).unwrap();
        let f_rho_su2 = to_invariant_ring(
            &RingElem::new(RingTag::TorusSU2, rho2).unwrap(),
            RingTag::SU2,
        )
        .expect("F(t)F(t^-1) is symmetric");
        let f_rho_su3 = to_invariant_ring(&self.f_rho_torus(), RingTag::SU3)
            .expect("F(t1)F(t2)F(t3) is symmetric");
        let lambda =
            RingElem::new(RingTag::U2, self.at(&LaurentPoly::var(2, 1, -1)).unwrap()).unwrap();
        let pair = self
            .f_of_lines(&[LaurentPoly::var(2, 0, 1), LaurentPoly::var(2, 1, 1)], 2)
            .unwrap();
        let mu = symmetric_pair_to_u2(&pair).expect("F(x)F(y) is symmetric");
        DerivedElements {
            f_rho_su2,
            f_rho_su3,
            lambda,
            mu,
            nu: self.f_torus(1),
        }
    }

    /// F(t1)F(t2)F(t3).
    pub fn f_rho_torus(&self) -> RingElem {
        let lines: Vec<LaurentPoly> = (1..=3).map(torus3_var).collect();
        RingElem::new(RingTag::TorusSU3, self.f_of_lines(&lines, 2).unwrap()).unwrap()
    }

    /// r(t1)r(t2)r(t3) in the torus ring, r the squarefree part of F. It has the same
    /// radical as F(ρ), so saturating by either gives the same ideal.
    pub fn f_rho_radical_torus(&self) -> RingElem {
        let (shifted, _) = self.character.shift_to_polynomial();
        let r = UniPoly::from_laurent(&shifted)
            .expect("shifted character is a polynomial")
            .squarefree_part()
            .to_laurent();
        let mut prod = LaurentPoly::one(2);
        for i in 1..=3 {
            prod = &prod * &r.substitute(&[torus3_var(i)]).unwrap();
        }
        RingElem::new(RingTag::TorusSU3, prod).unwrap()
    }

    /// [`Self::f_rho_radical_torus`] in R(SU(3)).
    pub fn f_rho_radical(&self) -> RingElem {
        to_invariant_ring(&self.f_rho_radical_torus(), RingTag::SU3)
            .expect("a product over t1, t2, t3 is symmetric")
    }

    /// The image of F(ρ) in `ring`; for U(2) this is the restriction from SU(3).
    pub fn f_rho_in(&self, ring: RingTag) -> RingElem {
        match ring {
            RingTag::SU2 => self.derived().f_rho_su2,
            RingTag::SU3 => self.derived().f_rho_su3,
            RingTag::U2 => restrict(&self.derived().f_rho_su3, Restriction::SU3ToU2).unwrap(),
            RingTag::TorusSU3 => self.f_rho_torus(),
            RingTag::TorusSU2 => {
                let t = LaurentPoly::var(1, 0, 1);
                let tinv = LaurentPoly::var(1, 0, -1);
                RingElem::new(RingTag::TorusSU2, self.f_of_lines(&[t, tinv], 1).unwrap()).unwrap()
            }
        }
    }

    pub fn hypotheses(&self) -> Hypotheses {
        let inv = self
            .character
            .substitute(&[LaurentPoly::var(1, 0, -1)])
            .unwrap();
        Hypotheses {
            su2_ok: inv != self.character,
            su3_ok: self.max_degree() > 0,
        }
    }

    /// Inverse certificates for λ_F, μ_F (in R(U(2))) and ν_F (in the torus ring), each
    /// checked by exact multiplication against the image of F(ρ).
    pub fn unit_certificates(&self) -> Result<Vec<UnitCertificate>, PipelineError> {
        let d = self.derived();
        let u2_den = self.f_rho_in(RingTag::U2);
        let t_den = self.f_rho_torus();
        let nu_inv = RingElem::new(
            RingTag::TorusSU3,
            self.f_of_lines(&[torus3_var(2), torus3_var(3)], 2)?,
        )?;
        let certs = vec![
            UnitCertificate {
                name: "lambda",
                element: d.lambda.clone(),
                inverse: d.mu.clone(),
                k: 1,
            },
            UnitCertificate {
                name: "mu",
                element: d.mu.clone(),
                inverse: d.lambda.clone(),
                k: 1,
            },
            UnitCertificate {
                name: "nu",
                element: d.nu.clone(),
                inverse: nu_inv,
                k: 1,
            },
            UnitCertificate {
                name: "F(rho)",
                element: d.f_rho_su3.clone(),
                inverse: RingElem::one(RingTag::SU3),
                k: 1,
            },
        ];
        for c in &certs {
            let den = match c.element.ring() {
                RingTag::U2 => &u2_den,
                RingTag::TorusSU3 => &t_den,
                _ => &d.f_rho_su3,
            };
            if (&c.element * &c.inverse) != den.pow(c.k) {
                return Err(PipelineError::IdentityFailed(format!(
                    "unit certificate for {}",
                    c.name
                )));
            }
        }
        Ok(certs)
    }
}

impl fmt::Debug for ExponentialFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExponentialFunctor({})", self.canonical())
    }
}

impl fmt::Display for ExponentialFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_name())
    }
}

/// Parses the functor DSL. The functor is named by the trimmed input.
pub fn parse_functor(spec: &str) -> Result<ExponentialFunctor, FunctorError> {
    let mut p = DslParser {
        src: spec,
        pos: 0,
        preset: true,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(ParseError::new(0, "empty functor specification").into());
    }
    let character = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(ParseError::new(p.pos, format!("unexpected '{}'", p.rest_char())).into());
    }
    let preset = p.preset;
    let mut f = ExponentialFunctor::from_character(character)?.with_name(spec.trim());
    f.preset = preset;
    Ok(f)
}

struct DslParser<'a> {
    src: &'a str,
    pos: usize,
    preset: bool,
}

impl DslParser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn rest_char(&self) -> char {
        self.rest().chars().next().unwrap_or('?')
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(ParseError::new(start, "expected a nonnegative integer"));
        }
        self.pos += len;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| ParseError::new(start, "integer out of range"))
    }

    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat("*") {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly, ParseError> {
        let base = self.primary()?;
        if self.eat("^") {
            let m = self.uint()?;
            return Ok(base.pow(m as i64).expect("nonnegative power"));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<LaurentPoly, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let t = LaurentPoly::var(1, 0, 1);
        if self.eat("(") {
            let v = self.expr()?;
            if !self.eat(")") {
                return Err(ParseError::new(self.pos, "expected ')'"));
            }
            return Ok(v);
        }
        let ident_len = self
            .rest()
            .bytes()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == b'_')
            .count();
        let ident = &self.src[start..start + ident_len];
        self.pos += ident_len;
        match ident {
            "ext_top" => Ok(t),
            "ext_full" => Ok(&LaurentPoly::one(1) + &t),
            "fw" => {
                if !self.eat("(") {
                    return Err(ParseError::new(self.pos, "expected '(' after fw"));
                }
                let at = self.pos;
                let b = self.uint()?;
                if b == 0 {
                    return Err(ParseError::new(at, "fw(b) needs b >= 1"));
                }
                if !self.eat(")") {
                    return Err(ParseError::new(self.pos, "expected ')'"));
                }
                Ok(&LaurentPoly::one(1) + &t.scale(&crate::laurent::coeff(b as i64)))
            }
            "poly" => {
                if !self.eat(":") {
                    return Err(ParseError::new(self.pos, "expected ':' after poly"));
                }
                self.preset = false;
                self.skip_ws();
                let body_start = self.pos;
                let body_end = if self.rest().starts_with('(') {
                    matching_paren(self.src, body_start)
                        .ok_or_else(|| ParseError::new(body_start, "unbalanced '('"))?
                        + 1
                } else {
                    self.src.len()
                };
                let body = &self.src[body_start..body_end];
                let poly = parse_poly(body, &plain_bindings(&["t"]), 1)
                    .map_err(|e| ParseError::new(body_start + e.position, e.message))?;
                self.pos = body_end;
                Ok(poly)
            }
            "" => Err(ParseError::new(
                start,
                if self.at_end() {
                    "unexpected end of input".to_string()
                } else {
                    format!("unexpected '{}'", self.rest_char())
                },
            )),
            other => Err(ParseError::new(start, format!("unknown functor '{other}'"))),
        }
    }
}

fn matching_paren(src: &str, open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in src[open..].char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(open + i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Monomial t^k in one variable.
pub fn line(k: i32) -> LaurentPoly {
    LaurentPoly::term(crate::laurent::coeff(1), Monomial::new(vec![k]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn char_of(spec: &str) -> String {
        parse_functor(spec).unwrap().character().to_text(&["t"])
    }

    #[test]
    fn dsl_examples() {
        assert_eq!(char_of("ext_full^3"), "t^3 + 3*t^2 + 3*t + 1");
        assert_eq!(char_of("ext_top^2 * fw(3)"), "3*t^3 + t^2");
        assert_eq!(char_of("poly:2+t^2"), "t^2 + 2");
        assert_eq!(char_of("poly:(1+t)^2 * ext_top"), "t^3 + 2*t^2 + t");
        assert_eq!(char_of("(ext_top*ext_full)^2"), "t^4 + 2*t^3 + t^2");
        assert!(parse_functor("ext_full^3").unwrap().is_preset());
        assert!(!parse_functor("poly:1+t").unwrap().is_preset());
    }

    #[test]
    fn dsl_errors() {
        let e = parse_functor("ext_ful").unwrap_err();
        assert!(matches!(e, FunctorError::Parse(ref p) if p.position == 0));
        let e = parse_functor("ext_top * ").unwrap_err();
        assert!(matches!(e, FunctorError::Parse(ref p) if p.position == 10));
        let e = parse_functor("poly:1 + q").unwrap_err();
        assert!(matches!(e, FunctorError::Parse(ref p) if p.position == 9));
        assert_eq!(
            parse_functor("poly:1-t").unwrap_err(),
            FunctorError::NegativeCoefficient
        );
        assert_eq!(
            parse_functor("poly:0").unwrap_err(),
            FunctorError::ZeroCharacter
        );
        assert_eq!(
            parse_functor("poly:1/2").unwrap_err(),
            FunctorError::NonIntegralCoefficient
        );
        assert!(parse_functor("fw(0)").is_err());
        assert!(parse_functor("").is_err());
    }

    #[test]
    fn canonical_round_trip() {
        for spec in ["ext_full^4", "fw(2)*ext_top^3", "poly:3*t^-1 + 1 + t^2"] {
            let f = parse_functor(spec).unwrap();
            let g = parse_functor(&f.canonical()).unwrap();
            assert_eq!(f.character(), g.character());
        }
    }

    #[test]
    fn lines() {
        let f = parse_functor("ext_full").unwrap();
        let lines: Vec<LaurentPoly> = (1..=3).map(torus3_var).collect();
        let p = f.f_of_lines(&lines, 2).unwrap();
        assert_eq!(
            p,
            RingElem::parse(RingTag::TorusSU3, "(1+t1)*(1+t2)*(1+t3)")
                .unwrap()
                .into_poly()
        );
        assert_eq!(f.f_of_lines(&[], 2).unwrap(), LaurentPoly::one(2));
        let top = parse_functor("ext_top").unwrap();
        assert_eq!(
            top.f_of_lines(&[line(1), line(-1)], 1).unwrap(),
            LaurentPoly::one(1)
        );
        let non_unit = &line(1) + &line(0);
        assert!(top.f_of_lines(&[non_unit], 1).is_err());
    }

    #[test]
    fn derived_examples() {
        let full = parse_functor("ext_full").unwrap().derived();
        assert_eq!(full.f_rho_su2.to_text(), "rho + 2");
        assert_eq!(full.mu, RingElem::parse(RingTag::U2, "1 + s + d").unwrap());
        assert_eq!(
            full.f_rho_su3,
            RingElem::parse(RingTag::SU3, "2 + s1 + s2").unwrap()
        );
        let top = parse_functor("ext_top").unwrap().derived();
        assert_eq!(top.lambda, RingElem::parse(RingTag::U2, "d^-1").unwrap());
        assert!(top.f_rho_su3.is_one());
        for spec in ["ext_full^3", "fw(2)*ext_top", "poly:1 + 2*t^-1 + t^3"] {
            parse_functor(spec).unwrap().unit_certificates().unwrap();
        }
    }

    #[test]
    fn hypothesis_examples() {
        let h = parse_functor("ext_top").unwrap().hypotheses();
        assert!(h.su2_ok && h.su3_ok);
        let h = parse_functor("poly:2").unwrap().hypotheses();
        assert!(!h.su2_ok && !h.su3_ok);
        let h = parse_functor("ext_full^5").unwrap().hypotheses();
        assert!(h.su2_ok && h.su3_ok);
        let h = parse_functor("poly:t + t^-1").unwrap().hypotheses();
        assert!(!h.su2_ok && h.su3_ok);
    }

    #[test]
    fn dimension_and_warnings() {
        let f = parse_functor("ext_full^3").unwrap();
        assert_eq!(f.dimension(), BigInt::from(8));
        assert!(f.warnings().is_empty());
        let g = parse_functor("poly:t^-1 + 1").unwrap();
        assert_eq!(g.warnings().len(), 2);
    }
}
