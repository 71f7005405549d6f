//! Exact multivariate Laurent polynomials over ℚ (with ℤ as a tracked subdomain).
//!
//! Every character in the crate is a [`LaurentPoly`]: a finite map from signed
//! exponent vectors to nonzero rational coefficients. Terms are kept in a
//! `BTreeMap` under the graded-lexicographic order on ℤⁿ (total degree first,
//! then lexicographic), which is a translation-invariant total order. That is
//! what makes leading-term division well defined even with negative exponents.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::LaurentError;

/// Exact coefficient type.
pub type Coeff = BigRational;

/// Builds a rational coefficient from an integer.
pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds the rational `num/den`.
pub fn ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Signed exponent vector, one entry per ambient variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn new(exponents: Vec<i32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize, power: i32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = power;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|a| -a).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Which exact coefficient ring a polynomial currently lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoeffDomain {
    Integer,
    Rational,
}

/// Exact Laurent polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, coeff(c))
    }

    /// The variable with the given index, raised to `power` (may be negative).
    pub fn var(nvars: usize, index: usize, power: i32) -> Self {
        assert!(index < nvars, "variable index {index} out of range");
        Self::term(Coeff::one(), Monomial::var(nvars, index, power))
    }

    pub fn term(c: Coeff, m: Monomial) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, merging duplicates.
    pub fn from_terms<I>(nvars: usize, it: I) -> Self
    where
        I: IntoIterator<Item = (Coeff, Vec<i32>)>,
    {
        let mut p = LaurentPoly::zero(nvars);
        for (c, e) in it {
            assert_eq!(e.len(), nvars, "exponent vector length mismatch");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn trailing(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next()
    }

    /// Constant coefficient (zero if absent).
    pub fn constant_term(&self) -> Coeff {
        self.coeff_of(&Monomial::one(self.nvars))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn domain(&self) -> CoeffDomain {
        if self.terms.values().all(|c| c.is_integer()) {
            CoeffDomain::Integer
        } else {
            CoeffDomain::Rational
        }
    }

    pub fn is_integral(&self) -> bool {
        self.domain() == CoeffDomain::Integer
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&e| e >= 0))
    }

    /// Smallest and largest exponent of variable `i` (None for the zero polynomial).
    pub fn exponent_range(&self, i: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.0[i]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Largest total degree of a term.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &LaurentPoly) -> Result<(), LaurentError> {
        if self.nvars != other.nvars {
            return Err(LaurentError::AmbientMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_same(other)?;
        let mut out = LaurentPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// A single term whose coefficient is invertible in the polynomial's own domain.
    pub fn is_unit(&self) -> bool {
        if self.terms.len() != 1 {
            return false;
        }
        let c = self.terms.values().next().unwrap();
        if c.is_integer() {
            c.abs().is_one()
        } else {
            true
        }
    }

    /// Inverse of a unit term.
    pub fn unit_inverse(&self) -> Result<LaurentPoly, LaurentError> {
        if !self.is_unit() {
            return Err(LaurentError::NotAUnit);
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Ok(LaurentPoly::term(c.recip(), m.inverse()))
    }

    /// Integer power; negative exponents require a unit term.
    pub fn pow(&self, k: i64) -> Result<LaurentPoly, LaurentError> {
        if k < 0 {
            return self.unit_inverse()?.pow(-k);
        }
        let mut base = self.clone();
        let mut acc = LaurentPoly::one(self.nvars);
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    ///
    /// Variables that occur with a negative exponent must be sent to unit terms.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<LaurentPoly, LaurentError> {
        if images.len() != self.nvars {
            return Err(LaurentError::AmbientMismatch {
                left: self.nvars,
                right: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            None => 0,
        };
        if images.iter().any(|p| p.nvars != target) {
            return Err(LaurentError::AmbientMismatch {
                left: target,
                right: images
                    .iter()
                    .map(|p| p.nvars)
                    .find(|&n| n != target)
                    .unwrap(),
            });
        }
        if self.nvars == 0 {
            return Ok(self.clone());
        }
        let mut cache: Vec<BTreeMap<i32, LaurentPoly>> = vec![BTreeMap::new(); self.nvars];
        let mut out = LaurentPoly::zero(target);
        for (m, c) in &self.terms {
            let mut prod = LaurentPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !cache[i].contains_key(&e) {
                    let v = images[i]
                        .pow(e as i64)
                        .map_err(|_| LaurentError::NonInvertibleSubstitution { variable: i })?;
                    cache[i].insert(e, v);
                }
                prod = &prod * &cache[i][&e];
            }
            out += &prod;
        }
        Ok(out)
    }

    /// Exact quotient `self / den` in the Laurent ring.
    ///
    /// Returns `Ok(None)` when the division is not exact. The quotient's exponents are
    /// confined to the box `[min(num) - min(den), max(num) - max(den)]` per variable,
    /// which bounds the leading-term loop.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<Option<LaurentPoly>, LaurentError> {
        self.check_same(den)?;
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(LaurentPoly::zero(self.nvars)));
        }
        let mut lo = Vec::with_capacity(self.nvars);
        let mut hi = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            let (nl, nh) = self.exponent_range(i).unwrap();
            let (dl, dh) = den.exponent_range(i).unwrap();
            let (l, h) = (nl - dl, nh - dh);
            if l > h {
                return Ok(None);
            }
            lo.push(l);
            hi.push(h);
        }
        let (dm, dc) = den.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(&dm);
            if qm
                .0
                .iter()
                .zip(lo.iter().zip(&hi))
                .any(|(e, (l, h))| e < l || e > h)
            {
                return Ok(None);
            }
            let qc = rc / &dc;
            let t = LaurentPoly::term(qc.clone(), qm.clone());
            rem -= &(&t * den);
            quot.add_term(qm, qc);
        }
        debug_assert_eq!(&(&quot * den), self);
        if &(&quot * den) != self {
            return Ok(None);
        }
        Ok(Some(quot))
    }

    /// Evaluates at a point of (ℂ^×)ⁿ in double precision.
    pub fn eval_complex(&self, point: &[Complex64]) -> Result<Complex64, LaurentError> {
        if point.len() != self.nvars {
            return Err(LaurentError::AmbientMismatch {
                left: self.nvars,
                right: point.len(),
            });
        }
        if let Some(i) = point.iter().position(|z| z.norm() == 0.0) {
            return Err(LaurentError::ZeroCoordinate { variable: i });
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut v = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for (z, &e) in point.iter().zip(&m.0) {
                if e != 0 {
                    v *= z.powi(e);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Evaluates at an exact rational point (all exponents must be nonnegative or the
    /// coordinates nonzero).
    pub fn eval_rational(&self, point: &[Coeff]) -> Result<Coeff, LaurentError> {
        if point.len() != self.nvars {
            return Err(LaurentError::AmbientMismatch {
                left: self.nvars,
                right: point.len(),
            });
        }
        let mut acc = Coeff::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, (x, &e)) in point.iter().zip(&m.0).enumerate() {
                if e < 0 && x.is_zero() {
                    return Err(LaurentError::ZeroCoordinate { variable: i });
                }
                if e != 0 {
                    v *= num_traits::pow::Pow::pow(x, e);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Multiplies by the least common multiple of the denominators, returning the
    /// resulting integral polynomial and that multiplier.
    pub fn clear_denominators(&self) -> (LaurentPoly, BigInt) {
        let l = self.terms.values().fold(BigInt::one(), |acc, c| {
            num_integer::Integer::lcm(&acc, c.denom())
        });
        (self.scale(&BigRational::from_integer(l.clone())), l)
    }

    /// gcd of the numerators of an integral polynomial (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| {
            num_integer::Integer::gcd(&acc, &(c.numer() / c.denom()))
        })
    }

    /// Shifts by a monomial so that every exponent is nonnegative and each variable has
    /// a term with exponent zero. Returns the shift that was applied.
    pub fn shift_to_polynomial(&self) -> (LaurentPoly, Monomial) {
        if self.is_zero() {
            return (self.clone(), Monomial::one(self.nvars));
        }
        let shift = Monomial(
            (0..self.nvars)
                .map(|i| -self.exponent_range(i).unwrap().0)
                .collect(),
        );
        (self.mul_monomial(&shift), shift)
    }

    /// Canonical text form using the given variable names.
    pub fn to_text(&self, names: &[&str]) -> String {
        format!("{}", self.display(names))
    }

    pub fn display<'a>(&'a self, names: &'a [&'a str]) -> PolyDisplay<'a> {
        PolyDisplay {
            poly: self,
            names,
            style: Style::Plain,
        }
    }

    pub fn display_tex<'a>(&'a self, names: &'a [&'a str]) -> PolyDisplay<'a> {
        PolyDisplay {
            poly: self,
            names,
            style: Style::Tex,
        }
    }
}

#[derive(Clone, Copy)]
enum Style {
    Plain,
    Tex,
}

pub struct PolyDisplay<'a> {
    poly: &'a LaurentPoly,
    names: &'a [&'a str],
    style: Style,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.poly;
        if p.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in p.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(match self.style {
                    Style::Tex if !abs.is_integer() => {
                        format!("\\tfrac{{{}}}{{{}}}", abs.numer(), abs.denom())
                    }
                    _ => abs.to_string(),
                });
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = self.names.get(i).copied().unwrap_or("x");
                factors.push(match (e, self.style) {
                    (1, _) => name.to_string(),
                    (_, Style::Plain) => format!("{name}^{e}"),
                    (_, Style::Tex) => format!("{name}^{{{e}}}"),
                });
            }
            match self.style {
                Style::Plain => write!(f, "{}", factors.join("*"))?,
                Style::Tex => write!(f, "{}", factors.join(" "))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "LaurentPoly({})", self.display(&refs))
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.nvars, rhs.nvars, "ambient variable sets differ");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.nvars, rhs.nvars, "ambient variable sets differ");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

// Operator forms panic on mismatched ambient sets; the checked_* methods report it.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("ambient variable sets differ")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("ambient variable sets differ")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("ambient variable sets differ")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
pub fn det_bareiss(matrix: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return LaurentPoly::one(0);
    }
    let nvars = matrix[0][0].nvars();
    let mut a: Vec<Vec<LaurentPoly>> = matrix.to_vec();
    let mut sign = false;
    let mut prev = LaurentPoly::one(nvars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return LaurentPoly::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("same ambient set")
                    .expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// 3×3 determinant by cofactor expansion along the first row.
pub fn det3(m: &[[LaurentPoly; 3]; 3]) -> LaurentPoly {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| -> LaurentPoly {
        &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
    };
    let a = &m[0][0] * &minor(1, 2, 1, 2);
    let b = &m[0][1] * &minor(1, 2, 0, 2);
    let c = &m[0][2] * &minor(1, 2, 0, 1);
    &(&a - &b) + &c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> LaurentPoly {
        LaurentPoly::var(1, 0, 1)
    }

    #[test]
    fn expansion_examples() {
        let one = LaurentPoly::one(1);
        let tinv = t().pow(-1).unwrap();
        let p = &(&one + &t()) * &(&one + &tinv);
        assert_eq!(p.to_text(&["t"]), "t + 2 + t^-1");
        let q = (&t() - &tinv).pow(2).unwrap();
        assert_eq!(q.to_text(&["t"]), "t^2 - 2 + t^-2");
        assert_eq!(t().pow(-3).unwrap(), LaurentPoly::var(1, 0, -3));
    }

    #[test]
    fn negative_power_of_non_unit_fails() {
        let p = &LaurentPoly::one(1) + &t();
        assert_eq!(p.pow(-1), Err(LaurentError::NotAUnit));
        let two_t = t().scale(&coeff(2));
        assert_eq!(two_t.pow(-1), Err(LaurentError::NotAUnit));
        // over ℚ a scaled monomial is invertible
        let half_t = t().scale(&ratio(1, 2));
        assert_eq!(
            half_t.pow(-1).unwrap(),
            LaurentPoly::var(1, 0, -1).scale(&coeff(2))
        );
    }

    #[test]
    fn mismatched_ambient_sets() {
        let a = LaurentPoly::var(1, 0, 1);
        let b = LaurentPoly::var(2, 0, 1);
        assert!(matches!(
            a.checked_add(&b),
            Err(LaurentError::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn substitution_examples() {
        // t ↦ d^{-1} in the (s, d) ring
        let d_inv = LaurentPoly::var(2, 1, -1);
        assert_eq!(t().substitute(std::slice::from_ref(&d_inv)).unwrap(), d_inv);
        // 1 + t ↦ 1 + t1
        let t1 = LaurentPoly::var(2, 0, 1);
        let p = &LaurentPoly::one(1) + &t();
        assert_eq!(
            p.substitute(std::slice::from_ref(&t1)).unwrap(),
            &LaurentPoly::one(2) + &t1
        );
        // negative exponent on a non-unit image
        let q = LaurentPoly::var(1, 0, -1);
        assert_eq!(
            q.substitute(&[&LaurentPoly::one(2) + &t1]),
            Err(LaurentError::NonInvertibleSubstitution { variable: 0 })
        );
    }

    #[test]
    fn exact_division_examples() {
        let tinv = t().pow(-1).unwrap();
        let num = &t().pow(2).unwrap() - &t().pow(-2).unwrap();
        let den = &t() - &tinv;
        assert_eq!(num.exact_div(&den).unwrap().unwrap(), &t() + &tinv);
        assert_eq!(
            LaurentPoly::zero(1).exact_div(&den).unwrap().unwrap(),
            LaurentPoly::zero(1)
        );
        let not_div = &t() + &LaurentPoly::one(1);
        assert_eq!(not_div.exact_div(&den).unwrap(), None);
        assert_eq!(
            num.exact_div(&LaurentPoly::zero(1)),
            Err(LaurentError::DivisionByZero)
        );
    }

    #[test]
    fn eval_examples() {
        let p = &t() + &t().pow(-1).unwrap();
        let v = p.eval_complex(&[Complex64::new(0.0, 1.0)]).unwrap();
        assert!(v.norm() < 1e-15);
        assert_eq!(
            p.eval_complex(&[Complex64::new(0.0, 0.0)]),
            Err(LaurentError::ZeroCoordinate { variable: 0 })
        );
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let x = LaurentPoly::var(2, 0, 1);
        let y = LaurentPoly::var(2, 1, -1);
        let one = LaurentPoly::one(2);
        let m = [
            [x.clone(), y.clone(), one.clone()],
            [&x * &y, one.clone(), x.clone()],
            [one.clone(), &x + &y, y.clone()],
        ];
        let rows: Vec<Vec<LaurentPoly>> = m.iter().map(|r| r.to_vec()).collect();
        assert_eq!(det_bareiss(&rows), det3(&m));
    }
}
