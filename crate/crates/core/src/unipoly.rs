//! Dense univariate polynomials over ℚ, for the SU(2) integral analysis.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::laurent::{Coeff, LaurentPoly};

/// Coefficients in increasing degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Coeff>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        UniPoly::new(c.iter().map(|&v| crate::laurent::coeff(v)).collect())
    }

    /// From a one-variable polynomial (no negative exponents).
    pub fn from_laurent(p: &LaurentPoly) -> Option<Self> {
        if p.nvars() != 1 || !p.is_polynomial() {
            return None;
        }
        let deg = p.total_degree().unwrap_or(0).max(0) as usize;
        let mut coeffs = vec![Coeff::zero(); deg + 1];
        for (m, c) in p.terms() {
            coeffs[m.exponents()[0] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            1,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (c.clone(), vec![i as i32])),
        )
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Coeff {
        self.coeffs.last().cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn scale(&self, c: &Coeff) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or_else(Coeff::zero)
                        + other.coeffs.get(i).cloned().unwrap_or_else(Coeff::zero)
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Coeff::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Coeff::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lc;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// `Some(q)` when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Coeff::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// (g, u, v) with u·self + v·other = g, g the monic gcd.
    pub fn ext_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// self / gcd(self, self').
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return UniPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Resultant via the Sylvester matrix.
    pub fn resultant(&self, other: &UniPoly) -> Coeff {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return Coeff::zero();
        };
        if m == 0 && n == 0 {
            return Coeff::one();
        }
        let size = m + n;
        let mut mat = vec![vec![Coeff::zero(); size]; size];
        for r in 0..n {
            for (i, c) in self.coeffs.iter().rev().enumerate() {
                mat[r][r + i] = c.clone();
            }
        }
        for r in 0..m {
            for (i, c) in other.coeffs.iter().rev().enumerate() {
                mat[n + r][r + i] = c.clone();
            }
        }
        det_rational(mat)
    }

    pub fn eval(&self, x: &Coeff) -> Coeff {
        self.coeffs
            .iter()
            .rev()
            .fold(Coeff::zero(), |acc, c| acc * x + c)
    }

    /// Substitutes x ↦ −x.
    pub fn negate_var(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Scales to an integral primitive polynomial with positive leading coefficient;
    /// returns it with the scalar s such that self = s · result.
    pub fn primitive(&self) -> (UniPoly, Coeff) {
        if self.is_zero() {
            return (UniPoly::zero(), Coeff::one());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let cleared: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Coeff::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut content = cleared.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if cleared.last().unwrap().is_negative() {
            content = -content;
        }
        let prim = UniPoly::new(
            cleared
                .iter()
                .map(|c| Coeff::from_integer(c / &content))
                .collect(),
        );
        (prim, Coeff::new(content, lcm))
    }

    pub fn to_text(&self, var: &str) -> String {
        self.to_laurent().to_text(&[var])
    }

    pub fn var() -> UniPoly {
        UniPoly::from_ints(&[0, 1])
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self.to_text("x"))
    }
}

/// Determinant of a rational matrix by Gaussian elimination.
pub fn det_rational(mut m: Vec<Vec<Coeff>>) -> Coeff {
    let n = m.len();
    let mut det = Coeff::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Coeff::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for k in c..n {
                let v = &f * &m[c][k];
                m[r][k] -= v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::coeff;

    #[test]
    fn gcd_and_division() {
        let a = UniPoly::from_ints(&[2, 3, 1]); // (x+1)(x+2)
        let b = UniPoly::from_ints(&[4, 4, 1]); // (x+2)^2
        assert_eq!(a.gcd(&b), UniPoly::from_ints(&[2, 1]));
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
        assert_eq!(b.squarefree_part(), UniPoly::from_ints(&[2, 1]));
        assert_eq!(
            a.exact_div(&UniPoly::from_ints(&[1, 1])),
            Some(UniPoly::from_ints(&[2, 1]))
        );
        assert_eq!(a.exact_div(&UniPoly::from_ints(&[3, 1])), None);
    }

    #[test]
    fn resultants() {
        // Res(x^2 + x - 1, x + 2) = (-2)^2 + (-2) - 1 = 1
        let g = UniPoly::from_ints(&[-1, 1, 1]);
        assert_eq!(g.resultant(&UniPoly::from_ints(&[2, 1])), coeff(1));
        // Res(x, x + 2) = 2
        assert_eq!(
            UniPoly::var().resultant(&UniPoly::from_ints(&[2, 1])),
            coeff(2)
        );
        // constant second argument: c^deg
        assert_eq!(g.resultant(&UniPoly::from_ints(&[3])), coeff(9));
        assert_eq!(g.resultant(&g), coeff(0));
    }

    #[test]
    fn primitive_part() {
        let p = UniPoly::new(vec![
            crate::laurent::ratio(-1, 2),
            coeff(0),
            crate::laurent::ratio(-3, 4),
        ]);
        let (q, s) = p.primitive();
        assert_eq!(q, UniPoly::from_ints(&[2, 0, 3]));
        assert_eq!(q.scale(&s), p);
    }
}
