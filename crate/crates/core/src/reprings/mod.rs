//! Representation rings of T, T², U(2), SU(2), SU(3), their Weyl actions and
//! restriction homomorphisms.
//!
//! | tag        | ring                                       | variables  |
//! |------------|--------------------------------------------|------------|
//! | `TorusSU2` | ℤ[t^{±1}]                                  | `t`        |
//! | `TorusSU3` | ℤ[t₁^{±1},t₂^{±1},t₃^{±1}]/(t₁t₂t₃ − 1)     | `t1`, `t2` |
//! | `U2`       | ℤ[s, d^{±1}]                               | `s`, `d`   |
//! | `SU2`      | ℤ[ρ]                                       | `rho`      |
//! | `SU3`      | ℤ[s₁, s₂]                                  | `s1`, `s2` |
//!
//! `TorusSU3` elements are stored with t₃ eliminated as (t₁t₂)^{-1}.

mod decompose;
mod localized;
mod weyl;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{ParseError, RingError};
use crate::laurent::{Coeff, LaurentPoly, Monomial};
use crate::text::parse_poly;

pub use decompose::{
    fixed_basis, fixed_submodule_decompose, recompose, steinberg_basis, steinberg_decompose,
    su2_decompose,
};
pub use localized::Localized;
pub use weyl::{is_weyl_invariant, symmetrize, weyl_act, WeylElement};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum RingTag {
    TorusSU2,
    TorusSU3,
    U2,
    SU2,
    SU3,
}

impl RingTag {
    pub fn nvars(self) -> usize {
        match self {
            RingTag::TorusSU2 | RingTag::SU2 => 1,
            RingTag::TorusSU3 | RingTag::U2 | RingTag::SU3 => 2,
        }
    }

    pub fn var_names(self) -> &'static [&'static str] {
        match self {
            RingTag::TorusSU2 => &["t"],
            RingTag::TorusSU3 => &["t1", "t2"],
            RingTag::U2 => &["s", "d"],
            RingTag::SU2 => &["rho"],
            RingTag::SU3 => &["s1", "s2"],
        }
    }

    pub fn tex_names(self) -> &'static [&'static str] {
        match self {
            RingTag::TorusSU2 => &["t"],
            RingTag::TorusSU3 => &["t_1", "t_2"],
            RingTag::U2 => &["s", "d"],
            RingTag::SU2 => &["\\rho"],
            RingTag::SU3 => &["s_1", "s_2"],
        }
    }

    /// Name bindings accepted by the text parser; `TorusSU3` also binds `t3`.
    pub fn bindings(self) -> Vec<(&'static str, LaurentPoly)> {
        let mut b = crate::text::plain_bindings(self.var_names());
        if self == RingTag::TorusSU3 {
            b.push(("t3", torus3_var(3)));
        }
        b
    }

    /// Whether `p` is a legal representative (polynomial rings forbid negative
    /// exponents; in U(2) only `d` may be inverted).
    pub fn admits(self, p: &LaurentPoly) -> bool {
        if p.nvars() != self.nvars() {
            return false;
        }
        match self {
            RingTag::TorusSU2 | RingTag::TorusSU3 => true,
            RingTag::SU2 | RingTag::SU3 => p.is_polynomial(),
            RingTag::U2 => p.terms().all(|(m, _)| m.exponents()[0] >= 0),
        }
    }
}

/// Torus character t_i (i ∈ {1,2,3}) in eliminated SU(3) torus coordinates.
pub fn torus3_var(i: usize) -> LaurentPoly {
    match i {
        1 => LaurentPoly::var(2, 0, 1),
        2 => LaurentPoly::var(2, 1, 1),
        3 => LaurentPoly::term(Coeff::from_integer(1.into()), Monomial::new(vec![-1, -1])),
        _ => panic!("torus index {i} out of range"),
    }
}

/// t_i^k in eliminated coordinates.
pub fn torus3_pow(i: usize, k: i32) -> LaurentPoly {
    torus3_var(i)
        .pow(k as i64)
        .expect("torus characters are units")
}

/// An element of one of the working rings.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    ring: RingTag,
    poly: LaurentPoly,
}

impl RingElem {
    pub fn new(ring: RingTag, poly: LaurentPoly) -> Result<Self, RingError> {
        if !ring.admits(&poly) {
            return Err(RingError::InvalidElement(ring));
        }
        Ok(RingElem { ring, poly })
    }

    pub(crate) fn new_unchecked(ring: RingTag, poly: LaurentPoly) -> Self {
        debug_assert!(ring.admits(&poly), "{poly:?} is not in {ring:?}");
        RingElem { ring, poly }
    }

    pub fn zero(ring: RingTag) -> Self {
        RingElem::new_unchecked(ring, LaurentPoly::zero(ring.nvars()))
    }

    pub fn one(ring: RingTag) -> Self {
        RingElem::new_unchecked(ring, LaurentPoly::one(ring.nvars()))
    }

    pub fn from_int(ring: RingTag, c: i64) -> Self {
        RingElem::new_unchecked(ring, LaurentPoly::from_int(ring.nvars(), c))
    }

    /// Generator by index (e.g. `s1` is `gen(SU3, 0)`).
    pub fn gen(ring: RingTag, index: usize) -> Self {
        RingElem::new_unchecked(ring, LaurentPoly::var(ring.nvars(), index, 1))
    }

    pub fn parse(ring: RingTag, text: &str) -> Result<Self, ParseError> {
        let p = parse_poly(text, &ring.bindings(), ring.nvars())?;
        RingElem::new(ring, p).map_err(|e| ParseError::new(0, e.to_string()))
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.poly.is_one()
    }

    pub fn to_text(&self) -> String {
        self.poly.to_text(self.ring.var_names())
    }

    pub fn to_tex(&self) -> String {
        self.poly.display_tex(self.ring.tex_names()).to_string()
    }

    fn expect_same(&self, other: &RingElem) -> Result<(), RingError> {
        if self.ring != other.ring {
            return Err(RingError::Mismatch {
                expected: self.ring,
                found: other.ring,
            });
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &RingElem) -> Result<RingElem, RingError> {
        self.expect_same(other)?;
        Ok(RingElem::new_unchecked(self.ring, &self.poly * &other.poly))
    }

    pub fn checked_add(&self, other: &RingElem) -> Result<RingElem, RingError> {
        self.expect_same(other)?;
        Ok(RingElem::new_unchecked(self.ring, &self.poly + &other.poly))
    }

    pub fn scale(&self, c: &Coeff) -> RingElem {
        RingElem::new_unchecked(self.ring, self.poly.scale(c))
    }

    pub fn pow(&self, k: u32) -> RingElem {
        RingElem::new_unchecked(
            self.ring,
            self.poly.pow(k as i64).expect("nonnegative power"),
        )
    }

    /// Exact division inside the ring; `Ok(None)` when not exact.
    pub fn exact_div(&self, den: &RingElem) -> Result<Option<RingElem>, RingError> {
        self.expect_same(den)?;
        Ok(self
            .poly
            .exact_div(&den.poly)?
            .filter(|q| self.ring.admits(q))
            .map(|q| RingElem::new_unchecked(self.ring, q)))
    }
}

/// Serialised as `{"ring": ..., "value": "<canonical text>"}`.
impl Serialize for RingElem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("RingElem", 2)?;
        s.serialize_field("ring", &self.ring)?;
        s.serialize_field("value", &self.to_text())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for RingElem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            ring: RingTag,
            value: String,
        }
        let raw = Raw::deserialize(deserializer)?;
        RingElem::parse(raw.ring, &raw.value).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.ring, self.to_text())
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        RingElem::new_unchecked(self.ring, &self.poly - &rhs.poly)
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem::new_unchecked(self.ring, -&self.poly)
    }
}

/// The three edges I ⊂ {0,1,2}, |I| = 2, of the 2-simplex, in the fixed order
/// {0,1}, {1,2}, {0,2}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Edge {
    E01,
    E12,
    E02,
}

impl Edge {
    pub const ALL: [Edge; 3] = [Edge::E01, Edge::E12, Edge::E02];

    /// Index i of the torus character t_i fixed by the edge's Weyl stabiliser;
    /// d^{-1} restricts to t_i.
    pub fn fixed_index(self) -> usize {
        match self {
            Edge::E01 => 1,
            Edge::E12 => 2,
            Edge::E02 => 3,
        }
    }

    /// The two coordinates {j, k} swapped by the stabiliser; s restricts to t_j + t_k.
    pub fn paired(self) -> (usize, usize) {
        match self {
            Edge::E01 => (2, 3),
            Edge::E12 => (1, 3),
            Edge::E02 => (1, 2),
        }
    }

    /// The transposition generating the stabiliser W_I.
    pub fn transposition(self) -> WeylElement {
        let (j, k) = self.paired();
        WeylElement::transposition(3, j - 1, k - 1)
    }

    pub fn label(self) -> &'static str {
        match self {
            Edge::E01 => "{0,1}",
            Edge::E12 => "{1,2}",
            Edge::E02 => "{0,2}",
        }
    }
}

/// Restriction homomorphisms between the working rings.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Restriction {
    SU3ToU2,
    SU2ToTorus,
    SU3ToTorus,
    U2ToTorus(Edge),
}

impl Restriction {
    pub fn source(self) -> RingTag {
        match self {
            Restriction::SU3ToU2 | Restriction::SU3ToTorus => RingTag::SU3,
            Restriction::SU2ToTorus => RingTag::SU2,
            Restriction::U2ToTorus(_) => RingTag::U2,
        }
    }

    pub fn target(self) -> RingTag {
        match self {
            Restriction::SU3ToU2 => RingTag::U2,
            Restriction::SU2ToTorus => RingTag::TorusSU2,
            Restriction::SU3ToTorus | Restriction::U2ToTorus(_) => RingTag::TorusSU3,
        }
    }

    /// Images of the source generators.
    pub fn images(self) -> Vec<LaurentPoly> {
        match self {
            Restriction::SU3ToU2 => {
                let s = LaurentPoly::var(2, 0, 1);
                let dinv = LaurentPoly::var(2, 1, -1);
                let d = LaurentPoly::var(2, 1, 1);
                vec![&s + &dinv, &(&dinv * &s) + &d]
            }
            Restriction::SU2ToTorus => {
                vec![&LaurentPoly::var(1, 0, 1) + &LaurentPoly::var(1, 0, -1)]
            }
            Restriction::SU3ToTorus => {
                let (t1, t2, t3) = (torus3_var(1), torus3_var(2), torus3_var(3));
                let e1 = &(&t1 + &t2) + &t3;
                let e2 = &(&(&t1 * &t2) + &(&t1 * &t3)) + &(&t2 * &t3);
                vec![e1, e2]
            }
            Restriction::U2ToTorus(edge) => {
                let (j, k) = edge.paired();
                let (tj, tk) = (torus3_var(j), torus3_var(k));
                vec![&tj + &tk, &tj * &tk]
            }
        }
    }
}

/// Applies a restriction homomorphism.
pub fn restrict(x: &RingElem, map: Restriction) -> Result<RingElem, RingError> {
    if x.ring() != map.source() {
        return Err(RingError::Mismatch {
            expected: map.source(),
            found: x.ring(),
        });
    }
    let p = x.poly().substitute(&map.images())?;
    RingElem::new(map.target(), p)
}

/// Rewrites a symmetric polynomial in n variables (nonnegative exponents) as a
/// polynomial in the elementary symmetric polynomials e₁..eₙ.
fn symmetric_to_elementary(p: &LaurentPoly) -> Result<LaurentPoly, RingError> {
    let n = p.nvars();
    let vars: Vec<LaurentPoly> = (0..n).map(|i| LaurentPoly::var(n, i, 1)).collect();
    // e_k as polynomials in the n variables
    let mut elem = vec![LaurentPoly::one(n)];
    for k in 1..=n {
        let mut e = LaurentPoly::zero(n);
        for subset in subsets(n, k) {
            let mut m = LaurentPoly::one(n);
            for i in subset {
                m = &m * &vars[i];
            }
            e += &m;
        }
        elem.push(e);
    }
    let mut power_cache: Vec<Vec<LaurentPoly>> = vec![vec![LaurentPoly::one(n)]; n + 1];
    let mut rem = p.clone();
    let mut out = LaurentPoly::zero(n);
    while let Some((m, c)) = rem.leading() {
        let a = m.exponents().to_vec();
        if a.iter().any(|&e| e < 0) || a.windows(2).any(|w| w[0] < w[1]) {
            return Err(RingError::NotInvariant);
        }
        let c = c.clone();
        let mut prod = LaurentPoly::constant(n, c.clone());
        let mut out_exp = vec![0i32; n];
        for k in 1..=n {
            let next = if k < n { a[k] } else { 0 };
            let pw = (a[k - 1] - next) as usize;
            out_exp[k - 1] = pw as i32;
            while power_cache[k].len() <= pw {
                let last = power_cache[k].last().unwrap().clone();
                power_cache[k].push(&last * &elem[k]);
            }
            prod = &prod * &power_cache[k][pw];
        }
        rem -= &prod;
        out.add_term(Monomial::new(out_exp), c);
    }
    Ok(out)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rewrites a Weyl-invariant element in the generators of the invariant ring.
///
/// Supported: `TorusSU2 → SU2` (t + t^{-1} ↦ ρ) and `TorusSU3 → SU3`
/// (elementary symmetric rewrite with e₃ = 1).
pub fn to_invariant_ring(x: &RingElem, target: RingTag) -> Result<RingElem, RingError> {
    match (x.ring(), target) {
        (RingTag::TorusSU2, RingTag::SU2) => {
            if !is_weyl_invariant(x)? {
                return Err(RingError::NotInvariant);
            }
            let rho = &LaurentPoly::var(1, 0, 1) + &LaurentPoly::var(1, 0, -1);
            let mut rem = x.poly().clone();
            let mut out = LaurentPoly::zero(1);
            while let Some((m, c)) = rem.leading() {
                let k = m.exponents()[0];
                if k < 0 {
                    return Err(RingError::Internal(
                        "invariant rewrite left a remainder".into(),
                    ));
                }
                let c = c.clone();
                rem -= &rho.pow(k as i64)?.scale(&c);
                out.add_term(Monomial::new(vec![k]), c);
            }
            Ok(RingElem::new_unchecked(RingTag::SU2, out))
        }
        (RingTag::TorusSU3, RingTag::SU3) => {
            if !is_weyl_invariant(x)? {
                return Err(RingError::NotInvariant);
            }
            // lift (a, b) to the representative (a-m, b-m, -m) of (a, b, 0) + ℤ(1,1,1)
            let lifted = LaurentPoly::from_terms(
                3,
                x.poly().terms().map(|(m, c)| {
                    let (a, b) = (m.exponents()[0], m.exponents()[1]);
                    let lo = a.min(b).min(0);
                    (c.clone(), vec![a - lo, b - lo, -lo])
                }),
            );
            let e = symmetric_to_elementary(&lifted)?;
            let out = LaurentPoly::from_terms(
                2,
                e.terms()
                    .map(|(m, c)| (c.clone(), vec![m.exponents()[0], m.exponents()[1]])),
            );
            let back = restrict(
                &RingElem::new_unchecked(RingTag::SU3, out.clone()),
                Restriction::SU3ToTorus,
            )?;
            if &back != x {
                return Err(RingError::Internal(
                    "invariant rewrite does not round-trip".into(),
                ));
            }
            Ok(RingElem::new_unchecked(RingTag::SU3, out))
        }
        (from, to) => Err(RingError::UnsupportedMap { from, to }),
    }
}

/// Rewrites a symmetric Laurent polynomial in two line characters (x, y) as an element
/// of R(U(2)) via s = x + y, d = xy.
pub fn symmetric_pair_to_u2(p: &LaurentPoly) -> Result<RingElem, RingError> {
    if p.nvars() != 2 {
        return Err(RingError::InvalidElement(RingTag::U2));
    }
    let swapped = LaurentPoly::from_terms(
        2,
        p.terms()
            .map(|(m, c)| (c.clone(), vec![m.exponents()[1], m.exponents()[0]])),
    );
    if &swapped != p {
        return Err(RingError::NotInvariant);
    }
    let shift = (0..2)
        .filter_map(|i| p.exponent_range(i).map(|(lo, _)| -lo))
        .max()
        .unwrap_or(0)
        .max(0);
    let shifted = p.mul_monomial(&Monomial::new(vec![shift, shift]));
    let e = symmetric_to_elementary(&shifted)?;
    let out = e.mul_monomial(&Monomial::new(vec![0, -shift]));
    RingElem::new(RingTag::U2, out)
}
