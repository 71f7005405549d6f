//! Symmetric functions in t₁, t₂, t₃ modulo t₁t₂t₃ = 1.
//!
//! Δ here is ∏_{i<j}(t_i − t_j) = (t₁−t₂)(t₁−t₃)(t₂−t₃). The cyclic product
//! (t₁−t₂)(t₂−t₃)(t₃−t₁) equals −Δ; with the product over i<j the bialternant of the
//! rows (t^{k+2}; t; 1) is h_k on the nose.

use crate::error::RingError;
use crate::laurent::LaurentPoly;
use crate::reprings::{to_invariant_ring, torus3_var, weyl_act, RingElem, RingTag, WeylElement};

/// Complete homogeneous symmetric polynomial h_k in ℤ[s₁,s₂]; zero for k < 0.
pub fn h(k: i64) -> RingElem {
    if k < 0 {
        return RingElem::zero(RingTag::SU3);
    }
    h_sequence(k as usize).pop().unwrap()
}

/// h_0, …, h_n via h_k = s₁h_{k−1} − s₂h_{k−2} + h_{k−3}.
pub fn h_sequence(n: usize) -> Vec<RingElem> {
    let s1 = RingElem::gen(RingTag::SU3, 0);
    let s2 = RingElem::gen(RingTag::SU3, 1);
    let zero = RingElem::zero(RingTag::SU3);
    let mut out: Vec<RingElem> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let at = |j: isize| -> &RingElem {
            if j < 0 {
                &zero
            } else {
                &out[j as usize]
            }
        };
        let next = if k == 0 {
            RingElem::one(RingTag::SU3)
        } else {
            let k = k as isize;
            let a = &s1 * at(k - 1);
            let b = &s2 * at(k - 2);
            &(&a - &b) + at(k - 3)
        };
        out.push(next);
    }
    out
}

/// An element of the SU(3) torus ring on which every w acts by sign(w).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntisymmetricElement {
    value: RingElem,
}

impl AntisymmetricElement {
    pub fn new(value: RingElem) -> Result<Self, RingError> {
        if !is_antisymmetric(&value)? {
            return Err(RingError::NotInvariant);
        }
        Ok(AntisymmetricElement { value })
    }

    pub fn value(&self) -> &RingElem {
        &self.value
    }

    pub fn into_value(self) -> RingElem {
        self.value
    }
}

/// w·x = sign(w)·x, checked on the generating transpositions.
pub fn is_antisymmetric(x: &RingElem) -> Result<bool, RingError> {
    if x.ring() != RingTag::TorusSU3 {
        return Err(RingError::Mismatch {
            expected: RingTag::TorusSU3,
            found: x.ring(),
        });
    }
    let neg = -x;
    for w in [
        WeylElement::transposition(3, 0, 1),
        WeylElement::transposition(3, 1, 2),
    ] {
        if weyl_act(&w, x)? != neg {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Δ = (t₁−t₂)(t₁−t₃)(t₂−t₃).
pub fn vandermonde() -> AntisymmetricElement {
    let t: Vec<LaurentPoly> = (1..=3).map(torus3_var).collect();
    let d = &(&(&t[0] - &t[1]) * &(&t[0] - &t[2])) * &(&t[1] - &t[2]);
    AntisymmetricElement {
        value: RingElem::new(RingTag::TorusSU3, d).unwrap(),
    }
}

/// Ψ(p) = p/Δ, rewritten in s₁, s₂.
pub fn psi(p: &AntisymmetricElement) -> Result<RingElem, RingError> {
    let q = p
        .value
        .exact_div(vandermonde().value())?
        .ok_or_else(|| RingError::Internal("antisymmetric element not divisible by Δ".into()))?;
    to_invariant_ring(&q, RingTag::SU3)
}

/// The 3×3 matrix whose row r is (seed_r, τ₁₂·seed_r, τ₁₃·seed_r).
pub fn galois_matrix(seeds: &[RingElem; 3]) -> Result<[[LaurentPoly; 3]; 3], RingError> {
    let cols = [
        WeylElement::identity(3),
        WeylElement::transposition(3, 0, 1),
        WeylElement::transposition(3, 0, 2),
    ];
    let w23 = WeylElement::transposition(3, 1, 2);
    let row = |seed: &RingElem| -> Result<[LaurentPoly; 3], RingError> {
        if &weyl_act(&w23, seed)? != seed {
            return Err(RingError::NotInvariant);
        }
        Ok([
            weyl_act(&cols[0], seed)?.into_poly(),
            weyl_act(&cols[1], seed)?.into_poly(),
            weyl_act(&cols[2], seed)?.into_poly(),
        ])
    };
    Ok([row(&seeds[0])?, row(&seeds[1])?, row(&seeds[2])?])
}

/// +(1/Δ)·det of the Galois matrix of `seeds`. Each seed is the t₁-column entry of its
/// row and must be fixed by (23).
pub fn bialternant(seeds: &[RingElem; 3]) -> Result<RingElem, RingError> {
    let m = galois_matrix(seeds)?;
    let det = RingElem::new(RingTag::TorusSU3, crate::laurent::det3(&m))?;
    let anti = AntisymmetricElement::new(det)
        .map_err(|_| RingError::Internal("Galois determinant is not antisymmetric".into()))?;
    psi(&anti)
}
