//! Decompositions of torus characters over the invariant subrings.
//!
//! * R(T) over R(SU(2)) with basis {1, t};
//! * R(T²) over R(SU(3)) with the six-element Steinberg basis;
//! * R(T²)^{W_I} over R(SU(3)) with basis {1, t_i, t_i^{-1}}, t_i the fixed character.
//!
//! The two SU(3) cases solve the Galois system `Σ_b c_b · (w·b) = w·f` (one equation per
//! coset representative w) by Cramer's rule and then check that every c_b is a
//! symmetric Laurent polynomial.

use std::sync::OnceLock;

use crate::error::RingError;
use crate::laurent::{det3, det_bareiss, LaurentPoly};

use super::weyl::{is_weyl_invariant, weyl_act, WeylElement};
use super::{to_invariant_ring, torus3_pow, torus3_var, RingElem, RingTag};

/// f = g₁ + t·g₂ with g₁, g₂ ∈ ℤ[ρ].
pub fn su2_decompose(f: &RingElem) -> Result<(RingElem, RingElem), RingError> {
    if f.ring() != RingTag::TorusSU2 {
        return Err(RingError::Mismatch {
            expected: RingTag::TorusSU2,
            found: f.ring(),
        });
    }
    let t = LaurentPoly::var(1, 0, 1);
    let tinv = LaurentPoly::var(1, 0, -1);
    let p = f.poly();
    let alpha = p.substitute(std::slice::from_ref(&tinv))?;
    let den = &tinv - &t;
    let num1 = &(&tinv * p) - &(&t * &alpha);
    let num2 = &alpha - p;
    let div = |num: &LaurentPoly| -> Result<RingElem, RingError> {
        let q = num
            .exact_div(&den)?
            .ok_or_else(|| RingError::Internal("t^{-1} - t does not divide".into()))?;
        to_invariant_ring(&RingElem::new_unchecked(RingTag::TorusSU2, q), RingTag::SU2)
    };
    Ok((div(&num1)?, div(&num2)?))
}

/// The basis {e, t₂, t₃, t₂^{-1}, t₁^{-1}, t₁^{-1}t₃} of R(T²) over R(SU(3)).
pub fn steinberg_basis() -> Vec<RingElem> {
    [
        LaurentPoly::one(2),
        torus3_var(2),
        torus3_var(3),
        torus3_pow(2, -1),
        torus3_pow(1, -1),
        &torus3_pow(1, -1) * &torus3_var(3),
    ]
    .into_iter()
    .map(|p| RingElem::new_unchecked(RingTag::TorusSU3, p))
    .collect()
}

struct SteinbergSystem {
    group: Vec<WeylElement>,
    det: LaurentPoly,
    /// adj[b][w], so that c_b = Σ_w adj[b][w]·(w·f) / det.
    adj: Vec<Vec<LaurentPoly>>,
}

fn steinberg_system() -> &'static SteinbergSystem {
    static SYSTEM: OnceLock<SteinbergSystem> = OnceLock::new();
    SYSTEM.get_or_init(|| {
        let group = WeylElement::all(3);
        let basis = steinberg_basis();
        let m: Vec<Vec<LaurentPoly>> = group
            .iter()
            .map(|w| {
                basis
                    .iter()
                    .map(|b| weyl_act(w, b).unwrap().into_poly())
                    .collect()
            })
            .collect();
        let det = det_bareiss(&m);
        assert!(!det.is_zero(), "Steinberg matrix is singular");
        let n = m.len();
        let mut adj = vec![vec![LaurentPoly::zero(2); n]; n];
        for b in 0..n {
            for w in 0..n {
                let minor: Vec<Vec<LaurentPoly>> = (0..n)
                    .filter(|&r| r != w)
                    .map(|r| {
                        (0..n)
                            .filter(|&c| c != b)
                            .map(|c| m[r][c].clone())
                            .collect()
                    })
                    .collect();
                let d = det_bareiss(&minor);
                adj[b][w] = if (b + w) % 2 == 0 { d } else { -d };
            }
        }
        SteinbergSystem { group, det, adj }
    })
}

fn invariant_coefficient(num: &LaurentPoly, den: &LaurentPoly) -> Result<RingElem, RingError> {
    let q = num.exact_div(den)?.ok_or_else(|| {
        RingError::DecompositionFailed("coefficient is not a Laurent polynomial".into())
    })?;
    let q = RingElem::new_unchecked(RingTag::TorusSU3, q);
    if !is_weyl_invariant(&q)? {
        return Err(RingError::DecompositionFailed(
            "coefficient is not Weyl invariant".into(),
        ));
    }
    to_invariant_ring(&q, RingTag::SU3)
}

/// Coefficients of `f` in the Steinberg basis, as elements of R(SU(3)) ⊗ ℚ.
pub fn steinberg_decompose(f: &RingElem) -> Result<Vec<RingElem>, RingError> {
    if f.ring() != RingTag::TorusSU3 {
        return Err(RingError::Mismatch {
            expected: RingTag::TorusSU3,
            found: f.ring(),
        });
    }
    let sys = steinberg_system();
    let orbit: Vec<LaurentPoly> = sys
        .group
        .iter()
        .map(|w| weyl_act(w, f).map(RingElem::into_poly))
        .collect::<Result<_, _>>()?;
    let coeffs = sys
        .adj
        .iter()
        .map(|row| {
            let mut num = LaurentPoly::zero(2);
            for (a, v) in row.iter().zip(&orbit) {
                num += &(a * v);
            }
            invariant_coefficient(&num, &sys.det)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let back = recompose(&coeffs, &steinberg_basis())?;
    if &back != f {
        return Err(RingError::Internal(
            "Steinberg recomposition mismatch".into(),
        ));
    }
    Ok(coeffs)
}

/// Σ c_b · b with c_b ∈ R(SU(3)) restricted to the torus.
pub fn recompose(coeffs: &[RingElem], basis: &[RingElem]) -> Result<RingElem, RingError> {
    let mut acc = RingElem::zero(RingTag::TorusSU3);
    for (c, b) in coeffs.iter().zip(basis) {
        let c = super::restrict(c, super::Restriction::SU3ToTorus)?;
        acc = &acc + &(&c * b);
    }
    Ok(acc)
}

/// The fixed-submodule basis {1, t_i, t_i^{-1}} for the transposition fixing t_i.
pub fn fixed_basis(fixed_index: usize) -> Vec<RingElem> {
    [
        LaurentPoly::one(2),
        torus3_var(fixed_index),
        torus3_pow(fixed_index, -1),
    ]
    .into_iter()
    .map(|p| RingElem::new_unchecked(RingTag::TorusSU3, p))
    .collect()
}

/// Coefficients of a `transposition`-invariant torus character over {1, t_i, t_i^{-1}},
/// where t_i is the character the transposition fixes.
pub fn fixed_submodule_decompose(
    f: &RingElem,
    transposition: &WeylElement,
) -> Result<Vec<RingElem>, RingError> {
    if f.ring() != RingTag::TorusSU3 {
        return Err(RingError::Mismatch {
            expected: RingTag::TorusSU3,
            found: f.ring(),
        });
    }
    let fixed: Vec<usize> = (0..3).filter(|&i| transposition.image(i) == i).collect();
    if transposition.len() != 3 || fixed.len() != 1 {
        return Err(RingError::DecompositionFailed(format!(
            "{transposition} is not a transposition of three letters"
        )));
    }
    if &weyl_act(transposition, f)? != f {
        return Err(RingError::NotInvariant);
    }
    let i = fixed[0];
    // coset representatives sending t_i to t_l
    let reps: Vec<WeylElement> = (0..3)
        .map(|l| WeylElement::transposition(3, i, l))
        .collect();
    let row = |l: usize| -> [LaurentPoly; 3] {
        [
            LaurentPoly::one(2),
            torus3_var(l + 1),
            torus3_pow(l + 1, -1),
        ]
    };
    let m: [[LaurentPoly; 3]; 3] = [row(0), row(1), row(2)];
    let rhs: Vec<LaurentPoly> = reps
        .iter()
        .map(|w| weyl_act(w, f).map(RingElem::into_poly))
        .collect::<Result<_, _>>()?;
    let det = det3(&m);
    let coeffs = (0..3)
        .map(|col| {
            let mut mc = m.clone();
            for (r, v) in rhs.iter().enumerate() {
                mc[r][col] = v.clone();
            }
            invariant_coefficient(&det3(&mc), &det)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let back = recompose(&coeffs, &fixed_basis(i + 1))?;
    if &back != f {
        return Err(RingError::Internal(
            "fixed-submodule recomposition mismatch".into(),
        ));
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su2(text: &str) -> RingElem {
        RingElem::parse(RingTag::SU2, text).unwrap()
    }

    fn su3(text: &str) -> RingElem {
        RingElem::parse(RingTag::SU3, text).unwrap()
    }

    fn torus(text: &str) -> RingElem {
        RingElem::parse(RingTag::TorusSU3, text).unwrap()
    }

    #[test]
    fn su2_examples() {
        let t = RingElem::parse(RingTag::TorusSU2, "t").unwrap();
        assert_eq!(su2_decompose(&t).unwrap(), (su2("0"), su2("1")));
        let t2 = RingElem::parse(RingTag::TorusSU2, "t^2").unwrap();
        assert_eq!(su2_decompose(&t2).unwrap(), (su2("-1"), su2("rho")));
        let f = RingElem::parse(RingTag::TorusSU2, "1 + t").unwrap();
        assert_eq!(su2_decompose(&f).unwrap(), (su2("1"), su2("1")));
    }

    #[test]
    fn steinberg_examples() {
        let z = su3("0");
        let one = su3("1");
        assert_eq!(
            steinberg_decompose(&torus("t2")).unwrap(),
            vec![
                z.clone(),
                one.clone(),
                z.clone(),
                z.clone(),
                z.clone(),
                z.clone()
            ]
        );
        assert_eq!(
            steinberg_decompose(&torus("t1")).unwrap(),
            vec![
                su3("s1"),
                su3("-1"),
                su3("-1"),
                z.clone(),
                z.clone(),
                z.clone()
            ]
        );
        assert_eq!(
            steinberg_decompose(&torus("1")).unwrap(),
            vec![one, z.clone(), z.clone(), z.clone(), z.clone(), z]
        );
    }

    #[test]
    fn fixed_examples() {
        let w23 = WeylElement::transposition(3, 1, 2);
        let w12 = WeylElement::transposition(3, 0, 1);
        assert_eq!(
            fixed_submodule_decompose(&torus("1"), &w12).unwrap(),
            vec![su3("1"), su3("0"), su3("0")]
        );
        assert_eq!(
            fixed_submodule_decompose(&torus("t1"), &w23).unwrap(),
            vec![su3("0"), su3("1"), su3("0")]
        );
        assert_eq!(
            fixed_submodule_decompose(&torus("t2 + t3"), &w23).unwrap(),
            vec![su3("s1"), su3("-1"), su3("0")]
        );
        assert_eq!(
            fixed_submodule_decompose(&torus("t2"), &w23),
            Err(RingError::NotInvariant)
        );
        assert!(fixed_submodule_decompose(&torus("1"), &WeylElement::identity(3)).is_err());
    }
}
