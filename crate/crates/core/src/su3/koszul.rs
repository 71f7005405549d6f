//! The Koszul route: θ_jk, the antisymmetric generators q_±, and χ₁, χ₂.

use serde::{Deserialize, Serialize};

use crate::error::{PipelineError, RingError};
use crate::expfunctor::ExponentialFunctor;
use crate::groebner::Ideal;
use crate::laurent::LaurentPoly;
use crate::reprings::{torus3_pow, torus3_var, RingElem, RingTag};
use crate::symfunc::{bialternant, psi, AntisymmetricElement};
use crate::Check;

fn torus(p: LaurentPoly) -> RingElem {
    RingElem::new(RingTag::TorusSU3, p).expect("torus character")
}

/// θ₁₂, θ₂₃, θ₃₁ with θ_jk = F(t_j) − F(t_k).
pub fn thetas(f: &ExponentialFunctor) -> [RingElem; 3] {
    let ft = [f.f_torus(1), f.f_torus(2), f.f_torus(3)];
    [&ft[0] - &ft[1], &ft[1] - &ft[2], &ft[2] - &ft[0]]
}

/// q_± = θ₁₂t₃^{±1} + θ₂₃t₁^{±1} + θ₃₁t₂^{±1}.
pub fn q_pm(theta: &[RingElem; 3], sign: i32) -> RingElem {
    let t = |i: usize| torus(torus3_pow(i, sign));
    &(&(&theta[0] * &t(3)) + &(&theta[1] * &t(1))) + &(&theta[2] * &t(2))
}

/// (χ₁, χ₂) for the seed G(t₁): the bialternants of the rows (G, t, 1) and (G·t, t, 1).
pub fn chi_pair(seed: &RingElem) -> Result<(RingElem, RingElem), RingError> {
    let t1 = torus(torus3_var(1));
    let one = RingElem::one(RingTag::TorusSU3);
    let chi1 = bialternant(&[seed.clone(), t1.clone(), one.clone()])?;
    let chi2 = bialternant(&[seed * &t1, t1, one])?;
    Ok((chi1, chi2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulRoute {
    pub q_plus: RingElem,
    pub q_minus: RingElem,
    pub psi_plus: RingElem,
    pub psi_minus: RingElem,
    pub chi1: RingElem,
    pub chi2: RingElem,
}

impl KoszulRoute {
    /// Generators of J_F.
    pub fn j_f(&self) -> [RingElem; 2] {
        [self.chi1.clone(), self.chi2.clone()]
    }
}

pub fn koszul_route(f: &ExponentialFunctor) -> Result<(KoszulRoute, Vec<Check>), PipelineError> {
    let theta = thetas(f);
    let mut checks = vec![Check::symbolic(
        "theta12 + theta23 + theta31 = 0",
        (&(&theta[0] + &theta[1]) + &theta[2]).is_zero(),
    )];
    let q_plus = q_pm(&theta, 1);
    let q_minus = q_pm(&theta, -1);
    let anti = |q: &RingElem, name: &str| {
        AntisymmetricElement::new(q.clone())
            .map_err(|_| PipelineError::IdentityFailed(format!("{name} is not antisymmetric")))
    };
    let psi_plus = psi(&anti(&q_plus, "q_+")?)?;
    let psi_minus = psi(&anti(&q_minus, "q_-")?)?;
    checks.push(Check::symbolic("q_+ and q_- are antisymmetric", true));
    let (chi1, chi2) = chi_pair(&f.f_torus(1))?;
    checks.push(Check::symbolic("chi1 = -Psi(q_+)", chi1 == -&psi_plus));
    checks.push(Check::symbolic("chi2 = Psi(q_-)", chi2 == psi_minus));
    Ok((
        KoszulRoute {
            q_plus,
            q_minus,
            psi_plus,
            psi_minus,
            chi1,
            chi2,
        },
        checks,
    ))
}

/// Outcome of the regular-sequence test for (F(t₂) − F(t₁), F(t₃) − F(t₂)).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RegularSequence {
    Certified,
    /// deg F ≤ 0: the θ's vanish and the hypothesis is not met.
    Skipped,
    /// An element of (I : b) outside I, as a polynomial in t1, t2.
    Failed {
        witness: String,
    },
}

impl RegularSequence {
    pub fn is_certified(&self) -> bool {
        matches!(self, RegularSequence::Certified)
    }
}

/// Works in ℚ[t₁,t₂] (t₃ = (t₁t₂)^{-1}): with a, b the two differences shifted to
/// polynomials and u = t₁t₂·F(ρ), checks (I : b) = I for I = (a) : u^∞.
pub fn regular_sequence_check(f: &ExponentialFunctor) -> Result<RegularSequence, PipelineError> {
    if f.max_degree() <= 0 {
        return Ok(RegularSequence::Skipped);
    }
    let ft = [f.f_torus(1), f.f_torus(2), f.f_torus(3)];
    let (a, _) = (&ft[1] - &ft[0]).into_poly().shift_to_polynomial();
    let (b, _) = (&ft[2] - &ft[1]).into_poly().shift_to_polynomial();
    let (fr, _) = f.f_rho_radical_torus().into_poly().shift_to_polynomial();
    let u = &(&LaurentPoly::var(2, 0, 1) * &LaurentPoly::var(2, 1, 1)) * &fr;
    let ideal = Ideal::new(&[a])?.saturate(&u)?;
    let quotient = ideal.colon(&b)?;
    for g in quotient.basis() {
        if !ideal.contains(&g)? {
            return Ok(RegularSequence::Failed {
                witness: g.to_text(&["t1", "t2"]),
            });
        }
    }
    Ok(RegularSequence::Certified)
}

/// Saturation of (χ₁, χ₂) by F(ρ), or by anything with the same radical.
pub fn saturated_j(chi: &[RingElem; 2], f_rho: &RingElem) -> Result<Ideal, PipelineError> {
    let gens: Vec<LaurentPoly> = chi.iter().map(|c| c.poly().clone()).collect();
    Ok(Ideal::new(&gens)?.saturate(f_rho.poly())?)
}

/// Replacing every F(t_i) by F(t_i)^{-1} scales each θ by a unit; up to F(ρ) this is
/// the Koszul route for the seed F(t₂)F(t₃). Returns whether both saturations agree.
pub fn orientation_invariant(f: &ExponentialFunctor, j_sat: &Ideal) -> Result<bool, PipelineError> {
    let seed = &f.f_torus(2) * &f.f_torus(3);
    let (c1, c2) = chi_pair(&seed)?;
    let other = saturated_j(&[c1, c2], &f.f_rho_radical())?;
    Ok(&other == j_sat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expfunctor::parse_functor;
    use crate::symfunc::h;

    fn su3(text: &str) -> RingElem {
        RingElem::parse(RingTag::SU3, text).unwrap()
    }

    #[test]
    fn classical_family() {
        let f = parse_functor("ext_top").unwrap();
        let (k, checks) = koszul_route(&f).unwrap();
        assert!(k.q_plus.is_zero());
        assert!(checks.iter().all(|c| c.passed));
        for m in 1..=6 {
            let f = parse_functor(&format!("ext_top^{m}")).unwrap();
            let (k, _) = koszul_route(&f).unwrap();
            assert_eq!(k.psi_plus, -&h(m - 2), "m = {m}");
            assert_eq!(k.psi_minus, h(m - 1), "m = {m}");
        }
    }

    #[test]
    fn full_twist_three() {
        let f = parse_functor("ext_full^3").unwrap();
        let (k, _) = koszul_route(&f).unwrap();
        assert_eq!(k.chi1, su3("3 + s1"));
        assert_eq!(k.chi2, su3("3 + 3*s1 + s1^2 - s2"));
    }

    #[test]
    fn regular_sequences() {
        for spec in ["ext_top", "ext_full", "ext_full^2"] {
            let f = parse_functor(spec).unwrap();
            assert_eq!(
                regular_sequence_check(&f).unwrap(),
                RegularSequence::Certified,
                "{spec}"
            );
        }
        let f = parse_functor("poly:2").unwrap();
        assert_eq!(
            regular_sequence_check(&f).unwrap(),
            RegularSequence::Skipped
        );
    }

    #[test]
    fn orientation() {
        for spec in ["ext_full^3", "ext_top^3", "fw(2)"] {
            let f = parse_functor(spec).unwrap();
            let (k, _) = koszul_route(&f).unwrap();
            let j = saturated_j(&k.j_f(), &f.f_rho_radical()).unwrap();
            assert!(orientation_invariant(&f, &j).unwrap(), "{spec}");
        }
    }
}
