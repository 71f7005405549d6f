//! Rational twisted K-theory of SU(3): K_0 ⊗ ℚ = (R_F(SU(3)) ⊗ ℚ)/J_F and K_1 ⊗ ℚ = 0.

mod complex;
mod koszul;

pub use complex::{
    bredon_identities, build_differentials, generic_rank, rational_cohomology, Cohomology,
    GenericRank, MatrixExport, Su3ChainComplex,
};
pub use koszul::{
    chi_pair, koszul_route, orientation_invariant, q_pm, regular_sequence_check, saturated_j,
    thetas, KoszulRoute, RegularSequence,
};

use serde::{Deserialize, Serialize};

use crate::error::PipelineError;
use crate::expfunctor::ExponentialFunctor;
use crate::groebner::Dimension;
use crate::laurent::Coeff;
use crate::reprings::RingElem;
use crate::symfunc::h;
use crate::Check;

/// Which computation supplies the dimension of K_0 ⊗ ℚ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    #[default]
    Koszul,
    Complex,
    Both,
}

#[derive(Clone, Debug, Default)]
pub struct Su3Options {
    pub route: Route,
    /// Seed for the generic-rank spot check of the complex route.
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum K1Certificate {
    /// deg F > 0 and the regular-sequence test passed.
    RegularSequence,
    /// H⁰ and H¹ of the localized complex vanish.
    ComplexRoute,
}

/// χ₁, χ₂ in the basis h_k = Sym^k(ρ), available when F is a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaExpansions {
    pub chi1_h: String,
    pub chi2_h: String,
    pub sigma1: String,
    pub sigma2: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub koszul: Dimension,
    pub complex: Dimension,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Su3Report {
    pub functor: String,
    pub character: String,
    pub warnings: Vec<String>,
    /// deg F > 0.
    pub hypothesis_ok: bool,
    pub f_rho: RingElem,
    pub koszul: KoszulRoute,
    pub chi1: RingElem,
    pub chi2: RingElem,
    pub j_f_saturated: Vec<RingElem>,
    pub k0_dimension: Dimension,
    pub k1_vanishes: bool,
    pub k1_certificates: Vec<K1Certificate>,
    pub sigma_expansions: Option<SigmaExpansions>,
    pub regular_sequence: RegularSequence,
    pub regular_sequence_certified: bool,
    pub cohomology: Option<Cohomology>,
    pub cross_check: Option<CrossCheck>,
    pub checks: Vec<Check>,
}

impl Su3Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn linear_text(terms: &[(Coeff, i64)], symbol: impl Fn(i64) -> String) -> String {
    let parts: Vec<String> = terms
        .iter()
        .filter(|(c, k)| *k >= 0 && !num_traits::Zero::is_zero(c))
        .map(|(c, k)| {
            if num_traits::One::is_one(c) {
                symbol(*k)
            } else {
                format!("{c}*{}", symbol(*k))
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// For F = Σ a_l t^l with l ≥ 0: χ₁ = Σ a_l h_{l−2}, χ₂ = Σ a_l h_{l−1}. Returns the
/// expansions together with whether they match `chi1`, `chi2`.
pub fn sigma_expansions(
    f: &ExponentialFunctor,
    chi1: &RingElem,
    chi2: &RingElem,
) -> Option<(SigmaExpansions, bool)> {
    if f.min_degree() < 0 {
        return None;
    }
    let coeffs: Vec<(Coeff, i64)> = f
        .character()
        .terms()
        .map(|(m, c)| (c.clone(), m.exponents()[0] as i64))
        .collect();
    let shifted =
        |s: i64| -> Vec<(Coeff, i64)> { coeffs.iter().map(|(c, l)| (c.clone(), l - s)).collect() };
    let sum = |s: i64| -> RingElem {
        let mut acc = RingElem::zero(crate::reprings::RingTag::SU3);
        for (c, l) in &coeffs {
            acc = &acc + &h(l - s).scale(c);
        }
        acc
    };
    let ok = &sum(2) == chi1 && &sum(1) == chi2;
    let exp = SigmaExpansions {
        chi1_h: linear_text(&shifted(2), |k| format!("h_{k}")),
        chi2_h: linear_text(&shifted(1), |k| format!("h_{k}")),
        sigma1: linear_text(&shifted(2), |k| format!("Sym^{k}(rho)")),
        sigma2: linear_text(&shifted(1), |k| format!("Sym^{k}(rho)")),
    };
    Some((exp, ok))
}

pub fn k_groups_su3(f: &ExponentialFunctor, opts: &Su3Options) -> Result<Su3Report, PipelineError> {
    let f_rho = f.derived().f_rho_su3;
    let hypothesis_ok = f.hypotheses().su3_ok;
    let (route, mut checks) = koszul_route(f)?;
    let j_sat = saturated_j(&route.j_f(), &f.f_rho_radical())?;
    let koszul_dim = j_sat.quotient_dimension();
    checks.push(Check::symbolic(
        "orientation reversal leaves the saturated J_F unchanged",
        orientation_invariant(f, &j_sat)?,
    ));
    let sigma = sigma_expansions(f, &route.chi1, &route.chi2).map(|(s, ok)| {
        checks.push(Check::symbolic("chi1, chi2 match the h-expansions", ok));
        s
    });
    let regular_sequence = regular_sequence_check(f)?;
    let mut certs = Vec::new();
    if hypothesis_ok && regular_sequence.is_certified() {
        certs.push(K1Certificate::RegularSequence);
    }

    let (cohomology, cross_check) = if opts.route == Route::Koszul {
        (None, None)
    } else {
        let cx = build_differentials(f)?;
        checks.extend(bredon_identities(f, &cx)?);
        let coh = rational_cohomology(&cx, opts.seed)?;
        checks.push(Check::symbolic("H0 = 0 after localization", coh.h0_zero));
        checks.push(Check::symbolic("H1 = 0 after localization", coh.h1_zero));
        checks.push(Check::symbolic(
            "A and B have full rank at random points",
            coh.generic_rank.a_full_rank == coh.generic_rank.points
                && coh.generic_rank.b_full_rank == coh.generic_rank.points,
        ));
        if coh.h0_zero && coh.h1_zero {
            certs.push(K1Certificate::ComplexRoute);
        }
        let cross = CrossCheck {
            koszul: koszul_dim,
            complex: coh.h2_dimension,
            agree: koszul_dim == coh.h2_dimension,
        };
        checks.push(Check::symbolic("dim H2 = dim R/sat(J_F)", cross.agree));
        (Some(coh), Some(cross))
    };
    let k0_dimension = match (&cohomology, opts.route) {
        (Some(c), Route::Complex) => c.h2_dimension,
        _ => koszul_dim,
    };
    Ok(Su3Report {
        functor: f.display_name(),
        character: f.character().to_text(&["t"]),
        warnings: f.warnings(),
        hypothesis_ok,
        f_rho,
        chi1: route.chi1.clone(),
        chi2: route.chi2.clone(),
        koszul: route,
        j_f_saturated: j_sat
            .basis()
            .into_iter()
            .map(|p| RingElem::new(crate::reprings::RingTag::SU3, p).expect("polynomial"))
            .collect(),
        k0_dimension,
        k1_vanishes: !certs.is_empty(),
        k1_certificates: certs,
        sigma_expansions: sigma,
        regular_sequence_certified: regular_sequence.is_certified(),
        regular_sequence,
        cohomology,
        cross_check,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expfunctor::parse_functor;

    #[test]
    fn full_twist_examples() {
        let opts = Su3Options::default();
        let dims = [
            ("ext_full", 0),
            ("ext_full^2", 0),
            ("ext_full^3", 1),
            ("ext_top^2", 0),
            ("ext_top^3", 1),
        ];
        for (spec, d) in dims {
            let r = k_groups_su3(&parse_functor(spec).unwrap(), &opts).unwrap();
            assert_eq!(r.k0_dimension, Dimension::Finite(d), "{spec}");
            assert!(r.all_passed(), "{spec}: {:?}", r.checks);
            assert!(r.k1_vanishes, "{spec}");
        }
    }

    #[test]
    fn sigma_text() {
        let f = parse_functor("ext_full^3").unwrap();
        let r = k_groups_su3(&f, &Su3Options::default()).unwrap();
        let s = r.sigma_expansions.unwrap();
        assert_eq!(s.chi1_h, "3*h_0 + h_1");
        assert_eq!(s.sigma2, "3*Sym^0(rho) + 3*Sym^1(rho) + Sym^2(rho)");
    }

    #[test]
    fn both_routes_agree() {
        let opts = Su3Options {
            route: Route::Both,
            seed: 1,
        };
        for spec in [
            "ext_full",
            "ext_top^2",
            "ext_full^2",
            "ext_full^3",
            "ext_top^3",
            "ext_top^4",
        ] {
            let r = k_groups_su3(&parse_functor(spec).unwrap(), &opts).unwrap();
            assert!(r.cross_check.as_ref().unwrap().agree, "{spec}");
            assert!(r.all_passed(), "{spec}: {:?}", r.checks);
        }
    }
}
