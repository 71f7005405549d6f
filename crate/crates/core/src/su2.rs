//! Twisted K-theory of SU(2): K_0 = 0 and K_1 = R_F(SU(2))/(g₂(F)).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::PipelineError;
use crate::expfunctor::ExponentialFunctor;
use crate::laurent::{Coeff, LaurentPoly};
use crate::reprings::{
    is_weyl_invariant, restrict, su2_decompose, to_invariant_ring, Restriction, RingElem, RingTag,
};
use crate::unipoly::UniPoly;
use crate::Check;

/// g₁(F), g₂(F) with F(t) = g₁ + t·g₂.
pub fn g_coefficients(f: &ExponentialFunctor) -> Result<(RingElem, RingElem), PipelineError> {
    let ft = RingElem::new(RingTag::TorusSU2, f.character().clone())?;
    Ok(su2_decompose(&ft)?)
}

/// The Mayer–Vietoris matrix [[1, −g₁], [0, −g₂]].
pub fn mv_matrix(f: &ExponentialFunctor) -> Result<[[RingElem; 2]; 2], PipelineError> {
    let (g1, g2) = g_coefficients(f)?;
    Ok([
        [RingElem::one(RingTag::SU2), -&g1],
        [RingElem::zero(RingTag::SU2), -&g2],
    ])
}

/// ρ_k, the character of the irreducible representation with highest weight k
/// (ρ_{−1} = 0).
pub fn irrep(k: i64) -> RingElem {
    if k < 0 {
        return RingElem::zero(RingTag::SU2);
    }
    let mut p = LaurentPoly::zero(1);
    for j in 0..=k {
        p += &LaurentPoly::var(1, 0, (k - 2 * j) as i32);
    }
    to_invariant_ring(&RingElem::new(RingTag::TorusSU2, p).unwrap(), RingTag::SU2).unwrap()
}

/// An integral polynomial with its multiplicity in a factorisation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub factor: RingElem,
    pub multiplicity: u32,
}

/// The integral description of K_1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K1Structure {
    /// g₂ with every factor shared with F(ρ) removed, primitive over ℤ.
    pub g2_saturated: RingElem,
    /// Factors removed from g₂ (all divide a power of F(ρ)).
    pub removed: Vec<Factor>,
    /// g₂ = scalar · ∏ removed · g2_saturated.
    pub scalar: String,
    pub rank: usize,
    /// |Res(g2_saturated, F(ρ))|.
    #[serde(with = "bigint_serde")]
    pub inverted_integer: BigInt,
    /// Defining relation in x = [−ρ], e.g. "x^2 = x + 1".
    pub relation: Option<String>,
    /// Integral inverses of the removed factors modulo g2_saturated, where they exist.
    pub unit_inverses: Vec<UnitInverse>,
    pub presentation: String,
    pub description: String,
}

/// u·inverse − 1 = quotient·g2_saturated with everything integral.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitInverse {
    pub element: RingElem,
    pub inverse: RingElem,
    pub quotient: RingElem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Su2Status {
    Computed,
    /// F(t) = F(t^{-1}), so g₂ = 0 and the computation does not apply.
    HypothesisFailed,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Su2Report {
    pub functor: String,
    pub character: String,
    pub formal_character: bool,
    pub warnings: Vec<String>,
    pub status: Su2Status,
    pub g1: RingElem,
    pub g2: RingElem,
    pub g2_factored: String,
    pub f_rho: RingElem,
    pub mv_matrix: [[RingElem; 2]; 2],
    pub k0_zero: bool,
    pub k1: Option<K1Structure>,
    pub checks: Vec<Check>,
}

impl Su2Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub(crate) mod bigint_serde {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match u64::try_from(n) {
            Ok(v) => s.serialize_u64(v),
            Err(_) => s.serialize_str(&n.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(BigInt::from(v)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

fn uni(x: &RingElem) -> UniPoly {
    UniPoly::from_laurent(x.poly()).expect("R(SU(2)) elements are polynomials")
}

fn su2_elem(p: &UniPoly) -> RingElem {
    RingElem::new(RingTag::SU2, p.to_laurent()).expect("polynomial in rho")
}

/// Strips from `g` every irreducible factor it shares with `f_rho`. Returns the removed
/// factors (primitive, grouped with multiplicities) and the remaining cofactor.
pub fn strip_shared_factors(g: &UniPoly, f_rho: &UniPoly) -> (Vec<(UniPoly, u32)>, UniPoly) {
    let sq = f_rho.squarefree_part();
    let mut g = g.clone();
    let mut removed: Vec<(UniPoly, u32)> = Vec::new();
    loop {
        let d = g.gcd(&sq);
        if d.degree().unwrap_or(0) == 0 {
            break;
        }
        g = g.exact_div(&d).expect("gcd divides");
        let (prim, _) = d.primitive();
        match removed.iter_mut().find(|(p, _)| *p == prim) {
            Some((_, m)) => *m += 1,
            None => removed.push((prim, 1)),
        }
    }
    (removed, g)
}

/// Relation satisfied by x = [−ρ] in ℤ[ρ]/(g), written as "lead = rest".
pub fn relation_in_minus_rho(g: &UniPoly) -> Option<String> {
    let deg = g.degree()?;
    if deg == 0 {
        return None;
    }
    let mut p = g.negate_var();
    if p.leading().is_negative() {
        p = p.scale(&-Coeff::one());
    }
    let mut lead = vec![Coeff::zero(); deg + 1];
    lead[deg] = p.leading();
    let lead = UniPoly::new(lead);
    let rest = lead.sub(&p);
    let rhs = if rest.is_zero() {
        "0".to_string()
    } else {
        rest.to_text("x")
    };
    Some(format!("{} = {}", lead.to_text("x"), rhs))
}

/// Re-reads a relation "lhs = rhs" in x and checks lhs − rhs vanishes at x = −ρ
/// modulo `g`.
pub fn relation_holds(relation: &str, g: &UniPoly) -> bool {
    let Some((lhs, rhs)) = relation.split_once('=') else {
        return false;
    };
    let minus_rho = -&LaurentPoly::var(1, 0, 1);
    let bind = [("x", minus_rho)];
    let parse = |s: &str| {
        crate::text::parse_poly(s, &bind, 1)
            .ok()
            .and_then(|p| UniPoly::from_laurent(&p))
    };
    let (Some(l), Some(r)) = (parse(lhs), parse(rhs)) else {
        return false;
    };
    l.sub(&r).div_rem(g).1.is_zero()
}

/// Inverse of `u` modulo `g` over ℤ: returns `(v, q)` with u·v − 1 = q·g and v, q integral.
pub fn verify_unit(u: &RingElem, g: &RingElem) -> Option<(RingElem, RingElem)> {
    let (uu, gg) = (uni(u), uni(g));
    if gg.degree()? == 0 {
        return None;
    }
    let (d, s, _) = uu.ext_gcd(&gg);
    if d != UniPoly::one() {
        return None;
    }
    let v = s.div_rem(&gg).1;
    let q = uu.mul(&v).sub(&UniPoly::one()).exact_div(&gg)?;
    if !v.is_integral() || !q.is_integral() {
        return None;
    }
    Some((su2_elem(&v), su2_elem(&q)))
}

fn factored_text(scalar: &Coeff, removed: &[(UniPoly, u32)], rest: &UniPoly) -> String {
    let mut parts: Vec<String> = Vec::new();
    if !scalar.is_one() {
        parts.push(format!("{scalar}"));
    }
    let wrap = |p: &UniPoly| -> String {
        if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            format!("({})", p.to_text("rho"))
        } else {
            p.to_text("rho")
        }
    };
    for (p, m) in removed {
        if *m == 1 {
            parts.push(wrap(p));
        } else {
            parts.push(format!("{}^{m}", wrap(p)));
        }
    }
    if rest.degree().unwrap_or(0) > 0 || parts.is_empty() {
        parts.push(wrap(rest));
    }
    parts.join("*")
}

/// The full SU(2) pipeline.
pub fn k_groups_su2(f: &ExponentialFunctor) -> Result<Su2Report, PipelineError> {
    let (g1, g2) = g_coefficients(f)?;
    let f_rho = f.derived().f_rho_su2;
    let mut checks = Vec::new();

    // F(t) = g1 + t·g2 on the torus
    let t = RingElem::new(RingTag::TorusSU2, LaurentPoly::var(1, 0, 1))?;
    let r1 = restrict(&g1, Restriction::SU2ToTorus)?;
    let r2 = restrict(&g2, Restriction::SU2ToTorus)?;
    let recomposed = &r1 + &(&t * &r2);
    checks.push(Check::symbolic(
        "F(t) = g1 + t*g2",
        recomposed.poly() == f.character(),
    ));
    checks.push(Check::symbolic(
        "g1, g2 are Weyl invariant",
        is_weyl_invariant(&r1)? && is_weyl_invariant(&r2)?,
    ));
    let mv = mv_matrix(f)?;
    let det = &(&mv[0][0] * &mv[1][1]) - &(&mv[0][1] * &mv[1][0]);
    checks.push(Check::symbolic("det(MV matrix) = -g2", det == -&g2));

    let hyp = f.hypotheses();
    let base = Su2Report {
        functor: f.display_name(),
        character: f.character().to_text(&["t"]),
        formal_character: !f.is_preset(),
        warnings: f.warnings(),
        status: Su2Status::Computed,
        g1: g1.clone(),
        g2: g2.clone(),
        g2_factored: g2.to_text(),
        f_rho: f_rho.clone(),
        mv_matrix: mv,
        k0_zero: true,
        k1: None,
        checks,
    };
    if g2.is_zero() || !hyp.su2_ok {
        return Ok(Su2Report {
            status: Su2Status::HypothesisFailed,
            k0_zero: false,
            ..base
        });
    }

    let gu = uni(&g2);
    let fu = uni(&f_rho);
    let (removed, rest) = strip_shared_factors(&gu, &fu);
    let (g_sat, _) = rest.primitive();
    let mut product = g_sat.clone();
    for (p, m) in &removed {
        for _ in 0..*m {
            product = product.mul(p);
        }
    }
    let scalar = gu.leading() / product.leading();
    let mut checks = base.checks.clone();
    checks.push(Check::symbolic(
        "g2 = scalar * removed factors * g2_saturated",
        product.scale(&scalar) == gu,
    ));
    checks.push(Check::symbolic(
        "g2_saturated is coprime to F(rho)",
        g_sat.gcd(&fu) == UniPoly::one(),
    ));
    let rank = g_sat.degree().unwrap_or(0);
    let n = g_sat.resultant(&fu).abs();
    if !n.is_integer() {
        return Err(PipelineError::Internal(format!(
            "resultant {n} is not an integer"
        )));
    }
    let n = n.to_integer();
    let g_sat_elem = su2_elem(&g_sat);
    let presentation = if n.is_one() {
        format!("Z[rho]/({})", g_sat.to_text("rho"))
    } else {
        format!("Z[1/{n}][rho]/({})", g_sat.to_text("rho"))
    };
    let description = if rank == 0 {
        "K1 = 0".to_string()
    } else if n.is_one() {
        format!("free abelian of rank {rank}")
    } else {
        format!("free of rank {rank} over Z[1/{n}]")
    };
    let relation = relation_in_minus_rho(&g_sat);
    if let Some(rel) = &relation {
        checks.push(Check::symbolic(
            "relation holds for x = -rho",
            relation_holds(rel, &g_sat),
        ));
    }
    let mut unit_inverses = Vec::new();
    for (p, _) in &removed {
        let u = su2_elem(p);
        if let Some((inverse, quotient)) = verify_unit(&u, &g_sat_elem) {
            let back =
                &(&(&u * &inverse) - &RingElem::one(RingTag::SU2)) - &(&quotient * &g_sat_elem);
            checks.push(Check::symbolic(
                format!("({}) is a unit modulo g2_saturated", u.to_text()),
                back.is_zero(),
            ));
            unit_inverses.push(UnitInverse {
                element: u,
                inverse,
                quotient,
            });
        }
    }
    let k1 = K1Structure {
        g2_saturated: g_sat_elem,
        removed: removed
            .iter()
            .map(|(p, m)| Factor {
                factor: su2_elem(p),
                multiplicity: *m,
            })
            .collect(),
        scalar: scalar.to_string(),
        rank,
        inverted_integer: n,
        relation,
        unit_inverses,
        presentation,
        description,
    };
    Ok(Su2Report {
        g2_factored: factored_text(&scalar, &removed, &g_sat),
        k1: Some(k1),
        checks,
        ..base
    })
}
