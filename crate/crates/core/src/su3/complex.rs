//! The E₁ cochain complex C⁰ → C¹ → C² over R_F(SU(3)) and its rational cohomology.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{PipelineError, RingError};
use crate::expfunctor::ExponentialFunctor;
use crate::groebner::{image, kernel, rational_rank, Dimension, PolyMatrix, Submodule};
use crate::laurent::{coeff, Coeff, LaurentPoly};
use crate::reprings::{
    fixed_basis, fixed_submodule_decompose, restrict, steinberg_decompose, Edge, Localized,
    Restriction, RingElem, RingTag,
};
use crate::Check;

/// The differentials d₀ (vertices → edges) and d₁ (edges → torus), with their
/// matrices over ℚ[s₁,s₂].
///
/// C⁰ has basis e₀, e₁, e₂. Each edge summand R_F(G_I) is free of rank 3 over
/// R_F(SU(3)) with basis {1, t_i, t_i^{-1}} (t_i the coordinate fixed by W_I), so C¹ has
/// rank 9, ordered edge by edge {0,1}, {1,2}, {0,2}. C² = R_F(T) has the Steinberg
/// basis of rank 6.
#[derive(Clone, Debug)]
pub struct Su3ChainComplex {
    /// d0[edge][vertex] in R_F(U(2)); the denominator is F(ρ) restricted to U(2).
    pub d0: [[Localized; 3]; 3],
    /// Multipliers of r_I in d₁: 1, ν_F, −1.
    pub d1: [RingElem; 3],
    /// F(ρ)^k · d₀ as a 9×3 matrix.
    pub a: PolyMatrix,
    /// d₁ as a 6×9 matrix.
    pub b: PolyMatrix,
    pub denominator_exponent: u32,
    /// `a` with each column divided by the largest power of F(ρ) dividing it.
    pub a_stripped: PolyMatrix,
    /// F(ρ) in ℚ[s₁,s₂].
    pub f_rho: LaurentPoly,
    /// Squarefree stand-in for F(ρ) used in saturations.
    pub saturator: LaurentPoly,
}

fn loc_err(e: RingError) -> PipelineError {
    PipelineError::Ring(e)
}

pub fn build_differentials(f: &ExponentialFunctor) -> Result<Su3ChainComplex, PipelineError> {
    let der = f.derived();
    let den_u2 = f.f_rho_in(RingTag::U2);
    let den_t = f.f_rho_torus();
    if &der.lambda * &der.mu != den_u2 {
        return Err(PipelineError::IdentityFailed(
            "lambda_F * mu_F = F(rho) in R(U(2))".into(),
        ));
    }
    let one = Localized::from_elem(RingElem::one(RingTag::U2));
    let minus_one = one.neg();
    let zero = Localized::from_elem(RingElem::zero(RingTag::U2));
    let lambda = Localized::from_elem(der.lambda.clone());
    let mu_inv = Localized::new(der.lambda.clone(), 1, &den_u2).map_err(loc_err)?;
    let lambda_inv = Localized::new(der.mu.clone(), 1, &den_u2).map_err(loc_err)?;
    let d0 = [
        [minus_one.clone(), lambda, zero.clone()],
        [zero.clone(), minus_one.clone(), mu_inv],
        [minus_one, zero, lambda_inv],
    ];
    let d1 = [
        RingElem::one(RingTag::TorusSU3),
        der.nu.clone(),
        RingElem::from_int(RingTag::TorusSU3, -1),
    ];

    // restrict every entry of d0 to the torus, then clear one common denominator
    let mut restricted: Vec<Vec<Localized>> = Vec::with_capacity(3);
    for (e, edge) in Edge::ALL.iter().enumerate() {
        let row = d0[e]
            .iter()
            .map(|x| x.restrict(Restriction::U2ToTorus(*edge), &den_t))
            .collect::<Result<Vec<_>, _>>()?;
        restricted.push(row);
    }
    let k = restricted
        .iter()
        .flatten()
        .map(Localized::denom_exp)
        .max()
        .unwrap_or(0);
    let mut a_entries = vec![vec![LaurentPoly::zero(2); 3]; 9];
    for (e, edge) in Edge::ALL.iter().enumerate() {
        for v in 0..3 {
            let cleared = restricted[e][v].clear(k, &den_t)?;
            let coeffs = fixed_submodule_decompose(&cleared, &edge.transposition())?;
            for (j, c) in coeffs.into_iter().enumerate() {
                a_entries[3 * e + j][v] = c.into_poly();
            }
        }
    }
    let a = PolyMatrix::new(a_entries)?;

    let mut b_cols: Vec<Vec<LaurentPoly>> = Vec::with_capacity(9);
    for (e, edge) in Edge::ALL.iter().enumerate() {
        for basis_elem in fixed_basis(edge.fixed_index()) {
            let img = &d1[e] * &basis_elem;
            let coeffs = steinberg_decompose(&img)?;
            b_cols.push(coeffs.into_iter().map(RingElem::into_poly).collect());
        }
    }
    let b = PolyMatrix::from_columns(6, &b_cols)?;

    let f_rho = der.f_rho_su3.poly().clone();
    let a_stripped = strip_columns(&a, &f_rho)?;
    Ok(Su3ChainComplex {
        d0,
        d1,
        a,
        b,
        denominator_exponent: k,
        a_stripped,
        f_rho,
        saturator: f.f_rho_radical().into_poly(),
    })
}

fn strip_columns(m: &PolyMatrix, f: &LaurentPoly) -> Result<PolyMatrix, PipelineError> {
    if f.is_constant() {
        return Ok(m.clone());
    }
    let mut cols = m.columns();
    for col in &mut cols {
        if col.iter().all(LaurentPoly::is_zero) {
            continue;
        }
        loop {
            let divided: Option<Vec<LaurentPoly>> =
                col.iter().map(|p| p.exact_div(f).ok().flatten()).collect();
            match divided {
                Some(d) => *col = d,
                None => break,
            }
        }
    }
    Ok(PolyMatrix::from_columns(m.rows(), &cols)?)
}

impl Su3ChainComplex {
    /// B·A = 0 exactly.
    pub fn composition_vanishes(&self) -> Result<bool, PipelineError> {
        Ok(self.b.mul(&self.a)?.is_zero())
    }
}

/// Restricted entries r_I(d0[I][v]) · F(ρ), as torus elements.
fn cleared_torus_entries(
    cx: &Su3ChainComplex,
    den_t: &RingElem,
) -> Result<Vec<Vec<RingElem>>, PipelineError> {
    let mut out = Vec::with_capacity(3);
    for (e, edge) in Edge::ALL.iter().enumerate() {
        let mut row = Vec::with_capacity(3);
        for v in 0..3 {
            let r = cx.d0[e][v].restrict(Restriction::U2ToTorus(*edge), den_t)?;
            row.push(r.clear(1, den_t)?);
        }
        out.push(row);
    }
    Ok(out)
}

/// The comparison identities between the twisted complex and the untwisted cellular
/// complex on the torus, each as a named check.
pub fn bredon_identities(
    f: &ExponentialFunctor,
    cx: &Su3ChainComplex,
) -> Result<Vec<Check>, PipelineError> {
    let der = f.derived();
    let den_t = f.f_rho_torus();
    let ft = [f.f_torus(1), f.f_torus(2), f.f_torus(3)];
    let mut checks = Vec::new();

    let r = |x: &RingElem, e: Edge| restrict(x, Restriction::U2ToTorus(e));
    checks.push(Check::symbolic(
        "r01(lambda_F) = F(t1)",
        r(&der.lambda, Edge::E01)? == ft[0],
    ));
    checks.push(Check::symbolic(
        "r12(mu_F) = F(t1)F(t3)",
        r(&der.mu, Edge::E12)? == &ft[0] * &ft[2],
    ));
    checks.push(Check::symbolic(
        "r02(lambda_F) = F(t3)",
        r(&der.lambda, Edge::E02)? == ft[2],
    ));
    checks.push(Check::symbolic("nu_F = F(t1)", der.nu == ft[0]));

    // vertex corrections 1, F(t1), F(t3)^{-1} and edge corrections 1, F(t1), 1 turn d0
    // into the cellular differential (−y_i + y_j on the edge {i,j}); everything is
    // multiplied by F(ρ) to stay polynomial
    let entries = cleared_torus_entries(cx, &den_t)?;
    let vertex = [den_t.clone(), &den_t * &ft[0], &ft[0] * &ft[1]];
    let edge_corr = [
        RingElem::one(RingTag::TorusSU3),
        ft[0].clone(),
        RingElem::one(RingTag::TorusSU3),
    ];
    let cellular: [[i64; 3]; 3] = [[-1, 1, 0], [0, -1, 1], [-1, 0, 1]];
    let mut ok = true;
    for e in 0..3 {
        for v in 0..3 {
            let lhs = &edge_corr[e] * &entries[e][v];
            let rhs = &vertex[v] * &RingElem::from_int(RingTag::TorusSU3, cellular[e][v]);
            ok &= lhs == rhs;
        }
    }
    checks.push(Check::symbolic(
        "comparison maps intertwine d0 with the cellular differential",
        ok,
    ));

    // d1 ∘ d0 = 0 on the torus, before matrixization
    let mut composite_ok = true;
    for v in 0..3 {
        let mut acc = RingElem::zero(RingTag::TorusSU3);
        for e in 0..3 {
            acc = &acc + &(&cx.d1[e] * &entries[e][v]);
        }
        composite_ok &= acc.is_zero();
    }
    checks.push(Check::symbolic("d1 o d0 = 0", composite_ok));
    checks.push(Check::symbolic("B*A = 0", cx.composition_vanishes()?));
    Ok(checks)
}

/// Rank of A and B at random rational points where F(ρ) ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericRank {
    pub points: usize,
    pub a_full_rank: usize,
    pub b_full_rank: usize,
}

pub fn generic_rank(cx: &Su3ChainComplex, points: usize, seed: u64) -> GenericRank {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = GenericRank {
        points: 0,
        a_full_rank: 0,
        b_full_rank: 0,
    };
    while out.points < points {
        let pt: Vec<Coeff> = (0..2)
            .map(|_| Coeff::new(rng.gen_range(-50..=50).into(), rng.gen_range(1..=7).into()))
            .collect();
        if cx.f_rho.eval_rational(&pt).map_or(true, |v| v == coeff(0)) {
            continue;
        }
        out.points += 1;
        if rational_rank(cx.a.eval(&pt)) == 3 {
            out.a_full_rank += 1;
        }
        if rational_rank(cx.b.eval(&pt)) == 6 {
            out.b_full_rank += 1;
        }
    }
    out
}

/// Cohomology of the complex after inverting F(ρ), over ℚ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cohomology {
    /// ker A saturated by F(ρ) is zero.
    pub h0_zero: bool,
    /// ker B ⊆ (im A : F(ρ)^∞).
    pub h1_zero: bool,
    /// Generators of (im B : F(ρ)^∞) ⊂ ℚ[s₁,s₂]^6 (reduced Gröbner basis).
    pub h2_relations: Vec<Vec<String>>,
    pub h2_dimension: Dimension,
    pub generic_rank: GenericRank,
}

pub fn rational_cohomology(cx: &Su3ChainComplex, seed: u64) -> Result<Cohomology, PipelineError> {
    let f = &cx.saturator;
    let h0 = kernel(&cx.a_stripped)?.saturate(f)?;
    let im_a = image(&cx.a_stripped)?.saturate(f)?;
    let ker_b = kernel(&cx.b)?;
    let h1_zero = im_a.contains(&ker_b)?;
    let im_b: Submodule = image(&cx.b)?.saturate(f)?;
    let names = RingTag::SU3.var_names();
    let h2_relations = im_b
        .basis()
        .iter()
        .map(|v| v.iter().map(|p| p.to_text(names)).collect())
        .collect();
    Ok(Cohomology {
        h0_zero: h0.is_zero(),
        h1_zero,
        h2_relations,
        h2_dimension: im_b.quotient_dimension(),
        generic_rank: generic_rank(cx, 20, seed),
    })
}

/// The matrices A and B as canonical strings over ℤ[s₁,s₂], with d₀ = A / F(ρ)^k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixExport {
    pub functor: String,
    pub f_rho: String,
    pub denominator_exponent: u32,
    pub a: Vec<Vec<String>>,
    pub b: Vec<Vec<String>>,
}

impl MatrixExport {
    pub fn new(f: &ExponentialFunctor, cx: &Su3ChainComplex) -> Self {
        let names = RingTag::SU3.var_names();
        let text = |m: &PolyMatrix| -> Vec<Vec<String>> {
            m.entries()
                .iter()
                .map(|row| row.iter().map(|p| p.to_text(names)).collect())
                .collect()
        };
        MatrixExport {
            functor: f.display_name(),
            f_rho: cx.f_rho.to_text(names),
            denominator_exponent: cx.denominator_exponent,
            a: text(&cx.a),
            b: text(&cx.b),
        }
    }

    /// Parses the matrices back, returning (A, B).
    pub fn matrices(&self) -> Result<(PolyMatrix, PolyMatrix), PipelineError> {
        let parse = |m: &[Vec<String>]| -> Result<PolyMatrix, PipelineError> {
            let rows = m
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| RingElem::parse(RingTag::SU3, s).map(RingElem::into_poly))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| PipelineError::Internal(e.to_string()))?;
            Ok(PolyMatrix::new(rows)?)
        };
        Ok((parse(&self.a)?, parse(&self.b)?))
    }
}
