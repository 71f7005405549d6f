//! Numeric falsification of symbolic identities at random points of the maximal torus.
//!
//! Ring elements are evaluated through the torus embedding of their ring: t ↦ z for
//! the SU(2) torus, ρ ↦ z + z^{-1}, (t₁,t₂) ↦ (z₁,z₂), s₁, s₂ ↦ the elementary
//! symmetric functions of (z₁,z₂,z₃), and (s, d) ↦ (z_j + z_k, z_j z_k) for the pair
//! {j,k} of an edge.

use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{LaurentError, PipelineError, RingError};
use crate::expfunctor::ExponentialFunctor;
use crate::groebner::PolyMatrix;
use crate::reprings::{Edge, Localized, RingElem, RingTag};
use crate::su2::Su2Report;
use crate::su3::{build_differentials, Su3Report};
use crate::symfunc::vandermonde;
use crate::Check;

pub const DEFAULT_POINTS: usize = 100;
pub const TOLERANCE: f64 = 1e-8;
/// Points where |F(ρ)| falls below this are resampled.
pub const REJECT_BELOW: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    SU2,
    SU3,
}

/// A point of the maximal torus: (z, z^{-1}) for SU(2), (z₁, z₂, z₃) with z₁z₂z₃ = 1
/// for SU(3).
#[derive(Clone, Debug, PartialEq)]
pub struct TorusPoint {
    pub group: Group,
    pub z: Vec<Complex64>,
    pub seed: u64,
}

impl TorusPoint {
    fn from_angles(group: Group, angles: &[f64], seed: u64) -> Self {
        let e = |a: f64| Complex64::from_polar(1.0, a);
        let z = match group {
            Group::SU2 => vec![e(angles[0]), e(-angles[0])],
            Group::SU3 => vec![e(angles[0]), e(angles[1]), e(-angles[0] - angles[1])],
        };
        TorusPoint { group, z, seed }
    }

    /// Coordinates for the generators of `ring`; U(2) uses the pair of `edge`.
    pub fn coordinates(&self, ring: RingTag, edge: Edge) -> Result<Vec<Complex64>, RingError> {
        let z = &self.z;
        let wrong = |expected| RingError::Mismatch {
            expected,
            found: ring,
        };
        match (self.group, ring) {
            (Group::SU2, RingTag::TorusSU2) => Ok(vec![z[0]]),
            (Group::SU2, RingTag::SU2) => Ok(vec![z[0] + z[1]]),
            (Group::SU3, RingTag::TorusSU3) => Ok(vec![z[0], z[1]]),
            (Group::SU3, RingTag::SU3) => Ok(vec![
                z[0] + z[1] + z[2],
                z[0] * z[1] + z[0] * z[2] + z[1] * z[2],
            ]),
            (Group::SU3, RingTag::U2) => {
                let (j, k) = edge.paired();
                let (a, b) = (z[j - 1], z[k - 1]);
                Ok(vec![a + b, a * b])
            }
            (Group::SU2, _) => Err(wrong(RingTag::SU2)),
            (Group::SU3, _) => Err(wrong(RingTag::SU3)),
        }
    }
}

/// Deterministic points with uniformly distributed angles.
pub fn sample_points(group: Group, count: usize, seed: u64) -> Vec<TorusPoint> {
    sample_with(group, count, seed, |_| true)
}

/// Like [`sample_points`], rejecting points where |F(ρ)| < 1e−6.
pub fn sample_points_for(
    f: &ExponentialFunctor,
    group: Group,
    count: usize,
    seed: u64,
) -> Vec<TorusPoint> {
    let f_rho = match group {
        Group::SU2 => f.f_rho_in(RingTag::SU2),
        Group::SU3 => f.f_rho_in(RingTag::SU3),
    };
    sample_with(group, count, seed, |p| {
        evaluate(&f_rho, p).is_ok_and(|v| v.norm() >= REJECT_BELOW)
    })
}

fn sample_with(
    group: Group,
    count: usize,
    seed: u64,
    accept: impl Fn(&TorusPoint) -> bool,
) -> Vec<TorusPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dims = match group {
        Group::SU2 => 1,
        Group::SU3 => 2,
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let angles: Vec<f64> = (0..dims).map(|_| rng.gen_range(0.0..TAU)).collect();
        let p = TorusPoint::from_angles(group, &angles, seed);
        if accept(&p) {
            out.push(p);
        }
    }
    out
}

/// Something with a value at a torus point.
pub trait TorusEval {
    fn eval_at(&self, p: &TorusPoint) -> Result<Complex64, RingError>;
}

impl TorusEval for RingElem {
    fn eval_at(&self, p: &TorusPoint) -> Result<Complex64, RingError> {
        evaluate_on_edge(self, p, Edge::E01)
    }
}

/// An element of R(U(2)) read through the coordinates of a particular edge.
pub struct OnEdge<'a>(pub &'a RingElem, pub Edge);

impl TorusEval for OnEdge<'_> {
    fn eval_at(&self, p: &TorusPoint) -> Result<Complex64, RingError> {
        evaluate_on_edge(self.0, p, self.1)
    }
}

/// `num / den^k` for a localized element and its denominator.
pub struct Fraction<'a> {
    pub value: &'a Localized,
    pub den: &'a RingElem,
    pub edge: Edge,
}

impl TorusEval for Fraction<'_> {
    fn eval_at(&self, p: &TorusPoint) -> Result<Complex64, RingError> {
        let n = evaluate_on_edge(self.value.numerator(), p, self.edge)?;
        let d = evaluate_on_edge(self.den, p, self.edge)?;
        if d.norm() == 0.0 {
            return Err(RingError::Laurent(LaurentError::DivisionByZero));
        }
        Ok(n / d.powi(self.value.denom_exp() as i32))
    }
}

impl<F: Fn(&TorusPoint) -> Result<Complex64, RingError>> TorusEval for F {
    fn eval_at(&self, p: &TorusPoint) -> Result<Complex64, RingError> {
        self(p)
    }
}

pub fn evaluate(x: &RingElem, p: &TorusPoint) -> Result<Complex64, RingError> {
    evaluate_on_edge(x, p, Edge::E01)
}

pub fn evaluate_on_edge(x: &RingElem, p: &TorusPoint, edge: Edge) -> Result<Complex64, RingError> {
    let coords = p.coordinates(x.ring(), edge)?;
    Ok(x.poly().eval_complex(&coords)?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub points: usize,
    /// Largest scaled error, see [`check_identity`].
    pub max_abs_err: f64,
    /// Points where the error reached the tolerance.
    pub failures: usize,
    pub pass: bool,
}

/// Compares both sides at every point; passes iff the maximal error is below 1e−8.
/// The error is |lhs − rhs| / max(1, |lhs|, |rhs|), so it is absolute for values of
/// modulus at most one.
pub fn check_identity(
    lhs: &dyn TorusEval,
    rhs: &dyn TorusEval,
    points: &[TorusPoint],
) -> Result<OracleReport, RingError> {
    let mut max_abs_err: f64 = 0.0;
    let mut failures = 0;
    for p in points {
        let (l, r) = (lhs.eval_at(p)?, rhs.eval_at(p)?);
        let err = (l - r).norm() / l.norm().max(r.norm()).max(1.0);
        if err.is_nan() || err >= TOLERANCE {
            failures += 1;
        }
        max_abs_err = max_abs_err.max(if err.is_nan() { f64::INFINITY } else { err });
    }
    Ok(OracleReport {
        points: points.len(),
        max_abs_err,
        failures,
        pass: failures == 0,
    })
}

fn oracle_check(
    name: &str,
    lhs: &dyn TorusEval,
    rhs: &dyn TorusEval,
    points: &[TorusPoint],
) -> Result<Check, RingError> {
    let r = check_identity(lhs, rhs, points)?;
    Ok(Check::oracle(
        format!("{name} (numeric)"),
        r.pass,
        r.max_abs_err,
    ))
}

/// Coordinates as Gaussian integers S with s = S / 2^e.
fn dyadic_scale(zs: &[Complex64]) -> (Vec<Complex<BigInt>>, u64) {
    let parts: Vec<BigRational> = zs
        .iter()
        .flat_map(|z| [z.re, z.im])
        .map(|x| BigRational::from_float(x).expect("finite coordinate"))
        .collect();
    let e = parts
        .iter()
        .map(|r| r.denom().bits() - 1)
        .max()
        .unwrap_or(0);
    let ints: Vec<BigInt> = parts
        .iter()
        .map(|r| r.numer() << (e - (r.denom().bits() - 1)))
        .collect();
    let s = ints
        .chunks(2)
        .map(|c| Complex::new(c[0].clone(), c[1].clone()))
        .collect();
    (s, e)
}

/// The entries of `m` at s = S / 2^e, each multiplied by the same integer L·2^{eD}
/// (D the top total degree, L the lcm of coefficient denominators), which is returned.
fn scaled_matrix(
    m: &PolyMatrix,
    s: &[Complex<BigInt>],
    e: u64,
) -> (Vec<Vec<Complex<BigInt>>>, BigInt) {
    let terms = m.entries().iter().flatten().flat_map(|q| q.terms());
    let mut l = BigInt::one();
    let mut top = 0u64;
    for (mono, c) in terms {
        l = l.lcm(c.denom());
        top = top.max(mono.exponents().iter().map(|&x| x as u64).sum());
    }
    let pow = |z: &Complex<BigInt>| {
        let mut out = vec![Complex::new(BigInt::one(), BigInt::zero())];
        for _ in 0..top {
            let next = out.last().unwrap() * z;
            out.push(next);
        }
        out
    };
    let (p1, p2) = (pow(&s[0]), pow(&s[1]));
    let values = m
        .entries()
        .iter()
        .map(|row| {
            row.iter()
                .map(|q| {
                    let mut acc = Complex::new(BigInt::zero(), BigInt::zero());
                    for (mono, c) in q.terms() {
                        let ex = mono.exponents();
                        let (i, j) = (ex[0] as usize, ex[1] as usize);
                        let k = (c * BigRational::from_integer(l.clone())).to_integer();
                        let shift = e * (top - (i + j) as u64);
                        let t = &p1[i] * &p2[j];
                        acc += Complex::new((&t.re * &k) << shift, (&t.im * &k) << shift);
                    }
                    acc
                })
                .collect()
        })
        .collect();
    (values, l << (e * top))
}

fn ratio(n: BigInt, d: &BigInt) -> f64 {
    BigRational::new(n, d.clone())
        .to_f64()
        .unwrap_or(f64::INFINITY)
}

fn zero_fn(_: &TorusPoint) -> Result<Complex64, RingError> {
    Ok(Complex64::new(0.0, 0.0))
}

/// Numeric re-checks of the identities behind an SU(2) report.
pub fn verify_su2(
    f: &ExponentialFunctor,
    report: &Su2Report,
    count: usize,
    seed: u64,
) -> Result<Vec<Check>, PipelineError> {
    let points = sample_points_for(f, Group::SU2, count, seed);
    let ft = RingElem::new(RingTag::TorusSU2, f.character().clone())?;
    let mut checks = Vec::new();
    let decomposition = |p: &TorusPoint| -> Result<Complex64, RingError> {
        Ok(evaluate(&report.g1, p)? + p.z[0] * evaluate(&report.g2, p)?)
    };
    checks.push(oracle_check(
        "F(t) = g1 + t*g2",
        &ft,
        &decomposition,
        &points,
    )?);
    let f_rho_torus = |p: &TorusPoint| -> Result<Complex64, RingError> {
        let inv = TorusPoint {
            z: vec![p.z[1], p.z[0]],
            ..p.clone()
        };
        Ok(evaluate(&ft, p)? * evaluate(&ft, &inv)?)
    };
    checks.push(oracle_check(
        "F(rho) = F(t)F(t^-1)",
        &report.f_rho,
        &f_rho_torus,
        &points,
    )?);
    if let Some(k1) = &report.k1 {
        let scalar: crate::laurent::Coeff = k1
            .scalar
            .parse()
            .map_err(|_| PipelineError::Internal("bad scalar".into()))?;
        let scalar = num_traits::ToPrimitive::to_f64(&scalar).unwrap_or(f64::NAN);
        let product = |p: &TorusPoint| -> Result<Complex64, RingError> {
            let mut v = evaluate(&k1.g2_saturated, p)? * scalar;
            for factor in &k1.removed {
                v *= evaluate(&factor.factor, p)?.powi(factor.multiplicity as i32);
            }
            Ok(v)
        };
        checks.push(oracle_check(
            "g2 factorization",
            &report.g2,
            &product,
            &points,
        )?);
        for u in &k1.unit_inverses {
            let residual = |p: &TorusPoint| -> Result<Complex64, RingError> {
                Ok(evaluate(&u.element, p)? * evaluate(&u.inverse, p)?
                    - 1.0
                    - evaluate(&u.quotient, p)? * evaluate(&k1.g2_saturated, p)?)
            };
            checks.push(oracle_check(
                &format!("unit certificate for {}", u.element.to_text()),
                &residual,
                &zero_fn,
                &points,
            )?);
        }
    }
    Ok(checks)
}

/// Numeric re-checks of the identities behind an SU(3) report.
pub fn verify_su3(
    f: &ExponentialFunctor,
    report: &Su3Report,
    count: usize,
    seed: u64,
) -> Result<Vec<Check>, PipelineError> {
    let points = sample_points_for(f, Group::SU3, count, seed);
    let delta = vandermonde().into_value();
    let ft = [f.f_torus(1), f.f_torus(2), f.f_torus(3)];
    let mut checks = Vec::new();

    let f_rho = |p: &TorusPoint| -> Result<Complex64, RingError> {
        Ok(evaluate(&ft[0], p)? * evaluate(&ft[1], p)? * evaluate(&ft[2], p)?)
    };
    checks.push(oracle_check(
        "F(rho) = F(t1)F(t2)F(t3)",
        &report.f_rho,
        &f_rho,
        &points,
    )?);

    // χ·Δ against the determinant with rows (G(t_i)), (t_i), (1)
    let det_rows = |shift: i32| {
        let ft = ft.clone();
        move |p: &TorusPoint| -> Result<Complex64, RingError> {
            let g = |i: usize| -> Result<Complex64, RingError> {
                Ok(evaluate(&ft[i], p)? * p.z[i].powi(shift))
            };
            let (a, b, c) = (g(0)?, g(1)?, g(2)?);
            let (x, y, z) = (p.z[0], p.z[1], p.z[2]);
            // columns t1, t2, t3
            Ok(a * (y - z) - b * (x - z) + c * (x - y))
        }
    };
    for (name, chi, shift) in [
        ("chi1*Delta = det(F, t, 1)", &report.chi1, 0),
        ("chi2*Delta = det(F*t, t, 1)", &report.chi2, 1),
    ] {
        let lhs = |p: &TorusPoint| -> Result<Complex64, RingError> {
            Ok(evaluate(chi, p)? * evaluate(&delta, p)?)
        };
        checks.push(oracle_check(name, &lhs, &det_rows(shift), &points)?);
    }
    for (name, psi_val, q) in [
        (
            "Psi(q_+)*Delta = q_+",
            &report.koszul.psi_plus,
            &report.koszul.q_plus,
        ),
        (
            "Psi(q_-)*Delta = q_-",
            &report.koszul.psi_minus,
            &report.koszul.q_minus,
        ),
    ] {
        let lhs = |p: &TorusPoint| -> Result<Complex64, RingError> {
            Ok(evaluate(psi_val, p)? * evaluate(&delta, p)?)
        };
        checks.push(oracle_check(name, &lhs, q, &points)?);
    }

    let der = f.derived();
    checks.push(oracle_check(
        "r01(lambda_F) = F(t1)",
        &OnEdge(&der.lambda, Edge::E01),
        &ft[0],
        &points,
    )?);
    let f13 = &ft[0] * &ft[2];
    checks.push(oracle_check(
        "r12(mu_F) = F(t1)F(t3)",
        &OnEdge(&der.mu, Edge::E12),
        &f13,
        &points,
    )?);
    checks.push(oracle_check(
        "r02(lambda_F) = F(t3)",
        &OnEdge(&der.lambda, Edge::E02),
        &ft[2],
        &points,
    )?);

    // B·A = 0 at each point, in exact integer arithmetic: the entries are too large for
    // doubles to resolve
    let cx = build_differentials(f)?;
    let ba = |p: &TorusPoint| -> Result<Complex64, RingError> {
        let (s, e) = dyadic_scale(&p.coordinates(RingTag::SU3, Edge::E01)?);
        let (a, a_scale) = scaled_matrix(&cx.a, &s, e);
        let (b, b_scale) = scaled_matrix(&cx.b, &s, e);
        let den = a_scale * b_scale;
        let mut worst = Complex64::new(0.0, 0.0);
        for brow in &b {
            for c in 0..3 {
                let mut v = Complex::new(BigInt::zero(), BigInt::zero());
                for k in 0..9 {
                    v += &brow[k] * &a[k][c];
                }
                let v = Complex64::new(ratio(v.re, &den), ratio(v.im, &den));
                if v.norm() > worst.norm() {
                    worst = v;
                }
            }
        }
        Ok(worst)
    };
    checks.push(oracle_check("B*A = 0", &ba, &zero_fn, &points)?);
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expfunctor::parse_functor;

    #[test]
    fn determinism_and_constraints() {
        let a = sample_points(Group::SU3, 10, 7);
        assert_eq!(a, sample_points(Group::SU3, 10, 7));
        assert_ne!(a, sample_points(Group::SU3, 10, 8));
        for p in &a {
            let prod = p.z[0] * p.z[1] * p.z[2];
            assert!((prod - 1.0).norm() < 1e-12);
            assert!(p.z.iter().all(|z| (z.norm() - 1.0).abs() < 1e-12));
        }
        for p in sample_points(Group::SU2, 10, 7) {
            assert!((p.z[0] * p.z[1] - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn rejection_near_minus_one() {
        let f = parse_functor("ext_full").unwrap();
        let fr = f.f_rho_in(RingTag::SU2);
        let near = TorusPoint::from_angles(Group::SU2, &[std::f64::consts::PI + 1e-4], 0);
        assert!(evaluate(&fr, &near).unwrap().norm() < REJECT_BELOW);
        for p in sample_points_for(&f, Group::SU2, 200, 3) {
            assert!(evaluate(&fr, &p).unwrap().norm() >= REJECT_BELOW);
        }
    }

    #[test]
    fn zero_identity() {
        let z = RingElem::zero(RingTag::SU3);
        let r = check_identity(&z, &z, &sample_points(Group::SU3, 5, 0)).unwrap();
        assert!(r.pass);
        assert_eq!(r.max_abs_err, 0.0);
    }

    #[test]
    fn perturbation_is_caught() {
        let pts = sample_points(Group::SU3, 100, 1);
        let x = RingElem::parse(RingTag::SU3, "3 + s1").unwrap();
        let y = RingElem::parse(RingTag::SU3, "3 + 2*s1").unwrap();
        let r = check_identity(&x, &y, &pts).unwrap();
        assert!(!r.pass);
        assert!(r.failures >= 99);
    }

    #[test]
    fn ring_mismatch() {
        let x = RingElem::parse(RingTag::SU2, "rho").unwrap();
        assert!(check_identity(&x, &x, &sample_points(Group::SU3, 1, 0)).is_err());
    }

    #[test]
    fn reports_verify() {
        let f = parse_functor("ext_full^5").unwrap();
        let r = crate::su2::k_groups_su2(&f).unwrap();
        for c in verify_su2(&f, &r, 100, 0).unwrap() {
            assert!(c.passed, "{}", c.name);
        }
        let f = parse_functor("ext_full^3").unwrap();
        let r = crate::su3::k_groups_su3(&f, &Default::default()).unwrap();
        for c in verify_su3(&f, &r, 100, 0).unwrap() {
            assert!(c.passed, "{} {:?}", c.name, c.max_abs_err);
        }
    }
}
