//! End-to-end acceptance run: one PASS/FAIL line per criterion, with wall-clock limits.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twk_core::error::RingError;
use twk_core::expfunctor::ExponentialFunctor;
use twk_core::laurent::coeff;
use twk_core::oracle::{
    check_identity, evaluate, sample_points_for, verify_su2, verify_su3, Group, TorusPoint,
    DEFAULT_POINTS, TOLERANCE,
};
use twk_core::su2::irrep;
use twk_core::su3::{
    bredon_identities, build_differentials, koszul_route, orientation_invariant,
    regular_sequence_check, saturated_j, Route,
};
use twk_core::symfunc::{h, vandermonde};
use twk_core::unipoly::UniPoly;
use twk_core::{k_groups_su2, k_groups_su3, parse_functor, RingElem, RingTag, Su3Options};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn functor(spec: &str) -> Result<ExponentialFunctor, String> {
    parse_functor(spec).map_err(|e| format!("{spec}: {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn su2(text: &str) -> RingElem {
    RingElem::parse(RingTag::SU2, text).unwrap()
}

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_1() -> Outcome {
    for k in 1..=10 {
        let f = functor(&format!("ext_top^{k}"))?;
        let r = k_groups_su2(&f).map_err(|e| e.to_string())?;
        let want = irrep(k - 1);
        ensure(r.g2 == want, || format!("k={k}: g2 = {}", r.g2))?;
        let k1 = r.k1.as_ref().ok_or(format!("k={k}: no K1"))?;
        ensure(k1.g2_saturated == want, || {
            format!("k={k}: saturated {}", k1.g2_saturated)
        })?;
        ensure(k1.inverted_integer == BigInt::from(1), || {
            format!("k={k}: N = {}", k1.inverted_integer)
        })?;
        ensure(r.all_passed(), || format!("k={k}: internal check failed"))?;
    }
    Ok("g2 = rho_{k-1}, K1 = R(SU(2))/(rho_{k-1}), N = 1 for k = 1..10".into())
}

fn criterion_2() -> Outcome {
    let expected = [
        (3, "(rho+2)*(rho+1)"),
        (4, "rho*(rho+2)^2"),
        (5, "(rho+2)^2*(rho^2+rho-1)"),
        (6, "(rho+2)^3*(rho^2-1)"),
    ];
    for (k, g2) in expected {
        let r = k_groups_su2(&functor(&format!("ext_full^{k}"))?).map_err(|e| e.to_string())?;
        ensure(r.g2 == su2(g2), || format!("k={k}: g2 = {}", r.g2))?;
    }
    Ok("g2(ext_full^k) factors exactly for k = 3..6".into())
}

fn criterion_3() -> Outcome {
    let r = k_groups_su2(&functor("ext_full^5")?).map_err(|e| e.to_string())?;
    let k1 = r.k1.as_ref().ok_or("no K1")?;
    ensure(k1.rank == 2, || format!("rank {}", k1.rank))?;
    ensure(k1.inverted_integer == BigInt::from(1), || {
        format!("N = {}", k1.inverted_integer)
    })?;
    ensure(k1.relation.as_deref() == Some("x^2 = x + 1"), || {
        format!("relation {:?}", k1.relation)
    })?;
    let g = UniPoly::from_laurent(k1.g2_saturated.poly()).ok_or("g2_saturated")?;
    // (−ρ)² − (−ρ) − 1 ≡ 0
    let rel = UniPoly::from_ints(&[-1, 1, 1]);
    ensure(rel.div_rem(&g).1.is_zero(), || {
        "x^2 - x - 1 not in (g)".into()
    })?;
    // (ρ + 2)(1 − ρ) ≡ 1
    let cert = UniPoly::from_ints(&[2, 1]).mul(&UniPoly::from_ints(&[1, -1]));
    ensure(cert.sub(&UniPoly::one()).div_rem(&g).1.is_zero(), || {
        "(rho+2)(1-rho) != 1".into()
    })?;
    ensure(
        k1.unit_inverses
            .iter()
            .any(|u| u.element == su2("rho + 2") && u.inverse == su2("1 - rho")),
        || "unit certificate missing".into(),
    )?;
    ensure(r.all_passed(), || "internal check failed".into())?;
    Ok("ext_full^5: rank 2, N = 1, x^2 = x + 1, (rho+2)^-1 = 1 - rho".into())
}

fn criterion_4() -> Outcome {
    for m in 1..=10 {
        let f = functor(&format!("ext_top^{m}"))?;
        let (k, checks) = koszul_route(&f).map_err(|e| e.to_string())?;
        ensure(k.psi_plus == -&h(m - 2), || {
            format!("m={m}: Psi(q+) = {}", k.psi_plus)
        })?;
        ensure(k.psi_minus == h(m - 1), || {
            format!("m={m}: Psi(q-) = {}", k.psi_minus)
        })?;
        ensure(checks.iter().all(|c| c.passed), || {
            format!("m={m}: internal check")
        })?;
    }
    Ok("Psi(q+) = -h_{m-2}, Psi(q-) = h_{m-1} for m = 1..10".into())
}

fn criterion_5() -> Outcome {
    for m in 1..=8 {
        let f = functor(&format!("ext_full^{m}"))?;
        let r = k_groups_su3(&f, &Su3Options::default()).map_err(|e| e.to_string())?;
        let mut s1 = RingElem::zero(RingTag::SU3);
        let mut s2 = RingElem::zero(RingTag::SU3);
        let mut sym1 = Vec::new();
        let mut sym2 = Vec::new();
        for l in 1..=m {
            let c = coeff(binom(m, l));
            s2 = &s2 + &h(l - 1).scale(&c);
            sym2.push(term(binom(m, l), l - 1));
            if l >= 2 {
                s1 = &s1 + &h(l - 2).scale(&c);
                sym1.push(term(binom(m, l), l - 2));
            }
        }
        ensure(r.koszul.psi_plus == -&s1, || format!("m={m}: Psi(q+)"))?;
        ensure(r.koszul.psi_minus == s2, || format!("m={m}: Psi(q-)"))?;
        let sig = r.sigma_expansions.as_ref().ok_or("no expansions")?;
        let join = |v: &[String]| {
            if v.is_empty() {
                "0".to_string()
            } else {
                v.join(" + ")
            }
        };
        ensure(sig.sigma1 == join(&sym1), || {
            format!("m={m}: sigma1 {}", sig.sigma1)
        })?;
        ensure(sig.sigma2 == join(&sym2), || {
            format!("m={m}: sigma2 {}", sig.sigma2)
        })?;
        ensure(r.all_passed(), || format!("m={m}: internal check"))?;
    }
    Ok("binomial h-sums and Sym-expansions for m = 1..8".into())
}

fn term(c: i64, k: i64) -> String {
    if c == 1 {
        format!("Sym^{k}(rho)")
    } else {
        format!("{c}*Sym^{k}(rho)")
    }
}

/// Deterministic DSL strings: products of presets and small polynomial characters.
fn random_functors(n: usize, seed: u64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| match rng.gen_range(0..3) {
            0 => format!(
                "ext_full^{}*ext_top^{}",
                rng.gen_range(0..=3),
                rng.gen_range(0..=2)
            ),
            1 => format!(
                "fw({})*ext_full^{}",
                rng.gen_range(1..=3),
                rng.gen_range(0..=2)
            ),
            _ => {
                let terms: Vec<String> = (0..=rng.gen_range(1..=3))
                    .map(|e| format!("{}*t^{e}", rng.gen_range(1..=3)))
                    .collect();
                format!("poly:{}", terms.join(" + "))
            }
        })
        .collect()
}

fn criterion_6() -> Outcome {
    let specs = random_functors(20, 2024);
    for spec in &specs {
        let f = functor(spec)?;
        let cx = build_differentials(&f).map_err(|e| format!("{spec}: {e}"))?;
        ensure(
            cx.composition_vanishes().map_err(|e| e.to_string())?,
            || format!("{spec}: B*A != 0"),
        )?;
        for c in bredon_identities(&f, &cx).map_err(|e| format!("{spec}: {e}"))? {
            ensure(c.passed, || format!("{spec}: {} (edge assignment)", c.name))?;
        }
    }
    Ok(format!(
        "B*A = 0 and comparison identities for {} random functors",
        specs.len()
    ))
}

fn criterion_7() -> Outcome {
    let opts = Su3Options {
        route: Route::Both,
        seed: 7,
    };
    let mut dims = Vec::new();
    for spec in [
        "ext_full",
        "ext_full^2",
        "ext_full^3",
        "ext_top^2",
        "ext_top^3",
        "ext_top^4",
    ] {
        let r = k_groups_su3(&functor(spec)?, &opts).map_err(|e| format!("{spec}: {e}"))?;
        let coh = r.cohomology.as_ref().ok_or("no cohomology")?;
        ensure(coh.h0_zero, || format!("{spec}: H0 certificate failed"))?;
        ensure(coh.h1_zero, || format!("{spec}: H1 certificate failed"))?;
        let cross = r.cross_check.as_ref().ok_or("no cross check")?;
        ensure(cross.agree, || {
            format!(
                "{spec}: complex {} vs Koszul {}",
                cross.complex, cross.koszul
            )
        })?;
        ensure(r.all_passed(), || format!("{spec}: internal check"))?;
        dims.push(format!("{spec}:{}", cross.complex));
    }
    Ok(format!(
        "H0 = H1 = 0 and dim H2 matches ({})",
        dims.join(", ")
    ))
}

fn criterion_8() -> Outcome {
    for spec in ["ext_top", "ext_full", "ext_full^2", "fw(2)"] {
        let r = regular_sequence_check(&functor(spec)?).map_err(|e| e.to_string())?;
        ensure(r.is_certified(), || format!("{spec}: {r:?}"))?;
    }
    Ok("regular sequence certified for ext_top, ext_full, ext_full^2, fw(2)".into())
}

fn perturbed_fails(
    lhs: &dyn twk_core::oracle::TorusEval,
    rhs: &dyn twk_core::oracle::TorusEval,
    points: &[TorusPoint],
) -> Result<bool, String> {
    let r = check_identity(lhs, rhs, points).map_err(|e| e.to_string())?;
    Ok(!r.pass && r.failures * 100 >= 99 * r.points)
}

fn criterion_9() -> Outcome {
    let mut count = 0;
    let mut worst: f64 = 0.0;
    let su2_specs: Vec<String> = (1..=10)
        .map(|k| format!("ext_top^{k}"))
        .chain((3..=6).map(|k| format!("ext_full^{k}")))
        .collect();
    for spec in &su2_specs {
        let f = functor(spec)?;
        let r = k_groups_su2(&f).map_err(|e| e.to_string())?;
        for c in verify_su2(&f, &r, DEFAULT_POINTS, 9).map_err(|e| e.to_string())? {
            worst = worst.max(c.max_abs_err.unwrap_or(0.0));
            ensure(c.passed, || format!("{spec}: {}", c.name))?;
            count += 1;
        }
        // g2 with its constant term moved by one
        let points = sample_points_for(&f, Group::SU2, DEFAULT_POINTS, 9);
        let ft = RingElem::new(RingTag::TorusSU2, f.character().clone()).unwrap();
        let g2p = &r.g2 + &RingElem::one(RingTag::SU2);
        let wrong = |p: &TorusPoint| -> Result<Complex64, RingError> {
            Ok(evaluate(&r.g1, p)? + p.z[0] * evaluate(&g2p, p)?)
        };
        ensure(perturbed_fails(&ft, &wrong, &points)?, || {
            format!("{spec}: perturbed g2 not caught")
        })?;
    }
    let su3_specs: Vec<String> = (1..=10)
        .map(|m| format!("ext_top^{m}"))
        .chain((1..=8).map(|m| format!("ext_full^{m}")))
        .chain(["fw(2)".to_string()])
        .collect();
    let delta = vandermonde().into_value();
    for spec in &su3_specs {
        let f = functor(spec)?;
        let r = k_groups_su3(&f, &Su3Options::default()).map_err(|e| e.to_string())?;
        for c in verify_su3(&f, &r, DEFAULT_POINTS, 9).map_err(|e| e.to_string())? {
            worst = worst.max(c.max_abs_err.unwrap_or(0.0));
            ensure(c.passed, || {
                format!("{spec}: {} err {:?}", c.name, c.max_abs_err)
            })?;
            count += 1;
        }
        let points = sample_points_for(&f, Group::SU3, DEFAULT_POINTS, 9);
        for psi in [&r.koszul.psi_plus, &r.koszul.psi_minus] {
            let q = if std::ptr::eq(psi, &r.koszul.psi_plus) {
                &r.koszul.q_plus
            } else {
                &r.koszul.q_minus
            };
            let wrong_psi = psi + &RingElem::one(RingTag::SU3);
            let lhs = |p: &TorusPoint| -> Result<Complex64, RingError> {
                Ok(evaluate(&wrong_psi, p)? * evaluate(&delta, p)?)
            };
            ensure(perturbed_fails(&lhs, q, &points)?, || {
                format!("{spec}: perturbed Psi not caught")
            })?;
        }
    }
    Ok(format!(
        "{count} numeric checks below {TOLERANCE:e} (max err {worst:.1e}); perturbations caught"
    ))
}

fn criterion_10() -> Outcome {
    let specs = [
        "ext_full^3",
        "ext_top^3",
        "fw(2)",
        "ext_full^2*ext_top",
        "poly:t^2 + 2*t + 3",
    ];
    for spec in specs {
        let f = functor(spec)?;
        let (k, _) = koszul_route(&f).map_err(|e| e.to_string())?;
        let j = saturated_j(&k.j_f(), &f.f_rho_radical()).map_err(|e| e.to_string())?;
        ensure(
            orientation_invariant(&f, &j).map_err(|e| e.to_string())?,
            || format!("{spec}: saturations differ"),
        )?;
    }
    Ok(format!(
        "saturated J_F unchanged under F(t) -> F(t^-1) for {} functors",
        specs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            1,
            "SU(2) classical family",
            Duration::from_secs(1),
            criterion_1,
        ),
        (
            2,
            "SU(2) full-exterior factorizations",
            Duration::from_secs(1),
            criterion_2,
        ),
        (
            3,
            "Yang-Lee fusion ring",
            Duration::from_secs(1),
            criterion_3,
        ),
        (
            4,
            "SU(3) classical closed forms",
            Duration::from_secs(5),
            criterion_4,
        ),
        (
            5,
            "SU(3) full-twist closed forms",
            Duration::from_secs(30),
            criterion_5,
        ),
        (
            6,
            "complex consistency",
            Duration::from_secs(60),
            criterion_6,
        ),
        (
            7,
            "rational vanishing, two routes",
            Duration::from_secs(600),
            criterion_7,
        ),
        (
            8,
            "regular sequences",
            Duration::from_secs(300),
            criterion_8,
        ),
        (
            9,
            "oracle falsification",
            Duration::from_secs(30),
            criterion_9,
        ),
        (
            10,
            "orientation invariance",
            Duration::from_secs(120),
            criterion_10,
        ),
    ];
    let mut failed = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; exceeded time limit")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {n:>2} {status} [{:.2}s / {}s] {name}: {detail}",
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed == 0 {
        println!("all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
