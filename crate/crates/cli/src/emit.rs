use std::fmt::Write;

use twk_core::su3::RegularSequence;
use twk_core::{Check, Su2Report, Su3Report};

use crate::{Emit, Envelope, Matrices};

pub fn emit(env: &Envelope, format: Emit) -> String {
    match format {
        Emit::Json => {
            let mut s = serde_json::to_string_pretty(env).expect("reports serialize");
            s.push('\n');
            s
        }
        Emit::Text => text(env),
        Emit::Tex => tex(env),
    }
}

fn checks_line(out: &mut String, label: &str, checks: &[Check]) {
    let passed = checks.iter().filter(|c| c.passed).count();
    let _ = writeln!(out, "{label}: {passed}/{} passed", checks.len());
    for c in checks.iter().filter(|c| !c.passed) {
        let _ = writeln!(out, "  FAILED {}", c.name);
    }
}

fn text(env: &Envelope) -> String {
    let mut out = String::new();
    if let Some(r) = &env.su2 {
        su2_text(&mut out, r);
    }
    if let Some(r) = &env.su3 {
        su3_text(&mut out, r);
    }
    if !env.oracle.is_empty() {
        let worst = env
            .oracle
            .iter()
            .filter_map(|c| c.max_abs_err)
            .fold(0.0, f64::max);
        checks_line(&mut out, "oracle checks", &env.oracle);
        let _ = writeln!(
            out,
            "oracle: {} points, seed {}, max error {worst:.3e}",
            env.oracle_points, env.seed
        );
    }
    match &env.matrices {
        Some(Matrices::Su2 { mv }) => {
            let _ = writeln!(out, "Mayer-Vietoris matrix:");
            for row in mv {
                let _ = writeln!(out, "  [{}]", row.join(", "));
            }
        }
        Some(Matrices::Su3(m)) => {
            let _ = writeln!(out, "F(rho)^{} * d0 (A, 9x3):", m.denominator_exponent);
            for row in &m.a {
                let _ = writeln!(out, "  [{}]", row.join(", "));
            }
            let _ = writeln!(out, "d1 (B, 6x9):");
            for row in &m.b {
                let _ = writeln!(out, "  [{}]", row.join(", "));
            }
        }
        None => {}
    }
    out
}

fn su2_text(out: &mut String, r: &Su2Report) {
    let _ = writeln!(out, "group: SU(2)");
    let _ = writeln!(out, "functor: {}", r.functor);
    let _ = writeln!(out, "character: F(t) = {}", r.character);
    let _ = writeln!(out, "g1 = {}", r.g1);
    let _ = writeln!(out, "g2 = {}", r.g2);
    let _ = writeln!(out, "g2 factored = {}", r.g2_factored);
    let _ = writeln!(out, "F(rho) = {}", r.f_rho);
    match &r.k1 {
        None => {
            let _ = writeln!(out, "hypothesis failed: F(t) = F(t^-1)");
        }
        Some(k1) => {
            let _ = writeln!(out, "K0 = 0");
            let _ = writeln!(out, "K1 = {}: {}", k1.presentation, k1.description);
            let _ = writeln!(out, "inverted integer N = {}", k1.inverted_integer);
            if let Some(rel) = &k1.relation {
                let _ = writeln!(out, "relation: {rel} (x = -rho)");
            }
            for u in &k1.unit_inverses {
                let _ = writeln!(out, "unit: ({})^-1 = {}", u.element, u.inverse);
            }
        }
    }
    checks_line(out, "checks", &r.checks);
}

fn su3_text(out: &mut String, r: &Su3Report) {
    let _ = writeln!(out, "group: SU(3)");
    let _ = writeln!(out, "functor: {}", r.functor);
    let _ = writeln!(out, "character: F(t) = {}", r.character);
    let _ = writeln!(out, "F(rho) = {}", r.f_rho);
    if let Some(s) = &r.sigma_expansions {
        let _ = writeln!(out, "chi1 = {} = {}", r.chi1, s.chi1_h);
        let _ = writeln!(out, "chi2 = {} = {}", r.chi2, s.chi2_h);
        let _ = writeln!(out, "J_F = ({}, {})", s.chi1_h, s.chi2_h);
        let _ = writeln!(out, "sigma1 = {}", s.sigma1);
        let _ = writeln!(out, "sigma2 = {}", s.sigma2);
    } else {
        let _ = writeln!(out, "chi1 = {}", r.chi1);
        let _ = writeln!(out, "chi2 = {}", r.chi2);
        let _ = writeln!(out, "J_F = (chi1, chi2)");
    }
    let sat: Vec<String> = r.j_f_saturated.iter().map(|g| g.to_text()).collect();
    let _ = writeln!(out, "saturated J_F = ({})", sat.join(", "));
    let _ = writeln!(out, "dim K0 (x) Q = {}", r.k0_dimension);
    let k1 = if r.k1_vanishes {
        let names: Vec<&str> = r
            .k1_certificates
            .iter()
            .map(|c| match c {
                twk_core::su3::K1Certificate::RegularSequence => "regular sequence",
                twk_core::su3::K1Certificate::ComplexRoute => "complex",
            })
            .collect();
        format!("0 (certified by {})", names.join(", "))
    } else {
        "not certified".to_string()
    };
    let _ = writeln!(out, "K1 (x) Q = {k1}");
    let reg = match &r.regular_sequence {
        RegularSequence::Certified => "certified".to_string(),
        RegularSequence::Skipped => "skipped (deg F <= 0)".to_string(),
        RegularSequence::Failed { witness } => format!("failed, witness {witness}"),
    };
    let _ = writeln!(out, "regular sequence: {reg}");
    if let Some(c) = &r.cohomology {
        let _ = writeln!(
            out,
            "complex: H0 {}, H1 {}, dim H2 = {}",
            if c.h0_zero { "= 0" } else { "!= 0" },
            if c.h1_zero { "= 0" } else { "!= 0" },
            c.h2_dimension
        );
    }
    if let Some(x) = &r.cross_check {
        let _ = writeln!(
            out,
            "cross check: Koszul {} vs complex {} ({})",
            x.koszul,
            x.complex,
            if x.agree { "agree" } else { "DISAGREE" }
        );
    }
    checks_line(out, "checks", &r.checks);
}

/// Plain-text ring elements to TeX: `rho` → `\rho`, `s1` → `s_1`, `Sym^k` →
/// `\mathrm{Sym}^{k}`, exponents and subscripts braced, `*` dropped.
pub fn to_tex(s: &str) -> String {
    let s = s
        .replace("Sym^", "\\mathrm{Sym}^")
        .replace("rho", "\\rho")
        .replace("s1", "s_1")
        .replace("s2", "s_2")
        .replace("t1", "t_1")
        .replace("t2", "t_2")
        .replace("*", " ");
    let mut out = String::with_capacity(s.len() + 8);
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' || c == '_' {
            let mut group = String::new();
            if chars.peek() == Some(&'-') {
                group.push(chars.next().unwrap());
            }
            while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
                group.push(d);
                chars.next();
            }
            out.push('{');
            out.push_str(&group);
            out.push('}');
        }
    }
    out.trim_end().to_string()
}

fn tex(env: &Envelope) -> String {
    let mut out = String::new();
    if let Some(r) = &env.su2 {
        let _ = writeln!(out, "\\begin{{tabular}}{{lll}}");
        let _ = writeln!(out, "$F$ & $g_2$ & $K_1$ \\\\ \\hline");
        let k1 = match &r.k1 {
            Some(k) => format!(
                "${}$",
                to_tex(&k.presentation.replace("Z[", "\\mathbb{Z}["))
            ),
            None => "--".to_string(),
        };
        let _ = writeln!(
            out,
            "\\texttt{{{}}} & ${}$ & {} \\\\",
            r.functor.replace('_', "\\_").replace('^', "\\^{}"),
            to_tex(&r.g2_factored),
            k1
        );
        let _ = writeln!(out, "\\end{{tabular}}");
    }
    if let Some(r) = &env.su3 {
        let _ = writeln!(out, "\\begin{{tabular}}{{lll}}");
        let _ = writeln!(out, "$F$ & $\\sigma_1$ & $\\sigma_2$ \\\\ \\hline");
        let (s1, s2) = match &r.sigma_expansions {
            Some(s) => (to_tex(&s.sigma1), to_tex(&s.sigma2)),
            None => (to_tex(&r.chi1.to_text()), to_tex(&r.chi2.to_text())),
        };
        let _ = writeln!(
            out,
            "\\texttt{{{}}} & ${s1}$ & ${s2}$ \\\\",
            r.functor.replace('_', "\\_").replace('^', "\\^{}")
        );
        let _ = writeln!(out, "\\end{{tabular}}");
    }
    match &env.matrices {
        Some(Matrices::Su2 { mv }) => tex_matrix(&mut out, mv),
        Some(Matrices::Su3(m)) => {
            tex_matrix(&mut out, &m.a);
            tex_matrix(&mut out, &m.b);
        }
        None => {}
    }
    out
}

fn tex_matrix(out: &mut String, rows: &[Vec<String>]) {
    let _ = writeln!(out, "\\[\\begin{{pmatrix}}");
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| to_tex(c)).collect();
        let _ = writeln!(out, "{} \\\\", cells.join(" & "));
    }
    let _ = writeln!(out, "\\end{{pmatrix}}\\]");
}
