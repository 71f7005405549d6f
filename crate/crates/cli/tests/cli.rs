use std::process::{Command, Output};

use serde_json::Value;
use twk_cli::{Envelope, CSV_COLUMNS};

fn twk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twk"))
        .args(args)
        .env_remove("TWK_STEP_LIMIT")
        .output()
        .expect("run twk")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn yang_lee_json() {
    let o = twk(&[
        "--group",
        "su2",
        "--functor",
        "ext_full^5",
        "--mode",
        "compute",
        "--emit",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    let k1 = &v["su2"]["k1"];
    assert_eq!(k1["rank"], 2);
    assert_eq!(k1["inverted_integer"], 1);
    assert_eq!(k1["relation"], "x^2 = x + 1");
}

#[test]
fn su3_generators_in_h_basis() {
    let o = twk(&[
        "--group",
        "su3",
        "--functor",
        "ext_top^3",
        "--mode",
        "compute",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("chi1 = s1 = h_1"), "{out}");
    assert!(out.contains("chi2 = s1^2 - s2 = h_2"), "{out}");
    assert!(out.contains("J_F = (h_1, h_2)"), "{out}");
}

#[test]
fn symmetric_character_is_a_hypothesis_failure() {
    let o = twk(&["--group", "su2", "--functor", "poly:2", "--mode", "compute"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("F(ℂ) ≇ F(ℂ*)"), "{}", stderr(&o));
    let o = twk(&["--group", "su3", "--functor", "poly:3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_dsl_exits_64_with_position() {
    let o = twk(&["--group", "su2", "--functor", "ext_full^"]);
    assert_eq!(o.status.code(), Some(64));
    assert!(stderr(&o).contains("bad functor"), "{}", stderr(&o));
    assert!(stderr(&o).contains('^'));
    let o = twk(&["--group", "su4", "--functor", "ext_top"]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn unwritable_output_is_an_internal_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.json");
    let o = twk(&[
        "--group",
        "su2",
        "--functor",
        "ext_top",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cannot write"));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let args = [
        "--group",
        "su3",
        "--functor",
        "ext_full^2",
        "--emit",
        "json",
    ];
    let o = twk(&[&args[..], &["--output", path.to_str().unwrap()]].concat());
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&twk(&args)));
}

#[test]
fn json_round_trip_and_determinism() {
    for args in [
        vec![
            "--group",
            "su2",
            "--functor",
            "ext_full^4",
            "--mode",
            "verify",
            "--seed",
            "3",
        ],
        vec![
            "--group",
            "su3",
            "--functor",
            "fw(2)",
            "--mode",
            "verify",
            "--route",
            "both",
        ],
        vec![
            "--group",
            "su3",
            "--functor",
            "ext_full^3",
            "--mode",
            "export-matrices",
        ],
    ] {
        let args = [&args[..], &["--emit", "json"]].concat();
        let first = twk(&args);
        assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
        let text = stdout(&first);
        assert_eq!(text, stdout(&twk(&args)), "output is not deterministic");
        let env: Envelope = serde_json::from_str(&text).unwrap();
        assert!(env.passed);
        let again = twk_cli::emit(&env, twk_cli::Emit::Json);
        assert_eq!(again, text);
        assert_eq!(serde_json::from_str::<Envelope>(&again).unwrap(), env);
    }
}

#[test]
fn verify_mode_reports_oracle_checks() {
    let o = twk(&[
        "--group",
        "su2",
        "--functor",
        "ext_full^6",
        "--mode",
        "verify",
        "--oracle-points",
        "20",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("oracle: 20 points, seed 0"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn tex_tables() {
    let o = twk(&["--group", "su2", "--functor", "ext_full^6", "--emit", "tex"]);
    let out = stdout(&o);
    assert!(out.contains("\\begin{tabular}"));
    assert!(out.contains("$(\\rho + 2)^{3} (\\rho^{2} - 1)$"), "{out}");
    let o = twk(&["--group", "su3", "--functor", "ext_full^3", "--emit", "tex"]);
    let out = stdout(&o);
    assert!(
        out.contains("3 \\mathrm{Sym}^{0}(\\rho) + \\mathrm{Sym}^{1}(\\rho)"),
        "{out}"
    );
}

#[test]
fn batch_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("specs.txt");
    let specs: Vec<String> = (1..=8).map(|m| format!("ext_full^{m}")).collect();
    std::fs::write(&path, format!("# sweep\n{}\n\n", specs.join("\n"))).unwrap();
    let o = twk(&["--group", "su3", "--batch", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(
        reader.headers().unwrap().iter().collect::<Vec<_>>(),
        CSV_COLUMNS
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 8);
    for (row, spec) in rows.iter().zip(&specs) {
        assert_eq!(&row[0], "1");
        assert_eq!(&row[2], spec);
        assert_eq!(&row[3], "ok");
    }
    assert_eq!(&rows[2][4], "s1 + 3; s1^2 + 3*s1 - s2 + 3");

    std::fs::write(&path, "ext_full^5\npoly:t + t^-1\n").unwrap();
    let o = twk(&["--group", "su2", "--batch", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(
        out.contains("ext_full^5,ok,(rho + 2)^2*(rho^2 + rho - 1),2"),
        "{out}"
    );
    assert!(out.contains("hypothesis_failed"));
}

#[test]
fn step_limit_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_twk"))
        .args([
            "--group",
            "su3",
            "--functor",
            "ext_full^3",
            "--route",
            "complex",
        ])
        .env("TWK_STEP_LIMIT", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("step limit"), "{}", stderr(&o));
}
