use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use twk_core::parse_functor;

use crate::{compute, parse_error_message, Envelope, Exit, Group, Outcome, RunConfig};

/// Version of the CSV layout, repeated in every row.
pub const CSV_VERSION: u32 = 1;

/// `generators` holds g2 (SU(2)) or "chi1; chi2" (SU(3)); `rank_dim` holds the rank of
/// K1 (SU(2)) or dim K0 ⊗ Q (SU(3)).
pub const CSV_COLUMNS: [&str; 6] = [
    "csv_version",
    "group",
    "functor",
    "status",
    "generators",
    "rank_dim",
];

struct Row {
    functor: String,
    status: String,
    generators: String,
    rank_dim: String,
    exit: Exit,
}

fn row(cfg: &RunConfig, spec: &str) -> Row {
    let failed = |status: String, exit| Row {
        functor: spec.to_string(),
        status,
        generators: String::new(),
        rank_dim: String::new(),
        exit,
    };
    let f = match parse_functor(spec) {
        Ok(f) => f,
        Err(e) => return failed(format!("bad_functor: {e}"), Exit::BadInput),
    };
    let env: Envelope = match compute(cfg, &f) {
        Ok(env) => env,
        Err(e) => return failed(format!("error: {e}"), Exit::Internal),
    };
    let (status, exit) = if !env.hypothesis_ok {
        ("hypothesis_failed", Exit::Hypothesis)
    } else if !env.passed {
        ("check_failed", Exit::Internal)
    } else {
        ("ok", Exit::Success)
    };
    let (generators, rank_dim) = match (&env.su2, &env.su3) {
        (Some(r), _) => (
            r.g2_factored.clone(),
            r.k1.as_ref()
                .map(|k| k.rank.to_string())
                .unwrap_or_default(),
        ),
        (_, Some(r)) => (
            format!("{}; {}", r.chi1, r.chi2),
            r.k0_dimension.to_string(),
        ),
        _ => Default::default(),
    };
    Row {
        functor: env.functor,
        status: status.to_string(),
        generators,
        rank_dim,
        exit,
    }
}

/// Rows in input order, computed on up to `available_parallelism` threads.
fn run_parallel(cfg: &RunConfig, specs: &[&str]) -> Vec<Row> {
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(specs.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Row>>> = Mutex::new((0..specs.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(spec) = specs.get(i) else { break };
                let r = row(cfg, spec);
                slots.lock().expect("batch worker")[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("batch worker")
        .into_iter()
        .map(|r| r.expect("every row computed"))
        .collect()
}

/// One CSV row per non-empty, non-comment line of `path`, in file order.
pub fn run_batch(cfg: &RunConfig, path: &Path) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            return Outcome {
                exit: Exit::BadInput,
                output: String::new(),
                diagnostics: vec![format!("cannot read {}: {e}", path.display())],
            }
        }
    };
    let specs: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let rows = run_parallel(cfg, &specs);

    let group = match cfg.group {
        Group::Su2 => "su2",
        Group::Su3 => "su3",
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_COLUMNS).expect("in-memory write");
    let version = CSV_VERSION.to_string();
    let mut diagnostics = Vec::new();
    for (spec, r) in specs.iter().zip(&rows) {
        w.write_record([
            version.as_str(),
            group,
            &r.functor,
            &r.status,
            &r.generators,
            &r.rank_dim,
        ])
        .expect("in-memory write");
        if r.exit == Exit::BadInput {
            if let Err(e) = parse_functor(spec) {
                diagnostics.push(parse_error_message(spec, &e));
            }
        }
    }
    let output = String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8");
    let exit = [Exit::BadInput, Exit::Internal, Exit::Hypothesis]
        .into_iter()
        .find(|e| rows.iter().any(|r| r.exit == *e))
        .unwrap_or(Exit::Success);
    Outcome {
        exit,
        output,
        diagnostics,
    }
}
