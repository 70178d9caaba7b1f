use std::io::Write;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;

use lexcoh::corpus::{generate_instance, CorpusSpec};
use lexcoh::rigidity::{
    bw_maximality_from, level_rigidity_from, row_propagation_from, saturation_rigidity_from, single_row_from,
    weakly_stable_level_from, EquivalenceReport, Triple,
};
use lexcoh::{Error, GinOptions, Ideal};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::commands::{gin_options, max_generators, within_cap};
use crate::output::sink;
use crate::{Cli, Failure, EXIT_FALSE, EXIT_GIN};

const ALL_CHECKERS: [&str; 6] = ["sat-rigidity", "bw", "levels", "ws-levels", "rows", "single-row"];

/// A corpus plus what to run on it.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RunSpec {
    #[serde(flatten)]
    corpus: CorpusSpec,
    /// Defaults to every checker that applies.
    checkers: Option<Vec<String>>,
    threads: Option<usize>,
}

/// Outcome of one instance: its JSON lines, whether all reports were
/// consistent and whether gin certification failed.
struct Outcome {
    index: usize,
    lines: Vec<Value>,
    inconsistent: bool,
    gin_failed: bool,
}

pub fn run(cli: &Cli, path: &Path) -> Result<u8, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let spec: RunSpec = toml::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let checkers = spec.checkers.clone().unwrap_or_else(|| ALL_CHECKERS.iter().map(|s| s.to_string()).collect());
    if let Some(bad) = checkers.iter().find(|c| !ALL_CHECKERS.contains(&c.as_str())) {
        return Err(Failure::input(format!("unknown checker {bad}; known: {}", ALL_CHECKERS.join(", "))));
    }
    let threads = spec
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .clamp(1, spec.corpus.count.max(1));
    let cap = max_generators()?;
    let opts = gin_options(cli);
    let mut out = sink(cli.out.as_deref(), true)?;

    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<Outcome>();
    let mut inconsistent = false;
    let mut gin_failed = false;
    let mut write_error = None;
    std::thread::scope(|s| {
        for _ in 0..threads {
            let tx = tx.clone();
            let (next, spec, checkers) = (&next, &spec, &checkers);
            s.spawn(move || loop {
                let index = next.fetch_add(1, Ordering::Relaxed);
                if index >= spec.corpus.count {
                    break;
                }
                let outcome = run_instance(&spec.corpus, index, checkers, cap, &opts);
                if tx.send(outcome).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        // emit in index order regardless of completion order
        let mut pending = std::collections::BTreeMap::new();
        let mut emitted = 0;
        for outcome in rx {
            pending.insert(outcome.index, outcome);
            while let Some(o) = pending.remove(&emitted) {
                inconsistent |= o.inconsistent;
                gin_failed |= o.gin_failed;
                for line in &o.lines {
                    if write_error.is_none() {
                        if let Err(e) = writeln!(out, "{line}") {
                            write_error = Some(e);
                        }
                    }
                }
                emitted += 1;
            }
        }
    });
    if let Some(e) = write_error {
        return Err(Failure::input(format!("cannot write output: {e}")));
    }
    out.flush().map_err(|e| Failure::input(e.to_string()))?;
    Ok(if inconsistent {
        EXIT_FALSE
    } else if gin_failed {
        EXIT_GIN
    } else {
        0
    })
}

fn run_instance(spec: &CorpusSpec, index: usize, checkers: &[String], cap: usize, opts: &GinOptions) -> Outcome {
    let mut outcome = Outcome { index, lines: Vec::new(), inconsistent: false, gin_failed: false };
    let file = match generate_instance(spec, index).map_err(Failure::from).and_then(|f| within_cap(&f, cap).map(|_| f)) {
        Ok(f) => f,
        Err(e) => {
            outcome.lines.push(json!({"index": index, "error": e.message, "exit_code": e.code}));
            return outcome;
        }
    };
    let id = file.label.clone().unwrap_or_else(|| format!("instance-{index}"));
    let base = json!({"instance_id": id, "index": index, "ideal": file.ideal.to_string()});
    let error_line = |checker: &str, e: &Error| {
        let mut v = base.clone();
        v["checker"] = json!(checker);
        v["error"] = json!(e.to_string());
        v
    };
    let triple = match Triple::new(&file.ideal, opts) {
        Ok(t) => t,
        Err(e) => {
            outcome.gin_failed |= matches!(e, Error::GinCertification(_));
            outcome.lines.push(error_line("all", &e));
            return outcome;
        }
    };
    let n = file.context().nvars();
    for checker in checkers {
        let reports: Vec<Result<EquivalenceReport, Error>> = match checker.as_str() {
            "sat-rigidity" => vec![saturation_rigidity_from(&triple)],
            "bw" if file.ideal.as_monomial().is_some() => vec![bw_maximality_from(&triple)],
            "levels" => (1..n).map(|i| level_rigidity_from(&triple, i)).collect(),
            "ws-levels" => match &file.ideal {
                Ideal::Monomial(m) if m.is_weakly_stable() => {
                    (1..n).map(|i| weakly_stable_level_from(&triple, i)).collect()
                }
                _ => Vec::new(),
            },
            "rows" => vec![row_propagation_from(&triple)],
            "single-row" => {
                let ok = single_row_from(&triple);
                outcome.inconsistent |= !ok;
                let mut v = base.clone();
                v["checker"] = json!("single-row");
                v["consistent"] = json!(ok);
                outcome.lines.push(v);
                Vec::new()
            }
            _ => Vec::new(),
        };
        for r in reports {
            match r {
                Ok(r) => {
                    outcome.inconsistent |= !r.consistent;
                    let mut v = base.clone();
                    v["checker"] = json!(r.checker);
                    v["consistent"] = json!(r.consistent);
                    v["conditions"] = serde_json::to_value(&r.conditions).expect("conditions serialize");
                    v["side_checks"] = serde_json::to_value(&r.side_checks).expect("side checks serialize");
                    v["witness"] = json!(r.witness);
                    outcome.lines.push(v);
                }
                Err(e) => {
                    outcome.gin_failed |= matches!(e, Error::GinCertification(_));
                    outcome.lines.push(error_line(checker, &e));
                }
            }
        }
    }
    outcome
}
