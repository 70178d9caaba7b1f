use std::io::Read;
use std::path::Path;

use lexcoh::groebner::{gin, initial_ideal, saturate};
use lexcoh::lex::lex_from_series;
use lexcoh::localcoh::{
    bw_polynomial, cancellation_witness, cohomology_ext, cohomology_ext_monomial, cohomology_layers, default_window,
    ideal_hilbert_series, scm_criteria, serre_violation, window_for,
};
use lexcoh::rigidity::{
    bw_maximality_check, level_rigidity_check, row_propagation_check, saturation_rigidity_check, single_row_check,
    weakly_stable_level_check, EquivalenceReport, Triple,
};
use lexcoh::{FieldKind, GinOptions, Ideal, IdealFile, MonomialIdeal, Window};
use serde_json::{json, Value};

use crate::output::{sink, Output};
use crate::{corpus_run, Checker, Cli, Command, CorpusAction, Failure, Method, EXIT_FALSE};

/// Default cap on input generators; `LEXCOH_MAX_GENS` overrides it.
const MAX_GENS: usize = 500;

pub fn gin_options(cli: &Cli) -> GinOptions {
    GinOptions { trials: cli.trials, seed: cli.seed, rational: cli.rational }
}

/// `LEXCOH_PRIME`, when set, is the field of files whose header names none.
pub fn default_field() -> Result<FieldKind, Failure> {
    match std::env::var("LEXCOH_PRIME") {
        Err(_) => Ok(FieldKind::default()),
        Ok(v) => {
            let p: u32 = v.trim().parse().map_err(|_| Failure::input(format!("LEXCOH_PRIME={v} is not a number")))?;
            let k = FieldKind::Prime(p);
            k.validate()?;
            Ok(k)
        }
    }
}

pub fn max_generators() -> Result<usize, Failure> {
    match std::env::var("LEXCOH_MAX_GENS") {
        Err(_) => Ok(MAX_GENS),
        Ok(v) => v.trim().parse().map_err(|_| Failure::input(format!("LEXCOH_MAX_GENS={v} is not a number"))),
    }
}

/// Checks the generator cap on a parsed ideal.
pub fn within_cap(file: &IdealFile, cap: usize) -> Result<(), Failure> {
    let count = match &file.ideal {
        Ideal::Monomial(m) => m.num_generators(),
        Ideal::Polynomial(p) => p.generators().len(),
    };
    if count > cap {
        return Err(Failure::input(format!("{count} generators exceed the cap {cap} (LEXCOH_MAX_GENS)")));
    }
    Ok(())
}

fn read_ideal(path: &Path) -> Result<IdealFile, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Failure::input(e.to_string()))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    }
    let file = IdealFile::parse_with_default(&text, default_field()?)?;
    within_cap(&file, max_generators()?)?;
    Ok(file)
}

fn monomial<'a>(ideal: &'a Ideal, what: &str) -> Result<&'a MonomialIdeal, Failure> {
    ideal.as_monomial().ok_or_else(|| Failure::input(format!("{what} needs a monomial ideal")))
}

fn verdict(ok: bool) -> u8 {
    if ok {
        0
    } else {
        EXIT_FALSE
    }
}

fn report_output(r: &EquivalenceReport) -> (Output, u8) {
    let mut out = Output::record(r.to_json(), r.to_string());
    out.csv = vec![vec!["checker".into(), "condition".into(), "value".into()]];
    for (name, v) in &r.conditions {
        out.csv.push(vec![r.checker.clone(), name.clone(), v.map_or("n/a".into(), |b| b.to_string())]);
    }
    for (name, v) in &r.side_checks {
        out.csv.push(vec![r.checker.clone(), format!("side:{name}"), v.to_string()]);
    }
    out.csv.push(vec![r.checker.clone(), "consistent".into(), r.consistent.to_string()]);
    (out, verdict(r.consistent))
}

pub fn run(cli: &Cli) -> Result<u8, Failure> {
    if let Command::Corpus { action: CorpusAction::Run { spec } } = &cli.command {
        return corpus_run::run(cli, spec);
    }
    let (output, code) = single(cli)?;
    let text = output.render(cli.format)?;
    let mut w = sink(cli.out.as_deref(), false)?;
    w.write_all(text.as_bytes()).map_err(|e| Failure::input(e.to_string()))?;
    Ok(code)
}

fn single(cli: &Cli) -> Result<(Output, u8), Failure> {
    let opts = gin_options(cli);
    Ok(match &cli.command {
        Command::Hilbert { file, degrees } => {
            let f = read_ideal(file)?;
            let range = Window::parse(degrees)?;
            let h = ideal_hilbert_series(&f.ideal)?;
            let values: Vec<(i64, i128)> = range.degrees().map(|d| (d, h.value(d))).collect();
            let json = json!({
                "ideal": f.ideal.to_string(),
                "series": h.to_string(),
                "reduced": h.reduced().to_string(),
                "dimension": h.dimension(),
                "multiplicity": h.multiplicity().to_string(),
                "polynomial": h.polynomial().to_string(),
                "values": values.iter().map(|(d, v)| (d.to_string(), json!(v.to_string()))).collect::<serde_json::Map<_, _>>(),
            });
            let mut text = format!(
                "Hilb(R/I) = {}\ndimension {}, multiplicity {}\nHilbert polynomial {}\n",
                h.reduced(),
                h.dimension(),
                h.multiplicity(),
                h.polynomial()
            );
            for (d, v) in &values {
                text.push_str(&format!("  H({d}) = {v}\n"));
            }
            let mut out = Output::record(json, text);
            out.csv = vec![vec!["degree".into(), "value".into()]];
            out.csv.extend(values.iter().map(|(d, v)| vec![d.to_string(), v.to_string()]));
            (out, 0)
        }
        Command::Lex { file } => {
            let f = read_ideal(file)?;
            let h = ideal_hilbert_series(&f.ideal)?;
            let (lex, cert) = lex_from_series(f.context(), &h)?;
            let json = json!({
                "ideal": f.ideal.to_string(),
                "lex": lex.to_string(),
                "generators": lex.num_generators(),
                "certificate": serde_json::to_value(&cert).expect("certificate serializes"),
            });
            (Output::record(json, lex.to_string()), 0)
        }
        Command::Sat { file } => {
            let f = read_ideal(file)?;
            let sat = match &f.ideal {
                Ideal::Monomial(m) => m.saturate_m().to_string(),
                Ideal::Polynomial(p) => saturate(p, opts.seed)?.to_string(),
            };
            (Output::record(json!({"ideal": f.ideal.to_string(), "saturation": sat}), sat), 0)
        }
        Command::Gin { file } => {
            let f = read_ideal(file)?;
            let g = gin(&f.ideal.as_poly(), &opts)?;
            let json = json!({
                "ideal": f.ideal.to_string(),
                "gin": g.to_string(),
                "trials": opts.trials,
                "seed": opts.seed,
            });
            (Output::record(json, g.to_string()), 0)
        }
        Command::Bw { file } => {
            let f = read_ideal(file)?;
            let bw = bw_polynomial(monomial(&f.ideal, "bw")?)?;
            let layers: serde_json::Map<String, Value> =
                (0..=bw.degree_in_w().max(-1) as i64).map(|k| (k.to_string(), json!(bw.layer(k as usize).to_string()))).collect();
            let json = json!({"ideal": f.ideal.to_string(), "bw": bw.to_string(), "layers": layers});
            (Output::record(json, bw.to_string()), 0)
        }
        Command::Localcoh { file, method, window } => {
            let f = read_ideal(file)?;
            let w = match window {
                Some(s) => Window::parse(s)?,
                None => default_window(&f.ideal, &opts)?,
            };
            let table = match method {
                Method::Ext => cohomology_ext(&f.ideal, w)?,
                Method::Layers => cohomology_layers(monomial(&f.ideal, "the layer method")?, w)?,
            };
            let mut json = table.to_json();
            json["ideal"] = json!(f.ideal.to_string());
            json["route"] = json!(table.route().to_string());
            let csv = table.to_csv().lines().map(|l| l.split(',').map(str::to_string).collect()).collect();
            (Output { json, text: table.to_string(), csv }, 0)
        }
        Command::Scm { file } => scm(&read_ideal(file)?, 0, &opts)?,
        Command::Pscm { file, i } => scm(&read_ideal(file)?, *i, &opts)?,
        Command::Check { checker, file, i } => check(*checker, &read_ideal(file)?, *i, &opts)?,
        Command::Corpus { .. } => unreachable!("handled in run"),
    })
}

fn scm(f: &IdealFile, i: usize, opts: &GinOptions) -> Result<(Output, u8), Failure> {
    let (rows, layers) = scm_criteria(&f.ideal, i, opts)?;
    if layers.is_some_and(|l| l != rows) {
        return Err(Failure { code: 1, message: format!("{i}-sCM criteria disagree for {}", f.ideal) });
    }
    let json = json!({"ideal": f.ideal.to_string(), "i": i, "scm": rows, "layer_criterion": layers});
    let text = format!("{}-sequentially Cohen–Macaulay: {rows}", i);
    Ok((Output::record(json, text), verdict(rows)))
}

fn level(i: Option<usize>, f: &IdealFile) -> Result<usize, Failure> {
    let n = f.context().nvars();
    match i {
        Some(i) if i >= 1 && i < n => Ok(i),
        Some(i) => Err(Failure::input(format!("--i must satisfy 1 <= i < {n}, got {i}"))),
        None => Err(Failure::input("this checker needs --i")),
    }
}

fn check(checker: Checker, f: &IdealFile, i: Option<usize>, opts: &GinOptions) -> Result<(Output, u8), Failure> {
    let ideal = &f.ideal;
    let report = match checker {
        Checker::SatRigidity => saturation_rigidity_check(ideal, opts)?,
        Checker::Bw => bw_maximality_check(monomial(ideal, "bw")?, opts)?,
        Checker::Levels => level_rigidity_check(ideal, level(i, f)?, opts)?,
        Checker::WsLevels => {
            let m = monomial(ideal, "ws-levels")?;
            if !m.is_weakly_stable() {
                return Err(Failure::input(format!("{m} is not weakly stable")));
            }
            weakly_stable_level_check(m, level(i, f)?, opts)?
        }
        Checker::Rows => row_propagation_check(ideal, opts)?,
        Checker::SingleRow => {
            let ok = single_row_check(ideal, opts)?;
            let json = json!({"checker": "single-row", "instance": ideal.to_string(), "consistent": ok});
            return Ok((Output::record(json, format!("single-row {ideal}: consistent={ok}")), verdict(ok)));
        }
        Checker::Cancel => return cancel(ideal, opts),
        Checker::Serre => {
            let w = default_window(ideal, opts)?;
            let table = cohomology_ext(ideal, w)?;
            let bad = serre_violation(&table, &ideal_hilbert_series(ideal)?);
            let json = json!({"checker": "serre", "instance": ideal.to_string(), "window": [w.lo, w.hi],
                "consistent": bad.is_none(), "first_failure": bad});
            let text = match bad {
                None => format!("serre {ideal}: holds on {w}"),
                Some(j) => format!("serre {ideal}: fails at j = {j}"),
            };
            return Ok((Output::record(json, text), verdict(bad.is_none())));
        }
    };
    Ok(report_output(&report))
}

fn cancel(ideal: &Ideal, opts: &GinOptions) -> Result<(Output, u8), Failure> {
    let t = Triple::new(ideal, opts)?;
    let init = match ideal {
        Ideal::Monomial(m) => m.clone(),
        Ideal::Polynomial(p) => initial_ideal(p)?,
    };
    let w = t.window.union(&window_for(init.nvars(), &[&init]));
    let own = t.own.with_window(w);
    let pairs = [("initial", cohomology_ext_monomial(&init, w)?), ("lex", t.lexicographic.with_window(w))];
    let mut results = Vec::new();
    let mut text = format!("cancel {ideal}:");
    let mut ok = true;
    for (name, other) in &pairs {
        match cancellation_witness(&own, other) {
            Ok(witness) => {
                let verified = witness.verify(&own, other);
                ok &= verified;
                text.push_str(&format!(" {name}={verified}"));
                results.push(json!({"with": name, "feasible": true, "verified": verified, "witness": witness}));
            }
            Err(e) => {
                ok = false;
                text.push_str(&format!(" {name}=false ({e})"));
                results.push(json!({"with": name, "feasible": false, "reason": e.to_string()}));
            }
        }
    }
    let json = json!({"checker": "cancel", "instance": ideal.to_string(), "pairs": results, "consistent": ok});
    Ok((Output::record(json, text), verdict(ok)))
}
