//! End-to-end acceptance run. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion does.

mod common;

use std::time::Instant;

use common::*;
use lexcoh::corpus::{generate_corpus, CorpusSpec, Family};
use lexcoh::decomposition::dimension;
use lexcoh::groebner::{gin, gin_restriction_identity_check, initial_ideal, saturate};
use lexcoh::hilbert::hilbert_numerator;
use lexcoh::lex::{is_universal_lex, lex_from_series, lex_ideal};
use lexcoh::localcoh::*;
use lexcoh::resolution::{schreyer_resolution, taylor_resolution};
use lexcoh::rigidity::{all_reports, bw_maximality_from, default_options, saturation_rigidity_from, Triple};
use lexcoh::series::{Laurent, RationalSeries};
use lexcoh::{Error, FreeResolution, GinOptions, Ideal, IdealFile, PolyIdeal};

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), summary: String::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn report(number: usize, title: &str, started: Instant, limit_secs: f64, mut outcome: Outcome) -> bool {
    let secs = started.elapsed().as_secs_f64();
    if secs > limit_secs {
        outcome.failures.push(format!("took {secs:.1}s, limit {limit_secs}s"));
    }
    let ok = outcome.failures.is_empty();
    println!(
        "acceptance {number} {}: {title} ({}; {secs:.2}s)",
        if ok { "PASS" } else { "FAIL" },
        outcome.summary
    );
    for f in outcome.failures.iter().take(5) {
        println!("    {f}");
    }
    if outcome.failures.len() > 5 {
        println!("    ... {} more", outcome.failures.len() - 5);
    }
    ok
}

fn corpus(family: Family, per_n: usize, max_degree: u32, max_generators: usize, seed: u64) -> Vec<IdealFile> {
    (2..=4)
        .flat_map(|n| generate_corpus(&CorpusSpec::new(family, n, max_degree, max_generators, per_n, seed)).unwrap())
        .collect()
}

fn weakly_stable_corpus() -> Vec<IdealFile> {
    corpus(Family::WeaklyStable, 70, 5, 6, 11)
}

fn monomial_corpus() -> Vec<IdealFile> {
    corpus(Family::Monomial, 70, 5, 6, 12)
}

fn sparse_corpus() -> Vec<IdealFile> {
    corpus(Family::HomogeneousSparse, 20, 3, 3, 13)
}

fn opts() -> GinOptions {
    default_options()
}

fn alternating_sum(res: &FreeResolution) -> Laurent {
    let mut alt = Laurent::zero();
    for k in 0..=res.length() {
        for &a in res.degrees(k) {
            alt = alt.add(&Laurent::monomial(a as i64, if k % 2 == 0 { 1 } else { -1 }));
        }
    }
    alt
}

fn unit_examples() -> bool {
    let started = Instant::now();
    let mut out = Outcome::new();
    let lex = lex_ideal(&mono(2, &[&[1, 1]])).unwrap();
    out.check(lex == mono(2, &[&[2, 0]]), || format!("lex of (X1X2) is {lex}"));
    let sat = mono(2, &[&[2, 0], &[1, 1]]).colon_var_sat(1);
    out.check(sat == mono(2, &[&[1, 0]]), || format!("(X1^2, X1X2) : X2^inf is {sat}"));
    let bw = bw_polynomial(&mono(2, &[&[2, 0], &[1, 1]])).unwrap();
    out.check(bw.to_string() == "t + w", || format!("BW of (X1^2, X1X2) is {bw}"));
    let w = Window::new(-6, 2).unwrap();
    let x1x2 = mono(2, &[&[1, 1]]);
    for table in [cohomology_layers(&x1x2, w).unwrap(), cohomology_ext_monomial(&x1x2, w).unwrap()] {
        out.check(table.value(1, 0) == 1, || format!("{} route: h^1_0 = {}", table.route(), table.value(1, 0)));
        for j in -6..=-1 {
            out.check(table.value(1, j) == 2, || format!("{} route: h^1_{j} = {}", table.route(), table.value(1, j)));
        }
    }
    let lines = Ideal::Monomial(mono(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]));
    let table = cohomology_ext(&lines, w).unwrap();
    out.check(table.value(1, 0) == 1, || format!("two skew lines: h^1_0 = {}", table.value(1, 0)));
    let scm = is_scm(&lines, &opts()).unwrap();
    out.check(!scm, || "two skew lines reported sequentially Cohen-Macaulay".into());
    out.summary = "lex, saturation, BW, two tables, sCM".into();
    report(1, "worked examples", started, 1.0, out)
}

fn route_agreement(ws: &[IdealFile]) -> bool {
    let started = Instant::now();
    let mut out = Outcome::new();
    for f in ws {
        let i = f.ideal.as_monomial().unwrap();
        out.check(i.is_weakly_stable(), || format!("{i} is not weakly stable"));
        let w = default_window(&f.ideal, &opts()).unwrap();
        let a = cohomology_layers(i, w).unwrap();
        let b = cohomology_ext(&f.ideal, w).unwrap();
        out.check(a.equal_on_window(&b), || format!("routes differ on {i}"));
    }
    out.summary = format!("{} weakly stable ideals", ws.len());
    report(2, "layer route = Ext route on the default window", started, 120.0, out)
}

struct Tables {
    file: IdealFile,
    triple: Triple,
    initial: CohomologyTable,
}

fn tables(files: &[IdealFile]) -> Vec<Tables> {
    files
        .iter()
        .map(|f| {
            let triple = Triple::new(&f.ideal, &opts()).unwrap();
            let init = match &f.ideal {
                Ideal::Monomial(m) => m.clone(),
                Ideal::Polynomial(p) => initial_ideal(p).unwrap(),
            };
            let w = triple.window.union(&window_for(init.nvars(), &[&init]));
            let initial = cohomology_ext_monomial(&init, w).unwrap();
            Tables { file: f.clone(), triple, initial }
        })
        .collect()
}

fn inequality_chain(all: &[Tables], monomial: usize, sparse: usize, started: Instant) -> bool {
    let mut out = Outcome::new();
    for t in all {
        let tr = &t.triple;
        out.check(tr.own.exceeds(&tr.generic).is_none(), || format!("I > gin on {}", t.file.ideal));
        out.check(tr.generic.exceeds(&tr.lexicographic).is_none(), || format!("gin > lex on {}", t.file.ideal));
    }
    out.summary = format!("{monomial} monomial and {sparse} sparse ideals over GF(32003)");
    report(3, "h(R/I) <= h(R/gin I) <= h(R/I^lex)", started, 300.0, out)
}

fn cancellation(all: &[Tables]) -> bool {
    let started = Instant::now();
    let mut out = Outcome::new();
    for t in all {
        let own = t.triple.own.with_window(t.initial.window());
        for (name, other) in [("in(I)", &t.initial), ("I^lex", &t.triple.lexicographic.with_window(t.initial.window()))] {
            match cancellation_witness(&own, other) {
                Ok(w) => out.check(w.verify(&own, other), || format!("witness for {name} fails on {}", t.file.ideal)),
                Err(e) => out.check(false, || format!("{name} on {}: {e}", t.file.ideal)),
            }
        }
    }
    out.summary = format!("{} pairs", 2 * all.len());
    report(4, "consecutive cancellation witnesses", started, 300.0, out)
}

fn saturation_rigidity(monomial: &[Tables]) -> bool {
    let started = Instant::now();
    let mut out = Outcome::new();
    let mut equal = 0;
    for t in monomial {
        let sat = saturation_rigidity_from(&t.triple).unwrap();
        out.check(sat.consistent, || sat.to_string());
        equal += usize::from(sat.verdict() == Some(true));
        let bw = bw_maximality_from(&t.triple).unwrap();
        out.check(bw.consistent, || bw.to_string());
    }
    out.summary = format!("{} instances, {equal} with all conditions true", monomial.len());
    report(5, "saturation and Björner–Wachs equivalences", started, 300.0, out)
}

fn scm_levels(files: &[IdealFile]) -> bool {
    let started = Instant::now();
    let mut out = Outcome::new();
    let mut compared = 0;
    for f in files {
        let n = f.context().nvars();
        let d = match &f.ideal {
            Ideal::Monomial(m) if m.is_unit() => continue,
            Ideal::Monomial(m) => dimension(m),
            Ideal::Polynomial(p) => hilbert_numerator(&initial_ideal(p).unwrap()).dimension(),
        };
        let mut previous = false;
        for i in 0..=d.max(0) as usize {
            let (rows, layers) = scm_criteria(&f.ideal, i, &opts()).unwrap();
            if let Some(layers) = layers {
                compared += 1;
                out.check(rows == layers, || format!("{i}-sCM criteria disagree on {}", f.ideal));
            }
            out.check(!previous || rows, || format!("{i}-sCM fails after {}-sCM holds on {}", i - 1, f.ideal));
            previous = rows;
        }
        out.check(previous, || format!("not {d}-sCM: {} (n = {n})", f.ideal));
    }
    out.summary = format!("{} instances, {compared} criterion pairs", files.len());
    report(6, "i-sCM criteria agree and are upward closed", started, 300.0, out)
}

fn level_rigidity(files: &[IdealFile]) -> bool {
    let started = Instant::now();
    let mut out = Outcome::new();
    let mut reports = 0;
    let mut weakly_stable = 0;
    for f in files {
        for r in all_reports(&f.ideal, &opts()).unwrap() {
            if !["rows", "single-row", "levels", "levels-monotone", "ws-levels"].contains(&r.checker.as_str()) {
                continue;
            }
            reports += 1;
            weakly_stable += usize::from(r.checker == "ws-levels");
            out.check(r.consistent, || format!("{}: {}", f.label.clone().unwrap_or_default(), r));
        }
    }
    // a fixed ideal outside the random corpus, reported for reference
    let lines = Ideal::Monomial(mono(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]));
    let known = lexcoh::rigidity::row_propagation_check(&lines, &opts()).unwrap();
    out.summary = format!(
        "{} instances, {reports} reports, {weakly_stable} weakly stable level reports; fixed instance {}: {}",
        files.len(),
        lines,
        known.witness.unwrap_or_else(|| "consistent".into())
    );
    report(7, "row and level propagation reports", started, 300.0, out)
}

fn critical_instances() -> Vec<Ideal> {
    let mut found = Vec::new();
    for (family, seed) in [(Family::Monomial, 21), (Family::HomogeneousSparse, 22), (Family::WeaklyStable, 23)] {
        for n in 2..=4 {
            for f in generate_corpus(&CorpusSpec::new(family, n, 4, 3, 40, seed)).unwrap() {
                let ctx = f.context();
                let hilb = ideal_hilbert_series(&f.ideal).unwrap();
                let (lex, _) = lex_from_series(ctx, &hilb).unwrap();
                let nontrivial = !lex.is_unit() && lex.num_generators() >= 2;
                if nontrivial && is_universal_lex(&lex).unwrap() && !found.contains(&f.ideal) {
                    found.push(f.ideal);
                }
            }
        }
    }
    found
}

fn gin_suite() -> bool {
    let started = Instant::now();
    let mut out = Outcome::new();
    let critical = critical_instances();
    out.check(critical.len() >= 20, || format!("only {} critical instances", critical.len()));
    let (mut trials, mut uncertified) = (0usize, 0usize);
    for ideal in &critical {
        let p = ideal.as_poly();
        let lex = lex_from_series(ideal.context(), &ideal_hilbert_series(ideal).unwrap()).unwrap().0;
        for seed in 0..5u64 {
            let o = GinOptions { seed, ..opts() };
            trials += 1;
            let g = match gin(&p, &o) {
                Ok(g) => g,
                Err(Error::GinCertification(_)) => {
                    uncertified += 1;
                    continue;
                }
                Err(e) => panic!("{e}"),
            };
            out.check(g.is_weakly_stable(), || format!("gin({ideal}) = {g} is not weakly stable"));
            out.check(g == lex, || format!("gin({ideal}) = {g} but the lex-ideal is {lex}"));
            let again = gin(&PolyIdeal::from_monomial(&g), &o).unwrap();
            out.check(again == g, || format!("gin not idempotent on {ideal}"));
            let sat = saturate(&p, o.seed).unwrap();
            out.check(gin(&sat, &o).unwrap() == g.saturate_m(), || format!("gin and saturation differ on {ideal}"));
            out.check(gin_restriction_identity_check(&p, &o).unwrap(), || format!("restriction identity fails on {ideal}"));
        }
    }
    let rate = uncertified as f64 / trials.max(1) as f64;
    out.check(rate < 0.01, || format!("{uncertified} of {trials} gin computations uncertified"));
    out.summary = format!("{} critical instances, {trials} gin runs, {uncertified} uncertified", critical.len());
    report(8, "generic initial ideal structure", started, 300.0, out)
}

fn serre_and_hilbert(all: &[Tables], ws: &[IdealFile]) -> bool {
    let started = Instant::now();
    let mut out = Outcome::new();
    let mut touched = 0;
    let mut check_monomial = |out: &mut Outcome, m: &lexcoh::MonomialIdeal, table: &CohomologyTable| {
        touched += 1;
        let hilb = hilbert_numerator(m);
        out.check(serre_check(table, &hilb).is_ok(), || format!("Serre identity fails for {m}"));
        if !m.is_unit() {
            out.check(hilb.dimension() == dimension(m), || format!("pole order differs from dimension for {m}"));
        }
        if m.num_generators() <= 10 && !m.is_unit() {
            let res = taylor_resolution(m).unwrap();
            let alt = RationalSeries::new(alternating_sum(&res), m.nvars());
            out.check(alt.same_function(&hilb.as_rational()), || format!("resolution of {m} disagrees with its Hilbert series"));
        }
    };
    for t in all {
        let tr = &t.triple;
        check_monomial(&mut out, &tr.gin, &tr.generic);
        check_monomial(&mut out, &tr.lex, &tr.lexicographic);
        let hilb = ideal_hilbert_series(&tr.ideal).unwrap();
        out.check(serre_check(&tr.own, &hilb).is_ok(), || format!("Serre identity fails for {}", tr.ideal));
        match &tr.ideal {
            Ideal::Monomial(m) => check_monomial(&mut out, m, &tr.own),
            Ideal::Polynomial(p) => {
                let res = schreyer_resolution(p, p.nvars()).unwrap();
                let alt = RationalSeries::new(alternating_sum(&res), p.nvars());
                out.check(alt.same_function(&hilb.as_rational()), || format!("resolution of {p:?} disagrees"));
                let init = initial_ideal(p).unwrap();
                out.check(hilb.dimension() == dimension(&init), || format!("pole order differs for {}", tr.ideal));
            }
        }
    }
    for f in ws {
        let m = f.ideal.as_monomial().unwrap();
        let w = default_window(&f.ideal, &opts()).unwrap();
        check_monomial(&mut out, m, &cohomology_layers(m, w).unwrap());
    }
    out.summary = format!("{touched} monomial tables plus every polynomial instance");
    report(9, "Serre identity and Hilbert cross-checks", started, 300.0, out)
}

#[test]
fn acceptance() {
    // start below the test harness line
    println!();
    let ws = weakly_stable_corpus();
    let monomial = monomial_corpus();
    let sparse = sparse_corpus();
    let mut results = vec![unit_examples(), route_agreement(&ws)];

    let started = Instant::now();
    let mono_tables = tables(&monomial);
    let sparse_tables = tables(&sparse);
    let all: Vec<Tables> = mono_tables.into_iter().chain(sparse_tables).collect();
    results.push(inequality_chain(&all, monomial.len(), sparse.len(), started));
    results.push(cancellation(&all));
    results.push(saturation_rigidity(&all[..monomial.len()]));

    let everything: Vec<IdealFile> = monomial.iter().chain(&sparse).chain(&ws).cloned().collect();
    results.push(scm_levels(&everything));
    results.push(level_rigidity(&everything));
    results.push(gin_suite());
    results.push(serre_and_hilbert(&all, &ws));

    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    println!("acceptance summary: {} of {} criteria pass", results.len() - failed.len(), results.len());
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
