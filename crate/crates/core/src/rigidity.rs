//! Executable checkers relating the local cohomology of `R/I`, `R/gin(I)`
//! and `R/I^lex`. Every condition is computed by its own code path; a
//! report is consistent when the conditions that should agree do.

use std::fmt;

use serde::Serialize;
use serde_json::Value;

use crate::decomposition::DimensionFiltration;
use crate::error::{Error, Result};
use crate::groebner::{gin, gin_monomial, saturate, GinOptions};
use crate::hilbert::hilbert_numerator;
use crate::ideal::MonomialIdeal;
use crate::lex::{is_critical, is_universal_lex, lex_from_series};
use crate::localcoh::{
    bw_polynomial, cohomology_ext, cohomology_ext_monomial, ideal_hilbert_series, window_for, CohomologyTable,
    Window,
};
use crate::parse::Ideal;
use crate::rng::DEFAULT_SEED;

/// Outcome of one checker on one ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub checker: String,
    pub instance: String,
    /// Named conditions; `None` marks a condition that does not apply.
    pub conditions: Vec<(String, Option<bool>)>,
    /// Facts that must hold whatever the conditions say.
    pub side_checks: Vec<(String, bool)>,
    pub consistent: bool,
    pub witness: Option<String>,
}

impl EquivalenceReport {
    fn equivalence(checker: &str, instance: String, conditions: Vec<(String, Option<bool>)>) -> Self {
        let values: Vec<bool> = conditions.iter().filter_map(|c| c.1).collect();
        let agree = values.windows(2).all(|w| w[0] == w[1]);
        EquivalenceReport {
            checker: checker.into(),
            instance,
            conditions,
            side_checks: Vec::new(),
            consistent: agree,
            witness: None,
        }
    }

    fn with_side(mut self, name: &str, ok: bool) -> Self {
        self.side_checks.push((name.into(), ok));
        self.consistent &= ok;
        self
    }

    fn with_witness(mut self, w: Option<String>) -> Self {
        if !self.consistent {
            self.witness = w;
        }
        self
    }

    /// Value of a named condition.
    pub fn condition(&self, name: &str) -> Option<bool> {
        self.conditions.iter().find(|c| c.0 == name).and_then(|c| c.1)
    }

    /// The common value of the applicable conditions, if they agree.
    pub fn verdict(&self) -> Option<bool> {
        let values: Vec<bool> = self.conditions.iter().filter_map(|c| c.1).collect();
        if self.consistent && !values.is_empty() {
            Some(values[0])
        } else {
            None
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}:", self.checker, self.instance)?;
        for (name, v) in &self.conditions {
            let v = v.map_or("n/a".to_string(), |b| b.to_string());
            write!(f, " {name}={v}")?;
        }
        for (name, ok) in &self.side_checks {
            write!(f, " [{name}={ok}]")?;
        }
        write!(f, " consistent={}", self.consistent)?;
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}

/// `I`, `gin(I)` and `I^lex` with their cohomology tables.
#[derive(Clone, Debug)]
pub struct Triple {
    pub ideal: Ideal,
    pub gin: MonomialIdeal,
    pub lex: MonomialIdeal,
    pub window: Window,
    pub own: CohomologyTable,
    pub generic: CohomologyTable,
    pub lexicographic: CohomologyTable,
    pub opts: GinOptions,
}

impl Triple {
    pub fn new(ideal: &Ideal, opts: &GinOptions) -> Result<Self> {
        let ctx = ideal.context();
        let n = ctx.nvars();
        let hilb = ideal_hilbert_series(ideal)?;
        let generic = gin(&ideal.as_poly(), opts)?;
        let (lex, _) = lex_from_series(ctx, &hilb)?;
        let mut ideals = vec![&generic, &lex];
        if let Ideal::Monomial(m) = ideal {
            ideals.push(m);
        }
        let window = window_for(n, &ideals);
        Ok(Triple {
            ideal: ideal.clone(),
            own: cohomology_ext(ideal, window)?,
            generic: cohomology_ext_monomial(&generic, window)?,
            lexicographic: cohomology_ext_monomial(&lex, window)?,
            gin: generic,
            lex,
            window,
            opts: *opts,
        })
    }

    pub fn nvars(&self) -> usize {
        self.ideal.context().nvars()
    }

    fn saturation(&self) -> Result<Ideal> {
        Ok(match &self.ideal {
            Ideal::Monomial(m) => Ideal::Monomial(m.saturate_m()),
            Ideal::Polynomial(p) => Ideal::Polynomial(saturate(p, self.opts.seed)?),
        })
    }
}

fn row_equal(a: &CohomologyTable, b: &CohomologyTable, k: usize) -> bool {
    a.row_series(k).same_function(b.row_series(k))
}

/// First window entry in rows `k >= from` where the tables differ.
fn difference(a: &CohomologyTable, b: &CohomologyTable, from: usize) -> Option<String> {
    for k in from..=a.nvars() {
        if row_equal(a, b, k) {
            continue;
        }
        let j = a.window().degrees().find(|&j| a.value(k, j) != b.value(k, j));
        return Some(match j {
            Some(j) => format!("h^{k}_{j}: {} vs {}", a.value(k, j), b.value(k, j)),
            None => format!("row {k} differs outside the window"),
        });
    }
    None
}

/// A saturated lex-ideal of positive depth has at most `n` generators;
/// lex-ideals that are not saturated pass trivially.
fn bridge_holds(lex: &MonomialIdeal) -> Result<bool> {
    if lex.is_unit() || lex.is_zero() || lex.saturate_m() != *lex {
        return Ok(true);
    }
    is_universal_lex(lex)
}

/// The four conditions `(I^sat)^lex = (I^lex)^sat`, equal row 0, equal
/// tables, `gin(I)^sat = (I^lex)^sat`, plus equality of Björner–Wachs
/// polynomials for monomial `I`.
pub fn saturation_rigidity_check(ideal: &Ideal, opts: &GinOptions) -> Result<EquivalenceReport> {
    saturation_rigidity_from(&Triple::new(ideal, opts)?)
}

pub fn saturation_rigidity_from(t: &Triple) -> Result<EquivalenceReport> {
    let ctx = t.ideal.context();
    let sat = t.saturation()?;
    let (sat_lex, _) = lex_from_series(ctx, &ideal_hilbert_series(&sat)?)?;
    let lex_sat = t.lex.saturate_m();
    let bw = match &t.ideal {
        Ideal::Monomial(m) => Some(bw_polynomial(m)? == bw_polynomial(&t.lex)?),
        Ideal::Polynomial(_) => None,
    };
    let conditions = vec![
        ("sat_lex_commute".to_string(), Some(sat_lex == lex_sat)),
        ("row0_equal".to_string(), Some(row_equal(&t.own, &t.lexicographic, 0))),
        ("tables_equal".to_string(), Some(t.own.same_rows(&t.lexicographic))),
        ("gin_sat_equal".to_string(), Some(t.gin.saturate_m() == lex_sat)),
        ("bw_equal".to_string(), bw),
    ];
    let witness = difference(&t.own, &t.lexicographic, 0);
    Ok(EquivalenceReport::equivalence("sat-rigidity", t.ideal.to_string(), conditions)
        .with_side("saturated_lex_universal", bridge_holds(&lex_sat)? && bridge_holds(&sat_lex)?)
        .with_witness(witness))
}

/// Equality of Björner–Wachs polynomials of `I` and `I^lex` against the
/// cohomological conditions; when they hold, the dimension filtrations of
/// `gin(I)` and `I^lex` coincide and `BW(R/gin(I)) = BW(R/I)`.
pub fn bw_maximality_check(ideal: &MonomialIdeal, opts: &GinOptions) -> Result<EquivalenceReport> {
    bw_maximality_from(&Triple::new(&Ideal::Monomial(ideal.clone()), opts)?)
}

pub fn bw_maximality_from(t: &Triple) -> Result<EquivalenceReport> {
    let ideal = t
        .ideal
        .as_monomial()
        .ok_or_else(|| Error::Range("the Björner–Wachs check needs a monomial ideal".into()))?;
    let bw_own = bw_polynomial(ideal)?;
    let bw_equal = bw_own == bw_polynomial(&t.lex)?;
    let sat = saturation_rigidity_from(t)?;
    let mut report = EquivalenceReport::equivalence(
        "bw",
        ideal.to_string(),
        vec![("bw_equal".into(), Some(bw_equal)), ("tables_equal".into(), sat.condition("tables_equal"))],
    )
    .with_side("sat_rigidity_consistent", sat.consistent);
    if bw_equal && !ideal.is_unit() {
        // I<i> for i >= 0; I<-1> is the ideal itself
        let g = DimensionFiltration::new(&t.gin)?;
        let l = DimensionFiltration::new(&t.lex)?;
        report = report
            .with_side("filtrations_equal", g.ideals()[1..] == l.ideals()[1..])
            .with_side("gin_bw_equal", bw_polynomial(&t.gin)? == bw_own);
    }
    Ok(report.with_witness(sat.witness))
}

/// `(A_[m+1] : X_{m+1}^∞)_[m]` with `m = n - i`.
pub fn restricted_saturation(a: &MonomialIdeal, i: usize) -> Result<MonomialIdeal> {
    let n = a.nvars();
    if i < 1 || i >= n {
        return Err(Error::Range(format!("need 1 <= i < {n}, got {i}")));
    }
    let m = n - i;
    a.restrict(m + 1)?.colon_var_sat(m).restrict(m)
}

/// The ideals `J` (from `A`) and `J'` (from `I^lex`) of `K[X1..X_{n-i}]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JPair {
    pub i: usize,
    #[serde(serialize_with = "display")]
    pub j: MonomialIdeal,
    #[serde(serialize_with = "display")]
    pub j_prime: MonomialIdeal,
}

fn display<S: serde::Serializer>(m: &MonomialIdeal, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&m.to_string())
}

pub fn j_pair_from(a: &MonomialIdeal, lex: &MonomialIdeal, i: usize) -> Result<JPair> {
    Ok(JPair { i, j: restricted_saturation(a, i)?, j_prime: restricted_saturation(lex, i)? })
}

/// `J` from `gin(I)`.
pub fn build_j_pair(ideal: &Ideal, i: usize, opts: &GinOptions) -> Result<JPair> {
    let t = Triple::new(ideal, opts)?;
    j_pair_from(&t.gin, &t.lex, i)
}

fn j_conditions(pair: &JPair, opts: &GinOptions) -> Result<Vec<(String, Option<bool>)>> {
    let (j, jp) = (&pair.j, &pair.j_prime);
    Ok(vec![
        ("same_hilbert".into(), Some(hilbert_numerator(j) == hilbert_numerator(jp))),
        ("j_critical".into(), Some(is_critical(j)?)),
        ("gin_j_is_j_prime".into(), Some(gin_monomial(j, opts)? == *jp)),
    ])
}

fn j_side(pair: &JPair) -> Result<bool> {
    bridge_holds(&pair.j_prime)
}

/// The six conditions at level `i`: equal row `i` for gin and lex, equal
/// row `i` for `I` and lex, equal rows `>= i`, and the three conditions on
/// `J = (gin(I)_[n-i+1] : X_{n-i+1}^∞)_[n-i]` versus `J'` from the lex-ideal.
pub fn level_rigidity_check(ideal: &Ideal, i: usize, opts: &GinOptions) -> Result<EquivalenceReport> {
    level_rigidity_from(&Triple::new(ideal, opts)?, i)
}

pub fn level_rigidity_from(t: &Triple, i: usize) -> Result<EquivalenceReport> {
    let pair = j_pair_from(&t.gin, &t.lex, i)?;
    let mut conditions = vec![
        ("gin_row_equal".to_string(), Some(row_equal(&t.generic, &t.lexicographic, i))),
        ("row_equal".to_string(), Some(row_equal(&t.own, &t.lexicographic, i))),
        ("rows_from_equal".to_string(), Some(t.own.rows_equal_from(&t.lexicographic, i))),
    ];
    conditions.extend(j_conditions(&pair, &t.opts)?);
    let witness = difference(&t.own, &t.lexicographic, i).or(Some(format!("J = {}, J' = {}", pair.j, pair.j_prime)));
    Ok(EquivalenceReport::equivalence("levels", format!("{} i={i}", t.ideal), conditions)
        .with_side("j_prime_universal", j_side(&pair)?)
        .with_witness(witness))
}

/// The five conditions for weakly stable `I` at level `i`, with `J` built
/// from `I` itself.
pub fn weakly_stable_level_check(ideal: &MonomialIdeal, i: usize, opts: &GinOptions) -> Result<EquivalenceReport> {
    if !ideal.is_weakly_stable() {
        return Err(Error::Range(format!("{ideal} is not weakly stable")));
    }
    weakly_stable_level_from(&Triple::new(&Ideal::Monomial(ideal.clone()), opts)?, i)
}

pub fn weakly_stable_level_from(t: &Triple, i: usize) -> Result<EquivalenceReport> {
    let ideal = match t.ideal.as_monomial() {
        Some(m) if m.is_weakly_stable() => m,
        _ => return Err(Error::Range(format!("{} is not weakly stable", t.ideal))),
    };
    let opts = &t.opts;
    let pair = j_pair_from(ideal, &t.lex, i)?;
    let mut conditions = vec![
        ("row_equal".to_string(), Some(row_equal(&t.own, &t.lexicographic, i))),
        ("rows_from_equal".to_string(), Some(t.own.rows_equal_from(&t.lexicographic, i))),
    ];
    conditions.extend(j_conditions(&pair, opts)?);
    let witness = difference(&t.own, &t.lexicographic, i);
    Ok(EquivalenceReport::equivalence("ws-levels", format!("{ideal} i={i}"), conditions)
        .with_side("j_prime_universal", j_side(&pair)?)
        .with_witness(witness))
}

/// For every `i` with equal rows `i` for gin and lex, the rows `k >= i` of
/// `I` and lex agree; for `i = 0` the full gin/lex equality matches the
/// equality of the tables of `I` and lex.
pub fn row_propagation_check(ideal: &Ideal, opts: &GinOptions) -> Result<EquivalenceReport> {
    row_propagation_from(&Triple::new(ideal, opts)?)
}

pub fn row_propagation_from(t: &Triple) -> Result<EquivalenceReport> {
    let n = t.nvars();
    let mut conditions = Vec::new();
    let mut falsified = Vec::new();
    for i in 0..=n {
        let hypothesis = row_equal(&t.generic, &t.lexicographic, i);
        conditions.push((format!("hypothesis_{i}"), Some(hypothesis)));
        if hypothesis && !t.own.rows_equal_from(&t.lexicographic, i) {
            falsified.push(i);
        }
    }
    let base = t.generic.same_rows(&t.lexicographic) == t.own.same_rows(&t.lexicographic);
    Ok(EquivalenceReport {
        checker: "rows".into(),
        instance: t.ideal.to_string(),
        conditions,
        side_checks: vec![("conclusions_hold".into(), falsified.is_empty()), ("base_case".into(), base)],
        consistent: falsified.is_empty() && base,
        witness: (!falsified.is_empty()).then(|| format!("conclusion fails at i = {falsified:?}")),
    })
}

/// Equal rows `i` for gin and lex imply equal rows `i` for `I` and lex.
pub fn single_row_check(ideal: &Ideal, opts: &GinOptions) -> Result<bool> {
    Ok(single_row_from(&Triple::new(ideal, opts)?))
}

pub fn single_row_from(t: &Triple) -> bool {
    (0..=t.nvars())
        .all(|i| !row_equal(&t.generic, &t.lexicographic, i) || row_equal(&t.own, &t.lexicographic, i))
}

/// For weakly stable `I` and `I'` with the same Hilbert polynomial, the
/// restrictions `I_[n-i]` and the ideals `(I_[n-i+1] : X_{n-i+1}^∞)_[n-i]`
/// have matching Hilbert polynomials.
pub fn restriction_polynomial_check(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<bool> {
    if !a.is_weakly_stable() || !b.is_weakly_stable() {
        return Err(Error::Range("both ideals must be weakly stable".into()));
    }
    if a.nvars() != b.nvars() {
        return Err(Error::Arity { expected: a.nvars(), found: b.nvars() });
    }
    if hilbert_numerator(a).polynomial() != hilbert_numerator(b).polynomial() {
        return Err(Error::Range("the Hilbert polynomials differ".into()));
    }
    let n = a.nvars();
    for i in 0..n {
        let hp = |x: &MonomialIdeal| -> Result<_> { Ok(hilbert_numerator(&x.restrict(n - i)?).polynomial()) };
        if hp(a)? != hp(b)? {
            return Ok(false);
        }
        if i >= 1 {
            let ja = hilbert_numerator(&restricted_saturation(a, i)?).polynomial();
            let jb = hilbert_numerator(&restricted_saturation(b, i)?).polynomial();
            if ja != jb {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every report the checkers produce for one ideal: the saturation
/// equivalence, the Björner–Wachs form for monomial ideals, the level-wise
/// equivalences for `1 <= i < n`, the implication checks, and the weakly
/// stable form when it applies.
pub fn all_reports(ideal: &Ideal, opts: &GinOptions) -> Result<Vec<EquivalenceReport>> {
    let t = Triple::new(ideal, opts)?;
    let n = t.nvars();
    let mut out = vec![saturation_rigidity_from(&t)?, row_propagation_from(&t)?];
    let r46 = single_row_from(&t);
    out.push(EquivalenceReport {
        checker: "single-row".into(),
        instance: ideal.to_string(),
        conditions: vec![("rows_follow".into(), Some(r46))],
        side_checks: Vec::new(),
        consistent: r46,
        witness: None,
    });
    if ideal.as_monomial().is_some() {
        out.push(bw_maximality_from(&t)?);
    }
    let mut levels = Vec::new();
    for i in 1..n {
        let r = level_rigidity_from(&t, i)?;
        levels.push(r.verdict());
        out.push(r);
        if let Ideal::Monomial(m) = ideal {
            if m.is_weakly_stable() {
                out.push(weakly_stable_level_from(&t, i)?);
            }
        }
    }
    let upward = levels.windows(2).all(|w| w[0] != Some(true) || w[1] == Some(true));
    out.push(EquivalenceReport {
        checker: "levels-monotone".into(),
        instance: ideal.to_string(),
        conditions: vec![("upward_closed".into(), Some(upward))],
        side_checks: Vec::new(),
        consistent: upward,
        witness: (!upward).then(|| format!("{levels:?}")),
    });
    Ok(out)
}

/// Default options for the checkers.
pub fn default_options() -> GinOptions {
    GinOptions { seed: DEFAULT_SEED, ..GinOptions::default() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::tests::ideal;

    fn mono(n: usize, e: &[&[u32]]) -> Ideal {
        Ideal::Monomial(ideal(n, e))
    }

    fn four() -> Ideal {
        mono(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]])
    }

    #[test]
    fn saturation_rigidity_examples() {
        let o = default_options();
        let r = saturation_rigidity_check(&mono(2, &[&[2, 0], &[1, 1]]), &o).unwrap();
        assert!(r.consistent, "{r}");
        assert_eq!(r.verdict(), Some(true));
        let r = saturation_rigidity_check(&four(), &o).unwrap();
        assert!(r.consistent, "{r}");
        assert_eq!(r.verdict(), Some(false));
        let r = saturation_rigidity_check(&mono(2, &[&[2, 0], &[1, 1], &[0, 3]]), &o).unwrap();
        assert_eq!(r.verdict(), Some(true), "{r}");
    }

    #[test]
    fn four_variable_lex_ideal() {
        let t = Triple::new(&four(), &default_options()).unwrap();
        assert_eq!(t.lex, ideal(4, &[&[2, 0, 0, 0], &[1, 1, 0, 0], &[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 3, 0, 0], &[0, 2, 1, 0]]));
    }

    #[test]
    fn bw_examples() {
        let o = default_options();
        let r = bw_maximality_check(&ideal(2, &[&[2, 0], &[1, 1]]), &o).unwrap();
        assert!(r.consistent && r.verdict() == Some(true), "{r}");
        // (X1^2) is saturated and unmixed, so both sides are (1 + t)*w
        let r = bw_maximality_check(&ideal(2, &[&[1, 1]]), &o).unwrap();
        assert!(r.consistent && r.verdict() == Some(true), "{r}");
        assert_eq!(bw_polynomial(&ideal(2, &[&[2, 0]])).unwrap().to_string(), "(1 + t)*w");
        let r = bw_maximality_check(four().as_monomial().unwrap(), &o).unwrap();
        assert!(r.consistent && r.verdict() == Some(false), "{r}");
    }

    #[test]
    fn j_pairs() {
        let o = default_options();
        let p = build_j_pair(&mono(2, &[&[1, 1]]), 1, &o).unwrap();
        assert_eq!(p.j, ideal(1, &[&[2]]));
        assert_eq!(p.j_prime, p.j);
        let r = level_rigidity_check(&mono(2, &[&[1, 1]]), 1, &o).unwrap();
        assert!(r.consistent && r.verdict() == Some(true), "{r}");
        let r = level_rigidity_check(&four(), 1, &o).unwrap();
        assert!(r.consistent && r.verdict() == Some(false), "{r}");
        let r = level_rigidity_check(&four(), 3, &o).unwrap();
        assert!(r.consistent, "{r}");
    }

    /// Two skew lines in P^3: gin and lex share the top row, `I` does not,
    /// so the level-2 conditions disagree and the checker must say so.
    #[test]
    fn two_skew_lines_break_the_top_level() {
        let o = default_options();
        let t = Triple::new(&four(), &o).unwrap();
        for j in -10i64..=-2 {
            assert_eq!(t.own.value(2, j), 2 * (-j as i128 - 1));
            assert_eq!(t.generic.value(2, j), 2 * (-j as i128 - 1) + 1);
            assert_eq!(t.lexicographic.value(2, j), 2 * (-j as i128 - 1) + 1);
        }
        let r = level_rigidity_from(&t, 2).unwrap();
        assert!(!r.consistent, "{r}");
        assert_eq!(r.condition("gin_row_equal"), Some(true));
        assert_eq!(r.condition("row_equal"), Some(false));
        assert_eq!(r.condition("j_critical"), Some(true));
        assert!(r.witness.is_some());
    }

    #[test]
    fn row_propagation_examples() {
        let o = default_options();
        let r = row_propagation_check(&mono(2, &[&[1, 1]]), &o).unwrap();
        assert!(r.consistent);
        assert!(r.conditions.iter().all(|c| c.1 == Some(true)));
        let r = row_propagation_check(&four(), &o).unwrap();
        assert_eq!(r.condition("hypothesis_1"), Some(false));
        assert_eq!(r.condition("hypothesis_2"), Some(true));
        assert_eq!(r.condition("hypothesis_3"), Some(true));
        assert!(!r.consistent, "{r}");
        assert_eq!(r.witness.as_deref(), Some("conclusion fails at i = [2]"));
        assert!(!single_row_check(&four(), &o).unwrap());
        assert!(single_row_check(&mono(3, &[&[2, 0, 0], &[1, 1, 0]]), &o).unwrap());
    }

    #[test]
    fn restriction_polynomial_examples() {
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0]]);
        assert!(restriction_polynomial_check(&i, &i).unwrap());
        let t = Triple::new(&mono(3, &[&[1, 1, 0], &[0, 1, 1]]), &default_options()).unwrap();
        assert!(restriction_polynomial_check(&t.gin, &t.lex).unwrap());
        assert!(restriction_polynomial_check(&ideal(2, &[&[1, 1]]), &ideal(2, &[&[2, 0]])).is_err());
    }

    #[test]
    fn weakly_stable_levels() {
        let o = default_options();
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0]]);
        for level in 1..3 {
            let r = weakly_stable_level_check(&i, level, &o).unwrap();
            assert!(r.consistent, "{r}");
        }
        for r in all_reports(&Ideal::Monomial(i), &o).unwrap() {
            assert!(r.consistent, "{r}");
        }
    }
}
