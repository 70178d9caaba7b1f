//! Hilbert functions of the local cohomology modules `H^k_m(R/I)`.
//!
//! Two independent routes produce a [`CohomologyTable`]:
//!
//! * the layer route, valid for sequentially Cohen–Macaulay quotients, reads
//!   `h^k(R/I)` off the Hilbert series of the unmixed layer `U_k` by
//!   re-expanding `(-1)^k Hilb(U_k)` in descending powers of `t`;
//! * the Ext route uses graded local duality
//!   `h^k(R/I)_j = dim_K Ext^{n-k}(R/I, R)_{-n-j}`. For monomial ideals the
//!   Ext modules are computed multidegree by multidegree from the dual
//!   Taylor complex; for other ideals from a minimal free resolution, whose
//!   dual cokernels and images get Hilbert series from module Gröbner bases.
//!
//! Rows are stored as exact generating functions `G_k(u) = Σ_j h^k_j u^{-j}`
//! written as rational functions in `u`, so every entry is available, not
//! only those inside the window.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::decomposition::DimensionFiltration;
use crate::error::{Error, Result};
use crate::field::{with_field, Field};
use crate::gb::{Engine, FreeModule, Vector};
use crate::groebner::{gin, initial_ideal, GinOptions, BASIS_CAP};
use crate::hilbert::{hilbert_numerator, HilbertSeries};
use crate::ideal::MonomialIdeal;
use crate::lex::{is_critical, lex_from_series};
use crate::linalg::rank;
use crate::monomial::TermOrder;
use crate::parse::Ideal;
use crate::polyideal::PolyIdeal;
use crate::resolution::{schreyer_resolution, FreeResolution};
use crate::series::{Laurent, RationalSeries};

/// A closed degree interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::Range(format!("empty window [{lo}, {hi}]")));
        }
        Ok(Window { lo, hi })
    }

    /// `[-(d + n + 2), d + 2]`.
    pub fn around(d: i64, n: usize) -> Self {
        Window { lo: -(d + n as i64 + 2), hi: d + 2 }
    }

    pub fn contains(&self, j: i64) -> bool {
        self.lo <= j && j <= self.hi
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    /// Smallest window containing both.
    pub fn union(&self, other: &Self) -> Self {
        Window { lo: self.lo.min(other.lo), hi: self.hi.max(other.hi) }
    }

    /// Parses `a:b`.
    pub fn parse(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("window `{s}` is not of the form a:b")))?;
        let num = |x: &str| {
            x.trim().parse::<i64>().map_err(|e| Error::Parse(format!("bad window bound `{x}`: {e}")))
        };
        Window::new(num(a)?, num(b)?)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Which computation produced a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Layers,
    Ext,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Layers => "layers",
            Route::Ext => "ext",
        })
    }
}

/// `h^k(R/I)_j` for `0 <= k <= n`, exact in every degree and displayed over
/// a window.
#[derive(Clone, PartialEq, Eq)]
pub struct CohomologyTable {
    n: usize,
    window: Window,
    route: Route,
    rows: Vec<RationalSeries>,
}

impl CohomologyTable {
    /// Table from the generating functions `G_k(u)`, `k = 0..=n`. Ext
    /// tables must be non-negative on the window; layer tables are taken
    /// as computed, since the layer formula is only meaningful for
    /// sequentially Cohen–Macaulay quotients.
    pub fn from_rows(n: usize, window: Window, route: Route, rows: Vec<RationalSeries>) -> Result<Self> {
        if rows.len() != n + 1 {
            return Err(Error::Internal(format!("expected {} rows, got {}", n + 1, rows.len())));
        }
        let rows: Vec<RationalSeries> = rows.iter().map(|r| r.reduced()).collect();
        let table = CohomologyTable { n, window, route, rows };
        if route == Route::Layers {
            return Ok(table);
        }
        for k in 0..=n {
            for j in window.degrees() {
                if table.value(k, j) < 0 {
                    return Err(Error::Internal(format!("negative entry h^{k}_{j}")));
                }
            }
        }
        Ok(table)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn route(&self) -> Route {
        self.route
    }

    /// Same table displayed over another window.
    pub fn with_window(&self, window: Window) -> Self {
        CohomologyTable { window, ..self.clone() }
    }

    /// `Σ_j h^k_j u^{-j}` as a reduced rational function in `u`.
    pub fn row_series(&self, k: usize) -> &RationalSeries {
        &self.rows[k]
    }

    /// `h^k_j` in any degree.
    pub fn value(&self, k: usize, j: i64) -> i128 {
        self.rows.get(k).map_or(0, |r| r.coeff(-j))
    }

    /// Row `k` over the window.
    pub fn row(&self, k: usize) -> Vec<i128> {
        self.window.degrees().map(|j| self.value(k, j)).collect()
    }

    /// Indices `k` with `H^k_m(R/I) ≠ 0`.
    pub fn nonzero_rows(&self) -> Vec<usize> {
        (0..=self.n).filter(|&k| !self.rows[k].is_zero()).collect()
    }

    /// Whether every nonzero row has a nonzero entry inside the window.
    pub fn window_witnesses_rows(&self) -> bool {
        self.nonzero_rows().iter().all(|&k| self.row(k).iter().any(|&h| h != 0))
    }

    /// `(depth, dim)` of `R/I`: the least and largest `k` with a nonzero
    /// entry in the window. Fails for the zero module and when the window
    /// misses a nonzero row.
    pub fn depth_and_dim(&self) -> Result<(usize, usize)> {
        let rows = self.nonzero_rows();
        if rows.is_empty() {
            return Err(Error::Range("the zero module has no depth".into()));
        }
        if !self.window_witnesses_rows() {
            return Err(Error::Range(format!(
                "window {} is too narrow to witness every nonzero row",
                self.window
            )));
        }
        Ok((rows[0], *rows.last().expect("nonempty")))
    }

    /// Equality of rows `k >= from` as generating functions.
    pub fn rows_equal_from(&self, other: &Self, from: usize) -> bool {
        self.n == other.n && (from..=self.n).all(|k| self.rows[k].same_function(&other.rows[k]))
    }

    /// Equality of every row as generating functions.
    pub fn same_rows(&self, other: &Self) -> bool {
        self.rows_equal_from(other, 0)
    }

    /// Equality of every entry inside the window.
    pub fn equal_on_window(&self, other: &Self) -> bool {
        self.n == other.n && (0..=self.n).all(|k| self.row(k) == other.row(k))
    }

    /// First `(k, j)` in the window where `self > other`.
    pub fn exceeds(&self, other: &Self) -> Option<(usize, i64)> {
        (0..=self.n).find_map(|k| {
            self.window.degrees().find(|&j| self.value(k, j) > other.value(k, j)).map(|j| (k, j))
        })
    }

    /// `{"window":[a,b],"rows":{"k":{"j":h}}}` with every entry of the window.
    pub fn to_json(&self) -> Value {
        let mut rows = serde_json::Map::new();
        for k in 0..=self.n {
            let mut row = serde_json::Map::new();
            for j in self.window.degrees() {
                row.insert(j.to_string(), json!(self.value(k, j)));
            }
            rows.insert(k.to_string(), Value::Object(row));
        }
        json!({ "window": [self.window.lo, self.window.hi], "rows": rows })
    }

    /// CSV with header `k,j,h` and one line per entry of the window.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,j,h\n");
        for k in 0..=self.n {
            for j in self.window.degrees() {
                out.push_str(&format!("{k},{j},{}\n", self.value(k, j)));
            }
        }
        out
    }
}

impl fmt::Debug for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "route {} window {}", self.route, self.window)?;
        write!(f, "{:>4}", "k\\j")?;
        for j in self.window.degrees() {
            write!(f, "{j:>5}")?;
        }
        writeln!(f)?;
        for k in 0..=self.n {
            write!(f, "{k:>4}")?;
            for h in self.row(k) {
                write!(f, "{h:>5}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `Hilb(R/J)` for either kind of ideal, through `in(J)` for polynomial
/// ideals.
pub fn ideal_hilbert_series(ideal: &Ideal) -> Result<HilbertSeries> {
    Ok(hilbert_numerator(&monomial_model(ideal)?))
}

/// The ideal itself if monomial, otherwise its degrevlex initial ideal.
fn monomial_model(ideal: &Ideal) -> Result<MonomialIdeal> {
    match ideal {
        Ideal::Monomial(i) => Ok(i.clone()),
        Ideal::Polynomial(j) => initial_ideal(&j.clone().with_order(TermOrder::DegRevLex)),
    }
}

/// `Hilb(U_k(R/I))` for `k = 0..=dim R/I`.
pub fn layer_hilbert(ideal: &MonomialIdeal) -> Result<Vec<HilbertSeries>> {
    let filtration = DimensionFiltration::new(ideal)?;
    let n = ideal.nvars();
    let d = filtration.dim();
    let mut out = Vec::with_capacity(d as usize + 1);
    for k in 0..=d {
        let below = hilbert_numerator(filtration.get(k - 1));
        let above = hilbert_numerator(filtration.get(k));
        let layer = HilbertSeries::new(below.numerator().sub(above.numerator()), n);
        if !layer.is_zero() && layer.reduced().den != k as usize {
            return Err(Error::Internal(format!(
                "layer {k} has pole order {} instead of {k}",
                layer.reduced().den
            )));
        }
        out.push(layer);
    }
    Ok(out)
}

/// `Σ_k h(U_k; t) w^k`: the layer numerators after clearing `(1-t)^k`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BWPolynomial {
    layers: Vec<Laurent>,
}

impl BWPolynomial {
    pub fn new(layers: Vec<Laurent>) -> Self {
        let mut layers = layers;
        while layers.last().is_some_and(|l| l.is_zero()) {
            layers.pop();
        }
        BWPolynomial { layers }
    }

    /// `h(U_k; t)`.
    pub fn layer(&self, k: usize) -> Laurent {
        self.layers.get(k).cloned().unwrap_or_else(Laurent::zero)
    }

    /// Coefficient of `t^d w^k`.
    pub fn coefficient(&self, k: usize, d: i64) -> i128 {
        self.layers.get(k).map_or(0, |l| l.coeff(d))
    }

    /// Largest `k` with a nonzero layer, `-1` for the zero polynomial.
    pub fn degree_in_w(&self) -> i32 {
        self.layers.len() as i32 - 1
    }

    /// Keeps the terms with `k >= i`.
    pub fn truncated(&self, i: usize) -> Self {
        let layers = self
            .layers
            .iter()
            .enumerate()
            .map(|(k, l)| if k >= i { l.clone() } else { Laurent::zero() })
            .collect();
        BWPolynomial::new(layers)
    }

    /// `Σ_k h(U_k; t) / (1-t)^k`.
    pub fn series(&self) -> RationalSeries {
        self.layers
            .iter()
            .enumerate()
            .fold(RationalSeries::zero(), |acc, (k, l)| acc.add(&RationalSeries::new(l.clone(), k)))
    }
}

impl fmt::Debug for BWPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BWPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, l) in self.layers.iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            let w = match k {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{k}"),
            };
            let single = l.terms().count() == 1;
            let part = if w.is_empty() {
                l.to_string()
            } else if l == &Laurent::one() {
                w
            } else if single {
                format!("{l}*{w}")
            } else {
                format!("({l})*{w}")
            };
            parts.push(part);
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

pub fn bw_polynomial(ideal: &MonomialIdeal) -> Result<BWPolynomial> {
    if ideal.is_unit() {
        return Ok(BWPolynomial::new(Vec::new()));
    }
    let layers = layer_hilbert(ideal)?;
    Ok(BWPolynomial::new(layers.iter().map(|l| l.reduced().num.clone()).collect()))
}

pub fn truncated_bw(ideal: &MonomialIdeal, i: usize) -> Result<BWPolynomial> {
    Ok(bw_polynomial(ideal)?.truncated(i))
}

/// Cohomology of `R/I` read off the unmixed layers; correct when `R/I` is
/// sequentially Cohen–Macaulay, in particular for weakly stable `I`. Other
/// inputs give the layer formula's values, which can be negative.
pub fn cohomology_layers(ideal: &MonomialIdeal, window: Window) -> Result<CohomologyTable> {
    let n = ideal.nvars();
    let mut rows = vec![RationalSeries::zero(); n + 1];
    if !ideal.is_unit() {
        for (k, layer) in layer_hilbert(ideal)?.iter().enumerate() {
            // (-1)^k Hilb(U_k)(1/u) = u^k N(1/u) / (1-u)^k
            let r = layer.reduced();
            rows[k] = RationalSeries::new(r.num.invert_variable().shift(k as i64), k);
        }
    }
    CohomologyTable::from_rows(n, window, Route::Layers, rows)
}

/// Cohomology through graded local duality. Monomial ideals use the
/// multigraded dual Taylor complex, other ideals a minimal resolution.
pub fn cohomology_ext(ideal: &Ideal, window: Window) -> Result<CohomologyTable> {
    match ideal {
        Ideal::Monomial(i) => cohomology_ext_monomial(i, window),
        Ideal::Polynomial(j) => cohomology_ext_poly(j, window),
    }
}

/// Ext route for a monomial ideal: each multidegree class contributes the
/// reduced cohomology of a small nerve.
pub fn cohomology_ext_monomial(ideal: &MonomialIdeal, window: Window) -> Result<CohomologyTable> {
    let n = ideal.nvars();
    let ext = with_field!(ideal.context().field(), |f| ext_monomial(&f, ideal))?;
    CohomologyTable::from_rows(n, window, Route::Ext, dual_rows(n, ext))
}

/// Ext route for an arbitrary homogeneous ideal through its minimal
/// resolution.
pub fn cohomology_ext_poly(j: &PolyIdeal, window: Window) -> Result<CohomologyTable> {
    let res = schreyer_resolution(j, j.nvars())?;
    cohomology_from_resolution(&res, window)
}

/// Ext route from any graded free resolution of `R/J`.
pub fn cohomology_from_resolution(res: &FreeResolution, window: Window) -> Result<CohomologyTable> {
    let n = res.context().nvars();
    let ext = with_field!(res.context().field(), |f| ext_from_resolution(&f, res))?;
    CohomologyTable::from_rows(n, window, Route::Ext, dual_rows(n, ext))
}

/// `Ext^i(R/I, R)` series for `i = 0..=n` to rows `G_{n-i}(u) = u^n E_i(u)`.
fn dual_rows(n: usize, ext: Vec<RationalSeries>) -> Vec<RationalSeries> {
    let mut rows = vec![RationalSeries::zero(); n + 1];
    for (i, e) in ext.into_iter().enumerate().take(n + 1) {
        rows[n - i] = e.shift(n as i64);
    }
    rows
}

fn ext_from_resolution<F: Field>(field: &F, res: &FreeResolution) -> Result<Vec<RationalSeries>> {
    let n = res.context().nvars();
    let len = res.length();
    // images[i] = Hilbert series of im(d_i^T) inside F_i^*
    let mut images = vec![RationalSeries::zero(); len + 2];
    for i in 1..=len {
        images[i] = transpose_image(field, n, res, i)?;
    }
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        if i > len {
            out.push(RationalSeries::zero());
            continue;
        }
        let free = res
            .degrees(i)
            .iter()
            .fold(Laurent::zero(), |acc, a| acc.add(&Laurent::monomial(-(*a as i64), 1)));
        let ext = RationalSeries::new(free, n).sub(&images[i + 1]).sub(&images[i]);
        out.push(ext.reduced());
    }
    Ok(out)
}

/// Hilbert series of the submodule of `F_i^* = ⊕ R(a)` spanned by the rows
/// of `d_i`.
fn transpose_image<F: Field>(field: &F, n: usize, res: &FreeResolution, i: usize) -> Result<RationalSeries> {
    let shifts: Vec<i32> = res.degrees(i).iter().map(|a| -a).collect();
    let module = FreeModule::top(n, shifts.clone(), TermOrder::DegRevLex);
    let d = res.map(i);
    let mut rows: Vec<Vector<F::Elem>> = vec![Vec::new(); d.nrows()];
    for c in 0..d.ncols() {
        for (r, p) in d.column(c) {
            for (m, coef) in p.to_field(field)? {
                rows[*r].push((c as u32, m, coef));
            }
        }
    }
    for row in rows.iter_mut() {
        module.sort(row);
    }
    let mut engine = Engine::new(field, &module);
    engine.run(rows, BASIS_CAP)?;
    let ctx = res.context();
    let mut num = Laurent::zero();
    for (b, leads) in engine.leading_monomials().into_iter().enumerate() {
        let quotient = hilbert_numerator(&MonomialIdeal::minimalize(ctx, leads));
        let image = Laurent::one().sub(quotient.numerator());
        num = num.add(&image.shift(shifts[b] as i64));
    }
    Ok(RationalSeries::new(num, n))
}

/// `Ext^k(R/I, R)` for monomial `I` as series in `t`.
///
/// In multidegree `α` the dual Taylor complex computes the reduced
/// cohomology, shifted by two, of the complex of sets of generators `σ`
/// with `lcm(σ)_i < -α_i` for some `i` with `α_i < 0`. That complex is a
/// union of simplices `V_i = {g : g_i < -α_i}`, so it is homotopy
/// equivalent to the nerve on `{i : V_i ≠ ∅}`. The nerve depends only on
/// which generators lie in each `V_i`; it is a cone unless each `-α_i` is
/// at most the largest exponent of `X_i`. Along each coordinate the sets
/// `V_i` are constant between consecutive generator exponents, so each
/// class is a product of exponent intervals and contributes a geometric
/// sum in each negative coordinate.
fn ext_monomial<F: Field>(field: &F, ideal: &MonomialIdeal) -> Result<Vec<RationalSeries>> {
    let n = ideal.nvars();
    let mut out = vec![RationalSeries::zero(); n + 1];
    if ideal.is_unit() {
        return Ok(out);
    }
    if ideal.is_zero() {
        out[0] = RationalSeries::new(Laurent::one(), n);
        return Ok(out);
    }
    let gens = ideal.generators();
    // per coordinate: (v, factor) with V_i = {g : g_i <= v} for -α_i in an
    // interval whose geometric sum of t^{α_i} is `factor`
    let intervals: Vec<Vec<(u32, Laurent)>> = (0..n)
        .map(|i| {
            let mut values: Vec<u32> = gens.iter().map(|g| g.exp(i)).collect();
            values.push(0);
            values.sort_unstable();
            values.dedup();
            values
                .windows(2)
                .map(|w| {
                    let (lo, hi) = (w[0] as i64 + 1, w[1] as i64);
                    let len = (hi - lo + 1) as usize;
                    (w[0], Laurent::from_coeffs(-hi, vec![1; len]))
                })
                .collect()
        })
        .collect();
    let classes: u128 = intervals.iter().map(|v| v.len() as u128 + 1).product();
    if classes > 5_000_000 {
        return Err(Error::Cap(format!("{classes} multidegree classes")));
    }
    // sets[i][s]: generators with g_i <= v for interval s of coordinate i
    let words = gens.len().div_ceil(64);
    let full: Vec<u64> = (0..words)
        .map(|w| if 64 * (w + 1) <= gens.len() { u64::MAX } else { (1u64 << (gens.len() - 64 * w)) - 1 })
        .collect();
    let sets: Vec<Vec<Vec<u64>>> = (0..n)
        .map(|i| {
            intervals[i]
                .iter()
                .map(|&(v, _)| {
                    let mut bits = vec![0u64; words];
                    for (k, g) in gens.iter().enumerate() {
                        if g.exp(i) <= v {
                            bits[k / 64] |= 1 << (k % 64);
                        }
                    }
                    bits
                })
                .collect()
        })
        .collect();
    // numerators of Ext^k over (1-t)^f, keyed by (k, f)
    let mut acc: HashMap<(usize, usize), Laurent> = HashMap::new();
    let mut cache: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
    // c[i] = 0 marks a free coordinate (α_i >= 0), otherwise interval c[i] - 1
    let mut c = vec![0usize; n];
    loop {
        let negative: Vec<usize> = (0..n).filter(|&i| c[i] > 0).collect();
        let vertex_sets: Vec<&Vec<u64>> =
            negative.iter().map(|&i| &sets[i][c[i] - 1]).filter(|b| b.iter().any(|&w| w != 0)).collect();
        // a simplex covering every generator makes the union contractible
        let cone = vertex_sets.iter().any(|b| **b == full);
        if !negative.is_empty() && !cone {
            let free = n - negative.len();
            let faces = nerve_faces(&vertex_sets, words);
            let v = vertex_sets.len();
            let dims = cache.entry(faces).or_insert_with_key(|f| reduced_cohomology(field, v, f)).clone();
            if dims.iter().any(|&d| d > 0) {
                let factor = negative.iter().fold(Laurent::one(), |f, &i| f.mul(&intervals[i][c[i] - 1].1));
                // dims[p + 1] = dim H~^p, p >= -1; Ext^{p+2}
                for (q, &dim) in dims.iter().enumerate() {
                    if dim > 0 {
                        let k = q + 1;
                        if k > n {
                            return Err(Error::Internal(format!("Ext^{k} nonzero beyond n")));
                        }
                        let e = acc.entry((k, free)).or_insert_with(Laurent::zero);
                        *e = e.add(&factor.scale(dim as i128));
                    }
                }
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                let mut keys: Vec<(usize, usize)> = acc.keys().copied().collect();
                keys.sort_unstable();
                for key in keys {
                    out[key.0] = out[key.0].add(&RationalSeries::new(acc[&key].clone(), key.1));
                }
                return Ok(out.into_iter().map(|s| s.reduced()).collect());
            }
            if c[i] < intervals[i].len() {
                c[i] += 1;
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// Masks of the vertex subsets whose sets have a common generator,
/// including the empty subset, in increasing order.
fn nerve_faces(sets: &[&Vec<u64>], words: usize) -> Vec<u32> {
    fn extend(sets: &[&Vec<u64>], from: usize, mask: u32, common: &[u64], out: &mut Vec<u32>) {
        out.push(mask);
        for v in from..sets.len() {
            let next: Vec<u64> = common.iter().zip(sets[v].iter()).map(|(a, b)| a & b).collect();
            if next.iter().any(|&w| w != 0) {
                extend(sets, v + 1, mask | (1 << v), &next, out);
            }
        }
    }
    let mut out = Vec::new();
    extend(sets, 0, 0, &vec![u64::MAX; words], &mut out);
    out.sort_unstable();
    out
}

/// `dim H~^p` for `p = -1..` of the simplicial complex on `v` vertices
/// generated by the faces in `facets` (bit masks), entry `p + 1`.
fn reduced_cohomology<F: Field>(field: &F, v: usize, facets: &[u32]) -> Vec<usize> {
    let mut faces: HashSet<u32> = HashSet::new();
    for &m in facets {
        let mut sub = m;
        loop {
            faces.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & m;
        }
    }
    faces.insert(0);
    let mut by_size: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for f in faces {
        by_size.entry(f.count_ones() as usize).or_default().push(f);
    }
    for list in by_size.values_mut() {
        list.sort_unstable();
    }
    let empty = Vec::new();
    let level = |s: usize| by_size.get(&s).unwrap_or(&empty);
    // ranks[s] = rank of the boundary from faces of size s to size s - 1
    let mut ranks = vec![0usize; v + 2];
    for s in 1..=v {
        let rows_faces = level(s);
        let cols_faces = level(s - 1);
        if rows_faces.is_empty() {
            continue;
        }
        let index: HashMap<u32, usize> = cols_faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let matrix: Vec<Vec<F::Elem>> = rows_faces
            .iter()
            .map(|&face| {
                let mut row = vec![field.zero(); cols_faces.len()];
                let mut sign = true;
                for bit in 0..v {
                    if face & (1 << bit) != 0 {
                        let c = index[&(face & !(1 << bit))];
                        row[c] = if sign { field.one() } else { field.neg(&field.one()) };
                        sign = !sign;
                    }
                }
                row
            })
            .collect();
        ranks[s] = rank(field, matrix);
    }
    let mut dims: Vec<usize> =
        (0..=v).map(|s| level(s).len() - ranks[s] - ranks.get(s + 1).copied().unwrap_or(0)).collect();
    while dims.last() == Some(&0) {
        dims.pop();
    }
    dims
}

/// Default window for `I`: `[-(D+n+2), D+2]` where `D` bounds the twists
/// of Taylor resolutions of `in(I)`, `gin(I)` and the lex-ideal.
pub fn default_window(ideal: &Ideal, opts: &GinOptions) -> Result<Window> {
    let n = ideal.context().nvars();
    let model = monomial_model(ideal)?;
    let generic = gin(&ideal.as_poly(), opts)?;
    let (lex, _) = lex_from_series(ideal.context(), &hilbert_numerator(&model))?;
    Ok(window_for(n, &[&model, &generic, &lex]))
}

/// `[-(D+n+2), D+2]` with `D` the largest degree of an lcm of all
/// generators among `ideals`.
pub fn window_for(n: usize, ideals: &[&MonomialIdeal]) -> Window {
    let d = ideals.iter().map(|i| i.lcm_all().degree() as i64).max().unwrap_or(0);
    Window::around(d, n)
}

/// First `j` in the window violating
/// `Σ_k (-1)^k h^k_j = Hilb(R/I)_j - P(j)`.
pub fn serre_violation(table: &CohomologyTable, hilb: &HilbertSeries) -> Option<i64> {
    let p = hilb.polynomial();
    table.window().degrees().find(|&j| {
        let alt: i128 = (0..=table.nvars())
            .map(|k| if k % 2 == 0 { table.value(k, j) } else { -table.value(k, j) })
            .sum();
        alt != hilb.value(j) - p.eval(j)
    })
}

/// Serre's formula on the window; `Err(j)` names the first failing degree.
pub fn serre_check(table: &CohomologyTable, hilb: &HilbertSeries) -> std::result::Result<(), i64> {
    serre_violation(table, hilb).map_or(Ok(()), Err)
}

/// Per degree `j`, numbers `e_{0,j}, ..., e_{n+1,j} >= 0` with zero ends and
/// `B - A = e_k + e_{k+1}` in row `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CancellationWitness {
    pub window: Window,
    pub columns: Vec<Vec<i128>>,
}

impl CancellationWitness {
    /// `e_{k,j}`.
    pub fn get(&self, k: usize, j: i64) -> i128 {
        self.columns[(j - self.window.lo) as usize][k]
    }

    /// Re-checks the defining identities against the two tables.
    pub fn verify(&self, a: &CohomologyTable, b: &CohomologyTable) -> bool {
        self.window.degrees().zip(&self.columns).all(|(j, e)| {
            let n = a.nvars();
            e.len() == n + 2
                && e[0] == 0
                && e[n + 1] == 0
                && e.iter().all(|&x| x >= 0)
                && (0..=n).all(|k| b.value(k, j) - a.value(k, j) == e[k] + e[k + 1])
        })
    }
}

/// Solves `e_0 = 0`, `e_{k+1} = d_k - e_k` with `d = B - A` in every degree
/// of the window of `A`.
pub fn cancellation_witness(a: &CohomologyTable, b: &CohomologyTable) -> Result<CancellationWitness> {
    if a.nvars() != b.nvars() {
        return Err(Error::Arity { expected: a.nvars(), found: b.nvars() });
    }
    let n = a.nvars();
    let window = a.window();
    let mut columns = Vec::new();
    for j in window.degrees() {
        let mut e = vec![0i128; n + 2];
        for k in 0..=n {
            e[k + 1] = b.value(k, j) - a.value(k, j) - e[k];
            if e[k + 1] < 0 {
                return Err(Error::Infeasible(format!("degree {j}: e_{} = {} < 0", k + 1, e[k + 1])));
            }
        }
        if e[n + 1] != 0 {
            return Err(Error::Infeasible(format!("degree {j}: final term {} is nonzero", e[n + 1])));
        }
        columns.push(e);
    }
    Ok(CancellationWitness { window, columns })
}

/// The two `i`-sCM criteria for `R/I`: rows `k >= i` of the tables of
/// `R/I` and `R/gin(I)` agree, and (monomial `I` only)
/// `Hilb(U_k(R/I)) = Hilb(U_k(R/gin(I)))` for `k >= i`.
pub fn scm_criteria(ideal: &Ideal, i: usize, opts: &GinOptions) -> Result<(bool, Option<bool>)> {
    let n = ideal.context().nvars();
    let generic = gin(&ideal.as_poly(), opts)?;
    let window = window_for(n, &[&generic]);
    let own = cohomology_ext(ideal, window)?;
    let theirs = cohomology_ext_monomial(&generic, window)?;
    let by_rows = own.rows_equal_from(&theirs, i);
    let by_layers = match ideal {
        Ideal::Monomial(m) if m.is_unit() => Some(true),
        Ideal::Monomial(m) => {
            let mine = layer_hilbert(m)?;
            let other = layer_hilbert(&generic)?;
            let len = mine.len().max(other.len());
            let zero = HilbertSeries::new(Laurent::zero(), n);
            Some((i..len).all(|k| {
                mine.get(k).unwrap_or(&zero).reduced() == other.get(k).unwrap_or(&zero).reduced()
            }))
        }
        Ideal::Polynomial(_) => None,
    };
    Ok((by_rows, by_layers))
}

/// Whether `R/I` is `i`-sequentially Cohen–Macaulay. A disagreement
/// between the two criteria of [`scm_criteria`] is an internal error.
pub fn is_i_scm(ideal: &Ideal, i: usize, opts: &GinOptions) -> Result<bool> {
    let (by_rows, by_layers) = scm_criteria(ideal, i, opts)?;
    if let Some(by_layers) = by_layers {
        if by_layers != by_rows {
            return Err(Error::Internal(format!(
                "{i}-sCM criteria disagree for {ideal}: cohomology says {by_rows}, layers say {by_layers}"
            )));
        }
    }
    Ok(by_rows)
}

pub fn is_scm(ideal: &Ideal, opts: &GinOptions) -> Result<bool> {
    is_i_scm(ideal, 0, opts)
}

/// For critical `I`: `depth R/I = n - |G(I^lex)|`, with the depth read off
/// the cohomology table.
pub fn depth_formula_check(ideal: &MonomialIdeal) -> Result<bool> {
    if !is_critical(ideal)? {
        return Err(Error::Range(format!("{ideal} is not critical")));
    }
    let n = ideal.nvars();
    let (lex, _) = lex_from_series(ideal.context(), &hilbert_numerator(ideal))?;
    let table = cohomology_ext_monomial(ideal, window_for(n, &[ideal, &lex]))?;
    let (depth, _) = table.depth_and_dim()?;
    Ok(depth as i64 == n as i64 - lex.num_generators() as i64)
}
