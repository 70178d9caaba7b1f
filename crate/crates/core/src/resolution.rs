//! Graded free resolutions of `R/J`: the Taylor complex of a monomial ideal
//! and Schreyer resolutions of arbitrary homogeneous ideals.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::{with_field, Field};
use crate::gb::{schreyer_sort, Engine, FreeModule, Vector};
use crate::groebner::{generators_in, ideal_basis, BASIS_CAP};
use crate::ideal::MonomialIdeal;
use crate::linalg::rank;
use crate::monomial::{monomials_of_degree, Monomial, TermOrder};
use crate::poly::{axpy, mul_terms, Polynomial, Terms};
use crate::polyideal::PolyIdeal;
use crate::ring::RingContext;
use crate::series::Laurent;

/// Largest generator count accepted by [`taylor_resolution`].
pub const TAYLOR_CAP: usize = 12;

/// A sparse matrix of polynomials stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, Polynomial)>>,
}

impl PolyMatrix {
    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    /// Nonzero entries `(row, entry)` of column `c`.
    pub fn column(&self, c: usize) -> &[(usize, Polynomial)] {
        &self.columns[c]
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<&Polynomial> {
        self.columns[c].iter().find(|e| e.0 == r).map(|e| &e.1)
    }
}

/// `0 <- F_0 <- F_1 <- ... <- F_L <- 0` with `F_k = ⊕ R(-a)` for the
/// twists `a` in `degrees[k]`; `maps[k-1]` is `d_k : F_k -> F_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeResolution {
    ctx: RingContext,
    degrees: Vec<Vec<i32>>,
    maps: Vec<PolyMatrix>,
}

impl FreeResolution {
    pub fn context(&self) -> RingContext {
        self.ctx
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.len()).collect()
    }

    /// Twists of `F_k`; empty beyond the length.
    pub fn degrees(&self, k: usize) -> &[i32] {
        self.degrees.get(k).map_or(&[], |d| d.as_slice())
    }

    /// `d_k` for `1 <= k <= length`.
    pub fn map(&self, k: usize) -> &PolyMatrix {
        &self.maps[k - 1]
    }

    /// `sum_k (-1)^k sum_a t^a`, the numerator of `Hilb(R/J)`.
    pub fn alternating_numerator(&self) -> Laurent {
        let mut out = Laurent::zero();
        for (k, ds) in self.degrees.iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            for d in ds {
                out = out.add(&Laurent::monomial(*d as i64, sign));
            }
        }
        out
    }

    /// Every entry of `d_k` in row `r`, column `c` is homogeneous of degree
    /// `a_{k,c} - a_{k-1,r}`.
    pub fn check_degrees(&self) -> Result<()> {
        for (k, m) in self.maps.iter().enumerate() {
            for c in 0..m.ncols() {
                for (r, p) in m.column(c) {
                    let want = self.degrees[k + 1][c] - self.degrees[k][*r];
                    if !p.is_homogeneous() || p.degree().map(|d| d as i32) != Some(want) {
                        return Err(Error::Internal(format!(
                            "entry ({r},{c}) of d_{} has the wrong degree",
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `d_k ∘ d_{k+1} = 0` for every `k`.
    pub fn check_composition(&self) -> Result<()> {
        for k in 1..self.maps.len() {
            let (a, b) = (&self.maps[k - 1], &self.maps[k]);
            for c in 0..b.ncols() {
                let mut acc: HashMap<usize, Polynomial> = HashMap::new();
                for (mid, q) in b.column(c) {
                    for (r, p) in a.column(*mid) {
                        let term = p.mul(q)?;
                        let slot = acc.entry(*r).or_insert_with(|| Polynomial::zero(self.ctx));
                        *slot = slot.add(&term)?;
                    }
                }
                if acc.values().any(|p| !p.is_zero()) {
                    return Err(Error::Internal(format!("d_{k} ∘ d_{} is nonzero", k + 1)));
                }
            }
        }
        Ok(())
    }

    /// `dim_K H_k(F)_degree` for `k = 0..=length`; exactness means these
    /// are `(Hilb(R/J)_degree, 0, ..., 0)`.
    pub fn homology_dims(&self, degree: i32) -> Result<Vec<usize>> {
        with_field!(self.ctx.field(), |f| {
            let len = self.length();
            let dims: Vec<usize> = (0..=len).map(|k| self.slice_basis(k, degree).len()).collect();
            let mut ranks = vec![0usize; len + 2];
            for k in 1..=len {
                ranks[k] = rank(&f, self.slice_matrix(&f, k, degree)?);
            }
            Ok((0..=len).map(|k| dims[k] - ranks[k] - ranks[k + 1]).collect())
        })
    }

    fn slice_basis(&self, k: usize, degree: i32) -> Vec<(usize, Monomial)> {
        let n = self.ctx.nvars();
        let mut out = Vec::new();
        for (b, a) in self.degrees(k).iter().enumerate() {
            if degree >= *a {
                out.extend(monomials_of_degree(n, (degree - a) as u32).into_iter().map(|m| (b, m)));
            }
        }
        out
    }

    /// Rows: images of the degree-`degree` basis of `F_k` in `F_{k-1}`.
    fn slice_matrix<F: Field>(&self, field: &F, k: usize, degree: i32) -> Result<Vec<Vec<F::Elem>>> {
        let target: HashMap<(usize, Monomial), usize> = self
            .slice_basis(k - 1, degree)
            .into_iter()
            .enumerate()
            .map(|(i, key)| (key, i))
            .collect();
        let d = self.map(k);
        let mut rows = Vec::new();
        for (b, m) in self.slice_basis(k, degree) {
            let mut row = vec![field.zero(); target.len()];
            for (r, p) in d.column(b) {
                for (t, c) in p.to_field(field)? {
                    let idx = target[&(*r, t.mul(&m))];
                    row[idx] = field.add(&row[idx], &c);
                }
            }
            rows.push(row);
        }
        Ok(rows)
    }
}

/// The Taylor complex on the minimal generators.
pub fn taylor_resolution(ideal: &MonomialIdeal) -> Result<FreeResolution> {
    taylor_resolution_capped(ideal, TAYLOR_CAP)
}

pub fn taylor_resolution_capped(ideal: &MonomialIdeal, cap: usize) -> Result<FreeResolution> {
    let ctx = ideal.context();
    let gens = ideal.generators();
    let s = gens.len();
    if s > cap {
        return Err(Error::Cap(format!("Taylor complex on {s} generators exceeds the cap {cap}")));
    }
    if ideal.is_unit() {
        return Ok(FreeResolution { ctx, degrees: vec![vec![0], vec![0]], maps: vec![unit_map(ctx)] });
    }
    let n = ctx.nvars();
    let lcm_of = |mask: u32| {
        (0..s)
            .filter(|i| mask >> i & 1 == 1)
            .fold(Monomial::one(n), |acc, i| acc.lcm(&gens[i]))
    };
    let mut levels: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for mask in 0u32..(1 << s) {
        levels[mask.count_ones() as usize].push(mask);
    }
    let index: Vec<HashMap<u32, usize>> = levels
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, m)| (*m, i)).collect())
        .collect();
    let lcms: HashMap<u32, Monomial> = (0u32..(1 << s)).map(|m| (m, lcm_of(m))).collect();
    let degrees: Vec<Vec<i32>> =
        levels.iter().map(|l| l.iter().map(|m| lcms[m].degree() as i32).collect()).collect();
    let mut maps = Vec::with_capacity(s);
    for k in 1..=s {
        let columns = levels[k]
            .iter()
            .map(|&mask| {
                let mut col = Vec::with_capacity(k);
                for (pos, i) in (0..s).filter(|i| mask >> i & 1 == 1).enumerate() {
                    let face = mask & !(1 << i);
                    let coeff = lcms[&mask].div(&lcms[&face]).expect("lcm of a face divides");
                    let mut p = Polynomial::monomial(ctx, coeff);
                    if pos % 2 == 1 {
                        p = p.scale(&num_rational::BigRational::from_integer((-1).into()))?;
                    }
                    col.push((index[k - 1][&face], p));
                }
                col.sort_by_key(|e| e.0);
                Ok(col)
            })
            .collect::<Result<Vec<_>>>()?;
        maps.push(PolyMatrix { rows: levels[k - 1].len(), columns });
    }
    Ok(FreeResolution { ctx, degrees, maps })
}

fn unit_map(ctx: RingContext) -> PolyMatrix {
    PolyMatrix { rows: 1, columns: vec![vec![(0, Polynomial::monomial(ctx, Monomial::one(ctx.nvars())))]] }
}

/// A sparse polynomial matrix over a concrete field, stored by columns.
struct FieldMatrix<E> {
    rows: usize,
    cols: Vec<Vec<(usize, Terms<E>)>>,
}

impl<E: Clone> FieldMatrix<E> {
    fn from_vectors(rows: usize, cols: &[Vector<E>]) -> Self {
        let cols = cols
            .iter()
            .map(|v| {
                let mut by_row: BTreeMap<usize, Terms<E>> = BTreeMap::new();
                for (p, m, c) in v {
                    by_row.entry(*p as usize).or_default().push((*m, c.clone()));
                }
                by_row.into_iter().collect()
            })
            .collect();
        FieldMatrix { rows, cols }
    }

    fn remove_row(&mut self, a: usize) {
        for col in &mut self.cols {
            col.retain(|e| e.0 != a);
            for e in col.iter_mut() {
                if e.0 > a {
                    e.0 -= 1;
                }
            }
        }
        self.rows -= 1;
    }

    fn to_poly<F: Field<Elem = E>>(&self, ctx: RingContext, field: &F) -> PolyMatrix {
        let columns = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(r, t)| (*r, Polynomial::from_field(ctx, field, t))).collect())
            .collect();
        PolyMatrix { rows: self.rows, columns }
    }
}

/// Splits off trivial complexes `0 -> R(-a) -> R(-a) -> 0` wherever a
/// differential has a nonzero constant entry.
fn prune<F: Field>(field: &F, degrees: &mut Vec<Vec<i32>>, maps: &mut Vec<FieldMatrix<F::Elem>>) {
    let ord = TermOrder::DegRevLex;
    loop {
        let mut found = None;
        'search: for (k, d) in maps.iter().enumerate() {
            for (b, col) in d.cols.iter().enumerate() {
                for (a, t) in col {
                    if t.len() == 1 && t[0].0.is_one() {
                        found = Some((k, *a, b, t[0].1.clone()));
                        break 'search;
                    }
                }
            }
        }
        let Some((k, a, b, c)) = found else { break };
        let inv = field.neg(&field.inv(&c).expect("nonzero constant"));
        let pivot = maps[k].cols[b].clone();
        for b2 in 0..maps[k].cols.len() {
            if b2 == b {
                continue;
            }
            let Some(x) = maps[k].cols[b2].iter().find(|e| e.0 == a).map(|e| e.1.clone()) else {
                continue;
            };
            let factor: Terms<F::Elem> = x.iter().map(|(m, v)| (*m, field.mul(v, &inv))).collect();
            let mut merged: BTreeMap<usize, Terms<F::Elem>> = maps[k].cols[b2].iter().cloned().collect();
            for (r, p) in &pivot {
                let add = mul_terms(field, ord, &factor, p);
                let slot = merged.entry(*r).or_default();
                *slot = axpy(field, ord, slot, &field.one(), &add);
            }
            maps[k].cols[b2] = merged.into_iter().filter(|(_, t)| !t.is_empty()).collect();
        }
        maps[k].cols.remove(b);
        maps[k].remove_row(a);
        degrees[k + 1].remove(b);
        degrees[k].remove(a);
        if k + 1 < maps.len() {
            maps[k + 1].remove_row(b);
        }
        if k >= 1 {
            maps[k - 1].cols.remove(a);
        }
    }
    while degrees.len() > 1 && degrees.last().is_some_and(|d| d.is_empty()) {
        degrees.pop();
        maps.pop();
    }
}

/// Minimal free resolution of `R/J` up to homological degree `length`,
/// obtained by pruning a Schreyer resolution.
pub fn schreyer_resolution(j: &PolyIdeal, length: usize) -> Result<FreeResolution> {
    let ctx = j.context();
    let n = ctx.nvars();
    with_field!(ctx.field(), |f| {
        let basis = ideal_basis(&f, n, TermOrder::DegRevLex, &generators_in(&f, j)?)?;
        let mut degrees = vec![vec![0]];
        let mut maps: Vec<FieldMatrix<_>> = Vec::new();
        if basis.is_empty() || length == 0 {
            return Ok(FreeResolution { ctx, degrees, maps: Vec::new() });
        }
        if basis[0][0].1.is_one() {
            return Ok(FreeResolution { ctx, degrees: vec![vec![0], vec![0]], maps: vec![unit_map(ctx)] });
        }
        let mut module = FreeModule::top(n, vec![0], TermOrder::DegRevLex);
        let mut gens = basis;
        // one extra step so that pruning sees the map leaving F_length
        for level in 1..=length + 1 {
            let next = module.schreyer(&gens);
            degrees.push(next.shifts.clone());
            maps.push(FieldMatrix::from_vectors(module.rank(), &gens));
            if level == length + 1 {
                break;
            }
            let mut syz = Engine::with_basis(&f, &module, gens).syzygies()?;
            if syz.is_empty() {
                break;
            }
            if syz.len() > BASIS_CAP {
                return Err(Error::Cap(format!("syzygy module needs more than {BASIS_CAP} generators")));
            }
            schreyer_sort(&mut syz);
            module = next;
            gens = syz;
        }
        prune(&f, &mut degrees, &mut maps);
        degrees.truncate(length + 1);
        maps.truncate(length);
        let maps = maps.iter().map(|m| m.to_poly(ctx, &f)).collect();
        Ok(FreeResolution { ctx, degrees, maps })
    })
}
