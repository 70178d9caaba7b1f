//! Gröbner bases of graded submodules of free modules `⊕ R(-a_i)`.
//!
//! All inputs are homogeneous, so the computation proceeds degree by degree;
//! reduction works on dense coefficient vectors of one degree slice at a
//! time. An ideal is the rank one case.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{monomials_of_degree, Monomial, TermOrder};

/// One term `c * m * e_pos`.
pub(crate) type Term<E> = (u32, Monomial, E);
/// Terms sorted descending in the module order, no zero coefficients.
pub(crate) type Vector<E> = Vec<Term<E>>;

/// A graded free module with a monomial order of Schreyer type:
/// `m e_i > m' e_j` iff `m λ_i > m' λ_j` in the base order, or equality and
/// `path_i` is lexicographically smaller than `path_j`.
///
/// With every `λ_i = 1` and `path_i = [i]` this is term-over-position.
#[derive(Clone, Debug)]
pub(crate) struct FreeModule {
    pub n: usize,
    pub shifts: Vec<i32>,
    base: TermOrder,
    lambda: Vec<Monomial>,
    path: Vec<Vec<u32>>,
}

impl FreeModule {
    /// Term-over-position order on `⊕ R(-shifts_i)`.
    pub fn top(n: usize, shifts: Vec<i32>, base: TermOrder) -> Self {
        let r = shifts.len();
        FreeModule {
            n,
            shifts,
            base,
            lambda: vec![Monomial::one(n); r],
            path: (0..r as u32).map(|i| vec![i]).collect(),
        }
    }

    /// Order induced by the leading terms of `gens`, elements of `self`.
    pub fn schreyer<E>(&self, gens: &[Vector<E>]) -> Self {
        let mut shifts = Vec::with_capacity(gens.len());
        let mut lambda = Vec::with_capacity(gens.len());
        let mut path = Vec::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            let (p, m, _) = &g[0];
            shifts.push(m.degree() as i32 + self.shifts[*p as usize]);
            lambda.push(m.mul(&self.lambda[*p as usize]));
            let mut pa = self.path[*p as usize].clone();
            pa.push(i as u32);
            path.push(pa);
        }
        FreeModule { n: self.n, shifts, base: self.base, lambda, path }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn cmp(&self, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
        let la = a.1.mul(&self.lambda[a.0 as usize]);
        let lb = b.1.mul(&self.lambda[b.0 as usize]);
        self.base
            .cmp(&la, &lb)
            .then_with(|| self.path[b.0 as usize].cmp(&self.path[a.0 as usize]))
    }

    pub fn degree_of(&self, pos: u32, m: &Monomial) -> i32 {
        m.degree() as i32 + self.shifts[pos as usize]
    }

    pub fn sort<E>(&self, v: &mut Vector<E>) {
        v.sort_by(|x, y| self.cmp((y.0, &y.1), (x.0, &x.1)));
    }
}

/// Basis `(pos, m)` of one degree slice, sorted descending.
struct Slice {
    basis: Vec<(u32, Monomial)>,
    index: HashMap<(u32, Monomial), usize>,
}

impl Slice {
    fn new(module: &FreeModule, degree: i32) -> Self {
        let mut basis = Vec::new();
        for (p, s) in module.shifts.iter().enumerate() {
            let d = degree - s;
            if d >= 0 {
                basis.extend(monomials_of_degree(module.n, d as u32).into_iter().map(|m| (p as u32, m)));
            }
        }
        basis.sort_by(|x, y| module.cmp((y.0, &y.1), (x.0, &x.1)));
        let index = basis.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        Slice { basis, index }
    }
}

/// A monic basis element with its leading term and degree.
#[derive(Clone, Debug)]
pub(crate) struct Element<E> {
    pub vec: Vector<E>,
    pub degree: i32,
}

impl<E> Element<E> {
    pub fn lead(&self) -> (u32, &Monomial) {
        (self.vec[0].0, &self.vec[0].1)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: i32,
}

/// Gröbner basis workspace over one free module.
pub(crate) struct Engine<'a, F: Field> {
    pub field: &'a F,
    pub module: &'a FreeModule,
    slices: HashMap<i32, Rc<Slice>>,
    pub basis: Vec<Element<F::Elem>>,
    /// Basis indices grouped by leading position.
    by_pos: Vec<Vec<usize>>,
}

impl<'a, F: Field> Engine<'a, F> {
    pub fn new(field: &'a F, module: &'a FreeModule) -> Self {
        Engine {
            field,
            module,
            slices: HashMap::new(),
            basis: Vec::new(),
            by_pos: vec![Vec::new(); module.rank()],
        }
    }

    /// Engine whose basis is a known Gröbner basis (monic leading terms).
    pub fn with_basis(field: &'a F, module: &'a FreeModule, basis: Vec<Vector<F::Elem>>) -> Self {
        let mut e = Self::new(field, module);
        for mut v in basis {
            e.monic(&mut v);
            let degree = e.vector_degree(&v);
            e.by_pos[v[0].0 as usize].push(e.basis.len());
            e.basis.push(Element { vec: v, degree });
        }
        e
    }

    fn slice(&mut self, degree: i32) -> Rc<Slice> {
        let module = self.module;
        self.slices.entry(degree).or_insert_with(|| Rc::new(Slice::new(module, degree))).clone()
    }

    fn vector_degree(&self, v: &Vector<F::Elem>) -> i32 {
        self.module.degree_of(v[0].0, &v[0].1)
    }

    fn add_scaled(
        &self,
        slice: &Slice,
        dense: &mut [F::Elem],
        c: &F::Elem,
        q: &Monomial,
        v: &Vector<F::Elem>,
    ) {
        for (p, m, a) in v {
            let k = slice.index[&(*p, m.mul(q))];
            dense[k] = self.field.add(&dense[k], &self.field.mul(c, a));
        }
    }

    fn find_reducer(&self, pos: u32, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        self.by_pos[pos as usize]
            .iter()
            .copied()
            .find(|&r| Some(r) != skip && self.basis[r].vec[0].1.divides(m))
    }

    /// Full reduction of a dense slice vector, starting at index `from`.
    /// Returns the list `(basis index, multiplier, coefficient)` of the
    /// subtracted multiples when `track` is set.
    fn reduce_dense(
        &self,
        slice: &Slice,
        dense: &mut [F::Elem],
        from: usize,
        skip: Option<usize>,
        mut track: Option<&mut Vec<(usize, Monomial, F::Elem)>>,
    ) {
        for k in from..dense.len() {
            if self.field.is_zero(&dense[k]) {
                continue;
            }
            let (pos, m) = &slice.basis[k];
            let Some(r) = self.find_reducer(*pos, m, skip) else { continue };
            let c = dense[k].clone();
            let q = m.div(&self.basis[r].vec[0].1).expect("reducer divides");
            self.add_scaled(slice, dense, &self.field.neg(&c), &q, &self.basis[r].vec);
            if let Some(t) = track.as_deref_mut() {
                t.push((r, q, c));
            }
        }
    }

    fn to_dense(&self, slice: &Slice, v: &Vector<F::Elem>) -> Vec<F::Elem> {
        let mut dense = vec![self.field.zero(); slice.basis.len()];
        for (p, m, c) in v {
            let k = slice.index[&(*p, *m)];
            dense[k] = self.field.add(&dense[k], c);
        }
        dense
    }

    fn from_dense(&self, slice: &Slice, dense: &[F::Elem]) -> Vector<F::Elem> {
        dense
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(k, c)| (slice.basis[k].0, slice.basis[k].1, c.clone()))
            .collect()
    }

    fn monic(&self, v: &mut Vector<F::Elem>) {
        let inv = self.field.inv(&v[0].2).expect("leading coefficient is nonzero");
        for t in v.iter_mut() {
            t.2 = self.field.mul(&t.2, &inv);
        }
    }

    fn coprime_applies(&self) -> bool {
        self.module.rank() == 1
    }

    /// Gebauer–Möller update after appending basis element `h`.
    fn update(&mut self, pairs: &mut Vec<Pair>, h: usize) {
        let (hp, hm) = {
            let (p, m) = self.basis[h].lead();
            (p, *m)
        };
        let hdeg = self.basis[h].degree;
        let cands: Vec<(usize, Monomial, bool)> = self.by_pos[hp as usize]
            .iter()
            .filter(|&&i| i != h)
            .map(|&i| {
                let m = &self.basis[i].vec[0].1;
                (i, m.lcm(&hm), self.coprime_applies() && m.is_coprime(&hm))
            })
            .collect();
        // drop old pairs whose lcm is a proper multiple in the chain sense
        pairs.retain(|p| {
            if self.basis[p.i].vec[0].0 != hp || !hm.divides(&p.lcm) {
                return true;
            }
            let li = self.basis[p.i].vec[0].1.lcm(&hm);
            let lj = self.basis[p.j].vec[0].1.lcm(&hm);
            li == p.lcm || lj == p.lcm
        });
        // among new pairs keep those whose lcm is not a multiple of another's
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, (i, l, coprime)) in cands.iter().enumerate() {
            let dominated = cands.iter().enumerate().any(|(k2, (_, l2, _))| {
                k2 != k && l2.divides(l) && (l2 != l || k2 < k)
            });
            if !dominated || *coprime {
                kept.push((*i, *l, *coprime));
            }
        }
        // a coprime pair with the same lcm certifies the others
        let coprime_lcms: Vec<Monomial> = kept.iter().filter(|c| c.2).map(|c| c.1).collect();
        for (i, l, coprime) in kept {
            if coprime || coprime_lcms.contains(&l) {
                continue;
            }
            let degree = self.module.degree_of(hp, &l);
            debug_assert!(degree > hdeg || degree == hdeg);
            pairs.push(Pair { i, j: h, lcm: l, degree });
        }
    }

    fn insert(&mut self, mut v: Vector<F::Elem>, pairs: &mut Vec<Pair>) -> usize {
        self.monic(&mut v);
        let degree = self.vector_degree(&v);
        let idx = self.basis.len();
        self.by_pos[v[0].0 as usize].push(idx);
        self.basis.push(Element { vec: v, degree });
        self.update(pairs, idx);
        idx
    }

    fn spoly_dense(&mut self, pair: &Pair) -> (Rc<Slice>, Vec<F::Elem>) {
        let slice = self.slice(pair.degree);
        let mut dense = vec![self.field.zero(); slice.basis.len()];
        let one = self.field.one();
        let qi = pair.lcm.div(&self.basis[pair.i].vec[0].1).expect("lcm");
        let qj = pair.lcm.div(&self.basis[pair.j].vec[0].1).expect("lcm");
        self.add_scaled(&slice, &mut dense, &one, &qi, &self.basis[pair.i].vec);
        self.add_scaled(&slice, &mut dense, &self.field.neg(&one), &qj, &self.basis[pair.j].vec);
        (slice, dense)
    }

    /// Extends the basis to a reduced Gröbner basis of the submodule
    /// generated by the current basis and `gens`.
    pub fn run(&mut self, gens: Vec<Vector<F::Elem>>, cap: usize) -> Result<()> {
        let mut inputs: BTreeMap<i32, Vec<Vector<F::Elem>>> = BTreeMap::new();
        for g in gens.into_iter().filter(|g| !g.is_empty()) {
            let d = self.vector_degree(&g);
            inputs.entry(d).or_default().push(g);
        }
        let mut pairs: Vec<Pair> = Vec::new();
        loop {
            let next_pair = pairs.iter().map(|p| p.degree).min();
            let next_input = inputs.keys().next().copied();
            let d = match (next_pair, next_input) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            let first_new = self.basis.len();
            let mut batch: Vec<Pair> = Vec::new();
            pairs.retain(|p| {
                if p.degree == d {
                    batch.push(p.clone());
                    false
                } else {
                    true
                }
            });
            batch.sort_by(|a, b| (a.i, a.j).cmp(&(b.i, b.j)));
            let slice = self.slice(d);
            let mut work: Vec<Vec<F::Elem>> = Vec::new();
            for p in &batch {
                work.push(self.spoly_dense(p).1);
            }
            for g in inputs.remove(&d).unwrap_or_default() {
                work.push(self.to_dense(&slice, &g));
            }
            for mut dense in work {
                self.reduce_dense(&slice, &mut dense, 0, None, None);
                let v = self.from_dense(&slice, &dense);
                if !v.is_empty() {
                    self.insert(v, &mut pairs);
                    if self.basis.len() > cap {
                        return Err(Error::Cap(format!("Gröbner basis exceeds {cap} elements")));
                    }
                }
            }
            // inter-reduce the elements of degree d
            for k in first_new..self.basis.len() {
                let mut dense = self.to_dense(&slice, &self.basis[k].vec);
                self.reduce_dense(&slice, &mut dense, 0, Some(k), None);
                self.basis[k].vec = self.from_dense(&slice, &dense);
            }
        }
        Ok(())
    }

    /// Generators of the syzygies of the basis, by Schreyer's theorem: a
    /// Gröbner basis for the order `self.module.schreyer(basis)`.
    pub fn syzygies(&mut self) -> Result<Vec<Vector<F::Elem>>> {
        let next = self.module.schreyer(&self.basis.iter().map(|e| e.vec.clone()).collect::<Vec<_>>());
        let mut out = Vec::new();
        for i in 0..self.basis.len() {
            let (pi, mi) = {
                let (p, m) = self.basis[i].lead();
                (p, *m)
            };
            // minimal multipliers lcm / lm_i over partners j > i
            let mut cands: Vec<(Monomial, usize)> = ((i + 1)..self.basis.len())
                .filter(|&j| self.basis[j].vec[0].0 == pi)
                .map(|j| (self.basis[j].vec[0].1.lcm(&mi).div(&mi).expect("lcm"), j))
                .collect();
            cands.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then(a.1.cmp(&b.1)));
            let mut chosen: Vec<(Monomial, usize)> = Vec::new();
            for (q, j) in cands {
                if !chosen.iter().any(|(c, _)| c.divides(&q)) {
                    chosen.push((q, j));
                }
            }
            for (_, j) in chosen {
                let lcm = mi.lcm(&self.basis[j].vec[0].1);
                let pair = Pair { i, j, lcm, degree: self.module.degree_of(pi, &lcm) };
                let (slice, mut dense) = self.spoly_dense(&pair);
                let mut track = Vec::new();
                self.reduce_dense(&slice, &mut dense, 0, None, Some(&mut track));
                if dense.iter().any(|c| !self.field.is_zero(c)) {
                    return Err(Error::Internal("S-vector of a Gröbner basis does not reduce to zero".into()));
                }
                let one = self.field.one();
                let qi = lcm.div(&mi).expect("lcm");
                let qj = lcm.div(&self.basis[j].vec[0].1).expect("lcm");
                let mut terms: HashMap<(u32, Monomial), F::Elem> = HashMap::new();
                let mut push = |p: u32, m: Monomial, c: F::Elem| {
                    let e = terms.entry((p, m)).or_insert_with(|| self.field.zero());
                    *e = self.field.add(e, &c);
                };
                push(i as u32, qi, one.clone());
                push(j as u32, qj, self.field.neg(&one));
                for (r, q, c) in track {
                    push(r as u32, q, self.field.neg(&c));
                }
                let mut v: Vector<F::Elem> = terms
                    .into_iter()
                    .filter(|(_, c)| !self.field.is_zero(c))
                    .map(|((p, m), c)| (p, m, c))
                    .collect();
                next.sort(&mut v);
                out.push(v);
            }
        }
        Ok(out)
    }

    /// Leading monomials grouped by position.
    pub fn leading_monomials(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.module.rank()];
        for e in &self.basis {
            out[e.vec[0].0 as usize].push(e.vec[0].1);
        }
        out
    }
}

/// Sorts a Gröbner basis so that, within a position, leading monomials
/// decrease in lex order; this keeps Schreyer resolutions within length `n`.
pub(crate) fn schreyer_sort<E>(basis: &mut [Vector<E>]) {
    basis.sort_by(|a, b| {
        a[0].0.cmp(&b[0].0).then_with(|| crate::monomial::cmp_lex(&b[0].1, &a[0].1))
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn ideal_basis_adds_cubic() {
        // (X1^2 - X2^2, X1 X2) gains X2^3
        let f = PrimeField::new(32003).unwrap();
        let module = FreeModule::top(2, vec![0], TermOrder::DegRevLex);
        let mut e = Engine::new(&f, &module);
        let g1 = vec![(0, m(&[2, 0]), 1), (0, m(&[0, 2]), 32002)];
        let g2 = vec![(0, m(&[1, 1]), 1)];
        e.run(vec![g1, g2], 1000).unwrap();
        let mut leads: Vec<Monomial> = e.leading_monomials()[0].clone();
        leads.sort();
        let mut expected = vec![m(&[1, 1]), m(&[2, 0]), m(&[0, 3])];
        expected.sort();
        assert_eq!(leads, expected);
        let syz = e.syzygies().unwrap();
        assert_eq!(syz.len(), 2);
    }
}
