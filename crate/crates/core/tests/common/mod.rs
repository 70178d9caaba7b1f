//! Strategies and independent oracles shared by the integration tests.
//!
//! The oracles here use only plain enumeration and their own Gaussian
//! elimination modulo a prime; they do not call into the library's
//! resolution, Hilbert series or cohomology code.

#![allow(dead_code)]

use lexcoh::corpus::weakly_stable_closure;
use lexcoh::monomial::monomials_of_degree;
use lexcoh::{Ideal, Monomial, MonomialIdeal, PolyIdeal, Polynomial, RingContext};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use proptest::prelude::*;

pub const P: u64 = 32003;

pub fn ctx(n: usize) -> RingContext {
    RingContext::with_vars(n).unwrap()
}

pub fn mono(n: usize, exps: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(ctx(n), exps).unwrap()
}

pub fn ideal_of(n: usize, text: &str) -> Ideal {
    let c = ctx(n);
    Ideal::from_generators(c, lexcoh::parse::parse_generators(c, text).unwrap()).unwrap()
}

fn exponents(n: usize, max_degree: u32) -> impl Strategy<Value = Vec<u32>> {
    (1..=max_degree).prop_flat_map(move |d| {
        proptest::collection::vec(0..=d, n - 1).prop_map(move |cuts| {
            // a composition of d into n parts from sorted cut points
            let mut cuts = cuts;
            cuts.sort_unstable();
            let mut out = Vec::with_capacity(n);
            let mut prev = 0;
            for c in cuts {
                out.push(c - prev);
                prev = c;
            }
            out.push(d - prev);
            out
        })
    })
}

/// Random monomial ideals with `2 <= n <= max_n`.
pub fn monomial_ideal(max_n: usize, max_degree: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(exponents(n, max_degree), 1..=max_gens).prop_map(move |gens| {
            MonomialIdeal::minimalize(ctx(n), gens.iter().map(|e| Monomial::new(e).unwrap()))
        })
    })
}

/// Weak-stability closures of random monomial ideals, capped in size.
pub fn weakly_stable_ideal(max_n: usize, max_degree: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    monomial_ideal(max_n, max_degree, max_gens)
        .prop_map(|i| weakly_stable_closure(&i))
        .prop_filter("closure too large", move |i| i.num_generators() <= 2 * max_gens)
}

/// Homogeneous ideals with two- or three-term generators.
pub fn sparse_ideal(max_n: usize, max_degree: u32, max_gens: usize) -> impl Strategy<Value = PolyIdeal> {
    (2..=max_n).prop_flat_map(move |n| {
        let term = (exponents(n, max_degree), -20i64..=20).prop_filter("zero coefficient", |(_, c)| *c != 0);
        let poly = (1..=max_degree, proptest::collection::vec(term, 2..=3)).prop_map(move |(d, terms)| {
            // rescale each exponent vector to degree d by padding the last variable
            terms
                .into_iter()
                .map(|(e, c)| {
                    let mut e = e;
                    let s: u32 = e.iter().sum();
                    if s > d {
                        e = vec![0; n];
                        e[0] = d;
                    } else {
                        e[n - 1] += d - s;
                    }
                    (e, c)
                })
                .collect::<Vec<_>>()
        });
        proptest::collection::vec(poly, 1..=max_gens.min(n)).prop_filter_map("zero generators", move |polys| {
            let c = ctx(n);
            let gens: Vec<Polynomial> = polys
                .into_iter()
                .filter_map(|terms| {
                    let p = Polynomial::from_terms(
                        c,
                        terms.into_iter().map(|(e, k)| {
                            (Monomial::new(&e).unwrap(), BigRational::from_integer(BigInt::from(k)))
                        }),
                    )
                    .ok()?;
                    (!p.is_zero()).then_some(p)
                })
                .collect();
            if gens.is_empty() {
                return None;
            }
            PolyIdeal::new(c, gens).ok()
        })
    })
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut e, mut b) = (1u64, p - 2, a % p);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn rational_mod(q: &BigRational, p: u64) -> u64 {
    let reduce = |x: &BigInt| -> u64 {
        let m = x.mod_floor(&BigInt::from(p));
        m.to_u64().unwrap()
    };
    let num = reduce(q.numer());
    let den = reduce(&q.denom().abs());
    let v = num * inv_mod(den, p) % p;
    if q.denom().is_negative() {
        (p - v) % p
    } else {
        v
    }
}

/// Rank of a dense matrix modulo `p`.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][c], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for k in c..cols {
                    let sub = f * rows[rank][k] % p;
                    rows[r][k] = (rows[r][k] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim_K Ext^s(R/I, R)_a` from the dual Taylor complex, one
/// multidegree at a time.
pub fn ext_dim(ideal: &MonomialIdeal, s: usize, a: i64) -> usize {
    let n = ideal.nvars();
    let gens = ideal.generators();
    let r = gens.len();
    if ideal.is_unit() {
        return 0;
    }
    if r == 0 {
        // R itself: Ext^0 = R
        return if s == 0 && a >= 0 { count_monomials(n, a) } else { 0 };
    }
    let lcm: Vec<Vec<i64>> = (0..1usize << r)
        .map(|mask| {
            (0..n).map(|i| (0..r).filter(|k| mask >> k & 1 == 1).map(|k| gens[k].exp(i) as i64).max().unwrap_or(0)).collect()
        })
        .collect();
    let top: Vec<i64> = (0..n).map(|i| gens.iter().map(|g| g.exp(i) as i64).max().unwrap()).collect();
    let total_top: i64 = top.iter().sum();
    let lo: Vec<i64> = top.iter().map(|m| -m).collect();
    let hi: Vec<i64> = top.iter().map(|m| a + total_top - m).collect();
    let mut total = 0usize;
    let mut alpha = lo.clone();
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return 0;
    }
    loop {
        if alpha.iter().sum::<i64>() == a {
            total += ext_dim_at(&alpha, &lcm, r, s);
        }
        let mut i = 0;
        loop {
            if i == n {
                return total;
            }
            if alpha[i] < hi[i] {
                alpha[i] += 1;
                break;
            }
            alpha[i] = lo[i];
            i += 1;
        }
    }
}

fn count_monomials(n: usize, d: i64) -> usize {
    monomials_of_degree(n, d as u32).len()
}

fn ext_dim_at(alpha: &[i64], lcm: &[Vec<i64>], r: usize, s: usize) -> usize {
    let basis = |size: usize| -> Vec<usize> {
        (0..1usize << r)
            .filter(|m| m.count_ones() as usize == size && lcm[*m].iter().zip(alpha).all(|(l, a)| l + a >= 0))
            .collect()
    };
    let coboundary_rank = |from: usize| -> usize {
        // d^*: F_from^* -> F_{from+1}^*
        if from + 1 > r {
            return 0;
        }
        let src = basis(from);
        let dst = basis(from + 1);
        if src.is_empty() || dst.is_empty() {
            return 0;
        }
        let rows: Vec<Vec<u64>> = src
            .iter()
            .map(|&tau| {
                dst.iter()
                    .map(|&sigma| {
                        if sigma & tau != tau {
                            return 0;
                        }
                        let k = (sigma ^ tau).trailing_zeros();
                        let pos = (sigma & ((1 << k) - 1)).count_ones();
                        if pos % 2 == 0 {
                            1
                        } else {
                            P - 1
                        }
                    })
                    .collect()
            })
            .collect();
        rank_mod_p(rows, P)
    };
    if s > r {
        return 0;
    }
    let here = basis(s).len();
    let outgoing = coboundary_rank(s);
    let incoming = if s == 0 { 0 } else { coboundary_rank(s - 1) };
    here - outgoing - incoming
}

/// `h^k(R/I)_j` through local duality from [`ext_dim`].
pub fn local_cohomology_dim(ideal: &MonomialIdeal, k: usize, j: i64) -> usize {
    let n = ideal.nvars();
    ext_dim(ideal, n - k, -j - n as i64)
}

/// `dim_K (R/I)_d` by counting standard monomials.
pub fn standard_monomials(ideal: &MonomialIdeal, d: u32) -> usize {
    monomials_of_degree(ideal.nvars(), d).into_iter().filter(|m| !ideal.contains(m)).count()
}

/// `dim_K (R/J)_d` from the rank of the degree `d` multiples of the
/// generators modulo `P`.
pub fn quotient_dim(j: &PolyIdeal, d: u32) -> usize {
    let n = j.nvars();
    let basis = monomials_of_degree(n, d);
    let index: std::collections::HashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = Vec::new();
    for g in j.generators() {
        let Some(e) = g.degree() else { continue };
        if e > d {
            continue;
        }
        for m in monomials_of_degree(n, d - e) {
            let mut row = vec![0u64; basis.len()];
            for (t, c) in g.terms() {
                row[index[&t.mul(&m)]] = rational_mod(c, P);
            }
            rows.push(row);
        }
    }
    basis.len() - if rows.is_empty() { 0 } else { rank_mod_p(rows, P) }
}

/// Property-test settings with a fixed seed, so every run draws the same
/// cases.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: proptest::test_runner::RngSeed::Fixed(20261018),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}
