//! Macaulay representations, Gotzmann numbers and lex-ideals.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{hilbert_numerator, HilbertPolynomial, HilbertSeries};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::series::{binomial_poly, monomial_count};

fn big_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// The `d`-th Macaulay representation `a = C(k_d, d) + ... + C(k_e, e)` with
/// `k_d > k_{d-1} > ... > k_e >= e >= 1`, as pairs `(k_i, i)`.
pub fn macaulay_rep(a: &BigUint, d: u32) -> Result<Vec<(u64, u32)>> {
    if d == 0 {
        return Err(Error::Range("Macaulay representation needs d >= 1".into()));
    }
    let mut rest = a.clone();
    let mut out = Vec::new();
    let mut i = d as u64;
    while !rest.is_zero() && i >= 1 {
        // largest k with C(k, i) <= rest
        let mut hi = i;
        while big_binomial(hi, i) <= rest {
            hi *= 2;
        }
        let mut lo = i;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if big_binomial(mid, i) <= rest {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        rest -= big_binomial(lo, i);
        out.push((lo, i as u32));
        i -= 1;
    }
    Ok(out)
}

/// `a^<d>`: the largest possible `Hilb_{d+1}` given `Hilb_d = a`.
pub fn growth_bound(a: &BigUint, d: u32) -> Result<BigUint> {
    Ok(macaulay_rep(a, d)?
        .into_iter()
        .map(|(k, i)| big_binomial(k + 1, i as u64 + 1))
        .sum())
}

/// [`growth_bound`] on native integers.
pub fn growth_bound_i128(a: i128, d: u32) -> Result<i128> {
    let a = BigUint::try_from(a).map_err(|_| Error::Range(format!("negative value {a}")))?;
    growth_bound(&a, d)?
        .to_i128()
        .ok_or_else(|| Error::Range("growth bound exceeds 128 bits".into()))
}

const GOTZMANN_TERM_CAP: usize = 10_000_000;

/// Number of terms `s` in `P(j) = sum_{i=1..s} C(j + a_i - i + 1, a_i)`.
pub fn gotzmann_number(p: &HilbertPolynomial) -> Result<usize> {
    let deg = p.degree().max(0) as usize;
    // values of the remainder at j = 0..=deg determine it
    let mut values: Vec<i128> = (0..=deg as i64).map(|j| p.eval(j)).collect();
    let mut s = 0usize;
    loop {
        let Some((a, lead)) = degree_and_top_difference(&values) else {
            return Ok(s);
        };
        if lead <= 0 {
            return Err(Error::NotRealizable(format!("{p} is not a Hilbert polynomial")));
        }
        if a == 0 {
            return Ok(s + lead as usize);
        }
        s += 1;
        if s > GOTZMANN_TERM_CAP {
            return Err(Error::Cap(format!("Gotzmann representation of {p} exceeds {GOTZMANN_TERM_CAP} terms")));
        }
        for (j, v) in values.iter_mut().enumerate() {
            *v -= binomial_poly(j as i64 + a as i64 - s as i64 + 1, a);
        }
    }
}

/// Degree and top finite difference of a polynomial given by its values at
/// `0..len`; `None` for the zero polynomial.
fn degree_and_top_difference(values: &[i128]) -> Option<(u32, i128)> {
    let mut diffs = values.to_vec();
    let mut tops = Vec::with_capacity(values.len());
    while !diffs.is_empty() {
        tops.push(diffs[0]);
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
    }
    let a = tops.iter().rposition(|t| *t != 0)?;
    Some((a as u32, tops[a]))
}

/// The monomial of degree `d` in `n` variables at 0-based position `k` of
/// the descending lex order.
pub fn lex_unrank(n: usize, d: u32, mut k: i128) -> Monomial {
    let mut exps = vec![0u32; n];
    let mut rest = d;
    for i in 0..n {
        if i == n - 1 {
            exps[i] = rest;
            break;
        }
        for e in (0..=rest).rev() {
            let count = monomial_count(n - i - 1, (rest - e) as i64);
            if k < count {
                exps[i] = e;
                rest -= e;
                break;
            }
            k -= count;
        }
    }
    Monomial::new(&exps).expect("degree within bounds")
}

/// Evidence that the lex construction stopped late enough.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LexCertificate {
    pub gotzmann_number: usize,
    pub agreement_degree: i64,
    /// Last degree examined; no generator may appear here.
    pub stop_degree: i64,
    /// `Hilb_{D-1}`, `Hilb_D` and the Macaulay bound on `Hilb_D`.
    pub previous_value: i128,
    pub final_value: i128,
    pub final_bound: i128,
}

/// The lex-ideal with the Hilbert function of `R/I`.
pub fn lex_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    Ok(lex_ideal_certified(ideal)?.0)
}

pub fn lex_ideal_certified(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, LexCertificate)> {
    lex_from_series(ideal.context(), &hilbert_numerator(ideal))
}

/// Lex-ideal with a prescribed Hilbert series of `R/L`.
pub fn lex_from_series(
    ctx: crate::ring::RingContext,
    series: &HilbertSeries,
) -> Result<(MonomialIdeal, LexCertificate)> {
    let n = ctx.nvars();
    let trivial = |l: MonomialIdeal| {
        let c = LexCertificate {
            gotzmann_number: 0,
            agreement_degree: 0,
            stop_degree: 0,
            previous_value: 0,
            final_value: 0,
            final_bound: 0,
        };
        Ok((l, c))
    };
    if series.value(0) == 0 {
        return trivial(MonomialIdeal::unit(ctx));
    }
    if series.numerator() == &crate::series::Laurent::one() {
        return trivial(MonomialIdeal::zero(ctx));
    }
    let gotz = gotzmann_number(&series.polynomial())?;
    let d0 = series.agreement_degree();
    let stop = gotz.max(d0 as usize) as i64 + 1;
    let mut gens = Vec::new();
    let mut cert = None;
    for d in 1..=stop {
        let hf = series.value(d);
        let target = monomial_count(n, d) - hf;
        let (spanned, bound) = if d == 1 {
            (0, n as i128)
        } else {
            let bound = growth_bound_i128(series.value(d - 1), d as u32 - 1)?;
            (monomial_count(n, d) - bound, bound)
        };
        if target < spanned {
            return Err(Error::Internal(format!(
                "Hilbert function grows from {} to {hf} in degree {d}, beyond the Macaulay bound {bound}",
                series.value(d - 1)
            )));
        }
        if d == stop {
            if target != spanned {
                return Err(Error::Internal(format!("lex construction needs generators in degree {d}")));
            }
            cert = Some(LexCertificate {
                gotzmann_number: gotz,
                agreement_degree: d0,
                stop_degree: stop,
                previous_value: series.value(d - 1),
                final_value: hf,
                final_bound: bound,
            });
        }
        for k in spanned..target {
            gens.push(lex_unrank(n, d as u32, k));
        }
    }
    let lex = MonomialIdeal::new(ctx, gens)?;
    Ok((lex, cert.expect("loop reaches the stop degree")))
}

/// A lex-ideal with at most `n` minimal generators.
pub fn is_universal_lex(lex: &MonomialIdeal) -> Result<bool> {
    if !lex.is_lex_segment() {
        return Err(Error::Range(format!("{lex} is not a lex-ideal")));
    }
    Ok(lex.num_generators() <= lex.nvars())
}

/// Whether the Hilbert function of `R/I` is that of a universal lex-ideal.
pub fn is_critical(ideal: &MonomialIdeal) -> Result<bool> {
    is_universal_lex(&lex_ideal(ideal)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_function;
    use crate::ideal::tests::ideal;
    use crate::monomial::monomials_of_degree;

    fn big(a: u64) -> BigUint {
        BigUint::from(a)
    }

    #[test]
    fn macaulay_examples() {
        assert_eq!(macaulay_rep(&big(4), 2).unwrap(), vec![(3, 2), (1, 1)]);
        assert_eq!(growth_bound(&big(4), 2).unwrap(), big(5));
        assert!(macaulay_rep(&big(0), 3).unwrap().is_empty());
        assert_eq!(growth_bound(&big(0), 3).unwrap(), big(0));
        assert_eq!(macaulay_rep(&big(10), 3).unwrap(), vec![(5, 3)]);
        assert_eq!(growth_bound(&big(10), 3).unwrap(), big(15));
        assert!(macaulay_rep(&big(1), 0).is_err());
    }

    /// Largest `Hilb_{d+1}` over all monomial quotients of `K[X1,X2,X3]`
    /// with `Hilb_d = a`, found by enumerating order ideals of degree `d`
    /// monomials.
    #[test]
    fn growth_bound_is_attained_in_three_variables() {
        let d = 2u32;
        let mons = monomials_of_degree(3, d);
        let up = monomials_of_degree(3, d + 1);
        let mut best = vec![0usize; mons.len() + 1];
        for mask in 0u32..(1 << mons.len()) {
            let standard: Vec<&Monomial> =
                (0..mons.len()).filter(|i| mask >> i & 1 == 1).map(|i| &mons[i]).collect();
            // standard monomials of degree d+1 all of whose degree-d divisors are standard
            let next = up
                .iter()
                .filter(|u| mons.iter().filter(|m| m.divides(u)).all(|m| standard.contains(&m)))
                .count();
            let a = standard.len();
            best[a] = best[a].max(next);
        }
        for (a, b) in best.iter().enumerate() {
            assert_eq!(growth_bound(&big(a as u64), d).unwrap(), big(*b as u64), "a = {a}");
        }
    }

    #[test]
    fn gotzmann_examples() {
        assert_eq!(gotzmann_number(&HilbertPolynomial::new(vec![2])).unwrap(), 2);
        assert_eq!(gotzmann_number(&HilbertPolynomial::new(vec![0, 1])).unwrap(), 1);
        assert_eq!(gotzmann_number(&HilbertPolynomial::default()).unwrap(), 0);
        // twisted cubic: 3j + 1 = C(j+1,1) + C(j,1) + C(j-1,1) + 3 constants
        assert_eq!(gotzmann_number(&HilbertPolynomial::new(vec![-2, 3])).unwrap(), 4);
        assert!(gotzmann_number(&HilbertPolynomial::new(vec![-1])).is_err());
        assert!(gotzmann_number(&HilbertPolynomial::new(vec![0, -1])).is_err());
    }

    #[test]
    fn unranking_matches_enumeration() {
        for n in 1..5 {
            for d in 0..5 {
                let all = monomials_of_degree(n, d);
                for (k, m) in all.iter().enumerate() {
                    assert_eq!(&lex_unrank(n, d, k as i128), m);
                }
            }
        }
    }

    #[test]
    fn lex_examples() {
        assert_eq!(lex_ideal(&ideal(2, &[&[1, 1]])).unwrap(), ideal(2, &[&[2, 0]]));
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(lex_ideal(&i).unwrap(), i);
        assert!(lex_ideal(&ideal(3, &[])).unwrap().is_zero());
        assert!(lex_ideal(&ideal(3, &[&[0, 0, 0]])).unwrap().is_unit());
        let (_, cert) = lex_ideal_certified(&ideal(2, &[&[1, 1]])).unwrap();
        assert!(cert.final_value <= cert.final_bound);
        assert_eq!(cert.final_value, cert.final_bound);
    }

    #[test]
    fn lex_preserves_hilbert_function() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 2, 2], &[1, 0, 3], &[0, 0, 5]]);
        let (l, cert) = lex_ideal_certified(&i).unwrap();
        assert!(l.is_lex_segment());
        let top = cert.stop_degree + 3;
        assert_eq!(hilbert_function(&l, 0..=top), hilbert_function(&i, 0..=top));
        assert_eq!(lex_ideal(&l).unwrap(), l);
    }

    #[test]
    fn universality_examples() {
        assert!(is_universal_lex(&ideal(3, &[&[1, 0, 0], &[0, 3, 0]])).unwrap());
        assert!(is_critical(&ideal(2, &[&[1, 1]])).unwrap());
        assert!(!is_universal_lex(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap());
        assert!(is_universal_lex(&ideal(2, &[&[1, 1]])).is_err());
    }
}
