//! Hilbert series, functions and polynomials of `R/I` for monomial `I`.

use std::fmt;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::series::{binomial, binomial_poly, Laurent, RationalSeries};

/// `Hilb(R/I) = numerator / (1-t)^n`, with the reduced form cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    n: usize,
    numerator: Laurent,
    reduced: RationalSeries,
}

impl HilbertSeries {
    pub fn new(numerator: Laurent, n: usize) -> Self {
        let reduced = RationalSeries::new(numerator.clone(), n).reduced();
        HilbertSeries { n, numerator, reduced }
    }

    pub fn numerator(&self) -> &Laurent {
        &self.numerator
    }

    pub fn denominator_exponent(&self) -> usize {
        self.n
    }

    /// Numerator and pole order after cancelling every factor `(1-t)`.
    pub fn reduced(&self) -> &RationalSeries {
        &self.reduced
    }

    pub fn as_rational(&self) -> RationalSeries {
        RationalSeries::new(self.numerator.clone(), self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Krull dimension; `-1` for the zero module.
    pub fn dimension(&self) -> i32 {
        if self.is_zero() {
            -1
        } else {
            self.reduced.den as i32
        }
    }

    pub fn multiplicity(&self) -> i128 {
        self.reduced.num.eval_at_one()
    }

    /// `dim_K (R/I)_j`.
    pub fn value(&self, j: i64) -> i128 {
        self.reduced.coeff(j)
    }

    pub fn values(&self, range: RangeInclusive<i64>) -> Vec<i128> {
        range.map(|j| self.value(j)).collect()
    }

    pub fn polynomial(&self) -> HilbertPolynomial {
        HilbertPolynomial::from_series(&self.reduced)
    }

    /// Smallest `d0 >= 0` with `Hilb_j = P(j)` for every `j >= d0`.
    pub fn agreement_degree(&self) -> i64 {
        let p = self.polynomial();
        let h = &self.reduced;
        let mut d0 = if h.num.is_zero() { 0 } else { (h.num.high() - h.den as i64 + 1).max(0) };
        while d0 > 0 && self.value(d0 - 1) == p.eval(d0 - 1) {
            d0 -= 1;
        }
        d0
    }
}

impl fmt::Debug for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (1-t)^{}", self.numerator, self.n)
    }
}

/// `P(j) = sum_i c_i C(j + i, i)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct HilbertPolynomial {
    coeffs: Vec<i128>,
}

impl HilbertPolynomial {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    /// Reads `P` off a reduced series `h(t) / (1-t)^d`: writing
    /// `h = sum_k e_k (1-t)^k`, the coefficient of `C(j+i, i)` is `e_{d-1-i}`.
    pub fn from_series(s: &RationalSeries) -> Self {
        let s = s.reduced();
        let d = s.den;
        if s.is_zero() || d == 0 {
            return Self::default();
        }
        let mut e = vec![0i128; d];
        for (m, hm) in s.num.terms() {
            assert!(m >= 0, "Hilbert numerators have no negative powers");
            for (k, ek) in e.iter_mut().enumerate() {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                *ek += sign * hm * binomial(m, k as i64);
            }
        }
        Self::new((0..d).map(|i| e[d - 1 - i]).collect())
    }

    /// Binomial-basis coefficients `c_0, c_1, ...`.
    pub fn coefficients(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i32 {
        self.coeffs.len() as i32 - 1
    }

    pub fn eval(&self, j: i64) -> i128 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * binomial_poly(j + i as i64, i as u32))
            .sum()
    }
}

impl fmt::Debug for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*C(j+{i},{i})")?;
            }
        }
        Ok(())
    }
}

/// Hilbert series of `R/I` by pivot splitting.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> HilbertSeries {
    HilbertSeries::new(numerator_of(ideal.generators().to_vec()), ideal.nvars())
}

/// `dim_K (R/I)_j` for `j` in `range`.
pub fn hilbert_function(ideal: &MonomialIdeal, range: RangeInclusive<i64>) -> Vec<i128> {
    hilbert_numerator(ideal).values(range)
}

pub fn hilbert_polynomial(ideal: &MonomialIdeal) -> HilbertPolynomial {
    hilbert_numerator(ideal).polynomial()
}

fn minimal(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| g.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// `N(I) = N(I + (p)) + t^deg(p) N(I : p)` with `p = X_i^a`, where `X_i`
/// occurs in the most generators and `a` is its least positive exponent.
fn numerator_of(gens: Vec<Monomial>) -> Laurent {
    if gens.iter().any(|g| g.is_one()) {
        return Laurent::zero();
    }
    let Some(first) = gens.first() else {
        return Laurent::one();
    };
    let n = first.nvars();
    let mut occurrences = [0usize; crate::monomial::MAX_VARS];
    let mut min_exp = [u32::MAX; crate::monomial::MAX_VARS];
    for g in &gens {
        for i in g.support() {
            occurrences[i] += 1;
            min_exp[i] = min_exp[i].min(g.exp(i));
        }
    }
    let pivot_var = (0..n).filter(|&i| occurrences[i] >= 2).max_by_key(|&i| occurrences[i]);
    let Some(i) = pivot_var else {
        // pairwise coprime
        return gens.iter().fold(Laurent::one(), |acc, g| {
            acc.mul(&Laurent::one().sub(&Laurent::monomial(g.degree() as i64, 1)))
        });
    };
    let a = min_exp[i];
    let p = Monomial::pure_power(n, i, a);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(i) < a).copied().collect();
    plus.push(p);
    let colon = minimal(
        gens.iter()
            .map(|g| g.with_exp(i, g.exp(i).saturating_sub(a)))
            .collect(),
    );
    numerator_of(plus).add(&numerator_of(colon).shift(a as i64))
}
