//! Integer Laurent polynomials and rational functions `p(t) / (1-t)^k`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Binomial coefficient `C(n, k)` for `n >= 0`, exact in `i128`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as i128).expect("binomial overflow") / (i + 1) as i128;
    }
    acc
}

/// Generalized binomial `x (x-1) ... (x-k+1) / k!` for any integer `x`.
pub fn binomial_poly(x: i64, k: u32) -> i128 {
    let mut acc: i128 = 1;
    for i in 0..k as i64 {
        acc = acc.checked_mul((x - i) as i128).expect("binomial overflow") / (i + 1) as i128;
    }
    acc
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: i64) -> i128 {
    if d < 0 {
        0
    } else if n == 0 {
        (d == 0) as i128
    } else {
        binomial(d + n as i64 - 1, n as i64 - 1)
    }
}

/// `sum_i coeffs[i] t^(low + i)`; trailing and leading zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<i128>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(e: i64, c: i128) -> Self {
        Laurent { low: e, coeffs: vec![c] }.trimmed()
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<i128>) -> Self {
        Laurent { low, coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| **c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent with nonzero coefficient.
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> i128 {
        if e < self.low {
            return 0;
        }
        self.coeffs.get((e - self.low) as usize).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i128)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(move |(i, c)| (self.low + i as i64, *c))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let coeffs = (low..=high).map(|e| self.coeff(e) + other.coeff(e)).collect();
        Laurent { low, coeffs }.trimmed()
    }

    pub fn neg(&self) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: i128) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }.trimmed()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a.checked_mul(*b).expect("series overflow");
            }
        }
        Laurent { low: self.low + other.low, coeffs }.trimmed()
    }

    /// Multiplication by `t^s`.
    pub fn shift(&self, s: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Laurent { low: self.low + s, coeffs: self.coeffs.clone() }
    }

    /// Multiplication by `(1 - t)^k`.
    pub fn mul_one_minus_t_pow(&self, k: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..k {
            out = out.sub(&out.shift(1));
        }
        out
    }

    pub fn eval_at_one(&self) -> i128 {
        self.coeffs.iter().sum()
    }

    /// Exact division by `(1 - t)`; `None` when `p(1) != 0`.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.eval_at_one() != 0 {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // p = (1 - t) q  =>  q_i = sum_{k <= i} p_k
        let mut acc = 0i128;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            acc += c;
            coeffs.push(acc);
        }
        Some(Laurent { low: self.low, coeffs }.trimmed())
    }

    /// `t^h p(1/t)` where `h = high + low`, i.e. the coefficient list reversed
    /// in place.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Laurent { low: self.low, coeffs }
    }

    /// Substitution `t -> 1/t`.
    pub fn invert_variable(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Laurent { low: -self.high(), coeffs }
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (e, abs) {
                (0, a) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, a) => write!(f, "{a}*t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, a) => write!(f, "{a}*t^{e}")?,
            }
        }
        Ok(())
    }
}

/// A rational function `num(t) / (1 - t)^den` with integer numerator.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalSeries {
    pub num: Laurent,
    pub den: usize,
}

impl RationalSeries {
    pub fn new(num: Laurent, den: usize) -> Self {
        RationalSeries { num, den }
    }

    pub fn zero() -> Self {
        RationalSeries { num: Laurent::zero(), den: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cancels all common factors `(1 - t)`.
    pub fn reduced(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let mut num = self.num.clone();
        let mut den = self.den;
        while den > 0 {
            match num.div_one_minus_t() {
                Some(q) => {
                    num = q;
                    den -= 1;
                }
                None => break,
            }
        }
        RationalSeries { num, den }
    }

    /// Same function written over `(1 - t)^k`, `k >= den`.
    pub fn with_den(&self, k: usize) -> Self {
        assert!(k >= self.den);
        RationalSeries { num: self.num.mul_one_minus_t_pow(k - self.den), den: k }
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.den.max(other.den);
        RationalSeries { num: self.with_den(k).num.add(&other.with_den(k).num), den: k }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalSeries { num: self.num.neg(), den: self.den }
    }

    pub fn shift(&self, s: i64) -> Self {
        RationalSeries { num: self.num.shift(s), den: self.den }
    }

    /// Coefficient of `t^e` in the expansion in ascending powers of `t`.
    pub fn coeff(&self, e: i64) -> i128 {
        if self.den == 0 {
            return self.num.coeff(e);
        }
        let k = self.den as i64;
        self.num
            .terms()
            .filter(|(m, _)| *m <= e)
            .map(|(m, c)| c * binomial(e - m + k - 1, k - 1))
            .sum()
    }

    /// Equality as rational functions.
    pub fn same_function(&self, other: &Self) -> bool {
        let k = self.den.max(other.den);
        self.with_den(k).num == other.with_den(k).num
    }
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (1-t)^{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial_poly(-1, 2), 1);
        assert_eq!(binomial_poly(-3, 3), -10);
        assert_eq!(monomial_count(3, 2), 6);
        assert_eq!(monomial_count(2, -1), 0);
    }

    #[test]
    fn division_by_one_minus_t() {
        // 1 - t^3 = (1 - t)(1 + t + t^2)
        let p = Laurent::from_coeffs(0, vec![1, 0, 0, -1]);
        assert_eq!(p.div_one_minus_t().unwrap(), Laurent::from_coeffs(0, vec![1, 1, 1]));
        assert!(Laurent::one().div_one_minus_t().is_none());
    }

    #[test]
    fn expansion() {
        // 1/(1-t)^2 = sum (j+1) t^j
        let s = RationalSeries::new(Laurent::one(), 2);
        assert_eq!((0..4).map(|e| s.coeff(e)).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        let r = RationalSeries::new(Laurent::from_coeffs(0, vec![1, 0, -1]), 2).reduced();
        assert_eq!(r, RationalSeries::new(Laurent::from_coeffs(0, vec![1, 1]), 1));
    }
}
