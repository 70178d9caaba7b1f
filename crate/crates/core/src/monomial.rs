//! Exponent-vector monomials and the two term orders used throughout.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 16;

/// A monomial `X1^a1 * ... * Xn^an`.
///
/// Exponents are stored in a fixed array; positions `>= n` are always zero.
/// Arithmetic is overflow-checked and panics on overflow (exponents are
/// bounded by 255).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    n: u8,
    deg: u16,
}

impl Monomial {
    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&n), "variable count {n} out of range");
        Monomial { exps: [0; MAX_VARS], n: n as u8, deg: 0 }
    }

    /// The variable `X_{i+1}` (0-based index `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        assert!(i < n, "variable index {i} out of range for {n} variables");
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn new(exps: &[u32]) -> Result<Self> {
        let n = exps.len();
        if n == 0 || n > MAX_VARS {
            return Err(Error::InvalidRing(format!("{n} variables (supported: 1..={MAX_VARS})")));
        }
        let mut m = Self::one(n);
        let mut deg = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u8::try_from(e).map_err(|_| Error::ExponentOverflow)?;
            deg += e;
        }
        m.deg = u16::try_from(deg).map_err(|_| Error::ExponentOverflow)?;
        Ok(m)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.n as usize]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Replaces the exponent of variable `i`.
    pub fn with_exp(&self, i: usize, e: u32) -> Self {
        let mut m = *self;
        let e8 = u8::try_from(e).expect("exponent overflow");
        m.deg = m.deg - m.exps[i] as u16 + e8 as u16;
        m.exps[i] = e8;
        m
    }

    #[inline]
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut m = *self;
        for i in 0..self.n as usize {
            m.exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        m.deg = self.deg.checked_add(other.deg).expect("degree overflow");
        m
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        if self.deg > other.deg {
            return false;
        }
        (0..self.n as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let mut m = *self;
        for i in 0..self.n as usize {
            m.exps[i] -= other.exps[i];
        }
        m.deg -= other.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut m = *self;
        let mut deg = 0u16;
        for i in 0..self.n as usize {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            deg += m.exps[i] as u16;
        }
        m.deg = deg;
        m
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut m = *self;
        let mut deg = 0u16;
        for i in 0..self.n as usize {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            deg += m.exps[i] as u16;
        }
        m.deg = deg;
        m
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        (0..self.n as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n as usize).filter(move |&i| self.exps[i] > 0)
    }

    /// 0-based index of the last variable dividing the monomial.
    pub fn last_var(&self) -> Option<usize> {
        (0..self.n as usize).rev().find(|&i| self.exps[i] > 0)
    }

    /// The largest `k` such that `X_k` divides the monomial (1-based); `0`
    /// for the monomial `1`.
    pub fn m_index(&self) -> usize {
        self.last_var().map_or(0, |i| i + 1)
    }

    /// Drops all variables past the first `j`; `None` if one of them occurs.
    pub fn restrict(&self, j: usize) -> Option<Self> {
        assert!(j >= 1 && j <= self.n as usize);
        if (j..self.n as usize).any(|i| self.exps[i] > 0) {
            return None;
        }
        let mut m = *self;
        m.n = j as u8;
        Some(m)
    }

    /// Embeds into a ring with `n >= self.nvars()` variables.
    pub fn extend(&self, n: usize) -> Self {
        assert!(n >= self.n as usize && n <= MAX_VARS);
        let mut m = *self;
        m.n = n as u8;
        m
    }

    /// Pure power `X_i^e` in `n` variables.
    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        Self::one(n).with_exp(i, e)
    }

    /// Number of variables with positive exponent.
    pub fn support_size(&self) -> usize {
        self.support().count()
    }

    /// Applies a permutation of variables: exponent of `i` moves to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut m = Self::one(self.n as usize);
        for i in 0..self.n as usize {
            m.exps[perm[i]] = self.exps[i];
        }
        m.deg = self.deg;
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..self.n as usize {
            let e = self.exps[i];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "X{}", i + 1)?;
            } else {
                write!(f, "X{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Degree-reverse-lexicographic comparison with `X1 > X2 > ... > Xn`.
#[inline]
pub fn cmp_degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.deg.cmp(&b.deg) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.n as usize).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable wins
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// Pure lexicographic comparison with `X1 > X2 > ... > Xn`.
#[inline]
pub fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    a.exps[..a.n as usize].cmp(&b.exps[..b.n as usize])
}

/// Monomials are ordered canonically by degrevlex.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| cmp_degrevlex(self, other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    Lex,
    #[default]
    DegRevLex,
}

impl TermOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::Arity { expected: a.nvars(), found: b.nvars() });
        }
        Ok(self.cmp(a, b))
    }

    #[inline]
    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => cmp_lex(a, b),
            TermOrder::DegRevLex => cmp_degrevlex(a, b),
        }
    }
}

/// All monomials of degree `d` in `n` variables, in descending lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(i: usize, rest: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if i == n - 1 {
            exps[i] = rest;
            out.push(Monomial::new(exps).expect("degree within bounds"));
            return;
        }
        for e in (0..=rest).rev() {
            exps[i] = e;
            rec(i + 1, rest - e, exps, out);
        }
        exps[i] = 0;
    }
    rec(0, d, &mut exps, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn degrevlex_degree_two_in_three_vars() {
        // by definition: X1^2 > X1X2 > X2^2 > X1X3 > X2X3 > X3^2
        let mut all = monomials_of_degree(3, 2);
        all.sort_by(|a, b| cmp_degrevlex(b, a));
        let shown: Vec<String> = all.iter().map(|u| u.to_string()).collect();
        assert_eq!(shown, ["X1^2", "X1*X2", "X2^2", "X1*X3", "X2*X3", "X3^2"]);
        assert_eq!(
            TermOrder::DegRevLex.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn lex_variables() {
        assert_eq!(TermOrder::Lex.compare(&m(&[1, 0]), &m(&[0, 1])).unwrap(), Ordering::Greater);
        let u = m(&[2, 1, 3]);
        for o in [TermOrder::Lex, TermOrder::DegRevLex] {
            assert_eq!(o.compare(&u, &u).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn compare_rejects_mismatched_arity() {
        assert!(TermOrder::Lex.compare(&m(&[1, 0]), &m(&[1, 0, 0])).is_err());
    }

    #[test]
    fn m_index_examples() {
        assert_eq!(m(&[2, 0, 1]).m_index(), 3);
        assert_eq!(m(&[0, 5, 0, 0]).m_index(), 2);
        assert_eq!(Monomial::one(3).m_index(), 0);
    }

    #[test]
    fn lex_enumeration_is_descending() {
        let all = monomials_of_degree(3, 3);
        assert_eq!(all.len(), 10);
        assert!(all.windows(2).all(|w| cmp_lex(&w[0], &w[1]) == Ordering::Greater));
    }

    #[test]
    fn arithmetic() {
        let a = m(&[1, 2, 0]);
        let b = m(&[0, 1, 3]);
        assert_eq!(a.lcm(&b), m(&[1, 2, 3]));
        assert_eq!(a.gcd(&b), m(&[0, 1, 0]));
        assert_eq!(a.mul(&b).div(&b), Some(a));
        assert!(!a.divides(&b));
        assert_eq!(a.restrict(2), Some(m(&[1, 2])));
        assert_eq!(b.restrict(2), None);
    }
}
