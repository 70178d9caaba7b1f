//! Polynomials with exact coefficients and linear changes of coordinates.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{format_rational, rational_is_negative, Field, FieldKind, PrimeField, Rationals};
use crate::monomial::{Monomial, TermOrder};
use crate::ring::RingContext;

/// Sorted (descending) list of terms with nonzero coefficients.
pub(crate) type Terms<E> = Vec<(Monomial, E)>;

/// Merges `a + c*b` (both sorted descending in `ord`).
pub(crate) fn axpy<F: Field>(
    field: &F,
    ord: TermOrder,
    a: &[(Monomial, F::Elem)],
    c: &F::Elem,
    b: &[(Monomial, F::Elem)],
) -> Terms<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ord.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0, field.mul(c, &b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let s = field.add(&a[i].1, &field.mul(c, &b[j].1));
                if !field.is_zero(&s) {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        out.push((t.0, field.mul(c, &t.1)));
    }
    out
}

/// Collects arbitrary (monomial, coefficient) pairs into sorted terms.
pub(crate) fn collect_terms<F: Field>(
    field: &F,
    ord: TermOrder,
    items: impl IntoIterator<Item = (Monomial, F::Elem)>,
) -> Terms<F::Elem> {
    let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
    for (m, c) in items {
        match acc.get_mut(&m) {
            Some(v) => *v = field.add(v, &c),
            None => {
                acc.insert(m, c);
            }
        }
    }
    let mut out: Terms<F::Elem> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
    out.sort_by(|x, y| ord.cmp(&y.0, &x.0));
    out
}

pub(crate) fn mul_terms<F: Field>(
    field: &F,
    ord: TermOrder,
    a: &[(Monomial, F::Elem)],
    b: &[(Monomial, F::Elem)],
) -> Terms<F::Elem> {
    collect_terms(
        field,
        ord,
        a.iter()
            .flat_map(|(ma, ca)| b.iter().map(move |(mb, cb)| (ma.mul(mb), field.mul(ca, cb)))),
    )
}

/// Substitutes `X_i -> images[i]` (each image a polynomial in `target_n`
/// variables) into `f`.
pub(crate) fn substitute<F: Field>(
    field: &F,
    ord: TermOrder,
    f: &[(Monomial, F::Elem)],
    images: &[Terms<F::Elem>],
    target_n: usize,
) -> Terms<F::Elem> {
    // cache powers of each image
    let mut powers: Vec<Vec<Terms<F::Elem>>> = images
        .iter()
        .map(|_| vec![vec![(Monomial::one(target_n), field.one())]])
        .collect();
    let mut out: Vec<(Monomial, F::Elem)> = Vec::new();
    for (m, c) in f {
        let mut acc: Terms<F::Elem> = vec![(Monomial::one(target_n), c.clone())];
        for (i, img) in images.iter().enumerate() {
            let e = m.exp(i) as usize;
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e {
                let next = mul_terms(field, ord, powers[i].last().unwrap(), img);
                powers[i].push(next);
            }
            acc = mul_terms(field, ord, &acc, &powers[i][e]);
        }
        out.extend(acc);
    }
    collect_terms(field, ord, out)
}

/// A polynomial in a [`RingContext`].
///
/// Coefficients are canonical rational representatives of field elements
/// (symmetric residues over `F_p`). Terms are sorted by descending degrevlex
/// and never zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: RingContext,
    terms: Vec<(Monomial, BigRational)>,
}

impl Polynomial {
    pub fn zero(ctx: RingContext) -> Self {
        Polynomial { ctx, terms: Vec::new() }
    }

    pub fn monomial(ctx: RingContext, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ctx.nvars());
        Polynomial { ctx, terms: vec![(m, BigRational::one())] }
    }

    pub fn var(ctx: RingContext, i: usize) -> Self {
        Self::monomial(ctx, Monomial::var(ctx.nvars(), i))
    }

    /// Builds a polynomial from arbitrary terms, combining and normalizing
    /// coefficients in the context field.
    pub fn from_terms(
        ctx: RingContext,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Result<Self> {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in terms {
            if m.nvars() != ctx.nvars() {
                return Err(Error::Arity { expected: ctx.nvars(), found: m.nvars() });
            }
            *acc.entry(m).or_insert_with(BigRational::zero) += c;
        }
        let mut out = Vec::with_capacity(acc.len());
        for (m, c) in acc {
            let c = ctx.field().normalize(&c)?;
            if !c.is_zero() {
                out.push((m, c));
            }
        }
        out.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(Polynomial { ctx, terms: out })
    }

    pub fn context(&self) -> RingContext {
        self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading monomial in degrevlex.
    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(u, _)| u.degree() == m.degree()),
        }
    }

    /// Common degree of all terms, when homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            Some(self.terms[0].0.degree())
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Self::from_terms(self.ctx, self.terms.iter().chain(other.terms.iter()).cloned())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Self::from_terms(
            self.ctx,
            self.terms.iter().cloned().chain(other.terms.iter().map(|(m, c)| (*m, -c))),
        )
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let prod = self
            .terms
            .iter()
            .flat_map(|(a, ca)| other.terms.iter().map(move |(b, cb)| (a.mul(b), ca * cb)));
        Self::from_terms(self.ctx, prod)
    }

    pub fn scale(&self, c: &BigRational) -> Result<Self> {
        Self::from_terms(self.ctx, self.terms.iter().map(|(m, a)| (*m, a * c)))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ctx.nvars() != other.ctx.nvars() {
            return Err(Error::Arity { expected: self.ctx.nvars(), found: other.ctx.nvars() });
        }
        Ok(())
    }

    /// Substitutes every variable by the corresponding linear form of `g`.
    pub fn apply_change(&self, g: &LinearChange) -> Result<Self> {
        if g.ctx.nvars() != self.ctx.nvars() {
            return Err(Error::Arity { expected: self.ctx.nvars(), found: g.ctx.nvars() });
        }
        let n = self.ctx.nvars();
        let images: Vec<Vec<(Monomial, BigRational)>> = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| !g.matrix[i][j].is_zero())
                    .map(|j| (Monomial::var(n, j), g.matrix[i][j].clone()))
                    .collect()
            })
            .collect();
        self.substitute(&images, self.ctx)
    }

    /// The map `X_i -> X_i` (`i < n`), `X_n -> a_1 X_1 + ... + a_{n-1} X_{n-1}`
    /// into the ring in the first `n - 1` variables.
    pub fn specialize_last(&self, coeffs: &[BigRational]) -> Result<Self> {
        let n = self.ctx.nvars();
        if n < 2 {
            return Err(Error::Range("specialization needs at least two variables".into()));
        }
        if coeffs.len() != n - 1 {
            return Err(Error::Arity { expected: n - 1, found: coeffs.len() });
        }
        let target = self.ctx.prefix(n - 1)?;
        let mut images: Vec<Vec<(Monomial, BigRational)>> =
            (0..n - 1).map(|i| vec![(Monomial::var(n - 1, i), BigRational::one())]).collect();
        images.push(
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (Monomial::var(n - 1, j), c.clone()))
                .collect(),
        );
        self.substitute(&images, target)
    }

    fn substitute(
        &self,
        images: &[Vec<(Monomial, BigRational)>],
        target: RingContext,
    ) -> Result<Self> {
        fn run<F: Field>(
            field: F,
            f: &Polynomial,
            images: &[Vec<(Monomial, BigRational)>],
            target: RingContext,
        ) -> Result<Polynomial> {
            let src = f.to_field(&field)?;
            let imgs = images
                .iter()
                .map(|img| {
                    let t: Result<Vec<_>> = img
                        .iter()
                        .map(|(m, c)| {
                            field
                                .from_rational(c)
                                .map(|e| (*m, e))
                                .ok_or_else(|| Error::BadCoefficient(c.to_string()))
                        })
                        .collect();
                    t.map(|t| collect_terms(&field, TermOrder::DegRevLex, t))
                })
                .collect::<Result<Vec<_>>>()?;
            let out = substitute(&field, TermOrder::DegRevLex, &src, &imgs, target.nvars());
            Ok(Polynomial::from_field(target, &field, &out))
        }
        match self.ctx.field() {
            FieldKind::Rational => run(Rationals, self, images, target),
            FieldKind::Prime(p) => run(PrimeField::new(p)?, self, images, target),
        }
    }

    /// Coefficients mapped into `field`, degrevlex-sorted.
    pub(crate) fn to_field<F: Field>(&self, field: &F) -> Result<Terms<F::Elem>> {
        self.terms
            .iter()
            .map(|(m, c)| {
                field
                    .from_rational(c)
                    .map(|e| (*m, e))
                    .ok_or_else(|| Error::BadCoefficient(c.to_string()))
            })
            .collect()
    }

    pub(crate) fn from_field<F: Field>(
        ctx: RingContext,
        field: &F,
        terms: &[(Monomial, F::Elem)],
    ) -> Self {
        let mut out: Vec<(Monomial, BigRational)> = terms
            .iter()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(m, c)| (*m, field.to_rational(c)))
            .collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { ctx, terms: out }
    }

    /// Same polynomial viewed in another context with the same number of
    /// variables (coefficients re-normalized).
    pub fn with_context(&self, ctx: RingContext) -> Result<Self> {
        Self::from_terms(ctx, self.terms.iter().cloned())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = rational_is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

/// An invertible linear substitution `X_i -> sum_j matrix[i][j] X_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    ctx: RingContext,
    matrix: Vec<Vec<BigRational>>,
}

impl LinearChange {
    pub fn new(ctx: RingContext, matrix: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = ctx.nvars();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Arity { expected: n, found: matrix.len() });
        }
        let matrix = matrix
            .into_iter()
            .map(|r| r.iter().map(|c| ctx.field().normalize(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let g = LinearChange { ctx, matrix };
        if g.inverse_matrix().is_none() {
            return Err(Error::SingularChange);
        }
        Ok(g)
    }

    pub fn identity(ctx: RingContext) -> Self {
        let n = ctx.nvars();
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        LinearChange { ctx, matrix }
    }

    /// Builds from integer entries.
    pub fn from_integers(ctx: RingContext, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            ctx,
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
                .collect(),
        )
    }

    pub fn matrix(&self) -> &[Vec<BigRational>] {
        &self.matrix
    }

    pub fn inverse(&self) -> Self {
        LinearChange {
            ctx: self.ctx,
            matrix: self.inverse_matrix().expect("validated at construction"),
        }
    }

    fn inverse_matrix(&self) -> Option<Vec<Vec<BigRational>>> {
        fn run<F: Field>(field: F, m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
            let n = m.len();
            let mut a: Vec<Vec<F::Elem>> = m
                .iter()
                .map(|r| r.iter().map(|c| field.from_rational(c)).collect::<Option<Vec<_>>>())
                .collect::<Option<Vec<_>>>()?;
            let mut inv: Vec<Vec<F::Elem>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
                .collect();
            for col in 0..n {
                let piv = (col..n).find(|&r| !field.is_zero(&a[r][col]))?;
                a.swap(col, piv);
                inv.swap(col, piv);
                let s = field.inv(&a[col][col])?;
                for j in 0..n {
                    a[col][j] = field.mul(&a[col][j], &s);
                    inv[col][j] = field.mul(&inv[col][j], &s);
                }
                for r in 0..n {
                    if r != col && !field.is_zero(&a[r][col]) {
                        let f = a[r][col].clone();
                        for j in 0..n {
                            let t = field.mul(&f, &a[col][j]);
                            a[r][j] = field.sub(&a[r][j], &t);
                            let t = field.mul(&f, &inv[col][j]);
                            inv[r][j] = field.sub(&inv[r][j], &t);
                        }
                    }
                }
            }
            Some(inv.iter().map(|r| r.iter().map(|c| field.to_rational(c)).collect()).collect())
        }
        match self.ctx.field() {
            FieldKind::Rational => run(Rationals, &self.matrix),
            FieldKind::Prime(p) => run(PrimeField::new(p).ok()?, &self.matrix),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ctx(n: usize) -> RingContext {
        RingContext::with_vars(n).unwrap()
    }

    fn p(c: RingContext, s: &str) -> Polynomial {
        parse_polynomial(c, s).unwrap()
    }

    #[test]
    fn single_substitution() {
        let c = ctx(2);
        let g = LinearChange::from_integers(c, &[vec![1, 0], vec![1, 1]]).unwrap();
        assert_eq!(p(c, "X2").apply_change(&g).unwrap(), p(c, "X1 + X2"));
        assert_eq!(p(c, "X1*X2").apply_change(&g).unwrap(), p(c, "X1^2 + X1*X2"));
    }

    #[test]
    fn identity_change() {
        let c = ctx(3);
        let f = p(c, "X1^2*X3 - 3*X2^3 + X1*X2*X3");
        assert_eq!(f.apply_change(&LinearChange::identity(c)).unwrap(), f);
    }

    #[test]
    fn singular_change_rejected() {
        let c = ctx(2);
        assert_eq!(
            LinearChange::from_integers(c, &[vec![1, 2], vec![2, 4]]),
            Err(Error::SingularChange)
        );
    }

    #[test]
    fn specialize_examples() {
        let c = ctx(2);
        let one = [BigRational::one()];
        let c1 = ctx(1);
        assert_eq!(p(c, "X2").specialize_last(&one).unwrap(), p(c1, "X1"));
        assert_eq!(p(c, "X1").specialize_last(&one).unwrap(), p(c1, "X1"));
        assert!(p(c, "X1*X2 - X2^2").specialize_last(&one).unwrap().is_zero());
    }

    #[test]
    fn homogeneity() {
        let c = ctx(2);
        assert!(p(c, "X1^2 + X1*X2").is_homogeneous());
        assert_eq!(p(c, "X1^2 + X1*X2").degree(), Some(2));
        assert!(!p(c, "X1^2 + X2").is_homogeneous());
    }
}
