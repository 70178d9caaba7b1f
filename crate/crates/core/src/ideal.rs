//! Monomial ideals given by their minimal generators.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{cmp_degrevlex, monomials_of_degree, Monomial};
use crate::ring::RingContext;

/// A monomial ideal, stored by its minimal generating set.
///
/// Generators are sorted by ascending degree and, within a degree, by
/// descending degrevlex. The zero ideal has no generators; the unit ideal is
/// generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: RingContext,
    gens: Vec<Monomial>,
}

pub(crate) fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| cmp_degrevlex(b, a))
}

impl MonomialIdeal {
    /// Keeps the divisibility-minimal elements of `gens`.
    pub fn minimalize(ctx: RingContext, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        for m in &all {
            assert_eq!(m.nvars(), ctx.nvars(), "generator {m} has the wrong arity");
        }
        all.sort_by(canonical_cmp);
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        // ascending degree: a later element can never divide an earlier one
        for m in all {
            if !kept.iter().any(|g| g.divides(&m)) {
                kept.push(m);
            }
        }
        MonomialIdeal { ctx, gens: kept }
    }

    pub fn new(ctx: RingContext, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(m) = gens.iter().find(|m| m.nvars() != ctx.nvars()) {
            return Err(Error::Arity { expected: ctx.nvars(), found: m.nvars() });
        }
        Ok(Self::minimalize(ctx, gens))
    }

    /// Convenience constructor from exponent vectors.
    pub fn from_exponents(ctx: RingContext, exps: &[&[u32]]) -> Result<Self> {
        let gens = exps.iter().map(|e| Monomial::new(e)).collect::<Result<Vec<_>>>()?;
        Self::new(ctx, gens)
    }

    pub fn zero(ctx: RingContext) -> Self {
        MonomialIdeal { ctx, gens: Vec::new() }
    }

    pub fn unit(ctx: RingContext) -> Self {
        MonomialIdeal { ctx, gens: vec![Monomial::one(ctx.nvars())] }
    }

    /// The maximal ideal `(X1, ..., Xn)`.
    pub fn maximal(ctx: RingContext) -> Self {
        Self::minimalize(ctx, (0..ctx.nvars()).map(|i| Monomial::var(ctx.nvars(), i)))
    }

    pub fn context(&self) -> RingContext {
        self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_one())
    }

    /// Largest generator degree (`0` for the zero or unit ideal).
    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Least common multiple of all generators.
    pub fn lcm_all(&self) -> Monomial {
        self.gens.iter().fold(Monomial::one(self.nvars()), |acc, g| acc.lcm(g))
    }

    /// Membership test by divisibility.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &Self) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self::minimalize(self.ctx, self.gens.iter().chain(other.gens.iter()).copied())
    }

    pub fn add_generator(&self, m: Monomial) -> Self {
        Self::minimalize(self.ctx, self.gens.iter().copied().chain(std::iter::once(m)))
    }

    /// `I : X_i^inf` (0-based `i`): delete the `X_i`-exponent of every
    /// generator.
    pub fn colon_var_sat(&self, i: usize) -> Self {
        assert!(i < self.nvars());
        Self::minimalize(self.ctx, self.gens.iter().map(|g| g.with_exp(i, 0)))
    }

    /// `I : m^inf`, the intersection of all `I : X_i^inf`.
    pub fn saturate_m(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut acc = self.colon_var_sat(0);
        for i in 1..self.nvars() {
            acc = acc.intersect(&self.colon_var_sat(i));
        }
        acc
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        Self::minimalize(self.ctx, lcms)
    }

    /// `I : u` for a monomial `u`.
    pub fn colon(&self, u: &Monomial) -> Self {
        Self::minimalize(
            self.ctx,
            self.gens.iter().map(|g| g.div(&g.gcd(u)).expect("gcd divides")),
        )
    }

    /// `I ∩ K[X1..Xj]`, living in the smaller ring.
    pub fn restrict(&self, j: usize) -> Result<Self> {
        let sub = self.ctx.prefix(j)?;
        Ok(Self::minimalize(sub, self.gens.iter().filter_map(|g| g.restrict(j))))
    }

    /// Image under `X_n -> 0`; for monomial ideals this is `I_[n-1]`.
    pub fn set_last_to_zero(&self) -> Result<Self> {
        if self.nvars() < 2 {
            return Err(Error::Range("needs at least two variables".into()));
        }
        self.restrict(self.nvars() - 1)
    }

    /// Same generators in a ring with more variables.
    pub fn extend(&self, ctx: RingContext) -> Self {
        assert!(ctx.nvars() >= self.nvars());
        Self::minimalize(ctx, self.gens.iter().map(|g| g.extend(ctx.nvars())))
    }

    /// Whether the monomials of `I` form a top lex segment in every degree.
    pub fn is_lex_segment(&self) -> bool {
        if self.is_zero() || self.is_unit() {
            return true;
        }
        // R_1 times a lex segment is a lex segment, so only generator degrees matter
        let mut degrees: Vec<u32> = self.gens.iter().map(|g| g.degree()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        for d in degrees {
            let mut inside = true;
            for m in monomials_of_degree(self.nvars(), d) {
                let member = self.contains(&m);
                if member && !inside {
                    return false;
                }
                inside = member;
            }
        }
        true
    }

    /// Weak stability: for every generator `u` and `j < m(u)`, some
    /// `X_j^k u / X_{m(u)}^l` lies in `I`.
    pub fn is_weakly_stable(&self) -> bool {
        self.weak_stability_violation().is_none()
    }

    /// First `(generator, j)` violating weak stability (`j` 0-based).
    pub fn weak_stability_violation(&self) -> Option<(Monomial, usize)> {
        for u in &self.gens {
            let Some(m) = u.last_var() else { continue };
            let stripped = u.with_exp(m, 0);
            for j in 0..m {
                let ok = self.gens.iter().any(|g| g.with_exp(j, 0).divides(&stripped.with_exp(j, 0)));
                if !ok {
                    return Some((*u, j));
                }
            }
        }
        None
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn ideal(n: usize, exps: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(RingContext::with_vars(n).unwrap(), exps).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(2, &[&[2, 0], &[2, 1]]), ideal(2, &[&[2, 0]]));
        assert!(ideal(2, &[]).is_zero());
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[2, 0, 1]]);
        assert_eq!(i.num_generators(), 3);
    }

    #[test]
    fn canonical_text() {
        let i = ideal(2, &[&[0, 3], &[1, 1], &[2, 0]]);
        assert_eq!(i.to_string(), "ideal(X1^2, X1*X2, X2^3)");
    }

    #[test]
    fn colon_var_sat_examples() {
        assert_eq!(ideal(2, &[&[2, 0], &[1, 1]]).colon_var_sat(1), ideal(2, &[&[1, 0]]));
        assert_eq!(ideal(2, &[&[1, 0]]).colon_var_sat(1), ideal(2, &[&[1, 0]]));
        assert!(ideal(2, &[&[0, 3]]).colon_var_sat(1).is_unit());
    }

    #[test]
    fn saturation_examples() {
        assert!(ideal(2, &[&[2, 0], &[0, 2]]).saturate_m().is_unit());
        let i = ideal(2, &[&[1, 1]]);
        assert_eq!(i.saturate_m(), i);
        assert!(ideal(2, &[]).saturate_m().is_zero());
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(ideal(2, &[&[1, 0]]).intersect(&ideal(2, &[&[0, 1]])), ideal(2, &[&[1, 1]]));
        let u = MonomialIdeal::unit(RingContext::with_vars(2).unwrap());
        assert_eq!(ideal(2, &[&[1, 0]]).intersect(&u), ideal(2, &[&[1, 0]]));
        let a = ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let b = ideal(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let expect = ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        assert_eq!(a.intersect(&b), expect);
    }

    #[test]
    fn colon_examples() {
        let x1 = Monomial::new(&[1, 0, 0]).unwrap();
        let x3 = Monomial::new(&[0, 0, 1]).unwrap();
        assert_eq!(ideal(3, &[&[2, 0, 0]]).colon(&x1), ideal(3, &[&[1, 0, 0]]));
        assert_eq!(ideal(3, &[&[1, 1, 0]]).colon(&x3), ideal(3, &[&[1, 1, 0]]));
        assert_eq!(
            ideal(3, &[&[2, 0, 0], &[1, 1, 0]]).colon(&x1),
            ideal(3, &[&[1, 0, 0], &[0, 1, 0]])
        );
    }

    #[test]
    fn restrict_examples() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 1, 1]]);
        assert_eq!(i.restrict(2).unwrap(), ideal(2, &[&[2, 0]]));
        assert_eq!(i.restrict(3).unwrap(), i);
        assert!(ideal(3, &[&[0, 0, 1]]).restrict(2).unwrap().is_zero());
        assert_eq!(i.set_last_to_zero().unwrap(), i.restrict(2).unwrap());
    }

    #[test]
    fn lex_segment_examples() {
        assert!(ideal(2, &[&[2, 0], &[1, 1]]).is_lex_segment());
        assert!(!ideal(2, &[&[1, 1]]).is_lex_segment());
        assert!(ideal(2, &[]).is_lex_segment());
    }

    #[test]
    fn weak_stability_examples() {
        assert!(ideal(2, &[&[2, 0], &[1, 1]]).is_weakly_stable());
        assert!(!ideal(2, &[&[0, 1]]).is_weakly_stable());
        assert!(ideal(2, &[&[1, 0]]).is_weakly_stable());
    }
}
