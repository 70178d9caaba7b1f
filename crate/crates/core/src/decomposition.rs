//! Irreducible decompositions of monomial ideals and the dimension
//! filtration `I = I<-1> ⊆ I<0> ⊆ ... ⊆ I<d> = (1)`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{cmp_lex, Monomial};
use crate::ring::RingContext;

/// An irreducible monomial ideal `(X_i^{a_i} : i in support)`.
///
/// The empty support stands for the zero ideal (the prime `(0)`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    n: usize,
    powers: Vec<(usize, u32)>,
}

impl IrreducibleComponent {
    fn from_pure_powers(ideal: &MonomialIdeal) -> Self {
        let mut powers: Vec<(usize, u32)> = ideal
            .generators()
            .iter()
            .map(|g| {
                let i = g.last_var().expect("unit ideal has no components");
                (i, g.exp(i))
            })
            .collect();
        powers.sort();
        IrreducibleComponent { n: ideal.nvars(), powers }
    }

    /// 0-based variable indices with their exponents.
    pub fn powers(&self) -> &[(usize, u32)] {
        &self.powers
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.powers.iter().map(|p| p.0)
    }

    /// Krull dimension of `R / q`.
    pub fn dimension(&self) -> usize {
        self.n - self.powers.len()
    }

    pub fn ideal(&self, ctx: RingContext) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            ctx,
            self.powers.iter().map(|&(i, e)| Monomial::pure_power(self.n, i, e)),
        )
    }

    /// Ideal containment `self ⊇ other`.
    pub fn contains(&self, other: &Self) -> bool {
        other.powers.iter().all(|&(j, b)| self.powers.iter().any(|&(i, a)| i == j && a <= b))
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, &(i, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            if e == 1 {
                write!(f, "X{}", i + 1)?;
            } else {
                write!(f, "X{}^{}", i + 1, e)?;
            }
        }
        write!(f, ")")
    }
}

/// Irredundant irreducible decomposition; the unit ideal yields no
/// components.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    if ideal.is_zero() {
        return Err(Error::Range("the zero ideal has no irreducible decomposition".into()));
    }
    let comps = split_components(ideal);
    let ctx = ideal.context();
    let back = intersect_all(ctx, &comps);
    if &back != ideal {
        return Err(Error::Internal(format!(
            "decomposition of {ideal} intersects back to {back}"
        )));
    }
    Ok(comps)
}

/// Components including the zero-ideal convention.
fn components_with_zero(ideal: &MonomialIdeal) -> Vec<IrreducibleComponent> {
    if ideal.is_zero() {
        vec![IrreducibleComponent { n: ideal.nvars(), powers: Vec::new() }]
    } else {
        split_components(ideal)
    }
}

fn split_components(ideal: &MonomialIdeal) -> Vec<IrreducibleComponent> {
    let mut stack = vec![ideal.clone()];
    let mut seen: HashSet<MonomialIdeal> = HashSet::new();
    let mut leaves: Vec<IrreducibleComponent> = Vec::new();
    while let Some(j) = stack.pop() {
        if j.is_unit() || !seen.insert(j.clone()) {
            continue;
        }
        let mut candidates: Vec<&Monomial> =
            j.generators().iter().filter(|g| g.support_size() >= 2).collect();
        if candidates.is_empty() {
            leaves.push(IrreducibleComponent::from_pure_powers(&j));
            continue;
        }
        candidates.sort_by(|a, b| cmp_lex(b, a));
        let u = candidates[0];
        let i = u.last_var().expect("non-trivial generator");
        let power = Monomial::pure_power(u.nvars(), i, u.exp(i));
        let rest = u.div(&power).expect("pure power divides");
        stack.push(j.add_generator(rest));
        stack.push(j.add_generator(power));
    }
    leaves.sort();
    leaves.dedup();
    // drop components containing another one
    let mut kept: Vec<IrreducibleComponent> = Vec::new();
    for (a, q) in leaves.iter().enumerate() {
        let redundant = leaves.iter().enumerate().any(|(b, other)| a != b && q.contains(other));
        if !redundant {
            kept.push(q.clone());
        }
    }
    kept
}

fn intersect_all(ctx: RingContext, comps: &[IrreducibleComponent]) -> MonomialIdeal {
    comps
        .iter()
        .fold(MonomialIdeal::unit(ctx), |acc, q| acc.intersect(&q.ideal(ctx)))
}

/// Krull dimension of `R / I`; `-1` for the unit ideal.
pub fn dimension(ideal: &MonomialIdeal) -> i32 {
    if ideal.is_unit() {
        return -1;
    }
    components_with_zero(ideal).iter().map(|q| q.dimension() as i32).max().unwrap_or(-1)
}

/// `I<i>`: the intersection of the components of dimension `> i`.
pub fn filtration_ideal(ideal: &MonomialIdeal, i: i32) -> Result<MonomialIdeal> {
    let d = dimension(ideal);
    if i < -1 || i > d.max(-1) {
        return Err(Error::Range(format!("filtration index {i} outside -1..={d}")));
    }
    if i == -1 {
        return Ok(ideal.clone());
    }
    Ok(filtration_from(ideal.context(), &components_with_zero(ideal), i))
}

fn filtration_from(ctx: RingContext, comps: &[IrreducibleComponent], i: i32) -> MonomialIdeal {
    let chosen: Vec<IrreducibleComponent> =
        comps.iter().filter(|q| q.dimension() as i32 > i).cloned().collect();
    intersect_all(ctx, &chosen)
}

/// The chain `I<-1> ⊆ I<0> ⊆ ... ⊆ I<d>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionFiltration {
    ideals: Vec<MonomialIdeal>,
}

impl DimensionFiltration {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::Range("the unit ideal has no dimension filtration".into()));
        }
        let d = dimension(ideal);
        let comps = components_with_zero(ideal);
        let mut ideals = vec![ideal.clone()];
        for i in 0..=d {
            ideals.push(filtration_from(ideal.context(), &comps, i));
        }
        let f = DimensionFiltration { ideals };
        f.check()?;
        Ok(f)
    }

    /// `dim R/I`.
    pub fn dim(&self) -> i32 {
        self.ideals.len() as i32 - 2
    }

    /// `I<i>` for `-1 <= i <= dim`.
    pub fn get(&self, i: i32) -> &MonomialIdeal {
        &self.ideals[(i + 1) as usize]
    }

    pub fn ideals(&self) -> &[MonomialIdeal] {
        &self.ideals
    }

    fn check(&self) -> Result<()> {
        if !self.ideals.last().is_some_and(|i| i.is_unit()) {
            return Err(Error::Internal("filtration does not end at the unit ideal".into()));
        }
        for w in self.ideals.windows(2) {
            if !w[1].contains_ideal(&w[0]) {
                return Err(Error::Internal(format!("filtration not ascending: {} ⊄ {}", w[0], w[1])));
            }
        }
        if self.ideals.len() >= 2 && self.ideals[1] != self.ideals[0].saturate_m() {
            return Err(Error::Internal("I<0> differs from the saturation".into()));
        }
        Ok(())
    }
}
