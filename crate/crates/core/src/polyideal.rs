use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::TermOrder;
use crate::poly::Polynomial;
use crate::ring::RingContext;

/// A homogeneous ideal given by generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyIdeal {
    ctx: RingContext,
    gens: Vec<Polynomial>,
    order: TermOrder,
}

impl PolyIdeal {
    /// Zero generators are dropped; every remaining generator must be
    /// homogeneous.
    pub fn new(ctx: RingContext, gens: Vec<Polynomial>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.context().nvars() != ctx.nvars() {
                return Err(Error::Arity { expected: ctx.nvars(), found: g.context().nvars() });
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::Parse(format!("generator {g} is not homogeneous")));
            }
            kept.push(g.with_context(ctx)?);
        }
        Ok(PolyIdeal { ctx, gens: kept, order: TermOrder::DegRevLex })
    }

    pub fn with_order(mut self, order: TermOrder) -> Self {
        self.order = order;
        self
    }

    pub fn from_monomial(ideal: &MonomialIdeal) -> Self {
        let ctx = ideal.context();
        PolyIdeal {
            ctx,
            gens: ideal.generators().iter().map(|m| Polynomial::monomial(ctx, *m)).collect(),
            order: TermOrder::DegRevLex,
        }
    }

    pub fn context(&self) -> RingContext {
        self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }

    /// The monomial ideal generated by the generators, when each generator
    /// has a single term.
    pub fn as_monomial(&self) -> Option<MonomialIdeal> {
        if self.gens.iter().all(|g| g.terms().len() == 1) {
            Some(MonomialIdeal::minimalize(self.ctx, self.gens.iter().map(|g| g.terms()[0].0)))
        } else {
            None
        }
    }
}

impl fmt::Debug for PolyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyIdeal {
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
