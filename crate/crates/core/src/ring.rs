use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldKind;
use crate::monomial::MAX_VARS;

/// A standard graded polynomial ring `K[X1..Xn]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingContext {
    n: usize,
    field: FieldKind,
}

impl RingContext {
    pub fn new(n: usize, field: FieldKind) -> Result<Self> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "{n} variables (supported: 1..={MAX_VARS})"
            )));
        }
        field.validate()?;
        Ok(RingContext { n, field })
    }

    /// `n` variables over the default prime field.
    pub fn with_vars(n: usize) -> Result<Self> {
        Self::new(n, FieldKind::default())
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn field(&self) -> FieldKind {
        self.field
    }

    /// The subring `K[X1..Xj]`.
    pub fn prefix(&self, j: usize) -> Result<Self> {
        if j == 0 || j > self.n {
            return Err(Error::Range(format!("restriction to {j} of {} variables", self.n)));
        }
        Ok(RingContext { n: j, field: self.field })
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring(n={}, field={})", self.n, self.field)
    }
}
