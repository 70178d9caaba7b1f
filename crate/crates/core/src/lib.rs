//! Exact computations with graded ideals of `K[X1..Xn]`: lex-ideals,
//! generic initial ideals, saturations, Hilbert series, dimension
//! filtrations, Björner–Wachs polynomials and Hilbert functions of local
//! cohomology modules, together with executable checkers for the rigidity
//! results relating an ideal, its generic initial ideal and its lex-ideal.

pub mod corpus;
pub mod decomposition;
pub mod error;
pub mod field;
mod gb;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod lex;
mod linalg;
pub mod localcoh;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod polyideal;
pub mod resolution;
pub mod rigidity;
pub mod ring;
pub mod rng;
pub mod series;

pub use error::{Error, Result};
pub use decomposition::{DimensionFiltration, IrreducibleComponent};
pub use groebner::{GinOptions, GroebnerBasis};
pub use hilbert::{HilbertPolynomial, HilbertSeries};
pub use field::{Field, FieldKind, PrimeField, Rationals, DEFAULT_PRIME};
pub use ideal::MonomialIdeal;
pub use localcoh::{BWPolynomial, CancellationWitness, CohomologyTable, Route, Window};
pub use monomial::{Monomial, TermOrder};
pub use parse::{Ideal, IdealFile};
pub use poly::{LinearChange, Polynomial};
pub use polyideal::PolyIdeal;
pub use resolution::FreeResolution;
pub use rigidity::{EquivalenceReport, JPair};
pub use ring::RingContext;
