//! Deterministic random ideals for property checks and batch runs.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldKind;
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::parse::{Ideal, IdealFile};
use crate::poly::Polynomial;
use crate::ring::RingContext;
use crate::rng::stream;

/// Which kind of ideals to draw.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Random monomials closed under the weak-stability moves.
    WeaklyStable,
    /// Random monomials.
    Monomial,
    /// Homogeneous polynomials with few terms and random coefficients.
    HomogeneousSparse,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::WeaklyStable => "weakly-stable",
            Family::Monomial => "monomial",
            Family::HomogeneousSparse => "homogeneous-sparse",
        }
    }
}

/// Parameters of a corpus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub family: Family,
    pub n: usize,
    pub max_degree: u32,
    pub max_generators: usize,
    pub count: usize,
    pub seed: u64,
    #[serde(default, with = "field_text")]
    pub field: FieldKind,
}

mod field_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::field::FieldKind;
    use crate::parse::parse_field;

    pub fn serialize<S: Serializer>(f: &FieldKind, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&f.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<FieldKind, D::Error> {
        let text = String::deserialize(d)?;
        parse_field(&text).map_err(serde::de::Error::custom)
    }
}

impl CorpusSpec {
    pub fn new(family: Family, n: usize, max_degree: u32, max_generators: usize, count: usize, seed: u64) -> Self {
        CorpusSpec { family, n, max_degree, max_generators, count, seed, field: FieldKind::default() }
    }

    fn validate(&self) -> Result<()> {
        if self.max_degree == 0 || self.max_generators == 0 {
            return Err(Error::Range("max_degree and max_generators must be positive".into()));
        }
        RingContext::new(self.n, self.field).map(|_| ())
    }
}

/// Ideal number `index` of the corpus; independent of the other indices.
pub fn generate_instance(spec: &CorpusSpec, index: usize) -> Result<IdealFile> {
    spec.validate()?;
    let ctx = RingContext::new(spec.n, spec.field)?;
    let mut rng = stream(spec.seed, &format!("corpus-{}", spec.family.name()), index as u64);
    let ideal = match spec.family {
        Family::Monomial => Ideal::Monomial(random_monomial_ideal(ctx, spec, &mut rng)),
        Family::WeaklyStable => {
            // resample until the closure respects the generator bound
            let mut attempt = 0;
            let i = loop {
                let i = weakly_stable_closure(&random_monomial_ideal(ctx, spec, &mut rng));
                if i.num_generators() <= spec.max_generators {
                    break i;
                }
                attempt += 1;
                if attempt == 10_000 {
                    return Err(Error::Cap(format!(
                        "no weakly stable ideal with at most {} generators found",
                        spec.max_generators
                    )));
                }
            };
            if !i.is_weakly_stable() {
                return Err(Error::Internal(format!("closure {i} is not weakly stable")));
            }
            Ideal::Monomial(i)
        }
        Family::HomogeneousSparse => Ideal::from_generators(ctx, random_sparse(ctx, spec, &mut rng)?)?,
    };
    let label = format!("{}-n{}-s{}-{index}", spec.family.name(), spec.n, spec.seed);
    Ok(IdealFile::new(Some(label), ideal))
}

pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<IdealFile>> {
    (0..spec.count).map(|i| generate_instance(spec, i)).collect()
}

fn random_monomial<R: Rng>(n: usize, degree: u32, rng: &mut R) -> Monomial {
    let all = monomials_of_degree(n, degree);
    all[rng.gen_range(0..all.len())]
}

/// Between one and `max_generators` monomials of degree `1..=max_degree`,
/// biased away from linear forms.
fn random_monomial_ideal<R: Rng>(ctx: RingContext, spec: &CorpusSpec, rng: &mut R) -> MonomialIdeal {
    let count = rng.gen_range(1..=spec.max_generators);
    let low = if spec.max_degree >= 2 { 2 } else { 1 };
    let gens = (0..count).map(|_| {
        let d = rng.gen_range(low..=spec.max_degree);
        random_monomial(ctx.nvars(), d, rng)
    });
    MonomialIdeal::minimalize(ctx, gens.collect::<Vec<_>>())
}

/// Smallest ideal containing `ideal` in which every generator `u` and
/// `j < m(u)` satisfy `X_j^l u / X_{m(u)}^l ∈ I`, `l` the exponent of the
/// last variable of `u`.
pub fn weakly_stable_closure(ideal: &MonomialIdeal) -> MonomialIdeal {
    let mut current = ideal.clone();
    while let Some((u, j)) = current.weak_stability_violation() {
        let m = u.last_var().expect("constant generators never violate");
        let l = u.exp(m);
        let moved = u.with_exp(m, 0).with_exp(j, u.exp(j) + l);
        current = current.add_generator(moved);
    }
    current
}

/// Homogeneous polynomials with two or three terms and small random
/// coefficients.
fn random_sparse<R: Rng>(ctx: RingContext, spec: &CorpusSpec, rng: &mut R) -> Result<Vec<Polynomial>> {
    let n = ctx.nvars();
    let count = rng.gen_range(1..=spec.max_generators.min(n));
    let low = if spec.max_degree >= 2 { 2 } else { 1 };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let d = rng.gen_range(low..=spec.max_degree);
        let terms = rng.gen_range(2..=3);
        let poly = Polynomial::from_terms(
            ctx,
            (0..terms).map(|_| {
                let c: i64 = rng.gen_range(1..=50) * if rng.gen_bool(0.5) { 1 } else { -1 };
                (random_monomial(n, d, rng), BigRational::from_integer(BigInt::from(c)))
            }),
        )?;
        if !poly.is_zero() {
            out.push(poly);
        }
    }
    Ok(out)
}
