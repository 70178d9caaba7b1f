//! Gröbner bases, initial ideals, generic initial ideals, generic
//! hyperplane sections and saturation of homogeneous ideals.

use num_rational::BigRational;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{with_field, Field, FieldKind, DEFAULT_PRIME};
use crate::gb::{schreyer_sort, Engine, FreeModule, Vector};
use crate::ideal::{canonical_cmp, MonomialIdeal};
use crate::linalg::rank;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{collect_terms, substitute, Polynomial, Terms};
use crate::polyideal::PolyIdeal;
use crate::ring::RingContext;
use crate::rng::{stream, DEFAULT_SEED};

/// Upper bound on the number of Gröbner basis elements.
pub const BASIS_CAP: usize = 50_000;

/// A reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ideal: PolyIdeal,
    order: TermOrder,
    elements: Vec<Polynomial>,
    leads: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn ideal(&self) -> &PolyIdeal {
        &self.ideal
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    /// Monic elements sorted by their leading monomials.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.ideal.context(), self.leads.iter().copied())
    }
}

pub(crate) fn to_vector<E: Clone>(module: &FreeModule, terms: &Terms<E>) -> Vector<E> {
    let mut v: Vector<E> = terms.iter().map(|(m, c)| (0, *m, c.clone())).collect();
    module.sort(&mut v);
    v
}

pub(crate) fn from_vector<E: Clone>(v: &Vector<E>) -> Terms<E> {
    v.iter().map(|(_, m, c)| (*m, c.clone())).collect()
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted so that
/// leading monomials decrease in lex order.
pub(crate) fn ideal_basis<F: Field>(
    field: &F,
    n: usize,
    order: TermOrder,
    gens: &[Terms<F::Elem>],
) -> Result<Vec<Vector<F::Elem>>> {
    let module = FreeModule::top(n, vec![0], order);
    let mut engine = Engine::new(field, &module);
    engine.run(gens.iter().map(|g| to_vector(&module, g)).collect(), BASIS_CAP)?;
    let mut basis: Vec<Vector<F::Elem>> = engine.basis.into_iter().map(|e| e.vec).collect();
    schreyer_sort(&mut basis);
    Ok(basis)
}

pub(crate) fn generators_in<F: Field>(field: &F, j: &PolyIdeal) -> Result<Vec<Terms<F::Elem>>> {
    j.generators().iter().map(|g| g.to_field(field)).collect()
}

/// Buchberger's algorithm (normal selection strategy, Gebauer–Möller
/// criteria) in the ideal's term order.
pub fn buchberger(j: &PolyIdeal) -> Result<GroebnerBasis> {
    let ctx = j.context();
    let order = j.order();
    let (elements, leads) = with_field!(ctx.field(), |f| {
        let basis = ideal_basis(&f, ctx.nvars(), order, &generators_in(&f, j)?)?;
        let leads: Vec<Monomial> = basis.iter().map(|v| v[0].1).collect();
        let elements: Vec<Polynomial> =
            basis.iter().map(|v| Polynomial::from_field(ctx, &f, &from_vector(v))).collect();
        (elements, leads)
    });
    let mut paired: Vec<(Monomial, Polynomial)> = leads.into_iter().zip(elements).collect();
    paired.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    let (leads, elements) = paired.into_iter().unzip();
    Ok(GroebnerBasis { ideal: j.clone(), order, elements, leads })
}

/// `in(J)` for the ideal's term order.
pub fn initial_ideal(j: &PolyIdeal) -> Result<MonomialIdeal> {
    Ok(buchberger(j)?.initial_ideal())
}

/// Parameters of the probabilistic generic initial ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GinOptions {
    /// Independent random changes of coordinates that must agree (≥ 2).
    pub trials: usize,
    pub seed: u64,
    /// Work over the rationals with small random integer changes instead
    /// of over a prime field.
    pub rational: bool,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions { trials: 2, seed: DEFAULT_SEED, rational: false }
    }
}

impl GinOptions {
    fn field_for(&self, ctx: RingContext) -> FieldKind {
        if self.rational {
            FieldKind::Rational
        } else {
            match ctx.field() {
                FieldKind::Prime(p) => FieldKind::Prime(p),
                FieldKind::Rational => FieldKind::Prime(DEFAULT_PRIME),
            }
        }
    }
}

/// A uniformly random invertible matrix.
pub(crate) fn random_invertible<F: Field, R: Rng + ?Sized>(
    field: &F,
    n: usize,
    rng: &mut R,
) -> Vec<Vec<F::Elem>> {
    loop {
        let m: Vec<Vec<F::Elem>> =
            (0..n).map(|_| (0..n).map(|_| field.random(rng)).collect()).collect();
        if rank(field, m.clone()) == n {
            return m;
        }
    }
}

/// Images `X_i -> sum_j m[i][j] X_j`.
pub(crate) fn linear_images<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> Vec<Terms<F::Elem>> {
    let n = m.len();
    m.iter()
        .map(|row| {
            collect_terms(
                field,
                TermOrder::DegRevLex,
                row.iter().enumerate().map(|(j, c)| (Monomial::var(n, j), c.clone())),
            )
        })
        .collect()
}

pub(crate) fn transform<F: Field>(
    field: &F,
    gens: &[Terms<F::Elem>],
    images: &[Terms<F::Elem>],
    target_n: usize,
) -> Vec<Terms<F::Elem>> {
    gens.iter()
        .map(|g| substitute(field, TermOrder::DegRevLex, g, images, target_n))
        .filter(|g| !g.is_empty())
        .collect()
}

fn gin_trial<F: Field>(
    field: &F,
    ctx: RingContext,
    gens: &[Terms<F::Elem>],
    seed: u64,
    trial: usize,
) -> Result<MonomialIdeal> {
    let n = ctx.nvars();
    let mut rng = stream(seed, "gin", trial as u64);
    let m = random_invertible(field, n, &mut rng);
    let moved = transform(field, gens, &linear_images(field, &m), n);
    let basis = ideal_basis(field, n, TermOrder::DegRevLex, &moved)?;
    Ok(MonomialIdeal::minimalize(ctx, basis.iter().map(|v| v[0].1)))
}

/// Generic initial ideal for degrevlex, certified by agreement of
/// `opts.trials` independent random changes of coordinates.
pub fn gin(j: &PolyIdeal, opts: &GinOptions) -> Result<MonomialIdeal> {
    if opts.trials < 2 {
        return Err(Error::Range("gin needs at least two trials".into()));
    }
    let ctx = j.context();
    let results: Vec<MonomialIdeal> = with_field!(opts.field_for(ctx), |f| {
        let gens = generators_in(&f, j)?;
        (0..opts.trials)
            .map(|t| gin_trial(&f, ctx, &gens, opts.seed, t))
            .collect::<Result<Vec<_>>>()?
    });
    let first = &results[0];
    if let Some((t, other)) = results.iter().enumerate().find(|(_, r)| *r != first) {
        return Err(Error::GinCertification(format!(
            "trial 0 gave {first} but trial {t} gave {other}"
        )));
    }
    Ok(first.clone())
}

pub fn gin_monomial(i: &MonomialIdeal, opts: &GinOptions) -> Result<MonomialIdeal> {
    gin(&PolyIdeal::from_monomial(i), opts)
}

/// Image of `J` under `X_n -> a_1 X_1 + ... + a_{n-1} X_{n-1}`.
pub fn specialize_with(j: &PolyIdeal, coeffs: &[BigRational]) -> Result<PolyIdeal> {
    let n = j.nvars();
    if n < 2 {
        return Err(Error::Range("specialization needs at least two variables".into()));
    }
    let target = j.context().prefix(n - 1)?;
    let gens = j
        .generators()
        .iter()
        .map(|g| g.specialize_last(coeffs))
        .collect::<Result<Vec<_>>>()?;
    PolyIdeal::new(target, gens)
}

/// [`specialize_with`] for random nonzero coefficients.
pub fn specialize_generic(j: &PolyIdeal, seed: u64) -> Result<PolyIdeal> {
    let n = j.nvars();
    if n < 2 {
        return Err(Error::Range("specialization needs at least two variables".into()));
    }
    let mut rng = stream(seed, "specialize", n as u64);
    let coeffs: Vec<BigRational> = with_field!(j.context().field(), |f| {
        (0..n - 1)
            .map(|_| loop {
                let c = f.random(&mut rng);
                if !f.is_zero(&c) {
                    break f.to_rational(&c);
                }
            })
            .collect()
    });
    specialize_with(j, &coeffs)
}

/// Compares `Gin(g_n(J))` with `Gin(J)_[n-1]`.
pub fn gin_restriction_identity_check(j: &PolyIdeal, opts: &GinOptions) -> Result<bool> {
    let n = j.nvars();
    if n < 2 {
        return Err(Error::Range("the restriction identity needs at least two variables".into()));
    }
    let lhs = gin(&specialize_generic(j, opts.seed)?, opts)?;
    let rhs = gin(j, opts)?.restrict(n - 1)?;
    Ok(lhs == rhs)
}

/// `J : l^∞` for a random linear form `l`, which equals the saturation
/// `J : m^∞` for generic `l`. After a random change of coordinates sending
/// `l` to `X_n`, the degrevlex basis elements divided by their largest
/// power of `X_n` generate `J : X_n^∞`.
pub fn saturate(j: &PolyIdeal, seed: u64) -> Result<PolyIdeal> {
    let ctx = j.context();
    let n = ctx.nvars();
    let gens = with_field!(ctx.field(), |f| {
        let mut rng = stream(seed, "saturate", 0);
        let m = random_invertible(&f, n, &mut rng);
        let inverse = invert(&f, &m);
        let moved = transform(&f, &generators_in(&f, j)?, &linear_images(&f, &m), n);
        let basis = ideal_basis(&f, n, TermOrder::DegRevLex, &moved)?;
        let divided: Vec<Terms<_>> = basis
            .iter()
            .map(|v| {
                let k = v.iter().map(|t| t.1.exp(n - 1)).min().unwrap_or(0);
                let q = Monomial::pure_power(n, n - 1, k);
                v.iter().map(|(_, mm, c)| (mm.div(&q).expect("common factor"), c.clone())).collect()
            })
            .collect();
        let back = transform(&f, &divided, &linear_images(&f, &inverse), n);
        let reduced = ideal_basis(&f, n, TermOrder::DegRevLex, &back)?;
        reduced
            .iter()
            .map(|v| Polynomial::from_field(ctx, &f, &from_vector(v)))
            .collect::<Vec<_>>()
    });
    Ok(PolyIdeal::new(ctx, gens)?.with_order(j.order()))
}

pub(crate) fn invert<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let n = m.len();
    let mut a: Vec<Vec<F::Elem>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !field.is_zero(&a[r][col])).expect("invertible");
        a.swap(col, piv);
        let s = field.inv(&a[col][col]).expect("nonzero pivot");
        for x in a[col].iter_mut() {
            *x = field.mul(x, &s);
        }
        let pivot = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !field.is_zero(&row[col]) {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = field.sub(x, &field.mul(&f, p));
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}
