//! Term syntax (`3/2*X1^2*X3 - X2`) and the ideal file format.
//!
//! An ideal file looks like
//!
//! ```text
//! # comments start with '#'
//! label: twisted-example
//! ring: n=4 field=GF(32003)
//! ideal(X1*X3, X1*X4, X2*X3, X2*X4)
//! ```
//!
//! `field` is `QQ` or `GF(p)`; it defaults to `GF(32003)`. The `label` line
//! is optional. The ideal body may span several lines.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::FieldKind;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::polyideal::PolyIdeal;
use crate::ring::RingContext;

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        text.parse::<BigInt>().map_err(|e| Error::Parse(e.to_string()))
    }

    fn small_number(&mut self) -> Result<u32> {
        let v = self.number()?;
        u32::try_from(v).map_err(|_| self.error("number too large"))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn error(&self, msg: &str) -> Error {
        let shown = String::from_utf8_lossy(self.s);
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, shown.trim()))
    }
}

/// One factor `Xi` or `Xi^e`, returning (0-based index, exponent).
fn parse_variable(c: &mut Cursor, n: usize) -> Result<(usize, u32)> {
    if !(c.eat(b'X') || c.eat(b'x')) {
        return Err(c.error("expected a variable X<i>"));
    }
    let idx = c.small_number()? as usize;
    if idx == 0 || idx > n {
        return Err(c.error(&format!("variable X{idx} outside X1..X{n}")));
    }
    let e = if c.eat(b'^') { c.small_number()? } else { 1 };
    Ok((idx - 1, e))
}

fn parse_term(c: &mut Cursor, n: usize) -> Result<(Monomial, BigRational)> {
    let mut coeff = BigRational::one();
    let mut exps = vec![0u32; n];
    let mut expect_factor = true;
    let mut seen = false;
    while expect_factor {
        match c.peek() {
            Some(b'0'..=b'9') => {
                let num = c.number()?;
                let den = if c.eat(b'/') { c.number()? } else { BigInt::one() };
                if den.is_zero() {
                    return Err(c.error("zero denominator"));
                }
                coeff *= BigRational::new(num, den);
            }
            Some(b'X') | Some(b'x') => {
                let (i, e) = parse_variable(c, n)?;
                exps[i] = exps[i].checked_add(e).ok_or(Error::ExponentOverflow)?;
            }
            _ => return Err(c.error("expected a coefficient or variable")),
        }
        seen = true;
        expect_factor = c.eat(b'*');
    }
    debug_assert!(seen);
    Ok((Monomial::new(&exps)?, coeff))
}

fn parse_poly_at(c: &mut Cursor, ctx: RingContext) -> Result<Polynomial> {
    let mut terms = Vec::new();
    let mut sign = if c.eat(b'-') {
        -1
    } else {
        c.eat(b'+');
        1
    };
    loop {
        let (m, coeff) = parse_term(c, ctx.nvars())?;
        terms.push((m, if sign < 0 { -coeff } else { coeff }));
        if c.eat(b'+') {
            sign = 1;
        } else if c.eat(b'-') {
            sign = -1;
        } else {
            break;
        }
    }
    Polynomial::from_terms(ctx, terms)
}

/// Parses a polynomial in term syntax; `0` is accepted.
pub fn parse_polynomial(ctx: RingContext, s: &str) -> Result<Polynomial> {
    let mut c = Cursor::new(s);
    if s.trim() == "0" {
        return Ok(Polynomial::zero(ctx));
    }
    let p = parse_poly_at(&mut c, ctx)?;
    if !c.at_end() {
        return Err(c.error("trailing input"));
    }
    Ok(p)
}

/// Parses `ideal(f1, ..., fk)` (the `ideal` keyword is optional).
pub fn parse_generators(ctx: RingContext, s: &str) -> Result<Vec<Polynomial>> {
    let body = s.trim();
    let body = body.strip_prefix("ideal").unwrap_or(body).trim();
    let mut c = Cursor::new(body);
    c.expect(b'(')?;
    let mut gens = Vec::new();
    if !c.eat(b')') {
        loop {
            if c.peek() == Some(b'0') {
                // allow a literal zero generator
                let save = c.pos;
                c.number()?;
                if matches!(c.peek(), Some(b',') | Some(b')')) {
                    gens.push(Polynomial::zero(ctx));
                } else {
                    c.pos = save;
                    gens.push(parse_poly_at(&mut c, ctx)?);
                }
            } else {
                gens.push(parse_poly_at(&mut c, ctx)?);
            }
            if c.eat(b',') {
                continue;
            }
            c.expect(b')')?;
            break;
        }
    }
    if !c.at_end() {
        return Err(c.error("trailing input"));
    }
    Ok(gens)
}

/// Either kind of ideal the library works with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ideal {
    Monomial(MonomialIdeal),
    Polynomial(PolyIdeal),
}

impl Ideal {
    pub fn context(&self) -> RingContext {
        match self {
            Ideal::Monomial(i) => i.context(),
            Ideal::Polynomial(i) => i.context(),
        }
    }

    /// Monomial ideals stay monomial; polynomial ideals whose generators are
    /// all single terms are recognized as monomial.
    pub fn from_generators(ctx: RingContext, gens: Vec<Polynomial>) -> Result<Self> {
        let poly = PolyIdeal::new(ctx, gens)?;
        Ok(match poly.as_monomial() {
            Some(m) => Ideal::Monomial(m),
            None => Ideal::Polynomial(poly),
        })
    }

    pub fn as_poly(&self) -> PolyIdeal {
        match self {
            Ideal::Monomial(i) => PolyIdeal::from_monomial(i),
            Ideal::Polynomial(p) => p.clone(),
        }
    }

    pub fn as_monomial(&self) -> Option<&MonomialIdeal> {
        match self {
            Ideal::Monomial(i) => Some(i),
            Ideal::Polynomial(_) => None,
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ideal::Monomial(i) => write!(f, "{i}"),
            Ideal::Polynomial(i) => write!(f, "{i}"),
        }
    }
}

/// An ideal together with its ring header and optional label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub label: Option<String>,
    pub ideal: Ideal,
}

impl IdealFile {
    pub fn new(label: Option<String>, ideal: Ideal) -> Self {
        IdealFile { label, ideal }
    }

    pub fn context(&self) -> RingContext {
        self.ideal.context()
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with_default(text, FieldKind::default())
    }

    /// Like [`IdealFile::parse`], with `default` used when the ring header
    /// names no field.
    pub fn parse_with_default(text: &str, default: FieldKind) -> Result<Self> {
        let mut label = None;
        let mut n = None;
        let mut field = default;
        let mut body = String::new();
        for raw in text.lines() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("label:") {
                label = Some(rest.trim().to_string());
            } else if let Some(rest) = line.strip_prefix("ring:") {
                for item in rest.split_whitespace() {
                    let (key, value) = item
                        .split_once('=')
                        .ok_or_else(|| Error::Parse(format!("bad ring entry `{item}`")))?;
                    match key {
                        "n" => {
                            n = Some(value.parse::<usize>().map_err(|e| {
                                Error::Parse(format!("bad variable count `{value}`: {e}"))
                            })?)
                        }
                        "field" => field = parse_field(value)?,
                        _ => return Err(Error::Parse(format!("unknown ring key `{key}`"))),
                    }
                }
            } else {
                body.push_str(line);
                body.push(' ');
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing `ring: n=<vars>` header".into()))?;
        let ctx = RingContext::new(n, field)?;
        if body.trim().is_empty() {
            return Err(Error::Parse("missing ideal body".into()));
        }
        let gens = parse_generators(ctx, &body)?;
        Ok(IdealFile { label, ideal: Ideal::from_generators(ctx, gens)? })
    }
}

impl fmt::Display for IdealFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = &self.label {
            writeln!(f, "label: {l}")?;
        }
        let ctx = self.context();
        writeln!(f, "ring: n={} field={}", ctx.nvars(), ctx.field())?;
        writeln!(f, "{}", self.ideal)
    }
}

pub fn parse_field(s: &str) -> Result<FieldKind> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("QQ") {
        return Ok(FieldKind::Rational);
    }
    let inner = s
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("unknown field `{s}` (use QQ or GF(p))")))?;
    let p = inner
        .parse::<u32>()
        .map_err(|e| Error::Parse(format!("bad characteristic `{inner}`: {e}")))?;
    let k = FieldKind::Prime(p);
    k.validate()?;
    Ok(k)
}

/// Parses a monomial ideal written as `ideal(...)` in an `n`-variable ring
/// over the default field. Non-monomial generators are rejected.
pub fn parse_monomial_ideal(ctx: RingContext, s: &str) -> Result<MonomialIdeal> {
    match Ideal::from_generators(ctx, parse_generators(ctx, s)?)? {
        Ideal::Monomial(i) => Ok(i),
        Ideal::Polynomial(p) => Err(Error::Parse(format!("{p} is not a monomial ideal"))),
    }
}
