//! Sparse multivariate Laurent polynomials with arbitrary-precision rational
//! coefficients.
//!
//! Every polynomial lives over an [`Ambient`], an ordered list of variable
//! names. Two polynomials can only be combined when their ambients agree;
//! maps between different ambients go through variable *names*
//! ([`LaurentPolynomial::map_variables`]).
//!
//! Terms are kept in canonical form: no zero coefficients, no zero exponents,
//! and terms ordered lexicographically on dense exponent vectors (first ambient
//! variable most significant). The same order drives exact division.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered list of distinct variable names.
#[derive(Debug, Clone)]
pub struct Ambient {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Ambient {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || index.insert(name.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate or empty variable name `{name}`")));
            }
        }
        Ok(Arc::new(Self { names, index }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    fn describe(&self) -> String {
        self.names.join(", ")
    }
}

impl PartialEq for Ambient {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Ambient {}

fn same_ambient(a: &Arc<Ambient>, b: &Arc<Ambient>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A Laurent monomial: sorted `(variable index, exponent)` pairs with nonzero
/// exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(usize, i64)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(index: usize) -> Self {
        Self(vec![(index, 1)])
    }

    /// Builds a monomial from arbitrary `(index, exponent)` pairs, summing
    /// repeated indices and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, i64)>>(pairs: I) -> Self {
        let mut map: BTreeMap<usize, i64> = BTreeMap::new();
        for (i, e) in pairs {
            *map.entry(i).or_insert(0) += e;
        }
        Self(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn exponents(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> i64 {
        self.0
            .binary_search_by_key(&index, |&(i, _)| i)
            .map(|pos| self.0[pos].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    out.push(y);
                    b.next();
                }
                (Some(&&(i, e)), Some(&&(j, f))) => match i.cmp(&j) {
                    Ordering::Less => {
                        out.push((i, e));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((j, f));
                        b.next();
                    }
                    Ordering::Equal => {
                        if e + f != 0 {
                            out.push((i, e + f));
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
        Self(out)
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().map(|&(i, e)| (i, -e)).collect())
    }

    pub fn pow(&self, n: i64) -> Self {
        if n == 0 {
            return Self::one();
        }
        Self(self.0.iter().map(|&(i, e)| (i, e * n)).collect())
    }

    /// Componentwise `self <= other` on dense exponent vectors.
    fn divides(&self, other: &Self) -> bool {
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return true,
                (Some(&&(_, e)), None) => {
                    if e > 0 {
                        return false;
                    }
                    a.next();
                }
                (None, Some(&&(_, f))) => {
                    if f < 0 {
                        return false;
                    }
                    b.next();
                }
                (Some(&&(i, e)), Some(&&(j, f))) => match i.cmp(&j) {
                    Ordering::Less => {
                        if e > 0 {
                            return false;
                        }
                        a.next();
                    }
                    Ordering::Greater => {
                        if f < 0 {
                            return false;
                        }
                        b.next();
                    }
                    Ordering::Equal => {
                        if e > f {
                            return false;
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(&&(_, e)), None) => return e.cmp(&0),
                (None, Some(&&(_, f))) => return 0.cmp(&f),
                (Some(&&(i, e)), Some(&&(j, f))) => match i.cmp(&j) {
                    Ordering::Less => return e.cmp(&0),
                    Ordering::Greater => return 0.cmp(&f),
                    Ordering::Equal => {
                        if e != f {
                            return e.cmp(&f);
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

/// Image of a variable under [`LaurentPolynomial::map_variables`].
#[derive(Debug, Clone, PartialEq)]
pub enum VarImage {
    Var(String),
    Const(BigRational),
}

#[derive(Debug, Clone)]
pub struct LaurentPolynomial {
    ambient: Arc<Ambient>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl PartialEq for LaurentPolynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ambient(&self.ambient, &other.ambient) && self.terms == other.terms
    }
}

impl Eq for LaurentPolynomial {}

impl Ord for LaurentPolynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        if !same_ambient(&self.ambient, &other.ambient) {
            return self.ambient.names.cmp(&other.ambient.names);
        }
        self.terms.iter().cmp(other.terms.iter())
    }
}

impl PartialOrd for LaurentPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl LaurentPolynomial {
    pub fn zero(ambient: &Arc<Ambient>) -> Self {
        Self { ambient: ambient.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ambient: &Arc<Ambient>) -> Self {
        Self::constant(ambient, BigRational::one())
    }

    pub fn constant(ambient: &Arc<Ambient>, c: BigRational) -> Self {
        Self::from_terms(ambient, [(Monomial::one(), c)])
    }

    pub fn integer(ambient: &Arc<Ambient>, c: i64) -> Self {
        Self::constant(ambient, BigRational::from_integer(c.into()))
    }

    pub fn var(ambient: &Arc<Ambient>, name: &str) -> Result<Self> {
        let i = ambient
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(ambient, i))
    }

    /// # Panics
    /// If `index` is not a variable of `ambient`.
    pub fn var_at(ambient: &Arc<Ambient>, index: usize) -> Self {
        assert!(index < ambient.len(), "variable index {index} out of range");
        Self::from_terms(ambient, [(Monomial::var(index), BigRational::one())])
    }

    pub fn monomial(ambient: &Arc<Ambient>, monomial: Monomial, coeff: BigRational) -> Self {
        Self::from_terms(ambient, [(monomial, coeff)])
    }

    /// Sums the given terms into canonical form.
    pub fn from_terms<I>(ambient: &Arc<Ambient>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            if let Some(&(i, _)) = m.0.last() {
                assert!(i < ambient.len(), "monomial refers to variable {i} outside the ambient");
            }
            add_term(&mut map, m, c);
        }
        Self { ambient: ambient.clone(), terms: map }
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// Leading term under the canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// True when no variable carries a negative exponent.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&(_, e)| e >= 0))
    }

    /// Names of variables that occur with a negative exponent in some term.
    pub fn negative_exponent_vars(&self) -> Vec<&str> {
        let mut idx: Vec<usize> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().filter(|&&(_, e)| e < 0).map(|&(i, _)| i))
            .collect();
        idx.sort_unstable();
        idx.dedup();
        idx.into_iter().map(|i| self.ambient.name(i)).collect()
    }

    pub fn as_monomial(&self) -> Option<(&Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if same_ambient(&self.ambient, &other.ambient) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: self.ambient.describe(),
                right: other.ambient.describe(),
            })
        }
    }

    pub fn combine(&self, other: &Self, op: RingOp) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(match op {
            RingOp::Add => self.add_unchecked(other, false),
            RingOp::Sub => self.add_unchecked(other, true),
            RingOp::Mul => self.mul_unchecked(other),
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, RingOp::Add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, RingOp::Sub)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.combine(other, RingOp::Mul)
    }

    fn add_unchecked(&self, other: &Self, negate: bool) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), if negate { -c } else { c.clone() });
        }
        Self { ambient: self.ambient.clone(), terms }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                add_term(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        Self { ambient: self.ambient.clone(), terms }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ambient);
        }
        Self {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &BigRational) -> Self {
        Self {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ambient);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Integer power; negative exponents are only available for single-term
    /// polynomials (the units of the Laurent ring).
    pub fn powi(&self, n: i64) -> Result<Self> {
        if n >= 0 {
            return Ok(self.pow(u32::try_from(n).map_err(|_| Error::Parse(format!("exponent {n} too large")))?));
        }
        let Some((m, c)) = self.as_monomial() else {
            return Err(if self.is_zero() {
                Error::DivideByZero
            } else {
                Error::NotDivisible { dividend: "1".into(), divisor: self.to_string() }
            });
        };
        let inv = Self::monomial(&self.ambient, m.inverse(), c.recip());
        inv.powi(-n)
    }

    /// Returns `q` with `q * divisor == self` when such a Laurent polynomial
    /// exists.
    ///
    /// Both operands are first cleared to polynomials with no monomial factor;
    /// then leading terms are eliminated under the canonical order. With a
    /// single exact divisor the leading monomial of the divisor must divide
    /// the leading monomial of every intermediate remainder, so the first
    /// failure proves non-divisibility.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        self.check_ambient(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivideByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.ambient));
        }
        if let Some((m, c)) = divisor.as_monomial() {
            return Ok(self.mul_term(&m.inverse(), &c.recip()));
        }

        let (num_shift, num) = self.clear_monomial_factor();
        let (den_shift, den) = divisor.clear_monomial_factor();
        let (den_lead, den_coeff) = den.leading_term().expect("nonzero divisor");
        let (den_lead, den_coeff) = (den_lead.clone(), den_coeff.clone());

        let mut rem = num;
        let mut quot = BTreeMap::new();
        while let Some((lead, coeff)) = rem.leading_term() {
            if !den_lead.divides(lead) {
                return Err(Error::NotDivisible {
                    dividend: self.to_string(),
                    divisor: divisor.to_string(),
                });
            }
            let m = lead.mul(&den_lead.inverse());
            let c = coeff / &den_coeff;
            rem = rem.add_unchecked(&den.mul_term(&m, &c), true);
            add_term(&mut quot, m, c);
        }
        let quot = Self { ambient: self.ambient.clone(), terms: quot };
        Ok(quot.mul_term(&num_shift.mul(&den_shift.inverse()), &BigRational::one()))
    }

    /// Splits `self = shift * rest` where `rest` is a polynomial not divisible
    /// by any variable.
    fn clear_monomial_factor(&self) -> (Monomial, Self) {
        let mut vars: Vec<usize> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(i, _)| i)).collect();
        vars.sort_unstable();
        vars.dedup();
        let shift = Monomial(
            vars.into_iter()
                .map(|i| (i, self.terms.keys().map(|m| m.exponent(i)).min().unwrap_or(0)))
                .filter(|&(_, e)| e != 0)
                .collect(),
        );
        let rest = self.mul_term(&shift.inverse(), &BigRational::one());
        (shift, rest)
    }

    /// Substitutes rational values for some variables; unassigned variables
    /// survive and the ambient is unchanged.
    pub fn specialize(&self, assignment: &BTreeMap<String, BigRational>) -> Result<Self> {
        let mut by_index = HashMap::with_capacity(assignment.len());
        for (name, value) in assignment {
            let i = self
                .ambient
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            by_index.insert(i, value);
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::with_capacity(m.0.len());
            for &(i, e) in &m.0 {
                match by_index.get(&i) {
                    Some(v) => coeff *= rational_pow(v, e, self.ambient.name(i))?,
                    None => rest.push((i, e)),
                }
            }
            add_term(&mut terms, Monomial(rest), coeff);
        }
        Ok(Self { ambient: self.ambient.clone(), terms })
    }

    /// Ring map into another ambient determined by the image of each source
    /// variable name.
    pub fn map_variables<F>(&self, target: &Arc<Ambient>, mut image: F) -> Result<Self>
    where
        F: FnMut(&str) -> Result<VarImage>,
    {
        let mut images = Vec::with_capacity(self.ambient.len());
        for name in self.ambient.names() {
            images.push(match image(name)? {
                VarImage::Var(t) => Ok(target
                    .index_of(&t)
                    .ok_or_else(|| Error::UnknownVariable(t.clone()))?),
                VarImage::Const(c) => Err(c),
            });
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut pairs = Vec::with_capacity(m.0.len());
            for &(i, e) in &m.0 {
                match &images[i] {
                    Ok(j) => pairs.push((*j, e)),
                    Err(v) => coeff *= rational_pow(v, e, self.ambient.name(i))?,
                }
            }
            add_term(&mut terms, Monomial::from_pairs(pairs), coeff);
        }
        Ok(Self { ambient: target.clone(), terms })
    }

    /// Evaluates at a point given in ambient order.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.ambient.len() {
            return Err(Error::Parse(format!(
                "evaluation point has {} coordinates, ambient has {}",
                point.len(),
                self.ambient.len()
            )));
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(i, e) in &m.0 {
                t *= rational_pow(&point[i], e, self.ambient.name(i))?;
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn to_json_terms(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(m, c)| TermRecord {
                coeff_num: c.numer().clone(),
                coeff_den: c.denom().clone(),
                exponents: m
                    .0
                    .iter()
                    .map(|&(i, e)| (self.ambient.name(i).to_string(), e))
                    .collect(),
            })
            .collect()
    }

    pub fn from_json_terms(ambient: &Arc<Ambient>, records: &[TermRecord]) -> Result<Self> {
        let mut terms = Vec::with_capacity(records.len());
        for r in records {
            if r.coeff_den.is_zero() {
                return Err(Error::DivideByZero);
            }
            let mut pairs = Vec::with_capacity(r.exponents.len());
            for (name, &e) in &r.exponents {
                let i = ambient
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                pairs.push((i, e));
            }
            terms.push((
                Monomial::from_pairs(pairs),
                BigRational::new(r.coeff_num.clone(), r.coeff_den.clone()),
            ));
        }
        Ok(Self::from_terms(ambient, terms))
    }

    /// Parses an expression such as `(x1 + x2)/x1 - 3/2*x2^-1`.
    pub fn parse(ambient: &Arc<Ambient>, src: &str) -> Result<Self> {
        let mut p = Parser { ambient, src: src.as_bytes(), pos: 0 };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::Parse(format!("unexpected input at offset {} in `{src}`", p.pos)));
        }
        Ok(v)
    }
}

fn add_term(map: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn rational_pow(v: &BigRational, e: i64, name: &str) -> Result<BigRational> {
    if e < 0 && v.is_zero() {
        return Err(Error::ZeroToNegativePower(name.to_string()));
    }
    let n = i32::try_from(e).map_err(|_| Error::Parse(format!("exponent {e} too large")))?;
    Ok(num_traits::Pow::pow(v, n))
}

macro_rules! impl_op {
    ($trait:ident, $method:ident, $op:expr) => {
        impl std::ops::$trait<&LaurentPolynomial> for &LaurentPolynomial {
            type Output = LaurentPolynomial;
            /// # Panics
            /// On ambient mismatch; use the `checked_*` methods to get an error instead.
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                self.combine(rhs, $op).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

impl_op!(Add, add, RingOp::Add);
impl_op!(Sub, sub, RingOp::Sub);
impl_op!(Mul, mul, RingOp::Mul);

impl std::ops::Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono: Vec<String> = m
                .0
                .iter()
                .map(|&(i, e)| {
                    let name = self.ambient.name(i);
                    if e == 1 { name.to_string() } else { format!("{name}^{e}") }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// One serialized term: `coeff_num / coeff_den * prod(var^exp)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    #[serde(with = "json_bigint")]
    pub coeff_num: BigInt,
    #[serde(with = "json_bigint")]
    pub coeff_den: BigInt,
    pub exponents: BTreeMap<String, i64>,
}

/// Integers are written as JSON numbers when they fit in `i64`, otherwise as
/// decimal strings.
mod json_bigint {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(i) => s.serialize_i64(i),
            None => s.serialize_str(&v.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .or_else(|| n.as_u64().map(BigInt::from))
                .ok_or_else(|| D::Error::custom(format!("non-integer coefficient {n}"))),
            serde_json::Value::String(s) => s.parse().map_err(D::Error::custom),
            other => Err(D::Error::custom(format!("expected integer, got {other}"))),
        }
    }
}

struct Parser<'a> {
    ambient: &'a Arc<Ambient>,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at offset {} in `{}`",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn expr(&mut self) -> Result<LaurentPolynomial> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPolynomial> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' { &acc * &rhs } else { acc.exact_divide(&rhs)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<LaurentPolynomial> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let n = self.integer()?;
            let n = n.to_i64().ok_or_else(|| self.err("exponent too large"))?;
            return base.powi(if neg { -n } else { n });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<LaurentPolynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(LaurentPolynomial::constant(self.ambient, BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                LaurentPolynomial::var(self.ambient, name)
            }
            _ => Err(self.err("expected number, variable or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn amb(n: usize) -> Arc<Ambient> {
        Ambient::new((1..=n).map(|i| format!("x{i}"))).unwrap()
    }

    fn p(a: &Arc<Ambient>, s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(a, s).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn combine_examples() {
        let a = amb(2);
        assert_eq!(p(&a, "x1").combine(&p(&a, "x2"), RingOp::Add).unwrap(), p(&a, "x2 + x1"));
        assert_eq!(
            p(&a, "x1 + 1").combine(&p(&a, "x1 - 1"), RingOp::Mul).unwrap(),
            p(&a, "x1^2 - 1")
        );
        assert!(p(&a, "x1^-1").combine(&p(&a, "x1"), RingOp::Mul).unwrap().is_one());
    }

    #[test]
    fn ambient_mismatch_names_both_lists() {
        let a = amb(2);
        let b = Ambient::new(["y1", "y2"]).unwrap();
        let err = p(&a, "x1").checked_add(&LaurentPolynomial::var(&b, "y1").unwrap()).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("x1, x2") && msg.contains("y1, y2"), "{msg}");
    }

    #[test]
    fn exact_divide_examples() {
        let a = amb(2);
        assert_eq!(p(&a, "x1*x2 + x1").exact_divide(&p(&a, "x1")).unwrap(), p(&a, "x2 + 1"));
        assert_eq!(p(&a, "x1^2 - 1").exact_divide(&p(&a, "x1 - 1")).unwrap(), p(&a, "x1 + 1"));
        assert!(matches!(
            p(&a, "x1 + x2").exact_divide(&p(&a, "x1 - x2")),
            Err(Error::NotDivisible { .. })
        ));
        assert!(matches!(p(&a, "x1").exact_divide(&p(&a, "0")), Err(Error::DivideByZero)));
    }

    #[test]
    fn exact_divide_with_laurent_shifts() {
        let a = amb(3);
        // (x1 + x2)(x2 - x3) / x3^2 divided by (x1 + x2)/x1
        let num = p(&a, "(x1 + x2)*(x2 - x3)*x3^-2");
        let den = p(&a, "(x1 + x2)*x1^-1");
        assert_eq!(num.exact_divide(&den).unwrap(), p(&a, "x1*(x2 - x3)*x3^-2"));
    }

    #[test]
    fn not_divisible_after_clearing() {
        let a = amb(2);
        // (x1 + 1) does not divide x1^2 + 1
        assert!(p(&a, "x1^2 + 1").exact_divide(&p(&a, "x1 + 1")).is_err());
        // but a monomial multiple of a divisible polynomial stays divisible
        assert_eq!(
            p(&a, "(x1^2 - 1)*x2^-3").exact_divide(&p(&a, "x1*x2 + x2")).unwrap(),
            p(&a, "(x1 - 1)*x2^-4")
        );
    }

    #[test]
    fn specialize_examples() {
        let a = amb(2);
        let one: BTreeMap<String, BigRational> = [("x1".to_string(), q(1))].into();
        assert_eq!(p(&a, "(x1 + x2)/x1").specialize(&one).unwrap(), p(&a, "1 + x2"));
        assert!(p(&a, "x1 - 1").specialize(&one).unwrap().is_zero());
        let zero: BTreeMap<String, BigRational> = [("x2".to_string(), q(0))].into();
        assert!(matches!(
            p(&a, "x1*x2^-1").specialize(&zero),
            Err(Error::ZeroToNegativePower(v)) if v == "x2"
        ));
        // positive powers of a zeroed variable just vanish
        assert_eq!(p(&a, "x1*x2 + x1").specialize(&zero).unwrap(), p(&a, "x1"));
    }

    #[test]
    fn canonical_order_is_dense_lex() {
        let a = amb(3);
        let f = p(&a, "x3^5 + x2 + x1 + x1*x3 + 1");
        let shown = f.to_string();
        assert_eq!(shown, "x1*x3 + x1 + x2 + x3^5 + 1");
        let g = p(&a, "x2^-1 + 2");
        assert_eq!(g.to_string(), "2 + x2^-1");
    }

    #[test]
    fn json_terms_round_trip_and_big_integers() {
        let a = amb(2);
        let big = BigRational::new(BigInt::from(10).pow(30), BigInt::from(7));
        let f = &p(&a, "x1*x2^-2 - 3/4") + &LaurentPolynomial::constant(&a, big);
        let json = serde_json::to_string(&f.to_json_terms()).unwrap();
        assert!(json.contains("\"coeff_num\":\"3999999999999999999999999999979\""), "{json}");
        let records: Vec<TermRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(LaurentPolynomial::from_json_terms(&a, &records).unwrap(), f);
    }

    #[test]
    fn parser_rejects_garbage() {
        let a = amb(2);
        assert!(LaurentPolynomial::parse(&a, "x1 +").is_err());
        assert!(LaurentPolynomial::parse(&a, "y1").is_err());
        assert!(LaurentPolynomial::parse(&a, "(x1").is_err());
        assert!(LaurentPolynomial::parse(&a, "x1 x2").is_err());
    }

    #[test]
    fn map_variables_into_other_ambient() {
        let a = amb(3);
        let b = Ambient::new(["y1", "y2"]).unwrap();
        let f = p(&a, "x1*x2 + x3^-1");
        let g = f
            .map_variables(&b, |name| {
                Ok(match name {
                    "x1" => VarImage::Const(q(1)),
                    "x2" => VarImage::Var("y2".into()),
                    _ => VarImage::Var("y1".into()),
                })
            })
            .unwrap();
        assert_eq!(g, LaurentPolynomial::parse(&b, "y2 + y1^-1").unwrap());
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = Vec<(Vec<i64>, i64, i64)>> {
        prop::collection::vec(
            (prop::collection::vec(-2i64..=3, nvars), -5i64..=5, 1i64..=4),
            0..=6,
        )
    }

    fn build(a: &Arc<Ambient>, spec: &[(Vec<i64>, i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            a,
            spec.iter().map(|(e, n, d)| {
                (
                    Monomial::from_pairs(e.iter().copied().enumerate()),
                    BigRational::new((*n).into(), (*d).into()),
                )
            }),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(x in arb_poly(5), y in arb_poly(5), z in arb_poly(5)) {
            let a = amb(5);
            let (x, y, z) = (build(&a, &x), build(&a, &y), build(&a, &z));
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert!((&x - &x).is_zero());
        }

        #[test]
        fn exact_divide_inverts_multiplication(x in arb_poly(4), y in arb_poly(4)) {
            let a = amb(4);
            let (x, y) = (build(&a, &x), build(&a, &y));
            prop_assume!(!y.is_zero());
            prop_assert_eq!((&x * &y).exact_divide(&y).unwrap(), x);
        }

        #[test]
        fn specialize_is_a_ring_homomorphism(
            x in arb_poly(4),
            y in arb_poly(4),
            vals in prop::collection::vec((1i64..=5, 1i64..=3, any::<bool>()), 2),
        ) {
            let a = amb(4);
            let (x, y) = (build(&a, &x), build(&a, &y));
            let s: BTreeMap<String, BigRational> = vals
                .iter()
                .enumerate()
                .map(|(i, (n, d, neg))| {
                    let v = BigRational::new((*n).into(), (*d).into());
                    (format!("x{}", i + 2), if *neg { -v } else { v })
                })
                .collect();
            let lhs = (&x * &y).specialize(&s).unwrap();
            let rhs = &x.specialize(&s).unwrap() * &y.specialize(&s).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn json_round_trip(x in arb_poly(3)) {
            let a = amb(3);
            let x = build(&a, &x);
            let json = serde_json::to_string(&x.to_json_terms()).unwrap();
            let back: Vec<TermRecord> = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(LaurentPolynomial::from_json_terms(&a, &back).unwrap(), x);
        }
    }
}
