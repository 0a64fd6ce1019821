//! Type-A oracle: generalized minors as minors of a generic unitriangular
//! matrix, and checks of seed exchange relations against them.
//!
//! In type `A_r` the Weyl group acts on `{1, ..., r+1}` with `s_j` swapping
//! `j` and `j+1`, and `D(u w_i, v w_i)` is the minor with rows `v{1..i}` and
//! columns `u{1..i}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{Ambient, LaurentPolynomial};
use crate::richardson::{build_richardson_seed, vertex_label};
use crate::seed::Seed;
use crate::weyl::{CartanDatum, RootVector, Weight, Word};

/// `(r+1) x (r+1)` upper unitriangular matrix with independent entries
/// `x_ab` above the diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitriangularGeneric {
    r: usize,
    ambient: Arc<Ambient>,
    /// `(a, b)` of each ambient variable, in ambient order.
    positions: Vec<(usize, usize)>,
}

impl UnitriangularGeneric {
    pub fn new(r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::IndexOutOfRange { index: 0, max: 0 });
        }
        let positions: Vec<(usize, usize)> =
            (1..=r + 1).flat_map(|a| (a + 1..=r + 1).map(move |b| (a, b))).collect();
        let name = |a: usize, b: usize| if r < 9 { format!("x{a}{b}") } else { format!("x{a}_{b}") };
        let ambient = Ambient::new(positions.iter().map(|&(a, b)| name(a, b)))?;
        Ok(Self { r, ambient, positions })
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn size(&self) -> usize {
        self.r + 1
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    /// Entry `(a, b)`, 1-based.
    pub fn entry(&self, a: usize, b: usize) -> LaurentPolynomial {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => LaurentPolynomial::one(&self.ambient),
            std::cmp::Ordering::Greater => LaurentPolynomial::zero(&self.ambient),
            std::cmp::Ordering::Less => {
                let idx = self.positions.iter().position(|&p| p == (a, b)).unwrap();
                LaurentPolynomial::var_at(&self.ambient, idx)
            }
        }
    }

    /// The matrix with the variables replaced by `point` (ambient order).
    pub fn numeric(&self, point: &[BigRational]) -> Vec<Vec<BigRational>> {
        let n = self.size();
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for (a, row) in m.iter_mut().enumerate() {
            row[a] = BigRational::one();
        }
        for (&(a, b), v) in self.positions.iter().zip(point) {
            m[a - 1][b - 1] = v.clone();
        }
        m
    }

    /// Root-lattice degree of `x_ab`: `a_a + ... + a_{b-1}`.
    pub fn degree(&self, var_index: usize) -> RootVector {
        let (a, b) = self.positions[var_index];
        RootVector((1..=self.r).map(|j| i64::from(a <= j && j < b)).collect())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinorExpression {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: LaurentPolynomial,
}

impl MinorExpression {
    /// Common root-lattice degree of all monomials, or `None` when the minor
    /// is zero or not homogeneous.
    pub fn weight(&self, m: &UnitriangularGeneric) -> Option<RootVector> {
        let mut out: Option<RootVector> = None;
        for (mono, _) in self.value.terms() {
            let mut d = vec![0i64; m.rank()];
            for &(idx, e) in mono.exponents() {
                for (slot, g) in d.iter_mut().zip(&m.degree(idx).0) {
                    *slot += e * g;
                }
            }
            match &out {
                None => out = Some(RootVector(d)),
                Some(prev) if prev.0 != d => return None,
                _ => {}
            }
        }
        out
    }
}

/// `w{set}` under the permutation action, sorted. The last letter acts first.
pub fn act_on_set(word: &Word, set: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = set
        .iter()
        .map(|&x| {
            word.0.iter().rev().fold(x, |x, &j| {
                if x == j {
                    j + 1
                } else if x == j + 1 {
                    j
                } else {
                    x
                }
            })
        })
        .collect();
    out.sort_unstable();
    out
}

fn check_inputs(r: usize, words: &[&Word], i: usize) -> Result<CartanDatum> {
    let c = CartanDatum::type_a(r);
    for w in words {
        if !c.is_reduced(w)? {
            return Err(Error::NotReduced(w.0.clone()));
        }
    }
    if i == 0 || i > r {
        return Err(Error::IndexOutOfRange { index: i, max: r });
    }
    Ok(c)
}

/// `D(u w_i, v w_i)` in type `A_r`.
pub fn generalized_minor(r: usize, u: &Word, v: &Word, i: usize) -> Result<MinorExpression> {
    check_inputs(r, &[u, v], i)?;
    let m = UnitriangularGeneric::new(r)?;
    minor_of(&m, u, v, i)
}

fn minor_of(m: &UnitriangularGeneric, u: &Word, v: &Word, i: usize) -> Result<MinorExpression> {
    let base: Vec<usize> = (1..=i).collect();
    let rows = act_on_set(v, &base);
    let cols = act_on_set(u, &base);
    let sub: Vec<Vec<LaurentPolynomial>> =
        rows.iter().map(|&a| cols.iter().map(|&b| m.entry(a, b)).collect()).collect();
    let value = determinant(m.ambient(), sub)?;
    Ok(MinorExpression { rows, cols, value })
}

/// `vw_i - uw_i` in simple-root coordinates.
pub fn expected_weight(r: usize, u: &Word, v: &Word, i: usize) -> Result<RootVector> {
    let c = check_inputs(r, &[u, v], i)?;
    let w = Weight::fundamental(r, i);
    Ok(c.act(v, &w)?.sub(&c.act(u, &w)?).root_part())
}

/// Determinant by cofactor expansion up to size 3 and fraction-free
/// (Bareiss) elimination above.
pub fn determinant(ambient: &Arc<Ambient>, mut a: Vec<Vec<LaurentPolynomial>>) -> Result<LaurentPolynomial> {
    let n = a.len();
    match n {
        0 => return Ok(LaurentPolynomial::one(ambient)),
        1 => return Ok(a[0][0].clone()),
        2 => return Ok(&(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0])),
        3 => {
            let minor = |r: usize, s: usize, t: usize, u: usize| &(&a[r][s] * &a[t][u]) - &(&a[r][u] * &a[t][s]);
            let t0 = &a[0][0] * &minor(1, 1, 2, 2);
            let t1 = &a[0][1] * &minor(1, 0, 2, 2);
            let t2 = &a[0][2] * &minor(1, 0, 2, 1);
            return Ok(&(&t0 - &t1) + &t2);
        }
        _ => {}
    }
    let mut negate = false;
    let mut prev = LaurentPolynomial::one(ambient);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(LaurentPolynomial::zero(ambient)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_divide(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}

/// Rational determinant by Gaussian elimination.
pub fn numeric_determinant(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            a.swap(k, p);
            det = -det;
        }
        det *= &a[k][k];
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

/// Minor labels of the seed for `v = w^{<=p}`, realized as polynomials.
pub fn realize_seed(r: usize, word: &Word, p: usize) -> Result<BTreeMap<usize, MinorExpression>> {
    check_inputs(r, &[word], 1)?;
    if p > word.len() {
        return Err(Error::PrefixOutOfRange { p, len: word.len() });
    }
    let m = UnitriangularGeneric::new(r)?;
    (p + 1..=word.len())
        .map(|l| {
            let lab = vertex_label(word, p, l);
            Ok((l, minor_of(&m, &lab.u, &lab.v, lab.i)?))
        })
        .collect()
}

/// The seed of [`build_richardson_seed`] with its cluster replaced by the
/// realizing minors.
pub fn realized_seed(r: usize, word: &Word, p: usize) -> Result<Seed> {
    let c = CartanDatum::type_a(r);
    let formal = build_richardson_seed(&c, word, p)?;
    let minors = realize_seed(r, word, p)?;
    let m = UnitriangularGeneric::new(r)?;
    let vars = formal.quiver().vertices().iter().map(|v| minors[v].value.clone()).collect();
    Ok(Seed::from_parts(formal.quiver().clone(), m.ambient().clone(), vars, formal.labels().to_vec())?
        .with_origin(c, word.clone()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Pit,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Self::Exact),
            "pit" => Ok(Self::Pit),
            _ => Err(Error::Parse(format!("unknown mode `{s}` (expected exact or pit)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExchangeReport {
    pub word: Word,
    #[serde(default, skip_serializing_if = "is_zero_usize")]
    pub p: usize,
    pub vertex: usize,
    pub mode: Mode,
    pub result: bool,
    /// Failing evaluation point, variable name to value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<BTreeMap<String, String>>,
}

fn is_zero_usize(p: &usize) -> bool {
    *p == 0
}

/// Checks the exchange relation at `k` of the minor-realized seed for
/// `v = w^{<=p}`.
///
/// Exact: divides `P + Q` by the minor at `k`, requires a polynomial
/// quotient that equals the mutated variable, and requires `mu_k mu_k` to
/// return the original cluster. Pit: on `trials` random lines through random
/// rational points, the minors are evaluated numerically and the restricted
/// `P + Q` must be divisible by the restricted minor as a polynomial in the
/// line parameter, with equality at a further point.
pub fn verify_exchange(
    r: usize,
    word: &Word,
    p: usize,
    k: usize,
    mode: Mode,
    trials: usize,
    prng_seed: u64,
) -> Result<ExchangeReport> {
    let seed = realized_seed(r, word, p)?;
    if !seed.quiver().contains(k) {
        return Err(Error::UnknownVertex(k));
    }
    if !seed.quiver().is_mutable(k) {
        return Err(Error::FrozenVertex(k));
    }
    let (result, counterexample) = match mode {
        Mode::Exact => (exact_check(&seed, k)?, None),
        Mode::Pit => pit_check(r, word, p, k, &seed, trials, prng_seed)?,
    };
    Ok(ExchangeReport { word: word.clone(), p, vertex: k, mode, result, counterexample })
}

fn exact_check(seed: &Seed, k: usize) -> Result<bool> {
    let (pp, qq) = seed.exchange_binomial(k)?;
    let xk = seed.var(k).unwrap();
    let sum = &pp + &qq;
    let quotient = sum.exact_divide(xk).map_err(|e| Error::ExactDivisionFailed {
        vertex: k,
        detail: format!("({sum}) / ({xk}): {e}"),
    })?;
    let mutated = seed.mutate(k)?;
    let back = mutated.mutate(k)?;
    Ok(quotient.is_polynomial()
        && *mutated.var(k).unwrap() == quotient
        && &quotient * xk == sum
        && back.vars() == seed.vars())
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let den: i64 = rng.gen_range(1..=10);
    let num: i64 = rng.gen_range(-10 * den..=10 * den);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn pit_check(
    r: usize,
    word: &Word,
    p: usize,
    k: usize,
    seed: &Seed,
    trials: usize,
    prng_seed: u64,
) -> Result<(bool, Option<BTreeMap<String, String>>)> {
    let m = UnitriangularGeneric::new(r)?;
    let base_sets = |l: usize| {
        let lab = vertex_label(word, p, l);
        let base: Vec<usize> = (1..=lab.i).collect();
        (act_on_set(&lab.v, &base), act_on_set(&lab.u, &base), lab.i)
    };
    let q = seed.quiver();
    let col = q.col_of(k).unwrap();
    let column: Vec<(usize, i64)> = q
        .vertices()
        .iter()
        .zip(q.matrix())
        .map(|(&v, row)| (v, row[col]))
        .filter(|&(_, b)| b != 0)
        .collect();
    let deg_pos: usize = column.iter().filter(|c| c.1 > 0).map(|&(v, b)| b as usize * base_sets(v).2).sum();
    let deg_neg: usize = column.iter().filter(|c| c.1 < 0).map(|&(v, b)| (-b) as usize * base_sets(v).2).sum();
    let deg = deg_pos.max(deg_neg).max(base_sets(k).2);

    let eval_minor = |point: &[BigRational], l: usize| {
        let (rows, cols, _) = base_sets(l);
        let full = m.numeric(point);
        numeric_determinant(rows.iter().map(|&a| cols.iter().map(|&b| full[a - 1][b - 1].clone()).collect()).collect())
    };
    let eval = |point: &[BigRational]| {
        let mut pos = BigRational::one();
        let mut neg = BigRational::one();
        for &(v, b) in &column {
            let x = eval_minor(point, v);
            if b > 0 {
                pos *= num_traits::pow(x, b as usize);
            } else {
                neg *= num_traits::pow(x, (-b) as usize);
            }
        }
        (pos + neg, eval_minor(point, k))
    };

    let nvars = m.ambient().len();
    let mut rng = ChaCha8Rng::seed_from_u64(prng_seed);
    for _ in 0..trials {
        let mut attempts = 0;
        let (a, d) = loop {
            attempts += 1;
            if attempts > 10_000 {
                return Err(Error::Inconsistent(format!("no evaluation point avoids the zeros of the minor at {k}")));
            }
            let a: Vec<BigRational> = (0..nvars).map(|_| random_rational(&mut rng)).collect();
            let d: Vec<BigRational> = (0..nvars).map(|_| random_rational(&mut rng)).collect();
            if !eval_minor(&a, k).is_zero() {
                break (a, d);
            }
        };
        let along = |t: i64| -> Vec<BigRational> {
            let t = BigRational::from_integer(BigInt::from(t));
            a.iter().zip(&d).map(|(x, y)| x + &t * y).collect()
        };
        let samples: Vec<(BigRational, BigRational)> = (0..=deg as i64).map(|t| eval(&along(t))).collect();
        let ts: Vec<BigRational> = (0..=deg as i64).map(|t| BigRational::from_integer(BigInt::from(t))).collect();
        let num = interpolate(&ts, &samples.iter().map(|s| s.0.clone()).collect::<Vec<_>>());
        let den = interpolate(&ts, &samples.iter().map(|s| s.1.clone()).collect::<Vec<_>>());
        let extra = deg as i64 + 1;
        let (n_extra, d_extra) = eval(&along(extra));
        let ok = match poly_divide(&num, &den) {
            Some(quot) => {
                let t = BigRational::from_integer(BigInt::from(extra));
                n_extra == d_extra * horner(&quot, &t)
            }
            None => false,
        };
        if !ok {
            let point = m.ambient().names().iter().cloned().zip(a.iter().map(ToString::to_string)).collect();
            return Ok((false, Some(point)));
        }
    }
    Ok((true, None))
}

/// Coefficients (constant first) of the interpolating polynomial.
fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut coeffs = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coeffs[i] = (&coeffs[i] - &coeffs[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut out = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // out = out * (t - xs[i]) + coeffs[i]
        let mut next = vec![BigRational::zero(); n];
        for (e, c) in out.iter().enumerate() {
            if e + 1 < n {
                next[e + 1] += c;
            }
            next[e] -= c * &xs[i];
        }
        next[0] += &coeffs[i];
        out = next;
    }
    trim(out)
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn horner(p: &[BigRational], t: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c)
}

/// Quotient when `den` divides `num` exactly.
fn poly_divide(num: &[BigRational], den: &[BigRational]) -> Option<Vec<BigRational>> {
    let den = trim(den.to_vec());
    let lead = den.last()?.clone();
    let mut rem = trim(num.to_vec());
    if rem.len() < den.len() {
        return rem.is_empty().then(Vec::new);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - den.len() + 1];
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let c = rem.last().unwrap() / &lead;
        for (e, d) in den.iter().enumerate() {
            rem[shift + e] -= &c * d;
        }
        quot[shift] = c;
        rem.pop();
        rem = trim(rem);
    }
    rem.is_empty().then_some(quot)
}

/// Whether `D(u w_i, v w_i)` is a nonzero polynomial.
pub fn nonvanishing(r: usize, u: &Word, v: &Word, i: usize) -> Result<bool> {
    Ok(!generalized_minor(r, u, v, i)?.value.is_zero())
}

/// `v <= u` after projecting both to minimal representatives modulo the
/// stabilizer of `w_i`.
pub fn parabolic_leq(r: usize, u: &Word, v: &Word, i: usize) -> Result<bool> {
    let c = check_inputs(r, &[u, v], i)?;
    c.bruhat_leq(&c.min_coset_rep(v, i)?, &c.min_coset_rep(u, i)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonvanishingReport {
    pub rank: usize,
    pub u: Word,
    pub v: Word,
    pub i: usize,
    pub minor: String,
    pub nonzero: bool,
    /// `v <= u` in the Bruhat order on `W`.
    pub bruhat: bool,
    /// `v <= u` on minimal coset representatives for the stabilizer of `w_i`.
    pub parabolic_bruhat: bool,
}

pub fn nonvanishing_report(r: usize, u: &Word, v: &Word, i: usize) -> Result<NonvanishingReport> {
    let c = check_inputs(r, &[u, v], i)?;
    let m = generalized_minor(r, u, v, i)?;
    Ok(NonvanishingReport {
        rank: r,
        u: u.clone(),
        v: v.clone(),
        i,
        minor: m.value.to_string(),
        nonzero: !m.value.is_zero(),
        bruhat: c.bruhat_leq(v, u)?,
        parabolic_bruhat: parabolic_leq(r, u, v, i)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn poly(r: usize, e: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(UnitriangularGeneric::new(r).unwrap().ambient(), e).unwrap()
    }

    fn leibniz(a: &[Vec<i64>]) -> i64 {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = a.len();
        perms(n)
            .into_iter()
            .map(|p| {
                let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                let sign = if inv % 2 == 0 { 1 } else { -1 };
                sign * (0..n).map(|i| a[i][p[i]]).product::<i64>()
            })
            .sum()
    }

    #[test]
    fn minor_examples() {
        let e = Word::identity();
        assert!(generalized_minor(2, &e, &e, 1).unwrap().value.is_one());
        assert_eq!(generalized_minor(2, &w("1"), &e, 1).unwrap().value, poly(2, "x12"));
        assert_eq!(generalized_minor(2, &w("1,2"), &e, 2).unwrap().value, poly(2, "x12*x23 - x13"));
        assert!(matches!(generalized_minor(2, &w("1,1"), &e, 1), Err(Error::NotReduced(_))));
        assert!(matches!(generalized_minor(2, &e, &e, 3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn realize_examples() {
        let s = realize_seed(2, &w("1,2,1"), 0).unwrap();
        assert_eq!(s[&1].value, poly(2, "x12"));
        assert_eq!(s[&2].value, poly(2, "x12*x23 - x13"));
        assert_eq!(s[&3].value, poly(2, "x13"));
        let s = realize_seed(2, &w("1,2,1"), 1).unwrap();
        assert_eq!(s.keys().copied().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(s[&2].value, poly(2, "x12*x23 - x13"));
        assert_eq!(s[&3].value, poly(2, "x23"));
        assert_eq!(realize_seed(1, &w("1"), 0).unwrap()[&1].value, poly(1, "x12"));
    }

    #[test]
    fn exchange_examples() {
        let r = verify_exchange(2, &w("1,2,1"), 0, 1, Mode::Exact, 0, 0).unwrap();
        assert!(r.result);
        let s = realized_seed(2, &w("1,2,1"), 0).unwrap();
        assert_eq!(s.mutate(1).unwrap().var(1).unwrap(), &poly(2, "x23"));
        let r = verify_exchange(3, &w("1,2,1,3,2,1"), 0, 2, Mode::Pit, 20, 7).unwrap();
        assert!(r.result, "{r:?}");
        assert!(matches!(
            verify_exchange(2, &w("1,2,1"), 0, 2, Mode::Exact, 0, 0),
            Err(Error::FrozenVertex(2))
        ));
    }

    #[test]
    fn pit_catches_a_wrong_relation() {
        // (t+1)^2 sampled at 0, 1, 2
        let num = interpolate(
            &[0, 1, 2].map(|t| BigRational::from_integer(t.into())),
            &[1, 4, 9].map(|t| BigRational::from_integer(t.into())),
        );
        assert_eq!(num.len(), 3);
        let den = vec![BigRational::from_integer(2.into()), BigRational::one()];
        assert!(poly_divide(&num, &den).is_none());
        let den = vec![BigRational::one(), BigRational::one()];
        assert_eq!(poly_divide(&num, &den).unwrap().len(), 2);
    }

    #[test]
    fn both_modes_reject_a_corrupted_column() {
        use crate::quiver::ExchangeQuiver;
        let good = realized_seed(2, &w("1,2,1"), 0).unwrap();
        let q = ExchangeQuiver::new(vec![1, 2, 3], vec![1], vec![vec![0], vec![-2], vec![1]]).unwrap();
        let bad = Seed::from_parts(q, good.ambient().clone(), good.vars().to_vec(), good.labels().to_vec()).unwrap();
        // dividing by the monomial x12 always succeeds in the Laurent ring, but not polynomially
        assert!(!exact_check(&bad, 1).unwrap());
        let (ok, point) = pit_check(2, &w("1,2,1"), 0, 1, &bad, 5, 3).unwrap();
        assert!(!ok);
        assert_eq!(point.unwrap().len(), 3);
    }

    #[test]
    fn nonvanishing_examples() {
        let e = Word::identity();
        assert!(nonvanishing(2, &w("1"), &e, 1).unwrap());
        assert!(!nonvanishing(2, &e, &w("1"), 1).unwrap());
        assert!(nonvanishing(2, &e, &e, 1).unwrap());
        // naive Bruhat reading fails here: s2 fixes w1
        let rep = nonvanishing_report(2, &e, &w("2"), 1).unwrap();
        assert!(rep.nonzero && !rep.bruhat && rep.parabolic_bruhat);
    }

    #[test]
    fn bareiss_matches_cofactor_on_4x4() {
        let m = UnitriangularGeneric::new(4).unwrap();
        let amb = m.ambient().clone();
        let rows = [1, 2, 3, 4];
        let cols = [2, 3, 4, 5];
        let sub: Vec<Vec<LaurentPolynomial>> = rows.iter().map(|&a| cols.iter().map(|&b| m.entry(a, b)).collect()).collect();
        let bareiss = determinant(&amb, sub.clone()).unwrap();
        let mut cof = LaurentPolynomial::zero(&amb);
        for j in 0..4 {
            let minor: Vec<Vec<LaurentPolynomial>> =
                (1..4).map(|i| (0..4).filter(|&c| c != j).map(|c| sub[i][c].clone()).collect()).collect();
            let term = &sub[0][j] * &determinant(&amb, minor).unwrap();
            cof = if j % 2 == 0 { &cof + &term } else { &cof - &term };
        }
        assert_eq!(bareiss, cof);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn determinants_match_leibniz(n in 1usize..6, entries in proptest::collection::vec(-4i64..5, 36)) {
            let amb = Ambient::new(["t"]).unwrap();
            let a: Vec<Vec<i64>> = (0..n).map(|i| entries[i * 6..i * 6 + n].to_vec()).collect();
            let expected = leibniz(&a);
            let poly_m = a.iter().map(|r| r.iter().map(|&v| LaurentPolynomial::integer(&amb, v)).collect()).collect();
            prop_assert_eq!(determinant(&amb, poly_m).unwrap(), LaurentPolynomial::integer(&amb, expected));
            let num_m = a.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
            prop_assert_eq!(numeric_determinant(num_m), BigRational::from_integer(expected.into()));
        }

        #[test]
        fn symbolic_minor_evaluates_like_numeric(seed in 0u64..1000, ui in 0usize..24, vi in 0usize..24, i in 1usize..4) {
            let c = CartanDatum::type_a(3);
            let elems = c.elements_up_to_length(6);
            let (u, v) = (&elems[ui], &elems[vi]);
            let m = UnitriangularGeneric::new(3).unwrap();
            let expr = generalized_minor(3, u, v, i).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let point: Vec<BigRational> = (0..6).map(|_| random_rational(&mut rng)).collect();
            let full = m.numeric(&point);
            let sub = expr.rows.iter().map(|&a| expr.cols.iter().map(|&b| full[a - 1][b - 1].clone()).collect()).collect();
            prop_assert_eq!(expr.value.evaluate(&point).unwrap(), numeric_determinant(sub));
        }
    }

    #[test]
    fn weight_law_on_a3() {
        let c = CartanDatum::type_a(3);
        let m = UnitriangularGeneric::new(3).unwrap();
        for u in c.elements_up_to_length(6) {
            for v in c.elements_up_to_length(6) {
                for i in 1..=3 {
                    let expr = generalized_minor(3, &u, &v, i).unwrap();
                    if expr.value.is_zero() {
                        continue;
                    }
                    assert_eq!(expr.weight(&m), Some(expected_weight(3, &u, &v, i).unwrap()), "{u} {v} {i}");
                }
            }
        }
    }
}
