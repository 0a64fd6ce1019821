//! Symmetric generalized Cartan data and Weyl-group words.
//!
//! Weyl elements are carried as words in the simple reflections (letters are
//! 1-based). Length, equality and Bruhat comparisons go through the action on
//! real roots, so everything here works for any symmetric generalized Cartan
//! matrix, not only finite type.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    name: Option<String>,
    matrix: Vec<Vec<i64>>,
}

/// A word `s_{i_1} s_{i_2} ... s_{i_l}` in the simple reflections.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

/// `sum_j fundamental[j] * w_j + sum_j root[j] * a_j` (fundamental weights
/// `w_j`, simple roots `a_j`). Reflections only touch the root part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    pub fundamental: Vec<i64>,
    pub root: Vec<i64>,
}

/// Element of the root lattice in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn simple(rank: usize, letter: usize) -> Self {
        let mut v = vec![0; rank];
        v[letter - 1] = 1;
        Self(v)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| match c {
                1 => format!("a{}", j + 1),
                -1 => format!("-a{}", j + 1),
                _ => format!("{c}a{}", j + 1),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + ").replace("+ -", "- "))
        }
    }
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Self { fundamental: vec![0; rank], root: vec![0; rank] }
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.fundamental[i - 1] = 1;
        w
    }

    pub fn simple_root(rank: usize, i: usize) -> Self {
        Self::from_root(&RootVector::simple(rank, i))
    }

    pub fn from_root(r: &RootVector) -> Self {
        Self { fundamental: vec![0; r.0.len()], root: r.0.clone() }
    }

    pub fn root_part(&self) -> RootVector {
        RootVector(self.root.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            fundamental: self.fundamental.iter().zip(&other.fundamental).map(|(a, b)| a - b).collect(),
            root: self.root.iter().zip(&other.root).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, &c) in self.fundamental.iter().enumerate() {
            match c {
                0 => {}
                1 => parts.push(format!("w{}", j + 1)),
                -1 => parts.push(format!("-w{}", j + 1)),
                _ => parts.push(format!("{c}w{}", j + 1)),
            }
        }
        let r = RootVector(self.root.clone());
        if r.0.iter().any(|&c| c != 0) {
            parts.push(r.to_string());
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + ").replace("+ -", "- "))
        }
    }
}

impl Word {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w^{<=k}`: the first `k` letters.
    pub fn prefix(&self, k: usize) -> Self {
        Self(self.0[..k.min(self.0.len())].to_vec())
    }

    /// Word for the inverse element.
    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Comma-separated 1-based letters; the empty string and `e` denote the
    /// identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Self::identity());
        }
        s.split(',')
            .map(|t| {
                let t = t.trim();
                match t.parse::<usize>() {
                    Ok(0) | Err(_) => Err(Error::Parse(format!("bad letter `{t}` in word `{s}`"))),
                    Ok(v) => Ok(v),
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

impl CartanDatum {
    /// Accepts symmetric generalized Cartan matrices only.
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCartan("matrix is not square".into()));
            }
            for (j, &c) in row.iter().enumerate() {
                if i == j && c != 2 {
                    return Err(Error::InvalidCartan(format!("c_{0}{0} = {c}, expected 2", i + 1)));
                }
                if i != j && c > 0 {
                    return Err(Error::InvalidCartan(format!("c_{}{} = {c} > 0", i + 1, j + 1)));
                }
                if c != matrix[j][i] {
                    return Err(Error::InvalidCartan(format!("not symmetric at ({},{})", i + 1, j + 1)));
                }
            }
        }
        Ok(Self { name: None, matrix })
    }

    pub fn type_a(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        Self { name: Some(format!("A{n}")), matrix }
    }

    /// `D4` with branch node 2 (edges 1-2, 2-3, 2-4).
    pub fn type_d4() -> Self {
        let mut m = vec![vec![0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in &[(0, 1), (1, 2), (1, 3)] {
            m[a][b] = -1;
            m[b][a] = -1;
        }
        Self { name: Some("D4".into()), matrix: m }
    }

    /// Named presets `A1`..`A5` and `D4`.
    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "A1" | "A2" | "A3" | "A4" | "A5" => Ok(Self::type_a(name[1..].parse().expect("digit"))),
            "D4" => Ok(Self::type_d4()),
            _ => Err(Error::InvalidCartan(format!("unknown preset `{name}` (expected A1..A5 or D4)"))),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    /// `c_ij`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i - 1][j - 1]
    }

    fn check_letter(&self, letter: usize) -> Result<()> {
        if letter == 0 || letter > self.rank() {
            Err(Error::InvalidLetter { letter, rank: self.rank() })
        } else {
            Ok(())
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        w.0.iter().try_for_each(|&l| self.check_letter(l))
    }

    /// `<h_i, lambda>`.
    pub fn pairing(&self, i: usize, lambda: &Weight) -> i64 {
        lambda.fundamental[i - 1]
            + self.matrix[i - 1].iter().zip(&lambda.root).map(|(c, r)| c * r).sum::<i64>()
    }

    /// `s_i(lambda) = lambda - <h_i, lambda> a_i`.
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Weight {
        let mut out = lambda.clone();
        out.root[i - 1] -= self.pairing(i, lambda);
        out
    }

    pub fn reflect_root(&self, i: usize, beta: &RootVector) -> RootVector {
        let h: i64 = self.matrix[i - 1].iter().zip(&beta.0).map(|(c, r)| c * r).sum();
        let mut out = beta.clone();
        out.0[i - 1] -= h;
        out
    }

    /// `w(lambda)` for `w = s_{i_1} ... s_{i_l}`: the last letter acts first.
    pub fn act(&self, w: &Word, lambda: &Weight) -> Result<Weight> {
        self.check_word(w)?;
        Ok(w.0.iter().rev().fold(lambda.clone(), |acc, &i| self.reflect(i, &acc)))
    }

    pub fn act_root(&self, w: &Word, beta: &RootVector) -> Result<RootVector> {
        self.check_word(w)?;
        Ok(self.act_root_unchecked(&w.0, beta))
    }

    fn act_root_unchecked(&self, letters: &[usize], beta: &RootVector) -> RootVector {
        letters.iter().rev().fold(beta.clone(), |acc, &i| self.reflect_root(i, &acc))
    }

    /// Weights in fundamental-weight coordinates.
    pub fn to_fundamental_coords(&self, lambda: &Weight) -> Vec<i64> {
        (1..=self.rank()).map(|i| self.pairing(i, lambda)).collect()
    }

    /// `beta_k = s_{i_1} ... s_{i_{k-1}}(a_{i_k})` for every position, without
    /// a reducedness check.
    fn raw_betas(&self, letters: &[usize]) -> Vec<RootVector> {
        (0..letters.len())
            .map(|k| self.act_root_unchecked(&letters[..k], &RootVector::simple(self.rank(), letters[k])))
            .collect()
    }

    pub fn is_reduced(&self, w: &Word) -> Result<bool> {
        self.check_word(w)?;
        Ok(self.raw_betas(&w.0).iter().all(RootVector::is_positive))
    }

    fn require_reduced(&self, w: &Word) -> Result<()> {
        if self.is_reduced(w)? {
            Ok(())
        } else {
            Err(Error::NotReduced(w.0.clone()))
        }
    }

    /// `(beta_1, ..., beta_l)`; along a reduced word this lists the inversion
    /// set in the convex order the word induces.
    pub fn beta_roots(&self, w: &Word) -> Result<Vec<RootVector>> {
        self.require_reduced(w)?;
        Ok(self.raw_betas(&w.0))
    }

    /// A reduced word for the element represented by `w`.
    ///
    /// Letters are multiplied in on the right one at a time. When the running
    /// element `x` sends `a_s` negative, `-x(a_s)` is one of the betas of the
    /// current reduced word and deleting that position yields `x s`.
    pub fn reduce(&self, w: &Word) -> Result<Word> {
        self.check_word(w)?;
        let mut cur: Vec<usize> = Vec::with_capacity(w.len());
        for &s in &w.0 {
            let image = self.act_root_unchecked(&cur, &RootVector::simple(self.rank(), s));
            if image.is_positive() {
                cur.push(s);
            } else {
                let target = image.neg();
                let pos = self
                    .raw_betas(&cur)
                    .iter()
                    .position(|b| *b == target)
                    .ok_or_else(|| Error::Inconsistent(format!("no exchange position for {s} in {cur:?}")))?;
                cur.remove(pos);
            }
        }
        Ok(Word(cur))
    }

    pub fn length(&self, w: &Word) -> Result<usize> {
        Ok(self.reduce(w)?.len())
    }

    pub fn same_element(&self, a: &Word, b: &Word) -> Result<bool> {
        Ok(self.reduce(&a.reversed().concat(b))?.is_empty())
    }

    /// `l(v^{-1} w) == l(w) - l(v)`, i.e. `w = v u` with lengths adding up.
    pub fn length_additive(&self, w: &Word, v: &Word) -> Result<bool> {
        self.require_reduced(w)?;
        self.require_reduced(v)?;
        if v.len() > w.len() {
            return Ok(false);
        }
        Ok(self.length(&v.reversed().concat(w))? == w.len() - v.len())
    }

    /// `v <= w` in the Bruhat order.
    ///
    /// Uses the lifting property: with `s` the last letter of `w`
    /// (so `ws < w`), `v <= w` iff `min(v, vs) <= ws`. This is equivalent to
    /// asking for a subword of `w` that is a reduced word for `v`.
    pub fn bruhat_leq(&self, v: &Word, w: &Word) -> Result<bool> {
        self.require_reduced(v)?;
        self.require_reduced(w)?;
        let mut v = v.clone();
        let mut w = w.0.clone();
        loop {
            if v.len() > w.len() {
                return Ok(false);
            }
            let Some(s) = w.pop() else {
                return Ok(v.is_empty());
            };
            let image = self.act_root_unchecked(&v.0, &RootVector::simple(self.rank(), s));
            if image.is_negative() {
                v = self.reduce(&v.concat(&Word(vec![s])))?;
            }
        }
    }

    /// Positions `k` (1-based) whose letter does not occur again later in the
    /// word.
    pub fn frozen_set(&self, w: &Word) -> Result<BTreeSet<usize>> {
        self.require_reduced(w)?;
        Ok(last_occurrences(w))
    }

    /// Minimal-length representative of `w W_J`, where `W_J` is generated by
    /// every simple reflection except `s_keep` (the stabilizer of `w_keep`).
    pub fn min_coset_rep(&self, w: &Word, keep: usize) -> Result<Word> {
        self.check_letter(keep)?;
        let mut x = self.reduce(w)?;
        'outer: loop {
            for j in (1..=self.rank()).filter(|&j| j != keep) {
                if self.act_root_unchecked(&x.0, &RootVector::simple(self.rank(), j)).is_negative() {
                    x = self.reduce(&x.concat(&Word(vec![j])))?;
                    continue 'outer;
                }
            }
            return Ok(x);
        }
    }

    /// One reduced word for every element of length at most `max_len`, in
    /// breadth-first (length, then discovery) order.
    pub fn elements_up_to_length(&self, max_len: usize) -> Vec<Word> {
        let rho = Weight { fundamental: vec![1; self.rank()], root: vec![0; self.rank()] };
        let mut seen: HashSet<Vec<i64>> = HashSet::from([rho.root.clone()]);
        let mut out = vec![Word::identity()];
        let mut queue = VecDeque::from([Word::identity()]);
        while let Some(x) = queue.pop_front() {
            if x.len() == max_len {
                continue;
            }
            for s in 1..=self.rank() {
                if !self.act_root_unchecked(&x.0, &RootVector::simple(self.rank(), s)).is_positive() {
                    continue;
                }
                let y = x.concat(&Word(vec![s]));
                let key = w_rho(self, &y.0, &rho);
                if seen.insert(key) {
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        out
    }
}

/// `w(rho)` determines `w`: the stabilizer of a regular dominant weight is
/// trivial.
fn w_rho(c: &CartanDatum, letters: &[usize], rho: &Weight) -> Vec<i64> {
    letters.iter().rev().fold(rho.clone(), |acc, &i| c.reflect(i, &acc)).root
}

/// Positions whose letter never reappears later (1-based).
pub fn last_occurrences(w: &Word) -> BTreeSet<usize> {
    (0..w.len())
        .filter(|&k| !w.0[k + 1..].contains(&w.0[k]))
        .map(|k| k + 1)
        .collect()
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => f.write_str(n),
            None => write!(f, "{:?}", self.matrix),
        }
    }
}

/// JSON form: a preset name, or `{name?, matrix}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CartanJson {
    Preset(String),
    Matrix {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        matrix: Vec<Vec<i64>>,
    },
}

impl From<&CartanDatum> for CartanJson {
    fn from(c: &CartanDatum) -> Self {
        Self::Matrix { name: c.name.clone(), matrix: c.matrix.clone() }
    }
}

impl TryFrom<&CartanJson> for CartanDatum {
    type Error = Error;

    fn try_from(j: &CartanJson) -> Result<Self> {
        match j {
            CartanJson::Preset(name) => Self::preset(name),
            CartanJson::Matrix { name, matrix } => {
                let c = Self::new(matrix.clone())?;
                Ok(match name {
                    Some(n) => c.with_name(n.clone()),
                    None => c,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn a2() -> CartanDatum {
        CartanDatum::type_a(2)
    }

    fn a3() -> CartanDatum {
        CartanDatum::type_a(3)
    }

    fn root(v: &[i64]) -> RootVector {
        RootVector(v.to_vec())
    }

    #[test]
    fn reflect_examples() {
        let c = a2();
        let w1 = Weight::fundamental(2, 1);
        assert_eq!(c.reflect(1, &w1), w1.sub(&Weight::simple_root(2, 1)));
        assert_eq!(c.reflect(2, &w1), w1);
        let a1 = Weight::simple_root(2, 1);
        assert_eq!(c.reflect(1, &a1), Weight::from_root(&root(&[-1, 0])));
    }

    #[test]
    fn act_examples() {
        let c = a2();
        let w1 = Weight::fundamental(2, 1);
        let got = c.act(&w("1,2,1"), &w1).unwrap();
        assert_eq!(got, Weight { fundamental: vec![1, 0], root: vec![-1, -1] });
        assert_eq!(c.act(&Word::identity(), &w1).unwrap(), w1);
        assert_eq!(c.act(&w("1,1"), &w1).unwrap(), w1);
    }

    #[test]
    fn reducedness_examples() {
        let c = a2();
        assert!(c.is_reduced(&w("1,2,1")).unwrap());
        assert!(!c.is_reduced(&w("1,1")).unwrap());
        assert!(!c.is_reduced(&w("1,2,1,2")).unwrap());
        assert!(matches!(c.is_reduced(&w("3")), Err(Error::InvalidLetter { letter: 3, rank: 2 })));
    }

    #[test]
    fn beta_root_examples() {
        let c = a2();
        assert_eq!(
            c.beta_roots(&w("1,2,1")).unwrap(),
            vec![root(&[1, 0]), root(&[1, 1]), root(&[0, 1])]
        );
        assert_eq!(c.beta_roots(&w("1")).unwrap(), vec![root(&[1, 0])]);
        assert!(matches!(c.beta_roots(&w("1,1")), Err(Error::NotReduced(_))));
        // the fourth beta of the non-reduced word is negative
        assert_eq!(c.raw_betas(&[1, 2, 1, 2])[3], root(&[-1, 0]));
    }

    #[test]
    fn length_additive_examples() {
        let c = a2();
        assert!(c.length_additive(&w("1,2,1"), &w("1")).unwrap());
        assert!(c.length_additive(&w("1,2,1"), &w("1,2,1")).unwrap());
        assert!(!c.length_additive(&w("1"), &w("2")).unwrap());
        assert_eq!(c.length(&w("2,1")).unwrap(), 2);
    }

    #[test]
    fn bruhat_examples() {
        let c = a2();
        assert!(c.bruhat_leq(&w("1"), &w("1,2,1")).unwrap());
        assert!(c.bruhat_leq(&w("2"), &w("1,2,1")).unwrap());
        assert!(!c.bruhat_leq(&w("1,2,1"), &w("1")).unwrap());
        assert!(!c.bruhat_leq(&w("1,2"), &w("2,1")).unwrap());
        assert!(c.bruhat_leq(&Word::identity(), &Word::identity()).unwrap());
    }

    #[test]
    fn frozen_set_examples() {
        assert_eq!(a2().frozen_set(&w("1,2,1")).unwrap(), BTreeSet::from([2, 3]));
        assert_eq!(a2().frozen_set(&w("1")).unwrap(), BTreeSet::from([1]));
        assert_eq!(a3().frozen_set(&w("1,2,1,3,2,1")).unwrap(), BTreeSet::from([4, 5, 6]));
        assert!(a2().frozen_set(&w("2,2")).is_err());
    }

    #[test]
    fn reduce_and_equality() {
        let c = a2();
        assert_eq!(c.reduce(&w("1,2,1,2")).unwrap().len(), 2);
        assert!(c.same_element(&w("1,2,1"), &w("2,1,2")).unwrap());
        assert!(!c.same_element(&w("1,2"), &w("2,1")).unwrap());
        assert!(c.reduce(&w("1,2,1,2,1,2")).unwrap().is_empty());
    }

    #[test]
    fn group_orders() {
        assert_eq!(a2().elements_up_to_length(10).len(), 6);
        assert_eq!(a3().elements_up_to_length(10).len(), 24);
        assert_eq!(CartanDatum::type_a(4).elements_up_to_length(20).len(), 120);
        assert_eq!(CartanDatum::type_d4().elements_up_to_length(20).len(), 192);
        // affine A1: two elements of each positive length
        let aff = CartanDatum::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(aff.elements_up_to_length(5).len(), 11);
    }

    #[test]
    fn reflect_is_an_involution() {
        let c = CartanDatum::type_d4();
        for i in 1..=4 {
            let lambda = Weight { fundamental: vec![3, -1, 0, 2], root: vec![1, -2, 5, 0] };
            assert_eq!(c.reflect(i, &c.reflect(i, &lambda)), lambda);
        }
    }

    #[test]
    fn min_coset_representatives() {
        let c = a2();
        // s2 stabilizes w1
        assert_eq!(c.min_coset_rep(&w("2"), 1).unwrap(), Word::identity());
        assert_eq!(c.min_coset_rep(&w("1,2"), 1).unwrap(), w("1"));
        assert_eq!(c.min_coset_rep(&w("1,2,1"), 1).unwrap().len(), 2);
    }

    #[test]
    fn cartan_validation() {
        assert!(CartanDatum::new(vec![vec![2, -1], vec![-2, 2]]).is_err());
        assert!(CartanDatum::new(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(CartanDatum::new(vec![vec![1]]).is_err());
        assert!(CartanDatum::preset("E8").is_err());
        let c = CartanDatum::preset("A3").unwrap();
        assert_eq!(c.rank(), 3);
        assert_eq!(c.entry(1, 2), -1);
    }

    #[test]
    fn word_parsing() {
        assert_eq!(w("1, 2,1"), Word(vec![1, 2, 1]));
        assert_eq!(w(""), Word::identity());
        assert_eq!(w("e"), Word::identity());
        assert!("1,0".parse::<Word>().is_err());
        assert!("1,x".parse::<Word>().is_err());
        assert_eq!(w("1,2").to_string(), "[1,2]");
    }

    #[test]
    fn pairing_with_fundamental_weights_is_kronecker() {
        let c = CartanDatum::type_d4();
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(c.pairing(j, &Weight::fundamental(4, i)), i64::from(i == j));
            }
        }
    }
}
