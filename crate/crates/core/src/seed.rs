//! Seeds: an exchange quiver together with one cluster variable per vertex,
//! every variable written as a Laurent polynomial in a fixed ambient (usually
//! the initial cluster).

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{Ambient, LaurentPolynomial, TermRecord};
use crate::quiver::ExchangeQuiver;
use crate::weyl::{CartanDatum, CartanJson, Word};

#[derive(Debug, Clone, PartialEq)]
pub struct Seed {
    quiver: ExchangeQuiver,
    ambient: Arc<Ambient>,
    vars: Vec<LaurentPolynomial>,
    labels: Vec<String>,
    frozen_invertible: bool,
    cartan: Option<CartanDatum>,
    word: Option<Word>,
}

/// Result of [`Seed::enumerate_clusters`].
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterEnumeration {
    pub variables: BTreeSet<LaurentPolynomial>,
    /// Seeds reached, counted up to simultaneous relabelling of vertices.
    pub seed_count: usize,
}

type SeedKey = (Vec<LaurentPolynomial>, Vec<bool>, Vec<Vec<i64>>);

impl Seed {
    /// Initial seed with variables `x{v}` for every vertex `v`.
    pub fn initial(quiver: ExchangeQuiver) -> Self {
        Self::initial_with_prefix(quiver, "x")
    }

    pub fn initial_with_prefix(quiver: ExchangeQuiver, prefix: &str) -> Self {
        let names: Vec<String> = quiver.vertices().iter().map(|v| format!("{prefix}{v}")).collect();
        let ambient = Ambient::new(names.clone()).expect("vertex labels are distinct");
        let vars = (0..names.len()).map(|i| LaurentPolynomial::var_at(&ambient, i)).collect();
        Self {
            quiver,
            ambient,
            vars,
            labels: names,
            frozen_invertible: false,
            cartan: None,
            word: None,
        }
    }

    pub fn from_parts(
        quiver: ExchangeQuiver,
        ambient: Arc<Ambient>,
        vars: Vec<LaurentPolynomial>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if vars.len() != quiver.len() || labels.len() != quiver.len() {
            return Err(Error::MalformedQuiver(format!(
                "{} vertices but {} variables and {} labels",
                quiver.len(),
                vars.len(),
                labels.len()
            )));
        }
        if let Some(v) = vars.iter().find(|v| v.ambient() != &ambient) {
            return Err(Error::AmbientMismatch {
                left: ambient.names().join(", "),
                right: v.ambient().names().join(", "),
            });
        }
        Ok(Self { quiver, ambient, vars, labels, frozen_invertible: false, cartan: None, word: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.quiver.len() {
            return Err(Error::MalformedQuiver("label count differs from vertex count".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn with_origin(mut self, cartan: CartanDatum, word: Word) -> Self {
        self.cartan = Some(cartan);
        self.word = Some(word);
        self
    }

    pub fn with_frozen_invertible(mut self, yes: bool) -> Self {
        self.frozen_invertible = yes;
        self
    }

    pub fn quiver(&self) -> &ExchangeQuiver {
        &self.quiver
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn vars(&self) -> &[LaurentPolynomial] {
        &self.vars
    }

    pub fn var(&self, v: usize) -> Option<&LaurentPolynomial> {
        self.quiver.row_of(v).map(|r| &self.vars[r])
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.quiver.row_of(v).map(|r| self.labels[r].as_str())
    }

    pub fn frozen_invertible(&self) -> bool {
        self.frozen_invertible
    }

    pub fn cartan(&self) -> Option<&CartanDatum> {
        self.cartan.as_ref()
    }

    pub fn word(&self) -> Option<&Word> {
        self.word.as_ref()
    }

    /// The two monomials of the exchange relation at `k`, read from column
    /// `k`: `(prod_{b_ik > 0} x_i^{b_ik}, prod_{b_ik < 0} x_i^{-b_ik})`.
    /// Empty products are 1.
    pub fn exchange_binomial(&self, k: usize) -> Result<(LaurentPolynomial, LaurentPolynomial)> {
        if !self.quiver.contains(k) {
            return Err(Error::UnknownVertex(k));
        }
        let col = self.quiver.col_of(k).ok_or(Error::FrozenVertex(k))?;
        let mut pos = LaurentPolynomial::one(&self.ambient);
        let mut neg = LaurentPolynomial::one(&self.ambient);
        for (r, row) in self.quiver.matrix().iter().enumerate() {
            let b = row[col];
            if b > 0 {
                pos = &pos * &self.vars[r].pow(b as u32);
            } else if b < 0 {
                neg = &neg * &self.vars[r].pow((-b) as u32);
            }
        }
        Ok((pos, neg))
    }

    /// Mutation at `k`: the quiver mutates and `x_k` is replaced by
    /// `(P + Q) / x_k`, an exact Laurent division. A `NotDivisible` error here
    /// means the Laurent phenomenon was violated, i.e. a bug upstream.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let quiver = self.quiver.mutate(k)?;
        let (p, q) = self.exchange_binomial(k)?;
        let r = self.quiver.row_of(k).expect("checked by mutate");
        let new_var = (&p + &q).exact_divide(&self.vars[r])?;
        let mut vars = self.vars.clone();
        vars[r] = new_var;
        let mut labels = self.labels.clone();
        labels[r] = mutated_label(&labels[r]);
        Ok(Self { quiver, vars, labels, ..self.clone() })
    }

    /// Left-to-right fold of [`Seed::mutate`]; errors carry the 1-based
    /// position of the failing step.
    pub fn mutate_sequence(&self, ks: &[usize]) -> Result<Self> {
        let mut s = self.clone();
        for (pos, &k) in ks.iter().enumerate() {
            s = s.mutate(k).map_err(|e| Error::MutationFailed {
                position: pos + 1,
                vertex: k,
                source: Box::new(e),
            })?;
        }
        Ok(s)
    }

    /// Ambient variables held by frozen vertices (frozen variables never
    /// change under mutation, so they are read off the current cluster).
    pub fn frozen_ambient_vars(&self) -> BTreeSet<usize> {
        self.quiver
            .frozen()
            .into_iter()
            .filter_map(|v| {
                let (m, c) = self.var(v)?.as_monomial()?;
                match m.exponents() {
                    [(i, 1)] if num_traits::One::is_one(c) => Some(*i),
                    _ => None,
                }
            })
            .collect()
    }

    /// Whether `f` lies in the ring where cluster variables are expected to
    /// live: Laurent in the mutable initial variables and polynomial in the
    /// frozen ones, or fully Laurent when `frozen_invertible` is set.
    pub fn is_laurent_member(&self, f: &LaurentPolynomial) -> bool {
        if self.frozen_invertible {
            return f.ambient() == &self.ambient;
        }
        let frozen = self.frozen_ambient_vars();
        f.ambient() == &self.ambient
            && f.terms().all(|(m, _)| m.exponents().iter().all(|&(i, e)| e >= 0 || !frozen.contains(&i)))
    }

    fn key(&self) -> SeedKey {
        let n = self.quiver.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.vars[a].cmp(&self.vars[b]));
        let vs = self.quiver.vertices();
        (
            order.iter().map(|&r| self.vars[r].clone()).collect(),
            order.iter().map(|&r| self.quiver.is_mutable(vs[r])).collect(),
            order
                .iter()
                .map(|&r| order.iter().map(|&c| self.quiver.arrows(vs[r], vs[c])).collect())
                .collect(),
        )
    }

    /// Breadth-first closure under mutation up to `depth` steps. Seeds are
    /// identified up to relabelling (sorted cluster plus quiver), so the
    /// result does not depend on traversal order.
    pub fn enumerate_clusters(&self, depth: usize) -> Result<ClusterEnumeration> {
        let mut seen: BTreeSet<SeedKey> = BTreeSet::from([self.key()]);
        let mut variables: BTreeSet<LaurentPolynomial> = self.vars.iter().cloned().collect();
        let mut frontier = vec![self.clone()];
        for _ in 0..depth {
            let mut next = Vec::new();
            for s in &frontier {
                for &k in s.quiver.mutable() {
                    let t = s.mutate(k)?;
                    if seen.insert(t.key()) {
                        variables.extend(t.vars.iter().cloned());
                        next.push(t);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Ok(ClusterEnumeration { variables, seed_count: seen.len() })
    }

    pub fn to_dot(&self) -> String {
        self.quiver.to_dot(Some(&self.labels))
    }

    pub fn to_json(&self) -> SeedJson {
        SeedJson {
            cartan: self.cartan.as_ref().map(CartanJson::from),
            word: self.word.clone(),
            vertices: self.quiver.vertices().to_vec(),
            mutable: self.quiver.mutable().to_vec(),
            b: self.quiver.matrix().to_vec(),
            ambient: Some(self.ambient.names().to_vec()),
            vars: self.vars.iter().map(LaurentPolynomial::to_json_terms).collect(),
            labels: self.labels.clone(),
            frozen_invertible: self.frozen_invertible,
        }
    }

    pub fn from_json(j: &SeedJson) -> Result<Self> {
        let quiver = ExchangeQuiver::new(j.vertices.clone(), j.mutable.clone(), j.b.clone())?;
        let names = j
            .ambient
            .clone()
            .unwrap_or_else(|| j.vertices.iter().map(|v| format!("x{v}")).collect());
        let ambient = Ambient::new(names)?;
        let vars = j
            .vars
            .iter()
            .map(|t| LaurentPolynomial::from_json_terms(&ambient, t))
            .collect::<Result<Vec<_>>>()?;
        let mut s = Self::from_parts(quiver, ambient, vars, j.labels.clone())?;
        s.frozen_invertible = j.frozen_invertible;
        s.cartan = j.cartan.as_ref().map(CartanDatum::try_from).transpose()?;
        s.word = j.word.clone();
        Ok(s)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("seed JSON serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }
}

fn mutated_label(label: &str) -> String {
    match label.strip_suffix('\'') {
        Some(orig) if !orig.ends_with('\'') => orig.to_string(),
        _ => format!("{label}'"),
    }
}

/// Serialized seed. `b` is the row-major `I x I_uf` matrix; `vars[r]` holds
/// the terms of the variable at `vertices[r]` over `ambient`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<CartanJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Word>,
    pub vertices: Vec<usize>,
    pub mutable: Vec<usize>,
    pub b: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<Vec<String>>,
    pub vars: Vec<Vec<TermRecord>>,
    pub labels: Vec<String>,
    #[serde(default)]
    pub frozen_invertible: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Seed {
        Seed::initial(ExchangeQuiver::new(vec![1, 2], vec![1, 2], vec![vec![0, 1], vec![-1, 0]]).unwrap())
    }

    fn p(s: &Seed, e: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(s.ambient(), e).unwrap()
    }

    #[test]
    fn a2_first_mutations() {
        let s = a2();
        let s1 = s.mutate(1).unwrap();
        assert_eq!(s1.var(1).unwrap(), &p(&s, "(1 + x2)/x1"));
        let s12 = s1.mutate(2).unwrap();
        assert_eq!(s12.var(2).unwrap(), &p(&s, "(x1 + x2 + 1)/(x1*x2)"));
    }

    #[test]
    fn frozen_mutation_fails() {
        let q = ExchangeQuiver::new(vec![1, 2], vec![1], vec![vec![0], vec![1]]).unwrap();
        assert!(matches!(Seed::initial(q).mutate(2), Err(Error::FrozenVertex(2))));
    }

    #[test]
    fn pentagon_returns_swapped() {
        let s = a2();
        let t = s.mutate_sequence(&[1, 2, 1, 2, 1]).unwrap();
        assert_eq!(t.var(1).unwrap(), s.var(2).unwrap());
        assert_eq!(t.var(2).unwrap(), s.var(1).unwrap());
        assert_eq!(s.mutate_sequence(&[]).unwrap(), s);
        assert_eq!(s.mutate_sequence(&[1, 1]).unwrap().vars(), s.vars());
        assert_eq!(s.mutate_sequence(&[1, 1]).unwrap().quiver(), s.quiver());
    }

    #[test]
    fn sequence_errors_carry_position() {
        let q = ExchangeQuiver::new(vec![1, 2], vec![1], vec![vec![0], vec![1]]).unwrap();
        let err = Seed::initial(q).mutate_sequence(&[1, 1, 2]).unwrap_err();
        assert!(matches!(err, Error::MutationFailed { position: 3, vertex: 2, .. }), "{err}");
    }

    #[test]
    fn enumerate_examples() {
        let e = a2().enumerate_clusters(5).unwrap();
        assert_eq!(e.variables.len(), 5);
        assert_eq!(e.seed_count, 5);

        let one = Seed::initial(ExchangeQuiver::new(vec![1], vec![1], vec![vec![0]]).unwrap());
        let e = one.enumerate_clusters(2).unwrap();
        assert_eq!(e.variables.len(), 2);
        assert!(e.variables.contains(&p(&one, "2/x1")));

        let e = a2().enumerate_clusters(0).unwrap();
        assert_eq!(e.variables.len(), 2);
        assert_eq!(e.seed_count, 1);
    }

    #[test]
    fn exchange_relation_holds_after_mutation() {
        let q = ExchangeQuiver::new(
            vec![1, 2, 3],
            vec![1, 2],
            vec![vec![0, 2], vec![-2, 0], vec![1, -1]],
        )
        .unwrap();
        let s = Seed::initial(q);
        for k in [1, 2] {
            let (pp, qq) = s.exchange_binomial(k).unwrap();
            let t = s.mutate(k).unwrap();
            assert_eq!(s.var(k).unwrap() * t.var(k).unwrap(), &pp + &qq);
        }
    }

    #[test]
    fn frozen_variables_stay_polynomial() {
        let q = ExchangeQuiver::new(vec![1, 2, 3], vec![1, 2], vec![vec![0, 1], vec![-1, 0], vec![1, 0]]).unwrap();
        let s = Seed::initial(q);
        let t = s.mutate_sequence(&[1, 2, 1, 2]).unwrap();
        for v in t.vars() {
            assert!(t.is_laurent_member(v), "{v}");
        }
        let inv = p(&s, "x3^-1");
        assert!(!s.is_laurent_member(&inv));
        assert!(s.clone().with_frozen_invertible(true).is_laurent_member(&inv));
    }

    #[test]
    fn json_round_trip() {
        let s = a2()
            .mutate_sequence(&[1, 2])
            .unwrap()
            .with_origin(CartanDatum::type_a(2), Word(vec![1, 2]));
        let back = Seed::from_json_str(&s.to_json_string()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn labels_toggle_under_mutation() {
        let s = a2();
        assert_eq!(s.mutate(1).unwrap().label(1), Some("x1'"));
        assert_eq!(s.mutate_sequence(&[1, 1]).unwrap().label(1), Some("x1"));
    }
}
