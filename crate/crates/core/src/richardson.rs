//! Seeds attached to a reduced word: the unipotent-cell seed for `N_w` and
//! the open Richardson seed for `v = w^{<=p}`, plus the specializing
//! morphism between them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::morphism::{ClusterMorphism, SeedAmbient};
use crate::quiver::ExchangeQuiver;
use crate::seed::Seed;
use crate::weyl::{CartanDatum, Word};

/// `D(u w_i, v w_i)` for a fundamental weight `w_i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MinorLabel {
    pub u: Word,
    pub v: Word,
    pub i: usize,
}

impl fmt::Display for MinorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({}.w{}, {}.w{})", self.u, self.i, self.v, self.i)
    }
}

/// Label of vertex `k` (1-based) in the seed for `v = w^{<=p}`:
/// `D(w^{<=k} w_{i_k}, v w_{i_k})`.
pub fn vertex_label(word: &Word, p: usize, k: usize) -> MinorLabel {
    MinorLabel { u: word.prefix(k), v: word.prefix(p), i: word.0[k - 1] }
}

/// Exchange matrix of the `N_w` seed. With `k+` the next position carrying
/// the same letter as `k`:
/// `b_kl = 1` if `k = l+`, `-1` if `l = k+`, `c_{i_k i_l}` if
/// `l < k < l+ < k+`, `-c_{i_k i_l}` if `k < l < k+ < l+`, else 0.
/// Positions with no `k+` are frozen.
pub fn nw_quiver(cartan: &CartanDatum, word: &Word) -> Result<ExchangeQuiver> {
    if !cartan.is_reduced(word)? {
        return Err(Error::NotReduced(word.0.clone()));
    }
    let n = word.len();
    let letters = &word.0;
    let next: Vec<usize> = (0..n)
        .map(|k| (k + 1..n).find(|&l| letters[l] == letters[k]).unwrap_or(usize::MAX))
        .collect();
    let mut full = vec![vec![0i64; n]; n];
    for k in 0..n {
        for l in 0..n {
            let c = cartan.entry(letters[k], letters[l]);
            full[k][l] = if k == next[l] {
                1
            } else if l == next[k] {
                -1
            } else if l < k && k < next[l] && next[l] < next[k] {
                c
            } else if k < l && l < next[k] && next[k] < next[l] {
                -c
            } else {
                0
            };
        }
    }
    let mutable: BTreeSet<usize> = (0..n).filter(|&k| next[k] != usize::MAX).map(|k| k + 1).collect();
    ExchangeQuiver::from_square((1..=n).collect(), &mutable, &full)
}

/// Initial seed for `C[N_w]`: vertices `1..=n`, variables `x{k}`, labels
/// `D(k,0)`.
pub fn build_nw_seed(cartan: &CartanDatum, word: &Word) -> Result<Seed> {
    let q = nw_quiver(cartan, word)?;
    let labels = (1..=word.len()).map(|k| format!("D({k},0)")).collect();
    Ok(Seed::initial(q).with_labels(labels)?.with_origin(cartan.clone(), word.clone()))
}

/// Seed for the open Richardson variety of `(w, v)` with `v = w^{<=p}`: the
/// full subquiver on `p+1..=n` with labels `D(w^{<=l} w_{i_l}, v w_{i_l})`.
pub fn build_richardson_seed(cartan: &CartanDatum, word: &Word, p: usize) -> Result<Seed> {
    build_richardson_seed_with_prefix(cartan, word, p, "x")
}

fn build_richardson_seed_with_prefix(cartan: &CartanDatum, word: &Word, p: usize, prefix: &str) -> Result<Seed> {
    let n = word.len();
    if p > n {
        return Err(Error::PrefixOutOfRange { p, len: n });
    }
    let full = nw_quiver(cartan, word)?;
    let keep: BTreeSet<usize> = (p + 1..=n).collect();
    let q = full.full_subquiver(&keep)?;
    let labels = (p + 1..=n).map(|l| vertex_label(word, p, l).to_string()).collect();
    Ok(Seed::initial_with_prefix(q, prefix)
        .with_labels(labels)?
        .with_origin(cartan.clone(), word.clone()))
}

/// The morphism from the `N_w` seed (variables `x_k`) to the Richardson seed
/// (variables `y_l`) sending `x_k` to 1 for `k <= p` and to `y_k` otherwise.
/// It is validated and its decomposition is checked to be
/// `([1,p], id, {}, {})`.
pub fn richardson_morphism(cartan: &CartanDatum, word: &Word, p: usize) -> Result<ClusterMorphism> {
    let source = SeedAmbient::from_seed(&build_nw_seed(cartan, word)?);
    let target = SeedAmbient::from_seed(&build_richardson_seed_with_prefix(cartan, word, p, "y")?);
    let map: BTreeMap<usize, Option<usize>> = (1..=word.len()).map(|k| (k, (k > p).then_some(k))).collect();
    let phi = ClusterMorphism::new_validated(source, target, map)?;
    let d = phi.decompose()?;
    let expected_kill: BTreeSet<usize> = (1..=p).collect();
    if d.kill != expected_kill || d.sigma.iter().any(|(a, b)| a != b) || !d.freeze.is_empty() || !d.embed.is_empty() {
        return Err(Error::Inconsistent(format!(
            "Richardson morphism decomposed as F={:?}, E={:?}, H={:?}",
            d.kill, d.freeze, d.embed
        )));
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPolynomial;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn nw_seed_a2() {
        let s = build_nw_seed(&CartanDatum::type_a(2), &w("1,2,1")).unwrap();
        let q = s.quiver();
        assert_eq!(q.vertices(), &[1, 2, 3]);
        assert_eq!(q.mutable(), &[1]);
        assert_eq!(q.b(2, 1), Some(-1));
        assert_eq!(q.b(3, 1), Some(1));
        assert_eq!(s.label(1), Some("D(1,0)"));
    }

    #[test]
    fn nw_seed_degenerate_and_a3() {
        let s = build_nw_seed(&CartanDatum::type_a(1), &w("1")).unwrap();
        assert_eq!(s.quiver().len(), 1);
        assert!(s.quiver().mutable().is_empty());

        let s = build_nw_seed(&CartanDatum::type_a(3), &w("1,2,1,3,2,1")).unwrap();
        assert_eq!(s.quiver().mutable(), &[1, 2, 3]);
        assert_eq!(s.quiver().frozen(), vec![4, 5, 6]);
        assert!(s.quiver().validate().is_ok());

        assert!(matches!(
            build_nw_seed(&CartanDatum::type_a(2), &w("1,1")),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn richardson_seed_examples() {
        let c = CartanDatum::type_a(2);
        let word = w("1,2,1");
        let s = build_richardson_seed(&c, &word, 1).unwrap();
        assert_eq!(s.quiver().vertices(), &[2, 3]);
        assert!(s.quiver().mutable().is_empty());
        assert_eq!(s.label(3), Some("D([1,2,1].w1, [1].w1)"));

        let full = build_richardson_seed(&c, &word, 0).unwrap();
        assert_eq!(full.quiver(), build_nw_seed(&c, &word).unwrap().quiver());
        assert!(build_richardson_seed(&c, &word, 3).unwrap().quiver().is_empty());
        assert!(matches!(
            build_richardson_seed(&c, &word, 4),
            Err(Error::PrefixOutOfRange { p: 4, len: 3 })
        ));
    }

    #[test]
    fn richardson_morphism_a2() {
        let phi = richardson_morphism(&CartanDatum::type_a(2), &w("1,2,1"), 1).unwrap();
        assert_eq!(phi.kill_set(), set(&[1]));
        assert_eq!(phi.image_of(2), Some(2));
        assert_eq!(phi.image_component().unwrap(), set(&[2, 3]));
        let x1x2 = LaurentPolynomial::parse(phi.source().ambient(), "x1*x2").unwrap();
        assert_eq!(phi.apply(&x1x2).unwrap().to_string(), "y2");
        let d = phi.decompose().unwrap();
        assert_eq!(d.kill, set(&[1]));
    }

    #[test]
    fn richardson_morphism_p0_is_identity_map() {
        let phi = richardson_morphism(&CartanDatum::type_a(2), &w("1,2,1"), 0).unwrap();
        assert!(phi.kill_set().is_empty());
        assert!(phi.vertex_map().iter().all(|(a, b)| Some(*a) == *b));
    }

    #[test]
    fn richardson_morphism_a3_commutes() {
        let word = w("1,2,1,3,2,1");
        let phi = richardson_morphism(&CartanDatum::type_a(3), &word, 1).unwrap();
        let s = phi.source().seed();
        assert!(phi.commutes_with_mutation(&[2, 3, 2], &s).unwrap());
        assert!(matches!(
            phi.commutes_with_mutation(&[2, 1], &s),
            Err(Error::KilledVertexInSequence(1))
        ));
    }

    #[test]
    fn prefixes_are_length_additive_and_betas_split() {
        let c = CartanDatum::type_a(3);
        let word = w("1,2,1,3,2,1");
        let betas = c.beta_roots(&word).unwrap();
        for p in 0..=word.len() {
            let v = word.prefix(p);
            assert!(c.length_additive(&word, &v).unwrap());
            let bv = c.beta_roots(&v).unwrap();
            assert_eq!(&betas[..p], &bv[..]);
            assert!(betas[p..].iter().all(|b| !bv.contains(b)));
        }
    }

    #[test]
    fn d4_seed_is_valid() {
        let c = CartanDatum::type_d4();
        let word = w("2,1,3,4,2,1,3,4,2,1,3,4");
        let s = build_nw_seed(&c, &word).unwrap();
        assert_eq!(s.quiver().frozen(), vec![9, 10, 11, 12]);
        assert!(s.quiver().validate().is_ok());
    }
}
