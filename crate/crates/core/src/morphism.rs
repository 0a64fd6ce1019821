//! Cluster morphisms between Laurent rings of seeds.
//!
//! A morphism is stored as a partial vertex map `I -> I'`; vertices without
//! an image form the kill set `F` and their variables are sent to 1.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{Ambient, LaurentPolynomial, VarImage};
use crate::quiver::ExchangeQuiver;
use crate::seed::{Seed, SeedJson};

/// Quiver plus the names of its initial variables (`names[r]` belongs to
/// `quiver.vertices()[r]`).
#[derive(Debug, Clone, PartialEq)]
pub struct SeedAmbient {
    quiver: ExchangeQuiver,
    ambient: Arc<Ambient>,
}

impl SeedAmbient {
    pub fn new(quiver: ExchangeQuiver, ambient: Arc<Ambient>) -> Result<Self> {
        if quiver.len() != ambient.len() {
            return Err(Error::MalformedQuiver(format!(
                "{} vertices but {} variable names",
                quiver.len(),
                ambient.len()
            )));
        }
        Ok(Self { quiver, ambient })
    }

    /// Variables named `{prefix}{v}`.
    pub fn with_prefix(quiver: ExchangeQuiver, prefix: &str) -> Self {
        let ambient = Ambient::new(quiver.vertices().iter().map(|v| format!("{prefix}{v}")))
            .expect("vertex labels are distinct");
        Self { quiver, ambient }
    }

    /// Uses the seed's own ambient when its cluster is the ambient's
    /// variables in vertex order, otherwise fresh names `x{v}`.
    pub fn from_seed(seed: &Seed) -> Self {
        let aligned = seed.ambient().len() == seed.vars().len()
            && seed.vars().iter().enumerate().all(|(r, v)| *v == LaurentPolynomial::var_at(seed.ambient(), r));
        if aligned {
            Self { quiver: seed.quiver().clone(), ambient: seed.ambient().clone() }
        } else {
            Self::with_prefix(seed.quiver().clone(), "x")
        }
    }

    pub fn quiver(&self) -> &ExchangeQuiver {
        &self.quiver
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.quiver.row_of(v).map(|r| self.ambient.name(r))
    }

    pub fn var(&self, v: usize) -> Option<LaurentPolynomial> {
        self.quiver.row_of(v).map(|r| LaurentPolynomial::var_at(&self.ambient, r))
    }

    /// The initial seed over this ambient.
    pub fn seed(&self) -> Seed {
        let vars = (0..self.ambient.len()).map(|r| LaurentPolynomial::var_at(&self.ambient, r)).collect();
        Seed::from_parts(self.quiver.clone(), self.ambient.clone(), vars, self.ambient.names().to_vec())
            .expect("aligned by construction")
    }

    /// Equality up to the order in which vertices are listed.
    pub fn same_as(&self, other: &Self) -> bool {
        let q = &self.quiver;
        let p = &other.quiver;
        let vs: BTreeSet<usize> = q.vertices().iter().copied().collect();
        vs == p.vertices().iter().copied().collect()
            && vs.iter().all(|&v| q.is_mutable(v) == p.is_mutable(v) && self.name(v) == other.name(v))
            && vs.iter().all(|&i| vs.iter().all(|&j| q.arrows(i, j) == p.arrows(i, j)))
    }

    fn restrict(&self, keep: &BTreeSet<usize>) -> Result<Self> {
        let quiver = self.quiver.full_subquiver(keep)?;
        let names: Vec<String> = quiver.vertices().iter().map(|&v| self.name(v).unwrap().to_string()).collect();
        Self::new(quiver, Ambient::new(names)?)
    }
}

/// First failing check of [`ClusterMorphism::validate`], in check order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum MorphismViolation {
    /// A vertex is neither killed nor sent to a target vertex.
    Condition1 { vertex: usize, detail: String },
    NotInjective { first: usize, second: usize, image: usize },
    /// A mutable vertex lands on a frozen one.
    Condition2a { vertex: usize, image: usize },
    /// `b_ij * b'_{phi(i) phi(j)} < 0` between surviving mutable vertices.
    Condition3 { i: usize, j: usize, b: i64, b_prime: i64 },
    /// `b_ij != b'_{phi(i) phi(j)}`.
    Transport { i: usize, j: usize, b: i64, b_prime: i64 },
    /// The image of a surviving mutable vertex has an arrow to a vertex
    /// outside the image.
    Isolation { vertex: usize, image: usize, outside: usize, b_prime: i64 },
}

impl std::error::Error for MorphismViolation {}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Condition1 { vertex, detail } => write!(f, "condition 1 at vertex {vertex}: {detail}"),
            Self::NotInjective { first, second, image } => {
                write!(f, "vertices {first} and {second} both map to {image}")
            }
            Self::Condition2a { vertex, image } => {
                write!(f, "condition 2a: mutable vertex {vertex} maps to frozen vertex {image}")
            }
            Self::Condition3 { i, j, b, b_prime } => {
                write!(f, "condition 3: b[{i},{j}] = {b} but b'[phi({i}),phi({j})] = {b_prime}")
            }
            Self::Transport { i, j, b, b_prime } => {
                write!(f, "matrix transport: b[{i},{j}] = {b} but b'[phi({i}),phi({j})] = {b_prime}")
            }
            Self::Isolation { vertex, image, outside, b_prime } => write!(
                f,
                "image {image} of mutable vertex {vertex} is joined to {outside} outside the image (b' = {b_prime})"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClusterMorphism {
    source: SeedAmbient,
    target: SeedAmbient,
    map: BTreeMap<usize, Option<usize>>,
}

/// The four elementary kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Elementary {
    /// Freeze `F ⊆ I_uf` of the given seed; the morphism runs from the
    /// frozen copy to the given seed.
    Freezing(BTreeSet<usize>),
    /// Permutation of `I` preserving `I_uf`, applied to the given source.
    Similarity(BTreeMap<usize, usize>),
    /// Kill `F ⊆ I` of the given source.
    Deleting(BTreeSet<usize>),
    /// Embed the full subseed on `I ∖ H` into the given seed; `H` must have
    /// no arrows to the rest.
    Embedding(BTreeSet<usize>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub kill: BTreeSet<usize>,
    pub sigma: BTreeMap<usize, usize>,
    pub freeze: BTreeSet<usize>,
    pub embed: BTreeSet<usize>,
    /// Factors in application order: deleting, similarity, embedding,
    /// freezing.
    pub factors: [ClusterMorphism; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecompositionJson {
    #[serde(rename = "F")]
    pub kill: BTreeSet<usize>,
    pub sigma: BTreeMap<usize, usize>,
    #[serde(rename = "E")]
    pub freeze: BTreeSet<usize>,
    #[serde(rename = "H")]
    pub embed: BTreeSet<usize>,
}

impl Decomposition {
    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            kill: self.kill.clone(),
            sigma: self.sigma.clone(),
            freeze: self.freeze.clone(),
            embed: self.embed.clone(),
        }
    }
}

impl ClusterMorphism {
    /// Unchecked constructor; see [`ClusterMorphism::validate`].
    pub fn new(source: SeedAmbient, target: SeedAmbient, map: BTreeMap<usize, Option<usize>>) -> Self {
        Self { source, target, map }
    }

    pub fn new_validated(source: SeedAmbient, target: SeedAmbient, map: BTreeMap<usize, Option<usize>>) -> Result<Self> {
        let m = Self::new(source, target, map);
        m.validate().map_err(Error::InvalidMorphism)?;
        Ok(m)
    }

    pub fn identity(seed: &SeedAmbient) -> Self {
        let map = seed.quiver.vertices().iter().map(|&v| (v, Some(v))).collect();
        Self::new(seed.clone(), seed.clone(), map)
    }

    pub fn source(&self) -> &SeedAmbient {
        &self.source
    }

    pub fn target(&self) -> &SeedAmbient {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<usize, Option<usize>> {
        &self.map
    }

    pub fn image_of(&self, v: usize) -> Option<usize> {
        self.map.get(&v).copied().flatten()
    }

    pub fn kill_set(&self) -> BTreeSet<usize> {
        self.map.iter().filter(|(_, j)| j.is_none()).map(|(&i, _)| i).collect()
    }

    fn image_set(&self) -> BTreeSet<usize> {
        self.map.values().flatten().copied().collect()
    }

    /// Built from the seed it is anchored to: the target for freezing and
    /// embedding, the source for similarity and deleting.
    pub fn make_elementary(kind: &Elementary, seed: &SeedAmbient) -> Result<Self> {
        match kind {
            Elementary::Freezing(f) => Self::freezing(seed, f),
            Elementary::Similarity(s) => Self::similarity(seed, s, None),
            Elementary::Deleting(f) => Self::deleting(seed, f),
            Elementary::Embedding(h) => Self::embedding(seed, h),
        }
    }

    pub fn freezing(target: &SeedAmbient, f: &BTreeSet<usize>) -> Result<Self> {
        if let Some(v) = f.iter().find(|v| !target.quiver.is_mutable(**v)) {
            return Err(Error::HypothesisViolated(format!("freezing set contains non-mutable vertex {v}")));
        }
        let source = SeedAmbient::new(target.quiver.freeze(f)?, target.ambient.clone())?;
        let map = target.quiver.vertices().iter().map(|&v| (v, Some(v))).collect();
        Ok(Self::new(source, target.clone(), map))
    }

    /// Relabels the source by `sigma`. With `names` the target variables are
    /// named `{names}{v}`; otherwise vertex `v` of the target carries the name
    /// the source gave to `v`.
    pub fn similarity(source: &SeedAmbient, sigma: &BTreeMap<usize, usize>, names: Option<&str>) -> Result<Self> {
        let vs: BTreeSet<usize> = source.quiver.vertices().iter().copied().collect();
        let dom: BTreeSet<usize> = sigma.keys().copied().collect();
        let img: BTreeSet<usize> = sigma.values().copied().collect();
        if dom != vs || img != vs {
            return Err(Error::HypothesisViolated("similarity must permute the vertex set".into()));
        }
        if let Some(v) = source.quiver.mutable().iter().find(|v| !source.quiver.is_mutable(sigma[v])) {
            return Err(Error::HypothesisViolated(format!(
                "similarity sends mutable {v} to frozen {}",
                sigma[v]
            )));
        }
        match names {
            Some(prefix) => Self::relabelling(source, sigma, |v| format!("{prefix}{v}")),
            None => Self::relabelling(source, sigma, |v| source.name(v).unwrap().to_string()),
        }
    }

    fn relabelling(
        source: &SeedAmbient,
        sigma: &BTreeMap<usize, usize>,
        name_of: impl Fn(usize) -> String,
    ) -> Result<Self> {
        let quiver = source.quiver.relabel(sigma)?;
        let ambient = Ambient::new(quiver.vertices().iter().map(|&v| name_of(v)))?;
        let target = SeedAmbient::new(quiver, ambient)?;
        let map = sigma.iter().map(|(&i, &j)| (i, Some(j))).collect();
        Ok(Self::new(source.clone(), target, map))
    }

    pub fn deleting(source: &SeedAmbient, f: &BTreeSet<usize>) -> Result<Self> {
        if let Some(v) = f.iter().find(|v| !source.quiver.contains(**v)) {
            return Err(Error::UnknownVertex(*v));
        }
        let keep: BTreeSet<usize> = source.quiver.vertices().iter().copied().filter(|v| !f.contains(v)).collect();
        let target = source.restrict(&keep)?;
        let map = source.quiver.vertices().iter().map(|&v| (v, (!f.contains(&v)).then_some(v))).collect();
        Ok(Self::new(source.clone(), target, map))
    }

    pub fn embedding(target: &SeedAmbient, h: &BTreeSet<usize>) -> Result<Self> {
        if let Some(v) = h.iter().find(|v| !target.quiver.contains(**v)) {
            return Err(Error::UnknownVertex(*v));
        }
        let q = &target.quiver;
        let keep: BTreeSet<usize> = q.vertices().iter().copied().filter(|v| !h.contains(v)).collect();
        for &i in h {
            for &j in &keep {
                let b = q.arrows(i, j);
                if b != 0 {
                    return Err(Error::HypothesisViolated(format!(
                        "embedding needs b[{i},{j}] = 0 across the cut, found {b}"
                    )));
                }
            }
        }
        let source = target.restrict(&keep)?;
        let map = keep.iter().map(|&v| (v, Some(v))).collect();
        Ok(Self::new(source, target.clone(), map))
    }

    /// Every violation found, in check order.
    pub fn violations(&self) -> Vec<MorphismViolation> {
        let sq = &self.source.quiver;
        let tq = &self.target.quiver;
        let mut out = Vec::new();

        for &k in self.map.keys() {
            if !sq.contains(k) {
                out.push(MorphismViolation::Condition1 { vertex: k, detail: "not a source vertex".into() });
            }
        }
        for &v in sq.vertices() {
            match self.map.get(&v) {
                None => out.push(MorphismViolation::Condition1 {
                    vertex: v,
                    detail: "neither killed nor mapped".into(),
                }),
                Some(Some(j)) if !tq.contains(*j) => out.push(MorphismViolation::Condition1 {
                    vertex: v,
                    detail: format!("image {j} is not a target vertex"),
                }),
                _ => {}
            }
        }

        let mut preimage: BTreeMap<usize, usize> = BTreeMap::new();
        for &v in sq.vertices() {
            if let Some(j) = self.image_of(v) {
                if let Some(&u) = preimage.get(&j) {
                    out.push(MorphismViolation::NotInjective { first: u, second: v, image: j });
                } else {
                    preimage.insert(j, v);
                }
            }
        }

        let live = |v: usize| self.image_of(v).filter(|j| tq.contains(*j));
        let live_mutable: Vec<(usize, usize)> =
            sq.mutable().iter().filter_map(|&i| live(i).map(|j| (i, j))).collect();
        for &(i, j) in &live_mutable {
            if !tq.is_mutable(j) {
                out.push(MorphismViolation::Condition2a { vertex: i, image: j });
            }
        }

        for &(i, pi) in &live_mutable {
            for &(j, pj) in &live_mutable {
                let b = sq.arrows(i, j);
                let bp = tq.arrows(pi, pj);
                if b * bp < 0 {
                    out.push(MorphismViolation::Condition3 { i, j, b, b_prime: bp });
                }
            }
        }

        for &i in sq.vertices() {
            let Some(pi) = live(i) else { continue };
            for &(j, pj) in &live_mutable {
                let b = sq.arrows(i, j);
                let bp = tq.arrows(pi, pj);
                if b != bp {
                    out.push(MorphismViolation::Transport { i, j, b, b_prime: bp });
                }
            }
        }

        let image = self.image_set();
        for &(i, pi) in &live_mutable {
            for &h in tq.vertices().iter().filter(|h| !image.contains(h)) {
                let bp = tq.arrows(h, pi);
                if bp != 0 {
                    out.push(MorphismViolation::Isolation { vertex: i, image: pi, outside: h, b_prime: bp });
                }
            }
        }
        out
    }

    pub fn validate(&self) -> std::result::Result<(), MorphismViolation> {
        match self.violations().into_iter().next() {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }

    /// `x_i -> 1` on the kill set, `x_i -> y_{phi(i)}` elsewhere.
    pub fn apply(&self, f: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        if f.ambient() != &self.source.ambient {
            return Err(Error::AmbientMismatch {
                left: self.source.ambient.names().join(", "),
                right: f.ambient().names().join(", "),
            });
        }
        let verts = self.source.quiver.vertices();
        f.map_variables(&self.target.ambient, |name| {
            let r = self.source.ambient.index_of(name).expect("same ambient");
            let v = verts[r];
            Ok(match self.map.get(&v).copied().flatten() {
                Some(j) => VarImage::Var(
                    self.target.name(j).ok_or(Error::UnknownVertex(j))?.to_string(),
                ),
                None => VarImage::Const(BigRational::one()),
            })
        })
    }

    /// `self` followed by `next`; validation is re-run on the result.
    pub fn then(&self, next: &Self) -> Result<Self> {
        if !self.target.same_as(&next.source) {
            return Err(Error::NotComposable("target of the first is not the source of the second".into()));
        }
        let map = self.map.iter().map(|(&i, j)| (i, j.and_then(|j| next.image_of(j)))).collect();
        Self::new_validated(self.source.clone(), next.target.clone(), map)
    }

    /// Same source and target and the same image of every initial variable.
    pub fn equal_on_generators(&self, other: &Self) -> Result<bool> {
        if !self.source.same_as(&other.source) || !self.target.same_as(&other.target) {
            return Ok(false);
        }
        for &v in self.source.quiver.vertices() {
            let x = self.source.var(v).unwrap();
            let ours = self.apply(&x)?;
            let x_other = other.source.var(v).unwrap();
            let theirs = other.apply(&x_other)?;
            if ours.to_string() != theirs.to_string() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Factors `phi` as freezing after embedding after similarity after
    /// deleting, with `F` the kill set, `E = I'_uf ∖ phi(I_uf)` and
    /// `H = I' ∖ phi(I)`. Each factor is built by its elementary constructor
    /// and validated, and the composite is compared with `phi` on generators.
    pub fn decompose(&self) -> Result<Decomposition> {
        self.validate().map_err(Error::InvalidMorphism)?;
        let tq = &self.target.quiver;
        let kill = self.kill_set();
        let sigma: BTreeMap<usize, usize> = self.map.iter().filter_map(|(&i, j)| j.map(|j| (i, j))).collect();
        let image = self.image_set();
        let mutable_image: BTreeSet<usize> = self
            .source
            .quiver
            .mutable()
            .iter()
            .filter_map(|&i| self.image_of(i))
            .collect();
        let freeze: BTreeSet<usize> = tq.mutable().iter().copied().filter(|v| !mutable_image.contains(v)).collect();
        let embed: BTreeSet<usize> = tq.vertices().iter().copied().filter(|v| !image.contains(v)).collect();

        let del = Self::deleting(&self.source, &kill)?;
        let sim = Self::relabelling(&del.target, &sigma, |v| self.target.name(v).unwrap().to_string())?;
        let frz = Self::freezing(&self.target, &freeze)?;
        let emb = Self::embedding(&frz.source, &embed)?;
        let factors = [del, sim, emb, frz];
        for (name, f) in ["deleting", "similarity", "embedding", "freezing"].iter().zip(&factors) {
            if let Err(v) = f.validate() {
                return Err(Error::Inconsistent(format!("{name} factor is not a cluster morphism: {v}")));
            }
        }
        let composite = factors[0].then(&factors[1])?.then(&factors[2])?.then(&factors[3])?;
        if !composite.equal_on_generators(self)? {
            return Err(Error::Inconsistent("recomposed factors differ from the morphism".into()));
        }
        Ok(Decomposition { kill, sigma, freeze, embed, factors })
    }

    /// Whether `f` lies in the kernel. Computed twice: by applying the
    /// morphism, and by setting the killed variables to 1 (the rest of the
    /// map is a renaming of variables, so that is zero exactly on the kernel).
    pub fn kernel_contains(&self, f: &LaurentPolynomial) -> Result<bool> {
        let by_apply = self.apply(f)?.is_zero();
        let ones: BTreeMap<String, BigRational> = self
            .kill_set()
            .into_iter()
            .map(|v| (self.source.name(v).unwrap().to_string(), BigRational::one()))
            .collect();
        let by_specialize = f.specialize(&ones)?.is_zero();
        if by_apply != by_specialize {
            return Err(Error::Inconsistent(format!(
                "kernel test disagrees on {f}: apply gives {by_apply}, specialization gives {by_specialize}"
            )));
        }
        Ok(by_apply)
    }

    /// `phi(I)`, checked to be cut off from the rest of the target quiver.
    pub fn image_component(&self) -> Result<BTreeSet<usize>> {
        let image = self.image_set();
        let tq = &self.target.quiver;
        for &m in image.iter().filter(|v| tq.is_mutable(**v)) {
            for &h in tq.vertices().iter().filter(|h| !image.contains(h)) {
                if tq.arrows(m, h) != 0 {
                    return Err(Error::NotAComponent(format!("mutable {m} in the image is joined to {h}")));
                }
            }
        }
        for comp in tq.components() {
            let inside = comp.iter().filter(|v| image.contains(v)).count();
            if inside != 0 && inside != comp.len() {
                return Err(Error::NotAComponent(format!(
                    "component {comp:?} meets the image only partly (frozen vertices couple across the cut)"
                )));
            }
        }
        Ok(image)
    }

    /// Compares `phi(mu_seq(s))` with `mu_{phi(seq)}` of the target seed whose
    /// cluster is `phi(s)` on the image and the initial variables elsewhere.
    pub fn commutes_with_mutation(&self, seq: &[usize], s: &Seed) -> Result<bool> {
        let kill = self.kill_set();
        if let Some(&k) = seq.iter().find(|k| kill.contains(k)) {
            return Err(Error::KilledVertexInSequence(k));
        }
        if s.ambient() != &self.source.ambient || s.quiver() != &self.source.quiver {
            return Err(Error::AmbientMismatch {
                left: self.source.ambient.names().join(", "),
                right: s.ambient().names().join(", "),
            });
        }
        let tq = &self.target.quiver;
        let mut tvars: Vec<LaurentPolynomial> =
            (0..tq.len()).map(|r| LaurentPolynomial::var_at(&self.target.ambient, r)).collect();
        for (r, &v) in s.quiver().vertices().iter().enumerate() {
            if let Some(j) = self.image_of(v) {
                tvars[tq.row_of(j).unwrap()] = self.apply(&s.vars()[r])?;
            }
        }
        let t = Seed::from_parts(tq.clone(), self.target.ambient.clone(), tvars, self.target.ambient.names().to_vec())?;
        let image_seq: Vec<usize> = seq.iter().map(|&k| self.image_of(k).unwrap()).collect();
        let left = s.mutate_sequence(seq)?;
        let right = t.mutate_sequence(&image_seq)?;
        for (r, &v) in left.quiver().vertices().iter().enumerate() {
            if let Some(j) = self.image_of(v) {
                if self.apply(&left.vars()[r])? != *right.var(j).unwrap() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> MorphismJson {
        MorphismJson {
            source_ref: SeedRef::Inline(Box::new(self.source.seed().to_json())),
            target_ref: SeedRef::Inline(Box::new(self.target.seed().to_json())),
            map: self.map.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SeedRef {
    Path(String),
    Inline(Box<SeedJson>),
}

impl SeedRef {
    pub fn load(&self, base: Option<&Path>) -> Result<SeedAmbient> {
        let json = match self {
            SeedRef::Inline(j) => (**j).clone(),
            SeedRef::Path(p) => {
                let path = match base {
                    Some(b) if Path::new(p).is_relative() => b.join(p),
                    _ => Path::new(p).to_path_buf(),
                };
                serde_json::from_str(&std::fs::read_to_string(path)?)?
            }
        };
        Ok(SeedAmbient::from_seed(&Seed::from_json(&json)?))
    }
}

/// `map` sends each source vertex to a target vertex or to `null` (killed).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub source_ref: SeedRef,
    pub target_ref: SeedRef,
    pub map: BTreeMap<usize, Option<usize>>,
}

impl MorphismJson {
    /// Paths are resolved against `base` when relative.
    pub fn resolve(&self, base: Option<&Path>) -> Result<ClusterMorphism> {
        Ok(ClusterMorphism::new(self.source_ref.load(base)?, self.target_ref.load(base)?, self.map.clone()))
    }
}
