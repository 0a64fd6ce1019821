//! Exchange quivers: a vertex list, a mutable subset and the `I x I_uf`
//! exchange matrix `B`. The matrix is the source of truth; arrows are derived
//! from it (`b_ij > 0` means `b_ij` arrows `i -> j`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExchangeQuiver {
    vertices: Vec<usize>,
    /// Mutable vertices in vertex order.
    mutable: Vec<usize>,
    /// `b[row][col]`, rows indexed like `vertices`, columns like `mutable`.
    b: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuiverViolation {
    /// `b_ij != -b_ji` for two mutable vertices.
    SkewSymmetry { i: usize, j: usize },
    /// A nonzero diagonal entry.
    Loop { i: usize },
}

impl std::error::Error for QuiverViolation {}

impl fmt::Display for QuiverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SkewSymmetry { i, j } => write!(f, "skew-symmetry fails at ({i},{j})"),
            Self::Loop { i } => write!(f, "nonzero diagonal entry at ({i},{i})"),
        }
    }
}

impl ExchangeQuiver {
    /// Checks shape only: distinct vertices, mutable subset of vertices,
    /// `b` of size `|vertices| x |mutable|`. The mutable list is reordered to
    /// vertex order together with the columns of `b`.
    pub fn new(vertices: Vec<usize>, mutable: Vec<usize>, b: Vec<Vec<i64>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::MalformedQuiver(format!("duplicate vertex {v}")));
            }
        }
        let mut mseen = BTreeSet::new();
        for &k in &mutable {
            if !seen.contains(&k) {
                return Err(Error::UnknownVertex(k));
            }
            if !mseen.insert(k) {
                return Err(Error::MalformedQuiver(format!("vertex {k} listed twice as mutable")));
            }
        }
        if b.len() != vertices.len() || b.iter().any(|row| row.len() != mutable.len()) {
            return Err(Error::MalformedQuiver(format!(
                "exchange matrix must be {} x {}",
                vertices.len(),
                mutable.len()
            )));
        }
        let pos: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut order: Vec<usize> = (0..mutable.len()).collect();
        order.sort_by_key(|&c| pos[&mutable[c]]);
        let sorted_mutable = order.iter().map(|&c| mutable[c]).collect();
        let b = b.into_iter().map(|row| order.iter().map(|&c| row[c]).collect()).collect();
        Ok(Self { vertices, mutable: sorted_mutable, b })
    }

    /// Builds a quiver from a full square (skew-symmetric) matrix over
    /// `vertices`, keeping the columns of the mutable vertices.
    pub fn from_square(vertices: Vec<usize>, mutable: &BTreeSet<usize>, full: &[Vec<i64>]) -> Result<Self> {
        let cols: Vec<usize> = (0..vertices.len()).filter(|&c| mutable.contains(&vertices[c])).collect();
        if full.len() != vertices.len() || full.iter().any(|r| r.len() != vertices.len()) {
            return Err(Error::MalformedQuiver("square matrix size mismatch".into()));
        }
        let b = full.iter().map(|row| cols.iter().map(|&c| row[c]).collect()).collect();
        let mutable = cols.iter().map(|&c| vertices[c]).collect();
        Self::new(vertices, mutable, b)
    }

    pub fn empty() -> Self {
        Self { vertices: Vec::new(), mutable: Vec::new(), b: Vec::new() }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn mutable(&self) -> &[usize] {
        &self.mutable
    }

    pub fn frozen(&self) -> Vec<usize> {
        self.vertices.iter().copied().filter(|v| !self.is_mutable(*v)).collect()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.row_of(v).is_some()
    }

    pub fn is_mutable(&self, v: usize) -> bool {
        self.col_of(v).is_some()
    }

    pub fn row_of(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    pub fn col_of(&self, v: usize) -> Option<usize> {
        self.mutable.iter().position(|&x| x == v)
    }

    /// Row-major `I x I_uf` matrix.
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.b
    }

    /// `b_ij` for `j` mutable; `None` when the entry is not part of the matrix.
    pub fn b(&self, i: usize, j: usize) -> Option<i64> {
        Some(self.b[self.row_of(i)?][self.col_of(j)?])
    }

    /// Net number of arrows `i -> j`, read from whichever of `b_ij`, `b_ji`
    /// exists; zero between two frozen vertices.
    pub fn arrows(&self, i: usize, j: usize) -> i64 {
        if let Some(x) = self.b(i, j) {
            x
        } else if let Some(x) = self.b(j, i) {
            -x
        } else {
            0
        }
    }

    /// Vertices coupled to `v` by a nonzero entry.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.vertices.iter().copied().filter(|&u| u != v && self.arrows(v, u) != 0).collect()
    }

    pub fn validate(&self) -> std::result::Result<(), QuiverViolation> {
        for (ci, &i) in self.mutable.iter().enumerate() {
            let ri = self.row_of(i).expect("mutable vertex is a vertex");
            if self.b[ri][ci] != 0 {
                return Err(QuiverViolation::Loop { i });
            }
            for (cj, &j) in self.mutable.iter().enumerate().skip(ci + 1) {
                let rj = self.row_of(j).expect("mutable vertex is a vertex");
                if self.b[ri][cj] != -self.b[rj][ci] {
                    return Err(QuiverViolation::SkewSymmetry { i, j });
                }
            }
        }
        Ok(())
    }

    /// Mutation at `k`, computed by both the matrix formula and the graph
    /// rule; the two must agree.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        if !self.contains(k) {
            return Err(Error::UnknownVertex(k));
        }
        if !self.is_mutable(k) {
            return Err(Error::FrozenVertex(k));
        }
        self.validate().map_err(Error::InvalidQuiver)?;
        let by_matrix = self.mutate_matrix_rule(k)?;
        let by_graph = self.mutate_graph_rule(k)?;
        if by_matrix != by_graph {
            return Err(Error::InconsistentMutation { vertex: k });
        }
        Ok(by_matrix)
    }

    /// `b'_ij = -b_ij` if `k` is `i` or `j`, else
    /// `b_ij + sgn(b_ik) max(0, b_ik b_kj)`.
    pub fn mutate_matrix_rule(&self, k: usize) -> Result<Self> {
        let ck = self.col_of(k).ok_or(Error::FrozenVertex(k))?;
        let rk = self.row_of(k).expect("mutable vertex is a vertex");
        let mut b = self.b.clone();
        for (ri, row) in b.iter_mut().enumerate() {
            for (cj, entry) in row.iter_mut().enumerate() {
                if ri == rk || cj == ck {
                    *entry = -self.b[ri][cj];
                } else {
                    let bik = self.b[ri][ck];
                    let bkj = self.b[rk][cj];
                    *entry = self.b[ri][cj] + bik.signum() * (bik * bkj).max(0);
                }
            }
        }
        Ok(Self { vertices: self.vertices.clone(), mutable: self.mutable.clone(), b })
    }

    /// The three-step rule on arrow multiplicities: compose paths through `k`,
    /// reverse arrows at `k`, cancel 2-cycles.
    pub fn mutate_graph_rule(&self, k: usize) -> Result<Self> {
        if !self.is_mutable(k) {
            return Err(Error::FrozenVertex(k));
        }
        let n = self.vertices.len();
        let kk = self.row_of(k).expect("checked");
        // count[i][j] = number of arrows i -> j
        let mut count = vec![vec![0i64; n]; n];
        for (i, &vi) in self.vertices.iter().enumerate() {
            for (j, &vj) in self.vertices.iter().enumerate() {
                let a = self.arrows(vi, vj);
                if a > 0 {
                    count[i][j] = a;
                }
            }
        }
        // (1) i -> k -> j adds count[i][k] * count[k][j] arrows i -> j
        let mut next = count.clone();
        for i in 0..n {
            for j in 0..n {
                if i != kk && j != kk && i != j {
                    next[i][j] += count[i][kk] * count[kk][j];
                }
            }
        }
        // (2) reverse arrows incident to k
        for v in 0..n {
            next[v][kk] = count[kk][v];
            next[kk][v] = count[v][kk];
        }
        // (3) remove 2-cycles
        for i in 0..n {
            for j in (i + 1)..n {
                let c = next[i][j].min(next[j][i]);
                next[i][j] -= c;
                next[j][i] -= c;
            }
        }
        let b = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, _)| {
                self.mutable
                    .iter()
                    .map(|&m| {
                        let j = self.row_of(m).expect("mutable vertex is a vertex");
                        next[i][j] - next[j][i]
                    })
                    .collect()
            })
            .collect();
        Ok(Self { vertices: self.vertices.clone(), mutable: self.mutable.clone(), b })
    }

    /// Restriction to the vertices in `subset`, keeping their relative order
    /// and mutability.
    pub fn full_subquiver(&self, subset: &BTreeSet<usize>) -> Result<Self> {
        if let Some(&v) = subset.iter().find(|v| !self.contains(**v)) {
            return Err(Error::UnknownVertex(v));
        }
        let rows: Vec<usize> = (0..self.vertices.len()).filter(|&r| subset.contains(&self.vertices[r])).collect();
        let cols: Vec<usize> = (0..self.mutable.len()).filter(|&c| subset.contains(&self.mutable[c])).collect();
        Ok(Self {
            vertices: rows.iter().map(|&r| self.vertices[r]).collect(),
            mutable: cols.iter().map(|&c| self.mutable[c]).collect(),
            b: rows.iter().map(|&r| cols.iter().map(|&c| self.b[r][c]).collect()).collect(),
        })
    }

    /// Same vertices and matrix with `extra` removed from the mutable set.
    pub fn freeze(&self, extra: &BTreeSet<usize>) -> Result<Self> {
        if let Some(&v) = extra.iter().find(|v| !self.is_mutable(**v)) {
            return Err(if self.contains(v) { Error::FrozenVertex(v) } else { Error::UnknownVertex(v) });
        }
        let cols: Vec<usize> = (0..self.mutable.len()).filter(|&c| !extra.contains(&self.mutable[c])).collect();
        Ok(Self {
            vertices: self.vertices.clone(),
            mutable: cols.iter().map(|&c| self.mutable[c]).collect(),
            b: self.b.iter().map(|row| cols.iter().map(|&c| row[c]).collect()).collect(),
        })
    }

    /// Relabels vertices through `sigma` (must be injective on the vertex
    /// set): `b'_{sigma(i) sigma(j)} = b_ij`.
    pub fn relabel(&self, sigma: &BTreeMap<usize, usize>) -> Result<Self> {
        let image = |v: usize| sigma.get(&v).copied().ok_or(Error::UnknownVertex(v));
        let vertices = self.vertices.iter().map(|&v| image(v)).collect::<Result<Vec<_>>>()?;
        let mutable = self.mutable.iter().map(|&v| image(v)).collect::<Result<Vec<_>>>()?;
        Self::new(vertices, mutable, self.b.clone())
    }

    /// Connected components of the underlying graph (arrows in either
    /// direction), each sorted.
    pub fn components(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if seen.insert(u) {
                        comp.insert(u);
                        stack.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Graphviz rendering: mutable vertices as circles, frozen as boxes, one
    /// edge per arrow direction labelled by its multiplicity.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut s = String::from("digraph quiver {\n");
        for (r, &v) in self.vertices.iter().enumerate() {
            let shape = if self.is_mutable(v) { "circle" } else { "box" };
            let label = labels.and_then(|l| l.get(r)).cloned().unwrap_or_else(|| v.to_string());
            let _ = writeln!(s, "  {v} [shape={shape}, label=\"{}\"];", label.replace('"', "\\\""));
        }
        for (a, &i) in self.vertices.iter().enumerate() {
            for &j in &self.vertices[a + 1..] {
                let m = self.arrows(i, j);
                let (from, to) = if m > 0 { (i, j) } else { (j, i) };
                if m != 0 {
                    let _ = writeln!(s, "  {from} -> {to} [label=\"{}\"];", m.abs());
                }
            }
        }
        s.push_str("}\n");
        s
    }
}
