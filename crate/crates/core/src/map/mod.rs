//! Combinatorial maps (rotation systems) and their topological invariants.
//!
//! A map on `2E` darts is a pair of permutations: `sigma`, whose cycles are
//! the cyclic orderings of darts around each vertex, and `alpha`, a
//! fixed-point-free involution pairing the two darts of every edge. The
//! thickened ribbon graph is always orientable.
//!
//! Vertices are numbered by the smallest dart of their `sigma` cycle, edges
//! by the smallest dart of their `alpha` pair. With the conventional
//! labeling (edge `i` owns darts `2i` and `2i + 1`) edge numbers coincide
//! with `dart / 2`.

mod canon;
pub mod format;
pub(crate) mod ops;

use std::fmt;

use thiserror::Error;

pub use canon::{canonical_form, mirror, mirror_merged_form, CanonicalCode};
pub use ops::{
    graph_cycle_rank, induced_submap, is_filling_subgraph, spanning_tree, surface_stats,
    trace_faces, GraphStats, SurfaceStats,
};

/// Dart index.
pub type Dart = usize;

/// Which of the two permutations a violation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Perm {
    Sigma,
    Alpha,
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Perm::Sigma => f.write_str("sigma"),
            Perm::Alpha => f.write_str("alpha"),
        }
    }
}

/// A single broken map invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("odd dart count {0}")]
    OddDartCount(usize),
    #[error("{perm} has length {len}, expected {expected}")]
    LengthMismatch {
        perm: Perm,
        len: usize,
        expected: usize,
    },
    #[error("{0} is not a permutation")]
    NotPermutation(Perm),
    #[error("alpha has fixed point {0}")]
    AlphaFixedPoint(Dart),
    #[error("alpha not involution at dart {0}")]
    AlphaNotInvolution(Dart),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("invalid map: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("map is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("unknown edge {edge} (map has {edge_count} edges)")]
    UnknownEdge { edge: usize, edge_count: usize },
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// Checks every map invariant on raw permutation arrays and lists the
/// violations. An empty list means the pair forms a valid map.
pub fn validate(sigma: &[Dart], alpha: &[Dart]) -> Vec<Violation> {
    let n = sigma.len();
    let mut out = Vec::new();
    if n % 2 == 1 {
        out.push(Violation::OddDartCount(n));
    }
    if alpha.len() != n {
        out.push(Violation::LengthMismatch {
            perm: Perm::Alpha,
            len: alpha.len(),
            expected: n,
        });
        return out;
    }
    if !is_permutation(sigma) {
        out.push(Violation::NotPermutation(Perm::Sigma));
    }
    if !is_permutation(alpha) {
        out.push(Violation::NotPermutation(Perm::Alpha));
        return out;
    }
    for (d, &a) in alpha.iter().enumerate() {
        if a == d {
            out.push(Violation::AlphaFixedPoint(d));
        } else if alpha[a] != d {
            out.push(Violation::AlphaNotInvolution(d));
        }
    }
    out
}

fn is_permutation(p: &[Dart]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// A validated rotation system. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct CombinatorialMap {
    sigma: Vec<Dart>,
    alpha: Vec<Dart>,
    vertex_of: Vec<usize>,
    edge_of: Vec<usize>,
    vertex_count: usize,
}

impl CombinatorialMap {
    pub fn new(sigma: Vec<Dart>, alpha: Vec<Dart>) -> Result<Self, MapError> {
        let violations = validate(&sigma, &alpha);
        if !violations.is_empty() {
            return Err(MapError::Invalid(violations));
        }
        Ok(Self::from_valid(sigma, alpha))
    }

    /// Builds a map with the conventional involution `(0 1)(2 3)...`.
    pub fn with_standard_alpha(sigma: Vec<Dart>) -> Result<Self, MapError> {
        let alpha = standard_alpha(sigma.len());
        Self::new(sigma, alpha)
    }

    /// Builds a map from sigma given in cycle notation over `2 * edges`
    /// darts, using the conventional involution. Darts missing from every
    /// cycle are fixed points.
    pub fn from_cycles(edges: usize, cycles: &[&[Dart]]) -> Result<Self, MapError> {
        let n = 2 * edges;
        let mut sigma: Vec<Dart> = (0..n).collect();
        for cyc in cycles {
            for (i, &d) in cyc.iter().enumerate() {
                if d >= n {
                    return Err(MapError::Invalid(vec![Violation::NotPermutation(
                        Perm::Sigma,
                    )]));
                }
                sigma[d] = cyc[(i + 1) % cyc.len()];
            }
        }
        Self::with_standard_alpha(sigma)
    }

    pub fn empty() -> Self {
        Self::from_valid(Vec::new(), Vec::new())
    }

    pub(crate) fn from_valid(sigma: Vec<Dart>, alpha: Vec<Dart>) -> Self {
        debug_assert!(validate(&sigma, &alpha).is_empty());
        let n = sigma.len();
        let mut vertex_of = vec![usize::MAX; n];
        let mut vertex_count = 0;
        for start in 0..n {
            if vertex_of[start] != usize::MAX {
                continue;
            }
            let mut d = start;
            loop {
                vertex_of[d] = vertex_count;
                d = sigma[d];
                if d == start {
                    break;
                }
            }
            vertex_count += 1;
        }
        let mut edge_of = vec![usize::MAX; n];
        let mut edge_count = 0;
        for d in 0..n {
            if edge_of[d] == usize::MAX {
                edge_of[d] = edge_count;
                edge_of[alpha[d]] = edge_count;
                edge_count += 1;
            }
        }
        Self {
            sigma,
            alpha,
            vertex_of,
            edge_of,
            vertex_count,
        }
    }

    pub fn dart_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn edge_count(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn sigma(&self) -> &[Dart] {
        &self.sigma
    }

    pub fn alpha(&self) -> &[Dart] {
        &self.alpha
    }

    /// Vertex index of a dart.
    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }

    /// Edge index of a dart.
    pub fn edge_of(&self, d: Dart) -> usize {
        self.edge_of[d]
    }

    /// Darts of each edge, smaller dart first, indexed by edge.
    pub fn edges(&self) -> Vec<(Dart, Dart)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for d in 0..self.dart_count() {
            if d < self.alpha[d] {
                out.push((d, self.alpha[d]));
            }
        }
        out
    }

    /// Vertex endpoints of each edge, indexed by edge.
    pub fn edge_endpoints(&self) -> Vec<(usize, usize)> {
        self.edges()
            .into_iter()
            .map(|(a, b)| (self.vertex_of[a], self.vertex_of[b]))
            .collect()
    }

    /// The sigma cycles, each starting at its smallest dart.
    pub fn vertex_cycles(&self) -> Vec<Vec<Dart>> {
        cycles_of(&self.sigma)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &v in &self.vertex_of {
            deg[v] += 1;
        }
        deg
    }

    /// Number of connected components of the underlying graph.
    pub fn component_count(&self) -> usize {
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        let mut components = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(d) = stack.pop() {
                for next in [self.sigma[d], self.alpha[d]] {
                    if !seen[next] {
                        seen[next] = true;
                        stack.push(next);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Applies a dart relabeling `d -> perm[d]`, returning the conjugated map.
    pub fn relabel(&self, perm: &[Dart]) -> Result<Self, MapError> {
        if perm.len() != self.dart_count() || !is_permutation(perm) {
            return Err(MapError::Invalid(vec![Violation::NotPermutation(
                Perm::Sigma,
            )]));
        }
        let n = self.dart_count();
        let mut sigma = vec![0; n];
        let mut alpha = vec![0; n];
        for d in 0..n {
            sigma[perm[d]] = perm[self.sigma[d]];
            alpha[perm[d]] = perm[self.alpha[d]];
        }
        Ok(Self::from_valid(sigma, alpha))
    }
}

impl fmt::Debug for CombinatorialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CombinatorialMap({})", format::write_map(self))
    }
}

impl fmt::Display for CombinatorialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::write_map(self))
    }
}

pub(crate) fn standard_alpha(n: usize) -> Vec<Dart> {
    (0..n).map(|d| d ^ 1).collect()
}

/// Cycles of a permutation, each starting at its smallest element, ordered
/// by that element.
pub(crate) fn cycles_of(p: &[Dart]) -> Vec<Vec<Dart>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            cyc.push(d);
            d = p[d];
        }
        out.push(cyc);
    }
    out
}
