use itertools::Itertools;

use super::PlaneTree;
use crate::map::{CombinatorialMap, Dart};

/// Every multiset of `h` unordered vertex pairs (loops allowed) on `n`
/// vertices, as non-decreasing pair sequences in lexicographic order.
///
/// There are `C(n(n+1)/2 + h - 1, h)` of them.
pub fn enumerate_edge_additions(
    tree: &PlaneTree,
    h: usize,
) -> impl Iterator<Item = Vec<(usize, usize)>> + Clone {
    edge_multisets(tree.vertex_count(), h)
}

pub(crate) fn edge_multisets(
    n: usize,
    h: usize,
) -> impl Iterator<Item = Vec<(usize, usize)>> + Clone {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
    let empty = (h == 0).then(Vec::new);
    let nonempty = (h > 0).then(move || pairs.into_iter().combinations_with_replacement(h));
    empty.into_iter().chain(nonempty.into_iter().flatten())
}

/// A graph whose darts are attached to vertices but not yet cyclically
/// ordered. Edge `i` owns darts `2i` (at its first endpoint) and `2i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    vertex_darts: Vec<Vec<Dart>>,
    alpha: Vec<Dart>,
}

impl Skeleton {
    pub fn from_edges(vertices: usize, edges: &[(usize, usize)]) -> Self {
        let mut vertex_darts = vec![Vec::new(); vertices];
        for (i, &(u, v)) in edges.iter().enumerate() {
            vertex_darts[u].push(2 * i);
            vertex_darts[v].push(2 * i + 1);
        }
        for darts in &mut vertex_darts {
            darts.sort_unstable();
        }
        let alpha = crate::map::standard_alpha(2 * edges.len());
        Self {
            vertex_darts,
            alpha,
        }
    }

    /// Tree edges followed by the added edges.
    pub fn from_tree(tree: &PlaneTree, extra: &[(usize, usize)]) -> Self {
        let mut edges = tree.edges();
        edges.extend_from_slice(extra);
        Self::from_edges(tree.vertex_count(), &edges)
    }

    /// Forgets the rotation of an existing map, keeping its darts, alpha and
    /// vertex incidences.
    pub fn from_map(map: &CombinatorialMap) -> Self {
        let mut vertex_darts = vec![Vec::new(); map.vertex_count()];
        for d in 0..map.dart_count() {
            vertex_darts[map.vertex_of(d)].push(d);
        }
        Self {
            vertex_darts,
            alpha: map.alpha().to_vec(),
        }
    }

    pub fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertex_darts.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.vertex_darts.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `prod (deg(v) - 1)!` over vertices of positive degree.
    pub fn rotation_count(&self) -> u128 {
        self.vertex_darts
            .iter()
            .map(|d| (1..d.len().max(1) as u128).product::<u128>())
            .product()
    }
}

/// One map per choice of cyclic order at every vertex, in odometer order
/// (last vertex fastest).
pub fn enumerate_rotation_systems(skeleton: &Skeleton) -> RotationSystems {
    let orders = skeleton
        .vertex_darts
        .iter()
        .map(|darts| match darts.split_first() {
            None => vec![Vec::new()],
            Some((&first, rest)) => rest
                .iter()
                .copied()
                .permutations(rest.len())
                .map(|p| std::iter::once(first).chain(p).collect())
                .collect(),
        })
        .collect::<Vec<Vec<Vec<Dart>>>>();
    RotationSystems {
        alpha: skeleton.alpha.clone(),
        index: vec![0; orders.len()],
        orders,
        done: false,
    }
}

#[derive(Debug, Clone)]
pub struct RotationSystems {
    alpha: Vec<Dart>,
    orders: Vec<Vec<Vec<Dart>>>,
    index: Vec<usize>,
    done: bool,
}

impl Iterator for RotationSystems {
    type Item = CombinatorialMap;

    fn next(&mut self) -> Option<CombinatorialMap> {
        if self.done {
            return None;
        }
        let mut sigma = vec![0; self.alpha.len()];
        for (v, &k) in self.index.iter().enumerate() {
            let cyc = &self.orders[v][k];
            for (i, &d) in cyc.iter().enumerate() {
                sigma[d] = cyc[(i + 1) % cyc.len()];
            }
        }

        self.done = true;
        for v in (0..self.index.len()).rev() {
            self.index[v] += 1;
            if self.index[v] < self.orders[v].len() {
                self.done = false;
                break;
            }
            self.index[v] = 0;
        }
        Some(CombinatorialMap::from_valid(sigma, self.alpha.clone()))
    }
}
