use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use super::{CombinatorialMap, Dart, MapError};

/// Counts of the closed surface obtained by thickening a connected map and
/// capping every boundary circle with a disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceStats {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub chi: i64,
    pub genus: usize,
}

/// Invariants of the underlying abstract graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub components: usize,
    /// `E - V + components`; the graph genus of a connected graph.
    pub cycle_rank: usize,
    /// Vertex degrees in non-decreasing order.
    pub degree_sequence: Vec<usize>,
}

/// Orbits of `phi = sigma . alpha` (apply `alpha` first). Each face cycle
/// starts at its smallest dart; faces are ordered by that dart.
pub fn trace_faces(map: &CombinatorialMap) -> Vec<Vec<Dart>> {
    let n = map.dart_count();
    let (sigma, alpha) = (map.sigma(), map.alpha());
    let mut seen = vec![false; n];
    let mut faces = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            face.push(d);
            d = sigma[alpha[d]];
        }
        faces.push(face);
    }
    faces
}

pub(crate) fn face_count(map: &CombinatorialMap) -> usize {
    let n = map.dart_count();
    let (sigma, alpha) = (map.sigma(), map.alpha());
    let mut seen = vec![false; n];
    let mut faces = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = sigma[alpha[d]];
        }
    }
    faces
}

/// `V`, `E`, `F`, Euler characteristic and genus of the thickened surface.
///
/// Fails on disconnected maps, including the empty map (zero components).
pub fn surface_stats(map: &CombinatorialMap) -> Result<SurfaceStats, MapError> {
    let components = map.component_count();
    if components != 1 {
        return Err(MapError::Disconnected { components });
    }
    Ok(stats_of_connected(map))
}

pub(crate) fn stats_of_connected(map: &CombinatorialMap) -> SurfaceStats {
    let vertices = map.vertex_count();
    let edges = map.edge_count();
    let faces = face_count(map);
    let chi = vertices as i64 - edges as i64 + faces as i64;
    debug_assert!(chi <= 2 && chi % 2 == 0);
    SurfaceStats {
        vertices,
        edges,
        faces,
        chi,
        genus: ((2 - chi) / 2) as usize,
    }
}

pub fn graph_cycle_rank(map: &CombinatorialMap) -> GraphStats {
    let components = map.component_count();
    let mut degree_sequence = map.degrees();
    degree_sequence.sort_unstable();
    GraphStats {
        components,
        cycle_rank: map.edge_count() + components - map.vertex_count(),
        degree_sequence,
    }
}

/// Spanning tree grown from the vertex of dart 0, always taking the
/// lowest-numbered edge that leaves the current tree. Returns sorted edge
/// indices.
pub fn spanning_tree(map: &CombinatorialMap) -> Result<Vec<usize>, MapError> {
    let components = map.component_count();
    if components != 1 {
        return Err(MapError::Disconnected { components });
    }
    let cycles = map.vertex_cycles();
    let mut in_tree = vec![false; map.vertex_count()];
    let mut frontier = BinaryHeap::new();
    let mut tree = Vec::with_capacity(map.vertex_count().saturating_sub(1));

    let admit = |v: usize, in_tree: &mut Vec<bool>, frontier: &mut BinaryHeap<_>| {
        in_tree[v] = true;
        for &d in &cycles[v] {
            frontier.push(Reverse((map.edge_of(d), d)));
        }
    };
    admit(0, &mut in_tree, &mut frontier);
    while let Some(Reverse((edge, d))) = frontier.pop() {
        let far = map.vertex_of(map.alpha()[d]);
        if in_tree[far] {
            continue;
        }
        tree.push(edge);
        admit(far, &mut in_tree, &mut frontier);
    }
    tree.sort_unstable();
    Ok(tree)
}

/// The sub-ribbon graph on the given edges. Darts of all other edges are
/// deleted, sigma cycles skip the deleted darts, vertices left without darts
/// disappear, and the surviving darts are renumbered in increasing order.
pub fn induced_submap(
    map: &CombinatorialMap,
    edges: &[usize],
) -> Result<CombinatorialMap, MapError> {
    let keep = edge_mask(map, edges)?;
    let n = map.dart_count();
    let kept = |d: Dart| keep[map.edge_of(d)];
    let mut new_label = vec![usize::MAX; n];
    let mut next = 0;
    for d in 0..n {
        if kept(d) {
            new_label[d] = next;
            next += 1;
        }
    }
    let mut sigma = vec![0; next];
    let mut alpha = vec![0; next];
    for d in (0..n).filter(|&d| kept(d)) {
        let mut s = map.sigma()[d];
        while !kept(s) {
            s = map.sigma()[s];
        }
        sigma[new_label[d]] = new_label[s];
        alpha[new_label[d]] = new_label[map.alpha()[d]];
    }
    Ok(CombinatorialMap::from_valid(sigma, alpha))
}

fn edge_mask(map: &CombinatorialMap, edges: &[usize]) -> Result<Vec<bool>, MapError> {
    let edge_count = map.edge_count();
    let mut keep = vec![false; edge_count];
    for &e in edges {
        if e >= edge_count {
            return Err(MapError::UnknownEdge {
                edge: e,
                edge_count,
            });
        }
        keep[e] = true;
    }
    Ok(keep)
}

/// Whether the edge subset fills the closed surface of `map`: it must touch
/// every vertex, be connected, and its own thickening must have the same
/// genus (so every complementary region is a disk).
pub fn is_filling_subgraph(map: &CombinatorialMap, edges: &[usize]) -> Result<bool, MapError> {
    if map.is_empty() {
        return Ok(false);
    }
    let ambient = surface_stats(map)?;
    let keep = edge_mask(map, edges)?;
    if !keep.iter().any(|&k| k) {
        return Ok(false);
    }
    let mut touched = vec![false; map.vertex_count()];
    for d in 0..map.dart_count() {
        if keep[map.edge_of(d)] {
            touched[map.vertex_of(d)] = true;
        }
    }
    if touched.contains(&false) {
        return Ok(false);
    }
    let sub = induced_submap(map, edges)?;
    match surface_stats(&sub) {
        Ok(s) => Ok(s.genus == ambient.genus),
        Err(MapError::Disconnected { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop1() -> CombinatorialMap {
        CombinatorialMap::from_cycles(1, &[&[0, 1]]).unwrap()
    }
    fn segment() -> CombinatorialMap {
        CombinatorialMap::from_cycles(1, &[]).unwrap()
    }
    fn interleaved() -> CombinatorialMap {
        CombinatorialMap::from_cycles(2, &[&[0, 2, 1, 3]]).unwrap()
    }
    fn nested() -> CombinatorialMap {
        CombinatorialMap::from_cycles(2, &[&[0, 1, 2, 3]]).unwrap()
    }
    // A-B (0,1), B-C (2,3), C-A (4,5)
    fn triangle() -> CombinatorialMap {
        CombinatorialMap::from_cycles(3, &[&[0, 5], &[1, 2], &[3, 4]]).unwrap()
    }

    #[test]
    fn face_examples() {
        assert_eq!(trace_faces(&segment()), vec![vec![0, 1]]);
        assert_eq!(trace_faces(&loop1()).len(), 2);
        assert_eq!(trace_faces(&interleaved()), vec![vec![0, 3, 1, 2]]);
        assert_eq!(trace_faces(&nested()).len(), 3);
    }

    #[test]
    fn stats_examples() {
        let s = surface_stats(&interleaved()).unwrap();
        assert_eq!(
            (s.vertices, s.edges, s.faces, s.chi, s.genus),
            (1, 2, 1, 0, 1)
        );
        let s = surface_stats(&nested()).unwrap();
        assert_eq!(
            (s.vertices, s.edges, s.faces, s.chi, s.genus),
            (1, 2, 3, 2, 0)
        );
        let s = surface_stats(&segment()).unwrap();
        assert_eq!(
            (s.vertices, s.edges, s.faces, s.chi, s.genus),
            (2, 1, 1, 2, 0)
        );
    }

    #[test]
    fn stats_reject_disconnected() {
        // two planar loops on separate vertices
        let m = CombinatorialMap::from_cycles(2, &[&[0, 1], &[2, 3]]).unwrap();
        assert_eq!(
            surface_stats(&m),
            Err(MapError::Disconnected { components: 2 })
        );
        assert_eq!(
            surface_stats(&CombinatorialMap::empty()),
            Err(MapError::Disconnected { components: 0 })
        );
    }

    #[test]
    fn cycle_rank_examples() {
        let path = CombinatorialMap::from_cycles(2, &[&[1, 2]]).unwrap();
        assert_eq!(graph_cycle_rank(&path).cycle_rank, 0);
        let g = graph_cycle_rank(&interleaved());
        assert_eq!((g.components, g.cycle_rank), (1, 2));
        assert_eq!(g.degree_sequence, vec![4]);
        let two = CombinatorialMap::from_cycles(2, &[&[0, 1], &[2, 3]]).unwrap();
        let g = graph_cycle_rank(&two);
        assert_eq!((g.components, g.cycle_rank), (2, 2));
    }

    #[test]
    fn spanning_tree_examples() {
        assert!(spanning_tree(&interleaved()).unwrap().is_empty());
        let path = CombinatorialMap::from_cycles(2, &[&[1, 2]]).unwrap();
        assert_eq!(spanning_tree(&path).unwrap(), vec![0, 1]);
        assert_eq!(spanning_tree(&triangle()).unwrap(), vec![0, 1]);
        let two = CombinatorialMap::from_cycles(2, &[&[0, 1], &[2, 3]]).unwrap();
        assert!(spanning_tree(&two).is_err());
    }

    #[test]
    fn submap_examples() {
        let m = interleaved();
        assert_eq!(induced_submap(&m, &[0, 1]).unwrap(), m);
        assert_eq!(induced_submap(&m, &[1]).unwrap(), loop1());
        let empty = induced_submap(&m, &[]).unwrap();
        assert!(empty.is_empty());
        assert_eq!(
            induced_submap(&m, &[2]),
            Err(MapError::UnknownEdge {
                edge: 2,
                edge_count: 2
            })
        );
    }

    #[test]
    fn submap_drops_isolated_vertices() {
        let sub = induced_submap(&triangle(), &[0]).unwrap();
        assert_eq!(sub, segment());
    }

    #[test]
    fn filling_examples() {
        assert!(is_filling_subgraph(&interleaved(), &[0, 1]).unwrap());
        assert!(!is_filling_subgraph(&interleaved(), &[0]).unwrap());
        assert!(!is_filling_subgraph(&triangle(), &[0]).unwrap());
        assert!(!is_filling_subgraph(&interleaved(), &[]).unwrap());
        assert!(is_filling_subgraph(&triangle(), &[0, 1]).unwrap());
        assert!(!is_filling_subgraph(&CombinatorialMap::empty(), &[]).unwrap());
        let two = CombinatorialMap::from_cycles(2, &[&[0, 1], &[2, 3]]).unwrap();
        assert!(is_filling_subgraph(&two, &[0, 1]).is_err());
    }
}
