//! Brute-force reference implementations used to cross-check the fast paths.
//!
//! Nothing here shares code with [`crate::map`] or [`crate::enumeration`]
//! beyond reading the two permutations of a map. Everything is slow and only
//! meant for small inputs.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::map::CombinatorialMap;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a] = b;
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&x| self.find(x) == x)
            .count()
    }
}

/// Number of boundary curves of the thickened map.
pub fn gluing_face_count(map: &CombinatorialMap) -> usize {
    boundary_circles(map.sigma(), map.alpha())
}

/// Each dart becomes a ribbon end with a left and a right side. Around a
/// vertex the right side of `d` runs into the left side of `sigma(d)`; along
/// an edge the left side of `d` runs into the right side of `alpha(d)`.
/// Boundary curves are the connected components of these gluings.
fn boundary_circles(sigma: &[usize], alpha: &[usize]) -> usize {
    let n = sigma.len();
    let left = |d: usize| 2 * d;
    let right = |d: usize| 2 * d + 1;
    let mut uf = UnionFind::new(2 * n);
    for d in 0..n {
        uf.union(right(d), left(sigma[d]));
        uf.union(left(d), right(alpha[d]));
    }
    uf.classes()
}

/// `(V, E, F, genus)` of a connected map from vertex orbits, edge pairs and
/// boundary circles.
pub fn naive_surface(sigma: &[usize], alpha: &[usize]) -> (usize, usize, usize, usize) {
    let n = sigma.len();
    let mut uf = UnionFind::new(n);
    for d in 0..n {
        uf.union(d, sigma[d]);
    }
    let v = uf.classes();
    let e = n / 2;
    let f = boundary_circles(sigma, alpha);
    let chi = v as i64 - e as i64 + f as i64;
    (v, e, f, ((2 - chi) / 2) as usize)
}

fn naive_components(sigma: &[usize], alpha: &[usize]) -> usize {
    let mut uf = UnionFind::new(sigma.len());
    for d in 0..sigma.len() {
        uf.union(d, sigma[d]);
        uf.union(d, alpha[d]);
    }
    uf.classes()
}

/// Catalan numbers `Cat(0..=n)` from `Cat(k+1) = sum_i Cat(i) Cat(k-i)`.
pub fn catalan_recurrence(n: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::one()];
    for k in 0..n {
        let mut s = BigUint::zero();
        for i in 0..=k {
            s += &c[i] * &c[k - i];
        }
        c.push(s);
    }
    c
}

/// All fixed-point-free involutions on `0..n` (n even).
pub fn all_involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(&a) = rest.first() else {
            out.push(cur.clone());
            return;
        };
        for j in 1..rest.len() {
            let b = rest[j];
            cur[a] = b;
            cur[b] = a;
            let next: Vec<usize> = rest.iter().copied().filter(|&x| x != a && x != b).collect();
            go(&next, cur, out);
        }
    }
    let mut out = Vec::new();
    if n % 2 == 0 {
        go(&(0..n).collect::<Vec<_>>(), &mut vec![0; n], &mut out);
    }
    out
}

/// Every labeled map on `edges` edges with `alpha = (0 1)(2 3)...`, connected
/// or not: one per vertex permutation.
pub fn all_labeled_maps(edges: usize) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> {
    let n = 2 * edges;
    let alpha: Vec<usize> = (0..n).map(|d| d ^ 1).collect();
    (0..n)
        .permutations(n)
        .map(move |sigma| (sigma, alpha.clone()))
}

/// Whether some bijection `phi` carries `a` onto `b`:
/// `phi sigma_a = sigma_b phi` and `phi alpha_a = alpha_b phi`.
pub fn naive_isomorphic(a: (&[usize], &[usize]), b: (&[usize], &[usize])) -> bool {
    let n = a.0.len();
    if n != b.0.len() {
        return false;
    }
    if n == 0 {
        return true;
    }
    'roots: for t in 0..n {
        let mut phi = vec![usize::MAX; n];
        let mut used = vec![false; n];
        phi[0] = t;
        used[t] = true;
        let mut stack = vec![0];
        while let Some(d) = stack.pop() {
            for (pa, pb) in [(a.0, b.0), (a.1, b.1)] {
                let (x, y) = (pa[d], pb[phi[d]]);
                if phi[x] == usize::MAX {
                    if used[y] {
                        continue 'roots;
                    }
                    phi[x] = y;
                    used[y] = true;
                    stack.push(x);
                } else if phi[x] != y {
                    continue 'roots;
                }
            }
        }
        if phi.iter().all(|&p| p != usize::MAX) {
            return true;
        }
    }
    false
}

type Invariant = (usize, usize, Vec<usize>, Vec<usize>);

fn invariant(sigma: &[usize], alpha: &[usize]) -> Invariant {
    let orbit_sizes = |next: &dyn Fn(usize) -> usize| {
        let mut seen = vec![false; sigma.len()];
        let mut sizes = Vec::new();
        for s in 0..sigma.len() {
            let mut len = 0;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                len += 1;
                d = next(d);
            }
            if len > 0 {
                sizes.push(len);
            }
        }
        sizes.sort_unstable();
        sizes
    };
    let degrees = orbit_sizes(&|d| sigma[d]);
    let faces = orbit_sizes(&|d| sigma[alpha[d]]);
    (degrees.len(), faces.len(), degrees, faces)
}

/// Largest edge count [`exhaustive_maps`] accepts.
pub const EXHAUSTIVE_EDGE_CAP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("exhaustive enumeration is capped at {EXHAUSTIVE_EDGE_CAP} edges, got {0}")]
pub struct EdgeCapExceeded(pub usize);

/// One representative per isomorphism class of connected maps with
/// `1..=max_edges` edges, found by brute force over labeled maps.
///
/// Every map is isomorphic to one whose edge involution is
/// `(0 1)(2 3)...`, so only vertex permutations are varied. Four edges take
/// well under a second; five take minutes.
pub fn exhaustive_maps(max_edges: usize) -> Result<Vec<CombinatorialMap>, EdgeCapExceeded> {
    if max_edges > EXHAUSTIVE_EDGE_CAP {
        return Err(EdgeCapExceeded(max_edges));
    }
    Ok((1..=max_edges).flat_map(classes_with_edges).collect())
}

fn classes_with_edges(edges: usize) -> Vec<CombinatorialMap> {
    let mut buckets: HashMap<Invariant, Vec<(Vec<usize>, Vec<usize>)>> = HashMap::new();
    for (sigma, alpha) in all_labeled_maps(edges) {
        if naive_components(&sigma, &alpha) != 1 {
            continue;
        }
        let reps = buckets.entry(invariant(&sigma, &alpha)).or_default();
        if !reps
            .iter()
            .any(|(s, a)| naive_isomorphic((s, a), (&sigma, &alpha)))
        {
            reps.push((sigma, alpha));
        }
    }
    let mut out: Vec<CombinatorialMap> = buckets
        .into_values()
        .flatten()
        .map(|(s, a)| CombinatorialMap::new(s, a).expect("valid by construction"))
        .collect();
    out.sort_by(|x, y| (x.sigma(), x.alpha()).cmp(&(y.sigma(), y.alpha())));
    out
}

/// Whether the edges in `kept` fill the map: they touch every vertex, form a
/// connected graph, and the ribbon subsurface they span has the genus of the
/// whole map (so every complementary region is a disk).
pub fn naive_is_filling(map: &CombinatorialMap, kept: &[usize]) -> bool {
    let sigma = map.sigma();
    let alpha = map.alpha();
    let n = sigma.len();
    if n == 0 || kept.is_empty() {
        return false;
    }
    // edges are numbered as in the map itself
    let keep: Vec<bool> = (0..n).map(|d| kept.contains(&map.edge_of(d))).collect();
    let mut uf = UnionFind::new(n);
    for d in 0..n {
        uf.union(d, sigma[d]);
    }
    let ambient_vertex: Vec<usize> = (0..n).map(|d| uf.find(d)).collect();
    let mut touched: Vec<usize> = (0..n)
        .filter(|&d| keep[d])
        .map(|d| ambient_vertex[d])
        .collect();
    touched.sort_unstable();
    touched.dedup();
    let ambient_vertices = {
        let mut v = ambient_vertex.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    if touched.len() != ambient_vertices {
        return false;
    }

    let darts: Vec<usize> = (0..n).filter(|&d| keep[d]).collect();
    let index: HashMap<usize, usize> = darts.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let sub_sigma: Vec<usize> = darts
        .iter()
        .map(|&d| {
            let mut x = sigma[d];
            while !keep[x] {
                x = sigma[x];
            }
            index[&x]
        })
        .collect();
    let sub_alpha: Vec<usize> = darts.iter().map(|&d| index[&alpha[d]]).collect();
    if naive_components(&sub_sigma, &sub_alpha) != 1 {
        return false;
    }
    naive_surface(&sub_sigma, &sub_alpha).3 == naive_surface(sigma, alpha).3
}
