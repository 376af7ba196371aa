use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::rotations::edge_multisets;
use super::{enumerate_plane_trees, enumerate_rotation_systems, EnumError, PlaneTree, Skeleton};
use crate::bounds::{catalan_exact, factorial_exact, genus_lower, ln_biguint};
use crate::map::ops::stats_of_connected;
use crate::map::{canonical_form, mirror_merged_form, CanonicalCode, CombinatorialMap};
use crate::par;

/// Units handed to workers per round. Fixed so that truncation points do not
/// depend on the worker count.
const BATCH: usize = 32;

/// Caps on the constructed graphs (vertex, edge and degree bounds) plus the
/// genus of the closed surface to keep and a cap on examined sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstructionBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_degree: usize,
    pub genus_target: usize,
    pub work_cap: u64,
}

impl ConstructionBudget {
    pub fn validate(&self) -> Result<(), EnumError> {
        let bad = |what: &str| Err(EnumError::InvalidBudget(format!("{what} must be positive")));
        if self.max_vertices == 0 {
            return bad("max_vertices");
        }
        if self.max_edges == 0 {
            return bad("max_edges");
        }
        if self.max_degree == 0 {
            return bad("max_degree");
        }
        if self.work_cap == 0 {
            return bad("work_cap");
        }
        Ok(())
    }

    fn tree_sizes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.max_vertices.min(self.max_edges + 1)
    }
}

/// Tallies of one census run.
///
/// `sequences_counted` counts (tree, added edges, rotation) triples that
/// respect the degree cap. `iso_classes` counts distinct maps among them
/// (any genus), `filling_classes` those whose closed surface has the target
/// genus, and `mirror_merged_filling_classes` the latter after identifying
/// each map with its mirror image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusResult {
    pub sequences_counted: u64,
    pub iso_classes: u64,
    pub filling_classes: u64,
    pub mirror_merged_filling_classes: u64,
    pub truncated: bool,
}

#[derive(Debug, Clone)]
pub struct Census {
    pub budget: ConstructionBudget,
    pub result: CensusResult,
    /// One representative per filling class, ordered by canonical code.
    pub filling_maps: Vec<CombinatorialMap>,
}

/// Every map produced from `tree`, in a fixed order.
fn tree_sequences<'a>(
    tree: &'a PlaneTree,
    budget: &'a ConstructionBudget,
) -> impl Iterator<Item = CombinatorialMap> + 'a {
    let n = tree.vertex_count();
    let max_extra = budget.max_edges + 1 - n;
    (0..=max_extra)
        .flat_map(move |h| edge_multisets(n, h))
        .map(move |extra| Skeleton::from_tree(tree, &extra))
        .filter(move |sk| sk.max_degree() <= budget.max_degree)
        .flat_map(|sk| enumerate_rotation_systems(&sk))
}

fn all_trees(budget: &ConstructionBudget) -> Vec<PlaneTree> {
    budget
        .tree_sizes()
        .flat_map(|n| enumerate_plane_trees(n).expect("n >= 1"))
        .collect()
}

/// Streams every constructed map whose closed surface has the target genus
/// (before deduplication), stopping once `work_cap` sequences were examined.
pub fn candidates(
    budget: ConstructionBudget,
) -> Result<impl Iterator<Item = CombinatorialMap>, EnumError> {
    budget.validate()?;
    let trees = all_trees(&budget);
    let stream = (0..trees.len())
        .flat_map(move |i| {
            let tree = trees[i].clone();
            tree_sequences(&tree, &budget).collect::<Vec<_>>()
        })
        .take(budget.work_cap.min(usize::MAX as u64) as usize)
        .filter(move |m| m.is_connected() && stats_of_connected(m).genus == budget.genus_target);
    Ok(stream)
}

#[derive(Default)]
struct Tally {
    examined: u64,
    hit_limit: bool,
    iso: BTreeSet<CanonicalCode>,
    filling: BTreeMap<CanonicalCode, CombinatorialMap>,
    mirror_merged: BTreeSet<CanonicalCode>,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.examined += other.examined;
        self.iso.extend(other.iso);
        for (code, map) in other.filling {
            self.filling.entry(code).or_insert(map);
        }
        self.mirror_merged.extend(other.mirror_merged);
    }
}

fn run_tree(tree: &PlaneTree, budget: &ConstructionBudget, limit: u64) -> Tally {
    let mut t = Tally::default();
    for map in tree_sequences(tree, budget) {
        if t.examined == limit {
            t.hit_limit = true;
            break;
        }
        t.examined += 1;
        if map.is_empty() {
            continue;
        }
        debug_assert!(map.is_connected(), "tree plus edges is always connected");
        let stats = stats_of_connected(&map);
        let code = canonical_form(&map).expect("connected");
        if stats.genus == budget.genus_target && !t.filling.contains_key(&code) {
            t.mirror_merged
                .insert(mirror_merged_form(&map).expect("connected"));
            t.filling.insert(code.clone(), map);
        }
        t.iso.insert(code);
    }
    t
}

/// Runs the full census: every plane tree up to the vertex cap, every
/// multiset of added edges within the edge cap, every rotation system within
/// the degree cap. Trees are farmed out to `workers` threads; the result is
/// identical for any worker count, including where `work_cap` cuts the run.
pub fn generate_candidates(
    budget: ConstructionBudget,
    workers: usize,
) -> Result<Census, EnumError> {
    budget.validate()?;
    let trees = all_trees(&budget);
    let tally = par::with_workers(workers, || {
        let mut acc = Tally::default();
        let mut remaining = budget.work_cap;
        'outer: for batch in trees.chunks(BATCH) {
            let limit = remaining;
            let outcomes = par::map_ordered(batch, |tree| run_tree(tree, &budget, limit));
            for (tree, outcome) in batch.iter().zip(outcomes) {
                if outcome.hit_limit || outcome.examined > remaining {
                    let mut partial = run_tree(tree, &budget, remaining);
                    partial.hit_limit = true;
                    acc.absorb(partial);
                    acc.hit_limit = true;
                    break 'outer;
                }
                remaining -= outcome.examined;
                acc.absorb(outcome);
            }
        }
        acc
    });
    Ok(Census {
        budget,
        result: CensusResult {
            sequences_counted: tally.examined,
            iso_classes: tally.iso.len() as u64,
            filling_classes: tally.filling.len() as u64,
            mirror_merged_filling_classes: tally.mirror_merged.len() as u64,
            truncated: tally.hit_limit,
        },
        filling_maps: tally.filling.into_values().collect(),
    })
}

/// Sequence count for trees on exactly `n = max_vertices` vertices with
/// exactly `h = max_edges - n + 1` added edges, against the product bound
/// `Cat(n-1) * n^(2h) / floor(genus_lower)! * (max_degree!)^n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UpperBoundCheck {
    pub vertices: usize,
    pub extra_edges: usize,
    pub trees: u64,
    pub additions_per_tree: u64,
    pub additions_bound: f64,
    pub sequences_counted: u64,
    /// Exact right-hand side, rounded up to an integer.
    pub bound: String,
    pub bound_ln: f64,
    pub holds: bool,
}

pub fn census_upper_bound_check(budget: ConstructionBudget) -> Result<UpperBoundCheck, EnumError> {
    budget.validate()?;
    let n = budget.max_vertices;
    if budget.max_edges + 1 < n {
        return Err(EnumError::InvalidBudget(format!(
            "max_edges {} cannot hold a spanning tree on {n} vertices",
            budget.max_edges
        )));
    }
    let h = budget.max_edges + 1 - n;
    let mut trees = 0u64;
    let mut sequences = 0u64;
    for tree in enumerate_plane_trees(n)? {
        trees += 1;
        for extra in edge_multisets(n, h) {
            let sk = Skeleton::from_tree(&tree, &extra);
            if sk.max_degree() > budget.max_degree {
                continue;
            }
            for _ in enumerate_rotation_systems(&sk) {
                if sequences == budget.work_cap {
                    return Err(EnumError::Truncated(budget.work_cap));
                }
                sequences += 1;
            }
        }
    }
    let additions = edge_multisets(n, h).count() as u64;

    let floor_lower = lower_floor(budget.genus_target);
    let denom = factorial_exact(floor_lower);
    let numer = catalan_exact(n as u64 - 1)
        * BigUint::from(n).pow(2 * h as u32)
        * factorial_exact(budget.max_degree as u64).pow(n as u32);
    let bound = (&numer + &denom - BigUint::one()) / &denom;
    let holds = BigUint::from(sequences) * &denom <= numer;
    let additions_bound = (n as f64).powi(2 * h as i32) / denom.to_f64().unwrap_or(f64::INFINITY);
    Ok(UpperBoundCheck {
        vertices: n,
        extra_edges: h,
        trees,
        additions_per_tree: additions,
        additions_bound,
        sequences_counted: sequences,
        bound_ln: ln_biguint(&bound),
        bound: bound.to_string(),
        holds,
    })
}

/// `floor(pi sqrt(g(g-1)) / ln(4g-2))`, or 0 below genus 2.
fn lower_floor(genus: usize) -> u64 {
    if genus < 2 {
        0
    } else {
        crate::bounds::floor_snap(genus_lower(genus as u64)) as u64
    }
}
