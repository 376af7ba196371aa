use serde::Serialize;

use super::{CombinatorialMap, Dart, MapError};

/// Dart-relabeling invariant code of a connected map.
///
/// Layout: `[dart_count, sigma(0), alpha(0), sigma(1), alpha(1), ...]` in
/// the traversal labeling that is lexicographically least over all roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalCode(pub Vec<u32>);

/// Orientation-preserving canonical code.
///
/// From each root dart, darts are labeled in breadth-first order of
/// discovery (visiting `sigma` before `alpha` of each already-labeled dart)
/// and the map is written in that labeling. A rooted labeling of a connected
/// map is unique, so two maps share a code iff some relabeling carries one
/// onto the other.
pub fn canonical_form(map: &CombinatorialMap) -> Result<CanonicalCode, MapError> {
    let components = map.component_count();
    if components > 1 {
        return Err(MapError::Disconnected { components });
    }
    Ok(canonical_of(map.sigma(), map.alpha()))
}

/// The mirror image: every vertex rotation reversed.
pub fn mirror(map: &CombinatorialMap) -> CombinatorialMap {
    let mut inv = vec![0; map.dart_count()];
    for (d, &s) in map.sigma().iter().enumerate() {
        inv[s] = d;
    }
    CombinatorialMap::from_valid(inv, map.alpha().to_vec())
}

/// Code identifying a map up to orientation-reversing isomorphism too.
pub fn mirror_merged_form(map: &CombinatorialMap) -> Result<CanonicalCode, MapError> {
    let direct = canonical_form(map)?;
    let reversed = canonical_form(&mirror(map))?;
    Ok(direct.min(reversed))
}

pub(crate) fn canonical_of(sigma: &[Dart], alpha: &[Dart]) -> CanonicalCode {
    let n = sigma.len();
    let mut best: Option<Vec<u32>> = None;
    let mut label = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut code = Vec::with_capacity(2 * n + 1);
    for root in 0..n {
        label.iter_mut().for_each(|l| *l = u32::MAX);
        order.clear();
        code.clear();
        code.push(n as u32);
        label[root] = 0;
        order.push(root);
        let mut head = 0;
        // Emit while labeling; abandon the root as soon as the prefix is
        // already larger than the best code.
        let mut pruned = false;
        while head < order.len() {
            let d = order[head];
            head += 1;
            for next in [sigma[d], alpha[d]] {
                if label[next] == u32::MAX {
                    label[next] = order.len() as u32;
                    order.push(next);
                }
                code.push(label[next]);
            }
            if let Some(b) = &best {
                if code[..] > b[..code.len()] {
                    pruned = true;
                    break;
                }
            }
        }
        if pruned {
            continue;
        }
        debug_assert_eq!(order.len(), n, "canonical_of needs a connected map");
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code.clone());
        }
    }
    CanonicalCode(best.unwrap_or_else(|| vec![0]))
}
