use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ribbon_census::map::format::{parse_map, write_map};
use ribbon_census::map::{
    canonical_form, graph_cycle_rank, induced_submap, is_filling_subgraph, mirror,
    mirror_merged_form, spanning_tree, surface_stats, trace_faces,
};
use ribbon_census::oracle::{gluing_face_count, naive_is_filling, naive_surface};
use ribbon_census::CombinatorialMap;

const SEED: u64 = 0x5eed_2a95;

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Random rotation on `2e` darts with the standard edge pairing, plus a
/// random dart relabeling of the same size.
fn map_and_relabeling() -> impl Strategy<Value = (CombinatorialMap, Vec<usize>)> {
    (1usize..10).prop_flat_map(|e| {
        (shuffled(2 * e), shuffled(2 * e))
            .prop_map(|(sigma, perm)| (CombinatorialMap::with_standard_alpha(sigma).unwrap(), perm))
    })
}

fn connected_map() -> impl Strategy<Value = CombinatorialMap> {
    map_and_relabeling()
        .prop_map(|(m, _)| m)
        .prop_filter("connected", |m| m.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn faces_partition_the_darts((map, _) in map_and_relabeling()) {
        let mut seen: Vec<usize> = trace_faces(&map).concat();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..map.dart_count()).collect::<Vec<_>>());
        prop_assert_eq!(trace_faces(&map).len(), gluing_face_count(&map));
    }

    #[test]
    fn stats_survive_relabeling((map, perm) in map_and_relabeling()) {
        let moved = map.relabel(&perm).unwrap();
        prop_assert_eq!(graph_cycle_rank(&map), graph_cycle_rank(&moved));
        if map.is_connected() {
            prop_assert_eq!(surface_stats(&map).unwrap(), surface_stats(&moved).unwrap());
            prop_assert_eq!(canonical_form(&map).unwrap(), canonical_form(&moved).unwrap());
        }
    }

    #[test]
    fn euler_characteristic_is_even(map in connected_map()) {
        let s = surface_stats(&map).unwrap();
        prop_assert_eq!(s.chi % 2, 0);
        prop_assert_eq!(s.chi, 2 - 2 * s.genus as i64);
        let (v, e, f, genus) = naive_surface(map.sigma(), map.alpha());
        prop_assert_eq!((s.vertices, s.edges, s.faces, s.genus), (v, e, f, genus));
    }

    #[test]
    fn every_edge_fills(map in connected_map()) {
        let all: Vec<usize> = (0..map.edge_count()).collect();
        prop_assert!(is_filling_subgraph(&map, &all).unwrap());
    }

    #[test]
    fn spanning_tree_is_a_plane_tree(map in connected_map()) {
        let tree = spanning_tree(&map).unwrap();
        prop_assert_eq!(tree.len(), map.vertex_count() - 1);
        let sub = induced_submap(&map, &tree).unwrap();
        if !tree.is_empty() {
            let g = graph_cycle_rank(&sub);
            prop_assert_eq!(g.components, 1);
            prop_assert_eq!(g.cycle_rank, 0);
            prop_assert_eq!(surface_stats(&sub).unwrap().genus, 0);
            prop_assert_eq!(sub.vertex_count(), map.vertex_count());
        }
    }

    #[test]
    fn filling_agrees_with_oracle(map in connected_map(), mask in any::<u16>()) {
        let kept: Vec<usize> = (0..map.edge_count()).filter(|e| mask >> e & 1 == 1).collect();
        prop_assert_eq!(is_filling_subgraph(&map, &kept).unwrap(), naive_is_filling(&map, &kept));
    }

    #[test]
    fn exchange_format_round_trips((map, _) in map_and_relabeling()) {
        let text = write_map(&map);
        prop_assert_eq!(parse_map(&text).unwrap(), map);
    }

    #[test]
    fn mirror_is_an_involution(map in connected_map()) {
        let back = mirror(&mirror(&map));
        prop_assert_eq!(&back, &map);
        let merged = mirror_merged_form(&map).unwrap();
        prop_assert!(merged <= canonical_form(&map).unwrap());
        prop_assert_eq!(merged, mirror_merged_form(&mirror(&map)).unwrap());
        prop_assert_eq!(surface_stats(&mirror(&map)).unwrap(), surface_stats(&map).unwrap());
    }
}

#[test]
fn face_count_matches_gluing_on_random_large_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..10_000 {
        let e = rng.gen_range(1..=50);
        let mut sigma: Vec<usize> = (0..2 * e).collect();
        sigma.shuffle(&mut rng);
        let map = CombinatorialMap::with_standard_alpha(sigma).unwrap();
        assert_eq!(
            trace_faces(&map).len(),
            gluing_face_count(&map),
            "seed {SEED:#x}, map {map}"
        );
    }
}
