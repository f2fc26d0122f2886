mod common;

use proptest::prelude::*;
use tvc_core::io::{native_to_string, read_cover, read_native, write_cover};
use tvc_core::{
    d1_approx_solve, d_approx_s_solve, d_approx_solve, Cover, CoverCheck, TemporalGraph, Time, VertexAppearance,
};

use common::{naive_demand_count, naive_is_valid};

type RawGraph = (usize, Time, Vec<(usize, usize, Vec<Time>)>);

/// Raw edge lists with possible duplicates (in either orientation) and
/// unsorted, repeated labels.
fn raw_graph() -> impl Strategy<Value = RawGraph> {
    (2usize..8, 1usize..10).prop_flat_map(|(n, lifetime)| {
        let edge =
            (0..n, 0..n, prop::collection::vec(1..=lifetime, 0..6)).prop_filter("no self-loops", |(u, v, _)| u != v);
        (Just(n), Just(lifetime), prop::collection::vec(edge, 0..10))
    })
}

fn graph() -> impl Strategy<Value = TemporalGraph> {
    raw_graph().prop_map(|(n, lifetime, edges)| TemporalGraph::build(n, lifetime, edges).unwrap())
}

fn graph_delta_cover() -> impl Strategy<Value = (TemporalGraph, Time, Cover)> {
    graph().prop_flat_map(|g| {
        let (n, lifetime) = (g.n(), g.lifetime());
        let cover = prop::collection::btree_set((0..n, 1..=lifetime), 0..12).prop_map(|s| {
            s.into_iter()
                .map(|(v, t)| VertexAppearance::new(v, t))
                .collect::<Cover>()
        });
        (Just(g), 1..=lifetime, cover)
    })
}

proptest! {
    #[test]
    fn edges_at_matches_label_scan(g in graph()) {
        for t in 1..=g.lifetime() {
            let mut expected: Vec<usize> = (0..g.m()).filter(|&id| g.edge(id).appearances.contains(&t)).collect();
            let mut got = g.edges_at(t).unwrap().to_vec();
            expected.sort_unstable();
            got.sort_unstable();
            prop_assert_eq!(got, expected);
        }
    }

    #[test]
    fn build_merges_and_normalizes((n, lifetime, raw) in raw_graph()) {
        let g = TemporalGraph::build(n, lifetime, raw.clone()).unwrap();
        let mut pairs = std::collections::BTreeMap::<(usize, usize), std::collections::BTreeSet<Time>>::new();
        for (u, v, ts) in raw {
            if !ts.is_empty() {
                pairs.entry((u.min(v), u.max(v))).or_default().extend(ts);
            }
        }
        prop_assert_eq!(g.m(), pairs.len());
        for e in g.edges() {
            prop_assert!(e.u < e.v);
            prop_assert!(e.appearances.windows(2).all(|w| w[0] < w[1]));
            let expected: Vec<Time> = pairs[&(e.u, e.v)].iter().copied().collect();
            prop_assert_eq!(&e.appearances, &expected);
        }
    }

    #[test]
    fn validator_agrees_with_definition((g, delta, cover) in graph_delta_cover()) {
        let check = g.validate_cover(delta, &cover).unwrap();
        prop_assert_eq!(check.is_valid(), naive_is_valid(&g, delta, &cover));
        if let CoverCheck::Invalid(witness) = check {
            // The witness is a real, uncovered demand.
            let e = g.edge(witness.edge);
            let window = witness.window_start..witness.window_start + delta;
            prop_assert!(e.appearances.iter().any(|t| window.contains(t)));
            prop_assert!(!cover.iter().any(|a| e.has_endpoint(a.vertex)
                && window.contains(&a.time)
                && e.appearances.contains(&a.time)));
        }
    }

    #[test]
    fn validity_is_monotone_under_supersets((g, delta, cover) in graph_delta_cover(), extra in prop::collection::vec((0usize..8, 1usize..10), 0..6)) {
        let full = d_approx_solve(&g, delta).unwrap();
        let mut bigger = full.clone();
        bigger.union_with(&cover);
        for (v, t) in extra {
            if v < g.n() && t <= g.lifetime() {
                bigger.insert(VertexAppearance::new(v, t));
            }
        }
        prop_assert!(g.validate_cover(delta, &full).unwrap().is_valid());
        prop_assert!(g.validate_cover(delta, &bigger).unwrap().is_valid());
    }

    #[test]
    fn demand_count_matches_definition((g, delta, _) in graph_delta_cover()) {
        prop_assert_eq!(g.demands(delta).unwrap().len(), naive_demand_count(&g, delta));
        prop_assert_eq!(g.demands(1).unwrap().len(), g.total_appearances());
    }

    #[test]
    fn degree_solvers_are_valid((g, delta, _) in graph_delta_cover()) {
        let dense = d_approx_solve(&g, delta).unwrap();
        prop_assert_eq!(&dense, &d_approx_s_solve(&g, delta).unwrap());
        prop_assert!(naive_is_valid(&g, delta, &dense));
        prop_assert!(naive_is_valid(&g, delta, &d1_approx_solve(&g, delta).unwrap()));
    }

    #[test]
    fn native_round_trip(g in graph()) {
        let text = native_to_string(&g);
        let back = read_native(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(native_to_string(&back), text);
    }

    #[test]
    fn cover_round_trip((_, _, cover) in graph_delta_cover()) {
        let mut buf = Vec::new();
        write_cover(&cover, &mut buf).unwrap();
        prop_assert_eq!(read_cover(buf.as_slice()).unwrap(), cover);
    }
}
