//! Instance corpora and definition-level oracles shared by the integration
//! tests. Nothing here calls into the solvers or the library validator.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tvc_core::{generate_always_star, Cover, GeneratorConfig, TemporalGraph, Time};

/// Checks a cover straight from the definition: every (window, edge) pair
/// with an appearance inside the window needs an endpoint appearance at one
/// of the edge's own time steps inside that window.
pub fn naive_is_valid(g: &TemporalGraph, delta: Time, cover: &Cover) -> bool {
    for start in 1..=g.lifetime() + 1 - delta {
        let window = start..start + delta;
        for e in g.edges() {
            let active: Vec<Time> = e.appearances.iter().copied().filter(|t| window.contains(t)).collect();
            if active.is_empty() {
                continue;
            }
            let covered = cover
                .iter()
                .any(|a| (a.vertex == e.u || a.vertex == e.v) && active.contains(&a.time));
            if !covered {
                return false;
            }
        }
    }
    true
}

/// Number of (window, edge) demands, counted by brute force.
pub fn naive_demand_count(g: &TemporalGraph, delta: Time) -> usize {
    (1..=g.lifetime() + 1 - delta)
        .map(|s| {
            g.edges()
                .iter()
                .filter(|e| e.appearances.iter().any(|&t| t >= s && t < s + delta))
                .count()
        })
        .sum()
}

/// Minimum number of appearances of a single edge hitting all its windows,
/// by enumerating every subset of the appearances (as bit masks over time).
pub fn brute_single_edge_min(appearances: &[Time], lifetime: Time, delta: Time) -> usize {
    let full: u32 = appearances.iter().fold(0, |m, &t| m | 1 << (t - 1));
    let windows: Vec<u32> = (1..=lifetime + 1 - delta)
        .map(|s| (s..s + delta).fold(0u32, |m, t| m | 1 << (t - 1)) & full)
        .filter(|&m| m != 0)
        .collect();
    let mut best = usize::MAX;
    let mut sub = full;
    loop {
        if (sub.count_ones() as usize) < best && windows.iter().all(|&w| w & sub != 0) {
            best = sub.count_ones() as usize;
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & full;
    }
    best
}

/// Uniform random temporal graph: each vertex pair becomes an edge with
/// probability `edge_prob`, and each edge is active at each step with
/// probability `label_prob` (at least once).
pub fn random_general(n: usize, lifetime: Time, edge_prob: f64, label_prob: f64, seed: u64) -> TemporalGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !rng.gen_bool(edge_prob) {
                continue;
            }
            let mut labels: Vec<Time> = (1..=lifetime).filter(|_| rng.gen_bool(label_prob)).collect();
            if labels.is_empty() {
                labels.push(rng.gen_range(1..=lifetime));
            }
            edges.push((u, v, labels));
        }
    }
    TemporalGraph::build(n, lifetime, edges).expect("generated edges are in range")
}

/// Small always-star instances (n <= 6, T <= 8) mixing underlying stars,
/// empty snapshots and every admissible leaf bound.
pub fn small_star_corpus(count: usize) -> Vec<TemporalGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(2..=6);
            let lifetime = rng.gen_range(1..=8);
            let d = rng.gen_range(1..n);
            let cfg = GeneratorConfig::new(n, lifetime, d, i as u64)
                .underlying_star(i % 2 == 1)
                .empty_snapshot_prob(if i % 3 == 0 { 0.2 } else { 0.0 });
            generate_always_star(&cfg).expect("valid config")
        })
        .collect()
}

/// Small arbitrary temporal graphs (n <= 6, T <= 8).
pub fn small_general_corpus(count: usize) -> Vec<TemporalGraph> {
    (0..count)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(0xbeef ^ i as u64);
            let n = rng.gen_range(2..=6);
            let lifetime = rng.gen_range(1..=8);
            random_general(n, lifetime, 0.5, 0.35, i as u64)
        })
        .collect()
}

pub fn sample() -> TemporalGraph {
    // a = 0, b = 1, c = 2, d = 3
    TemporalGraph::build(
        4,
        3,
        vec![
            (0, 3, vec![1, 2]),
            (0, 1, vec![1, 3]),
            (1, 3, vec![2]),
            (2, 3, vec![2, 3]),
        ],
    )
    .unwrap()
}
