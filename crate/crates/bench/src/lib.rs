//! Instance fixtures for the criterion benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tvc_core::{generate_always_star, GeneratorConfig, TemporalGraph, Time};

/// Always-star instance at the sizes used for the solver comparisons.
pub fn star_instance(n: usize, lifetime: Time, max_leaves: usize, seed: u64, underlying: bool) -> TemporalGraph {
    generate_always_star(&GeneratorConfig::new(n, lifetime, max_leaves, seed).underlying_star(underlying))
        .expect("fixture configuration is valid")
}

/// A path of `edges` edges over a long lifetime, each edge active at no more
/// than `max_labels` random steps.
pub fn sparse_instance(lifetime: Time, edges: usize, max_labels: usize, seed: u64) -> TemporalGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let list: Vec<_> = (0..edges)
        .map(|i| {
            let k = rng.gen_range(1..=max_labels);
            let labels: Vec<Time> = (0..k).map(|_| rng.gen_range(1..=lifetime)).collect();
            (i, i + 1, labels)
        })
        .collect();
    TemporalGraph::build(edges + 1, lifetime, list).expect("fixture edges are in range")
}
