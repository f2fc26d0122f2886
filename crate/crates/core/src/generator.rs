//! Seeded always-star instance generation and the adversarial families for
//! the star algorithms.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64`, and every draw
//! goes through `u32`/`f64` sampling, so a configuration yields the same graph
//! on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{TemporalGraph, Time, Vertex};

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub lifetime: Time,
    /// Maximum number of leaves per snapshot.
    pub max_leaves: usize,
    pub seed: u64,
    /// Keep one center for the whole lifetime.
    pub underlying_star: bool,
    pub empty_snapshot_prob: f64,
}

impl GeneratorConfig {
    pub fn new(n: usize, lifetime: Time, max_leaves: usize, seed: u64) -> Self {
        Self {
            n,
            lifetime,
            max_leaves,
            seed,
            underlying_star: false,
            empty_snapshot_prob: 0.0,
        }
    }

    pub fn underlying_star(mut self, yes: bool) -> Self {
        self.underlying_star = yes;
        self
    }

    pub fn empty_snapshot_prob(mut self, p: f64) -> Self {
        self.empty_snapshot_prob = p;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.empty_snapshot_prob) {
            return Err(Error::BadConfig(format!(
                "empty snapshot probability {} outside [0, 1]",
                self.empty_snapshot_prob
            )));
        }
        if self.max_leaves > 0 && self.max_leaves >= self.n {
            return Err(Error::BadConfig(format!(
                "{} leaves per snapshot need at least {} vertices, got {}",
                self.max_leaves,
                self.max_leaves + 1,
                self.n
            )));
        }
        if self.n > u32::MAX as usize {
            return Err(Error::BadConfig("vertex count exceeds u32".into()));
        }
        Ok(())
    }
}

/// Draws one star per time step.
///
/// For every step: a coin with `empty_snapshot_prob` decides whether the
/// snapshot is empty; otherwise the center is uniform over all vertices (or
/// the fixed center), the leaf count uniform in `[1, max_leaves]` and the
/// leaves uniform without replacement from the remaining vertices.
pub fn generate_always_star(cfg: &GeneratorConfig) -> Result<TemporalGraph> {
    cfg.validate()?;
    let mut labels: std::collections::BTreeMap<(Vertex, Vertex), Vec<Time>> = Default::default();
    if cfg.max_leaves > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let n = cfg.n as u32;
        let fixed_center = rng.gen_range(0..n);
        let mut pool: Vec<u32> = Vec::with_capacity(cfg.n - 1);
        for t in 1..=cfg.lifetime {
            let coin: f64 = rng.gen();
            if coin < cfg.empty_snapshot_prob {
                continue;
            }
            let center = if cfg.underlying_star {
                fixed_center
            } else {
                rng.gen_range(0..n)
            };
            let leaves = rng.gen_range(1..=cfg.max_leaves as u32) as usize;
            pool.clear();
            pool.extend((0..n).filter(|&v| v != center));
            // Partial Fisher-Yates: the first `leaves` entries become the sample.
            for i in 0..leaves {
                let j = rng.gen_range(i as u32..pool.len() as u32) as usize;
                pool.swap(i, j);
            }
            for &leaf in &pool[..leaves] {
                let (a, b) = (center.min(leaf) as Vertex, center.max(leaf) as Vertex);
                labels.entry((a, b)).or_default().push(t);
            }
        }
    }
    TemporalGraph::build(cfg.n, cfg.lifetime, labels.into_iter().map(|((u, v), ts)| (u, v, ts)))
}

/// Periodic instance on which the window-exclusion algorithm reaches its
/// `Δ - 1` ratio.
///
/// Center 0, leaves `1..=leaves`. The leaves are split into `Δ - 1` nonempty
/// consecutive groups; inside each period of `Δ` steps the first step shows
/// every edge and step `1 + k` shows group `k`. `T = reps * Δ`.
pub fn worst_case_acov_instance(delta: Time, reps: usize, leaves: usize) -> Result<TemporalGraph> {
    if delta < 2 {
        return Err(Error::BadConfig("window size must be at least 2".into()));
    }
    if leaves < delta - 1 {
        return Err(Error::BadConfig(format!(
            "{leaves} leaves cannot fill {} distinct snapshots",
            delta - 1
        )));
    }
    if reps == 0 {
        return Err(Error::BadConfig("at least one repetition required".into()));
    }
    let groups = delta - 1;
    let (base, extra) = (leaves / groups, leaves % groups);
    let mut group_of = Vec::with_capacity(leaves);
    for k in 0..groups {
        let size = base + usize::from(k < extra);
        group_of.extend(std::iter::repeat_n(k, size));
    }
    let edges = group_of.iter().enumerate().map(|(i, &k)| {
        let labels = (0..reps)
            .flat_map(|r| [r * delta + 1, r * delta + 2 + k])
            .collect::<Vec<_>>();
        (0, i + 1, labels)
    });
    TemporalGraph::build(leaves + 1, reps * delta, edges)
}

/// A single edge active at every step of a lifetime `2Δ - 1`, where taking
/// every center costs `2Δ - 1` against an optimum of 1.
pub fn worst_case_sc_instance(delta: Time) -> Result<TemporalGraph> {
    if delta < 2 {
        return Err(Error::BadConfig("window size must be at least 2".into()));
    }
    let lifetime = 2 * delta - 1;
    TemporalGraph::build(2, lifetime, [(0, 1, (1..=lifetime).collect())])
}
