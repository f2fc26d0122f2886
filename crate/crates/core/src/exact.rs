//! Exact solvers for small instances, used as ground truth in tests and
//! benchmarks.

use crate::error::{Error, Result};
use crate::graph::{Cover, Demand, TemporalGraph, Time, VertexAppearance};

/// Largest candidate count accepted by [`brute_force_solve`].
pub const BRUTE_FORCE_LIMIT: usize = 24;

/// Default node budget for [`exact_solve`].
pub const DEFAULT_BUDGET: u64 = 5_000_000;

/// Demands and the appearances able to cover them.
///
/// Candidates are the endpoints of edges active at each time step; any other
/// appearance covers nothing.
struct CoverageTable {
    candidates: Vec<VertexAppearance>,
    /// Candidate indices covering each demand.
    coverers: Vec<Vec<usize>>,
    /// Demand indices covered by each candidate.
    covers: Vec<Vec<usize>>,
}

impl CoverageTable {
    fn new(g: &TemporalGraph, delta: Time) -> Result<Self> {
        let demands: Vec<Demand> = g.demands(delta)?;
        let mut candidates: Vec<VertexAppearance> = (1..=g.lifetime())
            .flat_map(|t| {
                g.active(t).iter().flat_map(move |&id| {
                    let e = g.edge(id);
                    [VertexAppearance::new(e.u, t), VertexAppearance::new(e.v, t)]
                })
            })
            .collect();
        candidates.sort_unstable();
        candidates.dedup();

        let mut coverers = vec![Vec::new(); demands.len()];
        let mut covers = vec![Vec::new(); candidates.len()];
        for (di, d) in demands.iter().enumerate() {
            let e = g.edge(d.edge);
            for &t in e
                .appearances
                .iter()
                .filter(|&&t| t >= d.window_start && t < d.window_start + delta)
            {
                for w in [e.u, e.v] {
                    let ci = candidates
                        .binary_search(&VertexAppearance::new(w, t))
                        .expect("endpoint of an active edge is a candidate");
                    coverers[di].push(ci);
                    covers[ci].push(di);
                }
            }
        }
        Ok(Self {
            candidates,
            coverers,
            covers,
        })
    }
}

struct Search<'a> {
    table: &'a CoverageTable,
    /// Number of chosen candidates covering each demand.
    hit: Vec<u32>,
    remaining: usize,
    max_cover: usize,
    chosen: Vec<usize>,
    best: Option<Vec<usize>>,
    best_len: usize,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn select(&mut self, ci: usize) {
        self.chosen.push(ci);
        for &di in &self.table.covers[ci] {
            if self.hit[di] == 0 {
                self.remaining -= 1;
            }
            self.hit[di] += 1;
        }
    }

    fn unselect(&mut self) {
        let ci = self.chosen.pop().expect("selection stack is not empty");
        for &di in &self.table.covers[ci] {
            self.hit[di] -= 1;
            if self.hit[di] == 0 {
                self.remaining += 1;
            }
        }
    }

    fn lower_bound(&self) -> usize {
        self.remaining.div_ceil(self.max_cover)
    }

    fn run(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if self.remaining == 0 {
            if self.chosen.len() < self.best_len {
                self.best_len = self.chosen.len();
                self.best = Some(self.chosen.clone());
            }
            return Ok(());
        }
        if self.chosen.len() + self.lower_bound() >= self.best_len {
            return Ok(());
        }
        // Fail first: the open demand with the fewest coverers.
        let demand = (0..self.hit.len())
            .filter(|&di| self.hit[di] == 0)
            .min_by_key(|&di| self.table.coverers[di].len())
            .expect("remaining > 0");
        for &ci in &self.table.coverers[demand] {
            self.select(ci);
            let result = self.run();
            self.unselect();
            result?;
        }
        Ok(())
    }
}

/// Minimum cover by branch and bound.
///
/// Branches over the appearances covering the open demand with the fewest
/// coverers; prunes with `|chosen| + ceil(remaining / max coverage)`.
/// `budget` caps the number of search nodes.
pub fn exact_solve(g: &TemporalGraph, delta: Time, budget: u64) -> Result<Cover> {
    let table = CoverageTable::new(g, delta)?;
    let demand_count = table.coverers.len();
    let mut search = Search {
        table: &table,
        hit: vec![0; demand_count],
        remaining: demand_count,
        max_cover: table.covers.iter().map(Vec::len).max().unwrap_or(1).max(1),
        chosen: Vec::new(),
        best: None,
        best_len: table.candidates.len() + 1,
        nodes: 0,
        budget,
    };
    search.run()?;
    let best = search.best.expect("choosing every candidate is a cover");
    Ok(best.into_iter().map(|ci| table.candidates[ci]).collect())
}

/// Minimum cover by enumerating candidate subsets in order of size.
pub fn brute_force_solve(g: &TemporalGraph, delta: Time) -> Result<Cover> {
    let table = CoverageTable::new(g, delta)?;
    let count = table.candidates.len();
    if count > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            candidates: count,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let masks: Vec<u32> = table
        .coverers
        .iter()
        .map(|cs| cs.iter().fold(0u32, |m, &ci| m | (1 << ci)))
        .collect();
    for size in 0..=count {
        let mut subset: u32 = if size == 0 { 0 } else { (1u32 << size) - 1 };
        loop {
            if subset >> count != 0 {
                break;
            }
            if masks.iter().all(|&m| m & subset != 0) {
                return Ok((0..count)
                    .filter(|&ci| subset & (1 << ci) != 0)
                    .map(|ci| table.candidates[ci])
                    .collect());
            }
            if subset == 0 {
                break;
            }
            subset = next_same_popcount(subset);
        }
    }
    unreachable!("the full candidate set covers every demand")
}

/// Next larger integer with the same number of set bits (Gosper's hack).
fn next_same_popcount(x: u32) -> u32 {
    let low = x & x.wrapping_neg();
    let ripple = x.wrapping_add(low);
    if ripple == 0 {
        return u32::MAX;
    }
    (((ripple ^ x) >> 2) / low) | ripple
}
