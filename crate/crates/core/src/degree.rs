//! Approximations for always degree-at-most-`d` temporal graphs, usable on any
//! temporal graph.
//!
//! * [`d_approx_solve`] solves every single-edge subgraph exactly and takes the
//!   union (ratio `d`). It walks every time step of every edge.
//! * [`d_approx_s_solve`] returns the same cover but only visits the edge's
//!   own appearances, so its cost is proportional to the number of labels.
//! * [`d1_approx_solve`] covers two-edge paths through their middle vertex
//!   whenever possible (ratio `d - 1`).

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{window_intervals, Cover, EdgeId, TemporalGraph, Time, Vertex, VertexAppearance};

fn check_delta(delta: Time, lifetime: Time) -> Result<()> {
    if delta == 0 || delta > lifetime {
        return Err(Error::BadDelta { delta, lifetime });
    }
    Ok(())
}

/// Minimum set of time steps from `appearances` hitting every window that the
/// edge is active in.
///
/// Windows are scanned left to right; the first unsatisfied one takes the
/// latest appearance inside it. Only the appearances themselves are visited.
pub fn single_edge_exact(appearances: &[Time], lifetime: Time, delta: Time) -> Result<Vec<Time>> {
    check_delta(delta, lifetime)?;
    Ok(single_edge_sparse(appearances, lifetime, delta))
}

fn single_edge_sparse(appearances: &[Time], lifetime: Time, delta: Time) -> Vec<Time> {
    let last_window = lifetime + 1 - delta;
    let mut chosen = Vec::new();
    // Every window start below `next` is already satisfied.
    let mut next = 1;
    let mut i = 0;
    while i < appearances.len() {
        let a = appearances[i];
        if a < next {
            i += 1;
            continue;
        }
        let window = next.max((a + 1).saturating_sub(delta));
        if window > last_window {
            break;
        }
        let end = window + delta - 1;
        while i + 1 < appearances.len() && appearances[i + 1] <= end {
            i += 1;
        }
        let c = appearances[i];
        chosen.push(c);
        next = c + 1;
        i += 1;
    }
    chosen
}

/// Same greedy as [`single_edge_sparse`], driven by a walk over every window
/// start and a dense activity buffer of length `T + 1`.
fn single_edge_dense(appearances: &[Time], lifetime: Time, delta: Time, active: &mut [bool]) -> Vec<Time> {
    for &a in appearances {
        active[a] = true;
    }
    let mut chosen = Vec::new();
    let mut in_window = active[1..delta].iter().filter(|&&x| x).count();
    let mut last: Time = 0;
    for t in 1..=lifetime + 1 - delta {
        let end = t + delta - 1;
        if active[end] {
            in_window += 1;
        }
        if t > 1 && active[t - 1] {
            in_window -= 1;
        }
        if in_window > 0 && last < t {
            let c = (t..=end).rev().find(|&s| active[s]).expect("window is active");
            chosen.push(c);
            last = c;
        }
    }
    for &a in appearances {
        active[a] = false;
    }
    chosen
}

/// Endpoint hosting a single-edge cover: the one with the larger underlying
/// degree, ties to the smaller id.
pub fn chosen_endpoint(g: &TemporalGraph, edge: EdgeId) -> Vertex {
    let e = g.edge(edge);
    if g.degree(e.v) > g.degree(e.u) {
        e.v
    } else {
        e.u
    }
}

pub fn d_approx_solve(g: &TemporalGraph, delta: Time) -> Result<Cover> {
    g.check_delta(delta)?;
    let mut active = vec![false; g.lifetime() + 1];
    let mut cover = Cover::new();
    for (id, e) in g.edges().iter().enumerate() {
        let host = chosen_endpoint(g, id);
        for t in single_edge_dense(&e.appearances, g.lifetime(), delta, &mut active) {
            cover.insert(VertexAppearance::new(host, t));
        }
    }
    Ok(cover)
}

pub fn d_approx_s_solve(g: &TemporalGraph, delta: Time) -> Result<Cover> {
    g.check_delta(delta)?;
    let mut cover = Cover::new();
    for (id, e) in g.edges().iter().enumerate() {
        let host = chosen_endpoint(g, id);
        for t in single_edge_sparse(&e.appearances, g.lifetime(), delta) {
            cover.insert(VertexAppearance::new(host, t));
        }
    }
    Ok(cover)
}

/// Unsatisfied window starts per edge, stored as sorted disjoint inclusive
/// intervals.
#[derive(Debug, Clone)]
pub struct DemandLedger {
    open: Vec<Vec<(Time, Time)>>,
    delta: Time,
    last_window: Time,
}

impl DemandLedger {
    pub fn new(g: &TemporalGraph, delta: Time) -> Result<Self> {
        g.check_delta(delta)?;
        let open = g
            .edges()
            .iter()
            .map(|e| window_intervals(&e.appearances, delta, g.lifetime()).collect())
            .collect();
        Ok(Self {
            open,
            delta,
            last_window: g.window_count(delta),
        })
    }

    /// Earliest unsatisfied window of `edge`.
    pub fn first_open(&self, edge: EdgeId) -> Option<Time> {
        self.open[edge].first().map(|&(lo, _)| lo)
    }

    pub fn is_open(&self, edge: EdgeId, window: Time) -> bool {
        self.hits(edge, window, window)
    }

    /// Whether `edge` has an unsatisfied window containing time step `t`.
    pub fn open_around(&self, edge: EdgeId, t: Time) -> bool {
        let lo = (t + 1).saturating_sub(self.delta).max(1);
        let hi = t.min(self.last_window);
        lo <= hi && self.hits(edge, lo, hi)
    }

    fn hits(&self, edge: EdgeId, lo: Time, hi: Time) -> bool {
        let iv = &self.open[edge];
        let i = iv.partition_point(|&(_, h)| h < lo);
        i < iv.len() && iv[i].0 <= hi
    }

    /// Marks every window containing `t` as satisfied for `edge`.
    pub fn satisfy_around(&mut self, edge: EdgeId, t: Time) {
        let lo = (t + 1).saturating_sub(self.delta).max(1);
        let hi = t.min(self.last_window);
        if lo > hi {
            return;
        }
        let iv = &mut self.open[edge];
        let start = iv.partition_point(|&(_, h)| h < lo);
        let end = iv.partition_point(|&(l, _)| l <= hi);
        if start >= end {
            return;
        }
        let mut keep = Vec::with_capacity(2);
        if iv[start].0 < lo {
            keep.push((iv[start].0, lo - 1));
        }
        if iv[end - 1].1 > hi {
            keep.push((hi + 1, iv[end - 1].1));
        }
        iv.splice(start..end, keep);
    }

    pub fn is_empty(&self) -> bool {
        self.open.iter().all(Vec::is_empty)
    }

    /// Total number of unsatisfied `(edge, window)` demands.
    pub fn open_count(&self) -> usize {
        self.open.iter().flatten().map(|&(lo, hi)| hi - lo + 1).sum()
    }
}

/// Two-edge path cover.
///
/// Demands are handled in `(window, edge)` order. For an unsatisfied demand of
/// edge `e` in window `W_t`, the appearances of `e` inside `W_t` are tried from
/// the latest down; the first one at which an endpoint `v` of `e` also carries
/// another active edge with an unsatisfied window around that step puts `v`
/// (the middle of the path) into the cover. Without such a partner the demand
/// falls back to the single-edge rule.
pub fn d1_approx_solve(g: &TemporalGraph, delta: Time) -> Result<Cover> {
    let mut ledger = DemandLedger::new(g, delta)?;
    let mut queue: BinaryHeap<Reverse<(Time, EdgeId)>> = (0..g.m())
        .filter_map(|e| ledger.first_open(e).map(|t| Reverse((t, e))))
        .collect();
    let mut cover = Cover::new();

    while let Some(Reverse((window, edge))) = queue.pop() {
        if ledger.first_open(edge) != Some(window) {
            continue;
        }
        let e = g.edge(edge);
        let lo = e.appearances.partition_point(|&x| x < window);
        let hi = e.appearances.partition_point(|&x| x < window + delta);
        let in_window = &e.appearances[lo..hi];
        let host = chosen_endpoint(g, edge);
        let endpoints = [host, e.other(host)];

        let pick = in_window
            .iter()
            .rev()
            .find_map(|&t| {
                endpoints.iter().find_map(|&v| {
                    g.active(t)
                        .iter()
                        .any(|&f| f != edge && g.edge(f).has_endpoint(v) && ledger.open_around(f, t))
                        .then_some(VertexAppearance::new(v, t))
                })
            })
            .unwrap_or_else(|| {
                let latest = *in_window.last().expect("open demand has an appearance in its window");
                VertexAppearance::new(host, latest)
            });

        cover.insert(pick);
        for &f in g.active(pick.time) {
            if !g.edge(f).has_endpoint(pick.vertex) {
                continue;
            }
            let before = ledger.first_open(f);
            ledger.satisfy_around(f, pick.time);
            let after = ledger.first_open(f);
            if after != before {
                if let Some(t) = after {
                    queue.push(Reverse((t, f)));
                }
            }
        }
    }
    debug_assert!(ledger.is_empty());
    Ok(cover)
}
