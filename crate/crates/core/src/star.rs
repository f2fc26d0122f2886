//! Approximations for always-star temporal graphs.
//!
//! In an always-star graph each nonempty snapshot has one center that is an
//! endpoint of every active edge, so a cover never needs more than the center
//! appearance of each time step.
//!
//! * [`star_sc_solve`] takes every center: ratio `2Δ - 1`, exact for `Δ = 1`.
//! * [`star_acov_solve`] slides a window over a ring buffer of the last `Δ`
//!   time steps and drops centers whose edges are covered elsewhere in the
//!   window: ratio `Δ - 1`, exact for `Δ <= 2`.

use crate::error::{Error, Result};
use crate::graph::{Cover, StarCheck, TemporalGraph, Time, Vertex, VertexAppearance};

/// A graph certified to be always-star.
#[derive(Debug, Clone, Copy)]
pub struct AlwaysStar<'g> {
    graph: &'g TemporalGraph,
}

impl<'g> AlwaysStar<'g> {
    pub fn certify(graph: &'g TemporalGraph) -> Result<Self> {
        match graph.validate_always_star() {
            StarCheck::AlwaysStar => Ok(Self { graph }),
            StarCheck::Offending(t) => Err(Error::NotAlwaysStar(t)),
        }
    }

    pub fn graph(&self) -> &'g TemporalGraph {
        self.graph
    }

    pub fn center(&self, t: Time) -> Option<Vertex> {
        self.graph.center_unchecked(t)
    }
}

pub fn star_sc_solve(g: &TemporalGraph, delta: Time) -> Result<Cover> {
    g.check_delta(delta)?;
    Ok(star_sc(AlwaysStar::certify(g)?))
}

/// One center appearance per nonempty snapshot.
pub fn star_sc(star: AlwaysStar<'_>) -> Cover {
    (1..=star.graph.lifetime())
        .filter_map(|t| star.center(t).map(|c| VertexAppearance::new(c, t)))
        .collect()
}

pub fn star_acov_solve(g: &TemporalGraph, delta: Time) -> Result<Cover> {
    g.check_delta(delta)?;
    Ok(star_acov(AlwaysStar::certify(g)?, delta))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Excluded,
    Available,
    Included,
}

#[derive(Debug, Clone, Copy)]
struct Slot {
    time: Time,
    status: Status,
}

/// Ring buffer holding the time steps of the current window.
///
/// Slot `(first + i) % Δ` holds time step `t + i` while the window starts at
/// `t`. A slot keeps its status across window slides until it is overwritten.
struct AcovState<'g> {
    graph: &'g TemporalGraph,
    slots: Vec<Slot>,
    first: usize,
}

impl<'g> AcovState<'g> {
    fn new(graph: &'g TemporalGraph, delta: Time) -> Self {
        let mut state = Self {
            graph,
            slots: vec![
                Slot {
                    time: 0,
                    status: Status::Excluded,
                };
                delta
            ],
            first: delta - 1,
        };
        for t in 1..delta {
            state.load(t - 1, t);
        }
        state
    }

    fn load(&mut self, idx: usize, time: Time) {
        let status = if self.graph.active(time).is_empty() {
            Status::Excluded
        } else {
            Status::Available
        };
        self.slots[idx] = Slot { time, status };
    }

    /// Moves to the window ending at `newest`.
    fn advance(&mut self, newest: Time) {
        self.load(self.first, newest);
        self.first = (self.first + 1) % self.slots.len();
    }

    fn idx(&self, pos: usize) -> usize {
        (self.first + pos) % self.slots.len()
    }

    fn slot_at(&self, pos: usize) -> Slot {
        self.slots[self.idx(pos)]
    }

    fn active_at(&self, pos: usize, edge: usize) -> bool {
        self.graph.active(self.slot_at(pos).time).binary_search(&edge).is_ok()
    }

    /// Whether `edge` is active at some non-excluded slot other than `skip`.
    fn coverable_elsewhere(&self, edge: usize, skip: usize) -> bool {
        (0..self.slots.len())
            .any(|pos| pos != skip && self.slot_at(pos).status != Status::Excluded && self.active_at(pos, edge))
    }

    /// Slot chosen to cover `edge` once the slot it sits in is excluded: an
    /// already included one if possible, otherwise the latest available one.
    fn cover_slot_for(&self, edge: usize) -> Option<usize> {
        let len = self.slots.len();
        (0..len)
            .find(|&pos| self.slot_at(pos).status == Status::Included && self.active_at(pos, edge))
            .or_else(|| {
                (0..len)
                    .rev()
                    .find(|&pos| self.slot_at(pos).status == Status::Available && self.active_at(pos, edge))
            })
    }

    fn include(&mut self, pos: usize, cover: &mut Cover) {
        let idx = self.idx(pos);
        self.slots[idx].status = Status::Included;
        let time = self.slots[idx].time;
        let center = self.graph.center_unchecked(time).expect("included slot has edges");
        cover.insert(VertexAppearance::new(center, time));
    }

    fn process_window(&mut self, cover: &mut Cover) {
        let graph = self.graph;
        for pos in 0..self.slots.len() {
            let slot = self.slot_at(pos);
            if slot.status == Status::Included {
                continue;
            }
            let edges = graph.active(slot.time);
            if edges.iter().any(|&e| !self.coverable_elsewhere(e, pos)) {
                self.include(pos, cover);
                continue;
            }
            let idx = self.idx(pos);
            self.slots[idx].status = Status::Excluded;
            for &e in edges {
                let j = self.cover_slot_for(e).expect("exclusion check guarantees another slot");
                if self.slot_at(j).status != Status::Included {
                    self.include(j, cover);
                }
            }
        }
    }
}

/// Sliding-window exclusion over the star centers.
///
/// Windows are visited left to right. Inside a window each time step that is
/// not yet included is kept if one of its edges has no other non-excluded
/// center in the window; otherwise it is excluded and its edges are covered by
/// an included center or, failing that, the latest available one.
pub fn star_acov(star: AlwaysStar<'_>, delta: Time) -> Cover {
    let g = star.graph;
    let mut cover = Cover::new();
    if delta == 0 || delta > g.lifetime() {
        return cover;
    }
    let mut state = AcovState::new(g, delta);
    for t in 1..=g.window_count(delta) {
        state.advance(t + delta - 1);
        state.process_window(&mut cover);
    }
    cover
}
