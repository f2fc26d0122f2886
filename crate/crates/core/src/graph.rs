//! Temporal graph storage, sliding windows, demands and cover validation.
//!
//! Vertices are dense 0-based ids, time steps run from 1 to the lifetime `T`.
//! Besides the underlying edges with their appearance lists, the graph keeps
//! two compressed indices: edges active per time step and edges incident to
//! each vertex.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Time = usize;
pub type EdgeId = usize;

/// An underlying edge `u < v` together with its time labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnderlyingEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub appearances: Vec<Time>,
}

impl UnderlyingEdge {
    pub fn has_endpoint(&self, w: Vertex) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint opposite to `w`. `w` must be an endpoint.
    pub fn other(&self, w: Vertex) -> Vertex {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    pub fn is_active_at(&self, t: Time) -> bool {
        self.appearances.binary_search(&t).is_ok()
    }
}

/// A vertex at a time step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexAppearance {
    pub vertex: Vertex,
    pub time: Time,
}

impl VertexAppearance {
    pub fn new(vertex: Vertex, time: Time) -> Self {
        Self { vertex, time }
    }
}

// Covers are kept in time order, which is also the order written to disk.
impl Ord for VertexAppearance {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.time, self.vertex).cmp(&(other.time, other.vertex))
    }
}

impl PartialOrd for VertexAppearance {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexAppearance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.vertex, self.time)
    }
}

/// A duplicate-free set of vertex appearances.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Cover {
    appearances: BTreeSet<VertexAppearance>,
}

impl Cover {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `false` if the appearance was already present.
    pub fn insert(&mut self, appearance: VertexAppearance) -> bool {
        self.appearances.insert(appearance)
    }

    pub fn remove(&mut self, appearance: &VertexAppearance) -> bool {
        self.appearances.remove(appearance)
    }

    pub fn contains(&self, appearance: &VertexAppearance) -> bool {
        self.appearances.contains(appearance)
    }

    pub fn len(&self) -> usize {
        self.appearances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.appearances.is_empty()
    }

    /// Appearances in `(time, vertex)` order.
    pub fn iter(&self) -> std::collections::btree_set::Iter<'_, VertexAppearance> {
        self.appearances.iter()
    }

    pub fn is_subset(&self, other: &Cover) -> bool {
        self.appearances.is_subset(&other.appearances)
    }

    pub fn union_with(&mut self, other: &Cover) {
        self.appearances.extend(other.appearances.iter().copied());
    }
}

impl FromIterator<VertexAppearance> for Cover {
    fn from_iter<I: IntoIterator<Item = VertexAppearance>>(iter: I) -> Self {
        Self {
            appearances: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a Cover {
    type Item = &'a VertexAppearance;
    type IntoIter = std::collections::btree_set::Iter<'a, VertexAppearance>;

    fn into_iter(self) -> Self::IntoIter {
        self.appearances.iter()
    }
}

/// An edge that must be covered within the window starting at `window_start`.
///
/// Ordered by window first, then edge id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Demand {
    pub window_start: Time,
    pub edge: EdgeId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SnapshotShape {
    Empty,
    Star(Vertex),
    NotAStar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarCheck {
    AlwaysStar,
    Offending(Time),
}

impl StarCheck {
    pub fn is_always_star(self) -> bool {
        self == StarCheck::AlwaysStar
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverCheck {
    Valid,
    Invalid(Demand),
}

impl CoverCheck {
    pub fn is_valid(self) -> bool {
        self == CoverCheck::Valid
    }
}

/// Immutable temporal graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalGraph {
    n: usize,
    lifetime: Time,
    edges: Vec<UnderlyingEdge>,
    // CSR index over time steps: edges active at t are
    // time_edges[time_offsets[t]..time_offsets[t + 1]], slot 0 unused.
    time_offsets: Vec<usize>,
    time_edges: Vec<EdgeId>,
    adj_offsets: Vec<usize>,
    adj_edges: Vec<EdgeId>,
}

impl TemporalGraph {
    /// Builds a graph from `(u, v, labels)` triples.
    ///
    /// Endpoints are canonicalized to `u < v`. Repeated pairs are merged into
    /// one edge holding the union of their labels; edge ids follow the order
    /// in which pairs first occur. Triples without labels are dropped.
    pub fn build<I>(n: usize, lifetime: Time, edge_list: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Vec<Time>)>,
    {
        let mut edges: Vec<UnderlyingEdge> = Vec::new();
        let mut ids: HashMap<(Vertex, Vertex), EdgeId> = HashMap::new();
        for (a, b, labels) in edge_list {
            for w in [a, b] {
                if w >= n {
                    return Err(Error::OutOfRangeVertex { vertex: w, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if let Some(&bad) = labels.iter().find(|&&t| t == 0 || t > lifetime) {
                return Err(Error::OutOfRangeLabel { label: bad, lifetime });
            }
            if labels.is_empty() {
                continue;
            }
            let key = (a.min(b), a.max(b));
            match ids.get(&key) {
                Some(&id) => edges[id].appearances.extend(labels),
                None => {
                    ids.insert(key, edges.len());
                    edges.push(UnderlyingEdge {
                        u: key.0,
                        v: key.1,
                        appearances: labels,
                    });
                }
            }
        }
        for e in &mut edges {
            e.appearances.sort_unstable();
            e.appearances.dedup();
        }
        Ok(Self::from_canonical_edges(n, lifetime, edges))
    }

    fn from_canonical_edges(n: usize, lifetime: Time, edges: Vec<UnderlyingEdge>) -> Self {
        let mut time_offsets = vec![0usize; lifetime + 2];
        let mut adj_offsets = vec![0usize; n + 1];
        for e in &edges {
            for &t in &e.appearances {
                time_offsets[t + 1] += 1;
            }
            adj_offsets[e.u + 1] += 1;
            adj_offsets[e.v + 1] += 1;
        }
        for i in 1..time_offsets.len() {
            time_offsets[i] += time_offsets[i - 1];
        }
        for i in 1..adj_offsets.len() {
            adj_offsets[i] += adj_offsets[i - 1];
        }
        let mut time_fill = time_offsets.clone();
        let mut adj_fill = adj_offsets.clone();
        let mut time_edges = vec![0; time_offsets[lifetime + 1]];
        let mut adj_edges = vec![0; adj_offsets[n]];
        for (id, e) in edges.iter().enumerate() {
            for &t in &e.appearances {
                time_edges[time_fill[t]] = id;
                time_fill[t] += 1;
            }
            for w in [e.u, e.v] {
                adj_edges[adj_fill[w]] = id;
                adj_fill[w] += 1;
            }
        }
        Self {
            n,
            lifetime,
            edges,
            time_offsets,
            time_edges,
            adj_offsets,
            adj_edges,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lifetime(&self) -> Time {
        self.lifetime
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[UnderlyingEdge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &UnderlyingEdge {
        &self.edges[id]
    }

    /// Total number of edge appearances, i.e. the sum of all label counts.
    pub fn total_appearances(&self) -> usize {
        self.time_edges.len()
    }

    /// Edge ids active at `t`, ascending.
    pub fn edges_at(&self, t: Time) -> Result<&[EdgeId]> {
        self.check_time(t)?;
        Ok(self.active(t))
    }

    /// Unchecked variant of [`edges_at`](Self::edges_at); panics if `t` is out of range.
    pub fn active(&self, t: Time) -> &[EdgeId] {
        &self.time_edges[self.time_offsets[t]..self.time_offsets[t + 1]]
    }

    /// Underlying edges incident to `v`, ascending.
    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.adj_edges[self.adj_offsets[v]..self.adj_offsets[v + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj_offsets[v + 1] - self.adj_offsets[v]
    }

    pub fn find_edge(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        if a >= self.n || b >= self.n {
            return None;
        }
        let (x, y) = if self.degree(a) <= self.degree(b) {
            (a, b)
        } else {
            (b, a)
        };
        self.incident(x)
            .iter()
            .copied()
            .find(|&id| self.edges[id].other(x) == y)
    }

    /// Largest number of edges active at a single time step.
    pub fn max_snapshot_edges(&self) -> usize {
        (1..=self.lifetime).map(|t| self.active(t).len()).max().unwrap_or(0)
    }

    /// Largest vertex degree over all snapshots.
    pub fn max_snapshot_degree(&self) -> usize {
        let mut count = vec![0usize; self.n];
        let mut best = 0;
        for t in 1..=self.lifetime {
            let active = self.active(t);
            for &id in active {
                let e = &self.edges[id];
                count[e.u] += 1;
                count[e.v] += 1;
                best = best.max(count[e.u]).max(count[e.v]);
            }
            for &id in active {
                let e = &self.edges[id];
                count[e.u] = 0;
                count[e.v] = 0;
            }
        }
        best
    }

    pub(crate) fn check_time(&self, t: Time) -> Result<()> {
        if t == 0 || t > self.lifetime {
            return Err(Error::OutOfRangeLabel {
                label: t,
                lifetime: self.lifetime,
            });
        }
        Ok(())
    }

    pub fn check_delta(&self, delta: Time) -> Result<()> {
        if delta == 0 || delta > self.lifetime {
            return Err(Error::BadDelta {
                delta,
                lifetime: self.lifetime,
            });
        }
        Ok(())
    }

    /// Number of sliding windows, `T - delta + 1`. Assumes a checked `delta`.
    pub fn window_count(&self, delta: Time) -> Time {
        self.lifetime + 1 - delta
    }

    /// Classifies the snapshot at `t`, checking every active edge.
    ///
    /// A lone edge reports its smaller endpoint as the center.
    pub fn star_center_at(&self, t: Time) -> Result<SnapshotShape> {
        self.check_time(t)?;
        let active = self.active(t);
        let Some(&first) = active.first() else {
            return Ok(SnapshotShape::Empty);
        };
        let e = &self.edges[first];
        if active.len() == 1 {
            return Ok(SnapshotShape::Star(e.u));
        }
        let shape = [e.u, e.v]
            .into_iter()
            .find(|&c| active.iter().all(|&id| self.edges[id].has_endpoint(c)))
            .map_or(SnapshotShape::NotAStar, SnapshotShape::Star);
        Ok(shape)
    }

    /// Star center from comparing two active edges only. Only meaningful on
    /// graphs already known to be always-star.
    pub fn center_unchecked(&self, t: Time) -> Option<Vertex> {
        let active = self.active(t);
        let e = &self.edges[*active.first()?];
        match active.get(1) {
            None => Some(e.u),
            Some(&second) => {
                let f = &self.edges[second];
                Some(if f.has_endpoint(e.u) { e.u } else { e.v })
            }
        }
    }

    pub fn validate_always_star(&self) -> StarCheck {
        for t in 1..=self.lifetime {
            if let Ok(SnapshotShape::NotAStar) = self.star_center_at(t) {
                return StarCheck::Offending(t);
            }
        }
        StarCheck::AlwaysStar
    }

    /// All `(edge, window)` pairs that need covering, sorted by window then edge.
    pub fn demands(&self, delta: Time) -> Result<Vec<Demand>> {
        self.check_delta(delta)?;
        let mut out = Vec::new();
        for (edge, e) in self.edges.iter().enumerate() {
            for (lo, hi) in window_intervals(&e.appearances, delta, self.lifetime) {
                out.extend((lo..=hi).map(|window_start| Demand { window_start, edge }));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Checks `cover` against every demand and reports the first uncovered
    /// one in `(window, edge)` order.
    pub fn validate_cover(&self, delta: Time, cover: &Cover) -> Result<CoverCheck> {
        self.check_delta(delta)?;
        if let Some(bad) = cover
            .iter()
            .find(|a| a.vertex >= self.n || a.time == 0 || a.time > self.lifetime)
        {
            return Err(Error::OutOfRangeAppearance(*bad));
        }
        let last_window = self.window_count(delta);
        let mut witness: Option<Demand> = None;
        let mut covered_at: Vec<Time> = Vec::new();
        for (edge, e) in self.edges.iter().enumerate() {
            covered_at.clear();
            covered_at.extend(e.appearances.iter().copied().filter(|&t| {
                cover.contains(&VertexAppearance::new(e.u, t)) || cover.contains(&VertexAppearance::new(e.v, t))
            }));
            // The first uncovered window is either the start of an active
            // interval or the step right after a covering appearance.
            let candidates = window_intervals(&e.appearances, delta, self.lifetime)
                .map(|(lo, _)| lo)
                .chain(covered_at.iter().map(|&c| c + 1));
            let first = candidates
                .filter(|&t| {
                    t <= last_window && hits_window(&e.appearances, t, delta) && !hits_window(&covered_at, t, delta)
                })
                .min();
            if let Some(window_start) = first {
                let d = Demand { window_start, edge };
                if witness.is_none_or(|w| d < w) {
                    witness = Some(d);
                }
            }
        }
        Ok(witness.map_or(CoverCheck::Valid, CoverCheck::Invalid))
    }
}

/// True if the sorted `times` contain a step in `[start, start + delta - 1]`.
pub(crate) fn hits_window(times: &[Time], start: Time, delta: Time) -> bool {
    let i = times.partition_point(|&x| x < start);
    i < times.len() && times[i] < start + delta
}

/// Maximal runs `[lo, hi]` of window starts whose window meets the sorted
/// `appearances`.
pub(crate) fn window_intervals(
    appearances: &[Time],
    delta: Time,
    lifetime: Time,
) -> impl Iterator<Item = (Time, Time)> + '_ {
    let last_window = lifetime + 1 - delta;
    let mut iter = appearances
        .iter()
        .map(move |&a| ((a + 1).saturating_sub(delta).max(1), a.min(last_window)))
        .filter(|(lo, hi)| lo <= hi)
        .peekable();
    std::iter::from_fn(move || {
        let (lo, mut hi) = iter.next()?;
        while let Some(&(next_lo, next_hi)) = iter.peek() {
            if next_lo > hi + 1 {
                break;
            }
            hi = hi.max(next_hi);
            iter.next();
        }
        Some((lo, hi))
    })
}
