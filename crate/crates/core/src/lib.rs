//! Sliding window temporal vertex cover (Δ-TVC).
//!
//! A temporal graph keeps a fixed vertex set and switches edges on and off at
//! discrete time steps. A Δ-TVC is a set of vertex appearances `(v, t)` such
//! that every edge active somewhere in a window of `Δ` consecutive steps is
//! covered inside that window by one of its endpoints at a step where it is
//! active.
//!
//! The crate provides the graph model and validator ([`graph`]), the two
//! always-star approximations ([`star`]), the degree-based approximations
//! ([`degree`]), exact solvers for small inputs ([`exact`]), instance
//! generators ([`generator`]), file formats ([`io`]) and a benchmark harness
//! ([`bench`]).

pub mod bench;
pub mod degree;
pub mod error;
pub mod exact;
pub mod generator;
pub mod graph;
pub mod io;
pub mod star;

pub use bench::{geometric_mean, improvement, run_benchmark, Algorithm, BenchOptions, BenchRecord};
pub use degree::{d1_approx_solve, d_approx_s_solve, d_approx_solve, single_edge_exact, DemandLedger};
pub use error::{Error, Result};
pub use exact::{brute_force_solve, exact_solve};
pub use generator::{generate_always_star, worst_case_acov_instance, worst_case_sc_instance, GeneratorConfig};
pub use graph::{
    Cover, CoverCheck, Demand, EdgeId, SnapshotShape, StarCheck, TemporalGraph, Time, UnderlyingEdge, Vertex,
    VertexAppearance,
};
pub use star::{star_acov_solve, star_sc_solve, AlwaysStar};
