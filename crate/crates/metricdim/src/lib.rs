//! Metric dimension of graphs, with a focus on strong products.
//!
//! The crate provides:
//!
//! * bitset-adjacency [`graph::Graph`]s, BFS [`graph::DistanceMatrix`]s,
//!   geodesic intervals, named [`families`], graph6/JSON I/O, and
//!   exhaustive small-graph [`enumerate::enumerate_connected`];
//! * strong and Cartesian [`products`] on one canonical row-major
//!   vertex pairing, plus the max-distance identity checker;
//! * [`resolving`]: metric representations, generator checks, twin
//!   equivalence classes, twin/counting lower bounds, and the exact
//!   [`solver::metric_dimension_exact`] oracle;
//! * [`self_resolved`]: the self-k-resolved predicate with audit
//!   certificates and the maximum resolution index;
//! * [`constructions`]: explicit generator constructions on products
//!   (factor-basis union, resolved-factor columns, zig-zag, corner,
//!   diagonal) with their size formulas;
//! * a [`harness`] that registers every supported bound or identity,
//!   verifies it on parameter points, sweeps parameter grids to CSV and
//!   JSON reports, and tabulates evidence for the open path-product
//!   dimension conjecture.
//!
//! Start with the runnable examples (`cargo run --example`), one per
//! capability; the `metricdim` binary exposes the same operations as
//! subcommands.

pub mod bits;
pub mod constructions;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod products;
pub mod report;
pub mod resolving;
pub mod self_resolved;
pub mod solver;

pub use constructions::{
    path_cycle_diagonal_generator, path_path_corner_generator, path_path_generator,
    path_path_lower_bound, resolved_generator, upper_bound_generator, ConstructionOutput,
};
pub use enumerate::enumerate_connected;
pub use families::Family;
pub use graph::{all_pairs_distances, interval, DistanceMatrix, Graph};
pub use graph6::{graph6_read, graph6_read_all, graph6_write};
pub use products::{cartesian_product, strong_product, verify_distance_law, VertexPairing};
pub use resolving::{
    check_generator, counting_lower_bound, is_metric_generator, metric_vector, twin_lower_bound,
    twin_partition, LandmarkSet, TwinMode, TwinPartition,
};
pub use self_resolved::{
    check_cycle_claim, check_lemma_2resolved, is_self_k_resolved, max_self_resolution,
    self_k_resolution,
};
pub use solver::{metric_dimension_exact, DimResult};

/// Errors across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph too large: {n} vertices exceeds limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("malformed graph6 data: {0}")]
    MalformedGraph6(String),
    #[error("invalid landmark set: {0}")]
    InvalidLandmarks(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
}
