//! Minimum-cost and k-sparse intervention design on chordal graphs.
//!
//! Learning the orientation of every edge of a chordal essential-graph
//! component with non-adaptive interventions is equivalent to building a
//! graph separating system, and that in turn to properly coloring the graph
//! with bit-vector colors. This crate provides:
//!
//! - exact chordal-graph primitives (elimination orderings, coloring,
//!   maximum-weight independent sets, vertex covers, clique trees),
//! - the separating-system / coloring correspondence and exact cost
//!   functions over rational weights with `+inf`,
//! - a quantized greedy solver for minimum-cost designs and the sorted
//!   independent-set baseline,
//! - exact solvers: clique-tree dynamic programming and brute-force
//!   enumerators for small instances,
//! - vertex-cover-based k-sparse designs with a cost/size trade-off sweep,
//! - a seeded random connected chordal graph generator with Pareto weights,
//!   and benchmark harnesses emitting plot-ready CSV.

pub mod bench;
pub mod chordal;
pub mod error;
pub mod exact;
pub mod gen;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod ksparse;
pub mod separating;
pub mod weight;

pub use chordal::{
    build_clique_tree, chromatic_number, is_chordal, max_weight_independent_set,
    maximum_cardinality_search, min_cardinality_vertex_cover, min_weight_vertex_cover,
    optimal_coloring, CliqueTree, EliminationOrdering,
};
pub use error::{Result, SolveError};
pub use graph::WeightedGraph;
pub use separating::{
    coloring_cost, coloring_to_design, cut, design_cost, design_to_coloring, min_design_size,
    verify_separating, ColorVector, Coloring, InterventionDesign,
};
pub use weight::Weight;
