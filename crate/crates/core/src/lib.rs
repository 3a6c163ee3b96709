//! Maximum relative fair clique search over two-attribute graphs.
//!
//! A `(k, delta)`-relative fair clique is a clique with at least `k` vertices
//! of each of the two attributes and an attribute-count difference of at most
//! `delta`. This crate provides:
//!
//! - an immutable attributed-graph model with edge-list ingestion ([`graph`]),
//! - proper greedy coloring and DAG orientation ([`color`]),
//! - four color-based peeling reductions that shrink the graph without losing
//!   any fair clique ([`reduce`]),
//! - a family of upper bounds on the maximum fair clique size ([`bounds`]),
//! - the exact branch-and-bound search ([`search`]),
//! - linear-time greedy heuristics ([`heuristic`]),
//! - a brute-force reference oracle for desk-scale verification ([`oracle`]),
//! - seeded random graph generation ([`gen`]).

pub mod bounds;
pub mod color;
pub mod fixtures;
pub mod gen;
pub mod graph;
pub mod heuristic;
pub mod oracle;
pub mod reduce;
pub mod search;

pub use bounds::{BoundKind, BoundSet};
pub use color::{greedy_color, Coloring};
pub use graph::{load_graph, Attribute, AttributedGraph, VertexId, VertexSet};
pub use reduce::{reduce_pipeline, ReductionReport};
pub use search::{max_rfc, verify_fair_clique, FairCliqueResult, Provenance, SearchConfig};
