//! Exact combinatorics of simple cubic graphs: automorphism groups, edge
//! orbits, extremal candidate constructions, and exhaustive censuses at
//! small vertex counts.

pub mod arith;
pub mod autgroup;
pub mod candidates;
pub mod enumerate;
pub mod graph;

pub use graph::Graph;
