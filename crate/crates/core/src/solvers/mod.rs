//! Exact combinatorial solvers shared by the invariant computations.

pub mod clique;
pub mod hitting_set;

pub use clique::Graph;
pub use hitting_set::HittingSet;
