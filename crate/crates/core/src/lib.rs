//! Exact perfect-matching invariants of hexagonal systems (benzenoids).
//!
//! The crate enumerates Kekulé structures and alternating cycles, computes
//! forcing and anti-forcing numbers together with their dual packing
//! quantities, Clar and Fries numbers, and checks the known minimax identities
//! between them on concrete systems or whole censuses.
//!
//! Per-matching and per-system work runs on rayon when the `parallel` feature
//! is enabled (the default); the solvers themselves are sequential and
//! deterministic, so both execution modes produce identical output.

pub mod altcycles;
pub mod cli;
pub mod error;
pub mod forcing;
pub mod hexcore;
pub mod matchings;
pub mod solvers;
pub mod theorems;

pub use error::{Error, Result};

/// How batch work (rows of a report, systems of a census) is scheduled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Uses rayon's current pool; equivalent to `Sequential` when the crate
    /// is built without the `parallel` feature.
    #[default]
    Parallel,
}

impl Exec {
    /// Order-preserving map.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }
}
