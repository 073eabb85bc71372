//! Strong resolving graphs, metric and strong metric dimension, and exact
//! outcomes of the Maker-Breaker (strong) resolving games on small graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the immutable [`Graph`] type, parsing and export,
//!   distances, isomorphism and component-shape classification.
//! * [`resolving`] computes resolving / strong resolving predicates, the
//!   strong resolving graph, exact `dim` / `sdim`, twins and boundary vertices.
//! * [`game`] is the exact Maker-Breaker engine, the polynomial outcome
//!   classifier and the pairing certificate checkers.
//! * [`products`] builds corona, join, Cartesian, direct, lexicographic and
//!   modular products and the modular-product structure (γ-pairs and friends).
//! * [`families`] generates the named graph families and tree statistics.
//! * [`enumerate`] walks all labeled graphs of a given order and samples
//!   random ones for sweeps.
//! * [`analysis`] and [`verify`] back the command-line tool.

pub mod analysis;
pub mod enumerate;
mod error;
pub mod families;
pub mod game;
pub mod graph;
pub mod products;
pub mod resolving;
pub mod verify;

pub use error::{Error, Result};
pub use game::{Outcome, Player};
pub use graph::{DistanceMatrix, Graph, ShapeDescription};
pub use resolving::SrGraph;

/// Size limits for the exponential algorithms.
///
/// Every exact routine checks its input against one of these and fails with
/// [`Error::LimitExceeded`] rather than running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest board (number of vertices) the game solver accepts.
    pub exact: usize,
    /// Largest graph handed to the canonical-labeling isomorphism test.
    pub iso: usize,
    /// Largest graph for the exact metric dimension search.
    pub dim: usize,
    /// Largest graph for the vertex-cover branch and bound.
    pub cover: usize,
    /// Largest graph for exact domination number / γ-pair screening.
    pub domination: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exact: 20,
            iso: 12,
            dim: 14,
            cover: 40,
            domination: 16,
        }
    }
}
