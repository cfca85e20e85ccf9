//! Lipschitz, locally injective and embedding maps from finite graphs into
//! the integer lattice `Z^k` equipped with the max-norm.
//!
//! The crate is organised bottom-up:
//!
//! * [`grid`]: points and boxes of `Z^k`, the Chebyshev distance and the
//!   adjacency of the grid with diagonals.
//! * [`graph`]: immutable finite graphs with memoised BFS distances,
//!   generators, file loading and growth statistics.
//! * [`lipschitz`]: lattice-valued maps, the fold map, the min-plus
//!   extension operator and every property verifier.
//! * [`emb`]: exact embedding-dimension search, a brute-force oracle, and
//!   the local box-map constructor.
//! * [`cover`]: finite-scale separated covers and their validator.
//! * [`pipeline`]: the cover-based locally injective map, product merges,
//!   cocycles, strong embeddings and shift charts.
//! * [`cli`]: the `gridemb` command-line front end.

pub mod cli;
pub mod cover;
pub mod emb;
pub mod error;
pub mod graph;
pub mod grid;
pub mod lipschitz;
pub mod pipeline;
pub mod rng;

pub use error::{Error, Result};
pub use graph::{FiniteGraph, VertexId};
pub use grid::{GridBox, GridPoint};
pub use lipschitz::{LatticeMap, PartialMap};
