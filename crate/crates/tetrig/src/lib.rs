//! Trigonometry of non-Euclidean tetrahedra via lattice characters.
//!
//! (module docs finalized as the crate fills in)

pub mod chokim;
pub mod correspond;
pub mod e8lattice;
mod error;
pub mod picard;
pub mod projgeom;
pub mod tetra;
pub mod tol;

pub use error::{Error, Result};

/// Crate version string, surfaced by the CLI.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
