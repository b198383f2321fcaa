//! Fuzzy primals on finite grid lattices.
//!
//! Membership degrees are exact fractions `i/k`. On this grid the library
//! validates fuzzy topologies, primals and grills, computes the diamond
//! operator `λ⋄`, the closure `Cl⋄`, the primal fuzzy topology and its
//! base, decides compatibility, and checks the surrounding theory
//! exhaustively through [`verify`].

pub mod compat;
pub mod error;
pub mod grid;
pub mod io;
pub mod primal_ops;
pub mod structures;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{FuzzyPoint, FuzzySet, GridValue, Lattice, Space, Universe, DEFAULT_LATTICE_BUDGET};
pub use primal_ops::PrimalSpace;
pub use structures::{FuzzyFamily, FuzzyGrill, FuzzyPrimal, FuzzyTopology, ValidationReport};
