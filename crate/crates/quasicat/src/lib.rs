//! Finite, decidable fragments of quasi-category theory.
//!
//! Everything here works on dimension-truncated finite data and answers
//! with explicit witnesses: horn fillers, lifting squares, homotopies,
//! isomorphisms, coCartesian factorizations and dual-pair triangles.

pub mod budget;
pub mod cli;
pub mod category;
pub mod error;
pub mod homotopy;
pub mod io;
pub mod join_slice;
pub mod lifting;
pub mod monoidal;
pub mod report;
pub mod sset;
pub mod symmetric;

pub use budget::Budget;
pub use error::{Error, Result};
pub use sset::{FiniteSimplicialSet, SimplexRef, SimplicialMap};
