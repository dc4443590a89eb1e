//! Exact enumeration of lozenge tilings of hexagonal regions and of the
//! symmetry classes of plane partitions, cross-checked by independent routes:
//! brute-force perfect matchings, non-intersecting lattice path determinants,
//! and closed product formulas.

pub mod error;
pub mod exactnum;
pub mod formulas;
pub mod lgvpaths;
pub mod matchoracle;
pub mod matrices;
pub mod regions;
pub mod verify;

pub use error::{Error, Result};
