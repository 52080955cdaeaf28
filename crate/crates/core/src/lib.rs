//! Exact lattice, permutation-group and graph computations around the 56
//! exceptional classes of a degree-2 del Pezzo surface and the associated
//! K3 lattices.

pub mod del_pezzo;
pub mod error;
pub mod exact;
pub mod gaussian;
pub mod graph;
pub mod k3;
pub mod lattice;
pub mod perm;
pub mod weyl;

pub use error::{Error, Result};
