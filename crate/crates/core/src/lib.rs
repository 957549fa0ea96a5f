//! Colorings of ordered complete k-uniform hypergraphs, their ideals and
//! growth functions, together with the 0/1/* matrix machinery and the
//! explicit constructions used to bound growth from below.

pub mod coloring;
pub mod constructions;
pub mod error;
pub mod ideals;
pub mod lcg;
pub mod matrices;
pub mod structure;
pub mod text;
pub mod verify;

pub use coloring::{
    binomial, contains, contains_pattern, edge_index, edge_unindex, homogeneity,
    restrict_normalize, reverse, Coloring, EdgeId, Homogeneity, Injection, Pattern,
};
pub use error::{Error, Result};
