//! Classifiers: nuclear decompositions and tameness, rich and simple
//! colorings, wealthy colorings.

pub mod nuclear;
pub mod rich;
pub mod wealthy;

pub use nuclear::{
    crossing_matrix, is_p_tame, nuclear_decomposition, w41_vertices_from_nuclear, CrossingMatrix,
    NuclearDecomposition, TameReport, TameViolation,
};
pub use rich::{is_c_simple, is_r_rich, rich_edge, RichWitness, SimplicityViolation};
pub use wealthy::{
    apply_symmetry, is_wealthy, wealthy_pattern, wealthy_witnesses, Variant, WealthyFamily,
    WealthyWitness,
};
