//! Generators for the explicit objects behind the lower bounds.

pub mod chain;
pub mod disobedient;
pub mod pair;
pub mod rich;
pub mod strings;

pub use chain::{chain_to_path, embed_chain, enumerate_chains, enumerate_paths, path_to_chain, Chain, SoutheastPath};
pub use disobedient::{disobedient_host, disobedient_spec, is_disobedient, make_disobedient, Disobedient, DisobedientSpec};
pub use pair::{is_pair_wealthy_type2, slice_to_pair_coloring};
pub use rich::{make_rich, rich_deletion_colorings, rich_pattern};
pub use strings::{
    all_words, avoids_alternating, avoids_double, bits_to_string, embed_string, make_string_coloring,
    parse_bits, partition_pattern, StringColoring, StringEmbedding, StringMode,
};

use crate::coloring::Coloring;
use crate::error::Result;
use crate::structure::{wealthy_pattern, Variant, WealthyFamily};

/// The canonical r-wealthy coloring of the given type moved by `variant`,
/// with unspecified edges set to `filler`.
pub fn make_wealthy(family: WealthyFamily, r: usize, variant: &Variant, filler: u8) -> Result<Coloring> {
    wealthy_pattern(family, r, variant)?.fill(filler)
}
