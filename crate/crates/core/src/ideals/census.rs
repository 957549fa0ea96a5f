use std::collections::HashSet;

use crate::coloring::Coloring;
use crate::error::{Error, Result};

/// Number of pairwise distinct colorings in the list. All entries must
/// share (k, l, n).
pub fn census_distinct(colorings: &[Coloring]) -> Result<usize> {
    let Some(first) = colorings.first() else {
        return Ok(0);
    };
    let shape = (first.k(), first.l(), first.n());
    if colorings.iter().any(|c| (c.k(), c.l(), c.n()) != shape) {
        return Err(Error::MixedSizes);
    }
    Ok(colorings.iter().collect::<HashSet<_>>().len())
}
