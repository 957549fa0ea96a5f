use crate::coloring::{restrict_normalize, Coloring, Pattern};
use crate::error::{Error, Result};
use crate::structure::rich_edge;

fn check(k: usize, r: usize, f: usize, g: usize, h: usize, a: u8, b: u8) -> Result<()> {
    if g == 0 || f + g + h != k {
        return Err(Error::InvalidArgument(format!(
            "type T_{{{f},{g},{h}}} needs g >= 1 and f+g+h = k = {k}"
        )));
    }
    if r < k {
        return Err(Error::InvalidArgument(format!("r = {r} must be at least k = {k}")));
    }
    if a == b || a > 1 || b > 1 {
        return Err(Error::InvalidArgument("a and b must be the two distinct colors".into()));
    }
    Ok(())
}

/// The r-rich pattern of type T_{f,g,h} on 2r-k+1 vertices; only the
/// sliding edges E_i are specified.
pub fn rich_pattern(k: usize, r: usize, f: usize, g: usize, h: usize, a: u8, b: u8) -> Result<Pattern> {
    check(k, r, f, g, h, a, b)?;
    let n = 2 * r + 1 - k;
    let m = r - k + 2;
    let mut p = Pattern::wildcard(k, 2, n)?;
    for i in 1..=m {
        p.set(&rich_edge(n, f, g, h, i), Some(if i < m { a } else { b }))?;
    }
    Ok(p)
}

#[allow(clippy::too_many_arguments)]
pub fn make_rich(k: usize, r: usize, f: usize, g: usize, h: usize, a: u8, b: u8, filler: u8) -> Result<Coloring> {
    rich_pattern(k, r, f, g, h, a, b)?.fill(filler)
}

/// The r-k+2 colorings on r vertices obtained from an r-rich coloring of
/// type T_{f,g,h} by deleting j vertices right after [f] and r-k+1-j right
/// before the last h vertices, for j = 0..=r-k+1.
pub fn rich_deletion_colorings(c: &Coloring, r: usize, f: usize, h: usize) -> Result<Vec<Coloring>> {
    let (n, k) = (c.n(), c.k());
    if r < k || n != 2 * r + 1 - k || f + h > k {
        return Err(Error::InvalidArgument("not the size of an r-rich coloring".into()));
    }
    let d = r - k + 1;
    (0..=d)
        .map(|j| {
            let keep: Vec<usize> = (1..=n)
                .filter(|&v| !((f + 1..=f + j).contains(&v) || (n - h - (d - j) + 1..=n - h).contains(&v)))
                .collect();
            restrict_normalize(c, &keep)
        })
        .collect()
}
