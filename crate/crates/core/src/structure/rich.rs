use itertools::Itertools;

use crate::coloring::{homogeneity, Coloring, EdgeId, Homogeneity};

/// Evidence that a coloring is r-rich of type T_{f,g,h}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RichWitness {
    pub r: usize,
    pub f: usize,
    pub g: usize,
    pub h: usize,
    pub a: u8,
    pub b: u8,
    /// E_1, ..., E_{r-k+2}.
    pub edges: Vec<Vec<usize>>,
}

/// E_i = [f] ∪ [f+i, f+g+i-1] ∪ [n-h+1, n].
pub fn rich_edge(n: usize, f: usize, g: usize, h: usize, i: usize) -> Vec<usize> {
    (1..=f)
        .chain(f + i..=f + g + i - 1)
        .chain(n + 1 - h..=n)
        .collect()
}

/// Scans the types (f, g, h) in lexicographic order for an r-rich witness.
pub fn is_r_rich(c: &Coloring, r: usize) -> Option<RichWitness> {
    let k = c.k();
    if r < k || c.n() != 2 * r + 1 - k {
        return None;
    }
    let n = c.n();
    let m = r - k + 2;
    for f in 0..=k {
        for g in 1..=k - f {
            let h = k - f - g;
            let edges: Vec<Vec<usize>> = (1..=m).map(|i| rich_edge(n, f, g, h, i)).collect();
            let a = c.color(&edges[0]);
            let b = c.color(&edges[m - 1]);
            if a != b && edges[..m - 1].iter().all(|e| c.color(e) == a) {
                return Some(RichWitness { r, f, g, h, a, b, edges });
            }
        }
    }
    None
}

/// Why a coloring fails to be c-simple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplicityViolation {
    /// The middle interval [c+1, n-c] holds two edges of different colors.
    C1(EdgeId, EdgeId),
    /// The star {v_1..v_{k-1}} ∪ {w} changes color between w1 and w2.
    C2 { vs: Vec<usize>, w1: usize, w2: usize },
}

/// Returns the first violation of C1 or C2, or `None` when `c` is
/// `cpar`-simple.
pub fn is_c_simple(c: &Coloring, cpar: usize) -> Option<SimplicityViolation> {
    let (n, k) = (c.n(), c.k());
    if n <= 2 * cpar + k {
        return None;
    }
    let middle: Vec<usize> = (cpar + 1..=n - cpar).collect();
    if let Ok(Homogeneity::NotHomogeneous(e1, e2)) = homogeneity(c, &middle) {
        return Some(SimplicityViolation::C1(e1, e2));
    }
    let deep: Vec<usize> = (2 * cpar + 1..=n.saturating_sub(2 * cpar)).collect();
    let boundary = (1..=cpar).chain(n - cpar + 1..=n);
    for v1 in boundary {
        let others: Vec<usize> = (1..=n).filter(|&v| v != v1).collect();
        for rest in others.into_iter().combinations(k - 2) {
            let mut vs = vec![v1];
            vs.extend(&rest);
            let mut first: Option<(usize, u8)> = None;
            for &w in &deep {
                if vs.contains(&w) {
                    continue;
                }
                let mut e = vs.clone();
                e.push(w);
                e.sort_unstable();
                let col = c.color(&e);
                match first {
                    None => first = Some((w, col)),
                    Some((w1, c1)) if c1 != col => {
                        return Some(SimplicityViolation::C2 { vs, w1, w2: w });
                    }
                    _ => {}
                }
            }
        }
    }
    None
}
