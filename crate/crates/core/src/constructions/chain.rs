use itertools::Itertools;

use crate::error::{Error, Result};
use crate::matrices::{Entry, StarMatrix2};

/// An m-chain: points (c_i, d_i) in [m]^2, strictly increasing in both
/// coordinates. May be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    m: usize,
    points: Vec<(usize, usize)>,
}

impl Chain {
    pub fn new(m: usize, points: Vec<(usize, usize)>) -> Result<Chain> {
        if m == 0 {
            return Err(Error::InvalidArgument("chain size must be positive".into()));
        }
        for (idx, &(c, d)) in points.iter().enumerate() {
            if c == 0 || d == 0 || c > m || d > m {
                return Err(Error::InvalidArgument(format!("point ({c},{d}) outside [{m}]^2")));
            }
            if idx > 0 {
                let (pc, pd) = points[idx - 1];
                if c <= pc || d <= pd {
                    return Err(Error::InvalidArgument("chain points must increase strictly".into()));
                }
            }
        }
        Ok(Chain { m, points })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn points(&self) -> &[(usize, usize)] {
        &self.points
    }

    /// The m x m indicator matrix A*.
    pub fn matrix(&self) -> StarMatrix2 {
        StarMatrix2::from_fn(self.m, self.m, |i, j| Entry::from_bit(self.points.contains(&(i, j)))).unwrap()
    }
}

/// A monotone lattice path of 2m+1 corners from (1,1) to (m+1,m+1); each
/// step adds (0,1) (horizontal) or (1,0) (vertical).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SoutheastPath {
    m: usize,
    corners: Vec<(usize, usize)>,
}

impl SoutheastPath {
    pub fn new(m: usize, corners: Vec<(usize, usize)>) -> Result<SoutheastPath> {
        let bad = |msg: &str| Err(Error::InvalidArgument(format!("southeast path: {msg}")));
        if m == 0 || corners.len() != 2 * m + 1 {
            return bad("needs 2m+1 corners");
        }
        if corners[0] != (1, 1) || corners[2 * m] != (m + 1, m + 1) {
            return bad("must run from (1,1) to (m+1,m+1)");
        }
        for w in corners.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b != (a.0, a.1 + 1) && b != (a.0 + 1, a.1) {
                return bad("steps must be (0,1) or (1,0)");
            }
        }
        Ok(SoutheastPath { m, corners })
    }

    /// Builds the path from its steps, `true` meaning vertical.
    pub fn from_steps(m: usize, steps: &[bool]) -> Result<SoutheastPath> {
        let mut corners = vec![(1, 1)];
        let (mut i, mut j) = (1, 1);
        for &vertical in steps {
            if vertical {
                i += 1;
            } else {
                j += 1;
            }
            corners.push((i, j));
        }
        SoutheastPath::new(m, corners)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn corners(&self) -> &[(usize, usize)] {
        &self.corners
    }

    /// true for each vertical step.
    pub fn steps(&self) -> Vec<bool> {
        self.corners.windows(2).map(|w| w[1].0 > w[0].0).collect()
    }
}

/// The squares the path turns left around: a vertical step followed by a
/// horizontal one through the bottom-left corner of the square.
pub fn path_to_chain(p: &SoutheastPath) -> Chain {
    let pts = p
        .corners
        .windows(3)
        .filter(|w| w[1].0 > w[0].0 && w[2].1 > w[1].1)
        .map(|w| (w[0].0, w[0].1))
        .collect();
    Chain { m: p.m, points: pts }
}

pub fn chain_to_path(c: &Chain) -> SoutheastPath {
    let m = c.m;
    let mut steps = Vec::with_capacity(2 * m);
    let (mut row, mut col) = (1, 1);
    for &(ci, di) in &c.points {
        steps.extend(std::iter::repeat_n(false, di - col));
        steps.extend(std::iter::repeat_n(true, ci + 1 - row));
        steps.push(false);
        row = ci + 1;
        col = di + 1;
    }
    steps.extend(std::iter::repeat_n(false, m + 1 - col));
    steps.extend(std::iter::repeat_n(true, m + 1 - row));
    SoutheastPath::from_steps(m, &steps).expect("chain path is well formed")
}

/// All m-chains, by number of points and then lexicographically.
pub fn enumerate_chains(m: usize) -> impl Iterator<Item = Chain> {
    (0..=m).flat_map(move |k| {
        (1..=m).combinations(k).flat_map(move |rows| {
            (1..=m).combinations(k).map(move |cols| Chain {
                m,
                points: rows.iter().copied().zip(cols).collect(),
            })
        })
    })
}

/// All southeast paths in [m+1]^2, indexed by the positions of their
/// horizontal steps.
pub fn enumerate_paths(m: usize) -> impl Iterator<Item = SoutheastPath> {
    (0..2 * m).combinations(m).map(move |hs| {
        let steps: Vec<bool> = (0..2 * m).map(|s| !hs.contains(&s)).collect();
        SoutheastPath::from_steps(m, &steps).unwrap()
    })
}

/// Row and column selections of I_{2n-k} whose submatrix is A*, where the
/// chain has k points.
pub fn embed_chain(a: &Chain) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = a.m;
    let k = a.points.len();
    let mut pts = vec![(0usize, 0usize)];
    pts.extend(&a.points);
    pts.push((n + 1, n + 1));
    let mut rows = Vec::with_capacity(n + 1);
    let mut cols = Vec::with_capacity(n + 1);
    for i in 1..=k + 1 {
        let (c0, d0) = pts[i - 1];
        let (c1, d1) = pts[i];
        let (dc, dd) = (c1 - c0, d1 - d0);
        let start = c0 + d0 + 2 - i;
        let end = c1 + d1 - i;
        for x in 1..=dc {
            rows.push(start + dd - 2 + x);
        }
        for y in 1..dd {
            cols.push(start + y - 1);
        }
        cols.push(end);
    }
    rows.pop();
    cols.pop();
    let host = StarMatrix2::identity(2 * n - k)?;
    if host.submatrix(&rows, &cols)? != a.matrix() {
        return Err(Error::PatternViolation("chain embedding check failed".into()));
    }
    Ok((rows, cols))
}
