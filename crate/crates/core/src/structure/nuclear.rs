use itertools::Itertools;

use crate::coloring::{homogeneity, Coloring, Homogeneity};
use crate::error::{Error, Result};
use crate::matrices::{metrics3, Entry, StarMatrix3};

/// The greedy partition of [n] into maximal monochromatic intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuclearDecomposition {
    /// Inclusive bounds `(first, last)` of each interval, in order.
    pub intervals: Vec<(usize, usize)>,
    pub verdicts: Vec<Homogeneity>,
}

impl NuclearDecomposition {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// The vertices of the `i`-th interval (1-based).
    pub fn interval(&self, i: usize) -> Vec<usize> {
        let (a, b) = self.intervals[i - 1];
        (a..=b).collect()
    }
}

pub fn nuclear_decomposition(c: &Coloring) -> NuclearDecomposition {
    let (n, k) = (c.n(), c.k());
    let mut intervals = Vec::new();
    let mut p = 1;
    while p <= n {
        let mut q = p;
        let mut color: Option<u8> = None;
        'grow: while q < n {
            let next = q + 1;
            if next - p + 1 >= k {
                for mut e in (p..next).combinations(k - 1) {
                    e.push(next);
                    let col = c.color(&e);
                    match color {
                        None => color = Some(col),
                        Some(x) if x != col => break 'grow,
                        _ => {}
                    }
                }
            }
            q = next;
        }
        intervals.push((p, q));
        p = q + 1;
    }
    let verdicts = intervals
        .iter()
        .map(|&(a, b)| homogeneity(c, &(a..=b).collect::<Vec<_>>()).expect("interval inside [n]"))
        .collect();
    NuclearDecomposition { intervals, verdicts }
}

/// A crossing matrix together with its base sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingMatrix {
    pub matrix: StarMatrix3,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub z: Vec<usize>,
}

fn base_set(c: &Coloring, s: &[usize]) -> Result<Vec<usize>> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    if v.is_empty() {
        return Err(Error::InvalidArgument("empty base set".into()));
    }
    if v[0] == 0 || *v.last().unwrap() > c.n() {
        return Err(Error::InvalidArgument(format!("base set {v:?} not inside [{}]", c.n())));
    }
    Ok(v)
}

/// M(i,j,k) = color of {x_i, y_j, z_k}, or `*` when two of them coincide.
pub fn crossing_matrix(c: &Coloring, x: &[usize], y: &[usize], z: &[usize]) -> Result<CrossingMatrix> {
    if c.k() != 3 {
        return Err(Error::InvalidArgument("crossing matrices need k=3".into()));
    }
    let (x, y, z) = (base_set(c, x)?, base_set(c, y)?, base_set(c, z)?);
    let matrix = StarMatrix3::from_fn(x.len(), y.len(), z.len(), |i, j, k| {
        let mut e = [x[i - 1], y[j - 1], z[k - 1]];
        e.sort_unstable();
        if e[0] == e[1] || e[1] == e[2] {
            Entry::Star
        } else {
            Entry::from_color(c.color(&e))
        }
    })?;
    Ok(CrossingMatrix { matrix, x, y, z })
}

/// The first violated tameness condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TameViolation {
    pub condition: usize,
    /// Indices of the nuclear intervals involved (for condition 1, empty).
    pub intervals: Vec<usize>,
    pub metric: &'static str,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TameReport {
    pub p: usize,
    /// Verdicts of conditions 1 to 5.
    pub verdicts: [bool; 5],
    pub witness: Option<TameViolation>,
}

impl TameReport {
    pub fn is_tame(&self) -> bool {
        self.verdicts.iter().all(|&v| v)
    }
}

/// Checks the five tameness conditions on the nuclear decomposition.
///
/// Each condition stops at its first violating tuple (lexicographic order);
/// the reported witness is the violation of the lowest-numbered condition.
pub fn is_p_tame(c: &Coloring, p: usize) -> Result<TameReport> {
    if c.k() != 3 || c.l() != 2 {
        return Err(Error::InvalidArgument("tameness needs k=3, l=2".into()));
    }
    if p < 3 {
        return Err(Error::InvalidArgument(format!("p={p} must be at least 3")));
    }
    let nu = nuclear_decomposition(c);
    let s = nu.len();
    let ivs: Vec<Vec<usize>> = (1..=s).map(|i| nu.interval(i)).collect();
    let mut violations: [Option<TameViolation>; 5] = Default::default();

    if s > p {
        violations[0] = Some(TameViolation {
            condition: 1,
            intervals: vec![],
            metric: "s",
            value: s,
        });
    }
    let viol = |condition, intervals: Vec<usize>, metric, value| {
        Some(TameViolation {
            condition,
            intervals,
            metric,
            value,
        })
    };
    for [u, v, w] in (1..=s).array_combinations() {
        if violations[1].is_some() && violations[2].is_some() {
            break;
        }
        let m = metrics3(&crossing_matrix(c, &ivs[u - 1], &ivs[v - 1], &ivs[w - 1])?.matrix);
        if violations[1].is_none() && m.al > p {
            violations[1] = viol(2, vec![u, v, w], "al", m.al);
        }
        if violations[2].is_none() {
            if m.r.len() > p {
                violations[2] = viol(3, vec![u, v, w], "R", m.r.len());
            } else if m.c.len() > p {
                violations[2] = viol(3, vec![u, v, w], "C", m.c.len());
            }
        }
    }
    for [u, v] in (1..=s).array_combinations() {
        if violations[3].is_some() && violations[4].is_some() {
            break;
        }
        let a = metrics3(&crossing_matrix(c, &ivs[u - 1], &ivs[u - 1], &ivs[v - 1])?.matrix);
        let b = metrics3(&crossing_matrix(c, &ivs[u - 1], &ivs[v - 1], &ivs[v - 1])?.matrix);
        if violations[3].is_none() {
            if a.al > p {
                violations[3] = viol(4, vec![u, u, v], "al", a.al);
            } else if b.al > p {
                violations[3] = viol(4, vec![u, v, v], "al", b.al);
            }
        }
        if violations[4].is_none() {
            let checks = [
                (vec![u, u, v], "R", a.r.len()),
                (vec![u, u, v], "C", a.c.len()),
                (vec![u, v, v], "R", b.r.len()),
                (vec![u, v, v], "C", b.c.len()),
            ];
            if let Some((iv, metric, value)) = checks.into_iter().find(|x| x.2 > p) {
                violations[4] = viol(5, iv, metric, value);
            }
        }
    }
    let verdicts = std::array::from_fn(|i| violations[i].is_none());
    let witness = violations.into_iter().flatten().next();
    Ok(TameReport { p, verdicts, witness })
}

/// For a nuclear decomposition of length at least 2r, picks 4r vertices
/// whose induced coloring is r-wealthy of type W4.1: a triple inside
/// I_{2i-1} plus min(I_{2i}) forms a non-monochromatic quadruple.
pub fn w41_vertices_from_nuclear(c: &Coloring, r: usize) -> Option<Vec<usize>> {
    let nu = nuclear_decomposition(c);
    if c.k() != 3 || nu.len() < 2 * r {
        return None;
    }
    let mut out = Vec::with_capacity(4 * r);
    for i in 1..=r {
        let iv = nu.interval(2 * i - 1);
        let m = nu.intervals[2 * i - 1].0;
        let quad = iv.iter().copied().combinations(3).find(|t| {
            let mut q = t.clone();
            q.push(m);
            matches!(homogeneity(c, &q), Ok(Homogeneity::NotHomogeneous(..)))
        })?;
        out.extend(quad);
        out.push(m);
    }
    Some(out)
}
