use crate::coloring::{restrict_normalize, Coloring, Injection};
use crate::error::{Error, Result};

/// Derived data of an (A, B)-disobedient construction with n = 5m + eps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisobedientSpec {
    pub m: usize,
    pub eps: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// t_1..t_m.
    pub t: Vec<usize>,
    /// C_0..C_m and D_0..D_m, subsets of [r].
    pub c_gaps: Vec<Vec<usize>>,
    pub d_gaps: Vec<Vec<usize>>,
    /// The embedding set inside [4r], increasing.
    pub s: Vec<usize>,
    /// F_1..F_m in the member.
    pub f: Vec<[usize; 3]>,
}

impl DisobedientSpec {
    pub fn n(&self) -> usize {
        5 * self.m + self.eps
    }

    pub fn r(&self) -> usize {
        3 * self.m + self.eps
    }
}

#[derive(Debug, Clone)]
pub struct Disobedient {
    pub spec: DisobedientSpec,
    pub member: Coloring,
    pub host: Coloring,
    /// The increasing map [n] -> S.
    pub embedding: Injection,
}

/// True for triples with exactly one vertex in [z] (the rest above z).
fn crossing(e: &[usize], z: usize) -> bool {
    e[0] <= z && e[1] > z
}

/// The host K_r on 4r vertices in normal form: crossing triples (one
/// vertex in [r], two in [r+1, 4r]) are 1 except {i, r+3i-2, r+3i-1},
/// which are 0; all other triples get `filler`.
pub fn disobedient_host(r: usize, filler: u8) -> Result<Coloring> {
    Coloring::from_fn(3, 2, 4 * r, |e| {
        if !crossing(e, r) {
            filler
        } else if e[1] == r + 3 * e[0] - 2 && e[2] == e[1] + 1 {
            0
        } else {
            1
        }
    })
}

/// Whether `c` is (A, B)-disobedient for the sets in `spec`.
pub fn is_disobedient(c: &Coloring, spec: &DisobedientSpec) -> bool {
    let z = 2 * spec.m + spec.eps;
    c.k() == 3
        && c.n() == spec.n()
        && c.edges().filter(|e| crossing(e, z)).all(|e| {
            let exceptional = spec.f.iter().any(|f| f[..] == e[..]);
            c.color(&e) == if exceptional { 0 } else { 1 }
        })
}

pub fn disobedient_spec(n: usize, a: &[usize], b: &[usize]) -> Result<DisobedientSpec> {
    let m = a.len();
    if m == 0 || b.len() != m {
        return Err(Error::InvalidArgument("A and B must be nonempty and of equal size".into()));
    }
    if n < 5 * m || n > 5 * m + 4 {
        return Err(Error::InvalidArgument(format!("n = {n} is not 5m+eps with m = {m}, eps in 0..=4")));
    }
    let eps = n - 5 * m;
    let increasing = |xs: &[usize], top: usize| xs.windows(2).all(|w| w[0] < w[1]) && xs[0] >= 1 && xs[m - 1] <= top;
    if !increasing(a, 2 * m + eps) || !increasing(b, 2 * m) {
        return Err(Error::InvalidArgument(format!(
            "need A in [{}] and B in [{}], both increasing",
            2 * m + eps,
            2 * m
        )));
    }
    let r = 3 * m + eps;
    let mut ax = vec![0];
    ax.extend(a);
    ax.push(2 * m + eps + 1);
    let mut bx = vec![0];
    bx.extend(b);
    bx.push(2 * m + 1);
    let t: Vec<usize> = (1..=m).map(|i| ax[i] + bx[i] - i).collect();
    let mut c_gaps = Vec::with_capacity(m + 1);
    let mut d_gaps = Vec::with_capacity(m + 1);
    for i in 0..=m {
        let ti = if i == 0 { 0 } else { t[i - 1] };
        let alpha = ax[i + 1] - ax[i] - 1;
        let beta = bx[i + 1] - bx[i] - 1;
        c_gaps.push((ti + 1..=ti + alpha).collect::<Vec<_>>());
        d_gaps.push((ti + alpha + 1..=ti + alpha + beta).collect::<Vec<_>>());
    }
    let mut s: Vec<usize> = Vec::with_capacity(n);
    for &ti in &t {
        s.extend([ti, r + 3 * ti - 2, r + 3 * ti - 1]);
    }
    s.extend(c_gaps.iter().flatten());
    s.extend(d_gaps.iter().flatten().map(|&j| r + 3 * j - 2));
    s.sort_unstable();
    let f = (1..=m)
        .map(|i| [a[i - 1], 2 * m + eps + b[i - 1] + i - 1, 2 * m + eps + b[i - 1] + i])
        .collect();
    Ok(DisobedientSpec {
        m,
        eps,
        a: a.to_vec(),
        b: b.to_vec(),
        t,
        c_gaps,
        d_gaps,
        s,
        f,
    })
}

/// Restricts the normal-form host K_{3m+eps} to S. Fails if the result is
/// not (A, B)-disobedient or the embedding does not send t_i to a_i.
pub fn make_disobedient(n: usize, a: &[usize], b: &[usize], filler: u8) -> Result<Disobedient> {
    let spec = disobedient_spec(n, a, b)?;
    if spec.s.len() != n {
        return Err(Error::PatternViolation(format!("|S| = {} differs from n = {n}", spec.s.len())));
    }
    let host = disobedient_host(spec.r(), filler)?;
    let member = restrict_normalize(&host, &spec.s)?;
    let embedding = Injection::new(spec.s.clone())?;
    for (i, &ti) in spec.t.iter().enumerate() {
        if spec.s.iter().position(|&x| x == ti) != Some(spec.a[i] - 1) {
            return Err(Error::PatternViolation(format!("t_{} does not map to a_{}", i + 1, i + 1)));
        }
    }
    if !is_disobedient(&member, &spec) {
        return Err(Error::PatternViolation("restriction is not disobedient".into()));
    }
    Ok(Disobedient {
        spec,
        member,
        host,
        embedding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::contains;
    use itertools::Itertools;
    use std::collections::HashSet;

    #[test]
    fn twenty_six_vertex_member() {
        let d = make_disobedient(26, &[1, 2, 6, 7, 9], &[2, 3, 4, 6, 8], 0).unwrap();
        assert_eq!(d.spec.r(), 16);
        assert_eq!(d.host.n(), 64);
        assert_eq!(d.spec.s.len(), 26);
        assert!(contains(&d.member, &d.host).unwrap().is_some());
    }

    #[test]
    fn smallest_case() {
        let d = make_disobedient(5, &[1], &[1], 0).unwrap();
        assert_eq!(d.spec.t, vec![1]);
        assert_eq!(d.spec.s.len(), 5);
        assert_eq!(d.spec.f, vec![[1, 3, 4]]);
    }

    #[test]
    fn predecessor_counts() {
        for (n, m) in [(10, 2), (11, 2), (13, 2), (15, 3)] {
            let eps = n - 5 * m;
            for a in (1..=2 * m + eps).combinations(m) {
                for b in (1..=2 * m).combinations(m) {
                    let spec = disobedient_spec(n, &a, &b).unwrap();
                    let r = spec.r();
                    for i in 1..=m {
                        let ti = spec.t[i - 1];
                        let before = spec.s.iter().filter(|&&x| x < ti).count();
                        assert_eq!(before, a[i - 1] - 1);
                        let y = r + 3 * ti - 2;
                        let before_y = spec.s.iter().filter(|&&x| x > r && x < y).count();
                        assert_eq!(before_y, b[i - 1] + i - 2);
                    }
                }
            }
        }
    }

    #[test]
    fn census_is_full() {
        let mut seen = HashSet::new();
        for a in (1..=4).combinations(2) {
            for b in (1..=4).combinations(2) {
                seen.insert(make_disobedient(10, &a, &b, 0).unwrap().member);
            }
        }
        assert_eq!(seen.len(), 36);
    }

    #[test]
    fn rejects_bad_sets() {
        assert!(make_disobedient(10, &[1, 5], &[1, 2], 0).is_err());
        assert!(make_disobedient(10, &[2, 1], &[1, 2], 0).is_err());
        assert!(make_disobedient(16, &[1, 2], &[1, 2], 0).is_err());
        assert!(make_disobedient(10, &[1, 2], &[1], 0).is_err());
    }
}
