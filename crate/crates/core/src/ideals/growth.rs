use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::coloring::{binomial, Coloring};
use crate::error::{Error, Result};
use crate::ideals::sequence::g_k;
use crate::ideals::spec::{Builtin, IdealSpec};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Nodes are flushed to the shared counter in batches of this size.
const FLUSH: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthOptions {
    pub n_max: usize,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Extension-tree node budget.
    pub budget: u64,
}

impl GrowthOptions {
    pub fn new(n_max: usize) -> Self {
        GrowthOptions {
            n_max,
            jobs: 0,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn jobs(self, jobs: usize) -> Self {
        GrowthOptions { jobs, ..self }
    }

    pub fn budget(self, budget: u64) -> Self {
        GrowthOptions { budget, ..self }
    }
}

/// |X_n| for one n; `count` is `None` when the budget ran out first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelCount {
    pub n: usize,
    pub count: Option<BigUint>,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRecord {
    pub digest: String,
    pub k: usize,
    pub levels: Vec<LevelCount>,
}

impl GrowthRecord {
    pub fn count(&self, n: usize) -> Option<&BigUint> {
        self.levels.iter().find(|l| l.n == n && l.exact)?.count.as_ref()
    }

    /// (n, |X_n|) for the exact prefix.
    pub fn exact_counts(&self) -> Vec<(usize, BigUint)> {
        self.levels
            .iter()
            .take_while(|l| l.exact)
            .map(|l| (l.n, l.count.clone().unwrap()))
            .collect()
    }

    pub fn is_exact(&self) -> bool {
        self.levels.iter().all(|l| l.exact)
    }
}

/// Colex rank of a sorted edge of 1-based vertices. Edges on [n-1] come
/// before every edge containing n, so a coloring of [n] extends the color
/// vector of its restriction to [n-1].
#[inline]
pub fn colex_rank(e: &[usize]) -> usize {
    e.iter().enumerate().map(|(i, &v)| binomial(v - 1, i + 1)).sum()
}

/// Converts a colex-ordered color vector into a coloring.
pub fn from_colex(k: usize, l: usize, n: usize, colors: &[u8]) -> Result<Coloring> {
    Coloring::from_fn(k, l, n, |e| colors[colex_rank(e)])
}

pub fn to_colex(c: &Coloring) -> Vec<u8> {
    let mut out = vec![0; c.num_edges()];
    for (e, &col) in c.edges().zip(c.colors()) {
        out[colex_rank(&e)] = col;
    }
    out
}

/// A basis element split at its top edge {m-k+1, ..., m}.
struct Prepared {
    low: usize,
    top_color: u8,
    /// by_low[j]: edges (as vertex lists) whose largest vertex below the top
    /// edge is j+1, with their colors.
    by_low: Vec<Vec<(Vec<usize>, u8)>>,
}

impl Prepared {
    fn new(b: &Coloring) -> Prepared {
        let (m, k) = (b.n(), b.k());
        let low = m - k;
        let top: Vec<usize> = (low + 1..=m).collect();
        let mut by_low = vec![Vec::new(); low];
        for e in b.edges() {
            if e == top {
                continue;
            }
            let j = e.iter().copied().filter(|&v| v <= low).max().unwrap();
            let col = b.color(&e);
            by_low[j - 1].push((e, col));
        }
        Prepared {
            low,
            top_color: b.color(&top),
            by_low,
        }
    }

    /// Whether some embedding sends the top edge to `edge` (the edge just
    /// colored, whose largest vertex is the newest one).
    fn embeds_at(&self, colors: &[u8], edge: &[usize]) -> bool {
        if colors[colors.len() - 1] != self.top_color {
            return false;
        }
        let mut f = vec![0usize; self.low];
        self.rec(colors, edge, &mut f, 0)
    }

    fn image(&self, f: &[usize], edge: &[usize], v: usize) -> usize {
        if v <= self.low {
            f[v - 1]
        } else {
            edge[v - self.low - 1]
        }
    }

    fn rec(&self, colors: &[u8], edge: &[usize], f: &mut Vec<usize>, j: usize) -> bool {
        if j == self.low {
            return true;
        }
        let lo = if j == 0 { 1 } else { f[j - 1] + 1 };
        let Some(hi) = edge[0].checked_sub(self.low - j) else {
            return false;
        };
        for x in lo..=hi {
            f[j] = x;
            let ok = self.by_low[j].iter().all(|(e, col)| {
                let img: Vec<usize> = e.iter().map(|&v| self.image(f, edge, v)).collect();
                colors[colex_rank(&img)] == *col
            });
            if ok && self.rec(colors, edge, f, j + 1) {
                return true;
            }
        }
        false
    }
}

enum Checker {
    Avoid(Vec<Prepared>),
    Member(Builtin),
}

impl Checker {
    /// Whether the partial color vector (last entry = `edge`) may still be
    /// extended to a member.
    fn ok(&self, k: usize, colors: &[u8], edge: &[usize], all_edges: &[Vec<usize>]) -> bool {
        match self {
            Checker::Avoid(basis) => !basis.iter().any(|b| b.embeds_at(colors, edge)),
            Checker::Member(name) => {
                if colors[colors.len() - 1] == 0 {
                    return true;
                }
                let interval = edge[k - 1] - edge[0] == k - 1;
                let ones = || {
                    colors[..colors.len() - 1]
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, _)| &all_edges[i])
                };
                match name {
                    Builtin::S => interval && ones().all(|o| o[k - 1] < edge[0]),
                    Builtin::LinearTight => interval && ones().next().is_none(),
                    Builtin::W1Tight => edge[..k - 1].iter().copied().eq(1..k),
                }
            }
        }
    }
}

struct Engine<'a> {
    k: usize,
    l: u8,
    checker: Checker,
    budget: u64,
    counter: &'a AtomicU64,
    abort: &'a AtomicBool,
}

struct Walk<'a> {
    new_edges: &'a [Vec<usize>],
    all_edges: &'a [Vec<usize>],
    pending: u64,
}

impl Engine<'_> {
    fn flush(&self, w: &mut Walk) {
        let total = self.counter.fetch_add(w.pending, Ordering::Relaxed) + w.pending;
        w.pending = 0;
        if total > self.budget {
            self.abort.store(true, Ordering::Relaxed);
        }
    }

    fn rec(&self, buf: &mut Vec<u8>, idx: usize, w: &mut Walk, emit: &mut dyn FnMut(&[u8])) {
        if idx == w.new_edges.len() {
            emit(buf);
            return;
        }
        for c in 0..self.l {
            if self.abort.load(Ordering::Relaxed) {
                return;
            }
            buf.push(c);
            w.pending += 1;
            if w.pending >= FLUSH {
                self.flush(w);
            }
            if self.checker.ok(self.k, buf, &w.new_edges[idx], w.all_edges) {
                self.rec(buf, idx + 1, w, emit);
            }
            buf.pop();
        }
    }

    fn extend(&self, parent: &[u8], new_edges: &[Vec<usize>], all_edges: &[Vec<usize>], emit: &mut dyn FnMut(&[u8])) {
        let mut buf = parent.to_vec();
        let mut w = Walk {
            new_edges,
            all_edges,
            pending: 0,
        };
        self.rec(&mut buf, 0, &mut w, emit);
        self.flush(&mut w);
    }
}

/// Edges containing n, ordered by colex rank.
fn new_edges(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut es: Vec<Vec<usize>> = (1..n)
        .combinations(k - 1)
        .map(|mut t| {
            t.push(n);
            t
        })
        .collect();
    es.sort_by_key(|e| colex_rank(e));
    es
}

/// Runs the extension tree, returning exact levels (and the members of the
/// last computed level when `keep_last` is set).
fn run(
    k: usize,
    l: usize,
    checker: Checker,
    smallest_forbidden: Option<usize>,
    opts: GrowthOptions,
    keep_last: bool,
) -> Result<(Vec<LevelCount>, Option<Vec<Vec<u8>>>)> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let counter = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let engine = Engine {
        k,
        l: l as u8,
        checker,
        budget: opts.budget,
        counter: &counter,
        abort: &abort,
    };
    let mut all_edges: Vec<Vec<usize>> = Vec::new();
    let mut levels = Vec::with_capacity(opts.n_max);
    let mut current: Vec<Vec<u8>> = vec![Vec::new()];
    let mut last = None;
    for n in 1..=opts.n_max {
        if smallest_forbidden.is_some_and(|m| n >= m) {
            current.clear();
        }
        let fresh = if n >= k { new_edges(n, k) } else { Vec::new() };
        all_edges.extend(fresh.iter().cloned());
        let last_level = n == opts.n_max;
        let count: BigUint;
        if last_level && !keep_last {
            let counts: Vec<u64> = pool.install(|| {
                current
                    .par_iter()
                    .map(|p| {
                        let mut c = 0u64;
                        engine.extend(p, &fresh, &all_edges, &mut |_| c += 1);
                        c
                    })
                    .collect()
            });
            count = counts.iter().map(|&c| BigUint::from(c)).sum();
        } else {
            let children: Vec<Vec<Vec<u8>>> = pool.install(|| {
                current
                    .par_iter()
                    .map(|p| {
                        let mut out = Vec::new();
                        engine.extend(p, &fresh, &all_edges, &mut |c| out.push(c.to_vec()));
                        out
                    })
                    .collect()
            });
            current = children.into_iter().flatten().collect();
            count = BigUint::from(current.len());
        }
        if abort.load(Ordering::Relaxed) {
            levels.extend((n..=opts.n_max).map(|n| LevelCount {
                n,
                count: None,
                exact: false,
            }));
            return Ok((levels, None));
        }
        levels.push(LevelCount {
            n,
            count: Some(count),
            exact: true,
        });
        if last_level && keep_last {
            last = Some(std::mem::take(&mut current));
        }
    }
    Ok((levels, last))
}

fn builtin_count(name: Builtin, k: usize, n: usize) -> BigUint {
    let free = (n + 1).saturating_sub(k);
    match name {
        Builtin::S => g_k(k, n).expect("k >= 2"),
        Builtin::LinearTight => BigUint::from(1 + free),
        Builtin::W1Tight => BigUint::one() << free,
    }
}

/// Exact growth function on [1, n_max], or a partial record if the budget
/// runs out.
pub fn growth(spec: &IdealSpec, opts: GrowthOptions) -> Result<GrowthRecord> {
    if opts.n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    let digest = spec.digest_hex();
    let k = spec.k();
    let levels = match spec {
        IdealSpec::Builtin { name, k } => (1..=opts.n_max)
            .map(|n| LevelCount {
                n,
                count: Some(builtin_count(*name, *k, n)),
                exact: true,
            })
            .collect(),
        IdealSpec::Avoid { l, basis, .. } if basis.is_empty() => (1..=opts.n_max)
            .map(|n| LevelCount {
                n,
                count: Some(BigUint::from(*l).pow(binomial(n, k) as u32)),
                exact: true,
            })
            .collect(),
        IdealSpec::Avoid { l, basis, .. } => {
            let (checker, small) = avoid_checker(k, basis);
            run(k, *l, checker, small, opts, false)?.0
        }
    };
    Ok(GrowthRecord { digest, k, levels })
}

fn avoid_checker(k: usize, basis: &[Coloring]) -> (Checker, Option<usize>) {
    let small = basis.iter().filter(|b| b.n() < k).map(|b| b.n()).min();
    let prepared = basis.iter().filter(|b| b.n() >= k).map(Prepared::new).collect();
    (Checker::Avoid(prepared), small)
}

/// The members of X_n, sorted, or `None` if the budget ran out.
pub fn members(spec: &IdealSpec, n: usize, opts: GrowthOptions) -> Result<Option<Vec<Coloring>>> {
    let opts = GrowthOptions { n_max: n, ..opts };
    let k = spec.k();
    let (checker, small, l) = match spec {
        IdealSpec::Avoid { l, basis, .. } => {
            let (c, s) = avoid_checker(k, basis);
            (c, s, *l)
        }
        IdealSpec::Builtin { name, .. } => (Checker::Member(*name), None, 2),
    };
    let (_, last) = run(k, l, checker, small, opts, true)?;
    let Some(last) = last else {
        return Ok(None);
    };
    let mut out: Vec<Coloring> = last.iter().map(|c| from_colex(k, l, n, c)).collect::<Result<_>>()?;
    out.sort();
    Ok(Some(out))
}

/// Growth of a builtin family computed by the generic extension tree with
/// the membership predicate, independent of the closed-form counts.
pub fn builtin_by_extension(name: Builtin, k: usize, opts: GrowthOptions) -> Result<Vec<LevelCount>> {
    Ok(run(k, 2, Checker::Member(name), None, opts, false)?.0)
}

/// Membership test for the builtin families.
pub fn builtin_contains(name: Builtin, k: usize, c: &Coloring) -> bool {
    if c.k() != k || c.l() != 2 {
        return false;
    }
    let ones: Vec<Vec<usize>> = c.edges().filter(|e| c.color(e) == 1).collect();
    let interval = |e: &Vec<usize>| e[k - 1] - e[0] == k - 1;
    match name {
        Builtin::S => ones.iter().all(interval) && ones.windows(2).all(|w| w[0][k - 1] < w[1][0]),
        Builtin::LinearTight => ones.len() <= 1 && ones.iter().all(interval),
        Builtin::W1Tight => ones.iter().all(|e| e[..k - 1].iter().copied().eq(1..k)),
    }
}
