//! The acceptance suite as a library: thirteen numbered criteria, each
//! returning a pass/fail report with a pinned time limit.

use std::fmt;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::coloring::{binomial, contains, Coloring};
use crate::constructions::{
    all_words, avoids_alternating, avoids_double, chain_to_path, embed_chain, embed_string, enumerate_chains,
    enumerate_paths, make_disobedient, make_rich, make_string_coloring, make_wealthy, parse_bits, path_to_chain,
    rich_deletion_colorings, Chain, StringMode,
};
use crate::error::{Error, Result};
use crate::ideals::{
    builtin_by_extension, census_distinct, dichotomy_verdict, fibonacci, g, growth, Builtin, GrowthOptions,
    GrowthRecord, IdealSpec, LevelCount, Theorem,
};
use crate::lcg::Lcg64;
use crate::matrices::{
    alternation_indices, find_pattern2, metrics2, metrics3, parse_line, Entry, PatternSpec, StarMatrix2,
    StarMatrix3,
};
use crate::structure::{apply_symmetry, is_wealthy, wealthy_pattern, wealthy_witnesses, WealthyFamily};

pub const CRITERIA: usize = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SuiteOptions {
    /// Seed for the randomized criteria.
    pub seed: u64,
    /// Worker threads for growth runs; 0 lets rayon decide.
    pub jobs: usize,
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    /// The property itself held.
    pub holds: bool,
    pub elapsed: Duration,
    pub limit: Duration,
    pub detail: String,
}

impl CriterionReport {
    pub fn within_time(&self) -> bool {
        self.elapsed <= self.limit
    }

    pub fn passed(&self) -> bool {
        self.holds && self.within_time()
    }
}

/// Elapsed time is left out so that reports are reproducible; only the
/// comparison against the limit is shown.
impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion={} name={} result={} holds={} within_limit={} limit_s={} {}",
            self.id,
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.holds,
            self.within_time(),
            self.limit.as_secs(),
            self.detail
        )
    }
}

fn name_and_limit(id: usize) -> (&'static str, u64) {
    match id {
        1 => ("sequences", 1),
        2 => ("tight_s3", 1),
        3 => ("linear_tight", 1),
        4 => ("w1_tight", 1),
        5 => ("fixtures", 5),
        6 => ("matrix_inequalities", 30),
        7 => ("chain_path_bijection", 10),
        8 => ("embeddings_exhaustive", 30),
        9 => ("wealthy_round_trips", 30),
        10 => ("row_contribution", 1),
        11 => ("dichotomy_window", 600),
        12 => ("deletion_census", 10),
        13 => ("determinism", 1200),
        _ => unreachable!(),
    }
}

/// Runs one criterion; errors inside a check count as failures.
pub fn run_criterion(id: usize, opts: SuiteOptions) -> Result<CriterionReport> {
    if !(1..=CRITERIA).contains(&id) {
        return Err(Error::InvalidArgument(format!("criterion {id} not in 1..={CRITERIA}")));
    }
    let (name, limit) = name_and_limit(id);
    let start = Instant::now();
    let outcome = match id {
        1 => sequences(),
        2 => tight_s3(opts),
        3 => linear_tight(opts),
        4 => w1_tight(opts),
        5 => fixtures(),
        6 => matrix_inequalities(opts.seed),
        7 => chain_bijection(),
        8 => embeddings(),
        9 => wealthy_round_trips(opts.seed),
        10 => row_contribution(),
        11 => dichotomy_window(opts.jobs),
        12 => deletion_census(),
        _ => determinism(),
    };
    let elapsed = start.elapsed();
    let (holds, detail) = match outcome {
        Ok((h, d)) => (h, d),
        Err(e) => (false, format!("error=\"{e}\"")),
    };
    Ok(CriterionReport {
        id,
        name,
        holds,
        elapsed,
        limit: Duration::from_secs(limit),
        detail,
    })
}

pub fn run_all(opts: SuiteOptions) -> Vec<CriterionReport> {
    (1..=CRITERIA).map(|id| run_criterion(id, opts).expect("id in range")).collect()
}

type Outcome = Result<(bool, String)>;

fn ints(xs: impl IntoIterator<Item = BigUint>) -> Vec<u64> {
    xs.into_iter().map(|x| x.try_into().unwrap_or(u64::MAX)).collect()
}

fn sequences() -> Outcome {
    let gs = ints((1..=11).map(g));
    let fs = ints((1..=8).map(|n| fibonacci(n).unwrap()));
    let ok = gs == [1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41] && fs == [1, 1, 2, 3, 5, 8, 13, 21];
    Ok((ok, format!("G11={} F8={}", gs[10], fs[7])))
}

/// Families of pairwise disjoint k-intervals in [n].
fn interval_families(n: usize, k: usize) -> u64 {
    fn go(start: usize, n: usize, k: usize) -> u64 {
        1 + (start..=n.saturating_sub(k - 1)).filter(|&s| s >= 1).map(|s| go(s + k, n, k)).sum::<u64>()
    }
    go(1, n, k)
}

fn compositions_13(n: usize) -> u64 {
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for i in 1..=n {
        c[i] = c[i - 1] + if i >= 3 { c[i - 3] } else { 0 };
    }
    c[n]
}

fn level_counts(levels: &[LevelCount]) -> Option<Vec<u64>> {
    levels
        .iter()
        .map(|l| l.exact.then(|| l.count.clone().unwrap().try_into().unwrap_or(u64::MAX)))
        .collect()
}

fn tight_s3(opts: SuiteOptions) -> Outcome {
    let ext = builtin_by_extension(Builtin::S, 3, GrowthOptions::new(12).jobs(opts.jobs))?;
    let ext = level_counts(&ext).unwrap_or_default();
    let closed = ints((1..=12).map(g));
    let fam: Vec<u64> = (1..=12).map(|n| interval_families(n, 3)).collect();
    let comp: Vec<u64> = (1..=12).map(compositions_13).collect();
    let ok = ext == closed && fam == closed && comp == closed;
    Ok((ok, format!("counts={}", ext.iter().join(","))))
}

fn linear_tight(opts: SuiteOptions) -> Outcome {
    let ext = level_counts(&builtin_by_extension(Builtin::LinearTight, 3, GrowthOptions::new(12).jobs(opts.jobs))?)
        .unwrap_or_default();
    let ok = ext.len() == 12 && (3..=12).all(|n| ext[n - 1] == n as u64 - 1);
    Ok((ok, format!("counts={}", ext.iter().join(","))))
}

fn w1_tight(opts: SuiteOptions) -> Outcome {
    let ext = level_counts(&builtin_by_extension(Builtin::W1Tight, 3, GrowthOptions::new(10).jobs(opts.jobs))?)
        .unwrap_or_default();
    let ok = ext.len() == 10 && (2..=10).all(|n| ext[n - 1] == 1 << (n - 2));
    Ok((ok, format!("counts={}", ext.iter().join(","))))
}

fn selects(host: &StarMatrix2, rows: &[usize], cols: &[usize], want: &StarMatrix2) -> bool {
    host.submatrix(rows, cols).is_ok_and(|m| &m == want)
        && find_pattern2(host, &PatternSpec::Explicit(want.clone())).is_ok_and(|f| f.is_some())
}

fn fixtures() -> Outcome {
    let mut bad = Vec::new();
    let a = embed_string(&parse_bits("0100101")?, StringMode::Identity)?;
    if a.rows != [2, 4, 5, 7] || a.cols != [1, 2, 5, 7] || !selects(&StarMatrix2::identity(8)?, &a.rows, &a.cols, &a.matrix) {
        bad.push("identity_word");
    }
    let b = embed_string(&parse_bits("01110")?, StringMode::Upper)?;
    if b.rows != [3, 4, 9] || b.cols != [1, 4, 7] || !selects(&StarMatrix2::upper(9)?, &b.rows, &b.cols, &b.matrix) {
        bad.push("upper_word");
    }
    let chain = Chain::new(9, vec![(1, 2), (3, 4), (4, 6), (8, 8)])?;
    let (rows, cols) = embed_chain(&chain)?;
    let chain_ok = rows == [2, 4, 5, 7, 9, 10, 11, 12, 14]
        && cols == [1, 2, 3, 5, 6, 7, 8, 12, 13]
        && selects(&StarMatrix2::identity(14)?, &rows, &cols, &chain.matrix())
        && find_pattern2(&StarMatrix2::identity(15)?, &PatternSpec::Explicit(chain.matrix()))?.is_some();
    if !chain_ok {
        bad.push("chain");
    }
    let sc = make_string_coloring(&parse_bits("01010001010")?, 1, 13, 0)?;
    if sc.s_set != [1, 17, 20, 21, 26, 27, 32, 35, 38, 39, 44, 45, 50] || contains(&sc.member, &sc.host)?.is_none() {
        bad.push("string_coloring");
    }
    let d = make_disobedient(26, &[1, 2, 6, 7, 9], &[2, 3, 4, 6, 8], 0)?;
    if d.spec.s.len() != 26 || d.host.n() != 64 || contains(&d.member, &d.host)?.is_none() {
        bad.push("disobedient");
    }
    Ok((bad.is_empty(), format!("failed={}", if bad.is_empty() { "-".into() } else { bad.join(",") })))
}

pub fn random_binary2(g: &mut Lcg64, max: usize) -> StarMatrix2 {
    let (r, s) = (g.range(1, max), g.range(1, max));
    StarMatrix2::from_fn(r, s, |_, _| Entry::from_bit(g.bit())).expect("positive dims")
}

pub fn random_binary3(g: &mut Lcg64, max: usize) -> StarMatrix3 {
    let (r, s, t) = (g.range(1, max), g.range(1, max), g.range(1, max));
    StarMatrix3::from_fn(r, s, t, |_, _, _| Entry::from_bit(g.bit())).expect("positive dims")
}

/// |R(N)| <= (al(N) - 1)(2|C(N)| + 1), and the same for the transpose.
pub fn row_bound_holds(n: &StarMatrix2) -> bool {
    let check = |m: &StarMatrix2| {
        let x = metrics2(m);
        x.r.len() <= (x.al - 1) * (2 * x.c.len() + 1)
    };
    check(n) && check(&n.transpose())
}

/// Each of |R|, |C|, |S| is at most (al - 1)(max of the other two + 1)^2.
pub fn line_bound_holds(m: &StarMatrix3) -> bool {
    let x = metrics3(m);
    let (l, r, c, s) = (x.al, x.r.len(), x.c.len(), x.s.len());
    let bound = |a: usize, b: usize| (l - 1) * (a.max(b) + 1).pow(2);
    s <= bound(r, c) && r <= bound(c, s) && c <= bound(r, s)
}

fn matrix_inequalities(seed: u64) -> Outcome {
    let mut g = Lcg64::new(seed);
    let twos: Vec<StarMatrix2> = (0..10_000).map(|_| random_binary2(&mut g, 12)).collect();
    let threes: Vec<StarMatrix3> = (0..1_000).map(|_| random_binary3(&mut g, 8)).collect();
    let v2 = twos.par_iter().filter(|m| !row_bound_holds(m)).count();
    let v3 = threes.par_iter().filter(|m| !line_bound_holds(m)).count();
    Ok((v2 == 0 && v3 == 0, format!("seed={seed} violations2d={v2} violations3d={v3}")))
}

fn chain_bijection() -> Outcome {
    let mut ok = true;
    let mut counts = Vec::new();
    for m in 1..=6 {
        let chains: Vec<Chain> = enumerate_chains(m).collect();
        let paths: Vec<_> = enumerate_paths(m).collect();
        let want = binomial(2 * m, m);
        ok &= chains.len() == want && paths.len() == want;
        ok &= chains.iter().all(|c| path_to_chain(&chain_to_path(c)) == *c);
        ok &= paths.iter().all(|p| chain_to_path(&path_to_chain(p)) == *p);
        let corner_free = chains.iter().filter(|c| c.points().iter().all(|&(i, j)| i < m && j < m)).count();
        ok &= corner_free == binomial(2 * m - 2, m - 1);
        counts.push(format!("{}/{}", chains.len(), corner_free));
    }
    Ok((ok, format!("counts={}", counts.join(","))))
}

fn embeddings() -> Outcome {
    let mut words = 0;
    let mut chains = 0;
    for mode in [StringMode::Identity, StringMode::Upper] {
        for n in 1..=4 {
            let host = mode.host(n);
            for w in all_words(2 * n - 1).filter(|w| mode.allows(w)) {
                let e = embed_string(&w, mode)?;
                let prescribed = (1..=n).all(|i| {
                    e.matrix.get(i, i) == Entry::from_color(w[2 * i - 2])
                        && (i == n || e.matrix.get(i, i + 1) == Entry::from_color(w[2 * i - 1]))
                });
                if !prescribed || !selects(&host, &e.rows, &e.cols, &e.matrix) {
                    return Ok((false, format!("word={}", crate::constructions::bits_to_string(&w))));
                }
                words += 1;
            }
        }
    }
    for n in 1..=5 {
        for a in enumerate_chains(n) {
            let host = StarMatrix2::identity(2 * n - a.points().len())?;
            let (rows, cols) = embed_chain(&a)?;
            if !selects(&host, &rows, &cols, &a.matrix()) {
                return Ok((false, format!("chain={:?}", a.points())));
            }
            chains += 1;
        }
    }
    Ok((true, format!("words={words} chains={chains}")))
}

fn random_member(family: WealthyFamily, r: usize, g: &mut Lcg64) -> Result<Coloring> {
    let p = wealthy_pattern(family, r, &family.plain())?;
    let mut c = p.fill(0)?;
    for e in c.edges().collect::<Vec<_>>() {
        if p.get(&e).is_none() {
            c.set(&e, g.bit() as u8)?;
        }
    }
    Ok(c)
}

fn wealthy_round_trips(seed: u64) -> Outcome {
    let mut checked = 0usize;
    let mut g = Lcg64::new(seed);
    for family in WealthyFamily::ALL {
        for r in 1..=5 {
            for v in family.variants() {
                for filler in 0..2 {
                    let c = make_wealthy(family, r, &v, filler)?;
                    if !wealthy_witnesses(&c, family, r)?.iter().any(|w| w.variant == v) {
                        return Ok((false, format!("family={family} r={r} variant={v}")));
                    }
                    checked += 1;
                }
            }
            let c = random_member(family, r, &mut g)?;
            let closed = match family {
                WealthyFamily::W1Prime | WealthyFamily::W1Second | WealthyFamily::W41 | WealthyFamily::W42 => {
                    is_wealthy(&crate::coloring::reverse(&c), family, r)?.is_some()
                }
                _ => true,
            };
            let moved = family.variants().iter().try_fold(true, |acc, v| {
                Ok::<_, Error>(acc && is_wealthy(&apply_symmetry(&c, family, r, v)?, family, r)?.is_some())
            })?;
            if !closed || !moved {
                return Ok((false, format!("closure family={family} r={r}")));
            }
        }
    }
    Ok((true, format!("round_trips={checked}")))
}

fn row_contribution() -> Outcome {
    let r = alternation_indices(&parse_line("00011**11*010")?);
    Ok((r == [3, 11, 12], format!("R={}", r.iter().join(","))))
}

/// The 16 colorings of the 4 triples on [4].
pub fn size_four_bases() -> Vec<Coloring> {
    (0..16u8)
        .map(|bits| Coloring::new(3, 2, 4, (0..4).map(|i| bits >> (3 - i) & 1).collect()).expect("valid"))
        .collect()
}

/// Growth of Avoid({b}) on [1, 6], extended to 7 when |X_6| <= 10^5.
pub fn window_record(basis: &Coloring, jobs: usize) -> Result<GrowthRecord> {
    let spec = IdealSpec::avoid(3, 2, vec![basis.clone()])?;
    let six = growth(&spec, GrowthOptions::new(6).jobs(jobs))?;
    match six.count(6) {
        Some(c) if *c <= BigUint::from(100_000u32) => growth(&spec, GrowthOptions::new(7).jobs(jobs)),
        _ => Ok(six),
    }
}

fn window_records(jobs: usize) -> Result<Vec<GrowthRecord>> {
    size_four_bases().iter().map(|b| window_record(b, jobs)).collect()
}

fn dichotomy_window(jobs: usize) -> Outcome {
    let mut violations = 0;
    let mut windows = Vec::new();
    for rec in window_records(jobs)? {
        let v = dichotomy_verdict(&rec, Theorem::Constant)?;
        violations += v.is_violation() as usize;
        windows.push(rec.exact_counts().last().map_or(0, |x| x.0));
    }
    Ok((violations == 0, format!("bases=16 violations={violations} windows={}", windows.iter().join(","))))
}

fn deletion_census() -> Outcome {
    let mut ok = true;
    for r in 4..=7 {
        for (f, h) in [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)] {
            let gg = 3 - f - h;
            for (a, b) in [(0, 1), (1, 0)] {
                for filler in 0..2 {
                    let c = make_rich(3, r, f, gg, h, a, b, filler)?;
                    let del = rich_deletion_colorings(&c, r, f, h)?;
                    ok &= del.len() == r - 1 && census_distinct(&del)? == r - 1;
                }
            }
        }
    }
    let words = (2..=18).all(|n| {
        let f = fibonacci(n).unwrap();
        let count = |p: &dyn Fn(&[u8]) -> bool| BigUint::from(all_words(n - 2).filter(|w| p(w)).count());
        count(&|w| avoids_double(w, 0)) == f
            && count(&|w| avoids_double(w, 1)) == f
            && count(&|w| avoids_alternating(w, [0, 1], [1, 0])) == f
            && count(&|w| avoids_alternating(w, [1, 0], [0, 1])) == f
    });
    let strict = (5..=40).all(|n| fibonacci(n).unwrap() > g(n));
    Ok((ok && words && strict, format!("census={ok} words={words} strict={strict}")))
}

fn determinism() -> Outcome {
    let s1 = builtin_by_extension(Builtin::S, 3, GrowthOptions::new(12).jobs(1))?;
    let s8 = builtin_by_extension(Builtin::S, 3, GrowthOptions::new(12).jobs(8))?;
    let w1 = window_records(1)?;
    let w8 = window_records(8)?;
    let same_s = s1 == s8;
    let same_w = w1 == w8;
    Ok((same_s && same_w, format!("tight_s3_equal={same_s} window_equal={same_w}")))
}
