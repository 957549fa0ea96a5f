//! Acceptance suite: one PASS/FAIL line per criterion. Oracles below are
//! written independently of the library and only share its public types.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hypergrowth::constructions::{
    all_words, chain_to_path, embed_chain, embed_string, enumerate_chains, enumerate_paths, make_disobedient,
    make_rich, make_string_coloring, make_wealthy, parse_bits, path_to_chain, rich_deletion_colorings, Chain,
    StringMode,
};
use hypergrowth::ideals::{
    builtin_by_extension, census_distinct, dichotomy_verdict, fibonacci, g, growth, Builtin, GrowthOptions,
    IdealSpec, Theorem,
};
use hypergrowth::lcg::Lcg64;
use hypergrowth::matrices::{find_pattern2, metrics2, metrics3, parse_line, Entry, PatternSpec, StarMatrix2};
use hypergrowth::structure::{apply_symmetry, is_wealthy, wealthy_pattern, wealthy_witnesses, WealthyFamily};
use hypergrowth::verify::{line_bound_holds, random_binary2, random_binary3, size_four_bases, window_record};
use hypergrowth::{contains, reverse, Coloring};

fn fib_oracle(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn g_oracle(n: usize) -> u64 {
    // Compositions of n into parts 1 and 3.
    let mut c = vec![1u64; n + 1];
    for i in 3..=n {
        c[i] = c[i - 1] + c[i - 3];
    }
    c[n]
}

fn u(x: &num_bigint::BigUint) -> u64 {
    x.try_into().unwrap()
}

fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Brute force over all 2^C(n,3) colorings with a membership predicate.
fn brute_count(n: usize, member: impl Fn(&Coloring) -> bool) -> u64 {
    let m = triples(n).len();
    (0..1u64 << m)
        .filter(|bits| {
            let colors = (0..m).map(|i| (bits >> i & 1) as u8).collect();
            member(&Coloring::new(3, 2, n, colors).unwrap())
        })
        .count() as u64
}

fn ones(c: &Coloring) -> Vec<[usize; 3]> {
    triples(c.n()).into_iter().filter(|t| c.color(t) == 1).collect()
}

fn c1() -> bool {
    let gs: Vec<u64> = (1..=11).map(|n| u(&g(n))).collect();
    let fs: Vec<u64> = (1..=8).map(|n| u(&fibonacci(n).unwrap())).collect();
    gs == [1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41]
        && fs == [1, 1, 2, 3, 5, 8, 13, 21]
        && (1..=11).all(|n| gs[n - 1] == g_oracle(n))
        && (1..=8).all(|n| fs[n - 1] == fib_oracle(n))
}

fn exact(levels: &[hypergrowth::ideals::LevelCount]) -> Vec<u64> {
    levels.iter().map(|l| u(l.count.as_ref().unwrap())).collect()
}

fn c2() -> bool {
    let ext = exact(&builtin_by_extension(Builtin::S, 3, GrowthOptions::new(12)).unwrap());
    let closed = growth(&IdealSpec::builtin(Builtin::S, 3).unwrap(), GrowthOptions::new(12)).unwrap();
    let interval_family = |c: &Coloring| {
        let o = ones(c);
        o.iter().all(|t| t[2] == t[0] + 2) && o.windows(2).all(|w| w[0][2] < w[1][0])
    };
    (1..=12).all(|n| ext[n - 1] == g_oracle(n) && u(closed.count(n).unwrap()) == g_oracle(n))
        && (3..=5).all(|n| brute_count(n, interval_family) == g_oracle(n))
}

fn c3() -> bool {
    let ext = exact(&builtin_by_extension(Builtin::LinearTight, 3, GrowthOptions::new(12)).unwrap());
    let pred = |c: &Coloring| {
        let o = ones(c);
        o.is_empty() || (o.len() == 1 && o[0][2] == o[0][0] + 2)
    };
    (3..=12).all(|n| ext[n - 1] == n as u64 - 1) && (3..=5).all(|n| brute_count(n, pred) == n as u64 - 1)
}

fn c4() -> bool {
    let ext = exact(&builtin_by_extension(Builtin::W1Tight, 3, GrowthOptions::new(10)).unwrap());
    let pred = |c: &Coloring| ones(c).iter().all(|t| t[0] == 1 && t[1] == 2);
    (2..=10).all(|n| ext[n - 1] == 1 << (n - 2)) && (3..=5).all(|n| brute_count(n, pred) == 1 << (n - 2))
}

/// Submatrix extraction written out by hand.
fn extract(host: &StarMatrix2, rows: &[usize], cols: &[usize]) -> Vec<Vec<Entry>> {
    rows.iter().map(|&i| cols.iter().map(|&j| host.get(i, j)).collect()).collect()
}

fn as_rows(m: &StarMatrix2) -> Vec<Vec<Entry>> {
    (1..=m.rows()).map(|i| (1..=m.cols()).map(|j| m.get(i, j)).collect()).collect()
}

fn restricted_matches(small: &Coloring, big: &Coloring, s: &[usize]) -> bool {
    triples(small.n()).iter().all(|t| small.color(t) == big.color(&[s[t[0] - 1], s[t[1] - 1], s[t[2] - 1]]))
}

fn c5() -> bool {
    let i8 = StarMatrix2::identity(8).unwrap();
    let a = embed_string(&parse_bits("0100101").unwrap(), StringMode::Identity).unwrap();
    let ok_a = a.rows == [2, 4, 5, 7]
        && a.cols == [1, 2, 5, 7]
        && extract(&i8, &a.rows, &a.cols) == as_rows(&a.matrix)
        && find_pattern2(&i8, &PatternSpec::Explicit(a.matrix.clone())).unwrap().is_some();
    let u9 = StarMatrix2::upper(9).unwrap();
    let b = embed_string(&parse_bits("01110").unwrap(), StringMode::Upper).unwrap();
    let ok_b = b.rows == [3, 4, 9]
        && b.cols == [1, 4, 7]
        && extract(&u9, &b.rows, &b.cols) == as_rows(&b.matrix)
        && find_pattern2(&u9, &PatternSpec::Explicit(b.matrix.clone())).unwrap().is_some();
    let chain = Chain::new(9, vec![(1, 2), (3, 4), (4, 6), (8, 8)]).unwrap();
    let (rows, cols) = embed_chain(&chain).unwrap();
    let i15 = StarMatrix2::identity(15).unwrap();
    let want: Vec<Vec<Entry>> =
        (1..=9).map(|i| (1..=9).map(|j| Entry::from_bit(chain.points().contains(&(i, j)))).collect()).collect();
    let ok_c = rows == [2, 4, 5, 7, 9, 10, 11, 12, 14]
        && cols == [1, 2, 3, 5, 6, 7, 8, 12, 13]
        && extract(&i15, &rows, &cols) == want
        && find_pattern2(&i15, &PatternSpec::Explicit(chain.matrix())).unwrap().is_some();
    let sc = make_string_coloring(&parse_bits("01010001010").unwrap(), 1, 13, 0).unwrap();
    let ok_d = sc.s_set == [1, 17, 20, 21, 26, 27, 32, 35, 38, 39, 44, 45, 50]
        && restricted_matches(&sc.member, &sc.host, &sc.s_set)
        && contains(&sc.member, &sc.host).unwrap().is_some();
    let d = make_disobedient(26, &[1, 2, 6, 7, 9], &[2, 3, 4, 6, 8], 0).unwrap();
    let ok_e = d.spec.s.len() == 26
        && d.host.n() == 64
        && restricted_matches(&d.member, &d.host, &d.spec.s)
        && contains(&d.member, &d.host).unwrap().is_some();
    ok_a && ok_b && ok_c && ok_d && ok_e
}

fn alternations(line: &[Entry]) -> Vec<usize> {
    (1..line.len())
        .filter(|&i| {
            let (x, y) = (line[i - 1], line[i]);
            x != Entry::Star && y != Entry::Star && x != y
        })
        .collect()
}

/// Row-alternation bound computed from scratch.
fn row_bound_oracle(m: &StarMatrix2) -> bool {
    let check = |m: &StarMatrix2| {
        let rs: Vec<Vec<usize>> = (1..=m.rows()).map(|i| alternations(&m.row(i))).collect();
        let cs: Vec<Vec<usize>> = (1..=m.cols()).map(|j| alternations(&m.col(j))).collect();
        let al = rs.iter().chain(&cs).map(Vec::len).max().unwrap_or(0) + 1;
        let mut r: Vec<usize> = rs.concat();
        r.sort_unstable();
        r.dedup();
        let mut c: Vec<usize> = cs.concat();
        c.sort_unstable();
        c.dedup();
        let lib = metrics2(m);
        lib.al == al && lib.r == r && lib.c == c && r.len() <= (al - 1) * (2 * c.len() + 1)
    };
    check(m) && check(&m.transpose())
}

fn c6() -> bool {
    let mut g = Lcg64::new(0);
    let v2 = (0..10_000).filter(|_| !row_bound_oracle(&random_binary2(&mut g, 12))).count();
    let v3 = (0..1_000)
        .filter(|_| {
            let m = random_binary3(&mut g, 8);
            let x = metrics3(&m);
            let (l, r, c, s) = (x.al, x.r.len(), x.c.len(), x.s.len());
            let own = s <= (l - 1) * (r.max(c) + 1).pow(2)
                && r <= (l - 1) * (c.max(s) + 1).pow(2)
                && c <= (l - 1) * (r.max(s) + 1).pow(2);
            own != line_bound_holds(&m) || !own
        })
        .count();
    v2 == 0 && v3 == 0
}

fn binom(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

fn c7() -> bool {
    (1..=6).all(|m| {
        let chains: Vec<Chain> = enumerate_chains(m).collect();
        let paths: Vec<_> = enumerate_paths(m).collect();
        let want = binom(2 * m as u64, m as u64);
        let last_free = chains.iter().filter(|c| c.points().iter().all(|&(i, j)| i < m && j < m)).count();
        chains.len() as u64 == want
            && paths.len() as u64 == want
            && chains.iter().all(|c| path_to_chain(&chain_to_path(c)) == *c)
            && paths.iter().all(|p| chain_to_path(&path_to_chain(p)) == *p)
            && last_free as u64 == binom(2 * m as u64 - 2, m as u64 - 1)
    }) && binom(12, 6) == 924
}

fn c8() -> bool {
    let words_ok = [StringMode::Identity, StringMode::Upper].iter().all(|&mode| {
        (1..=4).all(|n| {
            let host = mode.host(n);
            all_words(2 * n - 1).filter(|w| mode.allows(w)).all(|w| {
                let e = embed_string(&w, mode).unwrap();
                let sub = extract(&host, &e.rows, &e.cols);
                (0..n).all(|i| sub[i][i] == Entry::from_color(w[2 * i]))
                    && (0..n - 1).all(|i| sub[i][i + 1] == Entry::from_color(w[2 * i + 1]))
                    && sub == as_rows(&e.matrix)
            })
        })
    });
    let chains_ok = (1..=5).all(|n| {
        enumerate_chains(n).all(|a| {
            let host = StarMatrix2::identity(2 * n - a.points().len()).unwrap();
            let (rows, cols) = embed_chain(&a).unwrap();
            let sub = extract(&host, &rows, &cols);
            (1..=n).all(|i| (1..=n).all(|j| (sub[i - 1][j - 1] == Entry::One) == a.points().contains(&(i, j))))
        })
    });
    words_ok && chains_ok
}

fn c9() -> bool {
    let mut g = Lcg64::new(0);
    WealthyFamily::ALL.iter().all(|&family| {
        (1..=5).all(|r| {
            let trips = family.variants().iter().all(|v| {
                (0..2).all(|filler| {
                    let c = make_wealthy(family, r, v, filler).unwrap();
                    wealthy_witnesses(&c, family, r).unwrap().iter().any(|w| w.variant == *v)
                })
            });
            let p = wealthy_pattern(family, r, &family.plain()).unwrap();
            let mut c = p.fill(0).unwrap();
            for e in c.edges().collect::<Vec<_>>() {
                if p.get(&e).is_none() {
                    c.set(&e, g.bit() as u8).unwrap();
                }
            }
            let group = family
                .variants()
                .iter()
                .all(|v| is_wealthy(&apply_symmetry(&c, family, r, v).unwrap(), family, r).unwrap().is_some());
            let rev = match family {
                WealthyFamily::W1Prime | WealthyFamily::W1Second | WealthyFamily::W41 | WealthyFamily::W42 => {
                    is_wealthy(&reverse(&c), family, r).unwrap().is_some()
                }
                _ => true,
            };
            trips && group && rev
        })
    })
}

fn c10() -> bool {
    alternations(&parse_line("00011**11*010").unwrap()) == [3, 11, 12]
        && metrics2(&StarMatrix2::from_rows(&["00011**11*010"]).unwrap()).r == [3, 11, 12]
}

/// |Avoid({b})_n| by brute force: no 4-subset induces b.
fn avoid_oracle(b: &Coloring, n: usize) -> u64 {
    let quads: Vec<[usize; 4]> = (1..=n)
        .flat_map(|a| (a + 1..=n).flat_map(move |x| (x + 1..=n).flat_map(move |y| (y + 1..=n).map(move |z| [a, x, y, z]))))
        .collect();
    brute_count(n, |c| {
        quads.iter().all(|q| triples(4).iter().any(|t| b.color(t) != c.color(&[q[t[0] - 1], q[t[1] - 1], q[t[2] - 1]])))
    })
}

fn c11() -> bool {
    size_four_bases().iter().all(|b| {
        let rec = window_record(b, 0).unwrap();
        let counts = rec.exact_counts();
        let window = counts.last().unwrap().0;
        let brute_ok = (4..=5).all(|n| u(rec.count(n).unwrap()) == avoid_oracle(b, n));
        let tail = &counts[counts.len() - 3..];
        let constant_tail = tail.iter().all(|(_, c)| *c == tail[0].1);
        let floor = counts.iter().filter(|(n, _)| *n >= 3).all(|(n, c)| u(c) >= *n as u64 - 1);
        let verdict = dichotomy_verdict(&rec, Theorem::Constant).unwrap();
        window >= 6 && brute_ok && (constant_tail || floor) && !verdict.is_violation()
    })
}

fn c12() -> bool {
    let census = (4..=7).all(|r| {
        [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)].iter().all(|&(f, h)| {
            let c = make_rich(3, r, f, 3 - f - h, h, 0, 1, 0).unwrap();
            let del = rich_deletion_colorings(&c, r, f, h).unwrap();
            let mut own = del.clone();
            own.sort();
            own.dedup();
            census_distinct(&del).unwrap() == r - 1 && own.len() == r - 1
        })
    });
    let no_double = |w: &[u8], x: u8| !w.windows(2).any(|p| p[0] == x && p[1] == x);
    let words = (2..=18).all(|n| {
        let f = fib_oracle(n);
        (0..2u8).all(|x| all_words(n - 2).filter(|w| no_double(w, x)).count() as u64 == f)
            && u(&fibonacci(n).unwrap()) == f
    });
    let strict = (5..=40).all(|n| fib_oracle(n) > g_oracle(n) && fibonacci(n).unwrap() > g(n));
    census && words && strict
}

fn c13() -> bool {
    let s = |j| builtin_by_extension(Builtin::S, 3, GrowthOptions::new(12).jobs(j)).unwrap();
    let w = |j| size_four_bases().iter().map(|b| window_record(b, j).unwrap()).collect::<Vec<_>>();
    s(1) == s(8) && w(1) == w(8)
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> bool); 13] = [
        ("sequences", 1, c1),
        ("tight_s3", 1, c2),
        ("linear_tight", 1, c3),
        ("w1_tight", 1, c4),
        ("fixtures", 5, c5),
        ("matrix_inequalities", 30, c6),
        ("chain_path_bijection", 10, c7),
        ("embeddings_exhaustive", 30, c8),
        ("wealthy_round_trips", 30, c9),
        ("row_contribution", 1, c10),
        ("dichotomy_window", 600, c11),
        ("deletion_census", 10, c12),
        ("determinism", 1200, c13),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let holds = f();
        let elapsed = start.elapsed();
        let pass = holds && elapsed <= Duration::from_secs(*limit);
        failed += !pass as usize;
        println!(
            "criterion {:>2} {:<22} {} holds={} elapsed={:.3}s limit={}s",
            i + 1,
            name,
            if pass { "PASS" } else { "FAIL" },
            holds,
            elapsed.as_secs_f64(),
            limit
        );
    }
    println!("acceptance: {} passed, {} failed", criteria.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
