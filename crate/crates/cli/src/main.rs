use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;

use hypergrowth::constructions::{
    embed_chain, embed_string, make_disobedient, make_rich, make_string_coloring, make_wealthy, parse_bits, Chain,
    StringMode,
};
use hypergrowth::ideals::{
    dichotomy_verdict, growth_cached, Builtin, GrowthCache, GrowthOptions, GrowthRecord, IdealSpec, SequenceName,
    Theorem, DEFAULT_BUDGET,
};
use hypergrowth::matrices::{al_23d, find_submatrix, fullness, metrics2, metrics3, StarMatrix2, StarMatrix3};
use hypergrowth::structure::{
    is_c_simple, is_p_tame, is_r_rich, nuclear_decomposition, wealthy_witnesses, SimplicityViolation, Variant,
    WealthyFamily,
};
use hypergrowth::verify::{run_criterion, SuiteOptions, CRITERIA};
use hypergrowth::{contains, homogeneity, Coloring, Homogeneity};

#[derive(Parser)]
#[command(name = "hypergrowth", version, about = "Growth of hereditary families of ordered hypergraph colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an explicit coloring or matrix.
    Make {
        #[command(subcommand)]
        what: Make,
    },
    /// Test a coloring, matrix or ideal for a structural property.
    Classify {
        #[command(subcommand)]
        what: Classify,
    },
    /// Search for an increasing embedding of SMALL into BIG.
    Contains { small: PathBuf, big: PathBuf },
    /// Exact growth function |X_n| for n = 1..n-max.
    Growth(GrowthArgs),
    /// Values of F, G or G^k.
    Sequence {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        /// Order k for G^k.
        #[arg(long)]
        k: Option<usize>,
        /// Print every value from 1 up to n.
        #[arg(long)]
        all: bool,
    },
    /// Run the acceptance suite.
    Verify {
        /// `all` or a comma-separated list of criterion numbers.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Args)]
struct GrowthArgs {
    /// avoid:<file> or builtin:<name>,k=<k>
    #[arg(long)]
    spec: String,
    #[arg(long)]
    n_max: usize,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, env = "HYPERGROWTH_CACHE")]
    cache: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Make {
    /// Canonical r-wealthy coloring moved by a symmetry variant.
    Wealthy {
        #[arg(long)]
        family: String,
        #[arg(long)]
        r: usize,
        /// e.g. swap:0,rev:00,perm:123
        #[arg(long)]
        variant: Option<String>,
        #[arg(long, default_value_t = 0)]
        filler: u8,
    },
    /// r-rich coloring of type T_{f,g,h}.
    Rich {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        /// f,g,h
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value_t = 0)]
        a: u8,
        #[arg(long, default_value_t = 1)]
        b: u8,
        #[arg(long, default_value_t = 0)]
        filler: u8,
    },
    /// Word on a diagonal and superdiagonal, selected from I_2n or U_3n.
    String {
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Mode::Identity)]
        mode: Mode,
    },
    /// Indicator matrix of an m-chain and its selection in I_{2m-k}.
    Chain {
        #[arg(long)]
        m: usize,
        /// Points as c:d pairs, e.g. 1:2,3:4
        #[arg(long, default_value = "")]
        points: String,
    },
    /// Word-driven restriction of the W4.2-shaped host.
    StringColoring {
        #[arg(long)]
        word: String,
        #[arg(long)]
        t: u8,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        filler: u8,
        /// Print the host instead of the member.
        #[arg(long)]
        host: bool,
    },
    /// (A, B)-disobedient member on n vertices.
    Disobedient {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value_t = 0)]
        filler: u8,
        #[arg(long)]
        host: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Identity,
    Upper,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Constant,
    QuasiFibonacci,
}

#[derive(Subcommand)]
enum Classify {
    /// r-wealthy of one family, or of any family of the right size.
    Wealthy {
        file: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        family: Option<String>,
    },
    Rich {
        file: PathBuf,
        #[arg(long)]
        r: usize,
    },
    Simple {
        file: PathBuf,
        #[arg(long)]
        c: usize,
    },
    Tame {
        file: PathBuf,
        #[arg(long)]
        p: usize,
    },
    Nuclear { file: PathBuf },
    Homogeneous {
        file: PathBuf,
        /// Comma-separated vertex set.
        #[arg(long)]
        set: String,
    },
    /// al, R, C (and S) of a matrix file.
    Matrix { file: PathBuf },
    /// Window-relative dichotomy verdict for an ideal.
    Dichotomy {
        #[command(flatten)]
        growth: GrowthArgs,
        #[arg(long, value_enum, default_value_t = TheoremArg::Constant)]
        theorem: TheoremArg,
    },
}

/// Holds = 0, fails or not found = 1; errors map to 2 in `main`.
fn status(holds: bool) -> u8 {
    if holds {
        0
    } else {
        1
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_coloring(path: &Path) -> Result<Coloring> {
    Coloring::parse(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>().map_err(|e| anyhow!("bad number `{t}`: {e}")))
        .collect()
}

fn parse_spec(s: &str) -> Result<IdealSpec> {
    if let Some(path) = s.strip_prefix("avoid:") {
        let text = read(Path::new(path))?;
        return IdealSpec::parse(&text).with_context(|| format!("parsing {path}"));
    }
    let Some(rest) = s.strip_prefix("builtin:") else {
        bail!("--spec must be avoid:<file> or builtin:<name>,k=<k>");
    };
    let (name, k) = rest.split_once(",k=").ok_or_else(|| anyhow!("builtin spec needs `,k=<k>`"))?;
    let name: Builtin = name.parse()?;
    Ok(IdealSpec::builtin(name, k.parse().context("k")?)?)
}

fn compute_growth(args: &GrowthArgs) -> Result<GrowthRecord> {
    let spec = parse_spec(&args.spec)?;
    let opts = GrowthOptions::new(args.n_max).jobs(args.jobs).budget(args.budget);
    let cache = args.cache.as_ref().map(GrowthCache::new);
    Ok(growth_cached(&spec, opts, cache.as_ref())?)
}

fn run(cli: Cli, out: &mut String) -> Result<u8> {
    match cli.command {
        Command::Make { what } => make(what, out),
        Command::Classify { what } => classify(what, out),
        Command::Contains { small, big } => {
            let (a, b) = (read(&small)?, read(&big)?);
            let is_matrix = |t: &str| t.trim_start().starts_with("matrix2");
            if is_matrix(&a) && is_matrix(&b) {
                let (p, h) = (StarMatrix2::parse(&a)?, StarMatrix2::parse(&b)?);
                match find_submatrix(&h, &p) {
                    Some((rows, cols)) => {
                        writeln!(out, "contained=true rows={} cols={}", rows.iter().join(","), cols.iter().join(","))?;
                        Ok(0)
                    }
                    None => {
                        writeln!(out, "contained=false")?;
                        Ok(1)
                    }
                }
            } else {
                let (s, b) = (Coloring::parse(&a)?, Coloring::parse(&b)?);
                match contains(&s, &b)? {
                    Some(f) => {
                        writeln!(out, "contained=true injection={f}")?;
                        Ok(0)
                    }
                    None => {
                        writeln!(out, "contained=false")?;
                        Ok(1)
                    }
                }
            }
        }
        Command::Growth(args) => {
            let rec = compute_growth(&args)?;
            for level in &rec.levels {
                match (&level.count, level.exact) {
                    (Some(c), true) => writeln!(out, "n={} count={c}", level.n)?,
                    _ => writeln!(out, "n={} count=unknown exact=false", level.n)?,
                }
            }
            Ok(0)
        }
        Command::Sequence { name, n, k, all } => {
            let seq = SequenceName::parse(&name, k)?;
            let from = if all { 1 } else { n };
            for i in from..=n {
                writeln!(out, "{}({i})={}", seq.label(), seq.value(i)?)?;
            }
            Ok(0)
        }
        Command::Verify { suite, seed, jobs } => {
            let ids = if suite == "all" { (1..=CRITERIA).collect() } else { list(&suite)? };
            let opts = SuiteOptions { seed, jobs };
            let mut failed = 0;
            for id in &ids {
                let r = run_criterion(*id, opts)?;
                failed += !r.passed() as usize;
                // Stream progress since the long criteria take minutes.
                println!("{r}");
            }
            writeln!(out, "summary criteria={} passed={} failed={failed}", ids.len(), ids.len() - failed)?;
            Ok(status(failed == 0))
        }
    }
}

fn make(what: Make, out: &mut String) -> Result<u8> {
    match what {
        Make::Wealthy { family, r, variant, filler } => {
            let fam: WealthyFamily = family.parse()?;
            let v = match variant {
                Some(s) => Variant::parse(fam, &s)?,
                None => fam.plain(),
            };
            writeln!(out, "# family={fam} r={r} variant={v}")?;
            write!(out, "{}", make_wealthy(fam, r, &v, filler)?)?;
        }
        Make::Rich { k, r, ty, a, b, filler } => {
            let t = list(&ty)?;
            let [f, g, h] = t[..] else {
                bail!("--type takes f,g,h");
            };
            write!(out, "{}", make_rich(k, r, f, g, h, a, b, filler)?)?;
        }
        Make::String { word, mode } => {
            let mode = match mode {
                Mode::Identity => StringMode::Identity,
                Mode::Upper => StringMode::Upper,
            };
            let e = embed_string(&parse_bits(&word)?, mode)?;
            writeln!(out, "# rows={} cols={}", e.rows.iter().join(","), e.cols.iter().join(","))?;
            write!(out, "{}", e.matrix)?;
        }
        Make::Chain { m, points } => {
            let pts = points
                .split(',')
                .filter(|p| !p.is_empty())
                .map(|p| {
                    let (c, d) = p.split_once(':').ok_or_else(|| anyhow!("point `{p}` is not c:d"))?;
                    Ok((c.parse()?, d.parse()?))
                })
                .collect::<Result<Vec<(usize, usize)>>>()?;
            let chain = Chain::new(m, pts)?;
            let (rows, cols) = embed_chain(&chain)?;
            writeln!(
                out,
                "# host=I{} rows={} cols={}",
                2 * m - chain.points().len(),
                rows.iter().join(","),
                cols.iter().join(",")
            )?;
            write!(out, "{}", chain.matrix())?;
        }
        Make::StringColoring { word, t, r, filler, host } => {
            let sc = make_string_coloring(&parse_bits(&word)?, t, r, filler)?;
            writeln!(out, "# S={}", sc.s_set.iter().join(","))?;
            write!(out, "{}", if host { &sc.host } else { &sc.member })?;
        }
        Make::Disobedient { n, a, b, filler, host } => {
            let d = make_disobedient(n, &list(&a)?, &list(&b)?, filler)?;
            writeln!(out, "# r={} S={}", d.spec.r(), d.spec.s.iter().join(","))?;
            write!(out, "{}", if host { &d.host } else { &d.member })?;
        }
    }
    Ok(0)
}

fn classify(what: Classify, out: &mut String) -> Result<u8> {
    match what {
        Classify::Wealthy { file, r, family } => {
            let c = read_coloring(&file)?;
            let families = match family {
                Some(f) => vec![f.parse::<WealthyFamily>()?],
                None => WealthyFamily::ALL.iter().copied().filter(|f| f.size(r) == c.n()).collect(),
            };
            let mut found = false;
            for fam in families {
                for w in wealthy_witnesses(&c, fam, r)? {
                    writeln!(out, "{w}")?;
                    found = true;
                }
            }
            if !found {
                writeln!(out, "wealthy=false")?;
            }
            Ok(status(found))
        }
        Classify::Rich { file, r } => {
            let c = read_coloring(&file)?;
            match is_r_rich(&c, r) {
                Some(w) => {
                    let edges = w.edges.iter().map(|e| format!("{{{}}}", e.iter().join(","))).join(";");
                    writeln!(out, "rich=true type={},{},{} a={} b={} edges={edges}", w.f, w.g, w.h, w.a, w.b)?;
                    Ok(0)
                }
                None => {
                    writeln!(out, "rich=false")?;
                    Ok(1)
                }
            }
        }
        Classify::Simple { file, c } => {
            let col = read_coloring(&file)?;
            match is_c_simple(&col, c) {
                None => {
                    writeln!(out, "simple=true")?;
                    Ok(0)
                }
                Some(SimplicityViolation::C1(e1, e2)) => {
                    writeln!(out, "simple=false condition=C1 e1={e1} e2={e2}")?;
                    Ok(1)
                }
                Some(SimplicityViolation::C2 { vs, w1, w2 }) => {
                    writeln!(out, "simple=false condition=C2 vs={} w1={w1} w2={w2}", vs.iter().join(","))?;
                    Ok(1)
                }
            }
        }
        Classify::Tame { file, p } => {
            let rep = is_p_tame(&read_coloring(&file)?, p)?;
            let verdicts: String = rep.verdicts.iter().map(|&v| if v { '1' } else { '0' }).collect();
            write!(out, "tame={} p={p} conditions={verdicts}", rep.is_tame())?;
            if let Some(w) = &rep.witness {
                write!(
                    out,
                    " violated={} intervals={} metric={} value={}",
                    w.condition,
                    if w.intervals.is_empty() { "-".to_string() } else { w.intervals.iter().join(",") },
                    w.metric,
                    w.value
                )?;
            }
            writeln!(out)?;
            Ok(status(rep.is_tame()))
        }
        Classify::Nuclear { file } => {
            let d = nuclear_decomposition(&read_coloring(&file)?);
            let ivs = d.intervals.iter().map(|(a, b)| format!("[{a},{b}]")).join("|");
            writeln!(out, "intervals={} count={}", ivs, d.len())?;
            Ok(0)
        }
        Classify::Homogeneous { file, set } => {
            let h = homogeneity(&read_coloring(&file)?, &list(&set)?)?;
            match &h {
                Homogeneity::Homogeneous(c) => writeln!(out, "homogeneous=true color={c}")?,
                Homogeneity::Indeterminate => writeln!(out, "homogeneous=true color=-")?,
                Homogeneity::NotHomogeneous(a, b) => writeln!(out, "homogeneous=false e1={a} e2={b}")?,
            }
            Ok(status(h.is_homogeneous()))
        }
        Classify::Matrix { file } => {
            let text = read(&file)?;
            let set = |v: &[usize]| if v.is_empty() { "-".to_string() } else { v.iter().join(",") };
            if text.trim_start().starts_with("matrix3") {
                let m = StarMatrix3::parse(&text)?;
                let x = metrics3(&m);
                write!(out, "al={} R={} C={} S={}", x.al, set(&x.r), set(&x.c), set(&x.s))?;
                if let Ok(d) = al_23d(&m) {
                    write!(out, " al23d={d}")?;
                }
                writeln!(out)?;
            } else {
                let m = StarMatrix2::parse(&text)?;
                let x = metrics2(&m);
                let full = fullness(&m);
                writeln!(
                    out,
                    "al={} R={} C={} r_full={} c_full={}",
                    x.al,
                    set(&x.r),
                    set(&x.c),
                    full.r_full,
                    full.c_full
                )?;
            }
            Ok(0)
        }
        Classify::Dichotomy { growth, theorem } => {
            let rec = compute_growth(&growth)?;
            let th = match theorem {
                TheoremArg::Constant => Theorem::Constant,
                TheoremArg::QuasiFibonacci => Theorem::QuasiFibonacci,
            };
            let v = dichotomy_verdict(&rec, th)?;
            writeln!(out, "digest={} {v}", rec.digest)?;
            Ok(status(!v.is_violation()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(cli, &mut out) {
        Ok(code) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            print!("{out}");
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
