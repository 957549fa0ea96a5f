//! Colorings of ordered complete k-uniform hypergraphs and the induced
//! ordered subhypergraph relation.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use itertools::Itertools;

use crate::error::{parse_err, Error, Result};
use crate::text::{content_lines, field_usize, header_fields};

const BINOM_MAX: usize = 192;

fn binom_table() -> &'static Vec<Vec<u64>> {
    static TABLE: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![vec![0u64; BINOM_MAX + 1]; BINOM_MAX + 1];
        for n in 0..=BINOM_MAX {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1].saturating_add(t[n - 1][k]);
            }
        }
        t
    })
}

/// Binomial coefficient C(n, k), saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    if n <= BINOM_MAX {
        return binom_table()[n][k] as usize;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX as usize;
        }
    }
    acc as usize
}

/// Lexicographic rank of a sorted k-subset of [n], no validation.
#[inline]
pub(crate) fn rank_sorted(vs: &[usize], n: usize) -> usize {
    let k = vs.len();
    let t = binom_table();
    let mut acc = 0usize;
    for (i, &v) in vs.iter().enumerate() {
        acc += t[n - v][k - i] as usize;
    }
    t[n][k] as usize - 1 - acc
}

/// A k-subset of [n] stored as a strictly increasing tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(Vec<usize>);

impl EdgeId {
    /// Builds an edge from distinct positive vertices in any order.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        let distinct = vertices.windows(2).all(|w| w[0] < w[1]);
        if !distinct || vertices.first() == Some(&0) || vertices.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "edge vertices must be distinct and positive: {vertices:?}"
            )));
        }
        Ok(EdgeId(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    fn check(&self, n: usize, k: usize) -> Result<()> {
        if self.0.len() != k || self.0.iter().any(|&v| v > n) {
            return Err(Error::InvalidEdge {
                edge: self.0.clone(),
                n,
                k,
            });
        }
        Ok(())
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::fmt_set(&self.0))
    }
}

/// Rank of `edge` among the k-subsets of [n] in lexicographic order.
pub fn edge_index(edge: &EdgeId, n: usize, k: usize) -> Result<usize> {
    if n > BINOM_MAX {
        return Err(Error::InvalidArgument(format!("n={n} exceeds {BINOM_MAX}")));
    }
    edge.check(n, k)?;
    Ok(rank_sorted(&edge.0, n))
}

/// Inverse of [`edge_index`].
pub fn edge_unindex(rank: usize, n: usize, k: usize) -> Result<EdgeId> {
    if k == 0 || k > n || n > BINOM_MAX || rank >= binomial(n, k) {
        return Err(Error::InvalidArgument(format!(
            "rank {rank} out of range for n={n}, k={k}"
        )));
    }
    let mut rest = rank;
    let mut out = Vec::with_capacity(k);
    let mut v = 1;
    for i in 1..=k {
        loop {
            let count = binomial(n - v, k - i);
            if rest < count {
                break;
            }
            rest -= count;
            v += 1;
        }
        out.push(v);
        v += 1;
    }
    Ok(EdgeId(out))
}

/// An increasing injection [m] -> [n], stored as its image tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Injection(Vec<usize>);

impl Injection {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if images.windows(2).any(|w| w[0] >= w[1]) || images.first() == Some(&0) {
            return Err(Error::InvalidArgument(format!(
                "injection must be strictly increasing and positive: {images:?}"
            )));
        }
        Ok(Injection(images))
    }

    pub fn identity(m: usize) -> Self {
        Injection((1..=m).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }
}

impl fmt::Display for Injection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

/// An l-coloring of the k-subsets of [n], indexed by lexicographic rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    k: usize,
    l: usize,
    n: usize,
    colors: Vec<u8>,
}

fn check_params(k: usize, l: usize, n: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k={k} must be at least 2")));
    }
    if !(2..=256).contains(&l) {
        return Err(Error::InvalidArgument(format!("l={l} must be in 2..=256")));
    }
    if n == 0 || n > BINOM_MAX {
        return Err(Error::InvalidArgument(format!(
            "n={n} must be in 1..={BINOM_MAX}"
        )));
    }
    Ok(())
}

impl Coloring {
    pub fn new(k: usize, l: usize, n: usize, colors: Vec<u8>) -> Result<Self> {
        check_params(k, l, n)?;
        if colors.len() != binomial(n, k) {
            return Err(Error::InvalidArgument(format!(
                "expected {} colors, got {}",
                binomial(n, k),
                colors.len()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c as usize >= l) {
            return Err(Error::InvalidArgument(format!("color {c} not below l={l}")));
        }
        Ok(Coloring { k, l, n, colors })
    }

    pub fn constant(k: usize, l: usize, n: usize, color: u8) -> Result<Self> {
        check_params(k, l, n)?;
        Coloring::new(k, l, n, vec![color; binomial(n, k)])
    }

    /// Colors every edge (given as a sorted vertex slice) by `f`.
    pub fn from_fn(k: usize, l: usize, n: usize, mut f: impl FnMut(&[usize]) -> u8) -> Result<Self> {
        check_params(k, l, n)?;
        let colors = (1..=n).combinations(k).map(|e| f(&e)).collect();
        Coloring::new(k, l, n, colors)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn num_edges(&self) -> usize {
        self.colors.len()
    }

    /// True when n < k, so there are no edges at all.
    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color of a sorted edge. Panics on an invalid edge in debug builds.
    #[inline]
    pub fn color(&self, edge: &[usize]) -> u8 {
        debug_assert!(edge.len() == self.k && edge.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edge.iter().all(|&v| v >= 1 && v <= self.n));
        self.colors[rank_sorted(edge, self.n)]
    }

    /// Color of an edge given in any order, with validation.
    pub fn color_of(&self, edge: &EdgeId) -> Result<u8> {
        Ok(self.colors[edge_index(edge, self.n, self.k)?])
    }

    pub fn color_at(&self, rank: usize) -> u8 {
        self.colors[rank]
    }

    pub fn set(&mut self, edge: &[usize], color: u8) -> Result<()> {
        let e = EdgeId::new(edge.to_vec())?;
        if color as usize >= self.l {
            return Err(Error::InvalidArgument(format!("color {color} not below l={}", self.l)));
        }
        let i = edge_index(&e, self.n, self.k)?;
        self.colors[i] = color;
        Ok(())
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Vec<usize>> {
        (1..=self.n).combinations(self.k)
    }

    /// Relabels colors by `c -> l-1-c`; for two colors this swaps 0 and 1.
    pub fn swap_colors(&self) -> Coloring {
        let top = (self.l - 1) as u8;
        Coloring {
            colors: self.colors.iter().map(|&c| top - c).collect(),
            ..self.clone()
        }
    }

    fn compatible(&self, other: &Coloring) -> Result<()> {
        if self.k != other.k || self.l != other.l {
            return Err(Error::IncompatibleColorings {
                k1: self.k,
                l1: self.l,
                k2: other.k,
                l2: other.l,
            });
        }
        Ok(())
    }

    /// Parses exactly one coloring in the text format.
    pub fn parse(text: &str) -> Result<Coloring> {
        let lines = content_lines(text);
        let mut pos = 0;
        let c = parse_block(&lines, &mut pos)?;
        if pos != lines.len() {
            return parse_err(lines[pos].0, "trailing content after coloring");
        }
        Ok(c)
    }

    /// Parses a sequence of consecutive coloring blocks.
    pub fn parse_many(text: &str) -> Result<Vec<Coloring>> {
        let lines = content_lines(text);
        let mut pos = 0;
        let mut out = Vec::new();
        while pos < lines.len() {
            out.push(parse_block(&lines, &mut pos)?);
        }
        Ok(out)
    }
}

/// Parses one block starting at `lines[*pos]`, advancing `pos` past it.
pub(crate) fn parse_block(lines: &[(usize, &str)], pos: &mut usize) -> Result<Coloring> {
    let (hno, header) = lines[*pos];
    let fields = header_fields(hno, header, "coloring")?;
    let k = field_usize(hno, &fields, "k")?;
    let l = field_usize(hno, &fields, "l")?;
    let n = field_usize(hno, &fields, "n")?;
    if let Err(e) = check_params(k, l, n) {
        return parse_err(hno, e.to_string());
    }
    *pos += 1;
    let m = binomial(n, k);
    if m == 0 {
        return Coloring::new(k, l, n, Vec::new());
    }
    let Some(&(lno, first)) = lines.get(*pos) else {
        return parse_err(hno, "missing coloring body");
    };
    if let Some(bits) = first.strip_prefix("bits") {
        let bits = bits.trim();
        if l != 2 {
            return parse_err(lno, "bits form requires l=2");
        }
        if bits.len() != m {
            return parse_err(lno, format!("expected {m} bits, got {}", bits.len()));
        }
        let mut colors = Vec::with_capacity(m);
        for ch in bits.chars() {
            match ch {
                '0' => colors.push(0),
                '1' => colors.push(1),
                _ => return parse_err(lno, format!("bad bit `{ch}`")),
            }
        }
        *pos += 1;
        return Coloring::new(k, l, n, colors);
    }
    let mut colors: Vec<Option<u8>> = vec![None; m];
    for _ in 0..m {
        let Some(&(lno, line)) = lines.get(*pos) else {
            return parse_err(hno, format!("expected {m} edge lines"));
        };
        let nums: std::result::Result<Vec<usize>, _> =
            line.split_whitespace().map(str::parse::<usize>).collect();
        let Ok(nums) = nums else {
            return parse_err(lno, "edge line must be integers");
        };
        if nums.len() != k + 1 {
            return parse_err(lno, format!("edge line needs {} integers", k + 1));
        }
        let edge = EdgeId::new(nums[..k].to_vec()).and_then(|e| edge_index(&e, n, k));
        let Ok(idx) = edge else {
            return parse_err(lno, "invalid edge");
        };
        let c = nums[k];
        if c >= l {
            return parse_err(lno, format!("color {c} not below l={l}"));
        }
        if colors[idx].replace(c as u8).is_some() {
            return parse_err(lno, "duplicate edge");
        }
        *pos += 1;
    }
    Coloring::new(k, l, n, colors.into_iter().map(|c| c.unwrap()).collect())
}

impl FromStr for Coloring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Coloring::parse(s)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "coloring k={} l={} n={}", self.k, self.l, self.n)?;
        if self.colors.is_empty() {
            return Ok(());
        }
        if self.l == 2 {
            let bits: String = self.colors.iter().map(|&c| if c == 1 { '1' } else { '0' }).collect();
            writeln!(f, "bits {bits}")
        } else {
            for (e, c) in self.edges().zip(&self.colors) {
                writeln!(f, "{} {}", e.iter().join(" "), c)?;
            }
            Ok(())
        }
    }
}

/// A coloring whose edges may be left unspecified ("don't care").
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    k: usize,
    l: usize,
    n: usize,
    colors: Vec<Option<u8>>,
}

impl Pattern {
    /// A pattern with every edge unspecified.
    pub fn wildcard(k: usize, l: usize, n: usize) -> Result<Self> {
        check_params(k, l, n)?;
        Ok(Pattern {
            k,
            l,
            n,
            colors: vec![None; binomial(n, k)],
        })
    }

    pub fn from_coloring(c: &Coloring) -> Self {
        Pattern {
            k: c.k,
            l: c.l,
            n: c.n,
            colors: c.colors.iter().map(|&x| Some(x)).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, edge: &[usize]) -> Option<u8> {
        self.colors[rank_sorted(edge, self.n)]
    }

    /// Specifies (or clears) the color of an edge given in any order.
    pub fn set(&mut self, edge: &[usize], color: Option<u8>) -> Result<()> {
        let e = EdgeId::new(edge.to_vec())?;
        let i = edge_index(&e, self.n, self.k)?;
        self.colors[i] = color;
        Ok(())
    }

    /// Number of specified edges.
    pub fn specified(&self) -> usize {
        self.colors.iter().filter(|c| c.is_some()).count()
    }

    /// Colors every unspecified edge with `filler`.
    pub fn fill(&self, filler: u8) -> Result<Coloring> {
        Coloring::new(
            self.k,
            self.l,
            self.n,
            self.colors.iter().map(|c| c.unwrap_or(filler)).collect(),
        )
    }

    /// Whether `c` agrees with every specified edge.
    pub fn matches(&self, c: &Coloring) -> bool {
        c.k == self.k
            && c.n == self.n
            && self
                .colors
                .iter()
                .zip(&c.colors)
                .all(|(p, &x)| p.is_none_or(|p| p == x))
    }
}

/// The induced subcoloring on `subset`, relabeled increasingly onto [|subset|].
pub fn restrict_normalize(c: &Coloring, subset: &[usize]) -> Result<Coloring> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.is_empty() {
        return Err(Error::InvalidArgument("empty subset".into()));
    }
    if s[0] == 0 || *s.last().unwrap() > c.n {
        return Err(Error::InvalidArgument(format!(
            "subset {s:?} is not inside [{}]",
            c.n
        )));
    }
    let mut img = vec![0usize; c.k];
    let m = s.len();
    Coloring::from_fn(c.k, c.l, m, |e| {
        for (slot, &v) in img.iter_mut().zip(e) {
            *slot = s[v - 1];
        }
        c.color(&img)
    })
}

/// The reversal, with edge {x} recolored by the edge {n - x + 1}.
pub fn reverse(c: &Coloring) -> Coloring {
    let n = c.n;
    let mut img = vec![0usize; c.k];
    Coloring::from_fn(c.k, c.l, n, |e| {
        for (slot, &v) in img.iter_mut().rev().zip(e) {
            *slot = n + 1 - v;
        }
        c.color(&img)
    })
    .expect("reversal keeps parameters valid")
}

/// Constraints of the small side, grouped by the largest vertex of each edge.
type Constraints = Vec<Vec<(Vec<usize>, u8)>>;

fn constraints_of(k: usize, m: usize, color: impl Fn(&[usize]) -> Option<u8>) -> Constraints {
    let mut by_top: Constraints = vec![Vec::new(); m];
    if m >= k {
        for e in (1..=m).combinations(k) {
            if let Some(c) = color(&e) {
                by_top[e[k - 1] - 1].push((e, c));
            }
        }
    }
    by_top
}

fn embed_rec(j: usize, start: usize, f: &mut [usize], cons: &Constraints, big: &Coloring) -> bool {
    let m = f.len();
    if j > m {
        return true;
    }
    let last = big.n + j - m;
    let n = big.n;
    let k = big.k;
    let t = binom_table();
    let total = (t[n][k] as usize).wrapping_sub(1);
    for v in start..=last {
        f[j - 1] = v;
        let ok = cons[j - 1].iter().all(|(e, c)| {
            let mut acc = 0usize;
            for (i, &x) in e.iter().enumerate() {
                acc += t[n - f[x - 1]][k - i] as usize;
            }
            big.colors[total - acc] == *c
        });
        if ok && embed_rec(j + 1, v + 1, f, cons, big) {
            return true;
        }
    }
    false
}

/// Bitsets over host vertices: for a < b and color c, the vertices w > b
/// with color({a, b, w}) = c.
struct PairMasks {
    n: usize,
    l: usize,
    w: usize,
    data: Vec<u64>,
}

impl PairMasks {
    fn new(big: &Coloring) -> Self {
        let (n, l) = (big.n, big.l);
        let w = n / 64 + 1;
        let mut data = vec![0u64; (n + 1) * (n + 1) * l * w];
        for (rank, e) in big.edges().enumerate() {
            let at = ((e[0] * (n + 1) + e[1]) * l + big.colors[rank] as usize) * w;
            data[at + e[2] / 64] |= 1 << (e[2] % 64);
        }
        PairMasks { n, l, w, data }
    }

    fn get(&self, a: usize, b: usize, c: u8) -> &[u64] {
        let at = ((a * (self.n + 1) + b) * self.l + c as usize) * self.w;
        &self.data[at..at + self.w]
    }
}

/// Triple-system search with forward checking: placing the middle vertex
/// of a constrained triple narrows the candidates of its top vertex.
struct Forward<'a> {
    /// Constraints grouped by middle vertex.
    by_mid: Vec<Vec<(usize, usize, u8)>>,
    masks: PairMasks,
    big: &'a Coloring,
    m: usize,
}

impl Forward<'_> {
    fn rec(&self, j: usize, start: usize, f: &mut [usize], doms: &mut [u64]) -> bool {
        let (m, w, n) = (self.m, self.masks.w, self.big.n);
        if j > m {
            return true;
        }
        // `doms` starts with this level's table; deeper levels follow.
        let (cur, rest) = doms.split_at_mut(m * w);
        let table = m * w;
        for v in start..=n + j - m {
            if cur[(j - 1) * w + v / 64] >> (v % 64) & 1 == 0 {
                continue;
            }
            f[j - 1] = v;
            let mut alive = true;
            if j < m {
                let next = &mut rest[..table];
                next.copy_from_slice(cur);
                for &(x, z, c) in &self.by_mid[j - 1] {
                    let mask = self.masks.get(f[x - 1], v, c);
                    let d = &mut next[(z - 1) * w..z * w];
                    let mut any = 0;
                    for (a, b) in d.iter_mut().zip(mask) {
                        *a &= b;
                        any |= *a;
                    }
                    if any == 0 {
                        alive = false;
                        break;
                    }
                }
            }
            if alive && self.rec(j + 1, v + 1, f, rest) {
                return true;
            }
        }
        false
    }
}

fn search(m: usize, cons: &Constraints, big: &Coloring) -> Option<Injection> {
    if m > big.n {
        return None;
    }
    // The mask table grows like n^2 * l; use it where that stays small.
    if big.k == 3 && big.l <= 4 && m > 3 {
        let mut by_mid = vec![Vec::new(); m];
        for (e, c) in cons.iter().flatten() {
            by_mid[e[1] - 1].push((e[0], e[2], *c));
        }
        let masks = PairMasks::new(big);
        let w = masks.w;
        let mut doms = vec![0u64; (m + 1) * m * w];
        for u in 0..m {
            for v in 1..=big.n {
                doms[u * w + v / 64] |= 1 << (v % 64);
            }
        }
        let fw = Forward { by_mid, masks, big, m };
        let mut f = vec![0usize; m];
        return fw.rec(1, 1, &mut f, &mut doms).then_some(Injection(f));
    }
    let mut f = vec![0usize; m];
    embed_rec(1, 1, &mut f, cons, big).then_some(Injection(f))
}

/// Searches for an increasing injection embedding `small` into `big`.
///
/// Returns the lexicographically first witness, or `None` when there is none.
pub fn contains(small: &Coloring, big: &Coloring) -> Result<Option<Injection>> {
    small.compatible(big)?;
    let cons = constraints_of(small.k, small.n, |e| Some(small.color(e)));
    Ok(search(small.n, &cons, big))
}

/// Like [`contains`], but unspecified pattern edges match any color.
pub fn contains_pattern(small: &Pattern, big: &Coloring) -> Result<Option<Injection>> {
    if small.k != big.k || small.l != big.l {
        return Err(Error::IncompatibleColorings {
            k1: small.k,
            l1: small.l,
            k2: big.k,
            l2: big.l,
        });
    }
    let cons = constraints_of(small.k, small.n, |e| small.get(e));
    Ok(search(small.n, &cons, big))
}

/// Outcome of a homogeneity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(u8),
    /// Fewer than k vertices, so no edges to compare.
    Indeterminate,
    NotHomogeneous(EdgeId, EdgeId),
}

impl Homogeneity {
    pub fn is_homogeneous(&self) -> bool {
        !matches!(self, Homogeneity::NotHomogeneous(..))
    }
}

/// Whether all k-subsets of `a` share one color.
pub fn homogeneity(c: &Coloring, a: &[usize]) -> Result<Homogeneity> {
    let mut s = a.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.first() == Some(&0) || s.last().is_some_and(|&v| v > c.n) {
        return Err(Error::InvalidArgument(format!("set {s:?} is not inside [{}]", c.n)));
    }
    if s.len() < c.k {
        return Ok(Homogeneity::Indeterminate);
    }
    let mut first: Option<(Vec<usize>, u8)> = None;
    for e in s.iter().copied().combinations(c.k) {
        let col = c.color(&e);
        match &first {
            None => first = Some((e, col)),
            Some((e0, c0)) if *c0 != col => {
                return Ok(Homogeneity::NotHomogeneous(EdgeId(e0.clone()), EdgeId(e)));
            }
            _ => {}
        }
    }
    Ok(Homogeneity::Homogeneous(first.unwrap().1))
}
