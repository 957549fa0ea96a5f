//! Two- and three-dimensional matrices over {0, 1, *}: alternation metrics,
//! pattern search, layer and cross slices, fullness.

use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::text::{content_lines, field_usize, header_fields};

/// A matrix entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Zero,
    One,
    Star,
}

impl Entry {
    pub fn from_bit(b: bool) -> Entry {
        if b {
            Entry::One
        } else {
            Entry::Zero
        }
    }

    pub fn from_color(c: u8) -> Entry {
        Entry::from_bit(c != 0)
    }

    pub fn to_char(self) -> char {
        match self {
            Entry::Zero => '0',
            Entry::One => '1',
            Entry::Star => '*',
        }
    }

    pub fn from_char(ch: char) -> Option<Entry> {
        match ch {
            '0' => Some(Entry::Zero),
            '1' => Some(Entry::One),
            '*' => Some(Entry::Star),
            _ => None,
        }
    }

    /// Swaps 0 and 1; a star stays a star.
    pub fn swapped(self) -> Entry {
        match self {
            Entry::Zero => Entry::One,
            Entry::One => Entry::Zero,
            Entry::Star => Entry::Star,
        }
    }
}

#[inline]
fn alternates(a: Entry, b: Entry) -> bool {
    matches!((a, b), (Entry::Zero, Entry::One) | (Entry::One, Entry::Zero))
}

/// 1-based indices i such that {line[i], line[i+1]} = {0, 1}.
pub fn alternation_indices(line: &[Entry]) -> Vec<usize> {
    line.windows(2)
        .enumerate()
        .filter(|(_, w)| alternates(w[0], w[1]))
        .map(|(i, _)| i + 1)
        .collect()
}

/// Parses a line of `0`, `1`, `*` characters.
pub fn parse_line(s: &str) -> Result<Vec<Entry>> {
    s.chars()
        .map(|ch| {
            Entry::from_char(ch).ok_or_else(|| Error::InvalidArgument(format!("bad entry `{ch}`")))
        })
        .collect()
}

/// An r x s matrix over {0, 1, *}, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StarMatrix2 {
    rows: usize,
    cols: usize,
    data: Vec<Entry>,
}

impl StarMatrix2 {
    pub fn new(rows: usize, cols: usize, data: Vec<Entry>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument("matrix dimensions must be positive".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(StarMatrix2 { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Entry) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        StarMatrix2::new(rows, cols, data)
    }

    pub fn filled(rows: usize, cols: usize, e: Entry) -> Result<Self> {
        StarMatrix2::new(rows, cols, vec![e; rows * cols])
    }

    /// Builds a matrix from row strings such as `"01*"`.
    pub fn from_rows(rows: &[&str]) -> Result<Self> {
        let parsed: Vec<Vec<Entry>> = rows.iter().map(|r| parse_line(r)).collect::<Result<_>>()?;
        let cols = parsed.first().map_or(0, Vec::len);
        if parsed.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        StarMatrix2::new(parsed.len(), cols, parsed.concat())
    }

    /// The identity matrix I_r.
    pub fn identity(r: usize) -> Result<Self> {
        StarMatrix2::from_fn(r, r, |i, j| Entry::from_bit(i == j))
    }

    /// The upper triangular matrix U_r (ones on and above the diagonal).
    pub fn upper(r: usize) -> Result<Self> {
        StarMatrix2::from_fn(r, r, |i, j| Entry::from_bit(i <= j))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Entry {
        self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, e: Entry) {
        self.data[(i - 1) * self.cols + (j - 1)] = e;
    }

    pub fn row(&self, i: usize) -> Vec<Entry> {
        (1..=self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Entry> {
        (1..=self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_binary(&self) -> bool {
        !self.data.contains(&Entry::Star)
    }

    pub fn transpose(&self) -> StarMatrix2 {
        StarMatrix2::from_fn(self.cols, self.rows, |i, j| self.get(j, i)).unwrap()
    }

    /// Reverses the order of the rows (upside down).
    pub fn flip_vertical(&self) -> StarMatrix2 {
        StarMatrix2::from_fn(self.rows, self.cols, |i, j| self.get(self.rows + 1 - i, j)).unwrap()
    }

    /// Reverses the order of the columns (left to right).
    pub fn flip_horizontal(&self) -> StarMatrix2 {
        StarMatrix2::from_fn(self.rows, self.cols, |i, j| self.get(i, self.cols + 1 - j)).unwrap()
    }

    pub fn swap_colors(&self) -> StarMatrix2 {
        StarMatrix2 {
            data: self.data.iter().map(|e| e.swapped()).collect(),
            ..self.clone()
        }
    }

    /// The submatrix on the given (increasing, 1-based) rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<StarMatrix2> {
        check_selection(rows, self.rows)?;
        check_selection(cols, self.cols)?;
        StarMatrix2::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i - 1], cols[j - 1]))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let lines = content_lines(text);
        let Some(&(hno, header)) = lines.first() else {
            return parse_err(1, "empty input");
        };
        let fields = header_fields(hno, header, "matrix2")?;
        let r = field_usize(hno, &fields, "r")?;
        let s = field_usize(hno, &fields, "s")?;
        if lines.len() != r + 1 {
            return parse_err(hno, format!("expected {r} rows"));
        }
        let mut data = Vec::with_capacity(r * s);
        for &(lno, line) in &lines[1..] {
            let row = parse_line(line).or_else(|e| parse_err(lno, e.to_string()))?;
            if row.len() != s {
                return parse_err(lno, format!("expected {s} entries"));
            }
            data.extend(row);
        }
        StarMatrix2::new(r, s, data).or_else(|e| parse_err(hno, e.to_string()))
    }
}

fn check_selection(sel: &[usize], max: usize) -> Result<()> {
    if sel.is_empty() {
        return Err(Error::InvalidArgument("empty selection".into()));
    }
    if sel.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("selection must be increasing".into()));
    }
    if let Some(&bad) = sel.iter().find(|&&x| x == 0 || x > max) {
        return Err(Error::IndexOutOfRange { index: bad, max });
    }
    Ok(())
}

impl fmt::Display for StarMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matrix2 r={} s={}", self.rows, self.cols)?;
        for i in 1..=self.rows {
            let line: String = self.row(i).into_iter().map(Entry::to_char).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl FromStr for StarMatrix2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StarMatrix2::parse(s)
    }
}

/// An r x s x t matrix over {0, 1, *}, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StarMatrix3 {
    r: usize,
    s: usize,
    t: usize,
    data: Vec<Entry>,
}

impl StarMatrix3 {
    pub fn new(r: usize, s: usize, t: usize, data: Vec<Entry>) -> Result<Self> {
        if r == 0 || s == 0 || t == 0 {
            return Err(Error::InvalidArgument("matrix dimensions must be positive".into()));
        }
        if data.len() != r * s * t {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {r}x{s}x{t} matrix",
                data.len()
            )));
        }
        Ok(StarMatrix3 { r, s, t, data })
    }

    pub fn from_fn(
        r: usize,
        s: usize,
        t: usize,
        mut f: impl FnMut(usize, usize, usize) -> Entry,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(r * s * t);
        for i in 1..=r {
            for j in 1..=s {
                for k in 1..=t {
                    data.push(f(i, j, k));
                }
            }
        }
        StarMatrix3::new(r, s, t, data)
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.r, self.s, self.t)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> Entry {
        self.data[((i - 1) * self.s + (j - 1)) * self.t + (k - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, e: Entry) {
        self.data[((i - 1) * self.s + (j - 1)) * self.t + (k - 1)] = e;
    }

    pub fn is_binary(&self) -> bool {
        !self.data.contains(&Entry::Star)
    }

    pub fn submatrix(&self, xs: &[usize], ys: &[usize], zs: &[usize]) -> Result<StarMatrix3> {
        check_selection(xs, self.r)?;
        check_selection(ys, self.s)?;
        check_selection(zs, self.t)?;
        StarMatrix3::from_fn(xs.len(), ys.len(), zs.len(), |i, j, k| {
            self.get(xs[i - 1], ys[j - 1], zs[k - 1])
        })
    }

    /// Row line r(J,K): first coordinate varies.
    pub fn row_line(&self, j: usize, k: usize) -> Vec<Entry> {
        (1..=self.r).map(|i| self.get(i, j, k)).collect()
    }

    /// Column line c(I,K): second coordinate varies.
    pub fn col_line(&self, i: usize, k: usize) -> Vec<Entry> {
        (1..=self.s).map(|j| self.get(i, j, k)).collect()
    }

    /// Shaft line s(I,J): third coordinate varies.
    pub fn shaft_line(&self, i: usize, j: usize) -> Vec<Entry> {
        (1..=self.t).map(|k| self.get(i, j, k)).collect()
    }

    /// Every line of the matrix: rows, then columns, then shafts.
    pub fn lines(&self) -> Vec<Vec<Entry>> {
        let mut out = Vec::with_capacity(self.s * self.t + self.r * self.t + self.r * self.s);
        for j in 1..=self.s {
            for k in 1..=self.t {
                out.push(self.row_line(j, k));
            }
        }
        for i in 1..=self.r {
            for k in 1..=self.t {
                out.push(self.col_line(i, k));
            }
        }
        for i in 1..=self.r {
            for j in 1..=self.s {
                out.push(self.shaft_line(i, j));
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let lines = content_lines(text);
        let Some(&(hno, header)) = lines.first() else {
            return parse_err(1, "empty input");
        };
        let fields = header_fields(hno, header, "matrix3")?;
        let r = field_usize(hno, &fields, "r")?;
        let s = field_usize(hno, &fields, "s")?;
        let t = field_usize(hno, &fields, "t")?;
        if lines.len() != r * t + 1 {
            return parse_err(hno, format!("expected {t} blocks of {r} rows"));
        }
        let mut m = StarMatrix3::new(r, s, t, vec![Entry::Zero; r * s * t])
            .or_else(|e| parse_err(hno, e.to_string()))?;
        for (idx, &(lno, line)) in lines[1..].iter().enumerate() {
            let (k, i) = (idx / r + 1, idx % r + 1);
            let row = parse_line(line).or_else(|e| parse_err(lno, e.to_string()))?;
            if row.len() != s {
                return parse_err(lno, format!("expected {s} entries"));
            }
            for (j, e) in row.into_iter().enumerate() {
                m.set(i, j + 1, k, e);
            }
        }
        Ok(m)
    }
}

impl fmt::Display for StarMatrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matrix3 r={} s={} t={}", self.r, self.s, self.t)?;
        for k in 1..=self.t {
            if k > 1 {
                writeln!(f)?;
            }
            for i in 1..=self.r {
                let line: String = (1..=self.s).map(|j| self.get(i, j, k).to_char()).collect();
                writeln!(f, "{line}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for StarMatrix3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StarMatrix3::parse(s)
    }
}

/// al, R and C of a 2D matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metrics2 {
    pub al: usize,
    pub r: Vec<usize>,
    pub c: Vec<usize>,
}

/// al, R, C and S of a 3D matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metrics3 {
    pub al: usize,
    pub r: Vec<usize>,
    pub c: Vec<usize>,
    pub s: Vec<usize>,
}

fn union_into(acc: &mut [bool], idx: &[usize]) {
    for &i in idx {
        acc[i] = true;
    }
}

fn collect_set(flags: &[bool]) -> Vec<usize> {
    flags.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

/// R(N) collects alternation positions along rows (column indices), C(N)
/// along columns (row indices).
pub fn metrics2(n: &StarMatrix2) -> Metrics2 {
    let mut max = 0;
    let mut r = vec![false; n.cols + 1];
    let mut c = vec![false; n.rows + 1];
    for i in 1..=n.rows {
        let idx = alternation_indices(&n.row(i));
        max = max.max(idx.len());
        union_into(&mut r, &idx);
    }
    for j in 1..=n.cols {
        let idx = alternation_indices(&n.col(j));
        max = max.max(idx.len());
        union_into(&mut c, &idx);
    }
    Metrics2 {
        al: max + 1,
        r: collect_set(&r),
        c: collect_set(&c),
    }
}

/// R(M), C(M), S(M) are unions over rows, columns and shafts respectively.
pub fn metrics3(m: &StarMatrix3) -> Metrics3 {
    let mut max = 0;
    let mut r = vec![false; m.r + 1];
    let mut c = vec![false; m.s + 1];
    let mut s = vec![false; m.t + 1];
    for j in 1..=m.s {
        for k in 1..=m.t {
            let idx = alternation_indices(&m.row_line(j, k));
            max = max.max(idx.len());
            union_into(&mut r, &idx);
        }
    }
    for i in 1..=m.r {
        for k in 1..=m.t {
            let idx = alternation_indices(&m.col_line(i, k));
            max = max.max(idx.len());
            union_into(&mut c, &idx);
        }
    }
    for i in 1..=m.r {
        for j in 1..=m.s {
            let idx = alternation_indices(&m.shaft_line(i, j));
            max = max.max(idx.len());
            union_into(&mut s, &idx);
        }
    }
    Metrics3 {
        al: max + 1,
        r: collect_set(&r),
        c: collect_set(&c),
        s: collect_set(&s),
    }
}

/// What [`find_pattern2`] searches for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternSpec {
    Explicit(StarMatrix2),
    IdentityStrong(usize),
    UpperStrong(usize),
    IdentitySimilar(usize),
    UpperSimilar(usize),
}

/// A located pattern: increasing row and column selections plus the name of
/// the matched variant (`explicit` for explicit patterns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMatch {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub variant: String,
}

fn with_swaps(base: Vec<(&str, StarMatrix2)>) -> Vec<(String, StarMatrix2)> {
    let mut out: Vec<(String, StarMatrix2)> = Vec::new();
    for (name, m) in base {
        let swapped = m.swap_colors();
        let swap_name = if name == "plain" {
            "swap".to_string()
        } else {
            format!("{name}+swap")
        };
        for (nm, mm) in [(name.to_string(), m), (swap_name, swapped)] {
            if !out.iter().any(|(_, x)| *x == mm) {
                out.push((nm, mm));
            }
        }
    }
    out
}

/// The explicit variant set of a pattern class, in search order. Identical
/// matrices are listed once.
pub fn variant_set(spec: &PatternSpec) -> Result<Vec<(String, StarMatrix2)>> {
    let rot = |m: &StarMatrix2| m.flip_vertical().flip_horizontal();
    Ok(match spec {
        PatternSpec::Explicit(m) => vec![("explicit".to_string(), m.clone())],
        PatternSpec::IdentityStrong(r) | PatternSpec::IdentitySimilar(r) => {
            let i = StarMatrix2::identity(*r)?;
            with_swaps(vec![("plain", i.clone()), ("vflip", i.flip_vertical())])
        }
        PatternSpec::UpperStrong(r) => {
            let u = StarMatrix2::upper(*r)?;
            with_swaps(vec![("plain", u.clone()), ("vflip", u.flip_vertical())])
        }
        PatternSpec::UpperSimilar(r) => {
            let u = StarMatrix2::upper(*r)?;
            with_swaps(vec![
                ("plain", u.clone()),
                ("vflip", u.flip_vertical()),
                ("hflip", u.flip_horizontal()),
                ("vhflip", rot(&u)),
            ])
        }
    })
}

/// Greedy leftmost column matching for a fixed row selection prefix.
fn greedy_cols(hay: &StarMatrix2, pat: &StarMatrix2, rows: &[usize]) -> Option<Vec<usize>> {
    let mut cols = Vec::with_capacity(pat.cols);
    let mut b = 1;
    for j in 1..=hay.cols {
        if b > pat.cols {
            break;
        }
        if hay.cols - j < pat.cols - b {
            return None;
        }
        if rows.iter().enumerate().all(|(a, &i)| hay.get(i, j) == pat.get(a + 1, b)) {
            cols.push(j);
            b += 1;
        }
    }
    (b > pat.cols).then_some(cols)
}

fn rows_rec(
    hay: &StarMatrix2,
    pat: &StarMatrix2,
    rows: &mut Vec<usize>,
    start: usize,
) -> Option<Vec<usize>> {
    if rows.len() == pat.rows {
        return greedy_cols(hay, pat, rows);
    }
    let remaining = pat.rows - rows.len();
    for i in start..=hay.rows + 1 - remaining {
        rows.push(i);
        if greedy_cols(hay, pat, rows).is_some() {
            if let Some(c) = rows_rec(hay, pat, rows, i + 1) {
                return Some(c);
            }
        }
        rows.pop();
    }
    None
}

/// Lexicographically first (rows, then columns) occurrence of `pat` in `hay`.
pub fn find_submatrix(hay: &StarMatrix2, pat: &StarMatrix2) -> Option<(Vec<usize>, Vec<usize>)> {
    if pat.rows > hay.rows || pat.cols > hay.cols {
        return None;
    }
    let mut rows = Vec::with_capacity(pat.rows);
    let cols = rows_rec(hay, pat, &mut rows, 1)?;
    Some((rows, cols))
}

/// Searches `hay` for the pattern or for any member of the pattern class,
/// trying variants in the order of [`variant_set`].
pub fn find_pattern2(hay: &StarMatrix2, pattern: &PatternSpec) -> Result<Option<PatternMatch>> {
    for (name, pat) in variant_set(pattern)? {
        if let Some((rows, cols)) = find_submatrix(hay, &pat) {
            return Ok(Some(PatternMatch {
                rows,
                cols,
                variant: name,
            }));
        }
    }
    Ok(None)
}

/// The `axis`-layer matrix at `index`:
/// axis 1 gives N(a,b) = M(z,b,a), axis 2 gives N(a,b) = M(b,z,a),
/// axis 3 gives N(a,b) = M(b,a,z).
pub fn layer(m: &StarMatrix3, axis: usize, index: usize) -> Result<StarMatrix2> {
    let (r, s, t) = m.dims();
    let z = index;
    match axis {
        1 if (1..=r).contains(&z) => StarMatrix2::from_fn(t, s, |a, b| m.get(z, b, a)),
        2 if (1..=s).contains(&z) => StarMatrix2::from_fn(t, r, |a, b| m.get(b, z, a)),
        3 if (1..=t).contains(&z) => StarMatrix2::from_fn(s, r, |a, b| m.get(b, a, z)),
        1 => Err(Error::IndexOutOfRange { index: z, max: r }),
        2 => Err(Error::IndexOutOfRange { index: z, max: s }),
        3 => Err(Error::IndexOutOfRange { index: z, max: t }),
        _ => Err(Error::InvalidArgument(format!("axis {axis} not in 1..=3"))),
    }
}

/// The pair of coordinates equated by a cross-matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossPair {
    P12,
    P13,
    P23,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossMode {
    Diag,
    Antidiag,
}

/// The d-cross (diagonal) or ad-cross (antidiagonal) matrix of `m`.
pub fn cross(m: &StarMatrix3, pair: CrossPair, mode: CrossMode) -> Result<StarMatrix2> {
    let (r, s, t) = m.dims();
    let need = |a: usize, b: usize, what: &str| {
        if a == b {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!("{what}: {a} != {b}")))
        }
    };
    use CrossMode::*;
    use CrossPair::*;
    match (pair, mode) {
        (P12, Diag) => {
            need(r, s, "r = s")?;
            StarMatrix2::from_fn(t, r, |a, b| m.get(b, b, a))
        }
        (P12, Antidiag) => {
            need(r, s, "r = s")?;
            StarMatrix2::from_fn(t, r, |a, b| m.get(b, s - b + 1, a))
        }
        (P13, Diag) => {
            need(r, t, "r = t")?;
            StarMatrix2::from_fn(s, r, |a, b| m.get(b, a, b))
        }
        (P13, Antidiag) => {
            need(r, t, "r = t")?;
            StarMatrix2::from_fn(s, r, |a, b| m.get(b, a, t - b + 1))
        }
        (P23, Diag) => {
            need(s, t, "s = t")?;
            StarMatrix2::from_fn(s, r, |a, b| m.get(b, a, a))
        }
        (P23, Antidiag) => {
            need(s, t, "s = t")?;
            StarMatrix2::from_fn(s, r, |a, b| m.get(b, a, t - a + 1))
        }
    }
}

/// R-fullness and C-fullness with their distinct-representative systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fullness {
    pub r_full: bool,
    pub c_full: bool,
    /// For each row i, a column index s_i (distinct across rows).
    pub row_assignment: Option<Vec<usize>>,
    /// For each column j, a row index r_j (distinct across columns).
    pub col_assignment: Option<Vec<usize>>,
}

fn try_augment(
    u: usize,
    adj: &[Vec<usize>],
    seen: &mut [bool],
    owner: &mut [Option<usize>],
) -> bool {
    for &v in &adj[u] {
        if !seen[v] {
            seen[v] = true;
            if owner[v].is_none_or(|w| try_augment(w, adj, seen, owner)) {
                owner[v] = Some(u);
                return true;
            }
        }
    }
    false
}

/// Maximum bipartite matching; returns a perfect assignment of the left side.
fn sdr(adj: &[Vec<usize>], right: usize) -> Option<Vec<usize>> {
    let mut owner: Vec<Option<usize>> = vec![None; right + 1];
    for u in 0..adj.len() {
        let mut seen = vec![false; right + 1];
        if !try_augment(u, adj, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut out = vec![0; adj.len()];
    for (v, o) in owner.iter().enumerate() {
        if let Some(u) = o {
            out[*u] = v;
        }
    }
    Some(out)
}

pub fn fullness(n: &StarMatrix2) -> Fullness {
    let row_adj: Vec<Vec<usize>> = (1..=n.rows).map(|i| alternation_indices(&n.row(i))).collect();
    let col_adj: Vec<Vec<usize>> = (1..=n.cols).map(|j| alternation_indices(&n.col(j))).collect();
    let row_assignment = sdr(&row_adj, n.cols);
    let col_assignment = sdr(&col_adj, n.rows);
    Fullness {
        r_full: row_assignment.is_some(),
        c_full: col_assignment.is_some(),
        row_assignment,
        col_assignment,
    }
}

/// One plus the maximum number of alternations along a (2,3)-diagonal
/// L(x, y, y).
pub fn al_23d(m: &StarMatrix3) -> Result<usize> {
    let (r, s, t) = m.dims();
    if s != t {
        return Err(Error::DimensionMismatch(format!("s = t: {s} != {t}")));
    }
    let best = (1..=r)
        .map(|x| {
            let diag: Vec<Entry> = (1..=s).map(|y| m.get(x, y, y)).collect();
            alternation_indices(&diag).len()
        })
        .max()
        .unwrap_or(0);
    Ok(best + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcg::Lcg64;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn m2(rows: &[&str]) -> StarMatrix2 {
        StarMatrix2::from_rows(rows).unwrap()
    }

    fn random2(g: &mut Lcg64, max: usize) -> StarMatrix2 {
        let (r, s) = (g.range(1, max), g.range(1, max));
        StarMatrix2::from_fn(r, s, |_, _| Entry::from_bit(g.bit())).unwrap()
    }

    fn random3(g: &mut Lcg64, max: usize) -> StarMatrix3 {
        let (r, s, t) = (g.range(1, max), g.range(1, max), g.range(1, max));
        StarMatrix3::from_fn(r, s, t, |_, _, _| Entry::from_bit(g.bit())).unwrap()
    }

    #[test]
    fn metrics2_examples() {
        let z = StarMatrix2::filled(4, 4, Entry::Zero).unwrap();
        assert_eq!(metrics2(&z), Metrics2 { al: 1, r: vec![], c: vec![] });
        let i3 = StarMatrix2::identity(3).unwrap();
        assert_eq!(metrics2(&i3), Metrics2 { al: 3, r: vec![1, 2], c: vec![1, 2] });
        let st = m2(&["0*1"]);
        assert_eq!(metrics2(&st), Metrics2 { al: 1, r: vec![], c: vec![] });
    }

    #[test]
    fn worked_row_contribution() {
        let row = parse_line("00011**11*010").unwrap();
        assert_eq!(alternation_indices(&row), vec![3, 11, 12]);
        let mut m = StarMatrix3::from_fn(13, 1, 1, |i, _, _| row[i - 1]).unwrap();
        assert_eq!(metrics3(&m).r, vec![3, 11, 12]);
        m.set(4, 1, 1, Entry::Star);
        assert_eq!(metrics3(&m).r, vec![11, 12]);
    }

    #[test]
    fn metrics3_examples() {
        let stars = StarMatrix3::from_fn(3, 2, 4, |_, _, _| Entry::Star).unwrap();
        let ms = metrics3(&stars);
        assert_eq!((ms.al, ms.r.len(), ms.c.len(), ms.s.len()), (1, 0, 0, 0));
        let m = StarMatrix3::from_fn(2, 2, 2, |i, j, k| Entry::from_bit((i, j, k) != (1, 1, 1))).unwrap();
        assert_eq!(
            metrics3(&m),
            Metrics3 { al: 2, r: vec![1], c: vec![1], s: vec![1] }
        );
    }

    #[test]
    fn find_pattern_examples() {
        let i4 = StarMatrix2::identity(4).unwrap();
        let hit = find_pattern2(&i4, &PatternSpec::IdentityStrong(2)).unwrap().unwrap();
        assert_eq!(hit, PatternMatch { rows: vec![1, 2], cols: vec![1, 2], variant: "plain".into() });
        let z = StarMatrix2::filled(5, 5, Entry::Zero).unwrap();
        assert_eq!(find_pattern2(&z, &PatternSpec::UpperStrong(2)).unwrap(), None);
        let anti = StarMatrix2::identity(3).unwrap().flip_horizontal();
        let hit = find_pattern2(&anti, &PatternSpec::IdentityStrong(3)).unwrap().unwrap();
        assert_eq!(hit.variant, "vflip");
    }

    #[test]
    fn variant_set_sizes() {
        // For r = 2 the anti-identity coincides with the swapped identity.
        assert_eq!(variant_set(&PatternSpec::IdentityStrong(2)).unwrap().len(), 2);
        assert_eq!(variant_set(&PatternSpec::UpperSimilar(2)).unwrap().len(), 8);
        for r in 3..6 {
            assert_eq!(variant_set(&PatternSpec::IdentityStrong(r)).unwrap().len(), 4);
            assert_eq!(variant_set(&PatternSpec::IdentitySimilar(r)).unwrap().len(), 4);
            assert_eq!(variant_set(&PatternSpec::UpperStrong(r)).unwrap().len(), 4);
            assert_eq!(variant_set(&PatternSpec::UpperSimilar(r)).unwrap().len(), 8);
        }
    }

    #[test]
    fn find_submatrix_agrees_with_brute_force() {
        let mut g = Lcg64::new(11);
        for _ in 0..300 {
            let hay = random2(&mut g, 6);
            let pat = random2(&mut g, 3);
            let brute = (1..=hay.rows()).combinations(pat.rows()).find_map(|rs| {
                (1..=hay.cols())
                    .combinations(pat.cols())
                    .find(|cs| hay.submatrix(&rs, cs).unwrap() == pat)
                    .map(|cs| (rs.clone(), cs))
            });
            assert_eq!(find_submatrix(&hay, &pat), brute);
        }
    }

    #[test]
    fn layer_examples() {
        let m = StarMatrix3::from_fn(2, 3, 4, |i, j, k| Entry::from_bit((i + 2 * j + k) % 3 == 0)).unwrap();
        for z in 1..=4 {
            let n = layer(&m, 3, z).unwrap();
            assert_eq!((n.rows(), n.cols()), (3, 2));
            for a in 1..=3 {
                for b in 1..=2 {
                    assert_eq!(n.get(a, b), m.get(b, a, z));
                }
            }
        }
        let one = StarMatrix3::from_fn(1, 1, 1, |_, _, _| Entry::One).unwrap();
        for axis in 1..=3 {
            assert_eq!(layer(&one, axis, 1).unwrap(), m2(&["1"]));
        }
        assert!(layer(&m, 1, 3).is_err());
        assert!(layer(&m, 4, 1).is_err());
    }

    #[test]
    fn cross_examples() {
        let m = StarMatrix3::from_fn(2, 2, 2, |i, j, k| Entry::from_bit((i, j, k) == (1, 2, 1))).unwrap();
        let n = cross(&m, CrossPair::P23, CrossMode::Antidiag).unwrap();
        assert_eq!(n, m2(&["00", "10"]));
        let d = cross(&m, CrossPair::P23, CrossMode::Diag).unwrap();
        for a in 1..=2 {
            for b in 1..=2 {
                assert_eq!(d.get(a, b), m.get(b, a, a));
            }
        }
        let one = StarMatrix3::from_fn(1, 1, 1, |_, _, _| Entry::Zero).unwrap();
        for p in [CrossPair::P12, CrossPair::P13, CrossPair::P23] {
            assert_eq!(cross(&one, p, CrossMode::Diag).unwrap(), m2(&["0"]));
        }
        let bad = StarMatrix3::from_fn(1, 2, 3, |_, _, _| Entry::Zero).unwrap();
        assert!(matches!(
            cross(&bad, CrossPair::P23, CrossMode::Diag),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn fullness_examples() {
        let z = StarMatrix2::filled(3, 3, Entry::Zero).unwrap();
        let f = fullness(&z);
        assert!(!f.r_full && !f.c_full);
        let f = fullness(&m2(&["100", "010"]));
        assert!(f.r_full);
        assert_eq!(f.row_assignment, Some(vec![1, 2]));
        let f = fullness(&StarMatrix2::identity(3).unwrap());
        assert!(!f.r_full);
    }

    fn brute_full(adj: &[Vec<usize>]) -> bool {
        fn rec(i: usize, adj: &[Vec<usize>], used: &mut Vec<usize>) -> bool {
            if i == adj.len() {
                return true;
            }
            for &v in &adj[i] {
                if !used.contains(&v) {
                    used.push(v);
                    if rec(i + 1, adj, used) {
                        return true;
                    }
                    used.pop();
                }
            }
            false
        }
        rec(0, adj, &mut Vec::new())
    }

    #[test]
    fn fullness_matches_brute_force() {
        let mut g = Lcg64::new(5);
        for _ in 0..500 {
            let n = random2(&mut g, 6);
            let f = fullness(&n);
            let rows: Vec<Vec<usize>> = (1..=n.rows()).map(|i| alternation_indices(&n.row(i))).collect();
            let cols: Vec<Vec<usize>> = (1..=n.cols()).map(|j| alternation_indices(&n.col(j))).collect();
            assert_eq!(f.r_full, brute_full(&rows));
            assert_eq!(f.c_full, brute_full(&cols));
            if let Some(a) = f.row_assignment {
                assert!(a.iter().all_unique());
                for (i, &s) in a.iter().enumerate() {
                    assert!(rows[i].contains(&s));
                }
            }
        }
    }

    #[test]
    fn al_23d_examples() {
        let z = StarMatrix3::from_fn(3, 3, 3, |_, _, _| Entry::Zero).unwrap();
        assert_eq!(al_23d(&z).unwrap(), 1);
        let m = StarMatrix3::from_fn(1, 3, 3, |_, j, k| Entry::from_bit(j == k && j == 2)).unwrap();
        assert_eq!(al_23d(&m).unwrap(), 3);
        let mut g = Lcg64::new(3);
        for _ in 0..200 {
            let r = g.range(1, 5);
            let s = g.range(1, 5);
            let m = StarMatrix3::from_fn(r, s, s, |_, _, _| Entry::from_bit(g.bit())).unwrap();
            let d = cross(&m, CrossPair::P23, CrossMode::Diag).unwrap();
            let col_al = 1 + (1..=d.cols()).map(|b| alternation_indices(&d.col(b)).len()).max().unwrap();
            assert_eq!(al_23d(&m).unwrap(), col_al);
            assert!(al_23d(&m).unwrap() <= metrics2(&d).al);
        }
    }

    #[test]
    fn text_formats() {
        let n = m2(&["01*", "110"]);
        let s = n.to_string();
        assert_eq!(s, "matrix2 r=2 s=3\n01*\n110\n");
        assert_eq!(StarMatrix2::parse(&s).unwrap(), n);
        let m = StarMatrix3::from_fn(2, 3, 2, |i, j, k| if i == j { Entry::Star } else { Entry::from_bit(k == 2) })
            .unwrap();
        let s = m.to_string();
        assert_eq!(s, "matrix3 r=2 s=3 t=2\n*00\n0*0\n\n*11\n1*1\n");
        assert_eq!(StarMatrix3::parse(&s).unwrap(), m);
        assert!(StarMatrix2::parse("matrix2 r=2 s=2\n01\n0").is_err());
    }

    fn row_bound(n: &StarMatrix2) -> bool {
        let m = metrics2(n);
        let t = metrics2(&n.transpose());
        m.r.len() <= (m.al - 1) * (2 * m.c.len() + 1) && t.r.len() <= (t.al - 1) * (2 * t.c.len() + 1)
    }

    #[test]
    fn row_bound_on_seeded_samples() {
        let mut g = Lcg64::new(0);
        for _ in 0..2000 {
            assert!(row_bound(&random2(&mut g, 12)));
        }
    }

    #[test]
    fn line_bound_on_seeded_samples() {
        let mut g = Lcg64::new(0);
        for _ in 0..300 {
            let m = random3(&mut g, 8);
            let x = metrics3(&m);
            let (l, r, c, s) = (x.al, x.r.len(), x.c.len(), x.s.len());
            assert!(s <= (l - 1) * (r.max(c) + 1).pow(2));
            assert!(r <= (l - 1) * (c.max(s) + 1).pow(2));
            assert!(c <= (l - 1) * (r.max(s) + 1).pow(2));
        }
    }

    fn arb_selection(max: usize) -> impl Strategy<Value = Vec<usize>> {
        proptest::collection::btree_set(1..=max, 1..=max).prop_map(|s| s.into_iter().collect())
    }

    fn arb_m3() -> impl Strategy<Value = StarMatrix3> {
        (1usize..=5, 1usize..=5, 1usize..=5).prop_flat_map(|(r, s, t)| {
            proptest::collection::vec(any::<bool>(), r * s * t).prop_map(move |bits| {
                StarMatrix3::new(r, s, t, bits.into_iter().map(Entry::from_bit).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn submatrix_monotone(m in arb_m3(), xs in arb_selection(5), ys in arb_selection(5), zs in arb_selection(5)) {
            let (r, s, t) = m.dims();
            let xs: Vec<usize> = xs.into_iter().filter(|&x| x <= r).collect();
            let ys: Vec<usize> = ys.into_iter().filter(|&x| x <= s).collect();
            let zs: Vec<usize> = zs.into_iter().filter(|&x| x <= t).collect();
            prop_assume!(!xs.is_empty() && !ys.is_empty() && !zs.is_empty());
            let sub = m.submatrix(&xs, &ys, &zs).unwrap();
            prop_assert!(metrics3(&sub).al <= metrics3(&m).al);
        }

        #[test]
        fn layer_of_submatrix_is_submatrix_of_layer(
            m in arb_m3(), xs in arb_selection(5), ys in arb_selection(5), zs in arb_selection(5), pick in 0usize..5
        ) {
            let (r, s, t) = m.dims();
            let xs: Vec<usize> = xs.into_iter().filter(|&x| x <= r).collect();
            let ys: Vec<usize> = ys.into_iter().filter(|&x| x <= s).collect();
            let zs: Vec<usize> = zs.into_iter().filter(|&x| x <= t).collect();
            prop_assume!(!xs.is_empty() && !ys.is_empty() && !zs.is_empty());
            let sub = m.submatrix(&xs, &ys, &zs).unwrap();
            // A layer of M' <= M sits inside the matching layer of M.
            let z = pick % xs.len() + 1;
            let small = layer(&sub, 1, z).unwrap();
            let big = layer(&m, 1, xs[z - 1]).unwrap();
            prop_assert_eq!(big.submatrix(&zs, &ys).unwrap(), small.clone());
            prop_assert!(find_submatrix(&big, &small).is_some());
            // Conversely a submatrix N' of a layer of M is the layer of the
            // corresponding M' <= M.
            let z0 = pick % r + 1;
            let lay = layer(&m, 1, z0).unwrap();
            let n_prime = lay.submatrix(&zs, &ys).unwrap();
            let m_prime = m.submatrix(&[z0], &ys, &zs).unwrap();
            prop_assert_eq!(layer(&m_prime, 1, 1).unwrap(), n_prime);
        }

        #[test]
        fn row_bound_property(rows in 1usize..=12, cols in 1usize..=12, seed in any::<u64>()) {
            let mut g = Lcg64::new(seed);
            let n = StarMatrix2::from_fn(rows, cols, |_, _| Entry::from_bit(g.bit())).unwrap();
            prop_assert!(row_bound(&n));
        }
    }
}
