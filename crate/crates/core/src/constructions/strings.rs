use crate::coloring::{restrict_normalize, Coloring, Pattern};
use crate::error::{Error, Result};
use crate::matrices::{Entry, StarMatrix2};

/// Parses a word over {0,1}.
pub fn parse_bits(s: &str) -> Result<Vec<u8>> {
    s.trim()
        .chars()
        .map(|ch| match ch {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(Error::InvalidArgument(format!("`{s}` is not a binary string"))),
        })
        .collect()
}

pub fn bits_to_string(w: &[u8]) -> String {
    w.iter().map(|b| if *b == 1 { '1' } else { '0' }).collect()
}

/// All binary words of the given length, in lexicographic order.
pub fn all_words(len: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..1u64 << len).map(move |x| (0..len).map(|i| (x >> (len - 1 - i) & 1) as u8).collect())
}

/// True when no two consecutive letters are both `letter`.
pub fn avoids_double(w: &[u8], letter: u8) -> bool {
    w.windows(2).all(|p| !(p[0] == letter && p[1] == letter))
}

/// True when no w_{2i-1}w_{2i} equals `odd` and no w_{2i}w_{2i+1} equals
/// `even` (1-based positions).
pub fn avoids_alternating(w: &[u8], odd: [u8; 2], even: [u8; 2]) -> bool {
    w.windows(2).enumerate().all(|(p, pair)| {
        let forbidden = if p % 2 == 0 { odd } else { even };
        pair != forbidden
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StringMode {
    /// Words avoiding 11, realized inside I_{2n}.
    Identity,
    /// Words avoiding w_{2i-1}w_{2i} = 10 and w_{2i}w_{2i+1} = 01, realized
    /// inside U_{3n}.
    Upper,
}

impl StringMode {
    pub fn allows(self, w: &[u8]) -> bool {
        match self {
            StringMode::Identity => avoids_double(w, 1),
            StringMode::Upper => avoids_alternating(w, [1, 0], [0, 1]),
        }
    }

    pub fn host(self, n: usize) -> StarMatrix2 {
        match self {
            StringMode::Identity => StarMatrix2::identity(2 * n).unwrap(),
            StringMode::Upper => StarMatrix2::upper(3 * n).unwrap(),
        }
    }
}

/// An n x n matrix carrying a word on its diagonal and superdiagonal,
/// together with the rows and columns of the host selecting it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringEmbedding {
    pub matrix: StarMatrix2,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

pub fn embed_string(w: &[u8], mode: StringMode) -> Result<StringEmbedding> {
    if w.len().is_multiple_of(2) || w.iter().any(|&b| b > 1) {
        return Err(Error::InvalidArgument("word must be binary of odd length 2n-1".into()));
    }
    if !mode.allows(w) {
        return Err(Error::PatternViolation(format!(
            "{} contains a forbidden pair for {mode:?} mode",
            bits_to_string(w)
        )));
    }
    let n = w.len().div_ceil(2);
    let a = |i: usize| w[2 * i - 2] as usize;
    let b = |i: usize| w[2 * i - 1] as usize;
    let (rows, cols): (Vec<usize>, Vec<usize>) = match mode {
        StringMode::Identity => (
            (1..=n).map(|i| 2 * i - a(i)).collect(),
            std::iter::once(1).chain((1..n).map(|i| 2 * i + 1 - b(i))).collect(),
        ),
        StringMode::Upper => (
            (1..=n).map(|i| 3 * i - 2 * a(i)).collect(),
            std::iter::once(1).chain((1..n).map(|i| 3 * i - 1 + 2 * b(i))).collect(),
        ),
    };
    let matrix = mode.host(n).submatrix(&rows, &cols)?;
    for i in 1..=n {
        let diag_ok = matrix.get(i, i) == Entry::from_color(a(i) as u8);
        let sup_ok = i == n || matrix.get(i, i + 1) == Entry::from_color(b(i) as u8);
        if !diag_ok || !sup_ok {
            return Err(Error::PatternViolation("embedded matrix misses the word".into()));
        }
    }
    Ok(StringEmbedding { matrix, rows, cols })
}

/// The partial coloring on a+b+1 vertices with {i, a+j, a+b+1} colored
/// M(i, j); stars stay unspecified.
pub fn partition_pattern(m: &StarMatrix2) -> Result<Pattern> {
    let (a, b) = (m.rows(), m.cols());
    let apex = a + b + 1;
    let mut p = Pattern::wildcard(3, 2, apex)?;
    for i in 1..=a {
        for j in 1..=b {
            let col = match m.get(i, j) {
                Entry::Zero => Some(0),
                Entry::One => Some(1),
                Entry::Star => None,
            };
            p.set(&[i, a + j, apex], col)?;
        }
    }
    Ok(p)
}

/// A word-driven restriction of a host shaped like a W4.2 coloring.
#[derive(Debug, Clone)]
pub struct StringColoring {
    /// Positions i with w_i = s.
    pub c_index: Vec<usize>,
    /// Positions i with w_i = t.
    pub d_index: Vec<usize>,
    /// {3i+r+4 : w_i = s} together with r+4.
    pub c_set: Vec<usize>,
    /// {3i+r+2 : w_i = t}.
    pub d_set: Vec<usize>,
    pub s_set: Vec<usize>,
    pub host: Coloring,
    pub member: Coloring,
}

/// Builds the host on 4r vertices (Z = [r], Y = [r+1, 4r]): triples
/// {j, r+3i-2, r+3i-1} with j < i get color t, every other triple with one
/// vertex in Z and two in Y gets s = 1-t, the rest get `filler`. The member
/// is its restriction to S and satisfies member({1, i, i+1}) = w_{i-1}.
pub fn make_string_coloring(w: &[u8], t: u8, r: usize, filler: u8) -> Result<StringColoring> {
    if t > 1 || w.iter().any(|&x| x > 1) {
        return Err(Error::InvalidArgument("colors must be 0 or 1".into()));
    }
    if !avoids_double(w, t) {
        return Err(Error::PatternViolation(format!("{} contains {t}{t}", bits_to_string(w))));
    }
    if r < w.len() + 2 {
        return Err(Error::InvalidArgument(format!("r = {r} must be at least |w|+2 = {}", w.len() + 2)));
    }
    let s = 1 - t;
    let host = Coloring::from_fn(3, 2, 4 * r, |e| {
        let in_z = e.iter().filter(|&&v| v <= r).count();
        if in_z != 1 {
            return filler;
        }
        let (j, y1, y2) = (e[0], e[1], e[2]);
        let i = (y1 - r).div_ceil(3);
        if (y1 - r) % 3 == 1 && y2 == y1 + 1 && j < i {
            t
        } else {
            s
        }
    })?;
    let idx = |c: u8| (1..=w.len()).filter(move |&i| w[i - 1] == c).collect::<Vec<_>>();
    let (c_index, d_index) = (idx(s), idx(t));
    let mut c_set = vec![r + 4];
    c_set.extend(c_index.iter().map(|i| 3 * i + r + 4));
    let d_set: Vec<usize> = d_index.iter().map(|i| 3 * i + r + 2).collect();
    let mut s_set = vec![1];
    s_set.extend(&c_set);
    s_set.extend(&d_set);
    s_set.sort_unstable();
    let member = restrict_normalize(&host, &s_set)?;
    for i in 2..member.n() {
        if member.color(&[1, i, i + 1]) != w[i - 2] {
            return Err(Error::PatternViolation("restriction does not carry the word".into()));
        }
    }
    Ok(StringColoring {
        c_index,
        d_index,
        c_set,
        d_set,
        s_set,
        host,
        member,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::contains_pattern;
    use crate::constructions::make_wealthy;
    use crate::matrices::{find_pattern2, PatternSpec};
    use crate::structure::WealthyFamily;

    fn fib(n: usize) -> u64 {
        let (mut a, mut b) = (1u64, 1u64);
        for _ in 2..n {
            (a, b) = (b, a + b);
        }
        if n <= 2 {
            1
        } else {
            b
        }
    }

    #[test]
    fn identity_word_selection() {
        let e = embed_string(&parse_bits("0100101").unwrap(), StringMode::Identity).unwrap();
        assert_eq!(e.rows, vec![2, 4, 5, 7]);
        assert_eq!(e.cols, vec![1, 2, 5, 7]);
    }

    #[test]
    fn upper_word_selection() {
        let e = embed_string(&parse_bits("01110").unwrap(), StringMode::Upper).unwrap();
        assert_eq!(e.rows, vec![3, 4, 9]);
        assert_eq!(e.cols, vec![1, 4, 7]);
    }

    #[test]
    fn zero_word() {
        for n in 1..=5 {
            let w = vec![0; 2 * n - 1];
            let e = embed_string(&w, StringMode::Identity).unwrap();
            assert_eq!(e.rows, (1..=n).map(|i| 2 * i).collect::<Vec<_>>());
            let mut cols = vec![1];
            cols.extend((1..n).map(|i| 2 * i + 1));
            assert_eq!(e.cols, cols);
            assert_eq!(e.matrix, StarMatrix2::filled(n, n, Entry::Zero).unwrap());
        }
    }

    #[test]
    fn forbidden_words_rejected() {
        assert!(embed_string(&parse_bits("0110").unwrap(), StringMode::Identity).is_err());
        assert!(embed_string(&parse_bits("011").unwrap(), StringMode::Identity).is_err());
        assert!(embed_string(&parse_bits("100").unwrap(), StringMode::Upper).is_err());
        assert!(embed_string(&parse_bits("001").unwrap(), StringMode::Upper).is_err());
        assert!(parse_bits("01a").is_err());
    }

    #[test]
    fn all_small_words_embed() {
        for mode in [StringMode::Identity, StringMode::Upper] {
            for n in 1..=4 {
                for w in all_words(2 * n - 1).filter(|w| mode.allows(w)) {
                    let e = embed_string(&w, mode).unwrap();
                    let found = find_pattern2(&mode.host(n), &PatternSpec::Explicit(e.matrix.clone())).unwrap();
                    assert!(found.is_some());
                }
            }
        }
    }

    #[test]
    fn word_counts_are_fibonacci() {
        for n in 2..=14 {
            let len = n - 2;
            assert_eq!(all_words(len).filter(|w| avoids_double(w, 0)).count() as u64, fib(n));
            assert_eq!(all_words(len).filter(|w| avoids_double(w, 1)).count() as u64, fib(n));
            assert_eq!(
                all_words(len).filter(|w| avoids_alternating(w, [0, 1], [1, 0])).count() as u64,
                fib(n)
            );
            assert_eq!(
                all_words(len).filter(|w| avoids_alternating(w, [1, 0], [0, 1])).count() as u64,
                fib(n)
            );
        }
    }

    #[test]
    fn thirteen_vertex_string_coloring() {
        let w = parse_bits("01010001010").unwrap();
        let sc = make_string_coloring(&w, 1, 13, 0).unwrap();
        assert_eq!(sc.c_index, vec![1, 3, 5, 6, 7, 9, 11]);
        assert_eq!(sc.d_index, vec![2, 4, 8, 10]);
        assert_eq!(sc.s_set, vec![1, 17, 20, 21, 26, 27, 32, 35, 38, 39, 44, 45, 50]);
        assert_eq!(sc.member.n(), 13);
    }

    #[test]
    fn all_s_word() {
        for t in 0..2u8 {
            let w = vec![1 - t; 6];
            let sc = make_string_coloring(&w, t, 8, 0).unwrap();
            assert!(sc.d_set.is_empty());
            for i in 2..sc.member.n() {
                assert_eq!(sc.member.color(&[1, i, i + 1]), 1 - t);
            }
        }
        assert!(make_string_coloring(&[1, 1], 1, 5, 0).is_err());
        assert!(make_string_coloring(&[0, 1, 0], 1, 4, 0).is_err());
    }

    #[test]
    fn identity_words_embed_in_w21() {
        for m in 1..=3 {
            let host = make_wealthy(WealthyFamily::W21, 2 * m, &WealthyFamily::W21.plain(), 0).unwrap();
            for w in all_words(2 * m - 1).filter(|w| avoids_double(w, 1)) {
                let e = embed_string(&w, StringMode::Identity).unwrap();
                let kw = partition_pattern(&e.matrix).unwrap();
                assert!(contains_pattern(&kw, &host).unwrap().is_some(), "{}", bits_to_string(&w));
            }
        }
    }
}
