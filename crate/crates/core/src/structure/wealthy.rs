use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::coloring::{Coloring, Pattern};
use crate::error::{Error, Result};

/// The wealthy coloring types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WealthyFamily {
    W1Prime,
    W1Second,
    W21,
    W22,
    W31,
    W32,
    W33,
    W41,
    W42,
}

impl WealthyFamily {
    pub const ALL: [WealthyFamily; 9] = [
        WealthyFamily::W1Prime,
        WealthyFamily::W1Second,
        WealthyFamily::W21,
        WealthyFamily::W22,
        WealthyFamily::W31,
        WealthyFamily::W32,
        WealthyFamily::W33,
        WealthyFamily::W41,
        WealthyFamily::W42,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            WealthyFamily::W1Prime => "W1'",
            WealthyFamily::W1Second => "W1''",
            WealthyFamily::W21 => "W2.1",
            WealthyFamily::W22 => "W2.2",
            WealthyFamily::W31 => "W3.1",
            WealthyFamily::W32 => "W3.2",
            WealthyFamily::W33 => "W3.3",
            WealthyFamily::W41 => "W4.1",
            WealthyFamily::W42 => "W4.2",
        }
    }

    /// Number of vertices of an r-wealthy coloring of this type.
    pub fn size(self, r: usize) -> usize {
        match self {
            WealthyFamily::W1Prime | WealthyFamily::W1Second => r,
            WealthyFamily::W21 | WealthyFamily::W22 => 2 * r + 1,
            WealthyFamily::W31 | WealthyFamily::W32 => 3 * r,
            WealthyFamily::W33 => 3 * r + 1,
            WealthyFamily::W41 | WealthyFamily::W42 => 4 * r,
        }
    }

    /// Block sizes for the families built from permutable intervals.
    fn blocks(self, r: usize) -> Option<Vec<usize>> {
        match self {
            WealthyFamily::W21 | WealthyFamily::W22 => Some(vec![r, r, 1]),
            WealthyFamily::W31 | WealthyFamily::W32 => Some(vec![r, r, r]),
            WealthyFamily::W42 => Some(vec![r, 3 * r]),
            _ => None,
        }
    }

    /// Number of reversal flags in a variant.
    pub fn rev_flags(self) -> usize {
        match self {
            WealthyFamily::W21 | WealthyFamily::W22 => 2,
            WealthyFamily::W31 | WealthyFamily::W32 => 3,
            _ => 1,
        }
    }

    fn perm_len(self) -> usize {
        match self {
            WealthyFamily::W21 | WealthyFamily::W22 | WealthyFamily::W31 | WealthyFamily::W32 => 3,
            WealthyFamily::W42 => 2,
            _ => 1,
        }
    }

    /// Every symmetry variant, in lexicographic order of (swap, rev, perm).
    pub fn variants(self) -> Vec<Variant> {
        let perms: Vec<Vec<u8>> = (1..=self.perm_len() as u8).permutations(self.perm_len()).collect();
        let mut out = Vec::new();
        for swap in [false, true] {
            for bits in 0..1u32 << self.rev_flags() {
                let rev = (0..self.rev_flags()).map(|i| bits >> (self.rev_flags() - 1 - i) & 1 == 1).collect::<Vec<_>>();
                for perm in &perms {
                    out.push(Variant {
                        swap,
                        rev: rev.clone(),
                        perm: perm.clone(),
                    });
                }
            }
        }
        out
    }

    pub fn plain(self) -> Variant {
        self.variants().swap_remove(0)
    }
}

impl fmt::Display for WealthyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for WealthyFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().replace('′', "'").replace('″', "''");
        Ok(match t.as_str() {
            "W1'" | "W1p" => WealthyFamily::W1Prime,
            "W1''" | "W1pp" => WealthyFamily::W1Second,
            "W2.1" | "W2.1'" => WealthyFamily::W21,
            "W2.2" | "W2.2'" => WealthyFamily::W22,
            "W3.1" | "W3.1'" => WealthyFamily::W31,
            "W3.2" | "W3.2'" => WealthyFamily::W32,
            "W3.3" => WealthyFamily::W33,
            "W4.1" => WealthyFamily::W41,
            "W4.2" | "W4.2'" => WealthyFamily::W42,
            _ => return Err(Error::InvalidArgument(format!("unknown wealthy family `{s}`"))),
        })
    }
}

/// A symmetry applied to the canonical form: color swap, interval
/// reversals, and a block permutation (`perm[p]` is the block placed at
/// position p). For W1, W3.3 and W4.1 the single reversal flag reverses
/// the whole vertex order; for W4.2 it reverses the block [r].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variant {
    pub swap: bool,
    pub rev: Vec<bool>,
    pub perm: Vec<u8>,
}

impl Variant {
    pub fn parse(family: WealthyFamily, s: &str) -> Result<Variant> {
        let bad = || Error::InvalidArgument(format!("invalid variant `{s}` for {family}"));
        let mut swap = None;
        let mut rev = None;
        let mut perm = None;
        for part in s.split(',') {
            let (k, v) = part.split_once(':').ok_or_else(bad)?;
            match k.trim() {
                "swap" => swap = Some(v == "1"),
                "rev" => rev = Some(v.chars().map(|c| c == '1').collect::<Vec<_>>()),
                "perm" => {
                    perm = Some(
                        v.chars()
                            .map(|c| c.to_digit(10).map(|d| d as u8))
                            .collect::<Option<Vec<_>>>()
                            .ok_or_else(bad)?,
                    )
                }
                _ => return Err(bad()),
            }
        }
        let v = Variant {
            swap: swap.unwrap_or(false),
            rev: rev.unwrap_or_else(|| vec![false; family.rev_flags()]),
            perm: perm.unwrap_or_else(|| (1..=family.perm_len() as u8).collect()),
        };
        if !family.variants().contains(&v) {
            return Err(bad());
        }
        Ok(v)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rev: String = self.rev.iter().map(|&b| if b { '1' } else { '0' }).collect();
        let perm: String = self.perm.iter().map(|d| d.to_string()).collect();
        write!(f, "swap:{},rev:{},perm:{}", self.swap as u8, rev, perm)
    }
}

/// Where each vertex of the canonical form lands under a variant, plus the
/// placed base intervals in canonical block order.
struct Layout {
    map: Vec<usize>,
    base: Vec<(usize, usize)>,
}

fn layout(family: WealthyFamily, r: usize, v: &Variant) -> Layout {
    let n = family.size(r);
    let mut map = vec![0; n + 1];
    let Some(sizes) = family.blocks(r) else {
        for x in 1..=n {
            map[x] = if v.rev[0] { n + 1 - x } else { x };
        }
        return Layout { map, base: vec![] };
    };
    let mut placed = vec![0; sizes.len()];
    let mut next = 1;
    for &b in &v.perm {
        placed[b as usize - 1] = next;
        next += sizes[b as usize - 1];
    }
    let mut canon = 1;
    for (b, &sz) in sizes.iter().enumerate() {
        let reversed = v.rev.get(b).copied().unwrap_or(false) && !(family == WealthyFamily::W42 && b == 1);
        for x in 1..=sz {
            map[canon + x - 1] = placed[b] + if reversed { sz - x } else { x - 1 };
        }
        canon += sz;
    }
    let base = sizes.iter().zip(&placed).map(|(&sz, &p)| (p, p + sz - 1)).collect();
    Layout { map, base }
}

fn canonical_rule(family: WealthyFamily, i: usize, j: usize) -> u8 {
    match family {
        WealthyFamily::W21 | WealthyFamily::W31 => (i == j) as u8,
        _ => (i <= j) as u8,
    }
}

/// The specified edges of the canonical (plain) form, with their colors.
fn canonical_edges(family: WealthyFamily, r: usize) -> Vec<(Vec<usize>, u8)> {
    let mut out = Vec::new();
    match family {
        WealthyFamily::W1Prime => {
            for i in 3..=r {
                out.push((vec![1, 2, i], (i % 2 == 0) as u8));
            }
        }
        WealthyFamily::W1Second => {
            for i in 2..r {
                out.push((vec![1, i, r], (i % 2 == 0) as u8));
            }
        }
        WealthyFamily::W21 | WealthyFamily::W22 => {
            for (i, j) in (1..=r).cartesian_product(1..=r) {
                out.push((vec![i, r + j, 2 * r + 1], canonical_rule(family, i, j)));
            }
        }
        WealthyFamily::W31 | WealthyFamily::W32 => {
            for (i, j) in (1..=r).cartesian_product(1..=r) {
                out.push((vec![i, r + i, 2 * r + j], canonical_rule(family, i, j)));
            }
        }
        WealthyFamily::W33 => {
            let apex = 3 * r + 1;
            for i in 1..=r {
                let (a, b, c) = (3 * i - 2, 3 * i - 1, 3 * i);
                out.push((vec![a, b, apex], 1));
                out.push((vec![a, c, apex], 0));
                out.push((vec![b, c, apex], 0));
            }
        }
        WealthyFamily::W41 => {
            for i in 1..=r {
                let q = [4 * i - 3, 4 * i - 2, 4 * i - 1, 4 * i];
                for t in q.iter().copied().combinations(3) {
                    let marked = t == [q[0], q[1], q[2]];
                    out.push((t, marked as u8));
                }
            }
        }
        WealthyFamily::W42 => {
            for i in 1..=r {
                out.push((vec![i, r + 3 * i - 2, r + 3 * i - 1], 1));
                out.push((vec![i, r + 3 * i - 2, r + 3 * i], 0));
            }
        }
    }
    out
}

fn check_args(c_k: usize, c_l: usize, r: usize) -> Result<()> {
    if c_k != 3 || c_l != 2 {
        return Err(Error::InvalidArgument("wealthy colorings need k=3, l=2".into()));
    }
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    Ok(())
}

fn mapped(map: &[usize], e: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = e.iter().map(|&x| map[x]).collect();
    out.sort_unstable();
    out
}

/// The canonical pattern moved by `variant`; unspecified edges are
/// wildcards.
pub fn wealthy_pattern(family: WealthyFamily, r: usize, variant: &Variant) -> Result<Pattern> {
    check_args(3, 2, r)?;
    if !family.variants().contains(variant) {
        return Err(Error::InvalidArgument(format!("variant {variant} not valid for {family}")));
    }
    let n = family.size(r);
    let lay = layout(family, r, variant);
    let mut p = Pattern::wildcard(3, 2, n)?;
    for (e, col) in canonical_edges(family, r) {
        p.set(&mapped(&lay.map, &e), Some(col ^ variant.swap as u8))?;
    }
    Ok(p)
}

/// Moves an arbitrary coloring of the right size by a symmetry variant:
/// the result colors the image of each edge E by the (possibly swapped)
/// color of E.
pub fn apply_symmetry(c: &Coloring, family: WealthyFamily, r: usize, variant: &Variant) -> Result<Coloring> {
    check_args(c.k(), c.l(), r)?;
    let n = family.size(r);
    if c.n() != n {
        return Err(size_error(family, r, c.n()));
    }
    if !family.variants().contains(variant) {
        return Err(Error::InvalidArgument(format!("variant {variant} not valid for {family}")));
    }
    let lay = layout(family, r, variant);
    let mut out = c.clone();
    for e in c.edges() {
        out.set(&mapped(&lay.map, &e), c.color(&e) ^ variant.swap as u8)?;
    }
    Ok(out)
}

fn size_error(family: WealthyFamily, r: usize, actual: usize) -> Error {
    Error::SizeMismatch {
        family: family.tag().to_string(),
        r,
        expected: family.size(r),
        actual,
    }
}

/// Evidence of r-wealthiness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WealthyWitness {
    pub family: WealthyFamily,
    pub r: usize,
    pub variant: Variant,
    /// Placed base intervals (W2: A, B, {c}; W3.1/W3.2: three intervals;
    /// W4.2: A, B), inclusive bounds.
    pub base_sets: Vec<(usize, usize)>,
    /// Distinguished triples (a_i, b_i, c_i) for W3.3 and W4.2.
    pub triples: Vec<[usize; 3]>,
}

impl fmt::Display for WealthyWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = if self.base_sets.is_empty() {
            "-".to_string()
        } else {
            self.base_sets
                .iter()
                .map(|&(a, b)| if a == b { format!("[{a}]") } else { format!("[{a},{b}]") })
                .join("|")
        };
        write!(
            f,
            "wealthy family={} r={} variant={} base={}",
            self.family, self.r, self.variant, base
        )?;
        if !self.triples.is_empty() {
            let t = self.triples.iter().map(|t| format!("({},{},{})", t[0], t[1], t[2])).join(";");
            write!(f, " triples={t}")?;
        }
        Ok(())
    }
}

/// Given the colors of {x,y}, {x,z}, {y,z} (each with a fixed apex), finds
/// a vertex a and the other two b, c with color(a,b) != color(a,c).
fn split_triple(t: [usize; 3], col: impl Fn(usize, usize) -> u8) -> Option<[usize; 3]> {
    let [x, y, z] = t;
    let (xy, xz, yz) = (col(x, y), col(x, z), col(y, z));
    if xy != xz {
        Some([x, y, z])
    } else if xy != yz {
        Some([y, x, z])
    } else if xz != yz {
        Some([z, x, y])
    } else {
        None
    }
}

/// Checks the canonical defining condition on the pulled-back coloring
/// `col` (an edge in canonical coordinates to its color). Returns the
/// distinguished triples in canonical coordinates.
fn canonical_holds(family: WealthyFamily, r: usize, col: &dyn Fn(&[usize]) -> u8) -> Option<Vec<[usize; 3]>> {
    match family {
        WealthyFamily::W33 => {
            let apex = 3 * r + 1;
            (1..=r)
                .map(|i| split_triple([3 * i - 2, 3 * i - 1, 3 * i], |a, b| col(&[a, b, apex])))
                .collect()
        }
        WealthyFamily::W41 => {
            for i in 1..=r {
                let q = [4 * i - 3, 4 * i - 2, 4 * i - 1, 4 * i];
                let colors: Vec<u8> = q.iter().copied().combinations(3).map(|t| col(&t)).collect();
                if colors.iter().all_equal() {
                    return None;
                }
            }
            Some(vec![])
        }
        WealthyFamily::W42 => (1..=r)
            .map(|i| {
                split_triple([r + 3 * i - 2, r + 3 * i - 1, r + 3 * i], |a, b| col(&[i, a, b]))
            })
            .collect(),
        _ => canonical_edges(family, r)
            .into_iter()
            .all(|(e, want)| col(&e) == want)
            .then(Vec::new),
    }
}

/// Every symmetry variant under which `c` is r-wealthy of the given type,
/// in lexicographic variant order.
pub fn wealthy_witnesses(c: &Coloring, family: WealthyFamily, r: usize) -> Result<Vec<WealthyWitness>> {
    check_args(c.k(), c.l(), r)?;
    let n = family.size(r);
    if c.n() != n {
        return Err(size_error(family, r, c.n()));
    }
    let mut out = Vec::new();
    for variant in family.variants() {
        let lay = layout(family, r, &variant);
        let swap = variant.swap as u8;
        let pull = |e: &[usize]| c.color(&mapped(&lay.map, e)) ^ swap;
        if let Some(triples) = canonical_holds(family, r, &pull) {
            let triples = triples
                .into_iter()
                .map(|t| [lay.map[t[0]], lay.map[t[1]], lay.map[t[2]]])
                .collect();
            out.push(WealthyWitness {
                family,
                r,
                variant,
                base_sets: lay.base.clone(),
                triples,
            });
        }
    }
    Ok(out)
}

/// Exact membership test; returns the first matching variant.
pub fn is_wealthy(c: &Coloring, family: WealthyFamily, r: usize) -> Result<Option<WealthyWitness>> {
    Ok(wealthy_witnesses(c, family, r)?.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::reverse;
    use crate::lcg::Lcg64;

    fn random_member(family: WealthyFamily, r: usize, g: &mut Lcg64) -> Coloring {
        let p = wealthy_pattern(family, r, &family.plain()).unwrap();
        let mut c = p.fill(0).unwrap();
        for e in c.edges().collect::<Vec<_>>() {
            if p.get(&e).is_none() {
                c.set(&e, g.bit() as u8).unwrap();
            }
        }
        c
    }

    #[test]
    fn variant_counts() {
        assert_eq!(WealthyFamily::W21.variants().len(), 2 * 4 * 6);
        assert_eq!(WealthyFamily::W31.variants().len(), 2 * 8 * 6);
        assert_eq!(WealthyFamily::W42.variants().len(), 2 * 2 * 2);
        assert_eq!(WealthyFamily::W1Prime.variants().len(), 4);
        assert_eq!(WealthyFamily::W21.plain().to_string(), "swap:0,rev:00,perm:123");
    }

    #[test]
    fn variant_text_round_trip() {
        for f in WealthyFamily::ALL {
            for v in f.variants() {
                assert_eq!(Variant::parse(f, &v.to_string()).unwrap(), v);
            }
            assert_eq!(f.tag().parse::<WealthyFamily>().unwrap(), f);
        }
        assert!(Variant::parse(WealthyFamily::W21, "swap:0,rev:0,perm:123").is_err());
        assert_eq!("W1′".parse::<WealthyFamily>().unwrap(), WealthyFamily::W1Prime);
    }

    #[test]
    fn permutation_example_layout() {
        // perm 321 places {c} first, then B, then A: edge {A_i, B_j, c}
        // becomes {1, 1+j, r+1+i}.
        let r = 3;
        let v = Variant::parse(WealthyFamily::W22, "swap:0,rev:00,perm:321").unwrap();
        let p = wealthy_pattern(WealthyFamily::W22, r, &v).unwrap();
        for i in 1..=r {
            for j in 1..=r {
                assert_eq!(p.get(&[1, 1 + j, r + 1 + i]), Some((i <= j) as u8));
            }
        }
    }

    #[test]
    fn w21_plain_base_sets() {
        let c = wealthy_pattern(WealthyFamily::W21, 2, &WealthyFamily::W21.plain()).unwrap().fill(0).unwrap();
        let w = is_wealthy(&c, WealthyFamily::W21, 2).unwrap().unwrap();
        assert_eq!(w.base_sets, vec![(1, 2), (3, 4), (5, 5)]);
        assert_eq!(w.to_string(), "wealthy family=W2.1 r=2 variant=swap:0,rev:00,perm:123 base=[1,2]|[3,4]|[5]");
    }

    #[test]
    fn small_w1_is_everything() {
        let mut g = Lcg64::new(3);
        for r in 1..=2 {
            let c = Coloring::from_fn(3, 2, r, |_| g.bit() as u8).unwrap();
            assert!(is_wealthy(&c, WealthyFamily::W1Prime, r).unwrap().is_some());
        }
    }

    #[test]
    fn constant_is_not_w41() {
        for r in 1..=3 {
            let c = Coloring::constant(3, 2, 4 * r, 0).unwrap();
            assert!(is_wealthy(&c, WealthyFamily::W41, r).unwrap().is_none());
        }
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let c = Coloring::constant(3, 2, 6, 0).unwrap();
        assert!(matches!(is_wealthy(&c, WealthyFamily::W21, 2), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn round_trip_all_variants() {
        for family in WealthyFamily::ALL {
            for r in 1..=4 {
                for v in family.variants() {
                    for filler in 0..2 {
                        let c = wealthy_pattern(family, r, &v).unwrap().fill(filler).unwrap();
                        let ws = wealthy_witnesses(&c, family, r).unwrap();
                        assert!(ws.iter().any(|w| w.variant == v), "{family} r={r} {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn closure_under_symmetries() {
        let mut g = Lcg64::new(12);
        for family in WealthyFamily::ALL {
            for r in 1..=4 {
                let c = random_member(family, r, &mut g);
                assert!(is_wealthy(&c, family, r).unwrap().is_some());
                for v in family.variants() {
                    let moved = apply_symmetry(&c, family, r, &v).unwrap();
                    let ws = wealthy_witnesses(&moved, family, r).unwrap();
                    assert!(ws.iter().any(|w| w.variant == v), "{family} r={r} {v}");
                }
                if matches!(
                    family,
                    WealthyFamily::W1Prime | WealthyFamily::W1Second | WealthyFamily::W41 | WealthyFamily::W42
                ) {
                    assert!(is_wealthy(&reverse(&c), family, r).unwrap().is_some());
                }
            }
        }
    }

    #[test]
    fn distinguished_triples_hold() {
        let mut g = Lcg64::new(5);
        for family in [WealthyFamily::W33, WealthyFamily::W42] {
            for r in 1..=4 {
                for v in family.variants() {
                    let c = apply_symmetry(&random_member(family, r, &mut g), family, r, &v).unwrap();
                    for w in wealthy_witnesses(&c, family, r).unwrap() {
                        assert_eq!(w.triples.len(), r);
                        for (i, t) in w.triples.iter().enumerate() {
                            let apex = if family == WealthyFamily::W33 {
                                if w.variant.rev[0] { 1 } else { 3 * r + 1 }
                            } else {
                                let lay = layout(family, r, &w.variant);
                                lay.map[i + 1]
                            };
                            let mut e1 = vec![t[0], t[1], apex];
                            let mut e2 = vec![t[0], t[2], apex];
                            e1.sort_unstable();
                            e2.sort_unstable();
                            assert_ne!(c.color(&e1), c.color(&e2));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn w42_reversal_is_block_swap() {
        let c = wealthy_pattern(WealthyFamily::W42, 3, &WealthyFamily::W42.plain()).unwrap().fill(0).unwrap();
        let rc = reverse(&c);
        let ws = wealthy_witnesses(&rc, WealthyFamily::W42, 3).unwrap();
        assert!(ws.iter().any(|w| w.variant.perm == vec![2, 1] && w.variant.rev == vec![false]));
    }
}
