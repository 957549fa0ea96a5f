use std::fmt;
use std::hash::Hasher;
use std::str::FromStr;

use fnv::FnvHasher;

use crate::coloring::{parse_block, Coloring};
use crate::error::{parse_err, Error, Result};
use crate::text::{content_lines, field_usize, header_fields};

/// The built-in tight families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Disjoint k-intervals colored 1, every other edge 0.
    S,
    /// All edges 0, or exactly one k-interval colored 1.
    LinearTight,
    /// Edges not containing [k-1] are 0; the rest are free.
    W1Tight,
}

impl Builtin {
    pub fn name(self) -> &'static str {
        match self {
            Builtin::S => "S",
            Builtin::LinearTight => "lineartight",
            Builtin::W1Tight => "w1tight",
        }
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s" => Ok(Builtin::S),
            "lineartight" | "linear" => Ok(Builtin::LinearTight),
            "w1tight" | "w1" => Ok(Builtin::W1Tight),
            _ => Err(Error::InvalidArgument(format!("unknown builtin ideal `{s}`"))),
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finitely described ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealSpec {
    /// Colorings of k-sets with l colors avoiding every basis element.
    Avoid { k: usize, l: usize, basis: Vec<Coloring> },
    Builtin { name: Builtin, k: usize },
}

impl IdealSpec {
    pub fn avoid(k: usize, l: usize, basis: Vec<Coloring>) -> Result<IdealSpec> {
        if k < 2 || !(2..=256).contains(&l) {
            return Err(Error::InvalidArgument(format!("bad parameters k={k} l={l}")));
        }
        if let Some(b) = basis.iter().find(|b| b.k() != k || b.l() != l) {
            return Err(Error::IncompatibleColorings {
                k1: k,
                l1: l,
                k2: b.k(),
                l2: b.l(),
            });
        }
        Ok(IdealSpec::Avoid { k, l, basis })
    }

    pub fn builtin(name: Builtin, k: usize) -> Result<IdealSpec> {
        if k < 2 {
            return Err(Error::InvalidArgument(format!("k={k} must be at least 2")));
        }
        Ok(IdealSpec::Builtin { name, k })
    }

    pub fn k(&self) -> usize {
        match self {
            IdealSpec::Avoid { k, .. } | IdealSpec::Builtin { k, .. } => *k,
        }
    }

    pub fn l(&self) -> usize {
        match self {
            IdealSpec::Avoid { l, .. } => *l,
            IdealSpec::Builtin { .. } => 2,
        }
    }

    /// Parses the spec file format.
    pub fn parse(text: &str) -> Result<IdealSpec> {
        let lines = content_lines(text);
        let Some(&(hno, header)) = lines.first() else {
            return parse_err(1, "empty ideal spec");
        };
        let kind = header.split_whitespace().nth(1).unwrap_or("");
        let fields = header_fields(hno, &header.replacen(kind, "", 1), "ideal")?;
        let k = field_usize(hno, &fields, "k")?;
        match kind {
            "avoid" => {
                let l = field_usize(hno, &fields, "l")?;
                let mut pos = 1;
                let mut basis = Vec::new();
                while pos < lines.len() {
                    basis.push(parse_block(&lines, &mut pos)?);
                }
                IdealSpec::avoid(k, l, basis).or_else(|e| parse_err(hno, e.to_string()))
            }
            "builtin" => {
                let Some(name) = fields.get("name") else {
                    return parse_err(hno, "missing field `name`");
                };
                if lines.len() > 1 {
                    return parse_err(lines[1].0, "builtin specs take no body");
                }
                let name = name.parse().or_else(|e: Error| parse_err(hno, e.to_string()))?;
                IdealSpec::builtin(name, k).or_else(|e| parse_err(hno, e.to_string()))
            }
            _ => parse_err(hno, "expected `ideal avoid` or `ideal builtin`"),
        }
    }

    /// Canonical serialization: the spec file format with the basis sorted.
    pub fn canonical_text(&self) -> String {
        match self {
            IdealSpec::Avoid { k, l, basis } => {
                let mut sorted: Vec<String> = basis.iter().map(|b| b.to_string()).collect();
                sorted.sort();
                sorted.dedup();
                let mut out = format!("ideal avoid k={k} l={l}\n");
                for b in sorted {
                    out.push_str(&b);
                }
                out
            }
            IdealSpec::Builtin { name, k } => format!("ideal builtin name={name} k={k}\n"),
        }
    }

    /// FNV-1a 64-bit hash of the canonical text.
    pub fn digest(&self) -> u64 {
        let mut h = FnvHasher::default();
        h.write(self.canonical_text().as_bytes());
        h.finish()
    }

    pub fn digest_hex(&self) -> String {
        format!("{:016x}", self.digest())
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}
