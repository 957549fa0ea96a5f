use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ideals::growth::{growth, GrowthOptions, GrowthRecord, LevelCount};
use crate::ideals::spec::IdealSpec;

/// Tab-separated store of exact counts: `digest n count exact`.
#[derive(Debug, Clone)]
pub struct GrowthCache {
    path: PathBuf,
}

impl GrowthCache {
    pub fn new(path: impl AsRef<Path>) -> Self {
        GrowthCache {
            path: path.as_ref().to_path_buf(),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Exact counts stored for `digest`, keyed by n. A missing file is empty.
    pub fn load(&self, digest: &str) -> Result<BTreeMap<usize, BigUint>> {
        let text = match std::fs::read_to_string(&self.path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(BTreeMap::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split('\t').collect();
            let bad = || Error::Parse {
                line: i + 1,
                msg: "expected digest, n, count, exact".into(),
            };
            if f.len() != 4 {
                return Err(bad());
            }
            if f[0] != digest || f[3] != "true" {
                continue;
            }
            let n: usize = f[1].parse().map_err(|_| bad())?;
            let c: BigUint = f[2].parse().map_err(|_| bad())?;
            out.insert(n, c);
        }
        Ok(out)
    }

    /// Appends the exact levels of `record` not already stored.
    pub fn store(&self, record: &GrowthRecord) -> Result<()> {
        let known = self.load(&record.digest)?;
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        for l in &record.levels {
            if let (true, Some(c)) = (l.exact, &l.count) {
                if !known.contains_key(&l.n) {
                    writeln!(file, "{}\t{}\t{}\ttrue", record.digest, l.n, c)?;
                }
            }
        }
        Ok(())
    }
}

/// Like [`growth`], but answers from the cache when every level 1..=n_max
/// is stored, and records fresh exact levels otherwise.
pub fn growth_cached(spec: &IdealSpec, opts: GrowthOptions, cache: Option<&GrowthCache>) -> Result<GrowthRecord> {
    let Some(cache) = cache else {
        return growth(spec, opts);
    };
    let digest = spec.digest_hex();
    let known = cache.load(&digest)?;
    if (1..=opts.n_max).all(|n| known.contains_key(&n)) {
        return Ok(GrowthRecord {
            digest,
            k: spec.k(),
            levels: (1..=opts.n_max)
                .map(|n| LevelCount {
                    n,
                    count: Some(known[&n].clone()),
                    exact: true,
                })
                .collect(),
        });
    }
    let record = growth(spec, opts)?;
    cache.store(&record)?;
    Ok(record)
}
