//! Append-only JSON-lines cache of exact f-values.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fsearch::{FResult, SearchStats, SearchStatus};
use crate::indset::Collection;

pub const CACHE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub f: usize,
    pub witness: Option<Collection>,
    pub stats: SearchStats,
    pub version: u32,
}

impl CacheRecord {
    pub fn from_result(r: &FResult) -> Self {
        CacheRecord {
            graph: r.graph.clone(),
            n: r.n,
            m: r.m,
            f: r.f_value,
            witness: r.witness.clone(),
            stats: r.stats,
            version: CACHE_VERSION,
        }
    }

    pub fn into_result(self) -> FResult {
        FResult {
            graph: self.graph,
            n: self.n,
            m: self.m,
            f_value: self.f,
            status: SearchStatus::Exact,
            witness: self.witness,
            stats: self.stats,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ResultCache {
    path: PathBuf,
}

impl ResultCache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        ResultCache { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Records of the current version; other versions and unparsable lines
    /// are skipped. A missing file is an empty cache.
    pub fn load(&self) -> Result<Vec<CacheRecord>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        file.lock_shared()?;
        let mut out = Vec::new();
        for line in BufReader::new(&file).lines() {
            let line = line?;
            if let Ok(rec) = serde_json::from_str::<CacheRecord>(&line) {
                if rec.version == CACHE_VERSION {
                    out.push(rec);
                }
            }
        }
        file.unlock()?;
        Ok(out)
    }

    /// The latest record for `(graph, n, m)`.
    pub fn lookup(&self, graph: &str, n: usize, m: usize) -> Result<Option<FResult>> {
        Ok(self
            .load()?
            .into_iter()
            .rev()
            .find(|r| r.graph == graph && r.n == n && r.m == m)
            .map(CacheRecord::into_result))
    }

    /// Appends exact results under an exclusive lock; returns whether a
    /// record was written.
    pub fn append(&self, r: &FResult) -> Result<bool> {
        if !r.is_exact() {
            return Ok(false);
        }
        let mut line = serde_json::to_string(&CacheRecord::from_result(r))?;
        line.push('\n');
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        file.lock()?;
        let written = file.write_all(line.as_bytes()).and_then(|_| file.flush());
        file.unlock()?;
        written?;
        Ok(true)
    }

    pub fn clear(&self) -> Result<()> {
        match std::fs::remove_file(&self.path) {
            Err(e) if e.kind() != std::io::ErrorKind::NotFound => Err(e.into()),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fsearch::{f_value, SearchConfig};
    use crate::graph::Degree2Graph;

    fn temp_path(tag: &str) -> PathBuf {
        std::env::temp_dir().join(format!("rainbow-cache-{tag}-{}.jsonl", std::process::id()))
    }

    #[test]
    fn round_trip() {
        let cache = ResultCache::new(temp_path("rt"));
        cache.clear().unwrap();
        let g: Degree2Graph = "C6".parse().unwrap();
        let r = f_value(&g, 3, 3, &SearchConfig::sequential()).unwrap();
        assert!(cache.append(&r).unwrap());
        let back = cache.lookup("C6", 3, 3).unwrap().unwrap();
        assert_eq!(back, r);
        assert!(cache.lookup("C6", 3, 2).unwrap().is_none());
        let text = std::fs::read_to_string(cache.path()).unwrap();
        let v: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        for key in ["graph", "n", "m", "f", "witness", "stats", "version"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        cache.clear().unwrap();
    }

    #[test]
    fn skips_foreign_lines() {
        let cache = ResultCache::new(temp_path("foreign"));
        std::fs::write(cache.path(), "not json\n{\"graph\":\"C5\",\"n\":2,\"m\":2,\"f\":2,\"witness\":null,\"stats\":{\"nodes\":0,\"canonical_classes\":0,\"group_order\":1,\"wall_ms\":0},\"version\":99}\n").unwrap();
        assert!(cache.load().unwrap().is_empty());
        cache.clear().unwrap();
    }
}
