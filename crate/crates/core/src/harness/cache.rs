//! Append-only JSON-lines cache of `KL` polynomials.
//!
//! One object per line:
//! `{"type":"C","n":3,"lambda":[1,1],"mu":[],"L":"standard","coeffs":[0,0,1,0,1]}`.
//! Stable values carry an extra `"stable":true`.

use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use dashmap::mapref::entry::Entry;
use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::length::LengthFunction;
use crate::partition::Partition;
use crate::poly::QPoly;
use crate::roots::RootType;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    #[serde(rename = "type")]
    pub root_type: RootType,
    pub n: usize,
    pub lambda: Partition,
    pub mu: Partition,
    #[serde(rename = "L")]
    pub length: LengthFunction,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub stable: bool,
}

#[derive(Serialize, Deserialize)]
struct CacheLine {
    #[serde(flatten)]
    key: CacheKey,
    coeffs: QPoly,
}

#[derive(Debug, Default)]
pub struct KlCache {
    map: DashMap<CacheKey, QPoly>,
    file: Option<Mutex<File>>,
    path: Option<PathBuf>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl KlCache {
    /// A cache that lives only in memory.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads every entry of `path` (creating the file if needed) and appends
    /// new entries to it. A line that does not parse, or that contradicts an
    /// earlier line, is reported with its byte offset.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let map = DashMap::new();
        if path.exists() {
            let text = std::fs::read_to_string(&path)?;
            let mut offset = 0u64;
            for line in text.split_inclusive('\n') {
                let here = offset;
                offset += line.len() as u64;
                let body = line.trim_end_matches(['\n', '\r']);
                if body.trim().is_empty() {
                    continue;
                }
                let corrupt = |reason: String| Error::CacheCorrupt {
                    path: path.display().to_string(),
                    offset: here,
                    reason,
                };
                if !line.ends_with('\n') {
                    return Err(corrupt("truncated final line".into()));
                }
                let entry: CacheLine =
                    serde_json::from_str(body).map_err(|e| corrupt(e.to_string()))?;
                if let Some(old) = map.insert(entry.key.clone(), entry.coeffs.clone()) {
                    if old != entry.coeffs {
                        return Err(corrupt(format!(
                            "conflicting values for one key: {old:?} and {:?}",
                            entry.coeffs
                        )));
                    }
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(Self {
            map,
            file: Some(Mutex::new(file)),
            path: Some(path),
            ..Default::default()
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, key: &CacheKey) -> Option<QPoly> {
        self.map.get(key).map(|v| v.clone())
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    /// Returns the cached value or computes, persists and returns it. The
    /// key's shard stays locked while computing, so each key is computed at
    /// most once.
    pub fn get_or_compute(
        &self,
        key: CacheKey,
        compute: impl FnOnce() -> Result<QPoly>,
    ) -> Result<QPoly> {
        match self.map.entry(key) {
            Entry::Occupied(e) => {
                self.hits.fetch_add(1, Ordering::Relaxed);
                Ok(e.get().clone())
            }
            Entry::Vacant(e) => {
                self.misses.fetch_add(1, Ordering::Relaxed);
                let value = compute()?;
                self.append(e.key(), &value)?;
                e.insert(value.clone());
                Ok(value)
            }
        }
    }

    fn append(&self, key: &CacheKey, value: &QPoly) -> Result<()> {
        let Some(file) = &self.file else {
            return Ok(());
        };
        let mut line = serde_json::to_string(&CacheLine {
            key: key.clone(),
            coeffs: value.clone(),
        })?;
        line.push('\n');
        let mut f = file.lock().expect("cache writer poisoned");
        f.write_all(line.as_bytes())?;
        f.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(l: &str) -> CacheKey {
        CacheKey {
            root_type: RootType::C,
            n: 3,
            lambda: l.parse().unwrap(),
            mu: Partition::empty(),
            length: LengthFunction::Standard,
            stable: false,
        }
    }

    #[test]
    fn line_format() {
        let line = CacheLine {
            key: key("1,1"),
            coeffs: QPoly::from_coeffs(vec![0, 0, 1, 0, 1]),
        };
        assert_eq!(
            serde_json::to_string(&line).unwrap(),
            r#"{"type":"C","n":3,"lambda":[1,1],"mu":[],"L":"standard","coeffs":[0,0,1,0,1]}"#
        );
    }

    #[test]
    fn round_trip_and_hits() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("kl.jsonl");
        let p = QPoly::from_coeffs(vec![0, 0, 1, 0, 1]);
        {
            let c = KlCache::open(&path).unwrap();
            assert_eq!(c.get_or_compute(key("1,1"), || Ok(p.clone())).unwrap(), p);
            assert_eq!(c.get_or_compute(key("1,1"), || panic!("cached")).unwrap(), p);
            assert_eq!((c.hits(), c.misses()), (1, 1));
        }
        let c = KlCache::open(&path).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.get(&key("1,1")).unwrap().coeffs(), p.coeffs());
    }

    #[test]
    fn corruption_reports_offset() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("kl.jsonl");
        let good = r#"{"type":"C","n":3,"lambda":[1,1],"mu":[],"L":"standard","coeffs":[0,0,1,0,1]}"#;
        std::fs::write(&path, format!("{good}\n{{not json\n")).unwrap();
        match KlCache::open(&path) {
            Err(Error::CacheCorrupt { offset, .. }) => assert_eq!(offset, good.len() as u64 + 1),
            other => panic!("expected corruption, got {other:?}"),
        }
        std::fs::write(&path, good).unwrap();
        assert!(matches!(KlCache::open(&path), Err(Error::CacheCorrupt { offset: 0, .. })));
        let other = good.replace("[0,0,1,0,1]", "[1]");
        std::fs::write(&path, format!("{good}\n{other}\n")).unwrap();
        assert!(matches!(KlCache::open(&path), Err(Error::CacheCorrupt { .. })));
    }
}
