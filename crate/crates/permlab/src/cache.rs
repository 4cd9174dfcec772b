//! Append-only cache of class counts.
//!
//! Enumerations are expensive and their results never change, so counts
//! are persisted in a plain text file, one self-describing record per
//! line:
//!
//! ```text
//! basis=1,3,2;2,1,3	n=5	count=42
//! ```
//!
//! Fields are tab separated. The basis is in its canonical text form
//! (patterns canonically ordered, `;`-separated), so a class has exactly
//! one spelling. The file is only ever appended to; re-reading after a
//! crash mid-append at worst loses the torn final line, which the loader
//! rejects with its line number.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use crate::config::EngineConfig;
use crate::enumerate::{count_avoiders, Basis, CountSequence};
use crate::error::{Error, Result};

/// In-memory view of a cache file, keyed by canonical basis text and `n`.
#[derive(Debug)]
pub struct CountCache {
    path: PathBuf,
    entries: BTreeMap<(String, usize), BigUint>,
}

impl CountCache {
    /// Opens `path`, loading any existing records. A missing file is an
    /// empty cache; it is created on first append.
    pub fn open(path: impl AsRef<Path>) -> Result<CountCache> {
        let path = path.as_ref().to_path_buf();
        let mut entries = BTreeMap::new();
        if path.exists() {
            let text = std::fs::read_to_string(&path)?;
            for (lineno, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let parsed = Self::parse_line(line).ok_or_else(|| Error::FileFormat {
                    path: path.display().to_string(),
                    line: lineno + 1,
                    reason: format!("malformed cache record {line:?}"),
                })?;
                entries.insert((parsed.0, parsed.1), parsed.2);
            }
        }
        Ok(CountCache { path, entries })
    }

    fn parse_line(line: &str) -> Option<(String, usize, BigUint)> {
        let mut basis = None;
        let mut n = None;
        let mut count = None;
        for field in line.split('\t') {
            let (key, value) = field.split_once('=')?;
            match key {
                "basis" => basis = Some(value.to_string()),
                "n" => n = value.parse::<usize>().ok(),
                "count" => count = value.parse::<BigUint>().ok(),
                _ => return None,
            }
        }
        Some((basis?, n?, count?))
    }

    /// The cached count for `(basis, n)`, if present.
    pub fn lookup(&self, basis: &Basis, n: usize) -> Option<&BigUint> {
        self.entries.get(&(basis.canonical_text(), n))
    }

    /// Number of records held.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// True when no records are held.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Appends any terms of `seq` not already present, in one write.
    pub fn record(&mut self, seq: &CountSequence) -> Result<()> {
        let key = seq.basis.canonical_text();
        let mut block = String::new();
        for (i, term) in seq.terms.iter().enumerate() {
            let n = i + 1;
            if !self.entries.contains_key(&(key.clone(), n)) {
                writeln!(block, "basis={key}\tn={n}\tcount={term}").expect("string write");
                self.entries.insert((key.clone(), n), term.clone());
            }
        }
        if !block.is_empty() {
            let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
            file.write_all(block.as_bytes())?;
        }
        Ok(())
    }
}

/// Serves `count_avoiders` through an optional [`CountCache`].
///
/// With a cache attached, a request fully covered by cached terms does no
/// enumeration, and freshly computed terms are appended for next time —
/// so re-running a count is idempotent: same report, no new records.
pub struct SequenceSource<'a> {
    cache: Option<&'a mut CountCache>,
    cfg: &'a EngineConfig,
}

impl<'a> SequenceSource<'a> {
    /// A source that always enumerates.
    pub fn uncached(cfg: &'a EngineConfig) -> Self {
        SequenceSource { cache: None, cfg }
    }

    /// A source backed by `cache`.
    pub fn cached(cache: &'a mut CountCache, cfg: &'a EngineConfig) -> Self {
        SequenceSource { cache: Some(cache), cfg }
    }

    /// The engine configuration this source enumerates under.
    pub fn config(&self) -> &EngineConfig {
        self.cfg
    }

    /// The counting sequence of `basis` up to `max_n`.
    pub fn counts(&mut self, basis: &Basis, max_n: usize) -> Result<CountSequence> {
        if let Some(cache) = self.cache.as_deref() {
            let cached: Vec<&BigUint> =
                (1..=max_n).filter_map(|n| cache.lookup(basis, n)).collect();
            if cached.len() == max_n {
                return Ok(CountSequence {
                    basis: basis.clone(),
                    terms: cached.into_iter().cloned().collect(),
                });
            }
        }
        let seq = count_avoiders(basis, max_n, self.cfg)?;
        if let Some(cache) = self.cache.as_deref_mut() {
            cache.record(&seq)?;
        }
        Ok(seq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_the_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("counts.cache");
        let basis = Basis::parse("132").unwrap();
        let cfg = EngineConfig::default();

        {
            let mut cache = CountCache::open(&path).unwrap();
            assert!(cache.is_empty());
            let seq = count_avoiders(&basis, 5, &cfg).unwrap();
            cache.record(&seq).unwrap();
            assert_eq!(cache.len(), 5);
        }
        let cache = CountCache::open(&path).unwrap();
        assert_eq!(cache.len(), 5);
        assert_eq!(cache.lookup(&basis, 5), Some(&BigUint::from(42u32)));
        assert_eq!(cache.lookup(&basis, 6), None);

        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.lines().any(|l| l == "basis=1,3,2\tn=5\tcount=42"));
    }

    #[test]
    fn appends_only_missing_terms() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("counts.cache");
        let basis = Basis::parse("132").unwrap();
        let cfg = EngineConfig::default();
        let mut cache = CountCache::open(&path).unwrap();

        let seq = count_avoiders(&basis, 4, &cfg).unwrap();
        cache.record(&seq).unwrap();
        let before = std::fs::read_to_string(&path).unwrap();
        cache.record(&seq).unwrap();
        assert_eq!(before, std::fs::read_to_string(&path).unwrap());

        let longer = count_avoiders(&basis, 6, &cfg).unwrap();
        cache.record(&longer).unwrap();
        let after = std::fs::read_to_string(&path).unwrap();
        assert!(after.starts_with(&before), "cache must be append-only");
        assert_eq!(after.lines().count(), 6);
    }

    #[test]
    fn source_consults_the_cache_before_enumerating() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("counts.cache");
        let basis = Basis::parse("132").unwrap();
        let cfg = EngineConfig::default();

        // Seed the cache with a deliberately wrong value; a covered
        // request must come straight from the cache and reproduce it.
        std::fs::write(&path, "basis=1,3,2\tn=1\tcount=999\n").unwrap();
        let mut cache = CountCache::open(&path).unwrap();
        let mut source = SequenceSource::cached(&mut cache, &cfg);
        let seq = source.counts(&basis, 1).unwrap();
        assert_eq!(seq.term(1), &BigUint::from(999u32));

        // A partially covered request re-enumerates and appends what is
        // missing; the seeded n=1 record keeps its original value.
        let seq = source.counts(&basis, 3).unwrap();
        assert_eq!(seq.term(3), &BigUint::from(5u32));
        drop(source);
        assert_eq!(cache.len(), 3);
        assert_eq!(cache.lookup(&basis, 1), Some(&BigUint::from(999u32)));
    }

    #[test]
    fn malformed_lines_are_rejected_with_their_number() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("counts.cache");
        std::fs::write(&path, "basis=1,3,2\tn=1\tcount=1\nnot a record\n").unwrap();
        match CountCache::open(&path) {
            Err(Error::FileFormat { line: 2, .. }) => {}
            other => panic!("expected a format error on line 2, got {other:?}"),
        }
    }
}
