//! On-disk store for reduced Gröbner bases, one JSON file per key.

use std::cell::Cell;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use dnc_core::polycore::BasisStore;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    version: u32,
    key: String,
    basis: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CacheError {
    #[error("corrupt cache file {path}: {reason}")]
    CorruptCache { path: String, reason: String },
}

#[derive(Debug)]
pub struct DiskCache {
    dir: PathBuf,
    hits: Cell<usize>,
    misses: Cell<usize>,
    warnings: Cell<usize>,
}

/// `$DNC_CACHE_DIR`, else `$XDG_CACHE_HOME/dnc`, else `~/.cache/dnc`.
pub fn default_cache_dir() -> PathBuf {
    if let Some(d) = std::env::var_os("DNC_CACHE_DIR") {
        return PathBuf::from(d);
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return Path::new(&d).join("dnc");
    }
    match std::env::var_os("HOME") {
        Some(h) => Path::new(&h).join(".cache").join("dnc"),
        None => std::env::temp_dir().join("dnc-cache"),
    }
}

pub fn cache_key_hash(key: &str) -> String {
    let digest = Sha256::digest(key.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DiskCache {
            dir: dir.into(),
            hits: Cell::new(0),
            misses: Cell::new(0),
            warnings: Cell::new(0),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn hits(&self) -> usize {
        self.hits.get()
    }

    pub fn misses(&self) -> usize {
        self.misses.get()
    }

    /// Corrupt or mismatched files seen so far.
    pub fn warnings(&self) -> usize {
        self.warnings.get()
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", cache_key_hash(key)))
    }

    fn read(&self, key: &str) -> Result<Option<Vec<String>>, CacheError> {
        let path = self.path_for(key);
        let Ok(bytes) = fs::read(&path) else {
            return Ok(None);
        };
        let corrupt = |reason: String| CacheError::CorruptCache {
            path: path.display().to_string(),
            reason,
        };
        let entry: Entry = serde_json::from_slice(&bytes).map_err(|e| corrupt(e.to_string()))?;
        if entry.version != CACHE_VERSION {
            return Err(corrupt(format!("version {} (expected {CACHE_VERSION})", entry.version)));
        }
        if entry.key != key {
            return Err(corrupt("key mismatch".into()));
        }
        Ok(Some(entry.basis))
    }

    fn write(&self, key: &str, basis: &[String]) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = Entry {
            version: CACHE_VERSION,
            key: key.to_string(),
            basis: basis.to_vec(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(&serde_json::to_vec(&entry)?)?;
        tmp.persist(self.path_for(key)).map_err(|e| e.error)?;
        Ok(())
    }
}

impl BasisStore for DiskCache {
    fn lookup(&self, key: &str) -> Option<Vec<String>> {
        match self.read(key) {
            Ok(Some(b)) => {
                self.hits.set(self.hits.get() + 1);
                Some(b)
            }
            Ok(None) => {
                self.misses.set(self.misses.get() + 1);
                None
            }
            Err(e) => {
                eprintln!("warning: {e}; recomputing");
                self.warnings.set(self.warnings.get() + 1);
                self.misses.set(self.misses.get() + 1);
                None
            }
        }
    }

    fn store(&self, key: &str, basis: &[String]) {
        if let Err(e) = self.write(key, basis) {
            eprintln!("warning: could not write cache entry in {}: {e}", self.dir.display());
        }
    }
}
