//! Append-only JSON disk cache.
//!
//! Entries are keyed by a canonical hash of their (kind, key) pair, where the
//! key is any serializable value rendered to canonical JSON. Writes go
//! through a temporary file in the cache directory followed by an atomic
//! rename, so concurrent writers can only ever race to produce identical
//! files. A cache with no directory configured is a no-op.

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::io::Write;
use std::path::PathBuf;

use crate::Result;

/// Disk cache rooted at an optional directory.
#[derive(Debug, Clone, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

/// On-disk entry layout; the stored key guards against hash collisions.
#[derive(Serialize, serde::Deserialize)]
struct Entry {
    schema: u32,
    kind: String,
    key: serde_json::Value,
    value: serde_json::Value,
}

impl Cache {
    /// A cache writing under `dir`, or an inert cache when `dir` is `None`.
    pub fn new(dir: Option<PathBuf>) -> Cache {
        Cache { dir }
    }

    pub fn disabled() -> Cache {
        Cache { dir: None }
    }

    fn path_for(&self, kind: &str, key_json: &str) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let mut hasher = Sha256::new();
        hasher.update(kind.as_bytes());
        hasher.update(b"\0");
        hasher.update(key_json.as_bytes());
        let digest = hasher.finalize();
        let hex: String = digest[..8].iter().map(|b| format!("{b:02x}")).collect();
        Some(dir.join(format!("{kind}-{hex}.json")))
    }

    /// Looks up a cached value; misses on absent dir, absent file, or a
    /// (vanishingly unlikely) hash collision with a different key.
    pub fn get<K: Serialize, V: DeserializeOwned>(&self, kind: &str, key: &K) -> Option<V> {
        let key_json = serde_json::to_value(key).ok()?;
        let path = self.path_for(kind, &key_json.to_string())?;
        let text = std::fs::read_to_string(path).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        if entry.kind != kind || entry.key != key_json {
            return None;
        }
        serde_json::from_value(entry.value).ok()
    }

    /// Stores a value; silently does nothing without a cache directory.
    pub fn put<K: Serialize, V: Serialize>(&self, kind: &str, key: &K, value: &V) -> Result<()> {
        let key_json = serde_json::to_value(key)?;
        let Some(path) = self.path_for(kind, &key_json.to_string()) else {
            return Ok(());
        };
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        let entry = Entry {
            schema: 1,
            kind: kind.to_string(),
            key: key_json,
            value: serde_json::to_value(value)?,
        };
        let mut tmp = tempfile::NamedTempFile::new_in(path.parent().unwrap())?;
        serde_json::to_writer(&mut tmp, &entry)?;
        tmp.write_all(b"\n")?;
        tmp.persist(&path)
            .map_err(|e| crate::Error::Io(e.error))?;
        Ok(())
    }
}
