//! Content-addressed on-disk cache of rendered command output.
//!
//! Entry layout: a header line `sl3jones-cache <sha256(body)>`, the canonical
//! key on the second line, then the body bytes verbatim.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

const MAGIC: &str = "sl3jones-cache";

/// Bumped whenever rendered output could change for the same job.
pub const CACHE_FORMAT: u32 = 1;

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
    version: String,
}

fn sha_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self::with_version(dir, format!("{}+{}", env!("CARGO_PKG_VERSION"), CACHE_FORMAT))
    }

    pub fn with_version(dir: impl Into<PathBuf>, version: impl Into<String>) -> Self {
        Cache { dir: dir.into(), version: version.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Full key: artifact version plus the canonical job string.
    pub fn full_key(&self, canonical: &str) -> String {
        format!("v={};{canonical}", self.version)
    }

    fn path_for(&self, full_key: &str) -> PathBuf {
        self.dir.join(format!("{}.out", sha_hex(full_key.as_bytes())))
    }

    /// Returns the stored bytes, or `None` on a miss or an unusable entry.
    pub fn lookup(&self, canonical: &str) -> Option<Vec<u8>> {
        let key = self.full_key(canonical);
        let path = self.path_for(&key);
        let raw = match fs::read(&path) {
            Ok(raw) => raw,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return None,
            Err(e) => {
                log::warn!("ignoring unreadable cache entry {}: {e}", path.display());
                return None;
            }
        };
        match parse_entry(&raw, &key) {
            Some(body) => Some(body.to_vec()),
            None => {
                log::warn!("ignoring corrupt cache entry {}", path.display());
                None
            }
        }
    }

    /// Writes through a temporary file and renames it into place.
    pub fn store(&self, canonical: &str, body: &[u8]) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let key = self.full_key(canonical);
        let path = self.path_for(&key);
        let tmp = self.dir.join(format!(
            ".{}.{}.tmp",
            path.file_name().and_then(|n| n.to_str()).unwrap_or("entry"),
            std::process::id()
        ));
        {
            let mut f = fs::File::create(&tmp)?;
            writeln!(f, "{MAGIC} {}", sha_hex(body))?;
            writeln!(f, "{key}")?;
            f.write_all(body)?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)
    }
}

fn parse_entry<'a>(raw: &'a [u8], key: &str) -> Option<&'a [u8]> {
    let nl = raw.iter().position(|&b| b == b'\n')?;
    let header = std::str::from_utf8(&raw[..nl]).ok()?;
    let digest = header.strip_prefix(MAGIC)?.strip_prefix(' ')?;
    let rest = &raw[nl + 1..];
    let nl2 = rest.iter().position(|&b| b == b'\n')?;
    if &rest[..nl2] != key.as_bytes() {
        return None;
    }
    let body = &rest[nl2 + 1..];
    (sha_hex(body) == digest).then_some(body)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_misses() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        assert_eq!(cache.lookup("cmd=jones;b=3"), None);
        let body = b"1*q^24 + 1*q^30\n";
        cache.store("cmd=jones;b=3", body).unwrap();
        assert_eq!(cache.lookup("cmd=jones;b=3").unwrap(), body);
        assert_eq!(cache.lookup("cmd=jones;b=5"), None);
        let bumped = Cache::with_version(dir.path(), "999");
        assert_eq!(bumped.lookup("cmd=jones;b=3"), None);
    }

    #[test]
    fn corrupt_entries_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        cache.store("k", b"payload").unwrap();
        let path = cache.path_for(&cache.full_key("k"));
        let mut raw = fs::read(&path).unwrap();
        let last = raw.len() - 1;
        raw[last] ^= 0x20;
        fs::write(&path, &raw).unwrap();
        assert_eq!(cache.lookup("k"), None);
        fs::write(&path, b"garbage").unwrap();
        assert_eq!(cache.lookup("k"), None);
        cache.store("k", b"payload").unwrap();
        assert_eq!(cache.lookup("k").unwrap(), b"payload");
    }
}
