//! Process-wide memo of reduced Gröbner bases.
//!
//! Keys are content digests of (ring, order, options, generators), so equal
//! inputs built independently share an entry. Readers never block each other;
//! a writer only holds the lock for the insertion itself.
//!
//! When a cache directory is set (or `COXALG_CACHE_DIR` is in the
//! environment) bases are also written there as text, one polynomial per
//! line, in a file named by the key.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock, RwLock};

use sha2::{Digest, Sha256};

use super::buchberger::GbOptions;
use super::order::MonomialOrder;
use crate::poly::{Poly, PolyRing};

type Table = RwLock<HashMap<String, Arc<Vec<Poly>>>>;

fn table() -> &'static Table {
    static T: OnceLock<Table> = OnceLock::new();
    T.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Hex digest identifying a Gröbner basis computation.
pub fn cache_key(gens: &[Poly], ord: &MonomialOrder, opts: &GbOptions) -> String {
    let mut h = Sha256::new();
    if let Some(p) = gens.first() {
        h.update(format!("{:?}", p.ring()).as_bytes());
    }
    h.update(format!("|{ord:?}|{:?}|{}|{}", opts.weights, opts.truncate, if opts.truncate { opts.max_degree } else { 0 }).as_bytes());
    for g in gens {
        h.update(b"\n");
        h.update(g.to_string().as_bytes());
    }
    hex::encode(h.finalize())
}

pub fn lookup(key: &str) -> Option<Arc<Vec<Poly>>> {
    table().read().expect("gb cache poisoned").get(key).cloned()
}

pub fn store(key: String, gb: Arc<Vec<Poly>>) {
    table().write().expect("gb cache poisoned").insert(key, gb);
}

/// Drops every memoised basis.
pub fn clear() {
    table().write().expect("gb cache poisoned").clear();
}

pub fn len() -> usize {
    table().read().expect("gb cache poisoned").len()
}

fn dir_slot() -> &'static RwLock<Option<PathBuf>> {
    static D: OnceLock<RwLock<Option<PathBuf>>> = OnceLock::new();
    D.get_or_init(|| RwLock::new(std::env::var_os("COXALG_CACHE_DIR").map(PathBuf::from)))
}

/// Directory for persisted bases; `None` keeps the cache in memory only.
pub fn set_disk_dir(dir: Option<PathBuf>) {
    *dir_slot().write().expect("gb cache poisoned") = dir;
}

pub fn disk_dir() -> Option<PathBuf> {
    dir_slot().read().expect("gb cache poisoned").clone()
}

fn path_for(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.gb"))
}

/// Reads a persisted basis. Unreadable or malformed files count as misses.
pub fn disk_lookup(key: &str, ring: &Arc<PolyRing>) -> Option<Vec<Poly>> {
    lookup_in(&disk_dir()?, key, ring)
}

fn lookup_in(dir: &Path, key: &str, ring: &Arc<PolyRing>) -> Option<Vec<Poly>> {
    let text = std::fs::read_to_string(path_for(dir, key)).ok()?;
    text.lines().filter(|l| !l.is_empty()).map(|l| ring.parse(l).ok()).collect()
}

/// Writes a basis to the cache directory; failures are ignored.
pub fn disk_store(key: &str, gb: &[Poly]) {
    if let Some(dir) = disk_dir() {
        store_in(&dir, key, gb);
    }
}

fn store_in(dir: &Path, key: &str, gb: &[Poly]) {
    if std::fs::create_dir_all(dir).is_err() {
        return;
    }
    let mut text = String::new();
    for g in gb {
        text.push_str(&g.to_string());
        text.push('\n');
    }
    // write then rename so concurrent readers never see a partial file
    let tmp = dir.join(format!("{key}.{}.tmp", std::process::id()));
    if std::fs::write(&tmp, text).is_ok() {
        let _ = std::fs::rename(&tmp, path_for(dir, key));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycField;

    #[test]
    fn disk_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let r = PolyRing::new(&["x", "y"], CycField::get(12));
        let gb = vec![r.parse("x^2 - z^3*y").unwrap(), r.parse("1/2*y^3 + (z - 1)*x").unwrap()];
        store_in(dir.path(), "k", &gb);
        assert_eq!(lookup_in(dir.path(), "k", &r).unwrap(), gb);
        assert!(lookup_in(dir.path(), "missing", &r).is_none());
        std::fs::write(dir.path().join("bad.gb"), "x^^2\n").unwrap();
        assert!(lookup_in(dir.path(), "bad", &r).is_none());
    }
}
