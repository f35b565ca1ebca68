//! Content-addressed on-disk cache for expensive per-group results.
//!
//! An entry is keyed by a kind string (what was computed) plus a group
//! fingerprint: order, sorted element-order multiset, sorted conjugacy-class
//! sizes, abelianization, and a SHA-256 of the canonical multiplication
//! table. A hit requires the stored fingerprint to match in full — same
//! file name with a different table hash is treated as a miss — and entries
//! written by other cache versions are ignored. Writes go through a
//! temporary file and an atomic rename.

use std::fs;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use torsion_obstruct::chartab::CharacterTable;
use torsion_obstruct::cyclotomic::Cyclotomic;
use torsion_obstruct::group::conjugacy::ConjugacyData;
use torsion_obstruct::group::isomorphism::abelian_invariants;
use torsion_obstruct::{Error, FiniteGroup, Result};

pub const CACHE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub order_multiset: Vec<usize>,
    pub class_sizes: Vec<usize>,
    pub abelianization: Vec<usize>,
    pub table_hash: String,
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let classes = ConjugacyData::new(g);
    Fingerprint {
        order: g.order(),
        order_multiset: g.order_multiset(),
        class_sizes: classes.sizes_sorted(),
        abelianization: abelian_invariants(g),
        table_hash: hex_digest(&g.table_bytes()),
    }
}

fn hex_digest(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Serialize, Deserialize)]
struct Entry {
    version: u32,
    kind: String,
    fingerprint: Fingerprint,
    payload: serde_json::Value,
}

/// A cache rooted at a directory, or disabled (all gets miss, puts drop).
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    /// Open the cache, warning and disabling on an unusable directory.
    pub fn open(dir: Option<PathBuf>) -> Self {
        let Some(dir) = dir else {
            return Cache::disabled();
        };
        if let Err(e) = fs::create_dir_all(&dir) {
            eprintln!("warning: cache disabled: cannot create {}: {e}", dir.display());
            return Cache::disabled();
        }
        // probe writability up front so later puts can fail silently
        let probe = dir.join(".write-probe");
        if let Err(e) = fs::write(&probe, b"") {
            eprintln!("warning: cache disabled: {} not writable: {e}", dir.display());
            return Cache::disabled();
        }
        let _ = fs::remove_file(&probe);
        Cache { dir: Some(dir) }
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }

    fn path_for(&self, kind: &str, fp: &Fingerprint) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let id = serde_json::to_string(fp).ok()?;
        let short = &hex_digest(format!("{kind}|{id}").as_bytes())[..24];
        Some(dir.join(format!("{short}.json")))
    }

    /// Fetch a payload; corrupt, stale, or mismatching entries are misses.
    pub fn get(&self, kind: &str, fp: &Fingerprint) -> Option<serde_json::Value> {
        let path = self.path_for(kind, fp)?;
        let text = fs::read_to_string(path).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        if entry.version != CACHE_VERSION || entry.kind != kind || &entry.fingerprint != fp {
            return None;
        }
        Some(entry.payload)
    }

    /// Store a payload atomically; failures only disable this one write.
    pub fn put(&self, kind: &str, fp: &Fingerprint, payload: serde_json::Value) {
        let Some(path) = self.path_for(kind, fp) else {
            return;
        };
        let entry = Entry {
            version: CACHE_VERSION,
            kind: kind.to_string(),
            fingerprint: fp.clone(),
            payload,
        };
        let Ok(text) = serde_json::to_string_pretty(&entry) else {
            return;
        };
        let tmp = path.with_extension("tmp");
        if fs::write(&tmp, text).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }
}

/// Serializable form of a character table: conductor, class data, and the
/// integer coefficient vectors of every value.
#[derive(Serialize, Deserialize)]
pub struct StoredTable {
    pub conductor: usize,
    pub class_sizes: Vec<usize>,
    /// image of each class under squaring, for a structural sanity check
    pub power_map: Vec<usize>,
    pub rows: Vec<StoredRow>,
}

#[derive(Serialize, Deserialize)]
pub struct StoredRow {
    pub degree: usize,
    pub values: Vec<Vec<i128>>,
}

pub fn store_table(t: &CharacterTable, g: &FiniteGroup) -> StoredTable {
    StoredTable {
        conductor: t.conductor,
        class_sizes: t.classes.sizes.clone(),
        power_map: t.classes.power_map(g, 2),
        rows: t
            .rows
            .iter()
            .map(|r| StoredRow {
                degree: r.degree,
                values: r.values.iter().map(|v| v.coeffs.clone()).collect(),
            })
            .collect(),
    }
}

/// Rebuild a character table from its stored form. Class data is recomputed
/// from the group (the fingerprint pins the exact table, so the canonical
/// class ordering is reproduced); the stored class sizes and power map must
/// agree or the entry is rejected.
pub fn restore_table(g: &FiniteGroup, stored: StoredTable) -> Result<CharacterTable> {
    let classes = ConjugacyData::new(g);
    if stored.class_sizes != classes.sizes
        || stored.power_map != classes.power_map(g, 2)
        || stored.conductor != g.exponent()
        || stored.rows.len() != classes.num_classes()
    {
        return Err(Error::invalid("stored character table does not match group"));
    }
    let conductor = stored.conductor;
    let width = torsion_obstruct::cyclotomic::euler_phi(conductor);
    let mut rows = Vec::with_capacity(stored.rows.len());
    for r in stored.rows {
        if r.values.len() != classes.num_classes() || r.values.iter().any(|v| v.len() != width) {
            return Err(Error::invalid("stored character row has wrong shape"));
        }
        rows.push(torsion_obstruct::chartab::Character {
            degree: r.degree,
            values: r
                .values
                .into_iter()
                .map(|coeffs| Cyclotomic { conductor, coeffs })
                .collect(),
        });
    }
    Ok(CharacterTable {
        conductor,
        classes,
        rows,
    })
}

/// Character table via the cache when one is configured.
pub fn character_table_cached(cache: &Cache, g: &FiniteGroup) -> Result<CharacterTable> {
    if !cache.is_enabled() {
        return CharacterTable::new(g);
    }
    let fp = fingerprint(g);
    if let Some(payload) = cache.get("chartab", &fp) {
        if let Ok(stored) = serde_json::from_value::<StoredTable>(payload) {
            if let Ok(t) = restore_table(g, stored) {
                return Ok(t);
            }
        }
        // corrupt payload: fall through and recompute
    }
    let t = CharacterTable::new(g)?;
    if let Ok(payload) = serde_json::to_value(store_table(&t, g)) {
        cache.put("chartab", &fp, payload);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use torsion_obstruct::group::constructors::make_dicyclic;

    #[test]
    fn round_trip_preserves_table() {
        let g = make_dicyclic(3).unwrap();
        let t = CharacterTable::new(&g).unwrap();
        let stored = store_table(&t, &g);
        let back = restore_table(&g, stored).unwrap();
        assert_eq!(back.conductor, t.conductor);
        assert_eq!(back.rows, t.rows);
    }

    #[test]
    fn mismatched_group_rejected() {
        let g = make_dicyclic(3).unwrap();
        let h = make_dicyclic(4).unwrap();
        let t = CharacterTable::new(&g).unwrap();
        assert!(restore_table(&h, store_table(&t, &g)).is_err());
    }
}
