//! On-disk cache of Kostant partition values.
//!
//! The file is JSON: a format tag, a version, a digest identifying the root
//! datum, the entries, and a digest of the entries. Anything that does not
//! match exactly (unknown version, other datum, bad digest, unparsable file)
//! is ignored and treated as an empty cache.

use std::fs;
use std::io::Write;
use std::path::Path;

use satake_core::RootDatum;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const FORMAT: &str = "satake-partition-cache";
pub const VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    format: String,
    version: u32,
    datum: String,
    checksum: String,
    entries: Vec<(Vec<i64>, u64)>,
}

/// Digest of the lattice data only; the display name does not matter.
pub fn datum_digest(d: &RootDatum) -> String {
    let canonical = serde_json::json!({
        "n": d.n,
        "roots": d.simple_roots,
        "coroots": d.simple_coroots,
    });
    hex::encode(Sha256::digest(canonical.to_string().as_bytes()))
}

fn entries_digest(entries: &[(Vec<i64>, u64)]) -> String {
    let body = serde_json::to_string(entries).expect("entries serialize");
    hex::encode(Sha256::digest(body.as_bytes()))
}

#[derive(Debug, PartialEq, Eq)]
pub enum Loaded {
    Entries(Vec<(Vec<i64>, u64)>),
    Missing,
    Rejected(String),
}

pub fn load(path: &Path, datum: &RootDatum) -> Loaded {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Loaded::Missing,
        Err(e) => return Loaded::Rejected(e.to_string()),
    };
    let file: CacheFile = match serde_json::from_str(&text) {
        Ok(f) => f,
        Err(e) => return Loaded::Rejected(format!("unparsable: {e}")),
    };
    if file.format != FORMAT || file.version != VERSION {
        return Loaded::Rejected(format!("unknown format {} v{}", file.format, file.version));
    }
    if file.datum != datum_digest(datum) {
        return Loaded::Rejected("written for a different root datum".into());
    }
    if file.checksum != entries_digest(&file.entries) {
        return Loaded::Rejected("checksum mismatch".into());
    }
    Loaded::Entries(file.entries)
}

/// Writes through a temporary file and a rename so readers never observe a
/// partial file.
pub fn save(path: &Path, datum: &RootDatum, entries: Vec<(Vec<i64>, u64)>) -> std::io::Result<()> {
    let file = CacheFile {
        format: FORMAT.to_string(),
        version: VERSION,
        datum: datum_digest(datum),
        checksum: entries_digest(&entries),
        entries,
    };
    let body = serde_json::to_string(&file).expect("cache serializes");
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(body.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}
