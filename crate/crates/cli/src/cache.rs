//! On-disk cache of boundary-matrix Smith forms.
//!
//! Each entry is a JSON envelope `{ payload, checksum }` where the checksum is
//! the SHA-256 of the serialized payload. Entries that fail to parse, fail the
//! checksum, or describe a different matrix are reported and recomputed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use injword::homology::{smith_normal_form, SmithForm, SparseIntMatrix};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Bumped whenever the basis ordering (and hence every boundary matrix) changes.
pub const BASIS_ORDER_VERSION: u32 = 1;

#[derive(Debug, Default, Serialize)]
pub struct CacheStats {
    pub hits: usize,
    pub misses: usize,
    pub recomputed: usize,
}

#[derive(Debug)]
pub struct SnfCache {
    dir: PathBuf,
    hits: AtomicUsize,
    misses: AtomicUsize,
    recomputed: AtomicUsize,
}

#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    payload: T,
    checksum: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct SnfPayload {
    basis_order_version: u32,
    n: usize,
    labels: usize,
    degree: usize,
    rows: usize,
    cols: usize,
    matrix_sha256: String,
    diag: Vec<String>,
}

/// SHA-256 of the shape and the sorted `(row, col, value)` triplets.
pub fn matrix_hash(m: &SparseIntMatrix) -> String {
    let mut h = Sha256::new();
    h.update(format!("{}x{};", m.rows(), m.cols()));
    for (r, c, v) in m.triplets() {
        h.update(format!("{r},{c},{v};"));
    }
    hex::encode(h.finalize())
}

fn checksum<T: Serialize>(payload: &T) -> String {
    hex::encode(Sha256::digest(
        serde_json::to_vec(payload).expect("payload serializes"),
    ))
}

enum Lookup<T> {
    Hit(T),
    Missing,
    Corrupt(String),
}

impl SnfCache {
    pub fn open(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(SnfCache {
            dir,
            hits: AtomicUsize::new(0),
            misses: AtomicUsize::new(0),
            recomputed: AtomicUsize::new(0),
        })
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            recomputed: self.recomputed.load(Ordering::Relaxed),
        }
    }

    /// The Smith form of `m`, the boundary in `degree` of the complex on `n`
    /// letters with `labels` labels.
    pub fn smith(&self, n: usize, labels: usize, degree: usize, m: &SparseIntMatrix) -> SmithForm {
        let hash = matrix_hash(m);
        let path = self.dir.join(format!(
            "snf-v{BASIS_ORDER_VERSION}-n{n}-l{labels}-d{degree}-{}.json",
            &hash[..16]
        ));
        let want = |p: &SnfPayload| {
            p.basis_order_version == BASIS_ORDER_VERSION
                && (p.n, p.labels, p.degree, p.rows, p.cols)
                    == (n, labels, degree, m.rows(), m.cols())
                && p.matrix_sha256 == hash
        };
        match read_entry::<SnfPayload>(&path) {
            Lookup::Hit(p) if want(&p) => match decode_diag(&p) {
                Some(form) => {
                    self.hits.fetch_add(1, Ordering::Relaxed);
                    return form;
                }
                None => self.corrupt(&path, "diagonal is not a divisibility chain"),
            },
            Lookup::Hit(_) => self.corrupt(&path, "entry describes a different matrix"),
            Lookup::Corrupt(why) => self.corrupt(&path, &why),
            Lookup::Missing => {
                self.misses.fetch_add(1, Ordering::Relaxed);
            }
        }
        let form = smith_normal_form(m, false);
        let payload = SnfPayload {
            basis_order_version: BASIS_ORDER_VERSION,
            n,
            labels,
            degree,
            rows: m.rows(),
            cols: m.cols(),
            matrix_sha256: hash,
            diag: form.diag.iter().map(BigInt::to_string).collect(),
        };
        self.write_entry(&path, payload);
        form
    }

    fn corrupt(&self, path: &Path, why: &str) {
        eprintln!(
            "cache integrity error: {}: {why}; recomputing",
            path.display()
        );
        self.recomputed.fetch_add(1, Ordering::Relaxed);
    }

    /// Write-to-temp then rename, so readers never see a partial entry.
    fn write_entry<T: Serialize>(&self, path: &Path, payload: T) {
        let checksum = checksum(&payload);
        let body = serde_json::to_vec(&Envelope { payload, checksum }).expect("entry serializes");
        let result = tempfile::NamedTempFile::new_in(&self.dir).and_then(|mut tmp| {
            tmp.write_all(&body)?;
            tmp.persist(path).map(drop).map_err(|e| e.error)
        });
        if let Err(e) = result {
            eprintln!(
                "warning: could not write cache entry {}: {e}",
                path.display()
            );
        }
    }
}

fn read_entry<T: Serialize + DeserializeOwned>(path: &Path) -> Lookup<T> {
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Lookup::Missing,
        Err(e) => return Lookup::Corrupt(e.to_string()),
    };
    let env: Envelope<T> = match serde_json::from_slice(&bytes) {
        Ok(env) => env,
        Err(e) => return Lookup::Corrupt(format!("unreadable entry ({e})")),
    };
    if checksum(&env.payload) != env.checksum {
        return Lookup::Corrupt("checksum mismatch".into());
    }
    Lookup::Hit(env.payload)
}

fn decode_diag(p: &SnfPayload) -> Option<SmithForm> {
    let diag = p
        .diag
        .iter()
        .map(|s| s.parse::<BigInt>().ok())
        .collect::<Option<Vec<_>>>()?;
    let form = SmithForm {
        diag,
        rows: p.rows,
        cols: p.cols,
        transforms: None,
    };
    (form.divisibility_chain_holds() && form.rank() <= p.rows.min(p.cols)).then_some(form)
}
