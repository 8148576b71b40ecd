//! Persistent Kostka-Foulkes cache, one JSON object per line:
//! `{"lam": [2, 1], "mu": [1, 1, 1], "kf": [[1, "1/1"], [2, "1/1"]]}`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use deltaq::json::{FromJson, ToJson};
use deltaq::tableaux::{kf_memo_entries, kf_memo_insert, kostka_foulkes_uncached};
use deltaq::{Partition, QLaurent};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub loaded: usize,
    pub corrupt: usize,
    pub mismatched: usize,
    pub stored: usize,
}

impl CacheStats {
    pub fn to_json(self) -> Value {
        json!({
            "loaded": self.loaded,
            "corrupt": self.corrupt,
            "mismatched": self.mismatched,
            "stored": self.stored,
        })
    }
}

#[derive(Debug, thiserror::Error)]
#[error("cache file {}: {source}", path.display())]
pub struct CacheError {
    path: PathBuf,
    source: io::Error,
}

fn parse_line(line: &str) -> Option<(Partition, Partition, QLaurent)> {
    let v: Value = serde_json::from_str(line).ok()?;
    let lam = Partition::from_json(v.get("lam")?).ok()?;
    let mu = Partition::from_json(v.get("mu")?).ok()?;
    let kf = QLaurent::from_json(v.get("kf")?).ok()?;
    (lam.size() == mu.size()).then_some((lam, mu, kf))
}

/// Merges the entries at `path` into the in-process memo. A missing file is
/// an empty cache. With `paranoid`, each entry is recomputed and dropped on
/// disagreement.
pub fn load(path: &Path, paranoid: bool) -> Result<CacheStats, CacheError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(CacheStats::default()),
        Err(source) => {
            return Err(CacheError {
                path: path.into(),
                source,
            })
        }
    };
    let mut stats = CacheStats::default();
    for (no, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let Some((lam, mu, kf)) = parse_line(line) else {
            eprintln!(
                "warning: {}:{}: skipping malformed cache line",
                path.display(),
                no + 1
            );
            stats.corrupt += 1;
            continue;
        };
        if paranoid && kostka_foulkes_uncached(&lam, &mu).ok().as_ref() != Some(&kf) {
            eprintln!(
                "warning: {}:{}: cached K_{lam},{mu} disagrees with recomputation",
                path.display(),
                no + 1
            );
            stats.mismatched += 1;
            continue;
        }
        kf_memo_insert(lam, mu, kf);
        stats.loaded += 1;
    }
    Ok(stats)
}

/// Writes the whole memo to `path` through a sibling temporary file and a rename.
pub fn store(path: &Path) -> Result<usize, CacheError> {
    let err = |source| CacheError {
        path: path.into(),
        source,
    };
    let entries = kf_memo_entries();
    let mut tmp_name = path.as_os_str().to_owned();
    tmp_name.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp_name);
    let mut out = io::BufWriter::new(fs::File::create(&tmp).map_err(err)?);
    for (lam, mu, kf) in &entries {
        let line = json!({"lam": lam.to_json(), "mu": mu.to_json(), "kf": kf.to_json()});
        writeln!(out, "{line}").map_err(err)?;
    }
    out.into_inner()
        .map_err(|e| err(e.into_error()))?
        .sync_all()
        .map_err(err)?;
    fs::rename(&tmp, path).map_err(err)?;
    Ok(entries.len())
}
