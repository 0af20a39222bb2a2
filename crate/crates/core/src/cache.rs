//! Persistent storage for the Kostant and Kostka memo tables.
//!
//! The file is a versioned JSON document. Anything unreadable, of the wrong
//! version, or internally inconsistent is discarded and the tables start
//! empty, since every entry can be recomputed.

use std::fs;
use std::io;
use std::path::Path;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::memo::{kostant_table, kostka_table};
use crate::partition::Partition;
use crate::weight::Weight;

pub const CACHE_VERSION: u32 = 1;

/// Environment variable the CLI reads when `--cache` is not given.
pub const CACHE_ENV: &str = "SCHURTRUNC_CACHE";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    kostant: Vec<(Weight, String)>,
    kostka: Vec<(Partition, Weight, String)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoadStatus {
    Missing,
    Loaded { kostant: usize, kostka: usize },
    /// The file existed but was unusable; it will be overwritten on save.
    Discarded,
}

/// Reads `path` into the process-wide memo tables.
pub fn load(path: &Path) -> LoadStatus {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return LoadStatus::Missing,
        Err(_) => return LoadStatus::Discarded,
    };
    let Ok(file) = serde_json::from_str::<CacheFile>(&text) else {
        return LoadStatus::Discarded;
    };
    if file.version != CACHE_VERSION {
        return LoadStatus::Discarded;
    }
    let Some(kostant) = file.kostant.into_iter().map(|(w, v)| Some((w, v.parse::<BigUint>().ok()?))).collect::<Option<Vec<_>>>() else {
        return LoadStatus::Discarded;
    };
    let Some(kostka) = file
        .kostka
        .into_iter()
        .map(|(l, t, v)| Some(((l, t), v.parse::<BigUint>().ok()?)))
        .collect::<Option<Vec<_>>>()
    else {
        return LoadStatus::Discarded;
    };
    let counts = (kostant.len(), kostka.len());
    for (k, v) in kostant {
        kostant_table().insert(k, v);
    }
    for (k, v) in kostka {
        kostka_table().insert(k, v);
    }
    LoadStatus::Loaded { kostant: counts.0, kostka: counts.1 }
}

/// Writes the current memo tables to `path`, entries sorted so the file is
/// reproducible. The write goes through a temporary file and a rename.
pub fn save(path: &Path) -> io::Result<()> {
    let mut kostant: Vec<(Weight, String)> = kostant_table().snapshot().into_iter().map(|(k, v)| (k, v.to_string())).collect();
    kostant.sort();
    let mut kostka: Vec<(Partition, Weight, String)> =
        kostka_table().snapshot().into_iter().map(|((l, t), v)| (l, t, v.to_string())).collect();
    kostka.sort();
    let file = CacheFile { version: CACHE_VERSION, kostant, kostka };
    let text = serde_json::to_string(&file).map_err(io::Error::other)?;
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)
}
