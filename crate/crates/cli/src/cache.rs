//! On-disk cache for the basis enumeration, keyed by a hash of the ray table.
//!
//! `bases.txt` holds the list; `bases.meta.json` records the hash of the ray
//! table it was computed from and the hash of `bases.txt` itself. A cache
//! entry is used only when both hashes match.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use bks_core::bases::{read_bases_text, write_bases_text};
use bks_core::{BasisSet, RayTable};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::output::write_atomic;

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
struct Meta {
    input_sha256: String,
    output_sha256: String,
    count: usize,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn table_hash(table: &RayTable) -> Result<String> {
    let mut csv = Vec::new();
    table.write_csv(&mut csv)?;
    Ok(sha256_hex(&csv))
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    fn paths(&self) -> (PathBuf, PathBuf) {
        (self.dir.join("bases.txt"), self.dir.join("bases.meta.json"))
    }

    /// Cached bases for `table`, or `None` if absent, stale or corrupted.
    pub fn load(&self, table: &RayTable) -> Result<Option<Vec<BasisSet>>> {
        let (data, meta) = self.paths();
        let (Ok(text), Ok(meta_text)) = (fs::read(&data), fs::read_to_string(&meta)) else {
            return Ok(None);
        };
        let Ok(meta) = serde_json::from_str::<Meta>(&meta_text) else {
            return Ok(None);
        };
        if meta.input_sha256 != table_hash(table)? || meta.output_sha256 != sha256_hex(&text) {
            return Ok(None);
        }
        let bases = read_bases_text(text.as_slice())?;
        Ok((bases.len() == meta.count).then_some(bases))
    }

    pub fn store(&self, table: &RayTable, bases: &[BasisSet]) -> Result<()> {
        fs::create_dir_all(&self.dir).with_context(|| format!("creating cache dir {}", self.dir.display()))?;
        let mut text = Vec::new();
        write_bases_text(bases, &mut text)?;
        let meta = Meta {
            input_sha256: table_hash(table)?,
            output_sha256: sha256_hex(&text),
            count: bases.len(),
        };
        let (data, meta_path) = self.paths();
        write_atomic(&data, &text)?;
        write_atomic(&meta_path, serde_json::to_string_pretty(&meta)?.as_bytes())?;
        Ok(())
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }
}
