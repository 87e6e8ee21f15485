//! Append-only JSON-lines result cache.
//!
//! Each line holds one rendered result keyed by a SHA-256 digest of the
//! engine version, the command name and the normalized parameters. The
//! directory comes from `SYMPAIR_CACHE_DIR`, falling back to the user cache
//! directory.

use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::output::Rendered;

pub const ENV_DIR: &str = "SYMPAIR_CACHE_DIR";
const FILE: &str = "results.jsonl";

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    #[serde(flatten)]
    rendered: Rendered,
}

pub struct Cache {
    path: PathBuf,
}

pub fn key(version: &str, command: &str, params: &Value) -> String {
    let mut h = Sha256::new();
    h.update(version.as_bytes());
    h.update([0]);
    h.update(command.as_bytes());
    h.update([0]);
    h.update(params.to_string().as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn default_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os(ENV_DIR) {
        return Some(PathBuf::from(dir));
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(dir).join("sympair"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("sympair"))
}

impl Cache {
    pub fn open() -> Option<Cache> {
        default_dir().map(|dir| Cache {
            path: dir.join(FILE),
        })
    }

    pub fn get(&self, key: &str) -> Option<Rendered> {
        let file = fs::File::open(&self.path).ok()?;
        // Later lines win, though a key is only ever written once.
        BufReader::new(file)
            .lines()
            .map_while(Result::ok)
            .filter_map(|line| serde_json::from_str::<Entry>(&line).ok())
            .filter(|e| e.key == key)
            .last()
            .map(|e| e.rendered)
    }

    /// Failures to write are not fatal: the result was already computed.
    pub fn put(&self, key: &str, rendered: &Rendered) {
        let entry = Entry {
            key: key.to_string(),
            rendered: rendered.clone(),
        };
        let write = || -> std::io::Result<()> {
            if let Some(dir) = self.path.parent() {
                fs::create_dir_all(dir)?;
            }
            let mut f = OpenOptions::new()
                .create(true)
                .append(true)
                .open(&self.path)?;
            let line = serde_json::to_string(&entry).map_err(std::io::Error::other)?;
            writeln!(f, "{line}")
        };
        if let Err(e) = write() {
            eprintln!(
                "warning: could not write cache {}: {e}",
                self.path.display()
            );
        }
    }
}
