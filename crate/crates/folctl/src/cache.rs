//! Resolve results stored under `DIR/resolve-<digest>-L<max_length>.json`.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::commands::Outcome;

fn entry(dir: &Path, digest: &str, max_length: usize) -> PathBuf {
    dir.join(format!("resolve-{}-L{}.json", digest, max_length))
}

/// A cached outcome, ignoring unreadable or malformed entries.
pub fn load(dir: &Path, digest: &str, max_length: usize) -> Option<Outcome> {
    let text = fs::read_to_string(entry(dir, digest, max_length)).ok()?;
    let v: Value = serde_json::from_str(&text).ok()?;
    let ok = v.get("ok")?.as_bool()?;
    let payload = v.get("payload")?.clone();
    Some(Outcome { payload, ok })
}

/// Best effort: a cache that cannot be written is skipped.
pub fn store(dir: &Path, digest: &str, max_length: usize, outcome: &Outcome) {
    if fs::create_dir_all(dir).is_err() {
        return;
    }
    let path = entry(dir, digest, max_length);
    let tmp = path.with_extension("tmp");
    let body = json!({ "ok": outcome.ok, "payload": outcome.payload });
    if fs::write(&tmp, body.to_string()).is_ok() {
        let _ = fs::rename(&tmp, &path);
    }
}
