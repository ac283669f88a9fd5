//! Provenance metadata embedded in every artifact: which inputs (with
//! sha256 digests), which flags, which seed, and the sign convention.
//!
//! The block is an ordered key/value list, rendered as `#` comment lines in
//! CSV, an object under `"meta"` in JSON, and an XML comment in SVG. Nothing
//! time- or host-dependent goes in, so identical configurations produce
//! byte-identical artifacts.

use std::fmt::Display;
use std::io::Read;
use std::path::Path;

use sha2::{Digest, Sha256};

use lexbias::Result;

pub const SIGN_CONVENTION: &str = "positive bias leans toward group two (g2)";

#[derive(Debug, Clone)]
pub struct Provenance {
    entries: Vec<(String, String)>,
}

impl Provenance {
    pub fn new(subcommand: &str) -> Provenance {
        let mut p = Provenance { entries: Vec::new() };
        p.add("tool", format!("lexbias {}", env!("CARGO_PKG_VERSION")));
        p.add("subcommand", subcommand);
        p.add("sign-convention", SIGN_CONVENTION);
        p
    }

    pub fn add(&mut self, key: &str, value: impl Display) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    /// Record an input file: role, path as given, sha256 of its bytes.
    pub fn input_file(&mut self, role: &str, path: &Path) -> Result<()> {
        let digest = sha256_file(path)?;
        self.add(&format!("input-{role}"), format!("{} sha256={digest}", path.display()));
        Ok(())
    }

    /// Record a word list by reference (builtin name or path) and content
    /// digest. Hashing the parsed words identifies the list regardless of
    /// which source (file, env override, compiled-in) supplied it.
    pub fn input_list(&mut self, role: &str, reference: &str, content_words: &[String]) {
        let mut hasher = Sha256::new();
        for w in content_words {
            hasher.update(w.as_bytes());
            hasher.update(b"\n");
        }
        self.add(
            &format!("input-{role}"),
            format!("{reference} sha256={}", hex::encode(hasher.finalize())),
        );
    }

    pub fn csv_block(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        out
    }

    pub fn json_meta(&self) -> serde_json::Value {
        // serde_json's default map is sorted; keep insertion order by
        // emitting an array of single-key objects only where order matters.
        // Here a plain object is fine: keys are unique and sorting is
        // deterministic.
        let mut map = serde_json::Map::new();
        for (k, v) in &self.entries {
            map.insert(k.clone(), serde_json::Value::String(v.clone()));
        }
        serde_json::Value::Object(map)
    }

    pub fn svg_comment(&self) -> String {
        let mut out = String::from("<!--\n");
        for (k, v) in &self.entries {
            // '--' is forbidden inside XML comments.
            let safe = format!("{k}: {v}").replace("--", "__");
            out.push_str(&safe);
            out.push('\n');
        }
        out.push_str("-->\n");
        out
    }
}

/// Streaming sha256 of a file.
pub fn sha256_file(path: &Path) -> Result<String> {
    let mut file = std::fs::File::open(path)?;
    let mut hasher = Sha256::new();
    let mut buf = [0u8; 64 * 1024];
    loop {
        let n = file.read(&mut buf)?;
        if n == 0 {
            break;
        }
        hasher.update(&buf[..n]);
    }
    Ok(hex::encode(hasher.finalize()))
}
