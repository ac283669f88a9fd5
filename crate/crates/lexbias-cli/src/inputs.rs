//! Shared input loading: embeddings, word lists, and series manifests, each
//! recorded in the provenance block as it is read.

use std::io::BufReader;
use std::path::Path;

use lexbias::embedding::{
    load_series, normalize, parse_embedding_limited, Embedding, EmbeddingSeries, Format,
    SeriesManifest,
};
use lexbias::wordlists::{self, WordList};
use lexbias::{Error, Result};

use crate::provenance::Provenance;
use crate::EmbOpt;

/// Load, label, and l2-normalize a single embedding file.
pub fn load_embedding_opt(opt: &EmbOpt, prov: &mut Provenance) -> Result<Embedding> {
    load_embedding_flags(&opt.emb, opt.emb_format.as_deref(), opt.limit, prov)
}

pub fn load_embedding_flags(
    path: &Path,
    format_flag: Option<&str>,
    limit: Option<usize>,
    prov: &mut Provenance,
) -> Result<Embedding> {
    let format = match format_flag {
        Some(name) => name.parse::<Format>()?,
        None => Format::sniff_path(path)?,
    };
    prov.add("emb-format", format.label());
    if let Some(n) = limit {
        prov.add("vocab-limit", n);
    }
    prov.input_file("emb", path)?;
    let file = std::fs::File::open(path)?;
    let mut emb = parse_embedding_limited(format, BufReader::new(file), limit)?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "embedding".to_string());
    emb.set_label(stem);
    normalize(emb)
}

/// Resolve a word-list reference (builtin name or path) and record its
/// content digest. The digest covers the parsed words, so it identifies the
/// list regardless of which source (file, env override, builtin) supplied it.
pub fn load_list(role: &str, reference: &str, prov: &mut Provenance) -> Result<WordList> {
    let list = wordlists::resolve(reference)?;
    prov.input_list(role, reference, list.words());
    Ok(list)
}

/// Load a series manifest plus every slice it names, hashing each input.
pub fn load_series_opt(path: &Path, prov: &mut Provenance) -> Result<EmbeddingSeries> {
    prov.input_file("manifest", path)?;
    let manifest = SeriesManifest::from_path(path)?;
    for entry in &manifest.entries {
        prov.input_file(&format!("slice-{}", entry.label), &entry.path)?;
    }
    load_series(&manifest)
}

/// Output formats across subcommands; each parses only its allowed subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fmt {
    Csv,
    Json,
    Svg,
    Table,
}

impl Fmt {
    pub fn parse(s: &str, allowed: &[Fmt]) -> Result<Fmt> {
        let fmt = match s {
            "csv" => Fmt::Csv,
            "json" => Fmt::Json,
            "svg" => Fmt::Svg,
            "table" => Fmt::Table,
            other => {
                return Err(Error::BadParams {
                    detail: format!("unknown output format {other:?}"),
                })
            }
        };
        if !allowed.contains(&fmt) {
            return Err(Error::BadParams {
                detail: format!("format {s:?} not supported by this subcommand"),
            });
        }
        Ok(fmt)
    }
}

/// JSON envelope: `{"data": ..., "meta": ...}` (keys sorted by serde_json).
pub fn json_artifact(prov: &Provenance, data: serde_json::Value) -> String {
    let mut root = serde_json::Map::new();
    root.insert("meta".to_string(), prov.json_meta());
    root.insert("data".to_string(), data);
    let mut s = serde_json::to_string_pretty(&serde_json::Value::Object(root))
        .expect("serialization of plain values cannot fail");
    s.push('\n');
    s
}

/// Comma-separated exclusion flag → lowercase word vector.
pub fn parse_exclude(flag: &str) -> Vec<String> {
    flag.split(',')
        .map(|w| w.trim().to_lowercase())
        .filter(|w| !w.is_empty())
        .collect()
}
