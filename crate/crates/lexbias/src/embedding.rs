//! Embedding file parsing, normalization, and time-labeled series.
//!
//! Three on-disk formats are understood:
//!
//! * word2vec text — header line `"<vocab> <dim>"`, then one
//!   space-separated row per word;
//! * word2vec binary — same ASCII header, then per entry the word bytes,
//!   a single `' '`, and `dim` little-endian 32-bit floats (an optional
//!   trailing `'\n'` per entry is tolerated);
//! * GloVe text — no header, dimension inferred from the first row.
//!
//! All floats are widened to `f64` in memory so downstream statistics are
//! reproducible regardless of source format. Words are lowercased on load;
//! when two rows collide after lowercasing the first occurrence wins and the
//! drop is counted in [`Embedding::dropped_duplicates`].

use std::collections::HashMap;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use byteorder::{LittleEndian, ReadBytesExt, WriteBytesExt};

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Format
// ---------------------------------------------------------------------------

/// Supported embedding file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Word2vecText,
    Word2vecBinary,
    GloveText,
}

impl Format {
    pub fn label(self) -> &'static str {
        match self {
            Format::Word2vecText => "word2vec-text",
            Format::Word2vecBinary => "word2vec-binary",
            Format::GloveText => "glove-text",
        }
    }

    /// Guess the format of a file from its leading bytes: a `"<count> <dim>"`
    /// header means word2vec (binary when the payload is not valid UTF-8),
    /// anything else is treated as GloVe text.
    pub fn sniff_path(path: &Path) -> Result<Format> {
        let mut head = vec![0u8; 4096];
        let mut f = File::open(path)?;
        let n = read_up_to(&mut f, &mut head)?;
        head.truncate(n);
        if head.is_empty() {
            return Err(Error::MalformedHeader {
                detail: "empty file".into(),
            });
        }
        let line_end = head.iter().position(|&b| b == b'\n').unwrap_or(head.len());
        let first = String::from_utf8_lossy(&head[..line_end]);
        let toks: Vec<&str> = first.split_whitespace().collect();
        let is_header =
            toks.len() == 2 && toks.iter().all(|t| t.parse::<u64>().is_ok());
        if !is_header {
            return Ok(Format::GloveText);
        }
        let payload = &head[(line_end + 1).min(head.len())..];
        if std::str::from_utf8(payload).is_ok() && !payload.contains(&0u8) {
            Ok(Format::Word2vecText)
        } else {
            Ok(Format::Word2vecBinary)
        }
    }
}

fn read_up_to<R: Read>(r: &mut R, buf: &mut [u8]) -> std::io::Result<usize> {
    let mut filled = 0;
    while filled < buf.len() {
        let n = r.read(&mut buf[filled..])?;
        if n == 0 {
            break;
        }
        filled += n;
    }
    Ok(filled)
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "word2vec-text" | "w2v-text" => Ok(Format::Word2vecText),
            "word2vec-binary" | "w2v-bin" => Ok(Format::Word2vecBinary),
            "glove-text" | "glove" => Ok(Format::GloveText),
            other => Err(Error::UnknownFormat { name: other.into() }),
        }
    }
}

// ---------------------------------------------------------------------------
// Embedding
// ---------------------------------------------------------------------------

/// An immutable embedding for one time slice or one pre-trained source.
///
/// Row order preserves first occurrence in the source file; the vocab map is
/// a bijection onto row indices.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    label: String,
    dim: usize,
    words: Vec<String>,
    index: HashMap<String, usize>,
    matrix: Vec<f64>,
    dropped_duplicates: usize,
}

impl Embedding {
    /// Build an embedding from `(word, vector)` rows.
    ///
    /// Words are lowercased; on collision the first row wins and the drop is
    /// counted. Vectors must all share one dimension and be finite.
    pub fn from_rows(label: impl Into<String>, rows: Vec<(String, Vec<f64>)>) -> Result<Embedding> {
        let Some(first) = rows.first() else {
            return Err(Error::MalformedHeader {
                detail: "embedding has no rows".into(),
            });
        };
        let dim = first.1.len();
        if dim == 0 {
            return Err(Error::MalformedHeader {
                detail: "embedding dimension is zero".into(),
            });
        }

        let mut words = Vec::with_capacity(rows.len());
        let mut index = HashMap::with_capacity(rows.len());
        let mut matrix = Vec::with_capacity(rows.len() * dim);
        let mut dropped = 0usize;
        for (line0, (word, vec)) in rows.into_iter().enumerate() {
            if vec.len() != dim {
                return Err(Error::DimensionMismatch {
                    line: line0 + 1,
                    word,
                    expected: dim,
                    found: vec.len(),
                });
            }
            if vec.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite {
                    word,
                    location: format!("row {}", line0 + 1),
                });
            }
            let word = word.to_lowercase();
            if index.contains_key(&word) {
                dropped += 1;
                continue;
            }
            index.insert(word.clone(), words.len());
            words.push(word);
            matrix.extend_from_slice(&vec);
        }

        Ok(Embedding {
            label: label.into(),
            dim,
            words,
            index,
            matrix,
            dropped_duplicates: dropped,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Words in row order.
    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    pub fn index_of(&self, word: &str) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn vector(&self, word: &str) -> Option<&[f64]> {
        self.index_of(word).map(|i| self.row(i))
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.matrix[i * self.dim..(i + 1) * self.dim]
    }

    /// Rows dropped because they collided after lowercasing.
    pub fn dropped_duplicates(&self) -> usize {
        self.dropped_duplicates
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[f64])> {
        self.words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.as_str(), self.row(i)))
    }
}

/// Scale every row to unit l2 norm.
///
/// Rows already within `1e-12` of unit length are left untouched, which makes
/// the operation exactly idempotent. A zero row is an error naming the word.
pub fn normalize(mut emb: Embedding) -> Result<Embedding> {
    let dim = emb.dim;
    for i in 0..emb.words.len() {
        let row = &mut emb.matrix[i * dim..(i + 1) * dim];
        let norm = row.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::ZeroVector {
                word: emb.words[i].clone(),
            });
        }
        if (norm - 1.0).abs() >= 1e-12 {
            for v in row.iter_mut() {
                *v /= norm;
            }
        }
    }
    Ok(emb)
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Parse an embedding from a byte stream in the given format.
///
/// The result is un-normalized and carries an empty label; see
/// [`load_embedding`] for the file-path convenience wrapper.
pub fn parse_embedding<R: BufRead>(format: Format, reader: R) -> Result<Embedding> {
    parse_embedding_limited(format, reader, None)
}

/// Like [`parse_embedding`], but stop after the first `limit` rows.
///
/// word2vec files are conventionally ordered by descending corpus frequency,
/// so a limit keeps the most frequent words. Useful for very large files.
pub fn parse_embedding_limited<R: BufRead>(
    format: Format,
    reader: R,
    limit: Option<usize>,
) -> Result<Embedding> {
    match format {
        Format::Word2vecText => parse_w2v_text(reader, limit),
        Format::Word2vecBinary => parse_w2v_binary(reader, limit),
        Format::GloveText => parse_glove_text(reader, limit),
    }
}

/// Open `path` and parse it; the embedding label is the file stem.
pub fn load_embedding(path: &Path, format: Format) -> Result<Embedding> {
    let file = File::open(path)?;
    let mut emb = parse_embedding(format, BufReader::new(file))?;
    if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
        emb.set_label(stem);
    }
    Ok(emb)
}

fn parse_header_line(line: &str) -> Result<(usize, usize)> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::MalformedHeader {
            detail: format!("expected \"<vocab> <dim>\", got {line:?}"),
        });
    }
    let count: usize = toks[0].parse().map_err(|_| Error::MalformedHeader {
        detail: format!("bad vocab count {:?}", toks[0]),
    })?;
    let dim: usize = toks[1].parse().map_err(|_| Error::MalformedHeader {
        detail: format!("bad dimension {:?}", toks[1]),
    })?;
    if dim == 0 {
        return Err(Error::MalformedHeader {
            detail: "dimension must be at least 1".into(),
        });
    }
    Ok((count, dim))
}

fn parse_text_row(line: &str, line_no: usize, dim: usize) -> Result<(String, Vec<f64>)> {
    let mut toks = line.split_whitespace();
    let word = toks
        .next()
        .expect("caller skips blank lines")
        .to_string();
    let mut vec = Vec::with_capacity(dim);
    for tok in toks {
        let v: f64 = tok.parse().map_err(|_| Error::BadFloat {
            line: line_no,
            token: tok.to_string(),
        })?;
        vec.push(v);
    }
    if vec.len() != dim {
        return Err(Error::DimensionMismatch {
            line: line_no,
            word,
            expected: dim,
            found: vec.len(),
        });
    }
    if vec.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            word,
            location: format!("line {line_no}"),
        });
    }
    Ok((word, vec))
}

fn parse_w2v_text<R: BufRead>(reader: R, limit: Option<usize>) -> Result<Embedding> {
    let mut lines = reader.lines();
    let header = match lines.next() {
        Some(line) => line?,
        None => {
            return Err(Error::MalformedHeader {
                detail: "empty stream".into(),
            })
        }
    };
    let (count, dim) = parse_header_line(&header)?;
    let want = limit.map_or(count, |l| l.min(count));

    let mut rows: Vec<(String, Vec<f64>)> = Vec::with_capacity(want);
    let mut line_no = 1usize;
    for line in lines {
        let line = line?;
        line_no += 1;
        if line.trim().is_empty() {
            continue;
        }
        if rows.len() == want {
            if limit.is_some() {
                break; // deliberately ignoring the tail
            }
            return Err(Error::MalformedHeader {
                detail: format!("header declares {count} rows but more follow (line {line_no})"),
            });
        }
        rows.push(parse_text_row(&line, line_no, dim)?);
    }
    if rows.len() < want {
        return Err(Error::Truncated {
            offset: line_no as u64,
            context: format!("text rows: got {} of {} (offset is a line number)", rows.len(), count),
        });
    }
    Embedding::from_rows("", rows)
}

fn parse_glove_text<R: BufRead>(reader: R, limit: Option<usize>) -> Result<Embedding> {
    let mut rows: Vec<(String, Vec<f64>)> = Vec::new();
    let mut dim = 0usize;
    for (line0, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = line0 + 1;
        if line.trim().is_empty() {
            continue;
        }
        if let Some(l) = limit {
            if rows.len() == l {
                break;
            }
        }
        if rows.is_empty() {
            let toks = line.split_whitespace().count();
            if toks < 2 {
                return Err(Error::MalformedHeader {
                    detail: format!("first row needs a word and at least one component, got {line:?}"),
                });
            }
            dim = toks - 1;
        }
        rows.push(parse_text_row(&line, line_no, dim)?);
    }
    if rows.is_empty() {
        return Err(Error::MalformedHeader {
            detail: "empty stream".into(),
        });
    }
    Embedding::from_rows("", rows)
}

fn parse_w2v_binary<R: BufRead>(mut reader: R, limit: Option<usize>) -> Result<Embedding> {
    let mut offset: u64 = 0;
    let mut header = Vec::new();
    let n = reader.read_until(b'\n', &mut header)?;
    if n == 0 {
        return Err(Error::MalformedHeader {
            detail: "empty stream".into(),
        });
    }
    offset += n as u64;
    let (count, dim) = parse_header_line(&String::from_utf8_lossy(&header))?;
    let want = limit.map_or(count, |l| l.min(count));

    let mut rows: Vec<(String, Vec<f64>)> = Vec::with_capacity(want);
    let mut float_buf = vec![0u8; 4 * dim];
    for entry in 0..want {
        let mut word_bytes = Vec::new();
        let n = reader.read_until(b' ', &mut word_bytes)?;
        if n == 0 {
            return Err(Error::Truncated {
                offset,
                context: format!("word of entry {} of {}", entry + 1, count),
            });
        }
        offset += n as u64;
        if word_bytes.last() == Some(&b' ') {
            word_bytes.pop();
        } else {
            return Err(Error::Truncated {
                offset,
                context: format!("unterminated word of entry {} of {}", entry + 1, count),
            });
        }
        // Tolerate the conventional '\n' that some writers emit between entries.
        while matches!(word_bytes.first(), Some(b'\n') | Some(b'\r')) {
            word_bytes.remove(0);
        }
        let word = String::from_utf8_lossy(&word_bytes).into_owned();

        if let Err(e) = reader.read_exact(&mut float_buf) {
            return if e.kind() == std::io::ErrorKind::UnexpectedEof {
                Err(Error::Truncated {
                    offset,
                    context: format!("vector for {word:?} (entry {} of {})", entry + 1, count),
                })
            } else {
                Err(Error::Io(e))
            };
        }
        offset += 4 * dim as u64;

        let mut vec = Vec::with_capacity(dim);
        let mut cur = &float_buf[..];
        for _ in 0..dim {
            let v = cur.read_f32::<LittleEndian>().expect("buffer sized above") as f64;
            vec.push(v);
        }
        if vec.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                word,
                location: format!("byte offset {offset}"),
            });
        }
        rows.push((word, vec));
    }
    Embedding::from_rows("", rows)
}

// ---------------------------------------------------------------------------
// Writing
// ---------------------------------------------------------------------------

/// Write an embedding in the given format.
///
/// Text formats print `f64` components with Rust's shortest round-trip
/// representation; the binary format narrows to `f32` on disk, so binary
/// round trips are exact only for values that originated as `f32`.
pub fn write_embedding<W: Write>(emb: &Embedding, format: Format, writer: &mut W) -> Result<()> {
    match format {
        Format::Word2vecText => {
            writeln!(writer, "{} {}", emb.len(), emb.dim())?;
            for (word, row) in emb.iter() {
                write!(writer, "{word}")?;
                for v in row {
                    write!(writer, " {v}")?;
                }
                writeln!(writer)?;
            }
        }
        Format::GloveText => {
            for (word, row) in emb.iter() {
                write!(writer, "{word}")?;
                for v in row {
                    write!(writer, " {v}")?;
                }
                writeln!(writer)?;
            }
        }
        Format::Word2vecBinary => {
            writeln!(writer, "{} {}", emb.len(), emb.dim())?;
            for (word, row) in emb.iter() {
                writer.write_all(word.as_bytes())?;
                writer.write_all(b" ")?;
                for &v in row {
                    writer.write_f32::<LittleEndian>(v as f32)?;
                }
                writer.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

/// Time-ordered sequence of embeddings, one per slice.
#[derive(Debug, Clone)]
pub struct EmbeddingSeries {
    entries: Vec<(i32, Embedding)>,
}

impl EmbeddingSeries {
    /// Build from entries whose labels must already be strictly increasing.
    pub fn new(entries: Vec<(i32, Embedding)>) -> Result<EmbeddingSeries> {
        if entries.is_empty() {
            return Err(Error::EmptySeries);
        }
        for pair in entries.windows(2) {
            if pair[1].0 <= pair[0].0 {
                return Err(if pair[1].0 == pair[0].0 {
                    Error::DuplicateLabel { label: pair[1].0 }
                } else {
                    Error::UnorderedLabels { label: pair[1].0 }
                });
            }
        }
        Ok(EmbeddingSeries { entries })
    }

    /// Build from entries in any order; sorts by label, rejects duplicates.
    pub fn from_unordered(mut entries: Vec<(i32, Embedding)>) -> Result<EmbeddingSeries> {
        entries.sort_by_key(|(label, _)| *label);
        EmbeddingSeries::new(entries)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn labels(&self) -> Vec<i32> {
        self.entries.iter().map(|(l, _)| *l).collect()
    }

    pub fn get(&self, label: i32) -> Option<&Embedding> {
        self.entries
            .iter()
            .find(|(l, _)| *l == label)
            .map(|(_, e)| e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &Embedding)> {
        self.entries.iter().map(|(l, e)| (*l, e))
    }

    pub fn entries(&self) -> &[(i32, Embedding)] {
        &self.entries
    }
}

/// One manifest line: a time label, a format, and a file path.
#[derive(Debug, Clone, PartialEq)]
pub struct ManifestEntry {
    pub label: i32,
    pub format: Format,
    pub path: PathBuf,
}

/// Parsed series manifest.
///
/// The file is line-oriented `label<TAB>format<TAB>path`; `'#'` lines and
/// blank lines are skipped. Relative paths are resolved against the manifest
/// file's directory by [`SeriesManifest::from_path`].
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesManifest {
    pub entries: Vec<ManifestEntry>,
}

impl SeriesManifest {
    pub fn parse(text: &str) -> Result<SeriesManifest> {
        let mut entries: Vec<ManifestEntry> = Vec::new();
        for (line0, raw) in text.lines().enumerate() {
            let line_no = line0 + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = raw.split('\t').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(Error::BadManifestLine {
                    line: line_no,
                    detail: format!(
                        "expected label<TAB>format<TAB>path, got {} field(s)",
                        fields.len()
                    ),
                });
            }
            let label: i32 = fields[0].parse().map_err(|_| Error::BadManifestLine {
                line: line_no,
                detail: format!("bad time label {:?}", fields[0]),
            })?;
            let format = Format::from_str(fields[1]).map_err(|_| Error::BadManifestLine {
                line: line_no,
                detail: format!(
                    "unknown format {:?} (expected word2vec-text, word2vec-binary or glove-text)",
                    fields[1]
                ),
            })?;
            if entries.iter().any(|e| e.label == label) {
                return Err(Error::DuplicateLabel { label });
            }
            entries.push(ManifestEntry {
                label,
                format,
                path: PathBuf::from(fields[2]),
            });
        }
        if entries.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(SeriesManifest { entries })
    }

    /// Read and parse a manifest file, resolving relative paths against the
    /// manifest's directory.
    pub fn from_path(path: &Path) -> Result<SeriesManifest> {
        let text = std::fs::read_to_string(path)?;
        let mut manifest = SeriesManifest::parse(&text)?;
        if let Some(dir) = path.parent() {
            for entry in &mut manifest.entries {
                if entry.path.is_relative() {
                    entry.path = dir.join(&entry.path);
                }
            }
        }
        Ok(manifest)
    }
}

/// Parse and normalize every manifest entry into a label-ordered series.
///
/// Errors from an individual entry are wrapped with that entry's time label.
pub fn load_series(manifest: &SeriesManifest) -> Result<EmbeddingSeries> {
    let mut entries = Vec::with_capacity(manifest.entries.len());
    for entry in &manifest.entries {
        let load = || -> Result<Embedding> {
            let mut emb = load_embedding(&entry.path, entry.format)?;
            emb.set_label(entry.label.to_string());
            normalize(emb)
        };
        let emb = load().map_err(|e| e.for_series_entry(entry.label))?;
        entries.push((entry.label, emb));
    }
    EmbeddingSeries::from_unordered(entries)
}
