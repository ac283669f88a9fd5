//! Group and neutral word lists: file loading, the bundled reference lists,
//! vocabulary filtering against an embedding series, and the surname-selection
//! procedure for building ethnicity group lists from census name tables.

use std::collections::HashMap;
use std::io::Read;
use std::path::Path;

use crate::embedding::EmbeddingSeries;
use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// WordList
// ---------------------------------------------------------------------------

/// A named, ordered list of lowercase words with no duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordList {
    name: String,
    words: Vec<String>,
}

impl WordList {
    /// Lowercases the input; rejects duplicates (including case-fold
    /// collisions) and empty lists.
    pub fn new(name: impl Into<String>, words: Vec<String>) -> Result<WordList> {
        let name = name.into();
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::with_capacity(words.len());
        for w in words {
            let w = w.to_lowercase();
            if !seen.insert(w.clone()) {
                return Err(Error::DuplicateWord { list: name, word: w });
            }
            out.push(w);
        }
        if out.is_empty() {
            return Err(Error::EmptyWordList { list: name });
        }
        Ok(WordList { name, words: out })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.iter().any(|w| w == word)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }
}

/// Parse a word list from text: one word per line, `'#'` comment lines and
/// blank lines skipped, everything lowercased.
pub fn parse_wordlist(name: impl Into<String>, text: &str) -> Result<WordList> {
    let words = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect();
    WordList::new(name, words)
}

/// Load a word list file; see [`parse_wordlist`] for the format.
pub fn load_wordlist(path: &Path, name: impl Into<String>) -> Result<WordList> {
    let text = std::fs::read_to_string(path)?;
    parse_wordlist(name, &text)
}

// ---------------------------------------------------------------------------
// Bundled lists
// ---------------------------------------------------------------------------

macro_rules! bundled {
    ($($name:literal),+ $(,)?) => {
        /// `(name, file contents)` for every list shipped with the crate.
        pub const BUILTIN_LISTS: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../fixtures/wordlists/", $name, ".txt")))),+
        ];
    };
}

bundled!(
    "man",
    "woman",
    "white_surnames",
    "hispanic_surnames",
    "asian_surnames",
    "russian_surnames",
    "islam",
    "christianity",
    "occupations",
    "professional_occupations",
    "stereotype_occupations",
    "williams_adjectives",
    "adjectives",
    "intellectual_adjectives",
    "appearance_adjectives",
    "terrorism",
    "other_adjectives",
);

/// Names of all bundled lists.
pub fn builtin_names() -> Vec<&'static str> {
    BUILTIN_LISTS.iter().map(|(n, _)| *n).collect()
}

/// Environment variable that overrides where bundled lists are read from.
/// When set, `builtin("man")` reads `$LEXBIAS_WORDLIST_DIR/man.txt` if that
/// file exists, falling back to the compiled-in copy otherwise.
pub const WORDLIST_DIR_ENV: &str = "LEXBIAS_WORDLIST_DIR";

/// Fetch a bundled word list by name (honors [`WORDLIST_DIR_ENV`]).
pub fn builtin(name: &str) -> Result<WordList> {
    if let Ok(dir) = std::env::var(WORDLIST_DIR_ENV) {
        let candidate = Path::new(&dir).join(format!("{name}.txt"));
        if candidate.is_file() {
            return load_wordlist(&candidate, name);
        }
    }
    for (n, text) in BUILTIN_LISTS {
        if *n == name {
            return parse_wordlist(*n, text);
        }
    }
    Err(Error::UnknownList { name: name.into() })
}

/// Resolve a CLI-style word list reference: a bundled name, or a path to a
/// list file (anything containing a path separator or ending in `.txt` that
/// exists on disk).
pub fn resolve(reference: &str) -> Result<WordList> {
    let path = Path::new(reference);
    if path.is_file() && (reference.contains(std::path::MAIN_SEPARATOR) || reference.ends_with(".txt")) {
        let name = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or(reference);
        return load_wordlist(path, name);
    }
    builtin(reference)
}

// ---------------------------------------------------------------------------
// Vocabulary filtering
// ---------------------------------------------------------------------------

/// Which slices a word must appear in to survive [`restrict_to_vocab`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VocabPolicy {
    /// Present in every slice of the series.
    AllSlices,
    /// Present in at least one slice.
    AnySlice,
}

/// Drop list words that are too rare to appear in the series vocabulary.
///
/// Returns the filtered list (original order preserved) and the dropped
/// words. Errors when nothing survives.
pub fn restrict_to_vocab(
    list: &WordList,
    series: &EmbeddingSeries,
    policy: VocabPolicy,
) -> Result<(WordList, Vec<String>)> {
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for word in list.iter() {
        let keep = match policy {
            VocabPolicy::AllSlices => series.iter().all(|(_, e)| e.contains(word)),
            VocabPolicy::AnySlice => series.iter().any(|(_, e)| e.contains(word)),
        };
        if keep {
            kept.push(word.to_string());
        } else {
            dropped.push(word.to_string());
        }
    }
    if kept.is_empty() {
        return Err(Error::EmptyAfterFilter {
            list: list.name().into(),
        });
    }
    Ok((WordList::new(list.name(), kept)?, dropped))
}

// ---------------------------------------------------------------------------
// Surname table + selection
// ---------------------------------------------------------------------------

/// One row of a census surname table.
#[derive(Debug, Clone)]
pub struct SurnameRow {
    pub name: String,
    /// Overall popularity rank (1 = most common), when the file has one.
    pub rank: Option<u64>,
    pub count: f64,
    /// Ethnicity → percentage in `[0, 100]`, keyed by the column name with
    /// its prefix stripped (`pctapi` → `api`).
    pub pct: HashMap<String, f64>,
}

/// Census surname table: name, overall count/rank, per-ethnicity percentages.
#[derive(Debug, Clone)]
pub struct SurnameTable {
    pub rows: Vec<SurnameRow>,
    pub ethnicities: Vec<String>,
}

/// Column configuration for [`SurnameTable::from_csv`].
#[derive(Debug, Clone)]
pub struct SurnameColumns {
    pub name: String,
    pub rank: Option<String>,
    pub count: String,
    /// Columns starting with this prefix are ethnicity percentages.
    pub pct_prefix: String,
}

impl Default for SurnameColumns {
    fn default() -> Self {
        SurnameColumns {
            name: "name".into(),
            rank: Some("rank".into()),
            count: "count".into(),
            pct_prefix: "pct".into(),
        }
    }
}

impl SurnameTable {
    /// Parse a CSV surname table.
    ///
    /// Suppressed percentage cells (census files print `(S)`) are read as 0.
    /// Percentages outside `[0, 100]` are rejected.
    pub fn from_csv<R: Read>(reader: R, cols: &SurnameColumns) -> Result<SurnameTable> {
        let mut csv = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(reader);
        let headers = csv.headers()?.clone();
        let find = |want: &str| -> Option<usize> {
            headers.iter().position(|h| h.eq_ignore_ascii_case(want))
        };
        let name_idx = find(&cols.name).ok_or_else(|| Error::MissingColumn {
            column: cols.name.clone(),
        })?;
        let count_idx = find(&cols.count).ok_or_else(|| Error::MissingColumn {
            column: cols.count.clone(),
        })?;
        let rank_idx = match &cols.rank {
            Some(r) => find(r),
            None => None,
        };

        let mut pct_cols: Vec<(usize, String)> = Vec::new();
        for (i, h) in headers.iter().enumerate() {
            let lower = h.to_lowercase();
            if let Some(rest) = lower.strip_prefix(&cols.pct_prefix.to_lowercase()) {
                if !rest.is_empty() {
                    pct_cols.push((i, rest.to_string()));
                }
            }
        }
        if pct_cols.is_empty() {
            return Err(Error::MissingColumn {
                column: format!("{}*", cols.pct_prefix),
            });
        }

        let mut rows = Vec::new();
        for (rec0, record) in csv.records().enumerate() {
            let record = record?;
            let line = rec0 + 2; // header is line 1
            let name = record
                .get(name_idx)
                .unwrap_or_default()
                .to_lowercase();
            if name.is_empty() {
                continue;
            }
            let count: f64 = record
                .get(count_idx)
                .unwrap_or_default()
                .parse()
                .unwrap_or(0.0);
            let rank: Option<u64> = rank_idx
                .and_then(|i| record.get(i))
                .and_then(|v| v.parse().ok());
            let mut pct = HashMap::new();
            for (idx, key) in &pct_cols {
                let raw = record.get(*idx).unwrap_or_default();
                let value: f64 = raw.parse().unwrap_or(0.0);
                if !(0.0..=100.0).contains(&value) || !value.is_finite() {
                    return Err(Error::BadRecord {
                        file: "surname table".into(),
                        line,
                        detail: format!("percentage {raw:?} out of [0, 100] for {name:?}"),
                    });
                }
                pct.insert(key.clone(), value);
            }
            rows.push(SurnameRow { name, rank, count, pct });
        }

        Ok(SurnameTable {
            rows,
            ethnicities: pct_cols.into_iter().map(|(_, k)| k).collect(),
        })
    }
}

/// Options for [`select_surnames`].
#[derive(Debug, Clone)]
pub struct SurnameSelectOpts {
    /// Size of each of the two top-N candidate pools.
    pub candidate_pool: usize,
    /// Overall-rank ceiling applied to the percentage pool (ignored when the
    /// table has no rank column).
    pub rank_ceiling: u64,
    /// Minimum per-slice presence. With the membership proxy (0/1), any value
    /// ≥ 1 means "present in every slice"; 0 disables the constraint. No
    /// claim is made that a particular default matches any published choice.
    pub min_per_slice: u64,
}

impl Default for SurnameSelectOpts {
    fn default() -> Self {
        SurnameSelectOpts {
            candidate_pool: 50,
            rank_ceiling: 5000,
            min_per_slice: 1,
        }
    }
}

/// Select the `k` surnames that best represent an ethnicity across a series.
///
/// Step 1 builds a candidate set as the union of (a) the top
/// `candidate_pool` names by ethnicity percentage among names ranked within
/// `rank_ceiling` overall, and (b) the top `candidate_pool` by
/// `count × percentage`. Step 2 keeps candidates meeting `min_per_slice`
/// presence in every slice and returns the `k` with the highest average
/// presence.
///
/// Embedding files carry no frequencies, so presence in a slice is the
/// membership indicator (1 if the name is in the slice vocabulary, else 0),
/// averaged over slices. `external_freq` — corpus counts supplied from
/// outside — refines the ordering among names with equal average presence.
/// Remaining ties break lexicographically.
pub fn select_surnames(
    table: &SurnameTable,
    ethnicity: &str,
    series: &EmbeddingSeries,
    k: usize,
    opts: &SurnameSelectOpts,
    external_freq: Option<&HashMap<String, f64>>,
) -> Result<WordList> {
    if !table.ethnicities.iter().any(|e| e == ethnicity) {
        return Err(Error::MissingColumn {
            column: ethnicity.into(),
        });
    }
    let pct_of = |row: &SurnameRow| -> f64 { row.pct.get(ethnicity).copied().unwrap_or(0.0) };

    // Step 1a: top pool by percentage, restricted to common names overall.
    let mut by_pct: Vec<&SurnameRow> = table
        .rows
        .iter()
        .filter(|r| match r.rank {
            Some(rank) => rank <= opts.rank_ceiling,
            None => true,
        })
        .collect();
    by_pct.sort_by(|a, b| {
        pct_of(b)
            .total_cmp(&pct_of(a))
            .then_with(|| a.name.cmp(&b.name))
    });
    by_pct.truncate(opts.candidate_pool);

    // Step 1b: top pool by estimated ethnic count (count × percentage).
    let mut by_mass: Vec<&SurnameRow> = table.rows.iter().collect();
    by_mass.sort_by(|a, b| {
        (b.count * pct_of(b))
            .total_cmp(&(a.count * pct_of(a)))
            .then_with(|| a.name.cmp(&b.name))
    });
    by_mass.truncate(opts.candidate_pool);

    let mut candidates: Vec<String> = Vec::new();
    for row in by_pct.into_iter().chain(by_mass) {
        if !candidates.contains(&row.name) {
            candidates.push(row.name.clone());
        }
    }

    // Step 2: presence filtering and ranking.
    let n_slices = series.len() as f64;
    let mut ranked: Vec<(String, f64, f64)> = Vec::new(); // (name, avg presence, freq)
    'cand: for name in candidates {
        let mut present = 0u64;
        for (_, emb) in series.iter() {
            let here = u64::from(emb.contains(&name));
            if here < opts.min_per_slice.min(1) {
                continue 'cand;
            }
            present += here;
        }
        let avg = present as f64 / n_slices;
        let freq = external_freq
            .and_then(|m| m.get(&name).copied())
            .unwrap_or(0.0);
        ranked.push((name, avg, freq));
    }
    ranked.sort_by(|a, b| {
        b.1.total_cmp(&a.1)
            .then_with(|| b.2.total_cmp(&a.2))
            .then_with(|| a.0.cmp(&b.0))
    });

    if ranked.len() < k {
        return Err(Error::SurnameShortfall {
            needed: k,
            found: ranked.len(),
        });
    }
    ranked.truncate(k);
    WordList::new(
        format!("{ethnicity}_surnames_selected"),
        ranked.into_iter().map(|(n, _, _)| n).collect(),
    )
}
