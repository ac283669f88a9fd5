//! Desk-scale temporal embedding trainer: dated-corpus ingestion, year-window
//! slicing, co-occurrence counting, PPMI with context-distribution smoothing,
//! seeded randomized truncated SVD, and skip-gram with negative sampling.
//!
//! Everything is deterministic given the seed: vocabularies are ordered
//! lexicographically (so token order affects counts, never indexing), the SVD
//! uses a seeded random projection with a fixed sign convention, and SGNS
//! runs single-worker with one RNG stream. Tokenization is whitespace +
//! lowercase, nothing more.

use std::collections::{BTreeMap, HashMap};
use std::io::BufRead;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{normalize, Embedding, EmbeddingSeries};
use crate::error::{Error, Result};
use crate::linalg::{orthonormalize_columns, sym_eigen, Mat};

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

/// One document with its publication year.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatedDocument {
    pub date: i32,
    pub tokens: Vec<String>,
}

impl DatedDocument {
    pub fn new(date: i32, tokens: Vec<String>) -> Result<DatedDocument> {
        if tokens.is_empty() {
            return Err(Error::EmptyCorpus {
                context: format!(" (document dated {date} has no tokens)"),
            });
        }
        Ok(DatedDocument {
            date,
            tokens: tokens.into_iter().map(|t| t.to_lowercase()).collect(),
        })
    }
}

/// Parse line-oriented corpus text: `YYYY<TAB>space-separated tokens`,
/// `'#'` comment lines and blank lines skipped.
pub fn parse_corpus<R: BufRead>(reader: R) -> Result<Vec<DatedDocument>> {
    let mut docs = Vec::new();
    for (line0, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = line0 + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some((date_part, text)) = line.split_once('\t') else {
            return Err(Error::BadRecord {
                file: "corpus".into(),
                line: line_no,
                detail: "expected YYYY<TAB>tokens".into(),
            });
        };
        let date: i32 = date_part.trim().parse().map_err(|_| Error::BadRecord {
            file: "corpus".into(),
            line: line_no,
            detail: format!("bad year {:?}", date_part.trim()),
        })?;
        let tokens: Vec<String> = text.split_whitespace().map(str::to_string).collect();
        if tokens.is_empty() {
            return Err(Error::BadRecord {
                file: "corpus".into(),
                line: line_no,
                detail: "document has no tokens".into(),
            });
        }
        docs.push(DatedDocument::new(date, tokens)?);
    }
    if docs.is_empty() {
        return Err(Error::EmptyCorpus {
            context: " (no documents parsed)".into(),
        });
    }
    Ok(docs)
}

/// Load a corpus from a file (line format above) or a directory with one
/// file per year: each file named `<year>.txt` (any extension accepted, the
/// stem must parse as a year), each of its lines one document.
pub fn load_corpus(path: &Path) -> Result<Vec<DatedDocument>> {
    if path.is_dir() {
        let mut files: Vec<std::path::PathBuf> = std::fs::read_dir(path)?
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.is_file())
            .collect();
        files.sort();
        let mut docs = Vec::new();
        for file in files {
            let Some(stem) = file.file_stem().and_then(|s| s.to_str()) else {
                continue;
            };
            let Ok(year) = stem.parse::<i32>() else {
                continue; // non-year files (READMEs etc.) are ignored
            };
            let text = std::fs::read_to_string(&file)?;
            for line in text.lines() {
                let tokens: Vec<String> =
                    line.split_whitespace().map(str::to_string).collect();
                if !tokens.is_empty() {
                    docs.push(DatedDocument::new(year, tokens)?);
                }
            }
        }
        if docs.is_empty() {
            return Err(Error::EmptyCorpus {
                context: format!(" (no year files under {})", path.display()),
            });
        }
        Ok(docs)
    } else {
        let file = std::fs::File::open(path)?;
        parse_corpus(std::io::BufReader::new(file))
    }
}

/// One temporal slice: all documents within ±⌊window/2⌋ years of the center,
/// flattened to a single token stream in input document order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSlice {
    pub center_year: i32,
    pub tokens: Vec<String>,
}

/// Partition documents into year windows.
///
/// Centers start at `min_date + ⌊window/2⌋` and advance by `step_years`;
/// a document dated `d` lands in the slice centered at `c` when
/// `c − ⌊w/2⌋ ≤ d ≤ c + ⌊w/2⌋`. Slices that catch no documents are dropped.
pub fn slice_corpus(
    docs: &[DatedDocument],
    window_years: i32,
    step_years: i32,
) -> Result<Vec<CorpusSlice>> {
    if window_years < 1 || step_years < 1 {
        return Err(Error::BadParams {
            detail: format!(
                "window_years ({window_years}) and step_years ({step_years}) must be ≥ 1"
            ),
        });
    }
    if docs.is_empty() {
        return Err(Error::EmptyCorpus {
            context: " (slice_corpus)".into(),
        });
    }
    let half = window_years / 2;
    let min_date = docs.iter().map(|d| d.date).min().unwrap();
    let max_date = docs.iter().map(|d| d.date).max().unwrap();

    let mut slices = Vec::new();
    let mut center = min_date + half;
    while center - half <= max_date {
        let lo = center - half;
        let hi = center + half;
        let mut tokens = Vec::new();
        for doc in docs {
            if (lo..=hi).contains(&doc.date) {
                tokens.extend_from_slice(&doc.tokens);
            }
        }
        if !tokens.is_empty() {
            slices.push(CorpusSlice {
                center_year: center,
                tokens,
            });
        }
        center += step_years;
    }
    Ok(slices)
}

// ---------------------------------------------------------------------------
// Co-occurrence
// ---------------------------------------------------------------------------

/// Symmetric co-occurrence counts over a token stream.
///
/// The vocabulary is sorted lexicographically; `pairs` stores both directions
/// of every co-occurrence, so `total_pairs` equals the sum over the map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CooccurrenceCounts {
    pub vocab: Vec<String>,
    /// Occurrences per vocab index in the (unmasked) token stream.
    pub word_counts: Vec<u64>,
    /// Directed counts `(row, col) → count`; symmetric by construction.
    pub pairs: BTreeMap<(usize, usize), u64>,
    pub total_pairs: u64,
}

impl CooccurrenceCounts {
    pub fn index_of(&self, word: &str) -> Option<usize> {
        self.vocab.binary_search_by(|w| w.as_str().cmp(word)).ok()
    }

    pub fn pair_count(&self, a: &str, b: &str) -> u64 {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.pairs.get(&(i, j)).copied().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn count_of(&self, word: &str) -> u64 {
        self.index_of(word)
            .map(|i| self.word_counts[i])
            .unwrap_or(0)
    }
}

/// Count symmetric, distance-unweighted co-occurrences within `±window_size`
/// positions.
///
/// Words occurring fewer than `min_count` times are masked: their positions
/// stay in the stream (so distances between surviving words are unchanged)
/// but they join no pairs and leave the vocabulary.
pub fn cooccurrence(
    tokens: &[String],
    window_size: usize,
    min_count: u64,
) -> Result<CooccurrenceCounts> {
    if window_size < 1 {
        return Err(Error::BadParams {
            detail: "window_size must be ≥ 1".into(),
        });
    }
    let mut freq: HashMap<&str, u64> = HashMap::new();
    for t in tokens {
        *freq.entry(t.as_str()).or_insert(0) += 1;
    }
    let mut vocab: Vec<String> = freq
        .iter()
        .filter(|(_, &c)| c >= min_count.max(1))
        .map(|(w, _)| w.to_string())
        .collect();
    vocab.sort();
    let index: HashMap<&str, usize> = vocab
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_str(), i))
        .collect();
    let word_counts: Vec<u64> = vocab.iter().map(|w| freq[w.as_str()]).collect();

    // Token stream with masked positions preserved.
    let ids: Vec<Option<usize>> = tokens.iter().map(|t| index.get(t.as_str()).copied()).collect();

    let mut pairs: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut total_pairs = 0u64;
    for (i, id) in ids.iter().enumerate() {
        let Some(a) = *id else { continue };
        // take() counts positions (masked ones included), flatten skips them.
        for &b in ids[i + 1..].iter().take(window_size).flatten() {
            *pairs.entry((a, b)).or_insert(0) += 1;
            *pairs.entry((b, a)).or_insert(0) += 1;
            total_pairs += 2;
        }
    }
    Ok(CooccurrenceCounts {
        vocab,
        word_counts,
        pairs,
        total_pairs,
    })
}

// ---------------------------------------------------------------------------
// PPMI
// ---------------------------------------------------------------------------

/// Sparse positive PMI matrix over the co-occurrence vocabulary.
#[derive(Debug, Clone)]
pub struct PpmiMatrix {
    pub vocab: Vec<String>,
    /// Sparse rows: `rows[i]` holds `(column, value)` with value > 0,
    /// columns ascending.
    pub rows: Vec<Vec<(usize, f64)>>,
}

impl PpmiMatrix {
    pub fn n(&self) -> usize {
        self.vocab.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.rows[i]
            .binary_search_by(|(c, _)| c.cmp(&j))
            .map(|k| self.rows[i][k].1)
            .unwrap_or(0.0)
    }

    /// Dense `self · x` for an `n × k` dense block.
    fn mul_dense(&self, x: &Mat) -> Mat {
        let mut out = Mat::zeros(self.n(), x.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, v) in row {
                let src = x.row(j).to_vec();
                let dst = out.row_mut(i);
                for (d, s) in dst.iter_mut().zip(&src) {
                    *d += v * s;
                }
            }
        }
        out
    }
}

/// Positive pointwise mutual information with context-distribution smoothing:
/// `max(0, ln(P(w,c) / (P(w) · P_α(c))))`, where `P_α` raises the context
/// marginal to `smoothing_alpha` and renormalizes. Marginals come from the
/// pair counts (row/column sums), not raw word frequencies. Non-positive
/// cells are structural zeros. `smoothing_alpha = 1` is plain PPMI.
pub fn ppmi(counts: &CooccurrenceCounts, smoothing_alpha: f64) -> Result<PpmiMatrix> {
    if !(smoothing_alpha > 0.0 && smoothing_alpha <= 1.0) {
        return Err(Error::BadParams {
            detail: format!("smoothing_alpha must be in (0, 1], got {smoothing_alpha}"),
        });
    }
    if counts.total_pairs == 0 {
        return Err(Error::EmptyCorpus {
            context: " (no co-occurrence pairs)".into(),
        });
    }
    let n = counts.vocab.len();
    let total = counts.total_pairs as f64;

    let mut row_sums = vec![0.0f64; n];
    let mut col_sums = vec![0.0f64; n];
    for (&(i, j), &c) in &counts.pairs {
        row_sums[i] += c as f64;
        col_sums[j] += c as f64;
    }
    let alpha_norm: f64 = col_sums.iter().map(|&s| s.powf(smoothing_alpha)).sum();

    let mut rows: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for (&(i, j), &c) in &counts.pairs {
        let p_wc = c as f64 / total;
        let p_w = row_sums[i] / total;
        let p_c = col_sums[j].powf(smoothing_alpha) / alpha_norm;
        let pmi = (p_wc / (p_w * p_c)).ln();
        if pmi > 0.0 {
            rows[i].push((j, pmi));
        }
    }
    // BTreeMap iteration is key-ordered, so columns are already ascending.
    Ok(PpmiMatrix {
        vocab: counts.vocab.clone(),
        rows,
    })
}

// ---------------------------------------------------------------------------
// Truncated SVD embedding
// ---------------------------------------------------------------------------

fn std_normal(rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let u1: f64 = rng.random();
        if u1 > 1e-300 {
            let u2: f64 = rng.random();
            return (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos();
        }
    }
}

/// Leading eigenpairs of the symmetric PPMI matrix by |eigenvalue|, via a
/// seeded randomized projection with 4 power iterations.
fn truncated_sym_eigs(mat: &PpmiMatrix, k: usize, seed: u64) -> (Vec<f64>, Mat) {
    let n = mat.n();
    let l = (k + 8).min(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut y = Mat::zeros(n, l);
    for i in 0..n {
        for j in 0..l {
            y.set(i, j, std_normal(&mut rng));
        }
    }
    y = mat.mul_dense(&y);
    for _ in 0..4 {
        orthonormalize_columns(&mut y);
        y = mat.mul_dense(&y);
    }
    orthonormalize_columns(&mut y);
    let q = y; // n × l orthonormal range basis

    // Small symmetric problem B = Qᵀ A Q.
    let aq = mat.mul_dense(&q); // n × l
    let b = q.transpose().mul(&aq); // l × l
    let (vals, vecs) = sym_eigen(&b);

    // Order by |eigenvalue|, keep k.
    let mut order: Vec<usize> = (0..l).collect();
    order.sort_by(|&i, &j| vals[j].abs().total_cmp(&vals[i].abs()).then(i.cmp(&j)));
    order.truncate(k);

    let mut eigvals = Vec::with_capacity(k);
    let mut u = Mat::zeros(n, k);
    for (new_j, &old_j) in order.iter().enumerate() {
        eigvals.push(vals[old_j]);
        // u_j = Q · w_j
        for i in 0..n {
            let mut s = 0.0;
            for t in 0..l {
                s += q.get(i, t) * vecs.get(t, old_j);
            }
            u.set(i, new_j, s);
        }
    }

    // Sign convention: the largest-magnitude component of each eigenvector is
    // made positive (first index wins ties), so results are reproducible.
    for j in 0..k {
        let mut best = 0usize;
        let mut best_abs = -1.0f64;
        for i in 0..n {
            let a = u.get(i, j).abs();
            if a > best_abs {
                best_abs = a;
                best = i;
            }
        }
        if u.get(best, j) < 0.0 {
            for i in 0..n {
                let v = -u.get(i, j);
                u.set(i, j, v);
            }
        }
    }
    (eigvals, u)
}

/// Embed words as truncated-SVD rows of the PPMI matrix: left singular
/// vectors scaled by `singular value^0.5`, l2-normalized.
///
/// Deterministic given `seed`; the sign convention above makes repeated runs
/// bit-identical and vocabulary-permutation invariant (the vocabulary is
/// already sorted).
pub fn svd_embed(mat: &PpmiMatrix, dim: usize, seed: u64) -> Result<Embedding> {
    let n = mat.n();
    if dim == 0 {
        return Err(Error::BadParams {
            detail: "dim must be ≥ 1".into(),
        });
    }
    if dim > n {
        return Err(Error::DimTooLarge { dim, bound: n });
    }
    let (eigvals, u) = truncated_sym_eigs(mat, dim, seed);
    // Singular values of a symmetric matrix are |eigenvalues|.
    let scale: Vec<f64> = eigvals.iter().map(|v| v.abs().sqrt()).collect();
    let rows: Vec<(String, Vec<f64>)> = mat
        .vocab
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let row: Vec<f64> = (0..dim).map(|j| u.get(i, j) * scale[j]).collect();
            (w.clone(), row)
        })
        .collect();
    normalize(Embedding::from_rows("svd", rows)?)
}

// ---------------------------------------------------------------------------
// SGNS
// ---------------------------------------------------------------------------

/// Hyperparameters shared by the trainers.
#[derive(Debug, Clone)]
pub struct TrainerParams {
    pub dim: usize,
    /// Context window in token positions, each side.
    pub window_size: usize,
    pub min_count: u64,
    /// Negative samples per (center, context) pair.
    pub negatives: usize,
    pub epochs: usize,
    pub learning_rate: f64,
    /// Context-distribution smoothing for PPMI and the SGNS negative table.
    pub smoothing_alpha: f64,
    pub seed: u64,
}

impl Default for TrainerParams {
    fn default() -> Self {
        TrainerParams {
            dim: 50,
            window_size: 4,
            min_count: 1,
            negatives: 5,
            epochs: 5,
            learning_rate: 0.025,
            smoothing_alpha: 0.75,
            seed: 42,
        }
    }
}

impl TrainerParams {
    pub fn validate(&self) -> Result<()> {
        if self.dim < 1 {
            return Err(Error::BadParams { detail: "dim must be ≥ 1".into() });
        }
        if self.window_size < 1 {
            return Err(Error::BadParams { detail: "window_size must be ≥ 1".into() });
        }
        if !(self.smoothing_alpha > 0.0 && self.smoothing_alpha <= 1.0) {
            return Err(Error::BadParams {
                detail: format!("smoothing_alpha must be in (0, 1], got {}", self.smoothing_alpha),
            });
        }
        if self.epochs < 1 {
            return Err(Error::BadParams { detail: "epochs must be ≥ 1".into() });
        }
        if self.learning_rate.is_nan() || self.learning_rate <= 0.0 {
            return Err(Error::BadParams { detail: "learning_rate must be > 0".into() });
        }
        Ok(())
    }
}

/// SGNS training output: the embedding plus per-epoch mean loss.
#[derive(Debug, Clone)]
pub struct SgnsOutput {
    pub embedding: Embedding,
    pub epoch_losses: Vec<f64>,
}

fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

/// Skip-gram with negative sampling over one token stream.
///
/// Standard objective: for each in-window (center, context) pair, ascend
/// `ln σ(w·c) + Σ ln σ(−w·c_neg)` with negatives drawn from the unigram
/// distribution raised to `smoothing_alpha`. The learning rate decays
/// linearly over all scheduled updates (floor `1e-4` of the initial rate).
/// Single-worker and fully deterministic for a given seed. Final word
/// vectors are the l2-normalized input vectors.
#[allow(clippy::needless_range_loop)] // positions, not items, drive the window math
pub fn sgns_train(tokens: &[String], params: &TrainerParams) -> Result<SgnsOutput> {
    params.validate()?;
    let counts = cooccurrence(tokens, params.window_size, params.min_count)?;
    if counts.vocab.is_empty() {
        return Err(Error::EmptyCorpus {
            context: " (vocabulary empty after min_count filtering)".into(),
        });
    }
    let n = counts.vocab.len();
    let dim = params.dim;
    let index: HashMap<&str, usize> = counts
        .vocab
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_str(), i))
        .collect();
    let ids: Vec<Option<usize>> = tokens.iter().map(|t| index.get(t.as_str()).copied()).collect();

    // Cumulative table for unigram^alpha negative sampling.
    let weights: Vec<f64> = counts
        .word_counts
        .iter()
        .map(|&c| (c as f64).powf(params.smoothing_alpha))
        .collect();
    let total_weight: f64 = weights.iter().sum();
    let mut cumulative = Vec::with_capacity(n);
    let mut acc = 0.0;
    for w in &weights {
        acc += w;
        cumulative.push(acc / total_weight);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let span = 0.5 / dim as f64;
    let mut input: Vec<f64> = (0..n * dim).map(|_| rng.random_range(-span..span)).collect();
    let mut output = vec![0.0f64; n * dim];

    let total_positions = (params.epochs * tokens.len()) as f64;
    let mut processed = 0f64;
    let mut epoch_losses = Vec::with_capacity(params.epochs);
    let mut grad = vec![0.0f64; dim];

    for _epoch in 0..params.epochs {
        let mut loss_sum = 0.0f64;
        let mut loss_pairs = 0u64;
        for (pos, id) in ids.iter().enumerate() {
            let lr = params.learning_rate
                * (1.0 - processed / total_positions).max(1e-4);
            processed += 1.0;
            let Some(center) = *id else { continue };
            let lo = pos.saturating_sub(params.window_size);
            let hi = (pos + params.window_size).min(ids.len() - 1);
            for ctx_pos in lo..=hi {
                if ctx_pos == pos {
                    continue;
                }
                let Some(context) = ids[ctx_pos] else { continue };

                let w = &input[center * dim..(center + 1) * dim];
                grad.iter_mut().for_each(|g| *g = 0.0);
                // Positive example.
                {
                    let c = &output[context * dim..(context + 1) * dim];
                    let f = sigmoid(w.iter().zip(c).map(|(a, b)| a * b).sum());
                    loss_sum -= f.max(1e-10).ln();
                    let g = (1.0 - f) * lr;
                    for (gi, ci) in grad.iter_mut().zip(c) {
                        *gi += g * ci;
                    }
                    let c = &mut output[context * dim..(context + 1) * dim];
                    for (ci, wi) in c.iter_mut().zip(w.iter()) {
                        *ci += g * wi;
                    }
                }
                // Negative examples.
                let w = &input[center * dim..(center + 1) * dim];
                for _ in 0..params.negatives {
                    let r: f64 = rng.random();
                    let neg = cumulative.partition_point(|&c| c < r).min(n - 1);
                    if neg == context {
                        continue;
                    }
                    let c = &output[neg * dim..(neg + 1) * dim];
                    let f = sigmoid(w.iter().zip(c).map(|(a, b)| a * b).sum());
                    loss_sum -= (1.0 - f).max(1e-10).ln();
                    let g = -f * lr;
                    for (gi, ci) in grad.iter_mut().zip(c) {
                        *gi += g * ci;
                    }
                    let c = &mut output[neg * dim..(neg + 1) * dim];
                    let w = &input[center * dim..(center + 1) * dim];
                    for (ci, wi) in c.iter_mut().zip(w.iter()) {
                        *ci += g * wi;
                    }
                }
                let w = &mut input[center * dim..(center + 1) * dim];
                for (wi, gi) in w.iter_mut().zip(&grad) {
                    *wi += gi;
                }
                loss_pairs += 1;
            }
        }
        epoch_losses.push(if loss_pairs > 0 {
            loss_sum / loss_pairs as f64
        } else {
            0.0
        });
    }

    let rows: Vec<(String, Vec<f64>)> = counts
        .vocab
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), input[i * dim..(i + 1) * dim].to_vec()))
        .collect();
    let embedding = normalize(Embedding::from_rows("sgns", rows)?)?;
    Ok(SgnsOutput {
        embedding,
        epoch_losses,
    })
}

// ---------------------------------------------------------------------------
// Series training
// ---------------------------------------------------------------------------

/// Which trainer builds each slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    PpmiSvd,
    Sgns,
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Algorithm> {
        match s {
            "ppmi-svd" | "svd" => Ok(Algorithm::PpmiSvd),
            "sgns" => Ok(Algorithm::Sgns),
            other => Err(Error::BadParams {
                detail: format!("unknown algorithm {other:?} (expected ppmi-svd or sgns)"),
            }),
        }
    }
}

/// Slice a dated corpus and train one embedding per slice.
pub fn train_series(
    docs: &[DatedDocument],
    window_years: i32,
    step_years: i32,
    algorithm: Algorithm,
    params: &TrainerParams,
) -> Result<EmbeddingSeries> {
    params.validate()?;
    let slices = slice_corpus(docs, window_years, step_years)?;
    let mut entries = Vec::with_capacity(slices.len());
    for slice in &slices {
        let train = || -> Result<Embedding> {
            let mut emb = match algorithm {
                Algorithm::PpmiSvd => {
                    let counts = cooccurrence(&slice.tokens, params.window_size, params.min_count)?;
                    let mat = ppmi(&counts, params.smoothing_alpha)?;
                    let dim = params.dim.min(mat.n());
                    svd_embed(&mat, dim, params.seed)?
                }
                Algorithm::Sgns => sgns_train(&slice.tokens, params)?.embedding,
            };
            emb.set_label(slice.center_year.to_string());
            Ok(emb)
        };
        let emb = train().map_err(|e| e.for_series_entry(slice.center_year))?;
        entries.push((slice.center_year, emb));
    }
    EmbeddingSeries::from_unordered(entries)
}
