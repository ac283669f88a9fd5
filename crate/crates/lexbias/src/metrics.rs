//! Bias metrics: group vectors, per-word and aggregate relative norm
//! distance, the cosine variant, three-way group bias, rankings, and
//! cross-metric agreement.
//!
//! Sign convention, fixed project-wide and printed in every output header:
//! for a group pair, **positive scores lean toward group two**. For triples,
//! each group gets its own score and higher means more associated with that
//! group.

use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::stats;
use crate::wordlists::WordList;

/// Which per-word score to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    /// `‖w−v1‖₂ − ‖w−v2‖₂`.
    Norm,
    /// `w·v2 − w·v1`.
    Cosine,
}

impl Metric {
    pub fn label(self) -> &'static str {
        match self {
            Metric::Norm => "norm",
            Metric::Cosine => "cosine",
        }
    }
}

impl std::fmt::Display for Metric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Metric> {
        match s {
            "norm" => Ok(Metric::Norm),
            "cosine" => Ok(Metric::Cosine),
            other => Err(Error::BadParams {
                detail: format!("unknown metric {other:?} (expected norm or cosine)"),
            }),
        }
    }
}

/// The component-wise mean of a group's word vectors — deliberately **not**
/// renormalized, since the norm metric uses the average vector directly.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupVector {
    pub group_name: String,
    pub vector: Vec<f64>,
    /// Group members found in the vocabulary.
    pub used: usize,
    /// Group members skipped as out-of-vocabulary.
    pub dropped: Vec<String>,
}

/// Average the vectors of a group's in-vocabulary members.
pub fn group_vector(emb: &Embedding, group: &WordList) -> Result<GroupVector> {
    let mut sum = vec![0.0f64; emb.dim()];
    let mut used = 0usize;
    let mut dropped = Vec::new();
    for word in group.iter() {
        match emb.vector(word) {
            Some(row) => {
                for (s, v) in sum.iter_mut().zip(row) {
                    *s += v;
                }
                used += 1;
            }
            None => dropped.push(word.to_string()),
        }
    }
    if used == 0 {
        return Err(Error::EmptyGroup {
            group: group.name().into(),
            label: emb.label().into(),
        });
    }
    for s in &mut sum {
        *s /= used as f64;
    }
    Ok(GroupVector {
        group_name: group.name().into(),
        vector: sum,
        used,
        dropped,
    })
}

fn check_dim(emb: &Embedding, g: &GroupVector) -> Result<()> {
    if g.vector.len() != emb.dim() {
        return Err(Error::GroupDimMismatch {
            group: g.group_name.clone(),
            expected: emb.dim(),
            found: g.vector.len(),
        });
    }
    Ok(())
}

fn euclid(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Per-word bias of `word` between two group vectors. Positive leans toward
/// group two under both metrics.
pub fn word_bias(
    emb: &Embedding,
    word: &str,
    g1: &GroupVector,
    g2: &GroupVector,
    metric: Metric,
) -> Result<f64> {
    check_dim(emb, g1)?;
    check_dim(emb, g2)?;
    let w = emb.vector(word).ok_or_else(|| Error::OutOfVocabulary {
        word: word.into(),
        label: emb.label().into(),
    })?;
    Ok(match metric {
        Metric::Norm => euclid(w, &g1.vector) - euclid(w, &g2.vector),
        Metric::Cosine => dot(w, &g2.vector) - dot(w, &g1.vector),
    })
}

/// Per-neutral-word bias scores for a group pair or triple.
#[derive(Debug, Clone, Serialize)]
pub struct BiasTable {
    pub metric: Metric,
    /// Label of the embedding the scores came from.
    pub embedding: String,
    /// Two names for a pair, three for a triple.
    pub groups: Vec<String>,
    /// One `(word, scores)` row per present neutral word, in list order;
    /// one score for pairs, one per group for triples.
    pub rows: Vec<(String, Vec<f64>)>,
    /// Neutral words skipped as out-of-vocabulary.
    pub dropped: Vec<String>,
}

impl BiasTable {
    /// Scores of the pair metric (single score per row).
    pub fn pair_scores(&self) -> Vec<f64> {
        self.rows.iter().map(|(_, s)| s[0]).collect()
    }

    pub fn words(&self) -> Vec<&str> {
        self.rows.iter().map(|(w, _)| w.as_str()).collect()
    }

    pub fn score_of(&self, word: &str) -> Option<&[f64]> {
        self.rows
            .iter()
            .find(|(w, _)| w == word)
            .map(|(_, s)| s.as_slice())
    }

    /// CSV with a `#` metadata comment block. Pair header is `word,score`;
    /// triple header is `word,score,score_g2,score_g3` (the bare `score`
    /// column is group one's).
    pub fn to_csv<W: Write>(&self, out: &mut W) -> Result<()> {
        writeln!(out, "# bias table")?;
        writeln!(out, "# metric: {}", self.metric)?;
        writeln!(out, "# embedding: {}", self.embedding)?;
        writeln!(out, "# groups: {}", self.groups.join(", "))?;
        if self.groups.len() == 2 {
            writeln!(
                out,
                "# sign: positive = toward group two ({})",
                self.groups[1]
            )?;
        } else {
            writeln!(out, "# sign: higher = more associated with that group")?;
        }
        if self.dropped.is_empty() {
            writeln!(out, "# dropped: none")?;
        } else {
            writeln!(
                out,
                "# dropped ({}): {}",
                self.dropped.len(),
                self.dropped.join(" ")
            )?;
        }
        match self.groups.len() {
            2 => writeln!(out, "word,score")?,
            _ => writeln!(out, "word,score,score_g2,score_g3")?,
        }
        for (word, scores) in &self.rows {
            write!(out, "{word}")?;
            for s in scores {
                write!(out, ",{s}")?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}

/// Aggregate relative association of a neutral list with group two vs one.
#[derive(Debug, Clone, Serialize)]
pub struct RelativeNormDistance {
    /// Sum of per-word biases over present neutral words.
    pub sum: f64,
    /// `sum / present word count`, comparable across lists of different
    /// effective sizes.
    pub mean: f64,
    pub table: BiasTable,
}

/// Sum and mean of per-word biases of `neutral` between `g1` and `g2`.
///
/// Out-of-vocabulary neutral words are dropped (and recorded in the table);
/// the sum accumulates in list order.
pub fn relative_norm_distance(
    emb: &Embedding,
    neutral: &WordList,
    g1: &WordList,
    g2: &WordList,
    metric: Metric,
) -> Result<RelativeNormDistance> {
    let v1 = group_vector(emb, g1)?;
    let v2 = group_vector(emb, g2)?;
    let mut rows = Vec::new();
    let mut dropped = Vec::new();
    let mut sum = 0.0f64;
    for word in neutral.iter() {
        if !emb.contains(word) {
            dropped.push(word.to_string());
            continue;
        }
        let b = word_bias(emb, word, &v1, &v2, metric)?;
        sum += b;
        rows.push((word.to_string(), vec![b]));
    }
    if rows.is_empty() {
        return Err(Error::EmptyAfterFilter {
            list: neutral.name().into(),
        });
    }
    let mean = sum / rows.len() as f64;
    Ok(RelativeNormDistance {
        sum,
        mean,
        table: BiasTable {
            metric,
            embedding: emb.label().into(),
            groups: vec![g1.name().into(), g2.name().into()],
            rows,
            dropped,
        },
    })
}

/// Per-word bias of each of three groups:
/// `bias(group i, w) = ½(‖w−v_j‖ + ‖w−v_k‖) − ‖w−v_i‖`.
///
/// Higher means more associated with that group; a word may score high for
/// several groups at once. Norm distances only (the cosine variant has no
/// three-way form here).
pub fn three_way_bias(
    emb: &Embedding,
    neutral: &WordList,
    groups: [&WordList; 3],
) -> Result<BiasTable> {
    let vs: Vec<GroupVector> = groups
        .iter()
        .map(|g| group_vector(emb, g))
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let mut dropped = Vec::new();
    for word in neutral.iter() {
        let Some(w) = emb.vector(word) else {
            dropped.push(word.to_string());
            continue;
        };
        let d: Vec<f64> = vs.iter().map(|g| euclid(w, &g.vector)).collect();
        let scores = vec![
            0.5 * (d[1] + d[2]) - d[0],
            0.5 * (d[0] + d[2]) - d[1],
            0.5 * (d[0] + d[1]) - d[2],
        ];
        rows.push((word.to_string(), scores));
    }
    if rows.is_empty() {
        return Err(Error::EmptyAfterFilter {
            list: neutral.name().into(),
        });
    }
    Ok(BiasTable {
        metric: Metric::Norm,
        embedding: emb.label().into(),
        groups: groups.iter().map(|g| g.name().to_string()).collect(),
        rows,
        dropped,
    })
}

/// Top-`k` words most associated with the group at `toward` (0-based index
/// into the table's groups).
///
/// For pair tables the single score is signed toward group two, so
/// `toward = 1` sorts descending and `toward = 0` ascending. For triples the
/// chosen group's own column sorts descending. Ties break lexicographically;
/// the result is the same total order no matter how input rows are permuted.
pub fn rank_by_bias(table: &BiasTable, k: usize, toward: usize) -> Result<Vec<(String, f64)>> {
    if toward >= table.groups.len() {
        return Err(Error::BadParams {
            detail: format!(
                "group index {toward} out of range for {} groups",
                table.groups.len()
            ),
        });
    }
    let mut scored: Vec<(String, f64)> = table
        .rows
        .iter()
        .map(|(w, s)| {
            let key = if table.groups.len() == 2 {
                if toward == 1 {
                    s[0]
                } else {
                    -s[0]
                }
            } else {
                s[toward]
            };
            (w.clone(), key)
        })
        .collect();
    scored.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    scored.truncate(k);
    Ok(scored)
}

/// Pearson correlation between the norm-metric and cosine-metric per-word
/// scores on the common present neutral words.
pub fn metric_agreement(
    emb: &Embedding,
    neutral: &WordList,
    g1: &WordList,
    g2: &WordList,
) -> Result<f64> {
    let norm = relative_norm_distance(emb, neutral, g1, g2, Metric::Norm)?;
    let cos = relative_norm_distance(emb, neutral, g1, g2, Metric::Cosine)?;
    let (r, _p) = stats::pearson(&norm.table.pair_scores(), &cos.table.pair_scores())?;
    Ok(r)
}
