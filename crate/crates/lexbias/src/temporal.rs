//! Temporal analyses over an [`EmbeddingSeries`]: bias time series with
//! optional bootstrap intervals, decade-pair correlation matrices, trend
//! significance, and per-word rank trajectories.
//!
//! Cross-decade comparisons operate on bias *scores*, never on raw vectors,
//! so no vector-space alignment between slices is needed or performed.

use std::collections::HashMap;
use std::io::Write;

use serde::Serialize;

use crate::embedding::EmbeddingSeries;
use crate::error::{Error, Result};
use crate::metrics::{self, Metric};
use crate::stats;
use crate::wordlists::WordList;

// ---------------------------------------------------------------------------
// TimeSeries
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimePoint {
    pub label: i32,
    pub value: f64,
    pub ci_low: Option<f64>,
    pub ci_high: Option<f64>,
}

/// Ordered sequence of `(time label, value)` points, optionally with
/// confidence bounds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimeSeries {
    pub points: Vec<TimePoint>,
}

impl TimeSeries {
    /// Validates strictly increasing labels and finite values.
    pub fn new(points: Vec<TimePoint>) -> Result<TimeSeries> {
        for pair in points.windows(2) {
            if pair[1].label <= pair[0].label {
                return Err(Error::UnorderedLabels {
                    label: pair[1].label,
                });
            }
        }
        for p in &points {
            if !p.value.is_finite() {
                return Err(Error::NonFinite {
                    word: format!("time series value at {}", p.label),
                    location: "time series".into(),
                });
            }
        }
        Ok(TimeSeries { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn labels(&self) -> Vec<i32> {
        self.points.iter().map(|p| p.label).collect()
    }

    pub fn values(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.value).collect()
    }

    /// CSV rows `time,value,ci_low,ci_high`; CI cells are empty when absent.
    pub fn to_csv<W: Write>(&self, out: &mut W) -> Result<()> {
        writeln!(out, "time,value,ci_low,ci_high")?;
        for p in &self.points {
            let lo = p.ci_low.map(|v| v.to_string()).unwrap_or_default();
            let hi = p.ci_high.map(|v| v.to_string()).unwrap_or_default();
            writeln!(out, "{},{},{},{}", p.label, p.value, lo, hi)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// bias_series
// ---------------------------------------------------------------------------

/// How per-word biases collapse to one value per slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Aggregate {
    Sum,
    Mean,
}

impl std::str::FromStr for Aggregate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Aggregate> {
        match s {
            "sum" => Ok(Aggregate::Sum),
            "mean" => Ok(Aggregate::Mean),
            other => Err(Error::BadParams {
                detail: format!("unknown aggregate {other:?} (expected sum or mean)"),
            }),
        }
    }
}

/// Bootstrap settings for [`bias_series`].
#[derive(Debug, Clone, Copy)]
pub struct BootstrapSpec {
    pub n_resamples: usize,
    pub level: f64,
    pub seed: u64,
}

/// One aggregated bias value per slice, optionally with a percentile
/// bootstrap interval over the slice's per-word scores.
///
/// For level comparability across slices, pre-filter `neutral` with
/// [`crate::wordlists::restrict_to_vocab`] under the all-slices policy; this
/// function itself only drops out-of-vocabulary words per slice.
///
/// Each slice's bootstrap seed is derived from `(spec.seed, slice label)`, so
/// adding or removing slices does not perturb the intervals of the others.
pub fn bias_series(
    series: &EmbeddingSeries,
    neutral: &WordList,
    g1: &WordList,
    g2: &WordList,
    metric: Metric,
    aggregate: Aggregate,
    bootstrap: Option<BootstrapSpec>,
) -> Result<TimeSeries> {
    let mut points = Vec::with_capacity(series.len());
    for (label, emb) in series.iter() {
        let rnd = metrics::relative_norm_distance(emb, neutral, g1, g2, metric)
            .map_err(|e| e.for_series_entry(label))?;
        let value = match aggregate {
            Aggregate::Sum => rnd.sum,
            Aggregate::Mean => rnd.mean,
        };
        let (ci_low, ci_high) = match bootstrap {
            None => (None, None),
            Some(spec) => {
                let scores = rnd.table.pair_scores();
                let stat = move |s: &[f64]| -> Result<f64> {
                    let sum: f64 = s.iter().sum();
                    Ok(match aggregate {
                        Aggregate::Sum => sum,
                        Aggregate::Mean => sum / s.len() as f64,
                    })
                };
                let slice_seed = spec.seed.wrapping_add(label as i64 as u64);
                let boot = stats::bootstrap_ci(
                    &scores,
                    stat,
                    spec.n_resamples,
                    spec.level,
                    slice_seed,
                )
                .map_err(|e| e.for_series_entry(label))?;
                (Some(boot.ci_low), Some(boot.ci_high))
            }
        };
        points.push(TimePoint {
            label,
            value,
            ci_low,
            ci_high,
        });
    }
    TimeSeries::new(points)
}

// ---------------------------------------------------------------------------
// Correlation matrix
// ---------------------------------------------------------------------------

/// Symmetric matrix of Pearson correlations between per-word bias scores of
/// slice pairs, each over the pair's own word intersection.
#[derive(Debug, Clone, Serialize)]
pub struct CorrelationMatrix {
    pub labels: Vec<i32>,
    /// Row-major `labels.len() × labels.len()`.
    pub values: Vec<f64>,
}

impl CorrelationMatrix {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.labels.len() + j]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// CSV grid: header `time,<label...>`, one labeled row per slice.
    pub fn to_csv<W: Write>(&self, out: &mut W) -> Result<()> {
        let header: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        writeln!(out, "time,{}", header.join(","))?;
        for (i, label) in self.labels.iter().enumerate() {
            let row: Vec<String> = (0..self.labels.len())
                .map(|j| self.get(i, j).to_string())
                .collect();
            writeln!(out, "{},{}", label, row.join(","))?;
        }
        Ok(())
    }
}

/// Per-slice word → bias score maps for `neutral` between `g1` and `g2`.
fn per_slice_scores(
    series: &EmbeddingSeries,
    neutral: &WordList,
    g1: &WordList,
    g2: &WordList,
    metric: Metric,
) -> Result<Vec<(i32, HashMap<String, f64>)>> {
    let mut out = Vec::with_capacity(series.len());
    for (label, emb) in series.iter() {
        let rnd = metrics::relative_norm_distance(emb, neutral, g1, g2, metric)
            .map_err(|e| e.for_series_entry(label))?;
        let map: HashMap<String, f64> =
            rnd.table.rows.iter().map(|(w, s)| (w.clone(), s[0])).collect();
        out.push((label, map));
    }
    Ok(out)
}

/// Pairwise Pearson correlations of per-word bias across slices.
///
/// Entry `(i, j)` uses only the neutral words present in both slices, so a
/// sparse early decade does not shrink every other pair's sample.
pub fn correlation_matrix(
    series: &EmbeddingSeries,
    neutral: &WordList,
    g1: &WordList,
    g2: &WordList,
    metric: Metric,
) -> Result<CorrelationMatrix> {
    if series.len() < 2 {
        return Err(Error::TooFewObservations {
            needed: 2,
            found: series.len(),
            context: "correlation_matrix slices".into(),
        });
    }
    let slices = per_slice_scores(series, neutral, g1, g2, metric)?;
    let n = slices.len();
    let mut values = vec![0.0f64; n * n];
    for i in 0..n {
        values[i * n + i] = 1.0;
        for j in i + 1..n {
            let (la, a) = &slices[i];
            let (lb, b) = &slices[j];
            // Deterministic intersection order: sort shared words.
            let mut shared: Vec<&String> = a.keys().filter(|w| b.contains_key(*w)).collect();
            shared.sort();
            if shared.len() < 3 {
                return Err(Error::CorrelationPair {
                    a: *la,
                    b: *lb,
                    detail: format!("only {} shared words (need 3)", shared.len()),
                });
            }
            let xs: Vec<f64> = shared.iter().map(|w| a[*w]).collect();
            let ys: Vec<f64> = shared.iter().map(|w| b[*w]).collect();
            let (r, _) = stats::pearson(&xs, &ys).map_err(|e| Error::CorrelationPair {
                a: *la,
                b: *lb,
                detail: e.to_string(),
            })?;
            values[i * n + j] = r;
            values[j * n + i] = r;
        }
    }
    Ok(CorrelationMatrix {
        labels: slices.into_iter().map(|(l, _)| l).collect(),
        values,
    })
}

// ---------------------------------------------------------------------------
// Trend test
// ---------------------------------------------------------------------------

/// OLS trend of a time series' values on its labels.
#[derive(Debug, Clone, Serialize)]
pub struct TrendTest {
    pub slope: f64,
    pub stderr: f64,
    /// Two-sided p-value for the slope; 1.0 when the series is constant.
    pub p: f64,
    /// True when the values had no variance, making the test degenerate.
    pub zero_variance: bool,
}

/// Fit `value ~ time` and report the slope's significance.
pub fn trend_test(ts: &TimeSeries) -> Result<TrendTest> {
    let n = ts.len();
    if n < 3 {
        return Err(Error::TooFewObservations {
            needed: 3,
            found: n,
            context: "trend_test".into(),
        });
    }
    let values = ts.values();
    let first = values[0];
    if values.iter().all(|&v| v == first) {
        return Ok(TrendTest {
            slope: 0.0,
            stderr: 0.0,
            p: 1.0,
            zero_variance: true,
        });
    }
    let times: Vec<f64> = ts.points.iter().map(|p| p.label as f64).collect();
    let fit = stats::ols(&values, &[&times], true)?;
    Ok(TrendTest {
        slope: fit.coefs[1],
        stderr: fit.stderrs[1],
        p: fit.p_values[1],
        zero_variance: false,
    })
}

// ---------------------------------------------------------------------------
// Rank trajectories
// ---------------------------------------------------------------------------

/// Per-slice rank of one word within the neutral list (1 = most group-two
/// biased). Slices where the word is out of vocabulary hold `None`.
#[derive(Debug, Clone, Serialize)]
pub struct RankTrajectory {
    pub word: String,
    pub points: Vec<(i32, Option<usize>)>,
}

impl RankTrajectory {
    /// CSV rows `time,rank`, empty rank cell for gaps.
    pub fn to_csv<W: Write>(&self, out: &mut W) -> Result<()> {
        writeln!(out, "time,rank")?;
        for (label, rank) in &self.points {
            let r = rank.map(|r| r.to_string()).unwrap_or_default();
            writeln!(out, "{label},{r}")?;
        }
        Ok(())
    }
}

/// Track where `word` ranks among `neutral` (toward group two) per slice.
pub fn word_rank_trajectory(
    series: &EmbeddingSeries,
    word: &str,
    neutral: &WordList,
    g1: &WordList,
    g2: &WordList,
    metric: Metric,
) -> Result<RankTrajectory> {
    if !neutral.contains(word) {
        return Err(Error::BadParams {
            detail: format!("word {word:?} is not in neutral list {:?}", neutral.name()),
        });
    }
    let mut points = Vec::with_capacity(series.len());
    let mut ever_present = false;
    for (label, emb) in series.iter() {
        if !emb.contains(word) {
            points.push((label, None));
            continue;
        }
        ever_present = true;
        let rnd = metrics::relative_norm_distance(emb, neutral, g1, g2, metric)
            .map_err(|e| e.for_series_entry(label))?;
        let ranked = metrics::rank_by_bias(&rnd.table, rnd.table.rows.len(), 1)?;
        let rank = ranked
            .iter()
            .position(|(w, _)| w == word)
            .map(|i| i + 1)
            .expect("word is in this slice's table");
        points.push((label, Some(rank)));
    }
    if !ever_present {
        return Err(Error::NeverInVocabulary { word: word.into() });
    }
    Ok(RankTrajectory {
        word: word.into(),
        points,
    })
}
