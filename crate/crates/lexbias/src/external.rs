//! External validation data: census occupation participation tables and
//! survey stereotype scores, the log-proportion transforms that put them on
//! the regression scale, word-level joins against bias tables, and the
//! pooled scale-alignment fit.
//!
//! Percentages live in `[0, 100]` in files; everything converts to
//! proportions in `(0, 1)` at the boundary. Natural log throughout.

use std::collections::HashSet;
use std::io::Read;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::metrics::BiasTable;
use crate::stats::{self, OlsFit};

/// `(word-or-occupation, value)` pairs plus the entries skipped as degenerate.
pub type ValuesWithSkipped = (Vec<(String, f64)>, Vec<String>);

// ---------------------------------------------------------------------------
// Transforms
// ---------------------------------------------------------------------------

/// `ln(p / (1−p))` for a proportion strictly inside `(0, 1)`.
///
/// A value of 0 indicates a balanced ratio. Callers must pre-filter
/// unavailable or degenerate shares; 0 and 1 are errors here.
pub fn log_prop(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidProportion { p });
    }
    Ok((p / (1.0 - p)).ln())
}

/// Log proportion of group one's share relative to groups one and two only:
/// `log_prop(pct1 / (pct1 + pct2))`, which reduces to `ln(pct1 / pct2)`.
///
/// Computed so that `cond_log_prop(a, b) + cond_log_prop(b, a)` is exactly
/// zero: equal inputs return 0, and the smaller-first ordering is evaluated
/// as the negation of the larger-first one.
pub fn cond_log_prop(pct1: f64, pct2: f64) -> Result<f64> {
    if pct1 <= 0.0 || pct2 <= 0.0 || !pct1.is_finite() || !pct2.is_finite() {
        return Err(Error::ZeroPercent);
    }
    if pct1 == pct2 {
        return Ok(0.0);
    }
    if pct1 < pct2 {
        return Ok(-cond_log_prop(pct2, pct1)?);
    }
    Ok((pct1 / pct2).ln())
}

/// Linear rescaling of raw survey stereotype scores onto a common scale:
/// `500 − 10·raw` for the 1990 survey, `500 − raw` for the 1977 survey.
pub fn transform_stereotype(survey_year: u16, raw: f64) -> Result<f64> {
    match survey_year {
        1990 => Ok(500.0 - 10.0 * raw),
        1977 => Ok(500.0 - raw),
        year => Err(Error::UnknownSurveyYear { year }),
    }
}

// ---------------------------------------------------------------------------
// OccupationTable
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct OccupationRow {
    pub occupation: String,
    pub year: i32,
    pub group: String,
    pub percent: f64,
}

/// Census occupation participation: percent of each group in each occupation
/// per year. CSV header `occupation,year,group,percent`.
#[derive(Debug, Clone, Serialize)]
pub struct OccupationTable {
    pub rows: Vec<OccupationRow>,
}

impl OccupationTable {
    pub fn from_csv<R: Read>(reader: R) -> Result<OccupationTable> {
        let mut csv = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(reader);
        let headers = csv.headers()?.clone();
        let find = |want: &str| -> Result<usize> {
            headers
                .iter()
                .position(|h| h.eq_ignore_ascii_case(want))
                .ok_or_else(|| Error::MissingColumn {
                    column: want.into(),
                })
        };
        let occ_i = find("occupation")?;
        let year_i = find("year")?;
        let group_i = find("group")?;
        let pct_i = find("percent")?;

        let mut rows = Vec::new();
        let mut seen: HashSet<(String, i32, String)> = HashSet::new();
        for (rec0, record) in csv.records().enumerate() {
            let record = record?;
            let line = rec0 + 2;
            let bad = |detail: String| Error::BadRecord {
                file: "occupation table".into(),
                line,
                detail,
            };
            let occupation = record.get(occ_i).unwrap_or_default().to_lowercase();
            let year: i32 = record
                .get(year_i)
                .unwrap_or_default()
                .parse()
                .map_err(|_| bad(format!("bad year {:?}", record.get(year_i).unwrap_or_default())))?;
            let group = record.get(group_i).unwrap_or_default().to_lowercase();
            let raw_pct = record.get(pct_i).unwrap_or_default();
            let percent: f64 = raw_pct
                .parse()
                .map_err(|_| bad(format!("bad percent {raw_pct:?}")))?;
            if !percent.is_finite() || !(0.0..=100.0).contains(&percent) {
                return Err(bad(format!("percent {percent} outside [0, 100]")));
            }
            if !seen.insert((occupation.clone(), year, group.clone())) {
                return Err(bad(format!(
                    "duplicate key ({occupation:?}, {year}, {group:?})"
                )));
            }
            rows.push(OccupationRow {
                occupation,
                year,
                group,
                percent,
            });
        }
        Ok(OccupationTable { rows })
    }

    pub fn percent_of(&self, occupation: &str, year: i32, group: &str) -> Option<f64> {
        self.rows
            .iter()
            .find(|r| r.occupation == occupation && r.year == year && r.group == group)
            .map(|r| r.percent)
    }

    pub fn years(&self) -> Vec<i32> {
        let mut ys: Vec<i32> = self.rows.iter().map(|r| r.year).collect();
        ys.sort_unstable();
        ys.dedup();
        ys
    }

    /// `(occupation, log_prop(percent/100))` for one group and year.
    ///
    /// Occupations whose share is exactly 0% or 100% cannot enter the log
    /// scale; they are skipped and reported in the second return value.
    pub fn log_props(&self, year: i32, group: &str) -> Result<ValuesWithSkipped> {
        let mut out = Vec::new();
        let mut skipped = Vec::new();
        for r in &self.rows {
            if r.year != year || r.group != group {
                continue;
            }
            match log_prop(r.percent / 100.0) {
                Ok(v) => out.push((r.occupation.clone(), v)),
                Err(_) => skipped.push(r.occupation.clone()),
            }
        }
        if out.is_empty() {
            return Err(Error::EmptyJoin);
        }
        Ok((out, skipped))
    }

    /// `(occupation, cond_log_prop(pct1, pct2))` for two groups in one year.
    /// Occupations missing either group or with a zero share are skipped and
    /// reported.
    pub fn cond_log_props(
        &self,
        year: i32,
        group1: &str,
        group2: &str,
    ) -> Result<ValuesWithSkipped> {
        let mut occs: Vec<&str> = self
            .rows
            .iter()
            .filter(|r| r.year == year)
            .map(|r| r.occupation.as_str())
            .collect();
        occs.sort_unstable();
        occs.dedup();

        let mut out = Vec::new();
        let mut skipped = Vec::new();
        for occ in occs {
            let p1 = self.percent_of(occ, year, group1);
            let p2 = self.percent_of(occ, year, group2);
            match (p1, p2) {
                (Some(a), Some(b)) => match cond_log_prop(a, b) {
                    Ok(v) => out.push((occ.to_string(), v)),
                    Err(_) => skipped.push(occ.to_string()),
                },
                _ => skipped.push(occ.to_string()),
            }
        }
        if out.is_empty() {
            return Err(Error::EmptyJoin);
        }
        Ok((out, skipped))
    }
}

// ---------------------------------------------------------------------------
// StereotypeScores
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct StereotypeRow {
    pub adjective: String,
    pub raw_score: f64,
    pub transformed_score: f64,
}

/// Human stereotype survey scores with the per-survey-year transform applied
/// at load time. CSV header `adjective,raw_score`.
#[derive(Debug, Clone, Serialize)]
pub struct StereotypeScores {
    pub survey_year: u16,
    pub rows: Vec<StereotypeRow>,
}

impl StereotypeScores {
    pub fn from_csv<R: Read>(reader: R, survey_year: u16) -> Result<StereotypeScores> {
        // Validate the year before reading anything.
        transform_stereotype(survey_year, 0.0)?;
        let mut csv = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(reader);
        let headers = csv.headers()?.clone();
        let find = |want: &str| -> Result<usize> {
            headers
                .iter()
                .position(|h| h.eq_ignore_ascii_case(want))
                .ok_or_else(|| Error::MissingColumn {
                    column: want.into(),
                })
        };
        let adj_i = find("adjective")?;
        let raw_i = find("raw_score")?;

        let mut rows = Vec::new();
        let mut seen = HashSet::new();
        for (rec0, record) in csv.records().enumerate() {
            let record = record?;
            let line = rec0 + 2;
            let adjective = record.get(adj_i).unwrap_or_default().to_lowercase();
            let raw = record.get(raw_i).unwrap_or_default();
            let raw_score: f64 = raw.parse().map_err(|_| Error::BadRecord {
                file: "stereotype scores".into(),
                line,
                detail: format!("bad raw score {raw:?}"),
            })?;
            if !seen.insert(adjective.clone()) {
                return Err(Error::BadRecord {
                    file: "stereotype scores".into(),
                    line,
                    detail: format!("duplicate adjective {adjective:?}"),
                });
            }
            let transformed_score = transform_stereotype(survey_year, raw_score)?;
            rows.push(StereotypeRow {
                adjective,
                raw_score,
                transformed_score,
            });
        }
        Ok(StereotypeScores { survey_year, rows })
    }

    /// `(adjective, transformed score)` pairs.
    pub fn values(&self) -> Vec<(String, f64)> {
        self.rows
            .iter()
            .map(|r| (r.adjective.clone(), r.transformed_score))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Joining
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JoinedPair {
    pub word: String,
    pub bias: f64,
    pub external: f64,
}

/// Result of joining a bias table with external values on words.
#[derive(Debug, Clone, Serialize)]
pub struct Join {
    /// Inner-join pairs, sorted by word.
    pub pairs: Vec<JoinedPair>,
    /// Words present in both inputs but dropped by the exclusion list.
    pub excluded: Vec<String>,
}

/// Inner-join a pair bias table with `(word, value)` externals.
///
/// Set semantics: the output is sorted by word and independent of input
/// order. `exclude` names words to drop even when matched (the occupation
/// regressions drop words that are overwhelmingly surnames or have a
/// dominant non-occupational sense).
pub fn join_bias_external(
    bias: &BiasTable,
    external: &[(String, f64)],
    exclude: &[&str],
) -> Result<Join> {
    let ext: std::collections::HashMap<&str, f64> = external
        .iter()
        .map(|(w, v)| (w.as_str(), *v))
        .collect();
    let mut pairs = Vec::new();
    let mut excluded = Vec::new();
    for (word, scores) in &bias.rows {
        let Some(&value) = ext.get(word.as_str()) else {
            continue;
        };
        if exclude.contains(&word.as_str()) {
            excluded.push(word.clone());
            continue;
        }
        pairs.push(JoinedPair {
            word: word.clone(),
            bias: scores[0],
            external: value,
        });
    }
    pairs.sort_by(|a, b| a.word.cmp(&b.word));
    excluded.sort();
    if pairs.is_empty() {
        return Err(Error::EmptyJoin);
    }
    Ok(Join { pairs, excluded })
}

// ---------------------------------------------------------------------------
// Scale alignment
// ---------------------------------------------------------------------------

/// OLS of external value on bias, pooled over all supplied pairs (typically
/// the concatenation of every decade's joined pairs). Places the embedding
/// bias scale and the external scale on one axis.
pub fn fit_scale_alignment(pairs: &[(f64, f64)]) -> Result<OlsFit> {
    let bias: Vec<f64> = pairs.iter().map(|p| p.0).collect();
    let external: Vec<f64> = pairs.iter().map(|p| p.1).collect();
    let mut fit = stats::ols(&external, &[&bias], true)?;
    fit.names = vec!["const".into(), "bias".into()];
    Ok(fit)
}

/// Send a bias value through a fitted alignment onto the proportion scale:
/// `sigmoid(intercept + slope · bias)`. Only meaningful when the external
/// variable was a log proportion.
pub fn bias_to_proportion(fit: &OlsFit, bias: f64) -> f64 {
    let y = fit.coefs[0] + fit.coefs[1] * bias;
    1.0 / (1.0 + (-y).exp())
}
