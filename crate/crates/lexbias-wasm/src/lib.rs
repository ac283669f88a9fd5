//! Browser bindings: three interactive operations over the lexbias core,
//! all string-in / JSON-out so the same functions compile and test natively.
//!
//! Every function returns a JSON object with `"ok": true` and the payload,
//! or `"ok": false` with `{"kind", "message"}` mirroring the CLI's tagged
//! one-line errors. No panics cross the boundary.

use serde::Deserialize;
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

use lexbias::embedding::{normalize, parse_embedding, Embedding, EmbeddingSeries, Format};
use lexbias::metrics::{rank_by_bias, relative_norm_distance, Metric};
use lexbias::svg::{correlation_heatmap, HeatmapStyle};
use lexbias::temporal::correlation_matrix;
use lexbias::trainer::{
    cooccurrence, parse_corpus, ppmi, sgns_train, slice_corpus, svd_embed, Algorithm,
    TrainerParams,
};
use lexbias::wordlists::{parse_wordlist, WordList};
use lexbias::{Error, Result};

fn err_json(e: &Error) -> String {
    json!({"ok": false, "kind": e.kind(), "message": e.to_string()}).to_string()
}

/// Word lists from a textarea: commas and newlines both separate words.
fn list_from_text(name: &str, text: &str) -> Result<WordList> {
    let joined = text.replace(',', "\n");
    parse_wordlist(name, &joined)
}

fn embedding_from_text(text: &str) -> Result<Embedding> {
    let emb = parse_embedding(Format::Word2vecText, std::io::Cursor::new(text.as_bytes()))?;
    normalize(emb)
}

fn pair_rows_json(rows: &[(String, Vec<f64>)]) -> serde_json::Value {
    json!(rows
        .iter()
        .map(|(w, s)| json!([w, s[0]]))
        .collect::<Vec<_>>())
}

fn ranked_json(ranked: &[(String, f64)]) -> serde_json::Value {
    json!(ranked.iter().map(|(w, s)| json!([w, s])).collect::<Vec<_>>())
}

/// Per-word bias table between two groups.
///
/// `embedding_text` is word2vec text format (`count dim` header); word lists
/// are comma- or newline-separated. Positive scores lean toward group two.
#[wasm_bindgen]
pub fn bias_table(
    embedding_text: &str,
    neutral: &str,
    group_one: &str,
    group_two: &str,
    metric: &str,
) -> String {
    let run = || -> Result<String> {
        let metric: Metric = metric.parse()?;
        let emb = embedding_from_text(embedding_text)?;
        let neutral = list_from_text("neutral", neutral)?;
        let g1 = list_from_text("group-one", group_one)?;
        let g2 = list_from_text("group-two", group_two)?;
        let rnd = relative_norm_distance(&emb, &neutral, &g1, &g2, metric)?;
        Ok(json!({
            "ok": true,
            "metric": metric.label(),
            "sign": "positive = toward group two",
            "sum": rnd.sum,
            "mean": rnd.mean,
            "rows": pair_rows_json(&rnd.table.rows),
            "dropped": rnd.table.dropped,
        })
        .to_string())
    };
    run().unwrap_or_else(|e| err_json(&e))
}

/// Top-k neutral words leaning toward one group (`toward` is 1 or 2).
#[wasm_bindgen]
pub fn rank_words(
    embedding_text: &str,
    neutral: &str,
    group_one: &str,
    group_two: &str,
    metric: &str,
    k: usize,
    toward: usize,
) -> String {
    let run = || -> Result<String> {
        let metric: Metric = metric.parse()?;
        if !(1..=2).contains(&toward) {
            return Err(Error::BadParams {
                detail: "toward must be 1 or 2".into(),
            });
        }
        let emb = embedding_from_text(embedding_text)?;
        let neutral = list_from_text("neutral", neutral)?;
        let g1 = list_from_text("group-one", group_one)?;
        let g2 = list_from_text("group-two", group_two)?;
        let rnd = relative_norm_distance(&emb, &neutral, &g1, &g2, metric)?;
        let ranked = rank_by_bias(&rnd.table, k, toward - 1)?;
        Ok(json!({
            "ok": true,
            "toward": toward,
            "ranked": ranked_json(&ranked),
        })
        .to_string())
    };
    run().unwrap_or_else(|e| err_json(&e))
}

#[derive(Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct TemporalOptions {
    algo: String,
    dim: usize,
    window_years: i32,
    step_years: i32,
    window: usize,
    min_count: u64,
    negatives: usize,
    epochs: usize,
    learning_rate: f64,
    alpha: f64,
    seed: u64,
    top_k: usize,
}

impl Default for TemporalOptions {
    fn default() -> Self {
        TemporalOptions {
            algo: "ppmi-svd".to_string(),
            dim: 25,
            window_years: 10,
            step_years: 10,
            window: 4,
            min_count: 1,
            negatives: 5,
            epochs: 3,
            learning_rate: 0.025,
            alpha: 0.75,
            seed: 42,
            top_k: 5,
        }
    }
}

fn train_slice(tokens: &[String], algo: Algorithm, params: &TrainerParams) -> Result<Embedding> {
    let emb = match algo {
        Algorithm::PpmiSvd => {
            let counts = cooccurrence(tokens, params.window_size, params.min_count)?;
            let mat = ppmi(&counts, params.smoothing_alpha)?;
            svd_embed(&mat, params.dim.min(mat.n()), params.seed)?
        }
        Algorithm::Sgns => sgns_train(tokens, params)?.embedding,
    };
    normalize(emb)
}

/// Train per-slice embeddings from a dated corpus (`year<TAB>tokens` lines)
/// and report the bias series, per-slice top words, the slice-by-slice
/// correlation matrix, and its heatmap SVG. Deterministic for a given seed.
///
/// `options_json` may be empty for defaults; unknown keys are rejected. The
/// correlation matrix is best-effort: with fewer than two slices or too few
/// shared words it comes back null with `matrix_error` set, while the series
/// and top words still succeed.
#[wasm_bindgen]
pub fn temporal_run(
    corpus: &str,
    neutral: &str,
    group_one: &str,
    group_two: &str,
    options_json: &str,
) -> String {
    let run = || -> Result<String> {
        let opts: TemporalOptions = if options_json.trim().is_empty() {
            TemporalOptions::default()
        } else {
            serde_json::from_str(options_json).map_err(|e| Error::BadParams {
                detail: format!("options: {e}"),
            })?
        };
        let algo: Algorithm = opts.algo.parse()?;
        let params = TrainerParams {
            dim: opts.dim,
            window_size: opts.window,
            min_count: opts.min_count,
            negatives: opts.negatives,
            epochs: opts.epochs,
            learning_rate: opts.learning_rate,
            smoothing_alpha: opts.alpha,
            seed: opts.seed,
        };
        params.validate()?;
        let neutral = list_from_text("neutral", neutral)?;
        let g1 = list_from_text("group-one", group_one)?;
        let g2 = list_from_text("group-two", group_two)?;

        let docs = parse_corpus(std::io::Cursor::new(corpus.as_bytes()))?;
        let slices = slice_corpus(&docs, opts.window_years, opts.step_years)?;

        let mut points = Vec::new();
        let mut tops = serde_json::Map::new();
        let mut trained: Vec<(i32, Embedding)> = Vec::new();
        for slice in &slices {
            let wrap = |e: Error| e.for_series_entry(slice.center_year);
            let emb = train_slice(&slice.tokens, algo, &params).map_err(wrap)?;
            let rnd =
                relative_norm_distance(&emb, &neutral, &g1, &g2, Metric::Norm).map_err(wrap)?;
            points.push(json!({
                "year": slice.center_year,
                "sum": rnd.sum,
                "mean": rnd.mean,
                "n_words": rnd.table.rows.len(),
            }));
            tops.insert(
                slice.center_year.to_string(),
                json!({
                    "toward_g1": ranked_json(&rank_by_bias(&rnd.table, opts.top_k, 0)?),
                    "toward_g2": ranked_json(&rank_by_bias(&rnd.table, opts.top_k, 1)?),
                }),
            );
            trained.push((slice.center_year, emb));
        }

        let matrix_result = EmbeddingSeries::from_unordered(trained)
            .and_then(|series| correlation_matrix(&series, &neutral, &g1, &g2, Metric::Norm));
        let (matrix_json, heatmap, matrix_error) = match matrix_result {
            Ok(matrix) => {
                let style = HeatmapStyle {
                    title: Some("per-word bias correlation across slices".to_string()),
                    cell: 48.0,
                    ..HeatmapStyle::default()
                };
                let svg = correlation_heatmap(&matrix, &style);
                (
                    json!({"labels": matrix.labels, "values": matrix.values}),
                    svg,
                    serde_json::Value::Null,
                )
            }
            Err(e) => (serde_json::Value::Null, String::new(), json!(e.to_string())),
        };

        Ok(json!({
            "ok": true,
            "sign": "positive = toward group two",
            "algo": opts.algo,
            "points": points,
            "tops": tops,
            "matrix": matrix_json,
            "heatmap_svg": heatmap,
            "matrix_error": matrix_error,
        })
        .to_string())
    };
    run().unwrap_or_else(|e| err_json(&e))
}

