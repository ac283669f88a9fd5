//! Acceptance checklist for the whole toolkit. Each test prints one
//! `PASS criterion NN: ...` line on success, so running
//!
//! ```text
//! cargo test -p lexbias --test acceptance -- --nocapture --test-threads=1
//! ```
//!
//! reads top to bottom as a report. Criteria 1–6 are self-contained and
//! fast. Criteria 7–11 reproduce reference results on real embeddings and
//! census data; they look for files under `LEXBIAS_DATA_DIR` (see the
//! README data recipe) and print a `SKIP` line when a needed file is
//! absent, so a partial data directory still runs everything it can.

#[path = "acceptance/reference_lists.rs"]
mod reference_lists;

use std::collections::HashSet;
use std::io::Cursor;
use std::path::PathBuf;
use std::sync::OnceLock;

use lexbias::embedding::{
    load_embedding, normalize, parse_embedding, parse_embedding_limited, write_embedding,
    Embedding, EmbeddingSeries, Format,
};
use lexbias::external::{
    bias_to_proportion, cond_log_prop, fit_scale_alignment, join_bias_external, log_prop,
    OccupationTable,
};
use lexbias::metrics::{
    group_vector, metric_agreement, rank_by_bias, relative_norm_distance, three_way_bias,
    word_bias, Metric,
};
use lexbias::stats::{bootstrap_ci, ols, student_t_two_sided_p};
use lexbias::temporal::{
    bias_series, correlation_matrix, trend_test, Aggregate, TimePoint, TimeSeries,
};
use lexbias::trainer::{cooccurrence, ppmi, sgns_train, svd_embed, TrainerParams};
use lexbias::wordlists::{
    builtin, builtin_names, parse_wordlist, restrict_to_vocab, VocabPolicy, WordList,
    BUILTIN_LISTS,
};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

fn wl(name: &str, words: &[&str]) -> WordList {
    WordList::new(name, words.iter().map(|s| s.to_string()).collect()).unwrap()
}

fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
    assert!(
        (a - b).abs() <= tol,
        "{what}: {a} vs {b} (|diff| = {:.3e}, tol {tol:.1e})",
        (a - b).abs()
    );
}

/// Absolute check scaled by the reference magnitude, for quantities that can
/// legitimately be large (slopes, t statistics).
fn assert_close_rel(a: f64, b: f64, rel: f64, what: &str) {
    let tol = rel * b.abs().max(1.0);
    assert_close(a, b, tol, what);
}

/// A deterministic small random embedding: `n_words` words from a fixed
/// pool, `dim` dimensions, entries uniform in [-1, 1).
fn random_embedding(rng: &mut ChaCha8Rng, n_words: usize, dim: usize) -> Embedding {
    const POOL: [&str; 6] = ["alpha", "beta", "gamma", "delta", "epsilon", "zeta"];
    let rows = POOL[..n_words]
        .iter()
        .map(|w| {
            let v = (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect();
            (w.to_string(), v)
        })
        .collect();
    Embedding::from_rows("case", rows).unwrap()
}

// ---------------------------------------------------------------------------
// Independent oracle: brute-force re-statement of the definitions, coded
// against the formulas rather than the library internals.
// ---------------------------------------------------------------------------

mod oracle {
    use lexbias::embedding::Embedding;

    pub fn euclid(a: &[f64], b: &[f64]) -> f64 {
        let mut s = 0.0;
        for i in 0..a.len() {
            let d = a[i] - b[i];
            s += d * d;
        }
        s.sqrt()
    }

    pub fn dot(a: &[f64], b: &[f64]) -> f64 {
        let mut s = 0.0;
        for i in 0..a.len() {
            s += a[i] * b[i];
        }
        s
    }

    /// Component-wise mean of the in-vocabulary members, not re-normalized.
    pub fn group_mean(emb: &Embedding, members: &[&str]) -> Vec<f64> {
        let mut acc = vec![0.0; emb.dim()];
        let mut used = 0usize;
        for m in members {
            if let Some(v) = emb.vector(m) {
                used += 1;
                for (a, x) in acc.iter_mut().zip(v) {
                    *a += x;
                }
            }
        }
        assert!(used > 0, "oracle group has no in-vocabulary member");
        for a in acc.iter_mut() {
            *a /= used as f64;
        }
        acc
    }

    /// Norm-metric bias: distance to group one minus distance to group two;
    /// positive leans toward group two.
    pub fn norm_bias(w: &[f64], v1: &[f64], v2: &[f64]) -> f64 {
        euclid(w, v1) - euclid(w, v2)
    }

    /// Cosine-metric bias on already-normalized conventions: similarity to
    /// group two minus similarity to group one.
    pub fn cosine_bias(w: &[f64], v1: &[f64], v2: &[f64]) -> f64 {
        dot(w, v2) - dot(w, v1)
    }

    /// Three-group bias toward group `i`: the average distance to the other
    /// two group vectors minus the distance to group `i`.
    pub fn three_way(w: &[f64], vs: [&[f64]; 3], i: usize) -> f64 {
        let d: Vec<f64> = vs.iter().map(|v| euclid(w, v)).collect();
        let (j, k) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        0.5 * (d[j] + d[k]) - d[i]
    }
}

// ---------------------------------------------------------------------------
// Criterion 1 — oracle equivalence on random embeddings
// ---------------------------------------------------------------------------

#[test]
fn criterion_01_oracle_equivalence() {
    const TOL: f64 = 1e-12;
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0001);
    let mut pair_cases = 0usize;
    let mut triple_cases = 0usize;

    for case in 0..200 {
        let n_words = rng.random_range(3..=6);
        let dim = rng.random_range(1..=4);
        let emb = random_embedding(&mut rng, n_words, dim);

        let mut words: Vec<&str> = emb.words().iter().map(String::as_str).collect();
        words.shuffle(&mut rng);

        // Pair split: one word per group, the rest neutral. Occasionally
        // append an out-of-vocabulary word to exercise dropping.
        let g1_members: Vec<&str> = if rng.random_range(0..4) == 0 {
            vec![words[0], "zzznotinvocab"]
        } else {
            vec![words[0]]
        };
        let g2_members = vec![words[1]];
        let mut neutral_members: Vec<&str> = words[2..].to_vec();
        if rng.random_range(0..4) == 0 {
            neutral_members.push("qqqnotinvocab");
        }

        let g1 = wl("one", &g1_members);
        let g2 = wl("two", &g2_members);
        let neutral = wl("neutral", &neutral_members);

        let v1 = oracle::group_mean(&emb, &g1_members);
        let v2 = oracle::group_mean(&emb, &g2_members);

        let gv1 = group_vector(&emb, &g1).unwrap();
        let gv2 = group_vector(&emb, &g2).unwrap();
        for (a, b) in gv1.vector.iter().zip(&v1) {
            assert_close(*a, *b, TOL, &format!("case {case}: group-one vector"));
        }

        for metric in [Metric::Norm, Metric::Cosine] {
            // Per-word scores.
            for w in neutral.iter().filter(|w| emb.contains(w)) {
                let got = word_bias(&emb, w, &gv1, &gv2, metric).unwrap();
                let wv = emb.vector(w).unwrap();
                let want = match metric {
                    Metric::Norm => oracle::norm_bias(wv, &v1, &v2),
                    Metric::Cosine => oracle::cosine_bias(wv, &v1, &v2),
                };
                assert_close(got, want, TOL, &format!("case {case}: word_bias({w})"));
            }

            // Aggregate over the list, in list order, skipping absent words.
            let rnd = relative_norm_distance(&emb, &neutral, &g1, &g2, metric).unwrap();
            let mut want_sum = 0.0;
            let mut present = 0usize;
            for w in neutral.iter().filter(|w| emb.contains(w)) {
                let wv = emb.vector(w).unwrap();
                want_sum += match metric {
                    Metric::Norm => oracle::norm_bias(wv, &v1, &v2),
                    Metric::Cosine => oracle::cosine_bias(wv, &v1, &v2),
                };
                present += 1;
            }
            assert_close(rnd.sum, want_sum, TOL, &format!("case {case}: rnd sum"));
            assert_close(
                rnd.mean,
                want_sum / present as f64,
                TOL,
                &format!("case {case}: rnd mean"),
            );
            assert_eq!(rnd.table.rows.len(), present, "case {case}: row count");
            pair_cases += 1;
        }

        // Three-way needs a third group plus at least one neutral word.
        if n_words >= 4 {
            let g3 = wl("three", &[words[2]]);
            let neutral3 = wl("neutral", &words[3..]);
            let v3 = oracle::group_mean(&emb, &[words[2]]);
            let table = three_way_bias(&emb, &neutral3, [&g1, &g2, &g3]).unwrap();
            for (word, scores) in &table.rows {
                let wv = emb.vector(word).unwrap();
                assert_eq!(scores.len(), 3);
                for i in 0..3 {
                    let want = oracle::three_way(wv, [&v1[..], &v2[..], &v3[..]], i);
                    assert_close(
                        scores[i],
                        want,
                        TOL,
                        &format!("case {case}: three-way {word}[{i}]"),
                    );
                }
            }
            triple_cases += 1;
        }
    }

    println!(
        "PASS criterion 01: bias scores match the brute-force oracle to 1e-12 \
         ({pair_cases} pair runs over both metrics, {triple_cases} three-way runs)"
    );
}

// ---------------------------------------------------------------------------
// Criterion 2 — metric laws
// ---------------------------------------------------------------------------

#[test]
fn criterion_02_metric_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0002);

    // Antisymmetry and identical-group zero, both metrics.
    for case in 0..50 {
        let emb = random_embedding(&mut rng, 5, 3);
        let g1 = wl("one", &["alpha", "beta"]);
        let g2 = wl("two", &["gamma"]);
        let gv1 = group_vector(&emb, &g1).unwrap();
        let gv2 = group_vector(&emb, &g2).unwrap();
        for metric in [Metric::Norm, Metric::Cosine] {
            for w in ["delta", "epsilon"] {
                let fwd = word_bias(&emb, w, &gv1, &gv2, metric).unwrap();
                let rev = word_bias(&emb, w, &gv2, &gv1, metric).unwrap();
                assert!(
                    (fwd + rev).abs() <= 1e-12,
                    "case {case}: antisymmetry violated: {fwd} vs {rev}"
                );
                let same = word_bias(&emb, w, &gv1, &gv1, metric).unwrap();
                assert_eq!(same, 0.0, "case {case}: identical groups must give exactly 0");
            }
        }
    }

    // Correlation matrix: unit diagonal, bitwise mirror symmetry, r in [-1, 1].
    let mut entries = Vec::new();
    for (i, label) in [1900, 1950, 2000].iter().enumerate() {
        let mut slice_rng = ChaCha8Rng::seed_from_u64(900 + i as u64);
        entries.push((*label, random_embedding(&mut slice_rng, 6, 4)));
    }
    let series = EmbeddingSeries::new(entries).unwrap();
    let neutral = wl("neutral", &["gamma", "delta", "epsilon", "zeta"]);
    let g1 = wl("one", &["alpha"]);
    let g2 = wl("two", &["beta"]);
    let corr = correlation_matrix(&series, &neutral, &g1, &g2, Metric::Norm).unwrap();
    let n = corr.len();
    assert_eq!(n, 3);
    for i in 0..n {
        assert_eq!(corr.get(i, i), 1.0, "diagonal must be exactly 1");
        for j in 0..n {
            assert_eq!(
                corr.get(i, j).to_bits(),
                corr.get(j, i).to_bits(),
                "matrix must be bitwise symmetric"
            );
            assert!(corr.get(i, j).abs() <= 1.0 + 1e-12);
        }
    }

    // log_prop oddness around one half; exact zero at the balance point.
    assert_eq!(log_prop(0.5).unwrap(), 0.0);
    for i in 1..100 {
        let p = i as f64 / 100.0;
        let sum = log_prop(p).unwrap() + log_prop(1.0 - p).unwrap();
        assert!(sum.abs() <= 1e-12, "log_prop oddness at p={p}: residual {sum}");
    }

    // cond_log_prop antisymmetry is structural: the sum is exactly zero.
    for _ in 0..200 {
        let a = rng.random_range(0.01..99.0);
        let b = rng.random_range(0.01..99.0);
        let sum = cond_log_prop(a, b).unwrap() + cond_log_prop(b, a).unwrap();
        assert_eq!(sum, 0.0, "cond_log_prop({a},{b}) must negate exactly");
        assert_eq!(cond_log_prop(a, a).unwrap(), 0.0);
    }

    println!(
        "PASS criterion 02: antisymmetry ≤1e-12, identical groups exactly 0, \
         correlation matrix symmetric with unit diagonal, log_prop odd, \
         cond_log_prop exactly antisymmetric"
    );
}

// ---------------------------------------------------------------------------
// Criterion 3 — regression internals against closed forms
// ---------------------------------------------------------------------------

/// Two-sided upper-tail reference values computed independently with
/// 60-digit arithmetic (regularized incomplete beta of the t distribution).
const T_REFERENCE: &[(f64, f64, f64)] = &[
    (5.0, 0.5, 0.63829887164092901),
    (5.0, 1.0, 0.36321746764912263),
    (5.0, 2.0, 0.10193947882985836),
    (5.0, 2.570582, 0.049999990027139925),
    (5.0, 4.0, 0.010323415480831454),
    (64.0, 0.5, 0.61878993857542141),
    (64.0, 1.0, 0.32107649342061004),
    (64.0, 1.997730, 0.049999961530705588),
    (64.0, 3.0, 0.0038439918659207795),
    (64.0, 7.406, 3.5942974066681529e-10),
    (621.0, 0.5, 0.61725219979183179),
    (621.0, 2.0, 0.045935304343066777),
    (621.0, 13.798, 5.724935618721624e-38),
];

#[test]
fn criterion_03_ols_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0003);

    // Simple-regression closed forms: slope, intercept, standard errors,
    // t statistics, r².
    for case in 0..25 {
        let n = rng.random_range(8..=40);
        let x: Vec<f64> = (0..n).map(|_| rng.random_range(-5.0..5.0)).collect();
        let a = rng.random_range(-3.0..3.0);
        let b = rng.random_range(-4.0..4.0);
        let y: Vec<f64> = x
            .iter()
            .map(|&xi| a + b * xi + rng.random_range(-0.5..0.5))
            .collect();

        let nf = n as f64;
        let mx = x.iter().sum::<f64>() / nf;
        let my = y.iter().sum::<f64>() / nf;
        let sxx: f64 = x.iter().map(|xi| (xi - mx) * (xi - mx)).sum();
        let sxy: f64 = x.iter().zip(&y).map(|(xi, yi)| (xi - mx) * (yi - my)).sum();
        let tss: f64 = y.iter().map(|yi| (yi - my) * (yi - my)).sum();
        let slope = sxy / sxx;
        let intercept = my - slope * mx;
        let rss: f64 = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| {
                let r = yi - intercept - slope * xi;
                r * r
            })
            .sum();
        let dof = nf - 2.0;
        let se_slope = (rss / dof / sxx).sqrt();
        let se_intercept = (rss / dof * (1.0 / nf + mx * mx / sxx)).sqrt();
        let r2 = 1.0 - rss / tss;

        let fit = ols(&y, &[&x], true).unwrap();
        assert_eq!(fit.n, n);
        assert_eq!(fit.dof, n - 2);
        let what = format!("case {case}");
        assert_close_rel(fit.coefs[0], intercept, 1e-10, &format!("{what}: intercept"));
        assert_close_rel(fit.coefs[1], slope, 1e-10, &format!("{what}: slope"));
        assert_close_rel(fit.stderrs[0], se_intercept, 1e-10, &format!("{what}: se(intercept)"));
        assert_close_rel(fit.stderrs[1], se_slope, 1e-10, &format!("{what}: se(slope)"));
        assert_close_rel(
            fit.t_stats[1],
            slope / se_slope,
            1e-10,
            &format!("{what}: t(slope)"),
        );
        assert_close(fit.r_squared, r2, 1e-10, &format!("{what}: r²"));
    }

    // Exact-line fixture: labels 1..5, value = 2·label.
    let points = (1..=5)
        .map(|label| TimePoint {
            label,
            value: 2.0 * label as f64,
            ci_low: None,
            ci_high: None,
        })
        .collect();
    let ts = TimeSeries::new(points).unwrap();
    let tt = trend_test(&ts).unwrap();
    assert_close(tt.slope, 2.0, 1e-10, "exact-line slope");
    assert!(tt.p < 1e-10, "exact-line p-value should vanish, got {}", tt.p);
    assert!(!tt.zero_variance);
    let xs: Vec<f64> = (1..=5).map(f64::from).collect();
    let ys: Vec<f64> = xs.iter().map(|x| 2.0 * x).collect();
    let line_fit = ols(&ys, &[&xs], true).unwrap();
    for r in &line_fit.residuals {
        assert!(r.abs() <= 1e-10, "exact-line residual {r} not ~0");
    }

    // Student-t tail probabilities against the high-precision table.
    for &(dof, t, p_ref) in T_REFERENCE {
        let p = student_t_two_sided_p(t, dof);
        assert!(
            (p - p_ref).abs() <= 1e-8 * p_ref,
            "t tail at dof {dof}, t {t}: {p:e} vs reference {p_ref:e}"
        );
    }

    println!(
        "PASS criterion 03: closed-form agreement to 1e-10 on 25 random fits, \
         exact-line slope 2 with ~0 residuals, t tails within 1e-8 relative at \
         dof 5/64/621"
    );
}

// ---------------------------------------------------------------------------
// Criterion 4 — bootstrap determinism
// ---------------------------------------------------------------------------

#[test]
fn criterion_04_bootstrap_determinism() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0004);
    let items: Vec<f64> = (0..40).map(|_| rng.random_range(-2.0..2.0)).collect();
    let mean = |xs: &[f64]| -> lexbias::Result<f64> {
        Ok(xs.iter().sum::<f64>() / xs.len() as f64)
    };

    let first = bootstrap_ci(&items, mean, 2000, 0.95, 77).unwrap();
    let second = bootstrap_ci(&items, mean, 2000, 0.95, 77).unwrap();
    assert_eq!(first.point_estimate.to_bits(), second.point_estimate.to_bits());
    assert_eq!(first.ci_low.to_bits(), second.ci_low.to_bits());
    assert_eq!(first.ci_high.to_bits(), second.ci_high.to_bits());
    assert!(first.ci_low <= first.point_estimate && first.point_estimate <= first.ci_high);

    // A different seed must be allowed to move the interval (sanity that the
    // seed is actually wired through).
    let third = bootstrap_ci(&items, mean, 2000, 0.95, 78).unwrap();
    assert!(
        third.ci_low.to_bits() != first.ci_low.to_bits()
            || third.ci_high.to_bits() != first.ci_high.to_bits(),
        "different seeds produced identical resamples"
    );

    let constant = bootstrap_ci(&items, |_| Ok(2.25), 500, 0.95, 9).unwrap();
    assert_eq!(constant.ci_low, 2.25);
    assert_eq!(constant.ci_high, 2.25);
    assert_eq!(constant.ci_high - constant.ci_low, 0.0);

    println!(
        "PASS criterion 04: same seed gives bit-identical intervals; constant \
         statistic gives a zero-width interval"
    );
}

// ---------------------------------------------------------------------------
// Criterion 5 — trainer: PPMI toy value, planted-skew recovery, round-trip
// ---------------------------------------------------------------------------

/// A corpus with a planted gender split: one block of she-sentences about a
/// nurse, one block of he-sentences about an engineer.
fn planted_tokens() -> Vec<String> {
    let she = "she is a nurse and she tends the ward";
    let he = "he is an engineer and he builds the bridge";
    let mut tokens = Vec::new();
    for _ in 0..40 {
        tokens.extend(she.split_whitespace().map(String::from));
    }
    for _ in 0..40 {
        tokens.extend(he.split_whitespace().map(String::from));
    }
    tokens
}

fn planted_params(seed: u64) -> TrainerParams {
    TrainerParams {
        dim: 8,
        window_size: 3,
        min_count: 2,
        epochs: 8,
        seed,
        ..TrainerParams::default()
    }
}

#[test]
fn criterion_05_trainer() {
    // Hand-computed toy: tokens [a, b], window 1. The single unordered pair
    // gives joint probability 1/2 in each direction and marginals of exactly
    // 1/2, so PMI(a,b) = ln(0.5 / 0.25) = ln 2, with no rounding anywhere.
    let toy: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
    let counts = cooccurrence(&toy, 1, 1).unwrap();
    let mat = ppmi(&counts, 1.0).unwrap();
    let ia = counts.index_of("a").unwrap();
    let ib = counts.index_of("b").unwrap();
    assert_eq!(mat.get(ia, ib), 2.0f64.ln(), "toy PPMI must equal ln 2 exactly");
    assert_eq!(mat.get(ib, ia), 2.0f64.ln());
    assert_eq!(mat.get(ia, ia), 0.0);

    // Planted skew: nurse must lean toward she, engineer toward he.
    let tokens = planted_tokens();
    let man = wl("man", &["he"]);
    let woman = wl("woman", &["she"]);

    let mut positive = 0;
    for seed in 0..20 {
        let out = sgns_train(&tokens, &planted_params(seed)).unwrap();
        let gv_man = group_vector(&out.embedding, &man).unwrap();
        let gv_woman = group_vector(&out.embedding, &woman).unwrap();
        let bias = word_bias(&out.embedding, "nurse", &gv_man, &gv_woman, Metric::Norm).unwrap();
        if bias > 0.0 {
            positive += 1;
        }
    }
    assert!(
        positive >= 19,
        "SGNS recovered the planted she-skew for nurse in only {positive}/20 seeds"
    );

    let counts = cooccurrence(&tokens, 3, 2).unwrap();
    let mat = ppmi(&counts, 0.75).unwrap();
    let run = |seed| {
        let emb = svd_embed(&mat, 8, seed).unwrap();
        let gv_man = group_vector(&emb, &man).unwrap();
        let gv_woman = group_vector(&emb, &woman).unwrap();
        let nurse = word_bias(&emb, "nurse", &gv_man, &gv_woman, Metric::Norm).unwrap();
        let engineer =
            word_bias(&emb, "engineer", &gv_man, &gv_woman, Metric::Norm).unwrap();
        (nurse, engineer)
    };
    let (nurse_a, engineer_a) = run(42);
    let (nurse_b, engineer_b) = run(42);
    assert!(nurse_a > 0.0, "PPMI-SVD nurse bias should lean toward she: {nurse_a}");
    assert!(engineer_a < 0.0, "PPMI-SVD engineer bias should lean toward he: {engineer_a}");
    assert_eq!(nurse_a.to_bits(), nurse_b.to_bits(), "PPMI-SVD must be deterministic");
    assert_eq!(engineer_a.to_bits(), engineer_b.to_bits());

    // Write/parse identity in all three formats. Entries are multiples of
    // 1/8 so the f32 narrowing of the binary format is exact too.
    let rows: Vec<(String, Vec<f64>)> = (0..5)
        .map(|i| {
            let v = (0..4).map(|j| ((i * 4 + j) as f64) * 0.125 - 1.0).collect();
            (format!("w{i}"), v)
        })
        .collect();
    let emb = Embedding::from_rows("roundtrip", rows).unwrap();
    for format in [Format::Word2vecText, Format::Word2vecBinary, Format::GloveText] {
        let mut buf = Vec::new();
        write_embedding(&emb, format, &mut buf).unwrap();
        let back = parse_embedding(format, Cursor::new(&buf)).unwrap();
        assert_eq!(back.words(), emb.words(), "{} round-trip words", format.label());
        for (word, vector) in emb.iter() {
            let got = back.vector(word).unwrap();
            assert_eq!(got.len(), vector.len());
            for (x, y) in got.iter().zip(vector) {
                assert_eq!(x.to_bits(), y.to_bits(), "{} round-trip value", format.label());
            }
        }
    }

    println!(
        "PASS criterion 05: toy PPMI is exactly ln 2, planted she-skew recovered \
         in {positive}/20 SGNS seeds and deterministically by PPMI-SVD, and all \
         three formats round-trip bit-exactly"
    );
}

// ---------------------------------------------------------------------------
// Criterion 6 — builtin word lists byte-match independent transcriptions
// ---------------------------------------------------------------------------

#[test]
fn criterion_06_builtin_lists_match_reference() {
    let expected: &[(&str, &[&str])] = &[
        ("man", reference_lists::MAN),
        ("woman", reference_lists::WOMAN),
        ("white_surnames", reference_lists::WHITE_SURNAMES),
        ("hispanic_surnames", reference_lists::HISPANIC_SURNAMES),
        ("asian_surnames", reference_lists::ASIAN_SURNAMES),
        ("russian_surnames", reference_lists::RUSSIAN_SURNAMES),
        ("islam", reference_lists::ISLAM),
        ("christianity", reference_lists::CHRISTIANITY),
        ("occupations", reference_lists::OCCUPATIONS),
        ("professional_occupations", reference_lists::PROFESSIONAL_OCCUPATIONS),
        ("stereotype_occupations", reference_lists::STEREOTYPE_OCCUPATIONS),
        ("williams_adjectives", reference_lists::WILLIAMS_ADJECTIVES),
        ("adjectives", reference_lists::ADJECTIVES),
        ("intellectual_adjectives", reference_lists::INTELLECTUAL_ADJECTIVES),
        ("appearance_adjectives", reference_lists::APPEARANCE_ADJECTIVES),
        ("terrorism", reference_lists::TERRORISM),
        ("other_adjectives", reference_lists::OTHER_ADJECTIVES),
    ];

    let shipped: HashSet<&str> = builtin_names().into_iter().collect();
    let wanted: HashSet<&str> = expected.iter().map(|(n, _)| *n).collect();
    assert_eq!(shipped, wanted, "builtin name set");

    let mut total_words = 0usize;
    for (name, raw) in expected {
        // The raw transcription keeps original order and any repeats; the
        // shipped list is its first-occurrence dedup.
        let mut seen = HashSet::new();
        let words: Vec<&str> = raw.iter().copied().filter(|w| seen.insert(*w)).collect();
        total_words += words.len();

        let (_, text) = BUILTIN_LISTS
            .iter()
            .find(|(n, _)| n == name)
            .unwrap_or_else(|| panic!("no bundled fixture for {name}"));
        let (first_line, body) = text.split_once('\n').unwrap();
        assert!(
            first_line.starts_with('#'),
            "{name}: fixture must open with a comment line"
        );
        let expected_body: String = words.join("\n") + "\n";
        assert_eq!(body, expected_body, "{name}: fixture bytes differ from reference");

        let parsed = parse_wordlist(*name, text).unwrap();
        assert!(
            parsed.words().iter().map(String::as_str).eq(words.iter().copied()),
            "{name}: parsed words differ from reference"
        );
    }

    println!(
        "PASS criterion 06: all 17 bundled lists byte-match the independent \
         transcriptions ({total_words} words)"
    );
}

// ---------------------------------------------------------------------------
// Data-backed criteria 7–11. These need files under LEXBIAS_DATA_DIR; the
// README documents the exact recipe. Heavy inputs are loaded once and shared.
// ---------------------------------------------------------------------------

const GOOGLENEWS_VOCAB_LIMIT: usize = 500_000;
const COHA_DECADES: [i32; 9] = [1910, 1920, 1930, 1940, 1950, 1960, 1970, 1980, 1990];
const REGRESSION_EXCLUDED: &[&str] = &["smith", "conductor"];

fn data_dir() -> Option<PathBuf> {
    std::env::var_os("LEXBIAS_DATA_DIR").map(PathBuf::from)
}

fn skip(criterion: u32, why: &str) {
    println!(
        "SKIP criterion {criterion:02}: {why}; see the README data recipe \
         (LEXBIAS_DATA_DIR)"
    );
}

/// Google News vectors, truncated to the most frequent rows and normalized.
fn googlenews() -> Option<&'static Embedding> {
    static CACHE: OnceLock<Option<Embedding>> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let dir = data_dir()?;
            let path = [dir.join("googlenews.txt"), dir.join("googlenews.bin")]
                .into_iter()
                .find(|p| p.exists())?;
            let format = Format::sniff_path(&path).expect("googlenews format");
            let file = std::fs::File::open(&path).expect("open googlenews");
            let emb = parse_embedding_limited(
                format,
                std::io::BufReader::new(file),
                Some(GOOGLENEWS_VOCAB_LIMIT),
            )
            .expect("parse googlenews");
            Some(normalize(emb).expect("normalize googlenews"))
        })
        .as_ref()
}

fn census() -> Option<&'static OccupationTable> {
    static CACHE: OnceLock<Option<OccupationTable>> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let path = data_dir()?.join("census.csv");
            if !path.exists() {
                return None;
            }
            let file = std::fs::File::open(&path).expect("open census.csv");
            Some(OccupationTable::from_csv(std::io::BufReader::new(file)).expect("parse census.csv"))
        })
        .as_ref()
}

/// Decade-sliced historical series, one normalized embedding per decade.
fn coha_series() -> Option<&'static EmbeddingSeries> {
    static CACHE: OnceLock<Option<EmbeddingSeries>> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let dir = data_dir()?.join("coha");
            let mut entries = Vec::new();
            for decade in COHA_DECADES {
                let path = ["txt", "bin", "vec"]
                    .iter()
                    .map(|ext| dir.join(format!("{decade}.{ext}")))
                    .find(|p| p.exists())?;
                let format = Format::sniff_path(&path).expect("decade embedding format");
                let emb = load_embedding(&path, format)
                    .unwrap_or_else(|e| panic!("load {}: {e}", path.display()));
                entries.push((decade, normalize(emb).expect("normalize decade embedding")));
            }
            Some(EmbeddingSeries::new(entries).expect("decade series"))
        })
        .as_ref()
}

/// (bias toward woman, woman occupation log proportion) pairs for one
/// embedding and census year, with the standard exclusions applied.
fn gender_census_pairs(
    emb: &Embedding,
    neutral: &WordList,
    table: &OccupationTable,
    year: i32,
) -> Vec<(f64, f64)> {
    let man = builtin("man").unwrap();
    let woman = builtin("woman").unwrap();
    let rnd = relative_norm_distance(emb, neutral, &man, &woman, Metric::Norm).unwrap();
    let (external, _skipped) = table.cond_log_props(year, "woman", "man").unwrap();
    let join = join_bias_external(&rnd.table, &external, REGRESSION_EXCLUDED).unwrap();
    join.pairs.iter().map(|p| (p.bias, p.external)).collect()
}

// ---------------------------------------------------------------------------
// Criterion 7 — Google News gender regression
// ---------------------------------------------------------------------------

#[test]
fn criterion_07_google_news_gender_regression() {
    let Some(emb) = googlenews() else {
        skip(7, "googlenews.txt/.bin not found");
        return;
    };
    let Some(table) = census() else {
        skip(7, "census.csv not found");
        return;
    };
    if !table.years().contains(&2015) {
        skip(7, "census.csv has no 2015 rows");
        return;
    }

    let occupations = builtin("occupations").unwrap();
    let pairs = gender_census_pairs(emb, &occupations, table, 2015);
    let fit = fit_scale_alignment(&pairs).unwrap();
    let slope = fit.coefs[1];
    let p = fit.p_values[1];
    assert!(
        (slope - 19.08).abs() <= 1.0,
        "slope {slope:.3} outside 19.08 ± 1.0"
    );
    assert!(
        (fit.r_squared - 0.462).abs() <= 0.03,
        "r² {:.4} outside 0.462 ± 0.03",
        fit.r_squared
    );
    assert!(p < 1e-8, "slope p-value {p:e} not < 1e-8");

    println!(
        "PASS criterion 07: Google News 2015 occupation regression: slope \
         {slope:.2} (19.08 ± 1.0), r² {:.3} (0.462 ± 0.03), p {p:.2e} < 1e-8, n {}",
        fit.r_squared, fit.n
    );
}

// ---------------------------------------------------------------------------
// Criterion 8 — professional-occupation subset
// ---------------------------------------------------------------------------

#[test]
fn criterion_08_professional_subset_regression() {
    let Some(emb) = googlenews() else {
        skip(8, "googlenews.txt/.bin not found");
        return;
    };
    let Some(table) = census() else {
        skip(8, "census.csv not found");
        return;
    };
    if !table.years().contains(&2015) {
        skip(8, "census.csv has no 2015 rows");
        return;
    }

    let professional = builtin("professional_occupations").unwrap();
    let pairs = gender_census_pairs(emb, &professional, table, 2015);
    let fit = fit_scale_alignment(&pairs).unwrap();
    let p = fit.p_values[1];
    assert!(
        (fit.r_squared - 0.548).abs() <= 0.05,
        "r² {:.4} outside 0.548 ± 0.05",
        fit.r_squared
    );
    assert!(p < 1e-4, "slope p-value {p:e} not < 1e-4");

    println!(
        "PASS criterion 08: professional subset: r² {:.3} (0.548 ± 0.05), \
         p {p:.2e} < 1e-4, n {}",
        fit.r_squared, fit.n
    );
}

// ---------------------------------------------------------------------------
// Criterion 9 — norm and cosine metrics agree on Google News
// ---------------------------------------------------------------------------

#[test]
fn criterion_09_metric_agreement() {
    let Some(emb) = googlenews() else {
        skip(9, "googlenews.txt/.bin not found");
        return;
    };

    let cases = [
        ("occupations", "man", "woman", 0.998),
        ("adjectives", "man", "woman", 0.998),
        ("occupations", "white_surnames", "asian_surnames", 0.973),
        ("adjectives", "white_surnames", "asian_surnames", 0.993),
    ];
    let mut report = Vec::new();
    for (neutral, g1, g2, target) in cases {
        let r = metric_agreement(
            emb,
            &builtin(neutral).unwrap(),
            &builtin(g1).unwrap(),
            &builtin(g2).unwrap(),
        )
        .unwrap();
        assert!(r >= 0.95, "{neutral} {g1}/{g2}: agreement {r:.4} below 0.95");
        assert!(
            (r - target).abs() <= 0.01,
            "{neutral} {g1}/{g2}: agreement {r:.4} outside {target} ± 0.01"
        );
        report.push(format!("{neutral} {g1}/{g2} {r:.3}"));
    }

    println!(
        "PASS criterion 09: metric agreement ≥ 0.95 and within 0.01 of targets \
         ({})",
        report.join(", ")
    );
}

// ---------------------------------------------------------------------------
// Criterion 10 — pooled historical model
// ---------------------------------------------------------------------------

#[test]
fn criterion_10_coha_pooled_model() {
    let Some(series) = coha_series() else {
        skip(10, "coha/<decade>.txt embeddings not found");
        return;
    };
    let Some(table) = census() else {
        skip(10, "census.csv not found");
        return;
    };
    let missing: Vec<i32> = COHA_DECADES
        .iter()
        .copied()
        .filter(|d| !table.years().contains(d))
        .collect();
    if !missing.is_empty() {
        skip(10, &format!("census.csv lacks decades {missing:?}"));
        return;
    }

    let occupations = builtin("occupations").unwrap();
    let mut pooled = Vec::new();
    for (decade, emb) in series.iter() {
        pooled.extend(gender_census_pairs(emb, &occupations, table, decade));
    }
    let fit = fit_scale_alignment(&pooled).unwrap();
    let slope = fit.coefs[1];
    assert!(
        (slope - 36.0).abs() <= 2.0,
        "pooled slope {slope:.3} outside 36.0 ± 2.0"
    );
    assert!(
        (fit.r_squared - 0.235).abs() <= 0.03,
        "pooled r² {:.4} outside 0.235 ± 0.03",
        fit.r_squared
    );
    let prop = bias_to_proportion(&fit, -0.05);
    assert!(
        (prop - 0.12).abs() <= 0.03,
        "bias −0.05 maps to proportion {prop:.4}, outside 12% ± 3pp"
    );

    println!(
        "PASS criterion 10: pooled decade model: slope {slope:.2} (36.0 ± 2.0), \
         r² {:.3} (0.235 ± 0.03), bias −0.05 → {:.1}% of workforce (12 ± 3), n {}",
        fit.r_squared,
        100.0 * prop,
        fit.n
    );
}

// ---------------------------------------------------------------------------
// Criterion 11 — qualitative golds on the historical series
// ---------------------------------------------------------------------------

#[test]
fn criterion_11_historical_qualitative_golds() {
    let Some(series) = coha_series() else {
        skip(11, "coha/<decade>.txt embeddings not found");
        return;
    };

    let man = builtin("man").unwrap();
    let woman = builtin("woman").unwrap();
    let occupations = builtin("occupations").unwrap();
    let adjectives = builtin("adjectives").unwrap();

    // (a) nurse is the top woman-leaning occupation in every decade.
    for (decade, emb) in series.iter() {
        let rnd = relative_norm_distance(emb, &occupations, &man, &woman, Metric::Norm).unwrap();
        let top = rank_by_bias(&rnd.table, 1, 1).unwrap();
        assert_eq!(
            top[0].0, "nurse",
            "top woman occupation in {decade} was {:?}",
            top[0]
        );
    }

    // (b) hysterical: top-5 woman-leaning in 1920, outside the top 100 by 1990.
    let hysterical_rank = |decade: i32| -> Option<usize> {
        let emb = series.get(decade).unwrap();
        let rnd = relative_norm_distance(emb, &adjectives, &man, &woman, Metric::Norm).unwrap();
        let n = rnd.table.rows.len();
        let ranked = rank_by_bias(&rnd.table, n, 1).unwrap();
        ranked.iter().position(|(w, _)| w == "hysterical").map(|i| i + 1)
    };
    let r1920 = hysterical_rank(1920).expect("hysterical present in the 1920 vocabulary");
    assert!(r1920 <= 5, "hysterical ranked {r1920} in 1920, expected top-5");
    let r1990 = hysterical_rank(1990);
    if let Some(r) = r1990 {
        assert!(r > 100, "hysterical ranked {r} in 1990, expected outside top-100");
    }

    // (c) adjective bias correlations split into before/after blocks at the
    // 1960s/1970s boundary: the cross-boundary entry is weaker than the
    // average within-block entry.
    let corr = correlation_matrix(series, &adjectives, &man, &woman, Metric::Norm).unwrap();
    let labels = corr.labels.clone();
    let at = |year: i32| labels.iter().position(|&l| l == year).unwrap();
    let cross = corr.get(at(1960), at(1970));
    let mut within = Vec::new();
    for i in 0..labels.len() {
        for j in (i + 1)..labels.len() {
            let both_early = labels[i] <= 1960 && labels[j] <= 1960;
            let both_late = labels[i] >= 1970 && labels[j] >= 1970;
            if both_early || both_late {
                within.push(corr.get(i, j));
            }
        }
    }
    let mean_within = within.iter().sum::<f64>() / within.len() as f64;
    assert!(
        cross < mean_within,
        "no 1960s/1970s divide: corr(1960, 1970) = {cross:.3} vs within-block \
         mean {mean_within:.3}"
    );

    // (d) intellectual adjectives drift toward women: positive trend, p < .01.
    let intellectual = builtin("intellectual_adjectives").unwrap();
    let (intellectual, _dropped) =
        restrict_to_vocab(&intellectual, series, VocabPolicy::AllSlices).unwrap();
    let ts = bias_series(
        series,
        &intellectual,
        &man,
        &woman,
        Metric::Norm,
        Aggregate::Mean,
        None,
    )
    .unwrap();
    let tt = trend_test(&ts).unwrap();
    assert!(
        tt.slope > 0.0 && tt.p < 0.01,
        "intellectual trend slope {:.5}, p {:.4}; expected positive with p < .01",
        tt.slope,
        tt.p
    );

    println!(
        "PASS criterion 11: nurse top in all {} decades; hysterical rank {r1920} \
         in 1920 and {} in 1990; corr(1960,1970) {cross:.3} < within-block mean \
         {mean_within:.3}; intellectual trend slope {:.5} with p {:.1e}",
        series.len(),
        r1990.map_or("absent".to_string(), |r| r.to_string()),
        tt.slope,
        tt.p
    );
}
