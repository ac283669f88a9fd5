//! One function per subcommand. Every command follows the same shape:
//! build provenance while loading inputs, compute the full artifact string,
//! then hand it to the sink (so failures never leave partial files).

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::json;

use lexbias::embedding::Format;
use lexbias::external::{
    fit_scale_alignment, join_bias_external, OccupationTable, StereotypeScores,
};
use lexbias::metrics::{
    metric_agreement, rank_by_bias, relative_norm_distance, three_way_bias, BiasTable, Metric,
};
use lexbias::svg::{correlation_heatmap, HeatmapStyle};
use lexbias::temporal::{bias_series, correlation_matrix, Aggregate, BootstrapSpec};
use lexbias::trainer::{self, Algorithm, TrainerParams};
use lexbias::wordlists::{
    restrict_to_vocab, select_surnames, SurnameColumns, SurnameSelectOpts, SurnameTable,
    VocabPolicy, WordList,
};
use lexbias::{Error, Result};

use crate::inputs::{
    json_artifact, load_embedding_flags, load_embedding_opt, load_list, load_series_opt,
    parse_exclude, Fmt,
};
use crate::output::{write_atomic, Sink};
use crate::provenance::Provenance;
use crate::{
    AgreeArgs, BiasArgs, Command, CorrArgs, NamesArgs, RankArgs, RegressArgs, ResidualsArgs,
    SeriesArgs, TrainArgs,
};

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Bias(args) => cmd_bias(args),
        Command::Rank(args) => cmd_rank(args),
        Command::Series(args) => cmd_series(args),
        Command::Corr(args) => cmd_corr(args),
        Command::Regress(args) => cmd_regress(args),
        Command::Residuals(args) => cmd_residuals(args),
        Command::Agree(args) => cmd_agree(args),
        Command::Names(args) => cmd_names(args),
        Command::Train(args) => cmd_train(args),
    }
}

fn table_csv(table: &BiasTable) -> Result<String> {
    let mut buf = Vec::new();
    table.to_csv(&mut buf)?;
    Ok(String::from_utf8(buf).expect("CSV output is UTF-8"))
}

/// Serialize library data for the JSON envelope. The payload types are plain
/// structs (no fallible keys), so serialization cannot fail.
fn to_value<T: serde::Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("plain data structures serialize")
}

/// Compute the bias table plus (for pairs) the sum/mean summary.
fn compute_table(
    emb: &lexbias::embedding::Embedding,
    neutral: &WordList,
    g1: &WordList,
    g2: &WordList,
    g3: Option<&WordList>,
    metric: Metric,
    prov: &mut Provenance,
) -> Result<BiasTable> {
    match g3 {
        Some(g3) => {
            if metric != Metric::Norm {
                return Err(Error::BadParams {
                    detail: "three-way bias is defined on the norm metric only".into(),
                });
            }
            three_way_bias(emb, neutral, [g1, g2, g3])
        }
        None => {
            let rnd = relative_norm_distance(emb, neutral, g1, g2, metric)?;
            prov.add("sum", rnd.sum);
            prov.add("mean", rnd.mean);
            Ok(rnd.table)
        }
    }
}

fn cmd_bias(args: BiasArgs) -> Result<()> {
    let fmt = Fmt::parse(&args.out.format, &[Fmt::Csv, Fmt::Json])?;
    let mut prov = Provenance::new("bias");
    let metric: Metric = args.metric.parse()?;
    prov.add("metric", metric.label());
    let neutral = load_list("neutral", &args.groups.neutral, &mut prov)?;
    let g1 = load_list("g1", &args.groups.g1, &mut prov)?;
    let g2 = load_list("g2", &args.groups.g2, &mut prov)?;
    let g3 = args
        .g3
        .as_deref()
        .map(|r| load_list("g3", r, &mut prov))
        .transpose()?;
    let emb = load_embedding_opt(&args.emb, &mut prov)?;
    let table = compute_table(&emb, &neutral, &g1, &g2, g3.as_ref(), metric, &mut prov)?;

    let artifact = match fmt {
        Fmt::Csv => format!("{}{}", prov.csv_block(), table_csv(&table)?),
        Fmt::Json => json_artifact(&prov, to_value(&table)),
        _ => unreachable!(),
    };
    Sink::from_flag(args.out.out).write(&artifact)
}

fn cmd_rank(args: RankArgs) -> Result<()> {
    let fmt = Fmt::parse(&args.out.format, &[Fmt::Csv, Fmt::Json])?;
    let mut prov = Provenance::new("rank");
    let metric: Metric = args.metric.parse()?;
    prov.add("metric", metric.label());
    prov.add("k", args.k);
    prov.add("toward", args.toward);
    let neutral = load_list("neutral", &args.groups.neutral, &mut prov)?;
    let g1 = load_list("g1", &args.groups.g1, &mut prov)?;
    let g2 = load_list("g2", &args.groups.g2, &mut prov)?;
    let g3 = args
        .g3
        .as_deref()
        .map(|r| load_list("g3", r, &mut prov))
        .transpose()?;
    let emb = load_embedding_opt(&args.emb, &mut prov)?;
    let table = compute_table(&emb, &neutral, &g1, &g2, g3.as_ref(), metric, &mut prov)?;
    if args.toward == 0 {
        return Err(Error::BadParams {
            detail: "--toward is 1-based (1, 2, or 3)".into(),
        });
    }
    let ranked = rank_by_bias(&table, args.k, args.toward - 1)?;

    let artifact = match fmt {
        Fmt::Csv => {
            let mut out = prov.csv_block();
            out.push_str("rank,word,score\n");
            for (i, (word, score)) in ranked.iter().enumerate() {
                out.push_str(&format!("{},{},{}\n", i + 1, word, score));
            }
            out
        }
        Fmt::Json => {
            let rows: Vec<_> = ranked
                .iter()
                .enumerate()
                .map(|(i, (word, score))| json!({"rank": i + 1, "word": word, "score": score}))
                .collect();
            json_artifact(&prov, json!({ "ranked": rows }))
        }
        _ => unreachable!(),
    };
    Sink::from_flag(args.out.out).write(&artifact)
}

fn cmd_series(args: SeriesArgs) -> Result<()> {
    let fmt = Fmt::parse(&args.out.format, &[Fmt::Csv, Fmt::Json])?;
    let mut prov = Provenance::new("series");
    let metric: Metric = args.metric.parse()?;
    let agg: Aggregate = args.agg.parse()?;
    prov.add("metric", metric.label());
    prov.add("aggregate", &args.agg);
    let neutral = load_list("neutral", &args.groups.neutral, &mut prov)?;
    let g1 = load_list("g1", &args.groups.g1, &mut prov)?;
    let g2 = load_list("g2", &args.groups.g2, &mut prov)?;
    let series = load_series_opt(&args.manifest, &mut prov)?;

    let policy = match args.vocab.as_str() {
        "all" => VocabPolicy::AllSlices,
        "any" => VocabPolicy::AnySlice,
        other => {
            return Err(Error::BadParams {
                detail: format!("unknown vocab policy {other:?} (expected all or any)"),
            })
        }
    };
    prov.add("vocab-policy", &args.vocab);
    let (neutral, dropped) = restrict_to_vocab(&neutral, &series, policy)?;
    if !dropped.is_empty() {
        prov.add("dropped-neutral", dropped.join(" "));
    }

    let bootstrap = (args.bootstrap > 0).then(|| {
        prov.add("bootstrap", args.bootstrap);
        prov.add("level", args.level);
        prov.add("seed", args.seed);
        BootstrapSpec {
            n_resamples: args.bootstrap,
            level: args.level,
            seed: args.seed,
        }
    });
    let ts = bias_series(&series, &neutral, &g1, &g2, metric, agg, bootstrap)?;

    let artifact = match fmt {
        Fmt::Csv => {
            let mut buf = Vec::new();
            ts.to_csv(&mut buf)?;
            format!(
                "{}{}",
                prov.csv_block(),
                String::from_utf8(buf).expect("CSV output is UTF-8")
            )
        }
        Fmt::Json => json_artifact(&prov, to_value(&ts)),
        _ => unreachable!(),
    };
    Sink::from_flag(args.out.out).write(&artifact)
}

fn cmd_corr(args: CorrArgs) -> Result<()> {
    let fmt = Fmt::parse(&args.out.format, &[Fmt::Csv, Fmt::Json, Fmt::Svg])?;
    let mut prov = Provenance::new("corr");
    let metric: Metric = args.metric.parse()?;
    prov.add("metric", metric.label());
    let neutral = load_list("neutral", &args.groups.neutral, &mut prov)?;
    let g1 = load_list("g1", &args.groups.g1, &mut prov)?;
    let g2 = load_list("g2", &args.groups.g2, &mut prov)?;
    let series = load_series_opt(&args.manifest, &mut prov)?;
    let matrix = correlation_matrix(&series, &neutral, &g1, &g2, metric)?;

    let artifact = match fmt {
        Fmt::Csv => {
            let mut buf = Vec::new();
            matrix.to_csv(&mut buf)?;
            format!(
                "{}{}",
                prov.csv_block(),
                String::from_utf8(buf).expect("CSV output is UTF-8")
            )
        }
        Fmt::Json => json_artifact(&prov, to_value(&matrix)),
        Fmt::Svg => {
            let style = HeatmapStyle {
                title: Some(format!(
                    "{} vs {} bias correlation ({})",
                    g1.name(),
                    g2.name(),
                    metric.label()
                )),
                ..HeatmapStyle::default()
            };
            format!("{}{}", prov.svg_comment(), correlation_heatmap(&matrix, &style))
        }
        _ => unreachable!(),
    };
    Sink::from_flag(args.out.out).write(&artifact)
}

/// Pooled (bias, external) pairs and join bookkeeping for `regress`.
struct PooledJoin {
    pairs: Vec<(f64, f64)>,
    excluded: Vec<String>,
    skipped_years: Vec<i32>,
    used_years: Vec<i32>,
}

/// The census side of a pooled regression: table plus group column(s).
struct CensusSpec<'a> {
    table: &'a OccupationTable,
    group: &'a str,
    group2: Option<&'a str>,
}

fn pool_census_pairs(
    slices: &[(i32, &lexbias::embedding::Embedding)],
    neutral: &WordList,
    g1: &WordList,
    g2: &WordList,
    metric: Metric,
    census: &CensusSpec<'_>,
    exclude: &[&str],
) -> Result<PooledJoin> {
    let mut pooled = PooledJoin {
        pairs: Vec::new(),
        excluded: Vec::new(),
        skipped_years: Vec::new(),
        used_years: Vec::new(),
    };
    for &(year, emb) in slices {
        let external = match census.group2 {
            Some(g2name) => census.table.cond_log_props(year, census.group, g2name),
            None => census.table.log_props(year, census.group),
        };
        let (values, _degenerate) = match external {
            Ok(v) => v,
            Err(Error::EmptyJoin) => {
                pooled.skipped_years.push(year);
                continue;
            }
            Err(e) => return Err(e),
        };
        let rnd = relative_norm_distance(emb, neutral, g1, g2, metric)
            .map_err(|e| e.for_series_entry(year))?;
        let join = join_bias_external(&rnd.table, &values, exclude)
            .map_err(|e| e.for_series_entry(year))?;
        for p in &join.pairs {
            pooled.pairs.push((p.bias, p.external));
        }
        for w in join.excluded {
            if !pooled.excluded.contains(&w) {
                pooled.excluded.push(w);
            }
        }
        pooled.used_years.push(year);
    }
    if pooled.pairs.is_empty() {
        return Err(Error::EmptyJoin);
    }
    Ok(pooled)
}

fn fit_csv(prov: &Provenance, fit: &lexbias::stats::OlsFit) -> String {
    let mut out = prov.csv_block();
    out.push_str("term,coef,stderr,t,p,ci_low,ci_high\n");
    for (i, (lo, hi)) in fit.conf_int_95().iter().enumerate() {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            fit.names[i], fit.coefs[i], fit.stderrs[i], fit.t_stats[i], fit.p_values[i], lo, hi
        ));
    }
    out
}

fn cmd_regress(args: RegressArgs) -> Result<()> {
    let fmt = Fmt::parse(&args.out.format, &[Fmt::Csv, Fmt::Json, Fmt::Table])?;
    let mut prov = Provenance::new("regress");
    let metric: Metric = args.metric.parse()?;
    prov.add("metric", metric.label());
    let exclude = parse_exclude(&args.exclude);
    let exclude_refs: Vec<&str> = exclude.iter().map(String::as_str).collect();
    if !exclude.is_empty() {
        prov.add("exclude", exclude.join(" "));
    }
    let neutral = load_list("neutral", &args.groups.neutral, &mut prov)?;
    let g1 = load_list("g1", &args.groups.g1, &mut prov)?;
    let g2 = load_list("g2", &args.groups.g2, &mut prov)?;

    // Exactly one embedding source.
    let series;
    let single;
    let slices: Vec<(i32, &lexbias::embedding::Embedding)> = match (&args.emb, &args.manifest) {
        (Some(path), None) => {
            single = load_embedding_flags(path, args.emb_format.as_deref(), args.limit, &mut prov)?;
            let year = pick_year(args.year, args.census.as_deref(), &mut prov)?;
            vec![(year, &single)]
        }
        (None, Some(path)) => {
            series = load_series_opt(path, &mut prov)?;
            series.iter().collect()
        }
        _ => {
            return Err(Error::BadParams {
                detail: "give exactly one of --emb or --manifest".into(),
            })
        }
    };

    // Exactly one external source.
    let (fit, data) = match (&args.census, &args.stereo) {
        (Some(census_path), None) => {
            let group = args.census_group.as_deref().ok_or(Error::BadParams {
                detail: "--census requires --census-group".into(),
            })?;
            prov.input_file("census", census_path)?;
            prov.add("census-group", group);
            if let Some(g2name) = &args.census_group2 {
                prov.add("census-group2", g2name);
            }
            let census = OccupationTable::from_csv(std::fs::File::open(census_path)?)?;
            let spec = CensusSpec {
                table: &census,
                group,
                group2: args.census_group2.as_deref(),
            };
            let pooled =
                pool_census_pairs(&slices, &neutral, &g1, &g2, metric, &spec, &exclude_refs)?;
            prov.add(
                "years",
                pooled
                    .used_years
                    .iter()
                    .map(|y| y.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            if !pooled.skipped_years.is_empty() {
                prov.add(
                    "skipped-years",
                    pooled
                        .skipped_years
                        .iter()
                        .map(|y| y.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                );
            }
            if !pooled.excluded.is_empty() {
                prov.add("excluded-words", pooled.excluded.join(" "));
            }
            let fit = fit_scale_alignment(&pooled.pairs)?;
            let data = json!({
                "fit": to_value(&fit),
                "excluded": pooled.excluded,
                "skipped_years": pooled.skipped_years,
                "used_years": pooled.used_years,
            });
            (fit, data)
        }
        (None, Some(stereo_path)) => {
            let survey_year = args.survey_year.ok_or(Error::BadParams {
                detail: "--stereo requires --survey-year".into(),
            })?;
            prov.input_file("stereo", stereo_path)?;
            prov.add("survey-year", survey_year);
            let scores =
                StereotypeScores::from_csv(std::fs::File::open(stereo_path)?, survey_year)?;
            if slices.len() != 1 {
                return Err(Error::BadParams {
                    detail: "--stereo is a single survey snapshot; use --emb, not --manifest"
                        .into(),
                });
            }
            let (_, emb) = slices[0];
            let rnd = relative_norm_distance(emb, &neutral, &g1, &g2, metric)?;
            let join = join_bias_external(&rnd.table, &scores.values(), &exclude_refs)?;
            let pairs: Vec<(f64, f64)> = join.pairs.iter().map(|p| (p.bias, p.external)).collect();
            if !join.excluded.is_empty() {
                prov.add("excluded-words", join.excluded.join(" "));
            }
            let fit = fit_scale_alignment(&pairs)?;
            let data = json!({
                "fit": to_value(&fit),
                "excluded": join.excluded,
            });
            (fit, data)
        }
        _ => {
            return Err(Error::BadParams {
                detail: "give exactly one of --census or --stereo".into(),
            })
        }
    };
    prov.add("r-squared", fit.r_squared);
    prov.add("n-obs", fit.n);

    let artifact = match fmt {
        Fmt::Csv => fit_csv(&prov, &fit),
        Fmt::Json => json_artifact(&prov, data),
        Fmt::Table => format!("{}{}", prov.csv_block(), fit.text_table()),
        _ => unreachable!(),
    };
    Sink::from_flag(args.out.out).write(&artifact)
}

/// Resolve the census year for a single embedding: the flag when given,
/// otherwise the file's only year.
fn pick_year(
    flag: Option<i32>,
    census: Option<&Path>,
    prov: &mut Provenance,
) -> Result<i32> {
    if let Some(y) = flag {
        prov.add("year", y);
        return Ok(y);
    }
    if let Some(path) = census {
        let table = OccupationTable::from_csv(std::fs::File::open(path)?)?;
        let years = table.years();
        if let [only] = years.as_slice() {
            prov.add("year", only);
            return Ok(*only);
        }
        return Err(Error::BadParams {
            detail: format!(
                "census file has {} years; pick one with --year",
                years.len()
            ),
        });
    }
    // Stereotype runs do not need a census year; any label will do.
    Ok(0)
}

fn cmd_residuals(args: ResidualsArgs) -> Result<()> {
    let fmt = Fmt::parse(&args.out.format, &[Fmt::Csv, Fmt::Json, Fmt::Table])?;
    let mut prov = Provenance::new("residuals");
    let metric: Metric = args.metric.parse()?;
    prov.add("metric", metric.label());
    let exclude = parse_exclude(&args.exclude);
    if !exclude.is_empty() {
        prov.add("exclude", exclude.join(" "));
    }
    let neutral = load_list("neutral", &args.groups.neutral, &mut prov)?;
    let g1 = load_list("g1", &args.groups.g1, &mut prov)?;
    let g2 = load_list("g2", &args.groups.g2, &mut prov)?;
    let emb = load_embedding_opt(&args.emb, &mut prov)?;

    prov.input_file("census", &args.census)?;
    prov.add("census-group", &args.census_group);
    let census = OccupationTable::from_csv(std::fs::File::open(&args.census)?)?;
    let year = match args.year {
        Some(y) => y,
        None => {
            let years = census.years();
            match years.as_slice() {
                [only] => *only,
                _ => {
                    return Err(Error::BadParams {
                        detail: format!(
                            "census file has {} years; pick one with --year",
                            years.len()
                        ),
                    })
                }
            }
        }
    };
    prov.add("year", year);
    prov.input_file("stereo", &args.stereo)?;
    prov.add("survey-year", args.survey_year);
    let scores = StereotypeScores::from_csv(std::fs::File::open(&args.stereo)?, args.survey_year)?;

    let rnd = relative_norm_distance(&emb, &neutral, &g1, &g2, metric)?;
    let (census_vals, _) = census.log_props(year, &args.census_group)?;
    let crowd_vals = scores.values();
    let crowd: BTreeMap<&str, f64> = crowd_vals.iter().map(|(w, v)| (w.as_str(), *v)).collect();
    let lp: BTreeMap<&str, f64> = census_vals.iter().map(|(w, v)| (w.as_str(), *v)).collect();

    // Three-way inner join on word, exclusions applied, sorted for determinism.
    let mut rows: Vec<(&str, f64, f64, f64)> = Vec::new();
    for (word, scores_vec) in &rnd.table.rows {
        let w = word.as_str();
        if exclude.iter().any(|e| e == w) {
            continue;
        }
        if let (Some(&c), Some(&l)) = (crowd.get(w), lp.get(w)) {
            rows.push((w, scores_vec[0], c, l));
        }
    }
    rows.sort_by(|a, b| a.0.cmp(b.0));
    if rows.is_empty() {
        return Err(Error::EmptyJoin);
    }
    prov.add("n-joined", rows.len());
    let bias: Vec<f64> = rows.iter().map(|r| r.1).collect();
    let crowd_v: Vec<f64> = rows.iter().map(|r| r.2).collect();
    let lp_v: Vec<f64> = rows.iter().map(|r| r.3).collect();
    let report = lexbias::stats::residual_stereotype_analysis(&bias, &crowd_v, &lp_v)?;

    let artifact = match fmt {
        Fmt::Csv => {
            let mut out = prov.csv_block();
            out.push_str("key,value\n");
            out.push_str(&format!("n,{}\n", report.n));
            out.push_str(&format!("joint_r_squared,{}\n", report.joint.r_squared));
            for (i, name) in report.joint.names.iter().enumerate() {
                out.push_str(&format!("joint_coef_{name},{}\n", report.joint.coefs[i]));
                out.push_str(&format!("joint_p_{name},{}\n", report.joint.p_values[i]));
            }
            out.push_str(&format!("residual_r,{}\n", report.residual_r));
            out.push_str(&format!("residual_p,{}\n", report.residual_p));
            out
        }
        Fmt::Json => json_artifact(&prov, to_value(&report)),
        Fmt::Table => format!("{}{}", prov.csv_block(), report.text()),
        _ => unreachable!(),
    };
    Sink::from_flag(args.out.out).write(&artifact)
}

fn cmd_agree(args: AgreeArgs) -> Result<()> {
    let fmt = Fmt::parse(&args.out.format, &[Fmt::Csv, Fmt::Json])?;
    let mut prov = Provenance::new("agree");
    let neutral = load_list("neutral", &args.groups.neutral, &mut prov)?;
    let g1 = load_list("g1", &args.groups.g1, &mut prov)?;
    let g2 = load_list("g2", &args.groups.g2, &mut prov)?;
    let emb = load_embedding_opt(&args.emb, &mut prov)?;
    let r = metric_agreement(&emb, &neutral, &g1, &g2)?;

    let artifact = match fmt {
        Fmt::Csv => format!("{}statistic,value\nmetric_agreement_pearson_r,{r}\n", prov.csv_block()),
        Fmt::Json => json_artifact(&prov, json!({ "pearson_r": r })),
        _ => unreachable!(),
    };
    Sink::from_flag(args.out.out).write(&artifact)
}

fn cmd_names(args: NamesArgs) -> Result<()> {
    let fmt = Fmt::parse(&args.out.format, &[Fmt::Csv, Fmt::Json])?;
    let mut prov = Provenance::new("names");
    prov.input_file("surnames", &args.surnames)?;
    prov.add("ethnicity", &args.ethnicity);
    prov.add("k", args.k);
    prov.add("pool", args.pool);
    prov.add("rank-ceiling", args.rank_ceiling);
    let table = SurnameTable::from_csv(
        std::fs::File::open(&args.surnames)?,
        &SurnameColumns::default(),
    )?;
    let series = load_series_opt(&args.manifest, &mut prov)?;
    let opts = SurnameSelectOpts {
        candidate_pool: args.pool,
        rank_ceiling: args.rank_ceiling,
        ..SurnameSelectOpts::default()
    };
    let list = select_surnames(&table, &args.ethnicity, &series, args.k, &opts, None)?;

    let artifact = match fmt {
        Fmt::Csv => {
            let mut out = prov.csv_block();
            out.push_str("rank,name\n");
            for (i, name) in list.iter().enumerate() {
                out.push_str(&format!("{},{}\n", i + 1, name));
            }
            out
        }
        Fmt::Json => {
            json_artifact(&prov, json!({ "names": list.words() }))
        }
        _ => unreachable!(),
    };
    Sink::from_flag(args.out.out).write(&artifact)
}

fn cmd_train(args: TrainArgs) -> Result<()> {
    let mut prov = Provenance::new("train");
    let algorithm: Algorithm = args.algo.parse()?;
    let out_format: Format = args.emb_format.parse()?;
    if out_format == Format::GloveText {
        return Err(Error::BadParams {
            detail: "train emits word2vec-text or word2vec-binary".into(),
        });
    }
    prov.input_file("corpus", &args.corpus)?;
    prov.add("algo", &args.algo);
    prov.add("window-years", args.window_years);
    prov.add("step-years", args.step_years);
    prov.add("dim", args.dim);
    prov.add("window", args.window);
    prov.add("min-count", args.min_count);
    if algorithm == Algorithm::Sgns {
        prov.add("negatives", args.negatives);
        prov.add("epochs", args.epochs);
        prov.add("learning-rate", args.lr);
    }
    prov.add("alpha", args.alpha);
    prov.add("seed", args.seed);
    prov.add("emb-format", out_format.label());

    let docs = trainer::load_corpus(&args.corpus)?;
    let params = TrainerParams {
        dim: args.dim,
        window_size: args.window,
        min_count: args.min_count,
        negatives: args.negatives,
        epochs: args.epochs,
        learning_rate: args.lr,
        smoothing_alpha: args.alpha,
        seed: args.seed,
    };
    let series = trainer::train_series(&docs, args.window_years, args.step_years, algorithm, &params)?;

    // Build the whole directory in a temp dir, then rename into place:
    // either the full output appears or nothing does.
    let parent = match args.out_dir.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => std::path::PathBuf::from("."),
    };
    std::fs::create_dir_all(&parent)?;
    let staging = tempfile::tempdir_in(&parent)?;
    let ext = match out_format {
        Format::Word2vecBinary => "bin",
        _ => "txt",
    };
    let mut manifest = prov.csv_block();
    for (label, emb) in series.iter() {
        let file_name = format!("{label}.{ext}");
        let mut file = std::fs::File::create(staging.path().join(&file_name))?;
        lexbias::embedding::write_embedding(emb, out_format, &mut file)?;
        manifest.push_str(&format!("{label}\t{}\t{file_name}\n", out_format.label()));
    }
    write_atomic(&staging.path().join("manifest.tsv"), manifest.as_bytes())?;
    let staged = staging.keep();
    std::fs::rename(&staged, &args.out_dir).map_err(|e| {
        // Roll the staging directory back out of sight before reporting.
        let _ = std::fs::remove_dir_all(&staged);
        Error::Io(e)
    })?;
    println!(
        "wrote {} slice embedding(s) + manifest.tsv to {}",
        series.len(),
        args.out_dir.display()
    );
    Ok(())
}
