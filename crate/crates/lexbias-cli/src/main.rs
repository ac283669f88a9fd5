//! `lexbias` — command-line driver for the embedding-bias toolkit.
//!
//! Nine subcommands wire the library into complete analyses: per-word bias
//! tables, top-k rankings, temporal series with bootstrap intervals,
//! decade-by-decade correlation matrices, regressions against census and
//! survey data, the residual stereotype analysis, metric agreement,
//! surname selection, and a desk-scale trainer.
//!
//! All artifacts embed provenance (input digests, flags, seed, sign
//! convention), all file writes are atomic, and all randomness funnels
//! through `--seed`.

mod commands;
mod inputs;
mod output;
mod provenance;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "lexbias",
    version,
    about = "Quantify group-association bias in word embeddings and its drift over time"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Per-word bias table for a group pair (or triple with --g3)
    Bias(BiasArgs),
    /// Top-k neutral words leaning toward one group
    Rank(RankArgs),
    /// Aggregate bias over a temporal embedding series
    Series(SeriesArgs),
    /// Correlation matrix of per-word bias across slices
    Corr(CorrArgs),
    /// Regress external values (census shares or survey scores) on bias
    Regress(RegressArgs),
    /// Joint regression: does bias track census data beyond crowd stereotypes?
    Residuals(ResidualsArgs),
    /// Pearson agreement between the norm and cosine metrics
    Agree(AgreeArgs),
    /// Select ethnicity-distinctive surnames present across a series
    Names(NamesArgs),
    /// Train temporal embeddings from a dated corpus
    Train(TrainArgs),
}

/// Single-embedding input flags.
#[derive(Args, Debug)]
pub struct EmbOpt {
    /// Embedding file: word2vec text/binary or GloVe text (format sniffed)
    #[arg(long)]
    pub emb: PathBuf,
    /// Force the input format: word2vec-text | word2vec-binary | glove-text
    #[arg(long)]
    pub emb_format: Option<String>,
    /// Keep only the first N vocabulary rows (files are frequency-ordered)
    #[arg(long)]
    pub limit: Option<usize>,
}

/// Neutral + two group word lists (builtin name or file path).
#[derive(Args, Debug)]
pub struct GroupOpt {
    /// Neutral word list (e.g. occupations, adjectives, or a file path)
    #[arg(long)]
    pub neutral: String,
    /// Group-one word list (e.g. man)
    #[arg(long)]
    pub g1: String,
    /// Group-two word list (e.g. woman); positive bias leans here
    #[arg(long)]
    pub g2: String,
}

/// Output destination and format.
#[derive(Args, Debug)]
pub struct OutOpt {
    /// Output file (stdout when omitted); written via temp file + rename
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// csv | json (corr also: svg; regress/residuals also: table)
    #[arg(long, default_value = "csv")]
    pub format: String,
}

#[derive(Args, Debug)]
pub struct BiasArgs {
    #[command(flatten)]
    pub emb: EmbOpt,
    #[command(flatten)]
    pub groups: GroupOpt,
    /// Optional third group: emit the three-way bias table instead
    #[arg(long)]
    pub g3: Option<String>,
    /// norm | cosine
    #[arg(long, default_value = "norm")]
    pub metric: String,
    #[command(flatten)]
    pub out: OutOpt,
}

#[derive(Args, Debug)]
pub struct RankArgs {
    #[command(flatten)]
    pub emb: EmbOpt,
    #[command(flatten)]
    pub groups: GroupOpt,
    /// Optional third group for three-way ranking
    #[arg(long)]
    pub g3: Option<String>,
    /// norm | cosine
    #[arg(long, default_value = "norm")]
    pub metric: String,
    /// How many words to list
    #[arg(short, long, default_value_t = 10)]
    pub k: usize,
    /// Rank toward this group (1-based index into g1/g2/g3)
    #[arg(long, default_value_t = 2)]
    pub toward: usize,
    #[command(flatten)]
    pub out: OutOpt,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// Series manifest: label<TAB>format<TAB>path per line
    #[arg(long)]
    pub manifest: PathBuf,
    #[command(flatten)]
    pub groups: GroupOpt,
    /// norm | cosine
    #[arg(long, default_value = "norm")]
    pub metric: String,
    /// sum | mean over the neutral list
    #[arg(long, default_value = "sum")]
    pub agg: String,
    /// Bootstrap resamples for confidence intervals (0 disables)
    #[arg(long, default_value_t = 0)]
    pub bootstrap: usize,
    /// Confidence level for the bootstrap intervals
    #[arg(long, default_value_t = 0.95)]
    pub level: f64,
    /// Seed for all randomness
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// all: restrict neutral words to those present in every slice;
    /// any: keep words present somewhere, dropping per slice
    #[arg(long, default_value = "all")]
    pub vocab: String,
    #[command(flatten)]
    pub out: OutOpt,
}

#[derive(Args, Debug)]
pub struct CorrArgs {
    /// Series manifest: label<TAB>format<TAB>path per line
    #[arg(long)]
    pub manifest: PathBuf,
    #[command(flatten)]
    pub groups: GroupOpt,
    /// norm | cosine
    #[arg(long, default_value = "norm")]
    pub metric: String,
    #[command(flatten)]
    pub out: OutOpt,
}

#[derive(Args, Debug)]
pub struct RegressArgs {
    /// Single embedding (alternative to --manifest)
    #[arg(long)]
    pub emb: Option<PathBuf>,
    /// Force the embedding input format
    #[arg(long)]
    pub emb_format: Option<String>,
    /// Keep only the first N vocabulary rows
    #[arg(long)]
    pub limit: Option<usize>,
    /// Temporal series manifest (pools pairs over all slices)
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    #[command(flatten)]
    pub groups: GroupOpt,
    /// norm | cosine
    #[arg(long, default_value = "norm")]
    pub metric: String,
    /// Census CSV: occupation,year,group,percent
    #[arg(long)]
    pub census: Option<PathBuf>,
    /// Census group whose share is the dependent variable (e.g. woman)
    #[arg(long)]
    pub census_group: Option<String>,
    /// Second census group: use the conditional two-group log proportion
    #[arg(long)]
    pub census_group2: Option<String>,
    /// Census year for a single embedding (defaults to the file's only year)
    #[arg(long)]
    pub year: Option<i32>,
    /// Stereotype CSV: adjective,raw_score
    #[arg(long)]
    pub stereo: Option<PathBuf>,
    /// Survey year for the stereotype score transform (1977 or 1990)
    #[arg(long)]
    pub survey_year: Option<u16>,
    /// Comma-separated words to drop from the join
    #[arg(long, default_value = "")]
    pub exclude: String,
    #[command(flatten)]
    pub out: OutOpt,
}

#[derive(Args, Debug)]
pub struct ResidualsArgs {
    #[command(flatten)]
    pub emb: EmbOpt,
    #[command(flatten)]
    pub groups: GroupOpt,
    /// norm | cosine
    #[arg(long, default_value = "norm")]
    pub metric: String,
    /// Census CSV: occupation,year,group,percent
    #[arg(long)]
    pub census: PathBuf,
    /// Census group whose share enters as log proportion
    #[arg(long)]
    pub census_group: String,
    /// Census year to join on (defaults to the file's only year)
    #[arg(long)]
    pub year: Option<i32>,
    /// Stereotype CSV: adjective,raw_score
    #[arg(long)]
    pub stereo: PathBuf,
    /// Survey year for the stereotype score transform (1977 or 1990)
    #[arg(long)]
    pub survey_year: u16,
    /// Comma-separated words to drop from the join
    #[arg(long, default_value = "")]
    pub exclude: String,
    #[command(flatten)]
    pub out: OutOpt,
}

#[derive(Args, Debug)]
pub struct AgreeArgs {
    #[command(flatten)]
    pub emb: EmbOpt,
    #[command(flatten)]
    pub groups: GroupOpt,
    #[command(flatten)]
    pub out: OutOpt,
}

#[derive(Args, Debug)]
pub struct NamesArgs {
    /// Census surname CSV (name,rank,count,pct<ethnicity>,...)
    #[arg(long)]
    pub surnames: PathBuf,
    /// Ethnicity column to select for (e.g. hispanic, asian)
    #[arg(long)]
    pub ethnicity: String,
    /// Series manifest used for the presence screen
    #[arg(long)]
    pub manifest: PathBuf,
    /// How many surnames to keep
    #[arg(short, long, default_value_t = 20)]
    pub k: usize,
    /// Size of each top-N candidate pool
    #[arg(long, default_value_t = 50)]
    pub pool: usize,
    /// Overall-rank ceiling for the percentage pool
    #[arg(long, default_value_t = 5000)]
    pub rank_ceiling: u64,
    #[command(flatten)]
    pub out: OutOpt,
}

#[derive(Args, Debug)]
pub struct TrainArgs {
    /// Corpus: file of `year<TAB>tokens` lines, or directory of <year>.txt
    #[arg(long)]
    pub corpus: PathBuf,
    /// ppmi-svd | sgns
    #[arg(long, default_value = "ppmi-svd")]
    pub algo: String,
    /// Width of each time slice in years
    #[arg(long, default_value_t = 3)]
    pub window_years: i32,
    /// Step between slice centers in years
    #[arg(long, default_value_t = 3)]
    pub step_years: i32,
    /// Embedding dimensionality
    #[arg(long, default_value_t = 50)]
    pub dim: usize,
    /// Token context window, each side
    #[arg(long, default_value_t = 4)]
    pub window: usize,
    /// Drop words rarer than this (positions stay masked)
    #[arg(long, default_value_t = 1)]
    pub min_count: u64,
    /// Negative samples per pair (sgns)
    #[arg(long, default_value_t = 5)]
    pub negatives: usize,
    /// Training epochs (sgns)
    #[arg(long, default_value_t = 5)]
    pub epochs: usize,
    /// Initial learning rate (sgns)
    #[arg(long, default_value_t = 0.025)]
    pub lr: f64,
    /// Context-distribution smoothing exponent
    #[arg(long, default_value_t = 0.75)]
    pub alpha: f64,
    /// Seed for all randomness
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Output directory; created atomically, must not already hold files
    #[arg(long)]
    pub out_dir: PathBuf,
    /// word2vec-text | word2vec-binary
    #[arg(long, default_value = "word2vec-text")]
    pub emb_format: String,
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = commands::run(cli.command) {
        // One line, machine-parsable: error[<kind>]: <message>.
        let msg = e
            .to_string()
            .split_whitespace()
            .collect::<Vec<_>>()
            .join(" ");
        eprintln!("error[{}]: {}", e.kind(), msg);
        std::process::exit(1);
    }
}
