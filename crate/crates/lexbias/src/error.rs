//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    // --- embedding parsing -------------------------------------------------
    #[error("malformed header at line 1: {detail}")]
    MalformedHeader { detail: String },

    #[error("line {line}: word {word:?} has {found} components, expected {expected}")]
    DimensionMismatch {
        line: usize,
        word: String,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: cannot parse {token:?} as a float")]
    BadFloat { line: usize, token: String },

    #[error("non-finite component for word {word:?} at {location}")]
    NonFinite { word: String, location: String },

    #[error("truncated input at offset {offset} (while reading {context})")]
    Truncated { offset: u64, context: String },

    #[error("cannot normalize {word:?}: zero vector")]
    ZeroVector { word: String },

    #[error("unknown embedding format {name:?} (expected word2vec-text, word2vec-binary or glove-text)")]
    UnknownFormat { name: String },

    // --- series / manifest --------------------------------------------------
    #[error("manifest line {line}: {detail}")]
    BadManifestLine { line: usize, detail: String },

    #[error("duplicate time label {label} in series")]
    DuplicateLabel { label: i32 },

    #[error("time labels not strictly increasing at {label}")]
    UnorderedLabels { label: i32 },

    #[error("series entry {label}: {source}")]
    SeriesEntry {
        label: i32,
        #[source]
        source: Box<Error>,
    },

    #[error("series is empty")]
    EmptySeries,

    // --- word lists ---------------------------------------------------------
    #[error("duplicate word {word:?} in list {list:?} (after lowercasing)")]
    DuplicateWord { list: String, word: String },

    #[error("word list {list:?} is empty")]
    EmptyWordList { list: String },

    #[error("no words of list {list:?} survive vocabulary filtering")]
    EmptyAfterFilter { list: String },

    #[error("unknown built-in word list {name:?}")]
    UnknownList { name: String },

    #[error("surname table is missing column {column:?}")]
    MissingColumn { column: String },

    #[error("surname selection needs {needed} names but only {found} candidates qualify")]
    SurnameShortfall { needed: usize, found: usize },

    // --- metrics ------------------------------------------------------------
    #[error("no words of group {group:?} are in the vocabulary of embedding {label:?}")]
    EmptyGroup { group: String, label: String },

    #[error("word {word:?} is not in the vocabulary of embedding {label:?}")]
    OutOfVocabulary { word: String, label: String },

    #[error("group vector {group:?} has {found} components, embedding dimension is {expected}")]
    GroupDimMismatch {
        group: String,
        expected: usize,
        found: usize,
    },

    // --- statistics ---------------------------------------------------------
    #[error("input lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("need at least {needed} observations, got {found} ({context})")]
    TooFewObservations {
        needed: usize,
        found: usize,
        context: String,
    },

    #[error("zero variance in {what}")]
    ZeroVariance { what: String },

    #[error("design matrix is rank deficient (column {column})")]
    RankDeficient { column: usize },

    #[error("bootstrap statistic failed on resample {index}: {source}")]
    ResampleFailed {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("correlation pair ({a}, {b}): {detail}")]
    CorrelationPair { a: i32, b: i32, detail: String },

    #[error("word {word:?} is absent from every slice")]
    NeverInVocabulary { word: String },

    // --- external data ------------------------------------------------------
    #[error("log-proportion undefined for p = {p} (requires 0 < p < 1)")]
    InvalidProportion { p: f64 },

    #[error("conditional log-proportion undefined: group percentage is zero")]
    ZeroPercent,

    #[error("unknown survey year {year} (expected 1977 or 1990)")]
    UnknownSurveyYear { year: u16 },

    #[error("join produced no pairs: word sets are disjoint")]
    EmptyJoin,

    #[error("{file} line {line}: {detail}")]
    BadRecord {
        file: String,
        line: usize,
        detail: String,
    },

    // --- trainer ------------------------------------------------------------
    #[error("corpus is empty{context}")]
    EmptyCorpus { context: String },

    #[error("requested dimension {dim} exceeds available rank bound {bound}")]
    DimTooLarge { dim: usize, bound: usize },

    #[error("invalid parameter: {detail}")]
    BadParams { detail: String },
}

impl Error {
    /// Wrap an error with the time label of the series entry it came from.
    pub fn for_series_entry(self, label: i32) -> Error {
        Error::SeriesEntry {
            label,
            source: Box::new(self),
        }
    }

    /// Short machine-parsable kind tag, used by the CLI error line.
    pub fn kind(&self) -> &'static str {
        use Error::*;
        match self {
            Io(_) => "io",
            Csv(_) => "csv",
            MalformedHeader { .. } => "malformed-header",
            DimensionMismatch { .. } => "dimension-mismatch",
            BadFloat { .. } => "bad-float",
            NonFinite { .. } => "non-finite",
            Truncated { .. } => "truncated",
            ZeroVector { .. } => "zero-vector",
            UnknownFormat { .. } => "unknown-format",
            BadManifestLine { .. } => "bad-manifest-line",
            DuplicateLabel { .. } => "duplicate-label",
            UnorderedLabels { .. } => "unordered-labels",
            SeriesEntry { .. } => "series-entry",
            EmptySeries => "empty-series",
            DuplicateWord { .. } => "duplicate-word",
            EmptyWordList { .. } => "empty-word-list",
            EmptyAfterFilter { .. } => "empty-after-filter",
            UnknownList { .. } => "unknown-list",
            MissingColumn { .. } => "missing-column",
            SurnameShortfall { .. } => "surname-shortfall",
            EmptyGroup { .. } => "empty-group",
            OutOfVocabulary { .. } => "out-of-vocabulary",
            GroupDimMismatch { .. } => "group-dim-mismatch",
            LengthMismatch { .. } => "length-mismatch",
            TooFewObservations { .. } => "too-few-observations",
            ZeroVariance { .. } => "zero-variance",
            RankDeficient { .. } => "rank-deficient",
            ResampleFailed { .. } => "resample-failed",
            CorrelationPair { .. } => "correlation-pair",
            NeverInVocabulary { .. } => "never-in-vocabulary",
            InvalidProportion { .. } => "invalid-proportion",
            ZeroPercent => "zero-percent",
            UnknownSurveyYear { .. } => "unknown-survey-year",
            EmptyJoin => "empty-join",
            BadRecord { .. } => "bad-record",
            EmptyCorpus { .. } => "empty-corpus",
            DimTooLarge { .. } => "dim-too-large",
            BadParams { .. } => "bad-params",
        }
    }
}
