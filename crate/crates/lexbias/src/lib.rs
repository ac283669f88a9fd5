//! Measure group-association bias in word embeddings and track it over time.
//!
//! The crate is organized around a small pipeline:
//!
//! * [`embedding`] parses word2vec / GloVe files into immutable, unit-normalized
//!   [`embedding::Embedding`]s and time-labeled [`embedding::EmbeddingSeries`].
//! * [`wordlists`] loads group and neutral word lists (a set of reference lists
//!   is compiled in) and restricts them to embedding vocabularies.
//! * [`metrics`] computes relative norm-distance and cosine bias scores between
//!   a neutral word list and a pair (or triple) of group vectors.
//! * [`temporal`] turns per-slice scores into time series, decade-pair
//!   correlation matrices, trend tests and rank trajectories.
//! * [`stats`] is the numeric backbone: Pearson correlation, OLS with classical
//!   inference, deterministic bootstrap intervals, residual analysis.
//! * [`external`] joins bias tables against census occupation tables and survey
//!   stereotype scores via log-proportion transforms.
//! * [`trainer`] builds desk-scale embeddings from a dated corpus with
//!   PPMI-SVD or skip-gram with negative sampling.
//!
//! Sign convention used everywhere: a positive bias score means the word leans
//! toward the *second* group of a pair.

pub mod embedding;
pub mod error;
pub mod external;
pub mod linalg;
pub mod metrics;
pub mod stats;
pub mod svg;
pub mod temporal;
pub mod trainer;
pub mod wordlists;

pub use error::{Error, Result};
