//! Artificial immune system algorithms for pattern recognition and clustering.
//!
//! The crate covers the classic immune-inspired metaheuristics together with
//! the datasets and harness needed to benchmark them against K-means:
//!
//! * [`shape`] — shape-space vectors, distance/affinity metrics, binding
//!   functions, and the deterministic [`SeededRng`](shape::SeededRng) used by
//!   every stochastic operation.
//! * [`clonal`] — CLONALG, the improved k-replacement variant, CLONCLAS
//!   class-generalized training, partitioned (parallel) CLONALG, and
//!   opt-CLONALG binary-coded function optimization.
//! * [`negsel`] — negative selection: detector censoring against a self set,
//!   monitoring, and sliding-window time-series change detection.
//! * [`ainet`] — the aiNet immune network for data compression plus minimal
//!   spanning tree cluster extraction.
//! * [`cluster`] — the UCSC unsupervised clonal selection classifier, the
//!   K-means baseline, the shared distance criterion, and label-alignment
//!   accuracy scoring.
//! * [`datasets`] — synthetic Gaussian/shape generators, UCI loaders with a
//!   missing-value policy, digit glyphs, and CSV interchange.
//! * [`mod@bench`] — seeded repeat experiments, parameter sweeps, and table
//!   emission used by the `aisbench` binary.
//!
//! Every stochastic operation takes an explicit [`shape::SeededRng`]; equal
//! seeds give equal results on every platform. A quick taste:
//!
//! ```
//! use immunalg::cluster::{ucsc_cluster, UcscParams};
//! use immunalg::datasets::dataset2;
//! use immunalg::shape::SeededRng;
//!
//! let data = dataset2(&mut SeededRng::new(7));
//! let params = UcscParams { clusters: 9, ..UcscParams::default() };
//! let out = ucsc_cluster(&data.points, &params, &mut SeededRng::new(1)).unwrap();
//! assert!(out.best.criterion > 0.0);
//! ```
//!
//! Runnable walkthroughs for each capability live in `examples/`; see the
//! README for the list.

pub mod ainet;
pub mod bench;
pub mod clonal;
pub mod cluster;
pub mod datasets;
pub mod negsel;
pub mod shape;

use std::path::PathBuf;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("{op} requires {expected} vectors")]
    VariantMismatch {
        op: &'static str,
        expected: &'static str,
    },
    #[error("binary vectors may only contain 0 or 1 (found {value} at index {index})")]
    NotBinary { value: f64, index: usize },
    #[error("{what} must not be empty")]
    EmptyInput { what: &'static str },
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("detector generation exhausted {attempts} attempts without finding a detector")]
    DetectorsExhausted { attempts: usize },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("dataset validation failed for {path}: {message}")]
    Validation { path: PathBuf, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
