//! Seeded experiment harness: repeated runs with statistics, parameter
//! sweeps, and table emission.
//!
//! Repeats are fully reproducible: run i uses seed `base_seed + i`, every
//! algorithm draws only from its own [`SeededRng`], and records are sorted by
//! seed before aggregation, so identical configs produce byte-identical
//! output files (the wall-time column aside). The repeat rate — the fraction
//! of runs landing within 0.5% of the best score — is the reliability measure
//! reported alongside the best.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ainet::{ainet_train, AiNetParams};
use crate::clonal::{clonalg_train, improved_clonalg_train, opt_clonalg, ClonalParams, OptProblem};
use crate::cluster::{align_accuracy, kmeans, ucsc_cluster, KMeansInit, UcscParams};
use crate::datasets::{
    dataset1, dataset2, dataset3, digit_glyphs, digit_glyphs_from_path, gen_shapes, iris,
    load_breast_cancer, load_iris, LabeledDataset, MissingPolicy, ShapeKind,
};
use crate::negsel::{generate_detectors, SelfSet};
use crate::shape::{Metric, SeededRng, ShapeVector};
use crate::{Error, Result};

/// Algorithms runnable through the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Ucsc,
    Kmeans,
    Clonalg,
    ImprovedClonalg,
    Clonclas,
    Negsel,
    Ainet,
    OptClonalg,
}

impl Algorithm {
    pub const ALL: [Algorithm; 8] = [
        Algorithm::Ucsc,
        Algorithm::Kmeans,
        Algorithm::Clonalg,
        Algorithm::ImprovedClonalg,
        Algorithm::Clonclas,
        Algorithm::Negsel,
        Algorithm::Ainet,
        Algorithm::OptClonalg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Ucsc => "ucsc",
            Algorithm::Kmeans => "kmeans",
            Algorithm::Clonalg => "clonalg",
            Algorithm::ImprovedClonalg => "improved_clonalg",
            Algorithm::Clonclas => "clonclas",
            Algorithm::Negsel => "negsel",
            Algorithm::Ainet => "ainet",
            Algorithm::OptClonalg => "opt_clonalg",
        }
    }

    /// Whether a smaller best score is better for this algorithm.
    pub fn minimizes(self) -> bool {
        matches!(self, Algorithm::Ucsc | Algorithm::Kmeans)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                Error::InvalidParam(format!(
                    "unknown algorithm {s:?}; expected one of {}",
                    Algorithm::ALL.map(Algorithm::name).join(", ")
                ))
            })
    }
}

/// One benchmark request: algorithm, data, parameter overrides, and the
/// repeat protocol.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub algorithm: Algorithm,
    /// Preset name (dataset1..3, iris, breast_cancer, digits, two_spirals,
    /// chainlink_rings, concentric_circles, none) or a CSV file path.
    pub dataset: String,
    /// Algorithm parameters as key=value strings; unknown keys are rejected.
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    #[serde(default = "default_repeats")]
    pub repeats: usize,
    #[serde(default)]
    pub base_seed: u64,
    /// Optional (parameter name, values) sweep.
    #[serde(default)]
    pub sweep: Option<(String, Vec<String>)>,
    /// Where to write summary.json, runs.csv, and trace files.
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
    #[serde(default = "default_missing_policy")]
    pub missing_policy: MissingPolicy,
}

fn default_repeats() -> usize {
    1
}

fn default_missing_policy() -> MissingPolicy {
    MissingPolicy::ImputeMean
}

impl ExperimentConfig {
    pub fn new(algorithm: Algorithm, dataset: &str) -> Self {
        ExperimentConfig {
            algorithm,
            dataset: dataset.into(),
            params: BTreeMap::new(),
            repeats: 1,
            base_seed: 0,
            sweep: None,
            output_dir: None,
            missing_policy: MissingPolicy::ImputeMean,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }
}

/// One seeded run. Rerunning with the same seed reproduces everything except
/// the wall time.
#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub seed: u64,
    pub generations_used: usize,
    /// Criterion D for the clustering algorithms, terminal affinity for the
    /// clonal ones, compression for aiNet, detector yield for negsel, and the
    /// objective value for opt_clonalg.
    pub best_score: f64,
    /// Overall label-alignment accuracy, when ground truth exists.
    pub accuracy: Option<f64>,
    pub wall_time_ms: f64,
    /// Per-generation progress (meaning depends on the algorithm).
    pub trace: Vec<f64>,
}

/// Aggregate over the repeats.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentSummary {
    pub algorithm: String,
    pub dataset: String,
    pub repeats: usize,
    pub base_seed: u64,
    pub best_score: f64,
    pub best_seed: u64,
    pub mean_score: f64,
    pub std_score: f64,
    /// Fraction of runs whose score is within 0.5% of the best.
    pub repeat_rate: f64,
    pub best_accuracy: Option<f64>,
}

/// Everything a finished experiment produced.
#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub summary: ExperimentSummary,
    pub records: Vec<RunRecord>,
    /// Predicted labels of the best run, when the algorithm partitions data.
    pub best_labels: Option<Vec<usize>>,
    /// Ground-truth labels of the dataset, when it has them.
    pub truth: Option<Vec<usize>>,
}

struct SingleRun {
    record: RunRecord,
    labels: Option<Vec<usize>>,
}

/// Typed view over the string parameter map that rejects unknown keys.
struct ParamReader<'a> {
    map: &'a BTreeMap<String, String>,
    known: Vec<&'static str>,
}

impl<'a> ParamReader<'a> {
    fn new(map: &'a BTreeMap<String, String>) -> Self {
        ParamReader {
            map,
            known: vec!["data_seed", "metric_name", "labeled"],
        }
    }

    fn get<T: FromStr>(&mut self, key: &'static str, default: T) -> Result<T>
    where
        T::Err: fmt::Display,
    {
        self.known.push(key);
        match self.map.get(key) {
            None => Ok(default),
            Some(raw) => raw
                .parse::<T>()
                .map_err(|e| Error::InvalidParam(format!("parameter {key}={raw}: {e}"))),
        }
    }

    fn finish(self) -> Result<()> {
        for key in self.map.keys() {
            if !self.known.contains(&key.as_str()) {
                return Err(Error::InvalidParam(format!(
                    "unknown parameter {key:?}; known keys: {}",
                    self.known.join(", ")
                )));
            }
        }
        Ok(())
    }
}

/// Resolves a dataset name or CSV path. Synthetic presets are generated with
/// the `data_seed` parameter (default 42) so every repeat sees the same data.
pub fn resolve_dataset(config: &ExperimentConfig) -> Result<Option<LabeledDataset>> {
    let data_seed: u64 = config
        .params
        .get("data_seed")
        .map(|s| s.parse())
        .transpose()
        .map_err(|e| Error::InvalidParam(format!("data_seed: {e}")))?
        .unwrap_or(42);
    let mut rng = SeededRng::new(data_seed);
    let set = match config.dataset.as_str() {
        "none" | "digits" => return Ok(None),
        "dataset1" => dataset1(&mut rng),
        "dataset2" => dataset2(&mut rng),
        "dataset3" => dataset3(&mut rng),
        "two_spirals" => gen_shapes(ShapeKind::TwoSpirals, 190, 0.05, &mut rng)?,
        "chainlink_rings" => gen_shapes(ShapeKind::ChainlinkRings, 500, 0.05, &mut rng)?,
        "concentric_circles" => gen_shapes(ShapeKind::ConcentricCircles, 630, 0.1, &mut rng)?,
        "iris" => iris(),
        "breast_cancer" => {
            let path = config
                .params
                .get("path")
                .map(PathBuf::from)
                .unwrap_or_else(|| PathBuf::from("data/breast-cancer-wisconsin.data"));
            load_breast_cancer(&path, config.missing_policy)?
        }
        other => {
            let path = Path::new(other);
            if !path.exists() {
                return Err(Error::InvalidParam(format!(
                    "unknown dataset {other:?}: not a preset and no such file"
                )));
            }
            let labeled = config.params.get("labeled").is_none_or(|v| v != "false");
            match path.extension().and_then(|e| e.to_str()) {
                Some("data") if other.contains("iris") => load_iris(path)?,
                Some("data") => load_breast_cancer(path, config.missing_policy)?,
                _ => LabeledDataset::read_csv(path, labeled)?,
            }
        }
    };
    Ok(Some(set))
}

fn clonal_params(reader: &mut ParamReader) -> Result<ClonalParams> {
    let defaults = ClonalParams::default();
    Ok(ClonalParams {
        population: reader.get("N", defaults.population)?,
        selected: reader.get("n", defaults.selected)?,
        clonal_factor: reader.get("beta", defaults.clonal_factor)?,
        random_replacements: reader.get("d", defaults.random_replacements)?,
        clone_injections: reader.get("k", defaults.clone_injections)?,
        decay: reader.get("rho", defaults.decay)?,
        generations: reader.get("gen", defaults.generations)?,
        epsilon: reader.get("epsilon", defaults.epsilon)?,
    })
}

fn glyph_antigens(config: &ExperimentConfig) -> Result<Vec<ShapeVector>> {
    match config.dataset.as_str() {
        "digits" => Ok(digit_glyphs()),
        other if Path::new(other).exists() => digit_glyphs_from_path(Path::new(other)),
        other => Err(Error::InvalidParam(format!(
            "algorithm {} needs the digits preset or a glyph file, got {other:?}",
            config.algorithm
        ))),
    }
}

fn run_single(
    config: &ExperimentConfig,
    data: Option<&LabeledDataset>,
    seed: u64,
) -> Result<SingleRun> {
    let started = Instant::now();
    let mut rng = SeededRng::new(seed);
    let mut reader = ParamReader::new(&config.params);
    if config.dataset == "breast_cancer" {
        reader.known.push("path");
    }

    let (record, labels) = match config.algorithm {
        Algorithm::Ucsc => {
            let data = data.ok_or(Error::EmptyInput { what: "dataset" })?;
            let defaults = UcscParams::default();
            let params = UcscParams {
                population: reader.get("N", defaults.population)?,
                clonal_factor: reader.get("beta", defaults.clonal_factor)?,
                random_replacements: reader.get("d", defaults.random_replacements)?,
                generations: reader.get("gen", defaults.generations)?,
                clusters: reader.get("K", data.class_count().max(1))?,
                refine_centroids: reader.get("refine", defaults.refine_centroids)?,
            };
            reader.finish()?;
            let out = ucsc_cluster(&data.points, &params, &mut rng)?;
            let accuracy = accuracy_of(&out.best.labels, data, params.clusters);
            (
                RunRecord {
                    seed,
                    generations_used: params.generations,
                    best_score: out.best.criterion,
                    accuracy,
                    wall_time_ms: 0.0,
                    trace: out.trace,
                },
                Some(out.best.labels),
            )
        }
        Algorithm::Kmeans => {
            let data = data.ok_or(Error::EmptyInput { what: "dataset" })?;
            let k = reader.get("K", data.class_count().max(1))?;
            let max_iter = reader.get("max_iter", 300)?;
            reader.finish()?;
            let out = kmeans(&data.points, k, KMeansInit::Random(&mut rng), max_iter)?;
            let accuracy = accuracy_of(&out.labels, data, k);
            (
                RunRecord {
                    seed,
                    generations_used: out.iterations,
                    best_score: out.criterion,
                    accuracy,
                    wall_time_ms: 0.0,
                    trace: out.squared_error_trace,
                },
                Some(out.labels),
            )
        }
        Algorithm::Clonalg | Algorithm::ImprovedClonalg => {
            let antigens = glyph_antigens(config)?;
            let params = clonal_params(&mut reader)?;
            reader.finish()?;
            let out = if config.algorithm == Algorithm::Clonalg {
                clonalg_train(&antigens, &params, &mut rng)?
            } else {
                improved_clonalg_train(&antigens, &params, &mut rng)?
            };
            let affs = out.terminal_affinities(&antigens);
            (
                RunRecord {
                    seed,
                    generations_used: out.generations,
                    best_score: affs.iter().sum::<f64>() / affs.len() as f64,
                    accuracy: None,
                    wall_time_ms: 0.0,
                    trace: out.mean_affinity_trace,
                },
                None,
            )
        }
        Algorithm::Clonclas => {
            let antigens = glyph_antigens(config)?;
            let params = clonal_params(&mut reader)?;
            reader.finish()?;
            let classes: Vec<(String, Vec<ShapeVector>)> = antigens
                .iter()
                .enumerate()
                .map(|(i, g)| (format!("glyph{i}"), vec![g.clone()]))
                .collect();
            let memory = crate::clonal::clonclas_train(&classes, &params, &mut rng)?;
            let l = memory.dim as f64;
            let affs: Vec<f64> = memory
                .cells
                .iter()
                .zip(&antigens)
                .map(|(cell, ag)| f64::from(crate::shape::hamming_distance(cell, ag).unwrap()) / l)
                .collect();
            (
                RunRecord {
                    seed,
                    generations_used: params.generations,
                    best_score: affs.iter().sum::<f64>() / affs.len() as f64,
                    accuracy: None,
                    wall_time_ms: 0.0,
                    trace: Vec::new(),
                },
                None,
            )
        }
        Algorithm::Negsel => {
            let data = data.ok_or(Error::EmptyInput { what: "dataset" })?;
            let count: usize = reader.get("count", 50)?;
            let threshold: f64 = reader.get("threshold", 0.1)?;
            let max_attempts: usize = reader.get("max_attempts", 1_000_000)?;
            let metric = match config.params.get("metric_name").map(String::as_str) {
                None | Some("euclidean") => Metric::Euclidean,
                Some("manhattan") => Metric::Manhattan,
                Some("hamming") => Metric::Hamming,
                Some(other) => {
                    return Err(Error::InvalidParam(format!("unknown metric {other:?}")))
                }
            };
            reader.finish()?;
            let self_set = SelfSet::new(data.shape_vectors())?;
            let out =
                generate_detectors(&self_set, count, threshold, metric, &mut rng, max_attempts)?;
            (
                RunRecord {
                    seed,
                    generations_used: out.attempts,
                    best_score: out.set.detectors.len() as f64 / count as f64,
                    accuracy: None,
                    wall_time_ms: 0.0,
                    trace: Vec::new(),
                },
                None,
            )
        }
        Algorithm::Ainet => {
            let data = data.ok_or(Error::EmptyInput { what: "dataset" })?;
            let defaults = AiNetParams::default();
            let params = AiNetParams {
                selected: reader.get("n", defaults.selected)?,
                memory_fraction: reader.get("zeta", defaults.memory_fraction)?,
                death_threshold: reader.get("sigma_d", defaults.death_threshold)?,
                suppression_threshold: reader.get("sigma_s", defaults.suppression_threshold)?,
                iterations: reader.get("gen", defaults.iterations)?,
                replace_fraction: reader.get("replace_pct", defaults.replace_fraction)?,
                initial_cells: reader.get("init_cells", defaults.initial_cells)?,
                scale_inputs: reader.get("scale", defaults.scale_inputs)?,
            };
            reader.finish()?;
            let out = ainet_train(&data.points, &params, &mut rng)?;
            (
                RunRecord {
                    seed,
                    generations_used: params.iterations,
                    best_score: out.compression,
                    accuracy: None,
                    wall_time_ms: 0.0,
                    trace: out.size_trace.iter().map(|&s| s as f64).collect(),
                },
                None,
            )
        }
        Algorithm::OptClonalg => {
            let objective = config
                .params
                .get("objective")
                .map(String::as_str)
                .unwrap_or("parabola");
            let z_min: f64 = reader.get("z_min", 0.0)?;
            let z_max: f64 = reader.get("z_max", 10.0)?;
            let bits: usize = reader.get("bits", 16)?;
            let mut params = clonal_params(&mut reader)?;
            reader.known.push("objective");
            reader.finish()?;
            if !config.params.contains_key("N") {
                params.population = 20;
            }
            if !config.params.contains_key("n") {
                params.selected = 5;
            }
            if !config.params.contains_key("beta") {
                params.clonal_factor = 4.0;
            }
            if !config.params.contains_key("d") {
                params.random_replacements = 2;
            }
            if !config.params.contains_key("rho") {
                params.decay = 2.0;
            }
            if !config.params.contains_key("gen") {
                params.generations = 100;
            }
            let problem = match objective {
                "parabola" => {
                    OptProblem::univariate(|z| -(z - 3.0) * (z - 3.0), z_min, z_max, bits)
                }
                "sine" => OptProblem::univariate(|z| z.sin() * z, z_min, z_max, bits),
                other => {
                    return Err(Error::InvalidParam(format!(
                        "unknown objective {other:?}; expected parabola or sine"
                    )))
                }
            };
            let out = opt_clonalg(&problem, &params, &mut rng)?;
            (
                RunRecord {
                    seed,
                    generations_used: params.generations,
                    best_score: out.score,
                    accuracy: None,
                    wall_time_ms: 0.0,
                    trace: out.trace,
                },
                None,
            )
        }
    };

    let mut record = record;
    record.wall_time_ms = started.elapsed().as_secs_f64() * 1e3;
    Ok(SingleRun { record, labels })
}

fn accuracy_of(pred: &[usize], data: &LabeledDataset, k: usize) -> Option<f64> {
    let classes = data.class_count();
    if classes < 2 {
        return None;
    }
    align_accuracy(pred, &data.labels, k.max(classes))
        .ok()
        .map(|r| r.overall)
}

/// Runs `repeats` seeded repetitions and aggregates them.
///
/// Repeats execute in parallel; each run owns a generator seeded with
/// `base_seed + i`, so the report is identical however they are scheduled.
/// With an output directory set, writes `summary.json`, `runs.csv`, and one
/// `trace_<seed>.csv` per run.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    if config.repeats == 0 {
        return Err(Error::InvalidParam("repeats must be >= 1".into()));
    }
    let data = resolve_dataset(config)?;
    // Fail fast on bad parameters before spawning the whole batch.
    let first = run_single(config, data.as_ref(), config.base_seed)?;

    let mut runs: Vec<SingleRun> = vec![first];
    let rest: Result<Vec<SingleRun>> = (1..config.repeats)
        .into_par_iter()
        .map(|i| run_single(config, data.as_ref(), config.base_seed + i as u64))
        .collect();
    runs.extend(rest?);
    runs.sort_by_key(|r| r.record.seed);

    let scores: Vec<f64> = runs.iter().map(|r| r.record.best_score).collect();
    let best_idx = if config.algorithm.minimizes() {
        (0..scores.len()).min_by(|&a, &b| scores[a].partial_cmp(&scores[b]).unwrap())
    } else {
        (0..scores.len()).max_by(|&a, &b| scores[a].partial_cmp(&scores[b]).unwrap())
    }
    .expect("at least one run");
    let best_score = scores[best_idx];
    let tolerance = 0.005 * best_score.abs();
    let repeat_rate = scores
        .iter()
        .filter(|&&s| (s - best_score).abs() <= tolerance)
        .count() as f64
        / scores.len() as f64;
    let mean = scores.iter().sum::<f64>() / scores.len() as f64;
    let std =
        (scores.iter().map(|s| (s - mean) * (s - mean)).sum::<f64>() / scores.len() as f64).sqrt();

    let summary = ExperimentSummary {
        algorithm: config.algorithm.name().into(),
        dataset: config.dataset.clone(),
        repeats: config.repeats,
        base_seed: config.base_seed,
        best_score,
        best_seed: runs[best_idx].record.seed,
        mean_score: mean,
        std_score: std,
        repeat_rate,
        best_accuracy: runs[best_idx].record.accuracy,
    };
    let best_labels = runs[best_idx].labels.clone();
    let records: Vec<RunRecord> = runs.into_iter().map(|r| r.record).collect();
    let report = ExperimentReport {
        summary,
        records,
        best_labels,
        truth: data.map(|d| d.labels),
    };
    if let Some(dir) = &config.output_dir {
        write_report(&report, dir)?;
    }
    Ok(report)
}

/// Serializes a report into `summary.json`, `runs.csv` and per-run traces.
pub fn write_report(report: &ExperimentReport, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    let json =
        serde_json::to_string_pretty(&report.summary).expect("summary serialization cannot fail");
    fs::write(dir.join("summary.json"), json)?;

    let mut runs = String::from("seed,generations_used,best_score,accuracy,wall_time_ms\n");
    for r in &report.records {
        let acc = r.accuracy.map_or(String::new(), |a| format!("{a}"));
        runs.push_str(&format!(
            "{},{},{},{},{:.3}\n",
            r.seed, r.generations_used, r.best_score, acc, r.wall_time_ms
        ));
    }
    fs::write(dir.join("runs.csv"), runs)?;

    for r in &report.records {
        let mut trace = String::from("generation,value\n");
        for (g, v) in r.trace.iter().enumerate() {
            trace.push_str(&format!("{g},{v}\n"));
        }
        fs::write(dir.join(format!("trace_{}.csv", r.seed)), trace)?;
    }
    Ok(())
}

/// A (value, aggregated metric) table produced by [`run_sweep`].
#[derive(Debug, Clone, Serialize)]
pub struct SweepTable {
    pub parameter: String,
    pub metric: String,
    pub rows: Vec<(String, f64)>,
}

impl SweepTable {
    pub fn to_csv(&self) -> String {
        let mut out = format!("{},mean_{}\n", self.parameter, self.metric);
        for (value, metric) in &self.rows {
            out.push_str(&format!("{value},{metric}\n"));
        }
        out
    }
}

/// Reruns the experiment at each sweep value and aggregates one metric:
/// `generations` (mean generations used, the default for the clonal family)
/// or `score` (mean best score).
pub fn run_sweep(config: &ExperimentConfig) -> Result<SweepTable> {
    let (key, values) = config
        .sweep
        .clone()
        .ok_or_else(|| Error::InvalidParam("sweep requires a parameter and values".into()))?;
    if values.is_empty() {
        return Err(Error::InvalidParam("sweep values must not be empty".into()));
    }
    let metric = config
        .params
        .get("metric_name")
        .cloned()
        .unwrap_or_else(|| {
            match config.algorithm {
                Algorithm::Clonalg | Algorithm::ImprovedClonalg | Algorithm::Clonclas => {
                    "generations"
                }
                _ => "score",
            }
            .into()
        });
    if metric != "generations" && metric != "score" {
        return Err(Error::InvalidParam(format!(
            "metric_name must be generations or score, got {metric:?}"
        )));
    }

    let mut rows = Vec::with_capacity(values.len());
    for value in &values {
        let mut point = config.clone();
        point.sweep = None;
        point.output_dir = None;
        point.params.insert(key.clone(), value.clone());
        let report = run_experiment(&point)?;
        let mean = if metric == "generations" {
            report
                .records
                .iter()
                .map(|r| r.generations_used as f64)
                .sum::<f64>()
                / report.records.len() as f64
        } else {
            report.records.iter().map(|r| r.best_score).sum::<f64>() / report.records.len() as f64
        };
        rows.push((value.clone(), mean));
    }
    let table = SweepTable {
        parameter: key,
        metric,
        rows,
    };
    if let Some(dir) = &config.output_dir {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("sweep.csv"), table.to_csv())?;
    }
    Ok(table)
}

/// Accuracy and criterion tables for the best run of a report.
#[derive(Debug, Clone)]
pub struct Tables {
    pub accuracy_csv: String,
    pub criterion_csv: String,
    /// Fixed-width rendering of both tables.
    pub text: String,
}

/// Builds the per-class accuracy table, the criterion table, and an aligned
/// text rendering from the best run of a labeled experiment.
pub fn emit_tables(report: &ExperimentReport) -> Result<Tables> {
    let truth = report.truth.as_ref().ok_or(Error::EmptyInput {
        what: "ground-truth labels",
    })?;
    let pred = report.best_labels.as_ref().ok_or(Error::EmptyInput {
        what: "predicted labels",
    })?;
    let k = truth.iter().chain(pred.iter()).max().map_or(1, |m| m + 1);
    let acc = align_accuracy(pred, truth, k)?;

    let mut accuracy_csv = String::from("class,accuracy_percent\n");
    for (c, a) in acc.per_class.iter().enumerate() {
        accuracy_csv.push_str(&format!("{c},{:.2}\n", a * 100.0));
    }
    accuracy_csv.push_str(&format!("overall,{:.2}\n", acc.overall * 100.0));

    let criterion_csv = format!(
        "algorithm,dataset,best_score,repeat_rate_percent\n{},{},{},{:.2}\n",
        report.summary.algorithm,
        report.summary.dataset,
        report.summary.best_score,
        report.summary.repeat_rate * 100.0,
    );

    let mut text = String::new();
    text.push_str(&format!(
        "{} on {} ({} repeats)\n",
        report.summary.algorithm, report.summary.dataset, report.summary.repeats
    ));
    text.push_str(&format!("{:<12}", ""));
    for c in 0..k {
        text.push_str(&format!("{:>10}", format!("class {c}")));
    }
    text.push('\n');
    text.push_str(&format!("{:<12}", "accuracy"));
    for a in &acc.per_class {
        text.push_str(&format!("{:>10}", format!("{:.2}%", a * 100.0)));
    }
    text.push('\n');
    text.push_str(&format!(
        "{:<12}{:>10}\n",
        "overall",
        format!("{:.2}%", acc.overall * 100.0)
    ));
    text.push_str(&format!(
        "{:<12}{:>10}\n",
        "criterion",
        format!("{:.3}", report.summary.best_score)
    ));
    Ok(Tables {
        accuracy_csv,
        criterion_csv,
        text,
    })
}

/// Writes both tables next to the other report files.
pub fn write_tables(tables: &Tables, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join("table_accuracy.csv"), &tables.accuracy_csv)?;
    fs::write(dir.join("table_criterion.csv"), &tables.criterion_csv)?;
    Ok(())
}
