//! Benchmark CLI over the immunalg library: dataset generation, single runs,
//! repeat experiments with statistics, parameter sweeps, and the negative
//! selection / aiNet workflows.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use immunalg::ainet::{ainet_train, mst_clusters, AiNetParams, MstMode};
use immunalg::bench::{
    emit_tables, resolve_dataset, run_experiment, run_sweep, write_tables, Algorithm,
    ExperimentConfig,
};
use immunalg::datasets::{LabeledDataset, MissingPolicy};
use immunalg::negsel::{generate_detectors, monitor, window_encode, SelfSet};
use immunalg::shape::{Metric, SeededRng};

#[derive(Parser)]
#[command(
    name = "aisbench",
    about = "Artificial immune system benchmark harness",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Options shared by the experiment-style subcommands. A TOML config file can
/// set any of them; explicit flags win.
#[derive(Args, Clone)]
struct ExperimentArgs {
    /// Algorithm: ucsc | kmeans | clonalg | improved_clonalg | clonclas |
    /// negsel | ainet | opt_clonalg
    #[arg(long)]
    algo: Option<String>,
    /// Dataset preset (dataset1..3, iris, breast_cancer, digits, two_spirals,
    /// chainlink_rings, concentric_circles, none) or a CSV path
    #[arg(long)]
    dataset: Option<String>,
    /// Base seed; run i uses seed + i
    #[arg(long)]
    seed: Option<u64>,
    /// Number of seeded repetitions
    #[arg(long)]
    repeats: Option<usize>,
    /// Output directory for summary.json, runs.csv, and per-seed traces
    #[arg(long)]
    out: Option<PathBuf>,
    /// Algorithm parameter override, repeatable: --param key=value
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    /// Missing-value policy for the breast-cancer loader
    #[arg(long = "missing-policy", value_parser = parse_policy)]
    missing_policy: Option<MissingPolicy>,
    /// TOML config file providing defaults for all of the above
    #[arg(long)]
    config: Option<PathBuf>,
}

fn parse_policy(s: &str) -> Result<MissingPolicy, String> {
    match s {
        "impute" => Ok(MissingPolicy::ImputeMean),
        "drop" => Ok(MissingPolicy::Drop),
        other => Err(format!("expected impute or drop, got {other:?}")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a dataset preset to CSV
    Gen {
        /// Preset name
        #[arg(long)]
        dataset: String,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
        /// Generation seed
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long = "missing-policy", value_parser = parse_policy)]
        missing_policy: Option<MissingPolicy>,
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
    /// One seeded run
    Run(ExperimentArgs),
    /// Repeated seeded runs with summary statistics
    Bench(ExperimentArgs),
    /// Rerun an experiment over a list of parameter values
    Sweep {
        #[command(flatten)]
        args: ExperimentArgs,
        /// Sweep request: --sweep key=v1,v2,...
        #[arg(long, value_name = "KEY=V1,V2,...")]
        sweep: String,
    },
    /// Negative selection over a real-valued series: train detectors on one
    /// CSV, monitor another, write per-window activation counts
    Negsel {
        /// Training series (one value per line, or first column of a CSV)
        #[arg(long)]
        train: PathBuf,
        /// Series to monitor
        #[arg(long)]
        monitor: PathBuf,
        #[arg(long, default_value_t = 4)]
        window: usize,
        #[arg(long, default_value_t = 1)]
        stride: usize,
        #[arg(long, default_value_t = 300)]
        detectors: usize,
        #[arg(long, default_value_t = 0.25)]
        threshold: f64,
        #[arg(long, default_value_t = 1_000_000)]
        max_attempts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output CSV of per-window activation counts
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Train an aiNet on a dataset, extract clusters, write cells and labels
    Ainet {
        /// Dataset preset or CSV path
        #[arg(long)]
        dataset: String,
        /// Fixed cluster count; omit for the automatic edge threshold
        #[arg(long)]
        clusters: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        /// Output directory for cells.csv, clusters.csv, report.txt
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// The subset of ExperimentConfig representable in a TOML config file.
#[derive(serde::Deserialize, Default)]
struct ConfigFile {
    algo: Option<String>,
    dataset: Option<String>,
    seed: Option<u64>,
    repeats: Option<usize>,
    out: Option<PathBuf>,
    missing_policy: Option<String>,
    #[serde(default)]
    params: BTreeMap<String, String>,
}

fn parse_kv(raw: &[String]) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for entry in raw {
        let (k, v) = entry
            .split_once('=')
            .with_context(|| format!("--param {entry:?} is not KEY=VALUE"))?;
        map.insert(k.to_string(), v.to_string());
    }
    Ok(map)
}

fn build_config(args: &ExperimentArgs) -> Result<ExperimentConfig> {
    let file: ConfigFile = match &args.config {
        None => ConfigFile::default(),
        Some(path) => toml::from_str(
            &fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?,
        )
        .with_context(|| format!("parsing config {}", path.display()))?,
    };

    let algo_name = args
        .algo
        .clone()
        .or(file.algo)
        .context("an algorithm is required (--algo or config `algo`)")?;
    let dataset = args
        .dataset
        .clone()
        .or(file.dataset)
        .context("a dataset is required (--dataset or config `dataset`)")?;

    let mut config = ExperimentConfig::new(algo_name.parse::<Algorithm>()?, &dataset);
    config.params = file.params;
    for (k, v) in parse_kv(&args.params)? {
        config.params.insert(k, v); // flags win
    }
    config.base_seed = args.seed.or(file.seed).unwrap_or(0);
    config.repeats = args.repeats.or(file.repeats).unwrap_or(1);
    config.output_dir = args.out.clone().or(file.out);
    config.missing_policy = match (&args.missing_policy, file.missing_policy.as_deref()) {
        (Some(p), _) => *p,
        (None, Some("impute")) | (None, Some("impute_mean")) => MissingPolicy::ImputeMean,
        (None, Some("drop")) => MissingPolicy::Drop,
        (None, Some(other)) => bail!("config missing_policy must be impute or drop, got {other:?}"),
        (None, None) => MissingPolicy::ImputeMean,
    };
    Ok(config)
}

fn read_series(path: &PathBuf) -> Result<Vec<f64>> {
    let text = fs::read_to_string(path)?;
    let mut series = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let field = line.split(',').next().unwrap_or("").trim();
        if field.is_empty() {
            continue;
        }
        match field.parse::<f64>() {
            Ok(v) => series.push(v),
            Err(e) => {
                if idx == 0 {
                    continue; // header
                }
                bail!("{}:{}: bad value {field:?}: {e}", path.display(), idx + 1);
            }
        }
    }
    if series.is_empty() {
        bail!("{}: no numeric values", path.display());
    }
    Ok(series)
}

fn main() {
    if let Err(err) = run() {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}

fn run() -> Result<()> {
    match Cli::parse().command {
        Command::Gen {
            dataset,
            out,
            seed,
            missing_policy,
            params,
        } => {
            let mut config = ExperimentConfig::new(Algorithm::Kmeans, &dataset);
            config.params = parse_kv(&params)?;
            config.params.insert("data_seed".into(), seed.to_string());
            if let Some(p) = missing_policy {
                config.missing_policy = p;
            }
            let set = resolve_dataset(&config)?
                .with_context(|| format!("{dataset:?} is not a point dataset"))?;
            set.write_csv(&out)?;
            println!(
                "wrote {} ({} points, {} dims, {} classes)",
                out.display(),
                set.len(),
                set.dim(),
                set.class_count()
            );
        }
        Command::Run(mut args) => {
            args.repeats = Some(1);
            let config = build_config(&args)?;
            let report = run_experiment(&config)?;
            let r = &report.records[0];
            println!(
                "{} on {}: seed={} score={:.6} generations={}{}",
                config.algorithm,
                config.dataset,
                r.seed,
                r.best_score,
                r.generations_used,
                r.accuracy
                    .map_or(String::new(), |a| format!(" accuracy={:.2}%", a * 100.0))
            );
        }
        Command::Bench(args) => {
            let config = build_config(&args)?;
            let report = run_experiment(&config)?;
            let s = &report.summary;
            println!(
                "{} on {} ({} repeats from seed {})",
                s.algorithm, s.dataset, s.repeats, s.base_seed
            );
            println!(
                "  best={:.6} (seed {})  mean={:.6}  std={:.6}  repeat-rate={:.1}%",
                s.best_score,
                s.best_seed,
                s.mean_score,
                s.std_score,
                s.repeat_rate * 100.0
            );
            if report.truth.is_some() && report.best_labels.is_some() {
                let tables = emit_tables(&report)?;
                print!("{}", tables.text);
                if let Some(dir) = &config.output_dir {
                    write_tables(&tables, dir)?;
                }
            }
            if let Some(dir) = &config.output_dir {
                println!("results in {}", dir.display());
            }
        }
        Command::Sweep { args, sweep } => {
            let mut config = build_config(&args)?;
            let (key, values) = sweep
                .split_once('=')
                .context("--sweep expects KEY=V1,V2,...")?;
            config.sweep = Some((
                key.to_string(),
                values.split(',').map(str::to_string).collect(),
            ));
            let table = run_sweep(&config)?;
            print!("{}", table.to_csv());
            if let Some(dir) = &config.output_dir {
                println!("sweep table in {}", dir.join("sweep.csv").display());
            }
        }
        Command::Negsel {
            train,
            monitor: monitor_path,
            window,
            stride,
            detectors,
            threshold,
            max_attempts,
            seed,
            out,
        } => {
            let train_series = read_series(&train)?;
            let test_series = read_series(&monitor_path)?;
            let self_set = SelfSet::new(window_encode(&train_series, window, stride)?)?;
            let mut rng = SeededRng::new(seed);
            let generated = generate_detectors(
                &self_set,
                detectors,
                threshold,
                Metric::Euclidean,
                &mut rng,
                max_attempts,
            )?;
            println!(
                "trained {} detectors in {} attempts (threshold {threshold}, window {window})",
                generated.set.detectors.len(),
                generated.attempts
            );
            let counts = monitor(
                &generated.set,
                &window_encode(&test_series, window, stride)?,
            )?;
            let flagged = counts.iter().filter(|&&c| c > 0).count();
            println!(
                "monitored {} windows, {flagged} flagged nonself",
                counts.len()
            );
            if let Some(path) = out {
                let mut csv = String::from("window,activations\n");
                for (i, c) in counts.iter().enumerate() {
                    csv.push_str(&format!("{i},{c}\n"));
                }
                fs::write(&path, csv)?;
                println!("activations in {}", path.display());
            }
        }
        Command::Ainet {
            dataset,
            clusters,
            seed,
            params,
            out,
        } => {
            let mut config = ExperimentConfig::new(Algorithm::Ainet, &dataset);
            config.params = parse_kv(&params)?;
            let set = resolve_dataset(&config)?
                .with_context(|| format!("{dataset:?} is not a point dataset"))?;
            let defaults = AiNetParams::default();
            let get = |key: &str, dflt: f64| -> Result<f64> {
                config.params.get(key).map_or(Ok(dflt), |v| {
                    v.parse().with_context(|| format!("parameter {key}={v}"))
                })
            };
            let net_params = AiNetParams {
                selected: get("n", defaults.selected as f64)? as usize,
                memory_fraction: get("zeta", defaults.memory_fraction)?,
                death_threshold: get("sigma_d", defaults.death_threshold)?,
                suppression_threshold: get("sigma_s", defaults.suppression_threshold)?,
                iterations: get("gen", defaults.iterations as f64)? as usize,
                replace_fraction: get("replace_pct", defaults.replace_fraction)?,
                initial_cells: get("init_cells", defaults.initial_cells as f64)? as usize,
                scale_inputs: config.params.get("scale").is_none_or(|v| v != "false"),
            };
            let outcome = ainet_train(&set.points, &net_params, &mut SeededRng::new(seed))?;
            let mode = clusters.map_or(MstMode::Auto, MstMode::Fixed);
            let labels = mst_clusters(&outcome.network, mode)?;
            let found = labels.iter().max().map_or(0, |m| m + 1);
            println!(
                "aiNet on {}: {} points -> {} cells ({:.2}% compression), {} clusters",
                set.name,
                set.len(),
                outcome.network.len(),
                outcome.compression * 100.0,
                found
            );
            if let Some(dir) = out {
                fs::create_dir_all(&dir)?;
                let cells = LabeledDataset {
                    name: "cells".into(),
                    points: outcome.network.cells_unscaled(),
                    labels: labels.clone(),
                };
                cells.write_csv(&dir.join("cells.csv"))?;
                let mut clusters = String::from("cell,cluster\n");
                for (i, l) in labels.iter().enumerate() {
                    clusters.push_str(&format!("{i},{l}\n"));
                }
                fs::write(dir.join("clusters.csv"), clusters)?;
                let mut report = String::new();
                report.push_str(&format!(
                    "points,{}\ncells,{}\ncompression_percent,{:.2}\nclusters,{}\nmin_cell_separation,{:.6}\n",
                    set.len(),
                    outcome.network.len(),
                    outcome.compression * 100.0,
                    found,
                    outcome.network.min_cell_separation()
                ));
                fs::write(dir.join("report.txt"), report)?;
                let mut trace = String::from("iteration,cells\n");
                for (i, s) in outcome.size_trace.iter().enumerate() {
                    trace.push_str(&format!("{i},{s}\n"));
                }
                fs::write(dir.join("size_trace.csv"), trace)?;
                println!("cells, report, and size trace in {}", dir.display());
            }
        }
    }
    Ok(())
}
