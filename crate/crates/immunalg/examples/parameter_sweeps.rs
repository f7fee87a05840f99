//! Parameter studies on the digit recognition task: how the clonal factor,
//! selection size, affinity threshold, and mutation decay shape convergence.
//!
//! Each point averages ten seeded runs. The decay sweep shows why rho is the
//! touchy one: both low and high values hurt, with a sharp optimum between.

use immunalg::bench::{run_sweep, Algorithm, ExperimentConfig};

fn sweep(config: &ExperimentConfig, key: &str, values: &[&str]) {
    let mut c = config.clone();
    c.sweep = Some((key.into(), values.iter().map(|v| v.to_string()).collect()));
    let table = run_sweep(&c).unwrap();
    println!("{key:>8} -> mean {}", table.metric);
    for (value, metric) in &table.rows {
        println!("{value:>8}    {metric:.2}");
    }
    println!();
}

fn main() {
    let mut base = ExperimentConfig::new(Algorithm::Clonalg, "digits").with_param("gen", 3000);
    base.repeats = 10;

    sweep(&base, "beta", &["1", "5", "10", "15", "20"]);
    sweep(&base, "n", &["1", "2", "3", "4", "5"]);
    sweep(&base, "epsilon", &["0.8", "0.9", "0.95", "1.0"]);

    // decay is judged by terminal affinity at a fixed 50-generation budget
    let decay_base = ExperimentConfig::new(Algorithm::Clonalg, "digits")
        .with_param("gen", 50)
        .with_param("metric_name", "score");
    let mut decay_base = decay_base;
    decay_base.repeats = 10;
    sweep(&decay_base, "rho", &["2", "4", "4.8", "6", "8"]);
}
