//! The headline comparison: UCSC against K-means on the Iris data, one
//! hundred seeded runs each.
//!
//! Both optimize the same criterion — the total distance between points and
//! their cluster's mean — but UCSC reaches the same best partition on every
//! run, while K-means scatters across local minima.

use immunalg::bench::{emit_tables, run_experiment, Algorithm, ExperimentConfig};

fn main() {
    for algorithm in [Algorithm::Ucsc, Algorithm::Kmeans] {
        let mut config = ExperimentConfig::new(algorithm, "iris");
        config.repeats = 100;
        let report = run_experiment(&config).unwrap();
        let s = &report.summary;
        println!(
            "{:<7} best D = {:.3}  mean = {:.3}  repeat rate = {:>5.1}%  best accuracy = {:.2}%",
            s.algorithm.as_str(),
            s.best_score,
            s.mean_score,
            s.repeat_rate * 100.0,
            s.best_accuracy.unwrap() * 100.0
        );
        let tables = emit_tables(&report).unwrap();
        for line in tables.text.lines().skip(1) {
            println!("    {line}");
        }
    }
}
