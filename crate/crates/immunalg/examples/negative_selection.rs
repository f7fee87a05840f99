//! Negative selection detecting a disturbance in a time series.
//!
//! Detectors are censored against sliding windows of a clean training signal,
//! then a monitored signal with a mid-stream change lights them up. Censoring
//! guarantees silence on self-like data.

use immunalg::negsel::{generate_detectors, monitor, window_encode, SelfSet};
use immunalg::shape::{Metric, SeededRng};

fn main() {
    // clean training signal: a plain sine
    let train: Vec<f64> = (0..600).map(|i| (f64::from(i) * 0.2).sin()).collect();
    let windows = window_encode(&train, 4, 1).unwrap();
    let self_set = SelfSet::new(windows).unwrap();

    let mut rng = SeededRng::new(5);
    let generated =
        generate_detectors(&self_set, 400, 0.25, Metric::Euclidean, &mut rng, 2_000_000).unwrap();
    println!(
        "censored {} detectors against {} self windows in {} attempts",
        generated.set.detectors.len(),
        self_set.patterns().len(),
        generated.attempts
    );

    // monitored signal: same sine, but the oscillation speeds up mid-stream
    let test: Vec<f64> = (0..300)
        .map(|i| {
            if i < 150 {
                (f64::from(i) * 0.2).sin()
            } else {
                (150.0 * 0.2 + f64::from(i - 150) * 0.55).sin()
            }
        })
        .collect();
    let counts = monitor(&generated.set, &window_encode(&test, 4, 1).unwrap()).unwrap();

    let silent = counts[..140].iter().filter(|&&c| c > 0).count();
    let firing = counts[150..].iter().filter(|&&c| c > 0).count();
    println!("windows flagged before the change: {silent}/140");
    println!(
        "windows flagged after the change:  {firing}/{}",
        counts.len() - 150
    );

    println!("\nactivation profile (one char per 3 windows, '.'=0):");
    let profile: String = counts
        .chunks(3)
        .map(|c| match c.iter().sum::<usize>() {
            0 => '.',
            1..=2 => '+',
            _ => '#',
        })
        .collect();
    println!("{profile}");
}
