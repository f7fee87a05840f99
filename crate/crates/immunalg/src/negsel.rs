//! Negative selection: censor random detectors against a protected self set,
//! then monitor new samples for nonself activity.
//!
//! A detector matches a sample when their distance is at or below the match
//! threshold. Censoring discards every candidate that matches a self pattern,
//! so by construction a trained detector set is silent on self data.

use crate::shape::{distance, Metric, SeededRng, ShapeVector};
use crate::{Error, Result};

/// The protected pattern set P.
#[derive(Debug, Clone)]
pub struct SelfSet {
    patterns: Vec<ShapeVector>,
}

impl SelfSet {
    /// Validates non-emptiness and homogeneity (one variant, one dimension).
    pub fn new(patterns: Vec<ShapeVector>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::EmptyInput { what: "self set" });
        }
        let dim = patterns[0].dim();
        let binary = patterns[0].is_binary();
        for p in &patterns {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: p.dim(),
                });
            }
            if p.is_binary() != binary {
                return Err(Error::VariantMismatch {
                    op: "SelfSet::new",
                    expected: if binary { "binary" } else { "real" },
                });
            }
        }
        Ok(SelfSet { patterns })
    }

    pub fn patterns(&self) -> &[ShapeVector] {
        &self.patterns
    }

    pub fn dim(&self) -> usize {
        self.patterns[0].dim()
    }

    pub fn is_binary(&self) -> bool {
        self.patterns[0].is_binary()
    }

    /// Per-dimension bounding box of a real self set, inflated by 10% of the
    /// span on each side. Candidate detectors are drawn from this box so they
    /// concentrate near the self boundary.
    fn inflated_bounds(&self) -> (Vec<f64>, Vec<f64>) {
        let dim = self.dim();
        let mut lo = vec![f64::INFINITY; dim];
        let mut hi = vec![f64::NEG_INFINITY; dim];
        for p in &self.patterns {
            for (d, &v) in p.as_real().unwrap().iter().enumerate() {
                lo[d] = lo[d].min(v);
                hi[d] = hi[d].max(v);
            }
        }
        for d in 0..dim {
            let span = hi[d] - lo[d];
            lo[d] -= 0.1 * span;
            hi[d] += 0.1 * span;
        }
        (lo, hi)
    }
}

/// Censored detector set M plus the matching rule it was built with.
#[derive(Debug, Clone)]
pub struct DetectorSet {
    pub detectors: Vec<ShapeVector>,
    /// A detector matches a sample at distance <= this threshold.
    pub match_threshold: f64,
    pub metric: Metric,
}

impl DetectorSet {
    /// Number of detectors matching one sample.
    pub fn activations(&self, sample: &ShapeVector) -> Result<usize> {
        let mut count = 0;
        for det in &self.detectors {
            if distance(det, sample, self.metric)? <= self.match_threshold {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// Outcome of detector generation, reporting the attempt budget spent.
#[derive(Debug, Clone)]
pub struct GenerationOutcome {
    pub set: DetectorSet,
    /// Candidates drawn, admitted or not.
    pub attempts: usize,
}

/// Generate-and-censor detector construction.
///
/// Draws random candidates (uniform bits for binary self sets, uniform over
/// the 10%-inflated bounding box for real ones) and keeps those farther than
/// `match_threshold` from every self pattern. Stops at `target_count`
/// detectors or `max_attempts` candidates, whichever comes first; exhausting
/// the budget with zero detectors is an error carrying the attempt count,
/// which signals that the self set covers the space at this threshold.
pub fn generate_detectors(
    self_set: &SelfSet,
    target_count: usize,
    match_threshold: f64,
    metric: Metric,
    rng: &mut SeededRng,
    max_attempts: usize,
) -> Result<GenerationOutcome> {
    if target_count == 0 {
        return Err(Error::InvalidParam("target_count must be >= 1".into()));
    }
    if match_threshold < 0.0 {
        return Err(Error::InvalidParam("match_threshold must be >= 0".into()));
    }
    match (self_set.is_binary(), metric) {
        (true, Metric::Hamming) | (false, Metric::Euclidean) | (false, Metric::Manhattan) => {}
        _ => {
            return Err(Error::VariantMismatch {
                op: "generate_detectors",
                expected: if self_set.is_binary() {
                    "binary"
                } else {
                    "real"
                },
            })
        }
    }

    let dim = self_set.dim();
    let bounds = if self_set.is_binary() {
        None
    } else {
        Some(self_set.inflated_bounds())
    };
    let mut detectors = Vec::with_capacity(target_count);
    let mut attempts = 0;
    while detectors.len() < target_count && attempts < max_attempts {
        attempts += 1;
        let candidate = match &bounds {
            None => ShapeVector::Binary((0..dim).map(|_| rng.bit()).collect()),
            Some((lo, hi)) => {
                ShapeVector::Real((0..dim).map(|d| rng.uniform_in(lo[d], hi[d])).collect())
            }
        };
        let mut admissible = true;
        for p in self_set.patterns() {
            if distance(&candidate, p, metric)? <= match_threshold {
                admissible = false;
                break;
            }
        }
        if admissible {
            detectors.push(candidate);
        }
    }
    if detectors.is_empty() {
        return Err(Error::DetectorsExhausted { attempts });
    }
    Ok(GenerationOutcome {
        set: DetectorSet {
            detectors,
            match_threshold,
            metric,
        },
        attempts,
    })
}

/// Monitoring phase: per-sample count of activated detectors.
///
/// A sample is flagged nonself when its count is at least one. Pure function
/// of its inputs; safe to call concurrently on a shared detector set.
pub fn monitor(detectors: &DetectorSet, samples: &[ShapeVector]) -> Result<Vec<usize>> {
    samples.iter().map(|s| detectors.activations(s)).collect()
}

/// Slices a real time series into overlapping windows of length `window`,
/// advancing by `stride`, each returned as a real shape vector.
pub fn window_encode(series: &[f64], window: usize, stride: usize) -> Result<Vec<ShapeVector>> {
    if window == 0 || stride == 0 {
        return Err(Error::InvalidParam("window and stride must be >= 1".into()));
    }
    if series.len() < window {
        return Err(Error::InvalidParam(format!(
            "series of length {} is shorter than the window {}",
            series.len(),
            window
        )));
    }
    let mut out = Vec::new();
    let mut start = 0;
    while start + window <= series.len() {
        out.push(ShapeVector::Real(series[start..start + window].to_vec()));
        start += stride;
    }
    Ok(out)
}
