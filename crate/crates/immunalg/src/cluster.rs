//! Partitional clustering: the UCSC unsupervised clonal selection classifier,
//! the K-means baseline, the shared distance criterion D, and label-alignment
//! accuracy scoring.
//!
//! Both algorithms are judged by the same criterion: the total Euclidean
//! distance between every point and the mean of the cluster it belongs to.
//! UCSC minimizes that criterion directly with a clonal search whose mutation
//! range adapts to the data spread, which is what makes it reach the same
//! best partition run after run where K-means gets stuck in local minima.

use crate::shape::{euclidean, SeededRng};
use crate::{Error, Result};

/// K concatenated centroids, row-major: the first L entries are centroid 0.
#[derive(Debug, Clone, PartialEq)]
pub struct CentroidAntibody {
    pub flat: Vec<f64>,
    clusters: usize,
    dim: usize,
}

impl CentroidAntibody {
    pub fn new(flat: Vec<f64>, clusters: usize) -> Result<Self> {
        if clusters == 0 || flat.is_empty() || !flat.len().is_multiple_of(clusters) {
            return Err(Error::InvalidParam(format!(
                "antibody of length {} does not decode into {} centroids",
                flat.len(),
                clusters
            )));
        }
        let dim = flat.len() / clusters;
        Ok(CentroidAntibody {
            flat,
            clusters,
            dim,
        })
    }

    pub fn clusters(&self) -> usize {
        self.clusters
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn centroid(&self, i: usize) -> &[f64] {
        &self.flat[i * self.dim..(i + 1) * self.dim]
    }

    pub fn centroids(&self) -> Vec<Vec<f64>> {
        (0..self.clusters)
            .map(|i| self.centroid(i).to_vec())
            .collect()
    }
}

/// UCSC parameters. The search budget is deliberately tiny: ten antibodies
/// and twenty generations suffice for the benchmark datasets.
#[derive(Debug, Clone)]
pub struct UcscParams {
    /// Population size N.
    pub population: usize,
    /// Clonal factor beta for the rank-based clone counts.
    pub clonal_factor: f64,
    /// Random antibodies replacing the worst d members each generation.
    pub random_replacements: usize,
    /// Generation budget.
    pub generations: usize,
    /// Cluster count K (assumed known).
    pub clusters: usize,
    /// Overwrite each valid antibody with its recomputed mean centroids after
    /// scoring. One refinement step per evaluation is what lets a population
    /// of ten settle on the best partition within twenty generations.
    pub refine_centroids: bool,
}

impl Default for UcscParams {
    fn default() -> Self {
        UcscParams {
            population: 10,
            clonal_factor: 10.0,
            random_replacements: 2,
            generations: 20,
            clusters: 2,
            refine_centroids: true,
        }
    }
}

impl UcscParams {
    fn validate(&self, data_len: usize) -> Result<()> {
        if self.population == 0 {
            return Err(Error::InvalidParam("population must be >= 1".into()));
        }
        if self.random_replacements >= self.population {
            return Err(Error::InvalidParam(
                "random_replacements must be smaller than the population".into(),
            ));
        }
        if self.clonal_factor <= 0.0 {
            return Err(Error::InvalidParam("clonal_factor must be > 0".into()));
        }
        if self.clusters == 0 || self.clusters > data_len {
            return Err(Error::InvalidParam(format!(
                "cluster count must be in 1..={data_len}"
            )));
        }
        Ok(())
    }
}

/// A scored clustering: the encoding, its induced partition, the refined
/// centroids, the criterion value, and the affinity 1/D (zero = rejected).
#[derive(Debug, Clone)]
pub struct ClusterSolution {
    pub antibody: CentroidAntibody,
    /// Nearest-encoded-centroid assignment per data point.
    pub labels: Vec<usize>,
    /// Member means of each induced cluster; empty clusters keep the encoded
    /// centroid.
    pub refined_centroids: Vec<Vec<f64>>,
    /// Total point-to-centroid distance D against the refined centroids.
    pub criterion: f64,
    /// 1/D, or 0 when some cluster came out empty (solution rejected).
    pub affinity: f64,
}

impl ClusterSolution {
    pub fn is_rejected(&self) -> bool {
        self.affinity == 0.0
    }
}

fn nearest(point: &[f64], centers: &[Vec<f64>]) -> usize {
    let mut best = 0;
    let mut best_d = f64::INFINITY;
    for (i, c) in centers.iter().enumerate() {
        let d = euclidean(point, c);
        if d < best_d {
            best_d = d;
            best = i;
        }
    }
    best
}

/// Criterion D: every point's distance to the nearest of the given centers,
/// summed. Used to score both UCSC and K-means results.
pub fn criterion_d(centers: &[Vec<f64>], data: &[Vec<f64>]) -> f64 {
    data.iter()
        .map(|p| euclidean(p, &centers[nearest(p, centers)]))
        .sum()
}

/// Scores an antibody: assign points to the nearest encoded centroid,
/// recompute each cluster's centroid as the member mean, measure D against
/// the recomputed centroids, and take affinity 1/D. Any empty cluster rejects
/// the solution with affinity 0.
pub fn ucsc_affinity(antibody: &CentroidAntibody, data: &[Vec<f64>]) -> ClusterSolution {
    let k = antibody.clusters();
    let dim = antibody.dim();
    let encoded = antibody.centroids();
    let labels: Vec<usize> = data.iter().map(|p| nearest(p, &encoded)).collect();

    let mut sums = vec![vec![0.0; dim]; k];
    let mut counts = vec![0usize; k];
    for (p, &l) in data.iter().zip(&labels) {
        counts[l] += 1;
        for d in 0..dim {
            sums[l][d] += p[d];
        }
    }
    let mut rejected = false;
    let refined: Vec<Vec<f64>> = (0..k)
        .map(|j| {
            if counts[j] == 0 {
                rejected = true;
                encoded[j].clone()
            } else {
                sums[j].iter().map(|s| s / counts[j] as f64).collect()
            }
        })
        .collect();
    let criterion: f64 = data
        .iter()
        .zip(&labels)
        .map(|(p, &l)| euclidean(p, &refined[l]))
        .sum();
    let affinity = if rejected || criterion == 0.0 {
        if rejected {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        1.0 / criterion
    };
    ClusterSolution {
        antibody: antibody.clone(),
        labels,
        refined_centroids: refined,
        criterion,
        affinity,
    }
}

/// Search region derived from the data: per-dimension bounds plus the
/// mutation range rho = (global max attribute - global min attribute) / 10.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchBounds {
    pub upper: Vec<f64>,
    pub lower: Vec<f64>,
    pub rho: f64,
}

pub fn search_bounds(data: &[Vec<f64>]) -> Result<SearchBounds> {
    if data.is_empty() {
        return Err(Error::EmptyInput { what: "data" });
    }
    let dim = data[0].len();
    let mut upper = vec![f64::NEG_INFINITY; dim];
    let mut lower = vec![f64::INFINITY; dim];
    for p in data {
        for d in 0..dim {
            upper[d] = upper[d].max(p[d]);
            lower[d] = lower[d].min(p[d]);
        }
    }
    let global_max = upper.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    let global_min = lower.iter().fold(f64::INFINITY, |a, &b| a.min(b));
    Ok(SearchBounds {
        upper,
        lower,
        rho: (global_max - global_min) / 10.0,
    })
}

/// Gaussian hypermutation: adds alpha * N(0, 1) to every coordinate with
/// alpha = rho * exp(-aff_norm), where aff_norm is the affinity min-max
/// normalized over the current population.
pub fn ucsc_mutate(
    antibody: &CentroidAntibody,
    aff_norm: f64,
    rho: f64,
    rng: &mut SeededRng,
) -> CentroidAntibody {
    let alpha = rho * (-aff_norm).exp();
    let flat = antibody
        .flat
        .iter()
        .map(|v| v + alpha * rng.standard_normal())
        .collect();
    CentroidAntibody {
        flat,
        clusters: antibody.clusters,
        dim: antibody.dim,
    }
}

/// Draws every centroid coordinate uniformly inside the search bounds.
pub fn random_antibody(bounds: &SearchBounds, k: usize, rng: &mut SeededRng) -> CentroidAntibody {
    let dim = bounds.lower.len();
    let mut flat = Vec::with_capacity(k * dim);
    for _ in 0..k {
        for d in 0..dim {
            flat.push(bounds.lower[d] + (bounds.upper[d] - bounds.lower[d]) * rng.uniform());
        }
    }
    CentroidAntibody {
        flat,
        clusters: k,
        dim,
    }
}

/// Result of a UCSC run.
#[derive(Debug, Clone)]
pub struct UcscOutcome {
    pub best: ClusterSolution,
    /// Best population affinity after each generation.
    pub trace: Vec<f64>,
    /// Times the whole population was rejected and reseeded in generation 1.
    pub reinitializations: usize,
}

/// Indices sorted by value descending, ties to the earlier index.
fn rank_desc(values: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].partial_cmp(&values[a]).unwrap().then(a.cmp(&b)));
    order
}

/// UCSC: unsupervised clonal selection classification.
///
/// Per generation: score everyone, rank, clone the whole population by rank,
/// hypermutate the clones with the population-normalized affinity, keep the N
/// best of parents and mutants, and replace the d worst with fresh random
/// antibodies drawn inside the data bounds. The returned solution is the
/// highest-affinity antibody after the final generation.
pub fn ucsc_cluster(
    data: &[Vec<f64>],
    params: &UcscParams,
    rng: &mut SeededRng,
) -> Result<UcscOutcome> {
    if data.is_empty() {
        return Err(Error::EmptyInput { what: "data" });
    }
    params.validate(data.len())?;
    let dim = data[0].len();
    for p in data {
        if p.len() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: p.len(),
            });
        }
    }
    let k = params.clusters;
    let n = params.population;
    let bounds = search_bounds(data)?;
    let counts = crate::clonal::clone_counts(n, params.clonal_factor);

    let mut population: Vec<CentroidAntibody> =
        (0..n).map(|_| random_antibody(&bounds, k, rng)).collect();
    let mut trace = Vec::with_capacity(params.generations);
    let mut reinitializations = 0;

    for generation in 0..params.generations {
        let mut solutions: Vec<ClusterSolution> = population
            .iter()
            .map(|ab| ucsc_affinity(ab, data))
            .collect();

        // A fully rejected first population carries no gradient; reseed it.
        while generation == 0
            && solutions.iter().all(ClusterSolution::is_rejected)
            && reinitializations < 100
        {
            reinitializations += 1;
            population = (0..n).map(|_| random_antibody(&bounds, k, rng)).collect();
            solutions = population
                .iter()
                .map(|ab| ucsc_affinity(ab, data))
                .collect();
        }

        if params.refine_centroids {
            for (ab, sol) in population.iter_mut().zip(&solutions) {
                if !sol.is_rejected() {
                    ab.flat = sol.refined_centroids.concat();
                }
            }
        }

        let affinities: Vec<f64> = solutions.iter().map(|s| s.affinity).collect();
        let order = rank_desc(&affinities);
        let ranked: Vec<CentroidAntibody> = order.iter().map(|&i| population[i].clone()).collect();
        let ranked_affs: Vec<f64> = order.iter().map(|&i| affinities[i]).collect();

        let lo = ranked_affs.last().copied().unwrap();
        let hi = ranked_affs[0];
        let norm = |a: f64| if hi > lo { (a - lo) / (hi - lo) } else { 1.0 };

        // Clone the whole ranked population and mutate with the parent's
        // normalized affinity.
        let mut merged = ranked.clone();
        let mut merged_affs = ranked_affs.clone();
        for (rank, parent) in ranked.iter().enumerate() {
            let aff_norm = norm(ranked_affs[rank]);
            for _ in 0..counts[rank] {
                let mutant = ucsc_mutate(parent, aff_norm, bounds.rho, rng);
                merged_affs.push(ucsc_affinity(&mutant, data).affinity);
                merged.push(mutant);
            }
        }
        let keep = rank_desc(&merged_affs);
        population = keep.iter().take(n).map(|&i| merged[i].clone()).collect();
        trace.push(merged_affs[keep[0]]);

        for t in 0..params.random_replacements {
            population[n - 1 - t] = random_antibody(&bounds, k, rng);
        }
    }

    let solutions: Vec<ClusterSolution> = population
        .iter()
        .map(|ab| ucsc_affinity(ab, data))
        .collect();
    let best = rank_desc(&solutions.iter().map(|s| s.affinity).collect::<Vec<_>>())[0];
    Ok(UcscOutcome {
        best: solutions.into_iter().nth(best).unwrap(),
        trace,
        reinitializations,
    })
}

/// Center initialization for [`kmeans`].
pub enum KMeansInit<'a> {
    /// Forgy: K distinct data points chosen at random.
    Random(&'a mut SeededRng),
    /// Explicit starting centers.
    Centers(Vec<Vec<f64>>),
}

/// Result of a K-means run.
#[derive(Debug, Clone)]
pub struct KMeansOutcome {
    pub labels: Vec<usize>,
    pub centers: Vec<Vec<f64>>,
    /// Squared error E^2 of the final partition.
    pub squared_error: f64,
    /// E^2 after each Lloyd iteration; non-increasing.
    pub squared_error_trace: Vec<f64>,
    /// Criterion D of the final partition, for comparison against UCSC.
    pub criterion: f64,
    pub iterations: usize,
}

/// Lloyd's K-means: assign to the nearest center, recompute means, repeat
/// until the assignment stabilizes or `max_iter` is hit. An empty cluster is
/// repaired by reseeding its center on the point farthest from its current
/// owner.
pub fn kmeans(
    data: &[Vec<f64>],
    k: usize,
    init: KMeansInit,
    max_iter: usize,
) -> Result<KMeansOutcome> {
    if data.is_empty() {
        return Err(Error::EmptyInput { what: "data" });
    }
    if k == 0 || k > data.len() {
        return Err(Error::InvalidParam(format!(
            "cluster count must be in 1..={}",
            data.len()
        )));
    }
    let dim = data[0].len();
    let mut centers = match init {
        KMeansInit::Random(rng) => rng
            .distinct_indices(data.len(), k)
            .into_iter()
            .map(|i| data[i].clone())
            .collect::<Vec<_>>(),
        KMeansInit::Centers(c) => {
            if c.len() != k || c.iter().any(|v| v.len() != dim) {
                return Err(Error::InvalidParam(
                    "initial centers must be K vectors of the data dimension".into(),
                ));
            }
            c
        }
    };

    let mut labels: Vec<usize> = Vec::new();
    let mut trace = Vec::new();
    let mut iterations = 0;
    for _ in 0..max_iter {
        iterations += 1;
        let mut new_labels: Vec<usize> = data.iter().map(|p| nearest(p, &centers)).collect();

        for j in 0..k {
            if !new_labels.contains(&j) {
                // farthest point from the center that currently owns it
                let far = data
                    .iter()
                    .enumerate()
                    .max_by(|(_, a), (_, b)| {
                        let dist_a = euclidean(a, &centers[nearest(a, &centers)]);
                        let dist_b = euclidean(b, &centers[nearest(b, &centers)]);
                        dist_a.partial_cmp(&dist_b).unwrap()
                    })
                    .map(|(i, _)| i)
                    .unwrap();
                centers[j] = data[far].clone();
                new_labels[far] = j;
            }
        }

        let mut sums = vec![vec![0.0; dim]; k];
        let mut counts = vec![0usize; k];
        for (p, &l) in data.iter().zip(&new_labels) {
            counts[l] += 1;
            for d in 0..dim {
                sums[l][d] += p[d];
            }
        }
        for j in 0..k {
            if counts[j] > 0 {
                centers[j] = sums[j].iter().map(|s| s / counts[j] as f64).collect();
            }
        }

        let e2: f64 = data
            .iter()
            .zip(&new_labels)
            .map(|(p, &l)| {
                let d = euclidean(p, &centers[l]);
                d * d
            })
            .sum();
        trace.push(e2);

        let stable = new_labels == labels;
        labels = new_labels;
        if stable {
            break;
        }
    }

    let squared_error = trace.last().copied().unwrap_or(0.0);
    let criterion: f64 = data
        .iter()
        .zip(&labels)
        .map(|(p, &l)| euclidean(p, &centers[l]))
        .sum();
    Ok(KMeansOutcome {
        labels,
        centers,
        squared_error,
        squared_error_trace: trace,
        criterion,
        iterations,
    })
}

/// Per-class and overall accuracy under the best cluster-to-class bijection.
#[derive(Debug, Clone)]
pub struct AccuracyReport {
    /// Fraction correct per true class, indexed by class.
    pub per_class: Vec<f64>,
    /// Fraction correct overall.
    pub overall: f64,
    /// The winning cluster -> class mapping.
    pub assignment: Vec<usize>,
}

/// Finds the cluster-to-class bijection maximizing overall accuracy (exact,
/// by subset dynamic programming over the K x K confusion matrix) and scores
/// the prediction under it. Invariant under any relabeling of the predicted
/// clusters.
pub fn align_accuracy(pred: &[usize], truth: &[usize], k: usize) -> Result<AccuracyReport> {
    if pred.len() != truth.len() {
        return Err(Error::DimensionMismatch {
            left: pred.len(),
            right: truth.len(),
        });
    }
    if pred.is_empty() {
        return Err(Error::EmptyInput { what: "labels" });
    }
    if k == 0 || k > 20 {
        return Err(Error::InvalidParam(
            "exact alignment supports 1..=20 classes".into(),
        ));
    }
    if pred.iter().chain(truth).any(|&l| l >= k) {
        return Err(Error::InvalidParam(format!("labels must be < {k}")));
    }

    let mut confusion = vec![vec![0usize; k]; k];
    for (&p, &t) in pred.iter().zip(truth) {
        confusion[p][t] += 1;
    }

    // dp[mask] = best total assigning clusters 0..popcount(mask) to the true
    // classes in mask; choice[mask] remembers the class given to the last
    // cluster.
    let full = 1usize << k;
    let mut dp = vec![usize::MIN; full];
    let mut choice = vec![usize::MAX; full];
    dp[0] = 0;
    for mask in 1..full {
        let cluster = (mask as u32).count_ones() as usize - 1;
        let mut best = 0;
        let mut best_class = usize::MAX;
        for class in 0..k {
            if mask & (1 << class) != 0 {
                let candidate = dp[mask ^ (1 << class)] + confusion[cluster][class];
                if best_class == usize::MAX || candidate > best {
                    best = candidate;
                    best_class = class;
                }
            }
        }
        dp[mask] = best;
        choice[mask] = best_class;
    }

    let mut assignment = vec![0usize; k];
    let mut mask = full - 1;
    while mask != 0 {
        let cluster = (mask as u32).count_ones() as usize - 1;
        let class = choice[mask];
        assignment[cluster] = class;
        mask ^= 1 << class;
    }

    let mut correct_per_class = vec![0usize; k];
    let mut total_per_class = vec![0usize; k];
    let mut correct = 0;
    for (&p, &t) in pred.iter().zip(truth) {
        total_per_class[t] += 1;
        if assignment[p] == t {
            correct_per_class[t] += 1;
            correct += 1;
        }
    }
    Ok(AccuracyReport {
        per_class: (0..k)
            .map(|c| {
                if total_per_class[c] == 0 {
                    1.0
                } else {
                    correct_per_class[c] as f64 / total_per_class[c] as f64
                }
            })
            .collect(),
        overall: correct as f64 / pred.len() as f64,
        assignment,
    })
}
