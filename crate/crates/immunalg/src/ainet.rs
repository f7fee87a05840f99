//! aiNet: an evolutionary immune network that compresses a dataset into a
//! small set of memory cells, plus minimal-spanning-tree cluster extraction
//! over the trained network.
//!
//! Each antigen stimulates its nearest cells, which clone and mutate toward
//! it; the best matured clones join the network, and suppression removes any
//! pair of cells closer than the suppression threshold. The surviving cells
//! are an internal image of the data: far fewer points, same structure.

use crate::clonal::clone_counts;
use crate::shape::{euclidean, SeededRng};
use crate::{Error, Result};

/// aiNet training parameters.
#[derive(Debug, Clone)]
pub struct AiNetParams {
    /// Cells selected (nearest first) per antigen for cloning (n).
    pub selected: usize,
    /// Percentage zeta of matured clones kept as partial memory, in (0, 100].
    pub memory_fraction: f64,
    /// Natural-death distance threshold sigma_d: a matured clone farther than
    /// this from its antigen is discarded.
    pub death_threshold: f64,
    /// Suppression distance threshold sigma_s: of two cells closer than this,
    /// the later one dies.
    pub suppression_threshold: f64,
    /// Iteration count N_gen.
    pub iterations: usize,
    /// Percentage of worst cells replaced by fresh random cells at the end of
    /// each iteration (0 disables replacement).
    pub replace_fraction: f64,
    /// Network size before the first iteration; seeded from random data
    /// points so every cell in the network's history is data-adjacent.
    pub initial_cells: usize,
    /// Min-max scale every dimension to [0, 1] before training, so the sigma
    /// thresholds are comparable across datasets. The returned network keeps
    /// the scaled coordinates and the bounds needed to map back.
    pub scale_inputs: bool,
}

impl Default for AiNetParams {
    fn default() -> Self {
        AiNetParams {
            selected: 4,
            memory_fraction: 10.0,
            death_threshold: 1.0,
            suppression_threshold: 0.1,
            iterations: 40,
            replace_fraction: 0.0,
            initial_cells: 20,
            scale_inputs: true,
        }
    }
}

impl AiNetParams {
    fn validate(&self) -> Result<()> {
        if self.selected == 0 {
            return Err(Error::InvalidParam("selected must be >= 1".into()));
        }
        if !(0.0 < self.memory_fraction && self.memory_fraction <= 100.0) {
            return Err(Error::InvalidParam(
                "memory_fraction must be in (0, 100]".into(),
            ));
        }
        if self.death_threshold <= 0.0 {
            return Err(Error::InvalidParam("death_threshold must be > 0".into()));
        }
        if self.suppression_threshold < 0.0 {
            return Err(Error::InvalidParam(
                "suppression_threshold must be >= 0".into(),
            ));
        }
        if !(0.0..=100.0).contains(&self.replace_fraction) {
            return Err(Error::InvalidParam(
                "replace_fraction must be in [0, 100]".into(),
            ));
        }
        if self.initial_cells == 0 {
            return Err(Error::InvalidParam("initial_cells must be >= 1".into()));
        }
        Ok(())
    }
}

/// Trained memory-cell network: the cell matrix M plus the symmetric
/// inter-cell distance matrix S (zero diagonal).
#[derive(Debug, Clone)]
pub struct ImmuneNetwork {
    /// Memory cells, in the training coordinate space.
    pub cells: Vec<Vec<f64>>,
    /// Pairwise Euclidean distances between cells.
    pub similarity: Vec<Vec<f64>>,
    /// (per-dimension minimum, per-dimension span) when inputs were scaled.
    pub scaling: Option<(Vec<f64>, Vec<f64>)>,
}

impl ImmuneNetwork {
    fn from_cells(cells: Vec<Vec<f64>>, scaling: Option<(Vec<f64>, Vec<f64>)>) -> Self {
        let n = cells.len();
        let mut sim = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = euclidean(&cells[i], &cells[j]);
                sim[i][j] = d;
                sim[j][i] = d;
            }
        }
        ImmuneNetwork {
            cells,
            similarity: sim,
            scaling,
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Smallest off-diagonal similarity entry; infinity for fewer than two
    /// cells. After training this is at least the suppression threshold.
    pub fn min_cell_separation(&self) -> f64 {
        let mut min = f64::INFINITY;
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                min = min.min(self.similarity[i][j]);
            }
        }
        min
    }

    /// Cells mapped back to the original (unscaled) coordinate space.
    pub fn cells_unscaled(&self) -> Vec<Vec<f64>> {
        match &self.scaling {
            None => self.cells.clone(),
            Some((lo, span)) => self
                .cells
                .iter()
                .map(|c| {
                    c.iter()
                        .enumerate()
                        .map(|(d, &v)| lo[d] + v * span[d])
                        .collect()
                })
                .collect(),
        }
    }
}

/// Directed mutation toward the antigen: c - alpha * (c - Ag).
///
/// alpha = 1 lands exactly on the antigen, alpha = 0 leaves the cell alone.
pub fn ainet_mutate(cell: &[f64], antigen: &[f64], alpha: f64) -> Vec<f64> {
    cell.iter()
        .zip(antigen)
        .map(|(c, a)| c - alpha * (c - a))
        .collect()
}

/// Training outcome: the network, the per-iteration size trace, and workload
/// counters used by the parameter-sweep checks.
#[derive(Debug, Clone)]
pub struct AiNetOutcome {
    pub network: ImmuneNetwork,
    /// Network size at the end of each iteration.
    pub size_trace: Vec<usize>,
    /// Fraction of the input the network eliminated: 1 - cells / data points.
    pub compression: f64,
    /// Matured clones evaluated over the whole run.
    pub clones_processed: usize,
    /// Partial-memory cells appended to the network over the whole run.
    pub cells_appended: usize,
}

/// Keeps every cell at least `threshold` from the ones kept before it; of a
/// violating pair the later-indexed cell dies.
fn suppress(cells: Vec<Vec<f64>>, threshold: f64) -> Vec<Vec<f64>> {
    let mut kept: Vec<Vec<f64>> = Vec::with_capacity(cells.len());
    for c in cells {
        if kept.iter().all(|k| euclidean(k, &c) >= threshold) {
            kept.push(c);
        }
    }
    kept
}

/// Trains an aiNet on real-valued data.
pub fn ainet_train(
    data: &[Vec<f64>],
    params: &AiNetParams,
    rng: &mut SeededRng,
) -> Result<AiNetOutcome> {
    params.validate()?;
    if data.is_empty() {
        return Err(Error::EmptyInput { what: "data" });
    }
    let dim = data[0].len();
    for p in data {
        if p.len() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: p.len(),
            });
        }
    }

    let (antigens, scaling) = if params.scale_inputs {
        let mut lo = vec![f64::INFINITY; dim];
        let mut hi = vec![f64::NEG_INFINITY; dim];
        for p in data {
            for d in 0..dim {
                lo[d] = lo[d].min(p[d]);
                hi[d] = hi[d].max(p[d]);
            }
        }
        let span: Vec<f64> = lo
            .iter()
            .zip(&hi)
            .map(|(l, h)| if h > l { h - l } else { 1.0 })
            .collect();
        let scaled: Vec<Vec<f64>> = data
            .iter()
            .map(|p| {
                p.iter()
                    .enumerate()
                    .map(|(d, &v)| (v - lo[d]) / span[d])
                    .collect()
            })
            .collect();
        (scaled, Some((lo, span)))
    } else {
        (data.to_vec(), None)
    };

    let mut cells: Vec<Vec<f64>> = rng
        .distinct_indices(antigens.len(), params.initial_cells.min(antigens.len()))
        .into_iter()
        .map(|i| antigens[i].clone())
        .collect();
    let mut size_trace = Vec::with_capacity(params.iterations);
    let mut clones_processed = 0;
    let mut cells_appended = 0;

    for _ in 0..params.iterations {
        for ag in &antigens {
            let dists: Vec<f64> = cells.iter().map(|c| euclidean(c, ag)).collect();
            let mut order: Vec<usize> = (0..cells.len()).collect();
            order.sort_by(|&a, &b| dists[a].partial_cmp(&dists[b]).unwrap().then(a.cmp(&b)));
            order.truncate(params.selected);
            let d_max = order.iter().map(|&i| dists[i]).fold(0.0f64, f64::max);

            // Clone by affinity rank and mutate toward the antigen; the step
            // shrinks as the parent cell gets closer.
            let counts = clone_counts(order.len(), 1.0);
            let mut matured: Vec<(Vec<f64>, f64)> = Vec::new();
            for (rank, &idx) in order.iter().enumerate() {
                let relative = if d_max > 0.0 { dists[idx] / d_max } else { 0.0 };
                for _ in 0..counts[rank] {
                    let alpha = rng.uniform() * relative;
                    let clone = ainet_mutate(&cells[idx], ag, alpha);
                    let d = euclidean(&clone, ag);
                    matured.push((clone, d));
                }
            }
            clones_processed += matured.len();

            // Partial memory: the best zeta% of the matured clones...
            let keep =
                ((matured.len() as f64 * params.memory_fraction / 100.0).round() as usize).max(1);
            matured.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
            matured.truncate(keep);
            // ...that survive natural death...
            matured.retain(|(_, d)| *d <= params.death_threshold);
            // ...and clonal suppression among themselves.
            let survivors = suppress(
                matured.into_iter().map(|(c, _)| c).collect(),
                params.suppression_threshold,
            );
            cells_appended += survivors.len();
            cells.extend(survivors);
        }

        // Network suppression over the whole pool.
        cells = suppress(cells, params.suppression_threshold);

        if params.replace_fraction > 0.0 {
            let n_replace = (cells.len() as f64 * params.replace_fraction / 100.0) as usize;
            if n_replace > 0 {
                // Worst cell = the one whose nearest antigen is farthest away.
                let mut nearest: Vec<(usize, f64)> = cells
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let d = antigens
                            .iter()
                            .map(|a| euclidean(c, a))
                            .fold(f64::INFINITY, f64::min);
                        (i, d)
                    })
                    .collect();
                nearest.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
                for &(idx, _) in nearest.iter().take(n_replace) {
                    cells[idx] = (0..dim).map(|_| rng.uniform()).collect();
                }
            }
        }
        size_trace.push(cells.len());
    }

    // Replacement may have broken the pairwise separation; one last pass
    // restores the invariant on the returned network.
    cells = suppress(cells, params.suppression_threshold);
    let compression = 1.0 - cells.len() as f64 / data.len() as f64;
    Ok(AiNetOutcome {
        network: ImmuneNetwork::from_cells(cells, scaling),
        size_trace,
        compression,
        clones_processed,
        cells_appended,
    })
}

/// Cluster-count policy for [`mst_clusters`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MstMode {
    /// Remove every edge longer than mean + one standard deviation of the
    /// MST edge lengths.
    Auto,
    /// Remove the K-1 longest edges, yielding exactly K components.
    Fixed(usize),
}

/// Cuts long edges out of the Euclidean minimal spanning tree over the cells
/// and labels the resulting connected components (0-based, in first-seen cell
/// order).
pub fn mst_clusters(network: &ImmuneNetwork, mode: MstMode) -> Result<Vec<usize>> {
    let n = network.len();
    if n == 0 {
        return Err(Error::EmptyInput {
            what: "network cells",
        });
    }
    if let MstMode::Fixed(k) = mode {
        if k == 0 || k > n {
            return Err(Error::InvalidParam(format!(
                "cluster count must be in 1..={n}"
            )));
        }
    }

    // Prim's algorithm on the dense similarity matrix.
    let mut edges: Vec<(f64, usize, usize)> = Vec::with_capacity(n.saturating_sub(1));
    let mut in_tree = vec![false; n];
    in_tree[0] = true;
    let mut best: Vec<(f64, usize)> = (0..n).map(|j| (network.similarity[0][j], 0)).collect();
    for _ in 1..n {
        let mut next = None;
        let mut next_d = f64::INFINITY;
        for j in 0..n {
            if !in_tree[j] && best[j].0 < next_d {
                next_d = best[j].0;
                next = Some(j);
            }
        }
        let j = next.expect("graph is complete");
        in_tree[j] = true;
        edges.push((best[j].0, best[j].1, j));
        for k in 0..n {
            if !in_tree[k] && network.similarity[j][k] < best[k].0 {
                best[k] = (network.similarity[j][k], j);
            }
        }
    }

    let cut: Vec<bool> = match mode {
        MstMode::Auto => {
            let lens: Vec<f64> = edges.iter().map(|e| e.0).collect();
            let mean = lens.iter().sum::<f64>() / lens.len().max(1) as f64;
            let var = lens.iter().map(|l| (l - mean) * (l - mean)).sum::<f64>()
                / lens.len().max(1) as f64;
            let threshold = mean + var.sqrt();
            edges.iter().map(|e| e.0 > threshold).collect()
        }
        MstMode::Fixed(k) => {
            let mut order: Vec<usize> = (0..edges.len()).collect();
            order.sort_by(|&a, &b| edges[b].0.partial_cmp(&edges[a].0).unwrap().then(a.cmp(&b)));
            let mut cut = vec![false; edges.len()];
            for &i in order.iter().take(k - 1) {
                cut[i] = true;
            }
            cut
        }
    };

    // Union-find over the surviving edges.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, &(_, a, b)) in edges.iter().enumerate() {
        if !cut[i] {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut labels = vec![usize::MAX; n];
    let mut next_label = 0;
    for i in 0..n {
        let root = find(&mut parent, i);
        if labels[root] == usize::MAX {
            labels[root] = next_label;
            next_label += 1;
        }
        labels[i] = labels[root];
    }
    Ok(labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mutate_endpoints_and_midpoint() {
        let cell = vec![0.0, 0.0];
        let antigen = vec![2.0, 4.0];
        assert_eq!(ainet_mutate(&cell, &antigen, 1.0), antigen);
        assert_eq!(ainet_mutate(&cell, &antigen, 0.0), cell);
        assert_eq!(ainet_mutate(&cell, &antigen, 0.5), vec![1.0, 2.0]);
    }

    #[test]
    fn total_redundancy_collapses_to_one_cell() {
        let data = vec![vec![0.3, 0.7]; 50];
        let params = AiNetParams {
            suppression_threshold: 0.1,
            iterations: 5,
            scale_inputs: false,
            ..AiNetParams::default()
        };
        let out = ainet_train(&data, &params, &mut SeededRng::new(2)).unwrap();
        assert_eq!(out.network.len(), 1);
        let cell = &out.network.cells[0];
        assert!(euclidean(cell, &data[0]) < 1e-6);
    }

    fn ring_data(n: usize, seed: u64) -> Vec<Vec<f64>> {
        let mut rng = SeededRng::new(seed);
        (0..n)
            .map(|_| {
                let t = rng.uniform() * std::f64::consts::TAU;
                vec![
                    t.cos() + 0.05 * rng.standard_normal(),
                    t.sin() + 0.05 * rng.standard_normal(),
                ]
            })
            .collect()
    }

    #[test]
    fn suppression_threshold_controls_final_size() {
        let data = ring_data(150, 4);
        let mut previous = usize::MAX;
        for sigma_s in [0.05, 0.1, 0.2] {
            let params = AiNetParams {
                suppression_threshold: sigma_s,
                iterations: 8,
                ..AiNetParams::default()
            };
            let out = ainet_train(&data, &params, &mut SeededRng::new(9)).unwrap();
            assert!(
                out.network.len() <= previous,
                "size must not grow with sigma_s"
            );
            previous = out.network.len();
            assert!(out.network.min_cell_separation() >= sigma_s);
        }
    }

    #[test]
    fn larger_selection_grows_the_network() {
        // below the mesh-saturating suppression threshold the selection size
        // drives both the workload and the final density
        for seed in [3, 9, 12] {
            let data = ring_data(150, seed);
            let run = |n: usize| {
                let params = AiNetParams {
                    selected: n,
                    suppression_threshold: 0.02,
                    iterations: 3,
                    ..AiNetParams::default()
                };
                ainet_train(&data, &params, &mut SeededRng::new(seed + 1)).unwrap()
            };
            let (small, large) = (run(2), run(6));
            assert!(large.network.len() >= small.network.len());
            assert!(large.clones_processed > small.clones_processed);
        }
    }

    #[test]
    fn memory_fraction_adds_work_not_size() {
        let data = ring_data(150, 8);
        let run = |zeta: f64| {
            let params = AiNetParams {
                memory_fraction: zeta,
                iterations: 8,
                ..AiNetParams::default()
            };
            ainet_train(&data, &params, &mut SeededRng::new(5)).unwrap()
        };
        let small = run(10.0);
        let large = run(40.0);
        assert!(large.cells_appended > small.cells_appended);
        let ratio = large.network.len() as f64 / small.network.len() as f64;
        assert!(
            (0.8..=1.25).contains(&ratio),
            "final size should be stable, ratio {ratio}"
        );
    }

    #[test]
    fn replacement_keeps_suppression_invariant() {
        let data = ring_data(120, 11);
        let params = AiNetParams {
            iterations: 6,
            replace_fraction: 10.0,
            ..AiNetParams::default()
        };
        let out = ainet_train(&data, &params, &mut SeededRng::new(1)).unwrap();
        assert!(out.network.min_cell_separation() >= params.suppression_threshold);
    }

    #[test]
    fn every_shape_family_compresses() {
        use crate::datasets::{gen_shapes, ShapeKind};
        for kind in [
            ShapeKind::TwoSpirals,
            ShapeKind::ChainlinkRings,
            ShapeKind::ConcentricCircles,
        ] {
            let data =
                gen_shapes(kind, kind.default_count(), 0.05, &mut SeededRng::new(42)).unwrap();
            let params = AiNetParams {
                iterations: 10,
                ..AiNetParams::default()
            };
            let out = ainet_train(&data.points, &params, &mut SeededRng::new(7)).unwrap();
            assert!(
                out.network.len() < data.len(),
                "{kind:?} failed to compress"
            );
            let expected = 1.0 - out.network.len() as f64 / data.len() as f64;
            assert!((out.compression - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn empty_data_errors() {
        let r = ainet_train(&[], &AiNetParams::default(), &mut SeededRng::new(0));
        assert!(matches!(r, Err(Error::EmptyInput { .. })));
    }

    #[test]
    fn mst_two_far_blobs() {
        // inter-blob gap 10x the intra-blob spacing
        let mut cells = Vec::new();
        for i in 0..5 {
            cells.push(vec![f64::from(i) * 0.1, 0.0]);
        }
        for i in 0..5 {
            cells.push(vec![f64::from(i) * 0.1 + 10.0, 0.0]);
        }
        let network = ImmuneNetwork::from_cells(cells, None);
        let labels = mst_clusters(&network, MstMode::Fixed(2)).unwrap();
        assert_eq!(&labels[..5], &[0, 0, 0, 0, 0]);
        assert_eq!(&labels[5..], &[1, 1, 1, 1, 1]);
        // auto mode finds the same split
        let auto = mst_clusters(&network, MstMode::Auto).unwrap();
        assert_eq!(auto, labels);
    }

    #[test]
    fn mst_degenerate_modes() {
        let single = ImmuneNetwork::from_cells(vec![vec![1.0, 2.0]], None);
        assert_eq!(mst_clusters(&single, MstMode::Auto).unwrap(), vec![0]);
        assert_eq!(mst_clusters(&single, MstMode::Fixed(1)).unwrap(), vec![0]);

        let cells: Vec<Vec<f64>> = (0..4).map(|i| vec![f64::from(i), 0.0]).collect();
        let network = ImmuneNetwork::from_cells(cells, None);
        let labels = mst_clusters(&network, MstMode::Fixed(4)).unwrap();
        assert_eq!(labels, vec![0, 1, 2, 3]);
        assert!(mst_clusters(&network, MstMode::Fixed(5)).is_err());
    }
}
