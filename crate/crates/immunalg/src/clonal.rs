//! Clonal selection algorithms over binary shape-space: CLONALG, the improved
//! k-replacement variant, CLONCLAS class training, partitioned execution, and
//! opt-CLONALG function optimization.
//!
//! Affinity is complementarity: the Hamming distance between antibody and
//! antigen, normalized by the dimension L, so a memory cell reaches affinity
//! 1.0 exactly when it is the bitwise complement of its antigen.

use crate::shape::{hamming, SeededRng, ShapeVector};
use crate::{Error, Result};

/// Parameters shared by the CLONALG family.
#[derive(Debug, Clone)]
pub struct ClonalParams {
    /// Total population size N (memory plus remainder).
    pub population: usize,
    /// Number of antibodies selected for cloning per antigen (n).
    pub selected: usize,
    /// Clonal factor beta scaling the clone counts.
    pub clonal_factor: f64,
    /// Random antibodies injected into the remainder per antigen pass (d).
    pub random_replacements: usize,
    /// Clone-pool members injected into the remainder (k, improved variant).
    pub clone_injections: usize,
    /// Mutation decay rho: per-bit flip probability is exp(-rho * affinity).
    pub decay: f64,
    /// Generation budget.
    pub generations: usize,
    /// Target normalized affinity in [0, 1]; training stops early once every
    /// memory cell reaches it.
    pub epsilon: f64,
}

impl Default for ClonalParams {
    fn default() -> Self {
        ClonalParams {
            population: 10,
            selected: 3,
            clonal_factor: 10.0,
            random_replacements: 0,
            clone_injections: 3,
            decay: 4.8,
            generations: 500,
            epsilon: 1.0,
        }
    }
}

impl ClonalParams {
    fn validate(&self) -> Result<()> {
        if self.population == 0 {
            return Err(Error::InvalidParam("population must be >= 1".into()));
        }
        if self.selected == 0 || self.selected > self.population {
            return Err(Error::InvalidParam(format!(
                "selected must be in 1..={}",
                self.population
            )));
        }
        if self.clonal_factor <= 0.0 {
            return Err(Error::InvalidParam("clonal_factor must be > 0".into()));
        }
        if self.random_replacements > self.population || self.clone_injections > self.population {
            return Err(Error::InvalidParam(
                "replacement counts cannot exceed the population".into(),
            ));
        }
        if self.decay <= 0.0 {
            return Err(Error::InvalidParam("decay must be > 0".into()));
        }
        if !(0.0..=1.0).contains(&self.epsilon) {
            return Err(Error::InvalidParam("epsilon must be in [0, 1]".into()));
        }
        Ok(())
    }
}

/// Antibody repertoire split into memory cells and the remainder pool.
#[derive(Debug, Clone)]
pub struct ClonalPopulation {
    /// One memory cell per antigen (or per class).
    pub memory: Vec<Vec<u8>>,
    /// The r = N - m remaining antibodies.
    pub remainder: Vec<Vec<u8>>,
}

impl ClonalPopulation {
    fn random(memory_size: usize, total: usize, dim: usize, rng: &mut SeededRng) -> Self {
        let random_cell = |rng: &mut SeededRng| (0..dim).map(|_| rng.bit()).collect::<Vec<u8>>();
        ClonalPopulation {
            memory: (0..memory_size).map(|_| random_cell(rng)).collect(),
            remainder: (memory_size..total).map(|_| random_cell(rng)).collect(),
        }
    }

    fn len(&self) -> usize {
        self.memory.len() + self.remainder.len()
    }

    fn cell(&self, idx: usize) -> &[u8] {
        if idx < self.memory.len() {
            &self.memory[idx]
        } else {
            &self.remainder[idx - self.memory.len()]
        }
    }
}

/// Number of clones per rank for a descending, rank-sorted pool.
///
/// Entry i (1-based rank) is `round(beta * pool_size / i)` with half-away-
/// from-zero rounding, clamped to at least one clone.
pub fn clone_counts(pool_size: usize, beta: f64) -> Vec<usize> {
    (1..=pool_size)
        .map(|rank| {
            let raw = (beta * pool_size as f64 / rank as f64).round();
            (raw as usize).max(1)
        })
        .collect()
}

/// Per-bit flip probability for a normalized affinity: exp(-rho * f).
pub fn mutation_rate(f_norm: f64, rho: f64) -> f64 {
    (-rho * f_norm).exp()
}

/// Flips each bit independently with probability `rate`.
pub fn multipoint_mutate(
    bits: &ShapeVector,
    rate: f64,
    rng: &mut SeededRng,
) -> Result<ShapeVector> {
    let src = bits.as_bits().ok_or(Error::VariantMismatch {
        op: "multipoint_mutate",
        expected: "binary",
    })?;
    let mut out = src.to_vec();
    mutate_bits(&mut out, rate, rng);
    ShapeVector::binary(out)
}

fn mutate_bits(bits: &mut [u8], rate: f64, rng: &mut SeededRng) {
    for b in bits.iter_mut() {
        if rng.chance(rate) {
            *b ^= 1;
        }
    }
}

/// Result of a clonal training run.
#[derive(Debug, Clone)]
pub struct TrainOutcome {
    /// One evolved memory cell per antigen, in antigen order.
    pub memory: Vec<ShapeVector>,
    /// Final remainder pool.
    pub remainder: Vec<ShapeVector>,
    /// Mean normalized memory affinity after each executed generation.
    pub mean_affinity_trace: Vec<f64>,
    /// Per-generation normalized affinity of every memory cell.
    pub memory_affinity_trace: Vec<Vec<f64>>,
    /// Generations actually executed before convergence or budget exhaustion.
    pub generations: usize,
}

impl TrainOutcome {
    /// Normalized affinity of each memory cell against its antigen.
    pub fn terminal_affinities(&self, antigens: &[ShapeVector]) -> Vec<f64> {
        self.memory
            .iter()
            .zip(antigens)
            .map(|(m, ag)| {
                let l = ag.dim() as f64;
                f64::from(hamming(m.as_bits().unwrap(), ag.as_bits().unwrap())) / l
            })
            .collect()
    }
}

fn validate_antigens(antigens: &[ShapeVector]) -> Result<usize> {
    if antigens.is_empty() {
        return Err(Error::EmptyInput { what: "antigens" });
    }
    let dim = antigens[0].dim();
    for ag in antigens {
        if !ag.is_binary() {
            return Err(Error::VariantMismatch {
                op: "clonal training",
                expected: "binary",
            });
        }
        if ag.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: ag.dim(),
            });
        }
    }
    Ok(dim)
}

fn bits_of(antigens: &[ShapeVector]) -> Vec<&[u8]> {
    antigens.iter().map(|a| a.as_bits().unwrap()).collect()
}

/// Indices of the `take` highest values, descending, ties broken by the
/// earlier index.
fn rank_descending(values: &[f64], take: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].partial_cmp(&values[a]).unwrap().then(a.cmp(&b)));
    order.truncate(take);
    order
}

/// Indices of the `take` lowest values, ascending, ties broken by the earlier
/// index.
fn rank_ascending(values: &[f64], take: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap().then(a.cmp(&b)));
    order.truncate(take);
    order
}

/// One clonal pass against a single antigen: select, clone, hypermutate, and
/// return the mutated pool with its normalized affinities.
fn clonal_pass(
    pop: &ClonalPopulation,
    affinity: &dyn Fn(&[u8]) -> f64,
    params: &ClonalParams,
    rng: &mut SeededRng,
) -> (Vec<Vec<u8>>, Vec<f64>) {
    let f: Vec<f64> = (0..pop.len()).map(|i| affinity(pop.cell(i))).collect();
    let selected = rank_descending(&f, params.selected);
    let counts = clone_counts(selected.len(), params.clonal_factor);
    let mut clones = Vec::new();
    for (rank, &idx) in selected.iter().enumerate() {
        let rate = mutation_rate(f[idx], params.decay);
        for _ in 0..counts[rank] {
            let mut clone = pop.cell(idx).to_vec();
            mutate_bits(&mut clone, rate, rng);
            clones.push(clone);
        }
    }
    let clone_affinities: Vec<f64> = clones.iter().map(|c| affinity(c)).collect();
    (clones, clone_affinities)
}

/// Replaces the `d` lowest-affinity remainder cells with fresh random bits.
fn refresh_remainder(
    pop: &mut ClonalPopulation,
    affinity: &dyn Fn(&[u8]) -> f64,
    d: usize,
    dim: usize,
    rng: &mut SeededRng,
) {
    if d == 0 || pop.remainder.is_empty() {
        return;
    }
    let f_r: Vec<f64> = pop.remainder.iter().map(|c| affinity(c)).collect();
    for idx in rank_ascending(&f_r, d.min(pop.remainder.len())) {
        pop.remainder[idx] = (0..dim).map(|_| rng.bit()).collect();
    }
}

/// Injects the k best mutated clones over the k worst remainder cells.
fn inject_clones(
    pop: &mut ClonalPopulation,
    clones: &[Vec<u8>],
    clone_affinities: &[f64],
    affinity: &dyn Fn(&[u8]) -> f64,
    k: usize,
) {
    if k == 0 || pop.remainder.is_empty() {
        return;
    }
    let k = k.min(pop.remainder.len());
    let f_r: Vec<f64> = pop.remainder.iter().map(|c| affinity(c)).collect();
    let worst = rank_ascending(&f_r, k);
    let best = rank_descending(clone_affinities, k);
    for (&w, &b) in worst.iter().zip(&best) {
        pop.remainder[w] = clones[b].clone();
    }
}

fn to_outcome(
    pop: ClonalPopulation,
    mean_trace: Vec<f64>,
    memory_trace: Vec<Vec<f64>>,
    generations: usize,
) -> TrainOutcome {
    TrainOutcome {
        memory: pop.memory.into_iter().map(ShapeVector::Binary).collect(),
        remainder: pop.remainder.into_iter().map(ShapeVector::Binary).collect(),
        mean_affinity_trace: mean_trace,
        memory_affinity_trace: memory_trace,
        generations,
    }
}

/// CLONALG pattern recognition training.
///
/// The outer loop runs over generations; within a generation every antigen
/// gets one clonal pass. A memory cell is replaced only when the best mutated
/// clone strictly improves it, so per-cell affinity never decreases. Training
/// stops once every memory cell reaches `epsilon`.
pub fn clonalg_train(
    antigens: &[ShapeVector],
    params: &ClonalParams,
    rng: &mut SeededRng,
) -> Result<TrainOutcome> {
    params.validate()?;
    let dim = validate_antigens(antigens)?;
    let m = antigens.len();
    if params.population < m {
        return Err(Error::InvalidParam(format!(
            "population {} is smaller than the antigen count {}",
            params.population, m
        )));
    }
    let ags = bits_of(antigens);
    let l = dim as f64;
    let mut pop = ClonalPopulation::random(m, params.population, dim, rng);
    let mut mean_trace = Vec::new();
    let mut memory_trace = Vec::new();
    let mut generations = 0;

    let memory_affinities = |pop: &ClonalPopulation| -> Vec<f64> {
        pop.memory
            .iter()
            .zip(&ags)
            .map(|(cell, ag)| f64::from(hamming(cell, ag)) / l)
            .collect()
    };

    for _ in 0..params.generations {
        if memory_affinities(&pop).iter().all(|&a| a >= params.epsilon) {
            break;
        }
        for (i, ag) in ags.iter().enumerate() {
            let affinity = |cell: &[u8]| f64::from(hamming(cell, ag)) / l;
            let (clones, clone_affinities) = clonal_pass(&pop, &affinity, params, rng);
            let best = rank_descending(&clone_affinities, 1)[0];
            if clone_affinities[best] > affinity(&pop.memory[i]) {
                pop.memory[i] = clones[best].clone();
            }
            refresh_remainder(&mut pop, &affinity, params.random_replacements, dim, rng);
        }
        generations += 1;
        let affs = memory_affinities(&pop);
        mean_trace.push(affs.iter().sum::<f64>() / m as f64);
        memory_trace.push(affs);
    }
    Ok(to_outcome(pop, mean_trace, memory_trace, generations))
}

/// Improved CLONALG: the k-replacement variant.
///
/// Runs antigen by antigen (the CLONCLAS loop structure): each antigen's
/// memory cell is evolved through its own generation loop, and after every
/// pass the k worst remainder cells are overwritten by the k best mutated
/// clones. Reusing the clone pool this way is what makes the variant converge
/// in far fewer generations than [`clonalg_train`]; k = 1 already captures
/// essentially all of the speedup.
///
/// `generations` in the outcome is the largest per-antigen generation count,
/// which is the number comparable with the base algorithm's generation count.
pub fn improved_clonalg_train(
    antigens: &[ShapeVector],
    params: &ClonalParams,
    rng: &mut SeededRng,
) -> Result<TrainOutcome> {
    params.validate()?;
    let dim = validate_antigens(antigens)?;
    let m = antigens.len();
    if params.population < m {
        return Err(Error::InvalidParam(format!(
            "population {} is smaller than the antigen count {}",
            params.population, m
        )));
    }
    let ags = bits_of(antigens);
    let l = dim as f64;
    let mut pop = ClonalPopulation::random(m, params.population, dim, rng);
    let mut per_antigen_trace: Vec<Vec<f64>> = Vec::with_capacity(m);
    let mut generations = 0;

    for (i, ag) in ags.iter().enumerate() {
        let affinity = |cell: &[u8]| f64::from(hamming(cell, ag)) / l;
        let mut trace = Vec::new();
        let mut gens_here = 0;
        for _ in 0..params.generations {
            if affinity(&pop.memory[i]) >= params.epsilon {
                break;
            }
            let (clones, clone_affinities) = clonal_pass(&pop, &affinity, params, rng);
            let best = rank_descending(&clone_affinities, 1)[0];
            if clone_affinities[best] > affinity(&pop.memory[i]) {
                pop.memory[i] = clones[best].clone();
            }
            inject_clones(
                &mut pop,
                &clones,
                &clone_affinities,
                &affinity,
                params.clone_injections,
            );
            refresh_remainder(&mut pop, &affinity, params.random_replacements, dim, rng);
            gens_here += 1;
            trace.push(affinity(&pop.memory[i]));
        }
        generations = generations.max(gens_here);
        per_antigen_trace.push(trace);
    }

    // Align the per-antigen traces on a shared generation axis, holding each
    // converged cell at its final affinity.
    let mut mean_trace = Vec::with_capacity(generations);
    let mut memory_trace = Vec::with_capacity(generations);
    for g in 0..generations {
        let affs: Vec<f64> = per_antigen_trace
            .iter()
            .zip(&ags)
            .enumerate()
            .map(|(i, (t, ag))| match t.get(g) {
                Some(&a) => a,
                None => t
                    .last()
                    .copied()
                    .unwrap_or_else(|| f64::from(hamming(&pop.memory[i], ag)) / l),
            })
            .collect();
        mean_trace.push(affs.iter().sum::<f64>() / m as f64);
        memory_trace.push(affs);
    }
    Ok(to_outcome(pop, mean_trace, memory_trace, generations))
}

/// Class-generalized memory produced by [`clonclas_train`].
#[derive(Debug, Clone)]
pub struct ClassMemory {
    pub labels: Vec<String>,
    /// One generalized cell per class, aligned with `labels`.
    pub cells: Vec<ShapeVector>,
    /// Dimension L shared by cells and patterns.
    pub dim: usize,
}

/// Classification verdict from [`classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// Index into the class memory labels.
    Label(usize),
    /// No memory cell reached the affinity threshold.
    Unknown,
}

/// Sum of Hamming distances between a candidate and every exemplar of a
/// class, normalized by E*L so a perfect complement of all exemplars scores 1.
fn class_affinity(cell: &[u8], exemplars: &[&[u8]], l: f64) -> f64 {
    let total: u32 = exemplars.iter().map(|e| hamming(cell, e)).sum();
    f64::from(total) / (exemplars.len() as f64 * l)
}

/// CLONCLAS: one generalized memory cell per class.
///
/// Affinity of a candidate is the summed Hamming distance to all E exemplars
/// of the class. The loop runs class by class; after each pass the whole
/// remainder is replaced by the best r mutated clones.
pub fn clonclas_train(
    classes: &[(String, Vec<ShapeVector>)],
    params: &ClonalParams,
    rng: &mut SeededRng,
) -> Result<ClassMemory> {
    params.validate()?;
    if classes.is_empty() {
        return Err(Error::EmptyInput { what: "classes" });
    }
    let all: Vec<ShapeVector> = classes
        .iter()
        .flat_map(|(_, v)| v.iter().cloned())
        .collect();
    for (_, exemplars) in classes {
        if exemplars.is_empty() {
            return Err(Error::EmptyInput {
                what: "class exemplars",
            });
        }
    }
    let dim = validate_antigens(&all)?;
    let m = classes.len();
    if params.population < m {
        return Err(Error::InvalidParam(format!(
            "population {} is smaller than the class count {}",
            params.population, m
        )));
    }
    let l = dim as f64;
    let mut pop = ClonalPopulation::random(m, params.population, dim, rng);

    for (i, (_, exemplars)) in classes.iter().enumerate() {
        let ex: Vec<&[u8]> = exemplars.iter().map(|e| e.as_bits().unwrap()).collect();
        let affinity = |cell: &[u8]| class_affinity(cell, &ex, l);
        for _ in 0..params.generations {
            if affinity(&pop.memory[i]) >= params.epsilon {
                break;
            }
            let (clones, clone_affinities) = clonal_pass(&pop, &affinity, params, rng);
            let best = rank_descending(&clone_affinities, 1)[0];
            if clone_affinities[best] > affinity(&pop.memory[i]) {
                pop.memory[i] = clones[best].clone();
            }
            // Step 8: the whole remainder is rebuilt from the best clones.
            let r = pop.remainder.len();
            if r > 0 {
                let take = rank_descending(&clone_affinities, r.min(clones.len()));
                for (slot, &b) in take.iter().enumerate() {
                    pop.remainder[slot] = clones[b].clone();
                }
            }
            refresh_remainder(&mut pop, &affinity, params.random_replacements, dim, rng);
        }
    }
    Ok(ClassMemory {
        labels: classes.iter().map(|(name, _)| name.clone()).collect(),
        cells: pop.memory.into_iter().map(ShapeVector::Binary).collect(),
        dim,
    })
}

/// Assigns a pattern to the class whose memory cell binds it most strongly.
///
/// Affinity is the normalized Hamming distance between pattern and memory
/// cell; the winner must reach `epsilon` or the pattern is [`Classification::Unknown`].
/// Ties go to the lowest class index.
pub fn classify(
    pattern: &ShapeVector,
    memory: &ClassMemory,
    epsilon: f64,
) -> Result<Classification> {
    if memory.cells.is_empty() {
        return Err(Error::EmptyInput {
            what: "class memory",
        });
    }
    let bits = pattern.as_bits().ok_or(Error::VariantMismatch {
        op: "classify",
        expected: "binary",
    })?;
    if pattern.dim() != memory.dim {
        return Err(Error::DimensionMismatch {
            left: pattern.dim(),
            right: memory.dim,
        });
    }
    let l = memory.dim as f64;
    let affinities: Vec<f64> = memory
        .cells
        .iter()
        .map(|cell| f64::from(hamming(bits, cell.as_bits().unwrap())) / l)
        .collect();
    let best = rank_descending(&affinities, 1)[0];
    if affinities[best] >= epsilon {
        Ok(Classification::Label(best))
    } else {
        Ok(Classification::Unknown)
    }
}

/// Outcome of [`partitioned_clonalg`]: group results merged in group order.
#[derive(Debug, Clone)]
pub struct PartitionedOutcome {
    /// Memory cells concatenated group by group.
    pub memory: Vec<ShapeVector>,
    /// Original antigen index of each merged memory cell.
    pub antigen_indices: Vec<usize>,
    /// Per-group generation counts.
    pub generations: Vec<usize>,
}

/// Runs CLONALG independently over a round-robin split of the antigen set.
///
/// Group g receives antigens g, g+P, g+2P, ... and trains with its own seed,
/// so the merged result is bit-identical no matter how the sub-calls are
/// scheduled. The sub-calls share nothing and may run concurrently.
pub fn partitioned_clonalg(
    antigens: &[ShapeVector],
    partitions: usize,
    params: &ClonalParams,
    seeds: &[u64],
) -> Result<PartitionedOutcome> {
    if antigens.is_empty() {
        return Err(Error::EmptyInput { what: "antigens" });
    }
    if partitions == 0 || partitions > antigens.len() {
        return Err(Error::InvalidParam(format!(
            "partitions must be in 1..={}",
            antigens.len()
        )));
    }
    if seeds.len() != partitions {
        return Err(Error::InvalidParam(format!(
            "expected {} seeds, got {}",
            partitions,
            seeds.len()
        )));
    }
    let mut groups: Vec<(Vec<usize>, Vec<ShapeVector>)> =
        vec![(Vec::new(), Vec::new()); partitions];
    for (idx, ag) in antigens.iter().enumerate() {
        let g = idx % partitions;
        groups[g].0.push(idx);
        groups[g].1.push(ag.clone());
    }
    let mut memory = Vec::with_capacity(antigens.len());
    let mut antigen_indices = Vec::with_capacity(antigens.len());
    let mut generations = Vec::with_capacity(partitions);
    for (g, (indices, group_antigens)) in groups.into_iter().enumerate() {
        let mut rng = SeededRng::new(seeds[g]);
        let out = clonalg_train(&group_antigens, params, &mut rng)?;
        generations.push(out.generations);
        memory.extend(out.memory);
        antigen_indices.extend(indices);
    }
    Ok(PartitionedOutcome {
        memory,
        antigen_indices,
        generations,
    })
}

/// Maps an L-bit string to a real number in [z_min, z_max].
///
/// Bit i carries weight 2^i (the first element is the least significant), so
/// all zeros decode to z_min and all ones to z_max.
pub fn decode_binary(bits: &ShapeVector, z_min: f64, z_max: f64) -> Result<f64> {
    let b = bits.as_bits().ok_or(Error::VariantMismatch {
        op: "decode_binary",
        expected: "binary",
    })?;
    if b.is_empty() {
        return Err(Error::EmptyInput { what: "bits" });
    }
    let mut z_prime = 0.0;
    let mut weight = 1.0;
    for &bit in b {
        z_prime += f64::from(bit) * weight;
        weight *= 2.0;
    }
    let span = weight - 1.0; // 2^L - 1
    Ok(z_min + z_prime * (z_max - z_min) / span)
}

/// Objective evaluated on a decoded real vector.
pub type Objective = Box<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// A maximization problem over a box, binary-coded per dimension.
pub struct OptProblem {
    /// Score to maximize, evaluated on the decoded real vector.
    pub objective: Objective,
    /// Per-dimension (z_min, z_max) bounds.
    pub bounds: Vec<(f64, f64)>,
    /// Bits per dimension; antibodies carry `bounds.len() * bits_per_dim` bits.
    pub bits_per_dim: usize,
}

impl OptProblem {
    /// Single-variable problem on [z_min, z_max].
    pub fn univariate(
        objective: impl Fn(f64) -> f64 + Send + Sync + 'static,
        z_min: f64,
        z_max: f64,
        bits: usize,
    ) -> Self {
        OptProblem {
            objective: Box::new(move |z: &[f64]| objective(z[0])),
            bounds: vec![(z_min, z_max)],
            bits_per_dim: bits,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.bounds.is_empty() {
            return Err(Error::EmptyInput { what: "bounds" });
        }
        if self.bits_per_dim == 0 || self.bits_per_dim > 53 {
            return Err(Error::InvalidParam("bits_per_dim must be in 1..=53".into()));
        }
        for &(lo, hi) in &self.bounds {
            if lo >= hi {
                return Err(Error::InvalidParam(format!(
                    "bounds require z_min < z_max, got ({lo}, {hi})"
                )));
            }
        }
        Ok(())
    }

    /// Decodes a concatenated antibody into one real value per dimension.
    pub fn decode(&self, bits: &[u8]) -> Vec<f64> {
        self.bounds
            .iter()
            .enumerate()
            .map(|(d, &(lo, hi))| {
                let field = &bits[d * self.bits_per_dim..(d + 1) * self.bits_per_dim];
                let sv = ShapeVector::Binary(field.to_vec());
                decode_binary(&sv, lo, hi).expect("field is binary and non-empty")
            })
            .collect()
    }
}

/// Result of an [`opt_clonalg`] run.
#[derive(Debug, Clone)]
pub struct OptOutcome {
    /// Decoded best solution.
    pub best: Vec<f64>,
    /// Objective value of the best solution.
    pub score: f64,
    /// Best score after each generation.
    pub trace: Vec<f64>,
}

/// opt-CLONALG: binary-coded clonal selection for function maximization.
///
/// The whole population acts as memory. Each generation selects the n best,
/// clones them by rank, hypermutates with a rate driven by the min-max
/// normalized score, keeps the N best of parents and mutants, and replaces
/// the d worst with fresh random antibodies.
pub fn opt_clonalg(
    problem: &OptProblem,
    params: &ClonalParams,
    rng: &mut SeededRng,
) -> Result<OptOutcome> {
    params.validate()?;
    problem.validate()?;
    let dim = problem.bounds.len() * problem.bits_per_dim;
    let n = params.population;
    let score_of = |bits: &[u8]| (problem.objective)(&problem.decode(bits));

    let mut pop: Vec<Vec<u8>> = (0..n)
        .map(|_| (0..dim).map(|_| rng.bit()).collect())
        .collect();
    let mut scores: Vec<f64> = pop.iter().map(|c| score_of(c)).collect();
    let mut trace = Vec::with_capacity(params.generations);

    for _ in 0..params.generations {
        // Min-max normalize scores for the mutation schedule.
        let (lo, hi) = scores
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &s| {
                (lo.min(s), hi.max(s))
            });
        let norm = |s: f64| if hi > lo { (s - lo) / (hi - lo) } else { 1.0 };

        let selected = rank_descending(&scores, params.selected);
        let counts = clone_counts(selected.len(), params.clonal_factor);
        let mut merged = pop.clone();
        let mut merged_scores = scores.clone();
        for (rank, &idx) in selected.iter().enumerate() {
            let rate = mutation_rate(norm(scores[idx]), params.decay);
            for _ in 0..counts[rank] {
                let mut clone = pop[idx].clone();
                mutate_bits(&mut clone, rate, rng);
                merged_scores.push(score_of(&clone));
                merged.push(clone);
            }
        }
        let keep = rank_descending(&merged_scores, n);
        pop = keep.iter().map(|&i| merged[i].clone()).collect();
        scores = keep.iter().map(|&i| merged_scores[i]).collect();

        if params.random_replacements > 0 {
            for idx in rank_ascending(&scores, params.random_replacements.min(n)) {
                pop[idx] = (0..dim).map(|_| rng.bit()).collect();
                scores[idx] = score_of(&pop[idx]);
            }
        }
        trace.push(scores[rank_descending(&scores, 1)[0]]);
    }

    let best = rank_descending(&scores, 1)[0];
    Ok(OptOutcome {
        best: problem.decode(&pop[best]),
        score: scores[best],
        trace,
    })
}
