//! Shape-space foundations: vectors, distance metrics, binding values, and
//! the deterministic RNG shared by every algorithm.
//!
//! Antibodies and antigens are points in an L-dimensional shape-space, either
//! real-valued or binary. Affinity is distance-derived: for binary matching a
//! LARGER distance means better complementarity and therefore higher affinity.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A point in L-dimensional shape-space.
///
/// The dimension is fixed per population; mixing variants or dimensions in a
/// metric is an error rather than a silent truncation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ShapeVector {
    /// Real-valued attribute vector.
    Real(Vec<f64>),
    /// Bit vector; every element is 0 or 1.
    Binary(Vec<u8>),
}

impl ShapeVector {
    /// Wraps a real-valued attribute vector.
    pub fn real(values: Vec<f64>) -> Self {
        ShapeVector::Real(values)
    }

    /// Wraps a bit vector, rejecting anything outside {0, 1}.
    pub fn binary(bits: Vec<u8>) -> Result<Self> {
        for (index, &b) in bits.iter().enumerate() {
            if b > 1 {
                return Err(Error::NotBinary {
                    value: f64::from(b),
                    index,
                });
            }
        }
        Ok(ShapeVector::Binary(bits))
    }

    /// Dimension count L.
    pub fn dim(&self) -> usize {
        match self {
            ShapeVector::Real(v) => v.len(),
            ShapeVector::Binary(v) => v.len(),
        }
    }

    pub fn is_binary(&self) -> bool {
        matches!(self, ShapeVector::Binary(_))
    }

    pub fn as_real(&self) -> Option<&[f64]> {
        match self {
            ShapeVector::Real(v) => Some(v),
            ShapeVector::Binary(_) => None,
        }
    }

    pub fn as_bits(&self) -> Option<&[u8]> {
        match self {
            ShapeVector::Binary(v) => Some(v),
            ShapeVector::Real(_) => None,
        }
    }
}

/// Distance metric over shape-space.
///
/// Hamming applies to the binary variant; Euclidean and Manhattan to the real
/// variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Euclidean,
    Manhattan,
    Hamming,
}

/// Shape of the binding-value function mapping distance to a bind strength.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BindingShape {
    /// Hard threshold at epsilon.
    Step,
    /// Sigmoid centered at epsilon; `slope` controls steepness.
    SCurve { slope: f64 },
}

/// Affinity threshold plus the metric and binding function that interpret it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AffinityConfig {
    pub metric: Metric,
    /// Binding threshold epsilon (a distance, >= 0).
    pub epsilon: f64,
    pub binding_shape: BindingShape,
}

fn check_dims(a: &ShapeVector, b: &ShapeVector) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(())
}

/// Euclidean distance between two real vectors.
pub fn euclidean_distance(a: &ShapeVector, b: &ShapeVector) -> Result<f64> {
    check_dims(a, b)?;
    match (a.as_real(), b.as_real()) {
        (Some(x), Some(y)) => Ok(euclidean(x, y)),
        _ => Err(Error::VariantMismatch {
            op: "euclidean_distance",
            expected: "real",
        }),
    }
}

/// Manhattan distance between two real vectors.
///
/// Returns the plain coordinate sum Σ|a_i − b_i|; see
/// [`manhattan_distance_rooted`] for the square-rooted alternative.
pub fn manhattan_distance(a: &ShapeVector, b: &ShapeVector) -> Result<f64> {
    check_dims(a, b)?;
    match (a.as_real(), b.as_real()) {
        (Some(x), Some(y)) => Ok(manhattan(x, y)),
        _ => Err(Error::VariantMismatch {
            op: "manhattan_distance",
            expected: "real",
        }),
    }
}

/// Square root of the Manhattan distance.
///
/// Kept as an opt-in variant: the rooted form appears in some write-ups of
/// the metric, but the plain sum is what the algorithms here use. The root is
/// monotone, so rankings and threshold semantics survive either choice.
pub fn manhattan_distance_rooted(a: &ShapeVector, b: &ShapeVector) -> Result<f64> {
    Ok(manhattan_distance(a, b)?.sqrt())
}

/// Hamming distance between two binary vectors.
pub fn hamming_distance(a: &ShapeVector, b: &ShapeVector) -> Result<u32> {
    check_dims(a, b)?;
    match (a.as_bits(), b.as_bits()) {
        (Some(x), Some(y)) => Ok(hamming(x, y)),
        _ => Err(Error::VariantMismatch {
            op: "hamming_distance",
            expected: "binary",
        }),
    }
}

/// Metric dispatch; errors if the metric does not fit the vector variant.
pub fn distance(a: &ShapeVector, b: &ShapeVector, metric: Metric) -> Result<f64> {
    match metric {
        Metric::Euclidean => euclidean_distance(a, b),
        Metric::Manhattan => manhattan_distance(a, b),
        Metric::Hamming => Ok(f64::from(hamming_distance(a, b)?)),
    }
}

/// Binding value in [0, 1] for a given antibody-antigen distance.
///
/// Binding occurs at HIGH distance (high complementarity): the step form is 1
/// when `distance >= epsilon` (boundary inclusive, so epsilon = 0 means
/// "always bound"), and the s-curve form is a monotone non-decreasing sigmoid
/// in distance centered at epsilon.
pub fn binding_value(distance: f64, cfg: &AffinityConfig) -> f64 {
    match cfg.binding_shape {
        BindingShape::Step => {
            if distance >= cfg.epsilon {
                1.0
            } else {
                0.0
            }
        }
        BindingShape::SCurve { slope } => 1.0 / (1.0 + (-slope * (distance - cfg.epsilon)).exp()),
    }
}

pub(crate) fn euclidean(x: &[f64], y: &[f64]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

pub(crate) fn manhattan(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b).abs()).sum()
}

pub(crate) fn hamming(x: &[u8], y: &[u8]) -> u32 {
    x.iter().zip(y).map(|(a, b)| u32::from(a != b)).sum()
}

/// Deterministic random generator handed explicitly to every stochastic
/// operation.
///
/// Backed by ChaCha8: a named, portable stream cipher generator, so equal
/// seeds give equal draw sequences on every platform and build. There is no
/// global generator anywhere in the crate.
#[derive(Debug, Clone)]
pub struct SeededRng {
    seed: u64,
    stream: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            seed,
            stream: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The seed this generator was created with.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform draw in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        self.stream.random()
    }

    /// Uniform draw in [lo, hi).
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        if hi > lo {
            self.stream.random_range(lo..hi)
        } else {
            lo
        }
    }

    /// Uniform integer in [0, n).
    pub fn index(&mut self, n: usize) -> usize {
        self.stream.random_range(0..n)
    }

    /// A random bit.
    pub fn bit(&mut self) -> u8 {
        u8::from(self.stream.random::<bool>())
    }

    /// Standard normal draw.
    pub fn standard_normal(&mut self) -> f64 {
        self.stream.sample(rand_distr::StandardNormal)
    }

    /// Coin flip with probability `p` of true.
    pub fn chance(&mut self, p: f64) -> bool {
        self.uniform() < p
    }

    /// `count` distinct indices drawn from [0, n), in draw order.
    pub fn distinct_indices(&mut self, n: usize, count: usize) -> Vec<usize> {
        let mut chosen = Vec::with_capacity(count);
        while chosen.len() < count.min(n) {
            let i = self.index(n);
            if !chosen.contains(&i) {
                chosen.push(i);
            }
        }
        chosen
    }
}

impl RngCore for SeededRng {
    fn next_u32(&mut self) -> u32 {
        self.stream.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.stream.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.stream.fill_bytes(dest);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(v: &[f64]) -> ShapeVector {
        ShapeVector::real(v.to_vec())
    }

    fn bv(bits: &[u8]) -> ShapeVector {
        ShapeVector::binary(bits.to_vec()).unwrap()
    }

    #[test]
    fn euclidean_three_four_five() {
        let d = euclidean_distance(&rv(&[0.0, 0.0]), &rv(&[3.0, 4.0])).unwrap();
        assert_eq!(d, 5.0);
    }

    #[test]
    fn euclidean_identity() {
        let a = rv(&[1.5, -2.0, 0.25]);
        assert_eq!(euclidean_distance(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn euclidean_matches_brute_force_oracle() {
        let mut rng = SeededRng::new(11);
        for _ in 0..10 {
            let a: Vec<f64> = (0..4).map(|_| rng.uniform_in(-5.0, 5.0)).collect();
            let b: Vec<f64> = (0..4).map(|_| rng.uniform_in(-5.0, 5.0)).collect();
            let mut sq = 0.0;
            for i in 0..4 {
                sq += (a[i] - b[i]) * (a[i] - b[i]);
            }
            let d = euclidean_distance(&rv(&a), &rv(&b)).unwrap();
            assert!((d - sq.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn manhattan_cases() {
        assert_eq!(
            manhattan_distance(&rv(&[1.0, 1.0]), &rv(&[4.0, 5.0])).unwrap(),
            7.0
        );
        let a = rv(&[2.0, -3.0]);
        assert_eq!(manhattan_distance(&a, &a).unwrap(), 0.0);
        // coordinate-wise oracle, exact
        let mut rng = SeededRng::new(5);
        for _ in 0..10 {
            let a: Vec<f64> = (0..3).map(|_| rng.uniform_in(-2.0, 2.0)).collect();
            let b: Vec<f64> = (0..3).map(|_| rng.uniform_in(-2.0, 2.0)).collect();
            let expected = (a[0] - b[0]).abs() + (a[1] - b[1]).abs() + (a[2] - b[2]).abs();
            assert_eq!(manhattan_distance(&rv(&a), &rv(&b)).unwrap(), expected);
        }
    }

    #[test]
    fn rooted_manhattan_is_sqrt_of_plain() {
        let a = rv(&[1.0, 1.0]);
        let b = rv(&[4.0, 5.0]);
        let plain = manhattan_distance(&a, &b).unwrap();
        assert_eq!(manhattan_distance_rooted(&a, &b).unwrap(), plain.sqrt());
    }

    #[test]
    fn hamming_cases() {
        assert_eq!(
            hamming_distance(&bv(&[1, 0, 1, 0]), &bv(&[0, 1, 0, 1])).unwrap(),
            4
        );
        let a = bv(&[1, 1, 0, 1]);
        assert_eq!(hamming_distance(&a, &a).unwrap(), 0);
        // flip exactly 3 known positions
        let mut bits = vec![1u8, 1, 0, 1, 0, 0, 1, 0];
        let original = bv(&bits);
        for i in [1, 4, 6] {
            bits[i] ^= 1;
        }
        assert_eq!(hamming_distance(&original, &bv(&bits)).unwrap(), 3);
    }

    #[test]
    fn dimension_and_variant_errors() {
        assert!(matches!(
            euclidean_distance(&rv(&[0.0]), &rv(&[0.0, 1.0])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            hamming_distance(&rv(&[0.0, 1.0]), &rv(&[0.0, 1.0])),
            Err(Error::VariantMismatch { .. })
        ));
        assert!(matches!(
            euclidean_distance(&bv(&[0, 1]), &bv(&[1, 1])),
            Err(Error::VariantMismatch { .. })
        ));
        assert!(ShapeVector::binary(vec![0, 2]).is_err());
    }

    #[test]
    fn binding_step_boundary_inclusive() {
        let cfg = AffinityConfig {
            metric: Metric::Hamming,
            epsilon: 3.0,
            binding_shape: BindingShape::Step,
        };
        assert_eq!(binding_value(3.0, &cfg), 1.0); // distance == epsilon binds
        assert_eq!(binding_value(0.0, &cfg), 0.0);
        let always = AffinityConfig {
            epsilon: 0.0,
            ..cfg
        };
        assert_eq!(binding_value(0.0, &always), 1.0);
    }

    #[test]
    fn binding_s_curve_monotone_on_grid() {
        let cfg = AffinityConfig {
            metric: Metric::Euclidean,
            epsilon: 2.0,
            binding_shape: BindingShape::SCurve { slope: 3.0 },
        };
        let mut prev = -1.0;
        for i in 0..100 {
            let d = 4.0 * f64::from(i) / 99.0;
            let v = binding_value(d, &cfg);
            assert!((0.0..=1.0).contains(&v));
            assert!(v >= prev, "s-curve must be non-decreasing");
            prev = v;
        }
    }

    #[test]
    fn seeded_rng_reproducible_over_10k_draws() {
        let mut a = SeededRng::new(987654321);
        let mut b = SeededRng::new(987654321);
        for _ in 0..10_000 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = SeededRng::new(987654322);
        let drift = (0..100).filter(|_| a.next_u64() != c.next_u64()).count();
        assert!(drift > 90, "different seeds must give different streams");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn real_pair() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
            (1usize..8).prop_flat_map(|l| {
                (
                    proptest::collection::vec(-100.0f64..100.0, l),
                    proptest::collection::vec(-100.0f64..100.0, l),
                )
            })
        }

        proptest! {
            #[test]
            fn distances_symmetric_nonnegative((a, b) in real_pair()) {
                let (x, y) = (ShapeVector::real(a), ShapeVector::real(b));
                for metric in [Metric::Euclidean, Metric::Manhattan] {
                    let d1 = distance(&x, &y, metric).unwrap();
                    let d2 = distance(&y, &x, metric).unwrap();
                    prop_assert!(d1 >= 0.0);
                    prop_assert_eq!(d1, d2);
                }
                prop_assert!(distance(&x, &x, Metric::Euclidean).unwrap().abs() < 1e-12);
                prop_assert_eq!(distance(&x, &x, Metric::Manhattan).unwrap(), 0.0);
            }

            #[test]
            fn hamming_complement_equals_dimension(
                bits in proptest::collection::vec(0u8..2, 1..64),
            ) {
                let complement: Vec<u8> = bits.iter().map(|b| b ^ 1).collect();
                let l = bits.len() as u32;
                let a = ShapeVector::binary(bits).unwrap();
                let b = ShapeVector::binary(complement).unwrap();
                prop_assert_eq!(hamming_distance(&a, &b).unwrap(), l);
                prop_assert_eq!(hamming_distance(&b, &a).unwrap(), l);
                prop_assert_eq!(hamming_distance(&a, &a).unwrap(), 0);
            }
        }
    }
}
