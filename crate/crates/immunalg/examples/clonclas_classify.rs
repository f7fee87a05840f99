//! CLONCLAS: one generalized memory cell per class, then classification with
//! an unknown-rejection threshold.
//!
//! Each class holds several noisy variants of a glyph; the class affinity is
//! the summed Hamming distance over all exemplars, so the evolved cell
//! generalizes over the variants instead of memorizing one of them.

use immunalg::clonal::{classify, clonclas_train, Classification, ClonalParams};
use immunalg::datasets::digit_glyphs;
use immunalg::shape::{SeededRng, ShapeVector};

fn flip_bits(base: &ShapeVector, count: usize, rng: &mut SeededRng) -> ShapeVector {
    let mut bits = base.as_bits().unwrap().to_vec();
    for i in rng.distinct_indices(bits.len(), count) {
        bits[i] ^= 1;
    }
    ShapeVector::binary(bits).unwrap()
}

fn main() {
    let glyphs = digit_glyphs();
    let mut rng = SeededRng::new(11);

    // three classes, five noisy exemplars each (8% bit noise)
    let classes: Vec<(String, Vec<ShapeVector>)> = [0usize, 3, 6]
        .iter()
        .map(|&digit| {
            let exemplars = (0..5)
                .map(|_| flip_bits(&glyphs[digit], 10, &mut rng))
                .collect();
            (format!("digit-{digit}"), exemplars)
        })
        .collect();

    let params = ClonalParams {
        epsilon: 0.88,
        generations: 400,
        ..ClonalParams::default()
    };
    let memory = clonclas_train(&classes, &params, &mut SeededRng::new(2)).unwrap();
    println!("trained classes: {:?}", memory.labels);

    // unseen noisy variants classify back to their class
    let mut correct = 0;
    let mut total = 0;
    for (idx, &digit) in [0usize, 3, 6].iter().enumerate() {
        for _ in 0..10 {
            let probe = flip_bits(&glyphs[digit], 10, &mut rng);
            total += 1;
            match classify(&probe, &memory, 0.6).unwrap() {
                Classification::Label(got) if got == idx => correct += 1,
                other => println!("  probe of {digit} misread as {other:?}"),
            }
        }
    }
    println!("recognized {correct}/{total} unseen noisy variants");

    // an unrelated pattern falls below the threshold and comes back unknown
    let stranger = flip_bits(&glyphs[5], 30, &mut rng);
    println!(
        "unrelated pattern with threshold 0.75 -> {:?}",
        classify(&stranger, &memory, 0.75).unwrap()
    );
}
