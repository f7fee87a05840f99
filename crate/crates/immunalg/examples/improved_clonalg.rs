//! Base CLONALG against the improved k-replacement variant on the digit task.
//!
//! The improved algorithm feeds the best mutated clones back into the
//! remainder pool, which roughly halves the generations needed to reach full
//! affinity; k = 1 already buys the whole speedup.

use immunalg::clonal::{clonalg_train, improved_clonalg_train, ClonalParams};
use immunalg::datasets::digit_glyphs;
use immunalg::shape::SeededRng;

fn median(mut v: Vec<usize>) -> usize {
    v.sort_unstable();
    v[v.len() / 2]
}

fn main() {
    let antigens = digit_glyphs();
    let seeds = 0..10u64;

    let base_params = ClonalParams {
        generations: 1000,
        ..ClonalParams::default()
    };
    let base: Vec<usize> = seeds
        .clone()
        .map(|s| {
            clonalg_train(&antigens, &base_params, &mut SeededRng::new(s))
                .unwrap()
                .generations
        })
        .collect();
    println!(
        "CLONALG        median {:>3} generations  {base:?}",
        median(base.clone())
    );

    for k in [1, 3, 5] {
        let params = ClonalParams {
            clone_injections: k,
            generations: 1000,
            ..ClonalParams::default()
        };
        let gens: Vec<usize> = seeds
            .clone()
            .map(|s| {
                improved_clonalg_train(&antigens, &params, &mut SeededRng::new(s))
                    .unwrap()
                    .generations
            })
            .collect();
        println!(
            "improved k={k}   median {:>3} generations  {gens:?}",
            median(gens.clone())
        );
    }
}
