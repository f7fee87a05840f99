//! CLONALG learning the built-in digit glyphs.
//!
//! Affinity is Hamming complementarity, so a fully trained memory cell is the
//! bitwise complement of its antigen. Run with:
//!
//! ```text
//! cargo run --release -p immunalg --example clonalg_digits
//! ```

use immunalg::clonal::{clonalg_train, ClonalParams};
use immunalg::datasets::{digit_glyphs, GLYPH_COLS, GLYPH_ROWS};
use immunalg::shape::{SeededRng, ShapeVector};

fn render(bits: &ShapeVector) -> String {
    let bits = bits.as_bits().unwrap();
    (0..GLYPH_ROWS)
        .map(|r| {
            (0..GLYPH_COLS)
                .map(|c| {
                    if bits[r * GLYPH_COLS + c] == 1 {
                        '#'
                    } else {
                        '.'
                    }
                })
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn main() {
    let antigens = digit_glyphs();
    let params = ClonalParams {
        population: 10,
        selected: 3,
        clonal_factor: 10.0,
        random_replacements: 0,
        decay: 4.8,
        generations: 600,
        epsilon: 1.0,
        ..ClonalParams::default()
    };
    let mut rng = SeededRng::new(7);
    let out = clonalg_train(&antigens, &params, &mut rng).unwrap();

    println!(
        "trained {} memory cells in {} generations",
        out.memory.len(),
        out.generations
    );
    for (g, mean) in out.mean_affinity_trace.iter().enumerate().step_by(10) {
        println!("  generation {g:>3}: mean affinity {mean:.4}");
    }
    let affinities = out.terminal_affinities(&antigens);
    println!("terminal affinities: {affinities:?}");

    println!("\nantigen 0 and its evolved memory cell (the complement):");
    let antigen = render(&antigens[0]);
    let memory = render(&out.memory[0]);
    for (a, m) in antigen.lines().zip(memory.lines()) {
        println!("  {a}    {m}");
    }
}
