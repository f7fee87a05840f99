//! opt-CLONALG maximizing functions over a binary-decoded search interval.
//!
//! Solutions are bit strings decoded into [z_min, z_max]; the whole
//! population acts as memory and the best N of parents and mutants survive
//! each generation.

use immunalg::clonal::{decode_binary, opt_clonalg, ClonalParams, OptProblem};
use immunalg::shape::{SeededRng, ShapeVector};

fn main() {
    let params = ClonalParams {
        population: 20,
        selected: 5,
        clonal_factor: 4.0,
        random_replacements: 2,
        decay: 2.0,
        generations: 100,
        epsilon: 1.0,
        ..ClonalParams::default()
    };

    // decode example: 3 bits spanning 0..7, least-significant bit first
    let z = decode_binary(&ShapeVector::binary(vec![1, 0, 1]).unwrap(), 0.0, 7.0).unwrap();
    println!("decode([1,0,1], 0..7) = {z}");

    let parabola = OptProblem::univariate(|z| -(z - 3.0) * (z - 3.0), 0.0, 10.0, 16);
    let out = opt_clonalg(&parabola, &params, &mut SeededRng::new(1)).unwrap();
    println!(
        "max of -(z-3)^2 on [0,10]: z = {:.6} (score {:.3e})",
        out.best[0], out.score
    );

    // multimodal: sin(z) * z has local maxima near 2.03 and 7.98
    let sine = OptProblem::univariate(|z| z.sin() * z, 0.0, 10.0, 16);
    let mut exhaustive = f64::NEG_INFINITY;
    for i in 0..1u32 << 16 {
        let z = 10.0 * f64::from(i) / (f64::from(u16::MAX));
        exhaustive = exhaustive.max(z.sin() * z);
    }
    println!("max of sin(z)*z on [0,10]: exhaustive grid = {exhaustive:.6}");
    for seed in 0..5 {
        let out = opt_clonalg(&sine, &params, &mut SeededRng::new(seed)).unwrap();
        println!(
            "  seed {seed}: z = {:.4}, score = {:.6} ({:.3}% of grid max)",
            out.best[0],
            out.score,
            100.0 * out.score / exhaustive
        );
    }

    // two-dimensional sphere: maximize -(x^2 + y^2) on [-5, 5]^2
    let sphere = OptProblem {
        objective: Box::new(|z: &[f64]| -(z[0] * z[0] + z[1] * z[1])),
        bounds: vec![(-5.0, 5.0); 2],
        bits_per_dim: 16,
    };
    let out = opt_clonalg(&sphere, &params, &mut SeededRng::new(9)).unwrap();
    println!(
        "max of -(x^2+y^2) on [-5,5]^2: ({:.4}, {:.4}), score {:.2e}",
        out.best[0], out.best[1], out.score
    );
}
