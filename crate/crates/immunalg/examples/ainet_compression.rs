//! aiNet compressing the concentric-circles benchmark, then recovering the
//! two rings from the minimal spanning tree over the trained network.

use immunalg::ainet::{ainet_train, mst_clusters, AiNetParams, MstMode};
use immunalg::datasets::{gen_shapes, ShapeKind};
use immunalg::shape::SeededRng;

fn main() {
    let data = gen_shapes(
        ShapeKind::ConcentricCircles,
        ShapeKind::ConcentricCircles.default_count(),
        0.1,
        &mut SeededRng::new(42),
    )
    .unwrap();

    let params = AiNetParams {
        selected: 4,
        memory_fraction: 10.0,
        death_threshold: 1.0,
        suppression_threshold: 0.1,
        iterations: 40,
        ..AiNetParams::default()
    };
    let out = ainet_train(&data.points, &params, &mut SeededRng::new(1)).unwrap();
    println!(
        "{} points compressed into {} memory cells ({:.2}% compression)",
        data.len(),
        out.network.len(),
        out.compression * 100.0
    );
    println!(
        "minimum pairwise cell distance {:.4} (suppression threshold {})",
        out.network.min_cell_separation(),
        params.suppression_threshold
    );
    println!(
        "network size per iteration: {:?}",
        &out.size_trace[..8.min(out.size_trace.len())]
    );

    let labels = mst_clusters(&out.network, MstMode::Fixed(2)).unwrap();
    let cells = out.network.cells_unscaled();
    for cluster in 0..2 {
        let radii: Vec<f64> = cells
            .iter()
            .zip(&labels)
            .filter(|(_, &l)| l == cluster)
            .map(|(c, _)| (c[0] * c[0] + c[1] * c[1]).sqrt())
            .collect();
        let mean = radii.iter().sum::<f64>() / radii.len() as f64;
        println!(
            "cluster {cluster}: {} cells at mean radius {mean:.2}",
            radii.len()
        );
    }

    // suppression threshold controls the final size
    println!("\nsize against the suppression threshold:");
    for sigma_s in [0.05, 0.1, 0.2] {
        let p = AiNetParams {
            suppression_threshold: sigma_s,
            iterations: 10,
            ..params.clone()
        };
        let out = ainet_train(&data.points, &p, &mut SeededRng::new(1)).unwrap();
        println!("  sigma_s = {sigma_s:<5}: {} cells", out.network.len());
    }
}
