//! Benchmark data: synthetic Gaussian mixtures and parametric shapes, UCI
//! file loaders with an explicit missing-value policy, binary digit glyphs
//! for the clonal recognition experiments, and the CSV interchange format
//! used by the CLI (one row per point, label last).

use std::fs;
use std::path::Path;

use crate::shape::{SeededRng, ShapeVector};
use crate::{Error, Result};

/// One mixture component: a mean, per-dimension standard deviations, and a
/// sample count.
#[derive(Debug, Clone)]
pub struct GaussianComponent {
    pub mean: Vec<f64>,
    /// Per-dimension standard deviations (not variances).
    pub scale: Vec<f64>,
    pub count: usize,
}

/// A labeled Gaussian mixture to sample from.
#[derive(Debug, Clone)]
pub struct GaussianMixtureSpec {
    pub components: Vec<GaussianComponent>,
}

impl GaussianMixtureSpec {
    fn validate(&self) -> Result<usize> {
        if self.components.is_empty() {
            return Err(Error::EmptyInput {
                what: "mixture components",
            });
        }
        let dim = self.components[0].mean.len();
        for c in &self.components {
            if c.mean.len() != dim || c.scale.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: c.mean.len().max(c.scale.len()),
                });
            }
            if c.count == 0 {
                return Err(Error::InvalidParam("component counts must be >= 1".into()));
            }
        }
        Ok(dim)
    }
}

/// Points plus ground-truth class labels.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    pub name: String,
    pub points: Vec<Vec<f64>>,
    pub labels: Vec<usize>,
}

impl LabeledDataset {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points.first().map_or(0, Vec::len)
    }

    /// Number of distinct classes (labels are 0-based and dense).
    pub fn class_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn shape_vectors(&self) -> Vec<ShapeVector> {
        self.points.iter().cloned().map(ShapeVector::Real).collect()
    }

    /// CSV interchange: one row per point, label last, no header.
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut out = String::new();
        for (p, l) in self.points.iter().zip(&self.labels) {
            for v in p {
                out.push_str(&format!("{v},"));
            }
            out.push_str(&format!("{l}\n"));
        }
        fs::write(path, out)?;
        Ok(())
    }

    /// Reads the interchange format back. With `labeled` false the whole row
    /// is a point and labels come back all zero. A non-numeric first line is
    /// treated as a header and skipped.
    pub fn read_csv(path: &Path, labeled: bool) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let mut points = Vec::new();
        let mut labels = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            let parsed: std::result::Result<Vec<f64>, _> =
                fields.iter().map(|f| f.trim().parse::<f64>()).collect();
            let row = match parsed {
                Ok(row) => row,
                Err(e) => {
                    if idx == 0 {
                        continue; // header
                    }
                    return Err(Error::Parse {
                        path: path.to_path_buf(),
                        line: idx + 1,
                        message: format!("bad numeric field: {e}"),
                    });
                }
            };
            if labeled {
                if row.len() < 2 {
                    return Err(Error::Parse {
                        path: path.to_path_buf(),
                        line: idx + 1,
                        message: "labeled rows need at least two columns".into(),
                    });
                }
                let label = row[row.len() - 1];
                if label < 0.0 || label.fract() != 0.0 {
                    return Err(Error::Parse {
                        path: path.to_path_buf(),
                        line: idx + 1,
                        message: format!(
                            "label column must be a non-negative integer, got {label}"
                        ),
                    });
                }
                labels.push(label as usize);
                points.push(row[..row.len() - 1].to_vec());
            } else {
                labels.push(0);
                points.push(row);
            }
        }
        if points.is_empty() {
            return Err(Error::EmptyInput { what: "csv rows" });
        }
        Ok(LabeledDataset {
            name: path.display().to_string(),
            points,
            labels,
        })
    }
}

/// Samples `count_i` points per component as mean + scale * standard normal.
pub fn gen_gaussian_mixture(
    spec: &GaussianMixtureSpec,
    rng: &mut SeededRng,
) -> Result<LabeledDataset> {
    let dim = spec.validate()?;
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for (idx, c) in spec.components.iter().enumerate() {
        for _ in 0..c.count {
            let p: Vec<f64> = (0..dim)
                .map(|d| c.mean[d] + c.scale[d] * rng.standard_normal())
                .collect();
            points.push(p);
            labels.push(idx);
        }
    }
    Ok(LabeledDataset {
        name: "gaussian_mixture".into(),
        points,
        labels,
    })
}

fn mixture_preset(
    name: &str,
    components: Vec<GaussianComponent>,
    rng: &mut SeededRng,
) -> LabeledDataset {
    let mut set = gen_gaussian_mixture(&GaussianMixtureSpec { components }, rng)
        .expect("presets are valid by construction");
    set.name = name.into();
    set
}

/// Two overlapping 2-D Gaussian classes, 100 points each.
pub fn dataset1(rng: &mut SeededRng) -> LabeledDataset {
    mixture_preset(
        "dataset1",
        vec![
            GaussianComponent {
                mean: vec![0.1, 0.1],
                scale: vec![0.11, 0.1],
                count: 100,
            },
            GaussianComponent {
                mean: vec![0.35, 0.1],
                scale: vec![0.11, 0.1],
                count: 100,
            },
        ],
        rng,
    )
}

/// Nine 2-D Gaussian classes on the {0.1, 0.5, 0.9} grid, 25 points each.
pub fn dataset2(rng: &mut SeededRng) -> LabeledDataset {
    let mut components = Vec::new();
    for x in [0.1, 0.5, 0.9] {
        for y in [0.1, 0.5, 0.9] {
            components.push(GaussianComponent {
                mean: vec![x, y],
                scale: vec![0.08, 0.08],
                count: 25,
            });
        }
    }
    mixture_preset("dataset2", components, rng)
}

/// Three 3-D Gaussian classes, 50 points each, two of them close together.
pub fn dataset3(rng: &mut SeededRng) -> LabeledDataset {
    mixture_preset(
        "dataset3",
        vec![
            GaussianComponent {
                mean: vec![1.0, 1.0, 1.0],
                scale: vec![0.3; 3],
                count: 50,
            },
            GaussianComponent {
                mean: vec![2.0, 2.5, 2.5],
                scale: vec![0.3; 3],
                count: 50,
            },
            GaussianComponent {
                mean: vec![2.0, 3.0, 3.0],
                scale: vec![0.3; 3],
                count: 50,
            },
        ],
        rng,
    )
}

/// Parametric shape families for the network-compression experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeKind {
    /// Two interleaved planar spirals (default 190 points).
    TwoSpirals,
    /// Two interlocked rings in 3-D (default 500 points).
    ChainlinkRings,
    /// Two concentric circles, radii 1 and 4 (default 630 points).
    ConcentricCircles,
}

impl ShapeKind {
    /// Default total sample count for each family.
    pub fn default_count(self) -> usize {
        match self {
            ShapeKind::TwoSpirals => 190,
            ShapeKind::ChainlinkRings => 500,
            ShapeKind::ConcentricCircles => 630,
        }
    }
}

/// Concentric-circle radii used by [`gen_shapes`].
pub const CIRCLE_RADII: (f64, f64) = (1.0, 4.0);

/// Samples a two-class shape dataset with additive Gaussian noise. The total
/// `count` is split evenly between the two classes.
pub fn gen_shapes(
    kind: ShapeKind,
    count: usize,
    noise: f64,
    rng: &mut SeededRng,
) -> Result<LabeledDataset> {
    if count < 2 {
        return Err(Error::InvalidParam("count must be >= 2".into()));
    }
    let half = count / 2;
    let counts = [half, count - half];
    let mut points = Vec::with_capacity(count);
    let mut labels = Vec::with_capacity(count);
    let tau = std::f64::consts::TAU;
    for (class, &n) in counts.iter().enumerate() {
        for i in 0..n {
            let t = (i as f64 + 0.5) / n as f64;
            let mut p = match kind {
                ShapeKind::TwoSpirals => {
                    // Archimedean arms half a turn apart, 1.75 turns each.
                    let theta = 1.75 * tau * t + class as f64 * std::f64::consts::PI;
                    let r = 0.5 + 3.5 * t;
                    vec![r * theta.cos(), r * theta.sin()]
                }
                ShapeKind::ChainlinkRings => {
                    let theta = tau * t;
                    if class == 0 {
                        vec![theta.cos(), theta.sin(), 0.0]
                    } else {
                        vec![1.0 + theta.cos(), 0.0, theta.sin()]
                    }
                }
                ShapeKind::ConcentricCircles => {
                    let theta = tau * t;
                    let r = if class == 0 {
                        CIRCLE_RADII.0
                    } else {
                        CIRCLE_RADII.1
                    };
                    vec![r * theta.cos(), r * theta.sin()]
                }
            };
            for v in &mut p {
                *v += noise * rng.standard_normal();
            }
            points.push(p);
            labels.push(class);
        }
    }
    Ok(LabeledDataset {
        name: match kind {
            ShapeKind::TwoSpirals => "two_spirals",
            ShapeKind::ChainlinkRings => "chainlink_rings",
            ShapeKind::ConcentricCircles => "concentric_circles",
        }
        .into(),
        points,
        labels,
    })
}

const BUILTIN_IRIS: &str = include_str!("../data/iris.data");

/// The canonical UCI Iris table bundled with the crate (see `data/iris.data`).
pub fn iris() -> LabeledDataset {
    parse_iris(BUILTIN_IRIS, Path::new("builtin iris")).expect("bundled iris table is canonical")
}

/// The UCI Iris table: 150 rows of 4 measurements plus a species name.
///
/// Validates the canonical shape (150 rows, 50 per species); malformed rows
/// error with their line number.
pub fn load_iris(path: &Path) -> Result<LabeledDataset> {
    parse_iris(&fs::read_to_string(path)?, path)
}

fn parse_iris(text: &str, path: &Path) -> Result<LabeledDataset> {
    let species = ["Iris-setosa", "Iris-versicolor", "Iris-virginica"];
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 5 {
            return Err(Error::Parse {
                path: path.to_path_buf(),
                line: idx + 1,
                message: format!("expected 5 fields, found {}", fields.len()),
            });
        }
        let mut row = Vec::with_capacity(4);
        for f in &fields[..4] {
            row.push(f.parse::<f64>().map_err(|e| Error::Parse {
                path: path.to_path_buf(),
                line: idx + 1,
                message: format!("bad measurement {f:?}: {e}"),
            })?);
        }
        let label = species
            .iter()
            .position(|s| *s == fields[4])
            .ok_or_else(|| Error::Parse {
                path: path.to_path_buf(),
                line: idx + 1,
                message: format!("unknown species {:?}", fields[4]),
            })?;
        points.push(row);
        labels.push(label);
    }
    if points.len() != 150 {
        return Err(Error::Validation {
            path: path.to_path_buf(),
            message: format!("expected 150 rows, found {}", points.len()),
        });
    }
    for (i, s) in species.iter().enumerate() {
        let n = labels.iter().filter(|&&l| l == i).count();
        if n != 50 {
            return Err(Error::Validation {
                path: path.to_path_buf(),
                message: format!("expected 50 rows of {s}, found {n}"),
            });
        }
    }
    Ok(LabeledDataset {
        name: "iris".into(),
        points,
        labels,
    })
}

/// What to do with `?` fields in the breast-cancer table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MissingPolicy {
    /// Replace each `?` by the rounded mean of its feature over the rows
    /// that have it (the default; keeps all rows).
    ImputeMean,
    /// Remove any row containing a `?`.
    Drop,
}

/// The original UCI Wisconsin breast-cancer table: id, nine integer features
/// (`?` marks a missing value), and class 2 (benign) or 4 (malignant),
/// mapped to labels 0 and 1.
pub fn load_breast_cancer(path: &Path, policy: MissingPolicy) -> Result<LabeledDataset> {
    let text = fs::read_to_string(path)?;
    // First pass: parse rows with optional missing features.
    let mut rows: Vec<(Vec<Option<f64>>, usize)> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 11 {
            return Err(Error::Parse {
                path: path.to_path_buf(),
                line: idx + 1,
                message: format!("expected 11 fields, found {}", fields.len()),
            });
        }
        let mut features = Vec::with_capacity(9);
        for f in &fields[1..10] {
            if *f == "?" {
                features.push(None);
            } else {
                let v = f.parse::<f64>().map_err(|e| Error::Parse {
                    path: path.to_path_buf(),
                    line: idx + 1,
                    message: format!("bad feature {f:?}: {e}"),
                })?;
                features.push(Some(v));
            }
        }
        let label = match fields[10] {
            "2" => 0,
            "4" => 1,
            other => {
                return Err(Error::Parse {
                    path: path.to_path_buf(),
                    line: idx + 1,
                    message: format!("class must be 2 or 4, got {other:?}"),
                })
            }
        };
        rows.push((features, label));
    }
    if rows.is_empty() {
        return Err(Error::EmptyInput {
            what: "breast cancer rows",
        });
    }

    let mut points = Vec::new();
    let mut labels = Vec::new();
    match policy {
        MissingPolicy::Drop => {
            for (features, label) in rows {
                if features.iter().all(Option::is_some) {
                    points.push(features.into_iter().map(Option::unwrap).collect());
                    labels.push(label);
                }
            }
        }
        MissingPolicy::ImputeMean => {
            let mut fill = [0.0; 9];
            for (d, slot) in fill.iter_mut().enumerate() {
                let present: Vec<f64> = rows.iter().filter_map(|(f, _)| f[d]).collect();
                let mean = present.iter().sum::<f64>() / present.len().max(1) as f64;
                *slot = mean.round();
            }
            for (features, label) in rows {
                points.push(
                    features
                        .into_iter()
                        .enumerate()
                        .map(|(d, v)| v.unwrap_or(fill[d]))
                        .collect(),
                );
                labels.push(label);
            }
        }
    }
    Ok(LabeledDataset {
        name: "breast_cancer".into(),
        points,
        labels,
    })
}

const BUILTIN_GLYPHS: &str = include_str!("../data/digits_12x10.txt");

/// Glyph geometry: 12 rows of 10 pixels, flattened row-major to 120 bits.
pub const GLYPH_ROWS: usize = 12;
pub const GLYPH_COLS: usize = 10;

fn parse_glyphs(text: &str, path: Option<&Path>) -> Result<Vec<ShapeVector>> {
    let err = |line: usize, message: String| Error::Parse {
        path: path.map_or_else(|| "builtin digit glyphs".into(), Path::to_path_buf),
        line,
        message,
    };
    let mut glyphs = Vec::new();
    let mut current: Vec<u8> = Vec::new();
    let mut rows = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        let is_row = line.len() == GLYPH_COLS && line.chars().all(|c| c == '#' || c == '.');
        if is_row {
            for c in line.chars() {
                current.push(u8::from(c == '#'));
            }
            rows += 1;
            if rows == GLYPH_ROWS {
                glyphs.push(ShapeVector::Binary(std::mem::take(&mut current)));
                rows = 0;
            }
        } else if line.trim().is_empty() || line.starts_with('#') {
            if rows != 0 {
                return Err(err(
                    idx + 1,
                    format!("glyph ended after {rows} of {GLYPH_ROWS} rows"),
                ));
            }
        } else {
            return Err(err(
                idx + 1,
                format!("expected a {GLYPH_COLS}-pixel row of '#'/'.', got {line:?}"),
            ));
        }
    }
    if rows != 0 {
        return Err(err(
            0,
            format!("trailing glyph has {rows} of {GLYPH_ROWS} rows"),
        ));
    }
    if glyphs.is_empty() {
        return Err(Error::EmptyInput { what: "glyphs" });
    }
    Ok(glyphs)
}

/// The built-in set of eight 120-bit digit glyphs (pairwise Hamming distance
/// at least 20). Swap in your own bitmaps with [`digit_glyphs_from_path`].
pub fn digit_glyphs() -> Vec<ShapeVector> {
    parse_glyphs(BUILTIN_GLYPHS, None).expect("builtin glyph asset is well-formed")
}

/// Loads 12x10 glyphs from a text file in the same format as the built-in
/// asset: '#'/'.' pixel rows, blank lines between glyphs.
pub fn digit_glyphs_from_path(path: &Path) -> Result<Vec<ShapeVector>> {
    parse_glyphs(&fs::read_to_string(path)?, Some(path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::hamming_distance;

    #[test]
    fn zero_scale_mixture_hits_the_means() {
        let spec = GaussianMixtureSpec {
            components: vec![
                GaussianComponent {
                    mean: vec![1.0, 2.0],
                    scale: vec![0.0, 0.0],
                    count: 3,
                },
                GaussianComponent {
                    mean: vec![-1.0, 4.0],
                    scale: vec![0.0, 0.0],
                    count: 2,
                },
            ],
        };
        let set = gen_gaussian_mixture(&spec, &mut SeededRng::new(0)).unwrap();
        assert_eq!(set.len(), 5);
        assert_eq!(set.points[0], vec![1.0, 2.0]);
        assert_eq!(set.points[4], vec![-1.0, 4.0]);
        assert_eq!(set.labels, vec![0, 0, 0, 1, 1]);
    }

    #[test]
    fn preset_sizes_match_the_benchmarks() {
        let mut rng = SeededRng::new(1);
        assert_eq!(dataset1(&mut rng).len(), 200);
        assert_eq!(dataset2(&mut rng).len(), 225);
        assert_eq!(dataset2(&mut rng).class_count(), 9);
        assert_eq!(dataset3(&mut rng).len(), 150);
        assert_eq!(dataset3(&mut rng).dim(), 3);
        for kind in [
            ShapeKind::TwoSpirals,
            ShapeKind::ChainlinkRings,
            ShapeKind::ConcentricCircles,
        ] {
            let set = gen_shapes(kind, kind.default_count(), 0.1, &mut rng).unwrap();
            assert_eq!(set.len(), kind.default_count());
        }
    }

    #[test]
    fn oversampled_component_means_converge() {
        let spec = GaussianMixtureSpec {
            components: vec![GaussianComponent {
                mean: vec![0.5, 0.9],
                scale: vec![0.08, 0.08],
                count: 10_000,
            }],
        };
        let set = gen_gaussian_mixture(&spec, &mut SeededRng::new(7)).unwrap();
        for d in 0..2 {
            let mean: f64 = set.points.iter().map(|p| p[d]).sum::<f64>() / set.len() as f64;
            assert!((mean - spec.components[0].mean[d]).abs() < 0.01);
        }
    }

    #[test]
    fn noiseless_circles_have_exact_radii() {
        let set = gen_shapes(
            ShapeKind::ConcentricCircles,
            100,
            0.0,
            &mut SeededRng::new(3),
        )
        .unwrap();
        for (p, &l) in set.points.iter().zip(&set.labels) {
            let r = (p[0] * p[0] + p[1] * p[1]).sqrt();
            let expected = if l == 0 {
                CIRCLE_RADII.0
            } else {
                CIRCLE_RADII.1
            };
            assert!((r - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn generators_are_seed_deterministic() {
        let a = dataset2(&mut SeededRng::new(9));
        let b = dataset2(&mut SeededRng::new(9));
        assert_eq!(a, b);
    }

    fn iris_path() -> std::path::PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data/iris.data")
    }

    #[test]
    fn canonical_iris_loads() {
        let set = load_iris(&iris_path()).unwrap();
        assert_eq!(set.len(), 150);
        for c in 0..3 {
            assert_eq!(set.labels.iter().filter(|&&l| l == c).count(), 50);
        }
        assert_eq!(set.points[0], vec![5.1, 3.5, 1.4, 0.2]);
        assert_eq!(set.labels[0], 0);
    }

    #[test]
    fn iris_validation_errors() {
        let dir = tempfile::tempdir().unwrap();
        let truncated = dir.path().join("iris149.data");
        let text = fs::read_to_string(iris_path()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        fs::write(&truncated, lines[..149].join("\n")).unwrap();
        assert!(matches!(
            load_iris(&truncated),
            Err(Error::Validation { .. })
        ));

        let malformed = dir.path().join("bad.data");
        let mut rows = lines[..149].join("\n");
        rows.push_str("\n5.0,abc,1.0,0.3,Iris-setosa\n");
        fs::write(&malformed, rows).unwrap();
        match load_iris(&malformed) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 150),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    const BCW_FIXTURE: &str = "\
1000,5,1,1,1,2,1,3,1,1,2
1001,5,4,4,5,7,10,3,2,1,2
1002,3,1,1,1,2,?,3,1,1,2
1003,8,10,10,8,7,10,9,7,1,4
1004,1,1,1,1,2,4,3,1,1,2
";

    #[test]
    fn breast_cancer_impute_mean_fills_rounded_feature_mean() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bcw.data");
        fs::write(&path, BCW_FIXTURE).unwrap();
        let set = load_breast_cancer(&path, MissingPolicy::ImputeMean).unwrap();
        assert_eq!(set.len(), 5);
        assert_eq!(set.labels, vec![0, 0, 0, 1, 0]);
        // feature 6 present values: 1, 10, 10, 4 -> mean 6.25 -> rounds to 6
        assert_eq!(set.points[2][5], 6.0);
    }

    #[test]
    fn breast_cancer_drop_removes_missing_rows() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bcw.data");
        fs::write(&path, BCW_FIXTURE).unwrap();
        let set = load_breast_cancer(&path, MissingPolicy::Drop).unwrap();
        assert_eq!(set.len(), 4);
        assert!(set.points.iter().all(|p| p.len() == 9));
    }

    #[test]
    fn breast_cancer_malformed_row_reports_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bcw.data");
        fs::write(&path, "1000,5,1,1,1,2,1,3,1,1,9\n").unwrap();
        match load_breast_cancer(&path, MissingPolicy::ImputeMean) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn builtin_glyphs_are_well_separated() {
        let glyphs = digit_glyphs();
        assert_eq!(glyphs.len(), 8);
        for g in &glyphs {
            assert_eq!(g.dim(), 120);
        }
        for i in 0..glyphs.len() {
            for j in (i + 1)..glyphs.len() {
                let d = hamming_distance(&glyphs[i], &glyphs[j]).unwrap();
                assert!(d >= 20, "glyphs {i} and {j} too close: {d}");
            }
        }
    }

    #[test]
    fn glyph_file_dimension_errors() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("glyphs.txt");
        fs::write(&path, "##########\n..........\n").unwrap();
        assert!(matches!(
            digit_glyphs_from_path(&path),
            Err(Error::Parse { .. })
        ));
        let short_row = "#########\n".repeat(12);
        fs::write(&path, short_row).unwrap();
        assert!(digit_glyphs_from_path(&path).is_err());
    }

    #[test]
    fn all_zero_glyph_is_the_zero_vector() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("zero.txt");
        fs::write(&path, format!("{}\n", "..........\n".repeat(12))).unwrap();
        let glyphs = digit_glyphs_from_path(&path).unwrap();
        assert_eq!(glyphs[0].as_bits().unwrap(), &[0u8; 120]);
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("set.csv");
        let set = dataset3(&mut SeededRng::new(5));
        set.write_csv(&path).unwrap();
        let back = LabeledDataset::read_csv(&path, true).unwrap();
        assert_eq!(back.labels, set.labels);
        for (a, b) in back.points.iter().zip(&set.points) {
            for (x, y) in a.iter().zip(b) {
                assert!((x - y).abs() < 1e-12);
            }
        }
    }
}
