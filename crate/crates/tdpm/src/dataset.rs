//! Synthetic manifold samples and CSV input/output.
//!
//! Generators are pure functions of `(n, seed)`: identical inputs produce
//! bit-identical outputs. Every generated ambient point is exactly the chart
//! function applied to its stored intrinsic parameters, so downstream code
//! can recover analytic quantities (e.g. tangent planes) from `params`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use nalgebra::{DMatrix, Matrix3, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mds::Embedding;

/// RNG seed for the sample generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seed(pub u64);

/// Data set of `n` points in `m`-dimensional ambient space; point `j` is
/// column `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct DataMatrix {
    values: DMatrix<f64>,
}

impl DataMatrix {
    /// Validates shape (`m >= 1`, `n >= 2`) and that all entries are finite.
    pub fn new(values: DMatrix<f64>) -> Result<Self> {
        if values.nrows() < 1 || values.ncols() < 2 {
            return Err(Error::InvalidArgument(format!(
                "data matrix must be at least 1x2, got {}x{}",
                values.nrows(),
                values.ncols()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(
                "data matrix contains non-finite entries".into(),
            ));
        }
        Ok(Self { values })
    }

    /// Ambient dimension `m`.
    pub fn ambient_dim(&self) -> usize {
        self.values.nrows()
    }

    /// Number of points `n`.
    pub fn n_points(&self) -> usize {
        self.values.ncols()
    }

    pub fn values(&self) -> &DMatrix<f64> {
        &self.values
    }

    pub fn into_values(self) -> DMatrix<f64> {
        self.values
    }
}

/// A generated sample: ambient coordinates plus the intrinsic parameters each
/// point was generated from (used for plot coloring and evaluation only).
#[derive(Debug, Clone, PartialEq)]
pub struct ManifoldSample {
    pub data: DataMatrix,
    /// Intrinsic coordinates, one column per point.
    pub params: DMatrix<f64>,
}

impl ManifoldSample {
    pub fn new(data: DataMatrix, params: DMatrix<f64>) -> Result<Self> {
        if params.ncols() != data.n_points() {
            return Err(Error::InvalidArgument(format!(
                "params have {} columns but data has {} points",
                params.ncols(),
                data.n_points()
            )));
        }
        Ok(Self { data, params })
    }

    pub fn n_points(&self) -> usize {
        self.data.n_points()
    }

    /// The first `n` points of the sample. Subsampling by prefix keeps
    /// results deterministic for a fixed seed when varying `n`.
    pub fn prefix(&self, n: usize) -> Result<ManifoldSample> {
        if n < 2 || n > self.n_points() {
            return Err(Error::InvalidArgument(format!(
                "prefix length {} out of range 2..={}",
                n,
                self.n_points()
            )));
        }
        Ok(ManifoldSample {
            data: DataMatrix {
                values: self.data.values.columns(0, n).into_owned(),
            },
            params: self.params.columns(0, n).into_owned(),
        })
    }
}

/// Swiss roll parameter ranges.
pub const SWISS_ROLL_T_RANGE: (f64, f64) = (3.0 * std::f64::consts::PI / 2.0, 9.0 * std::f64::consts::PI / 2.0);
pub const SWISS_ROLL_H_RANGE: (f64, f64) = (0.0, 21.0);

/// S-curve parameter ranges.
pub const S_CURVE_T_RANGE: (f64, f64) = (-3.0 * std::f64::consts::PI / 2.0, 3.0 * std::f64::consts::PI / 2.0);
pub const S_CURVE_H_RANGE: (f64, f64) = (0.0, 2.0);

// The chart functions are compiled exactly once (never inlined): the
// optimizer may otherwise fuse sin/cos pairs differently per call site,
// breaking the bit-exact points-from-params contract.

/// Swiss roll chart: `(t cos t, h, t sin t)`.
#[inline(never)]
pub fn swiss_roll_point(t: f64, h: f64) -> [f64; 3] {
    [t * t.cos(), h, t * t.sin()]
}

/// Partial derivatives of the swiss roll chart, `(d/dt, d/dh)`. The two
/// vectors span the analytic tangent plane and are orthogonal.
pub fn swiss_roll_tangent(t: f64) -> ([f64; 3], [f64; 3]) {
    (
        [t.cos() - t * t.sin(), 0.0, t.sin() + t * t.cos()],
        [0.0, 1.0, 0.0],
    )
}

/// S-curve chart: `(sin t, h, sign(t) (cos t - 1))`.
#[inline(never)]
pub fn s_curve_point(t: f64, h: f64) -> [f64; 3] {
    [t.sin(), h, t.signum() * (t.cos() - 1.0)]
}

// Fixed rotation that puts the plane sample in general position. Seed
// independent so the flat manifold is the same plane for every sample.
fn plane_rotation() -> Matrix3<f64> {
    let (ax, ay, az) = (0.9f64, 0.6f64, 0.3f64);
    let rx = Matrix3::new(1.0, 0.0, 0.0, 0.0, ax.cos(), -ax.sin(), 0.0, ax.sin(), ax.cos());
    let ry = Matrix3::new(ay.cos(), 0.0, ay.sin(), 0.0, 1.0, 0.0, -ay.sin(), 0.0, ay.cos());
    let rz = Matrix3::new(az.cos(), -az.sin(), 0.0, az.sin(), az.cos(), 0.0, 0.0, 0.0, 1.0);
    rz * ry * rx
}

/// Flat plane chart: `(u, v, 0)` rotated into general position.
pub fn plane_point(u: f64, v: f64) -> [f64; 3] {
    let p = plane_rotation() * Vector3::new(u, v, 0.0);
    [p.x, p.y, p.z]
}

fn generate_with<F>(n: usize, seed: Seed, ranges: [(f64, f64); 2], chart: F) -> Result<ManifoldSample>
where
    F: Fn(f64, f64) -> [f64; 3],
{
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 points, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    let mut data = DMatrix::zeros(3, n);
    let mut params = DMatrix::zeros(2, n);
    for j in 0..n {
        let a = rng.random_range(ranges[0].0..ranges[0].1);
        let b = rng.random_range(ranges[1].0..ranges[1].1);
        params[(0, j)] = a;
        params[(1, j)] = b;
        let p = chart(a, b);
        data[(0, j)] = p[0];
        data[(1, j)] = p[1];
        data[(2, j)] = p[2];
    }
    Ok(ManifoldSample {
        data: DataMatrix { values: data },
        params,
    })
}

/// Swiss roll sample; params rows are `(t, h)`.
pub fn generate_swiss_roll(n: usize, seed: Seed) -> Result<ManifoldSample> {
    generate_with(n, seed, [SWISS_ROLL_T_RANGE, SWISS_ROLL_H_RANGE], swiss_roll_point)
}

/// S-curve sample; params rows are `(t, h)`.
pub fn generate_s_curve(n: usize, seed: Seed) -> Result<ManifoldSample> {
    generate_with(n, seed, [S_CURVE_T_RANGE, S_CURVE_H_RANGE], s_curve_point)
}

/// Flat plane sample in general position; params rows are `(u, v)`.
pub fn generate_plane(n: usize, seed: Seed) -> Result<ManifoldSample> {
    generate_with(n, seed, [(0.0, 1.0), (0.0, 1.0)], plane_point)
}

// 17 fractional digits round-trip f64 exactly through decimal text.
fn fmt_f64(buf: &mut String, v: f64) {
    write!(buf, "{v:.17e}").expect("write to String cannot fail");
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Loads a point cloud: one CSV row per point, columns are ambient features.
/// A header row is skipped when the first row contains any non-numeric field.
pub fn load_csv(path: impl AsRef<Path>) -> Result<DataMatrix> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width = 0usize;
    for (line_idx, line) in text.lines().enumerate() {
        let row_no = line_idx + 1;
        let fields: Vec<&str> = line.split(',').collect();
        let mut parsed = Vec::with_capacity(fields.len());
        let mut bad_col = None;
        for (c, field) in fields.iter().enumerate() {
            match field.trim().parse::<f64>() {
                Ok(v) => parsed.push(v),
                Err(_) => {
                    bad_col = Some(c + 1);
                    break;
                }
            }
        }
        if let Some(col) = bad_col {
            if line_idx == 0 {
                // header row
                continue;
            }
            return Err(Error::Parse {
                path: path.to_path_buf(),
                row: row_no,
                col,
                message: format!("non-numeric field {:?}", fields[col - 1].trim()),
            });
        }
        if rows.is_empty() {
            width = parsed.len();
        } else if parsed.len() != width {
            return Err(Error::Parse {
                path: path.to_path_buf(),
                row: row_no,
                col: parsed.len().min(width) + 1,
                message: format!("expected {} fields, found {}", width, parsed.len()),
            });
        }
        rows.push(parsed);
    }
    if rows.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "{}: need at least 2 data rows, found {}",
            path.display(),
            rows.len()
        )));
    }
    let values = DMatrix::from_fn(width, rows.len(), |r, c| rows[c][r]);
    DataMatrix::new(values)
}

/// Writes an embedding, one row per point: index, coordinates, then optional
/// intrinsic-parameter columns for plot coloring. Coordinates survive a
/// `load_csv` round trip exactly.
pub fn write_embedding_csv(
    path: impl AsRef<Path>,
    embedding: &Embedding,
    params: Option<&DMatrix<f64>>,
) -> Result<()> {
    let path = path.as_ref();
    let coords = embedding.coordinates();
    let n = coords.ncols();
    if let Some(p) = params {
        if p.ncols() != n {
            return Err(Error::InvalidArgument(format!(
                "params have {} columns but embedding has {} points",
                p.ncols(),
                n
            )));
        }
    }
    let mut out = String::from("index");
    for r in 0..coords.nrows() {
        write!(out, ",y{r}").expect("write to String cannot fail");
    }
    if let Some(p) = params {
        for r in 0..p.nrows() {
            write!(out, ",p{r}").expect("write to String cannot fail");
        }
    }
    out.push('\n');
    for j in 0..n {
        write!(out, "{j}").expect("write to String cannot fail");
        for r in 0..coords.nrows() {
            out.push(',');
            fmt_f64(&mut out, coords[(r, j)]);
        }
        if let Some(p) = params {
            for r in 0..p.nrows() {
                out.push(',');
                fmt_f64(&mut out, p[(r, j)]);
            }
        }
        out.push('\n');
    }
    fs::write(path, out).map_err(io_err(path))
}

/// Writes a data matrix as a point cloud readable by [`load_csv`]: header
/// `x0,x1,...`, one row per point.
pub fn write_data_csv(path: impl AsRef<Path>, data: &DataMatrix) -> Result<()> {
    write_matrix_csv(path.as_ref(), data.values(), "x")
}

/// Writes intrinsic parameters with header `p0,p1,...`, one row per point.
pub fn write_params_csv(path: impl AsRef<Path>, params: &DMatrix<f64>) -> Result<()> {
    write_matrix_csv(path.as_ref(), params, "p")
}

fn write_matrix_csv(path: &Path, m: &DMatrix<f64>, prefix: &str) -> Result<()> {
    let mut out = String::new();
    for r in 0..m.nrows() {
        if r > 0 {
            out.push(',');
        }
        write!(out, "{prefix}{r}").expect("write to String cannot fail");
    }
    out.push('\n');
    for j in 0..m.ncols() {
        for r in 0..m.nrows() {
            if r > 0 {
                out.push(',');
            }
            fmt_f64(&mut out, m[(r, j)]);
        }
        out.push('\n');
    }
    fs::write(path, out).map_err(io_err(path))
}
