//! Classical (Torgerson) multidimensional scaling.
//!
//! A symmetric distance matrix is converted to a Gram matrix by double
//! centering, `B = -1/2 H D^(2) H` with `H = I - ee^T/n`, and embedded via a
//! symmetric eigendecomposition. Negative eigenvalues (the input need not be
//! Euclidean-embeddable) are clamped to zero coordinate rows and summarized
//! by `negative_mass`.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::util::orient_vector;

/// Symmetric nonnegative distances with a zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    values: DMatrix<f64>,
}

impl DistanceMatrix {
    /// Validates squareness, exact symmetry, a zero diagonal, and that all
    /// entries are finite and nonnegative.
    pub fn new(values: DMatrix<f64>) -> Result<Self> {
        if values.nrows() != values.ncols() {
            return Err(Error::InvalidArgument(format!(
                "distance matrix must be square, got {}x{}",
                values.nrows(),
                values.ncols()
            )));
        }
        for i in 0..values.nrows() {
            if values[(i, i)] != 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "distance matrix diagonal entry ({i},{i}) is not zero"
                )));
            }
            for j in 0..i {
                let (a, b) = (values[(i, j)], values[(j, i)]);
                if !a.is_finite() || a < 0.0 {
                    return Err(Error::InvalidArgument(format!(
                        "distance matrix entry ({i},{j}) = {a} is invalid"
                    )));
                }
                if a != b {
                    return Err(Error::InvalidArgument(format!(
                        "distance matrix is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Self { values })
    }

    /// For matrices that are symmetric, zero-diagonal, and nonnegative by
    /// construction.
    pub(crate) fn new_unchecked(values: DMatrix<f64>) -> Self {
        debug_assert!(Self::new(values.clone()).is_ok());
        Self { values }
    }

    pub fn n(&self) -> usize {
        self.values.nrows()
    }

    pub fn values(&self) -> &DMatrix<f64> {
        &self.values
    }
}

/// MDS output: `d x n` coordinates plus spectrum diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    coordinates: DMatrix<f64>,
    eigenvalues: Vec<f64>,
    negative_mass: f64,
}

impl Embedding {
    /// `eigenvalues` must have one entry per point, non-increasing;
    /// `negative_mass` must lie in `[0, 1]`.
    pub fn new(coordinates: DMatrix<f64>, eigenvalues: Vec<f64>, negative_mass: f64) -> Result<Self> {
        if eigenvalues.len() != coordinates.ncols() {
            return Err(Error::InvalidArgument(format!(
                "{} eigenvalues for {} points",
                eigenvalues.len(),
                coordinates.ncols()
            )));
        }
        if eigenvalues.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "eigenvalues must be non-increasing".into(),
            ));
        }
        if !(0.0..=1.0).contains(&negative_mass) {
            return Err(Error::InvalidArgument(format!(
                "negative mass {negative_mass} outside [0, 1]"
            )));
        }
        Ok(Self {
            coordinates,
            eigenvalues,
            negative_mass,
        })
    }

    /// Target-space coordinates, one column per point.
    pub fn coordinates(&self) -> &DMatrix<f64> {
        &self.coordinates
    }

    pub fn dim(&self) -> usize {
        self.coordinates.nrows()
    }

    pub fn n_points(&self) -> usize {
        self.coordinates.ncols()
    }

    /// Full spectrum of the doubly-centered Gram matrix, non-increasing.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Sum of |negative eigenvalues| over the sum of |all eigenvalues|;
    /// nonzero iff the input distances were not Euclidean-embeddable.
    pub fn negative_mass(&self) -> f64 {
        self.negative_mass
    }
}

/// Double centering of the squared distances: `B = -1/2 H D^(2) H`. The
/// result is exactly symmetric and its rows sum to zero up to rounding.
pub fn double_center(dist: &DistanceMatrix) -> DMatrix<f64> {
    let d = dist.values();
    let n = d.nrows();
    let sq = d.map(|v| v * v);
    let mut mean = vec![0.0f64; n];
    for i in 0..n {
        mean[i] = sq.row(i).sum() / n as f64;
    }
    let grand = mean.iter().sum::<f64>() / n as f64;
    let mut b = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let v = -0.5 * (sq[(i, j)] - mean[i] - mean[j] + grand);
            b[(i, j)] = v;
            b[(j, i)] = v;
        }
    }
    b
}

// Iteration cap for the symmetric QR sweep; convergence normally takes a
// small multiple of n.
fn eigen_iteration_cap(n: usize) -> usize {
    200 * n.max(16)
}

/// Embeds a distance matrix into `d` dimensions. Row `r` of the coordinates
/// is `sqrt(max(lambda_r, 0)) * v_r^T` over the `d` largest eigenpairs of the
/// doubly-centered Gram matrix; eigenvector signs follow the
/// largest-magnitude-entry-positive rule.
pub fn classical_mds(dist: &DistanceMatrix, d: usize) -> Result<Embedding> {
    let n = dist.n();
    if d < 1 || d > n - 1 {
        return Err(Error::InvalidArgument(format!(
            "embedding dimension {} out of range 1..={}",
            d,
            n - 1
        )));
    }
    let b = double_center(dist);
    let eig = b
        .try_symmetric_eigen(f64::EPSILON, eigen_iteration_cap(n))
        .ok_or_else(|| Error::Numeric("symmetric eigendecomposition did not converge".into()))?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]).then(a.cmp(&b)));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();

    let mut coordinates = DMatrix::zeros(d, n);
    for r in 0..d {
        let lambda = eigenvalues[r];
        if lambda <= 0.0 {
            continue; // clamped to a zero row
        }
        let mut v = eig.eigenvectors.column(order[r]).clone_owned();
        orient_vector(&mut v);
        let scale = lambda.sqrt();
        for j in 0..n {
            coordinates[(r, j)] = scale * v[j];
        }
    }

    let total: f64 = eigenvalues.iter().map(|l| l.abs()).sum();
    let negative: f64 = eigenvalues.iter().filter(|l| **l < 0.0).map(|l| l.abs()).sum();
    let negative_mass = if total == 0.0 { 0.0 } else { negative / total };

    Embedding::new(coordinates, eigenvalues, negative_mass)
}
