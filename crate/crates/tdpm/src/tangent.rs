//! Local tangent spaces and the tangent distance.
//!
//! The tangent space at a point is estimated by PCA over its k-nearest
//! neighbors: the orthonormal basis is the top-d left singular vectors of
//! the column-centered neighborhood matrix. The tangent distance from the
//! affine space anchored at `x_i` to a query `x` is the norm of the residual
//! after orthogonal projection, which is never larger than the Euclidean
//! distance between the points.

use nalgebra::{DMatrix, DVector, DVectorView};
use rayon::prelude::*;

use crate::dataset::DataMatrix;
use crate::error::{Error, Result};
use crate::mds::DistanceMatrix;
use crate::neighbors::NeighborIndex;
use crate::util::orient_columns;

/// Orthonormal basis of the estimated tangent space at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentBasis {
    anchor: usize,
    basis: DMatrix<f64>,
    singular_values: Vec<f64>,
}

impl TangentBasis {
    /// Index of the point the affine space is anchored at.
    pub fn anchor(&self) -> usize {
        self.anchor
    }

    /// `m x d` matrix with orthonormal columns spanning the tangent space.
    pub fn basis(&self) -> &DMatrix<f64> {
        &self.basis
    }

    /// The `d` retained singular values of the centered neighborhood,
    /// non-increasing.
    pub fn singular_values(&self) -> &[f64] {
        &self.singular_values
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }
}

/// Estimates the tangent basis at `anchor` from its neighbor row. The basis
/// is the top-`d` left singular vectors of the neighborhood matrix after
/// subtracting the neighborhood mean from each column; column signs follow
/// the largest-magnitude-entry-positive rule.
pub fn tangent_basis(
    data: &DataMatrix,
    anchor: usize,
    neighbors: &[usize],
    d: usize,
) -> Result<TangentBasis> {
    let v = data.values();
    let (m, n) = (v.nrows(), v.ncols());
    let k = neighbors.len();
    if d < 1 {
        return Err(Error::InvalidArgument("tangent rank must be at least 1".into()));
    }
    if d > m {
        return Err(Error::InvalidArgument(format!(
            "tangent rank {d} exceeds ambient dimension {m}"
        )));
    }
    if k <= d {
        return Err(Error::InvalidArgument(format!(
            "neighborhood too small for tangent rank: k = {k} <= d = {d}"
        )));
    }
    if anchor >= n || neighbors.iter().any(|&j| j >= n) {
        return Err(Error::InvalidArgument(format!(
            "point index out of range for {n} points"
        )));
    }

    // X_i (I - ee^T/k): subtract the column mean
    let mut neighborhood = DMatrix::zeros(m, k);
    for (c, &j) in neighbors.iter().enumerate() {
        neighborhood.set_column(c, &v.column(j));
    }
    let mean = neighborhood.column_mean();
    for mut c in neighborhood.column_iter_mut() {
        c -= &mean;
    }

    let svd = neighborhood.svd(true, false);
    let sv = &svd.singular_values;
    let tol = sv[0] * m.max(k) as f64 * f64::EPSILON;
    let rank = sv.iter().filter(|s| **s > tol).count();
    if rank < d {
        return Err(Error::DegenerateNeighborhood {
            point: anchor,
            rank,
            required: d,
        });
    }

    let u = svd.u.expect("left singular vectors were requested");
    let mut basis = u.columns(0, d).into_owned();
    orient_columns(&mut basis);
    Ok(TangentBasis {
        anchor,
        basis,
        singular_values: sv.iter().take(d).copied().collect(),
    })
}

// Residual of the orthogonal projection of (query - anchor) onto the basis.
// The residual is formed explicitly rather than via norm cancellation so
// near-zero distances keep full precision.
fn projection_residual(
    basis: &DMatrix<f64>,
    diff: &DVector<f64>,
    alpha: &mut DVector<f64>,
    residual: &mut DVector<f64>,
) -> f64 {
    alpha.gemv_tr(1.0, basis, diff, 0.0);
    residual.copy_from(diff);
    residual.gemv(-1.0, basis, alpha, 1.0);
    residual.norm()
}

/// Distance from `query` to the affine tangent space `anchor_point + span(P)`
/// together with the in-space coordinates of the closest point. For an
/// orthonormal basis the minimizer is `alpha = P^T (query - anchor_point)`.
pub fn tangent_distance(
    anchor_point: DVectorView<f64>,
    basis: &TangentBasis,
    query: DVectorView<f64>,
) -> Result<(f64, DVector<f64>)> {
    let m = basis.ambient_dim();
    if anchor_point.len() != m || query.len() != m {
        return Err(Error::InvalidArgument(format!(
            "dimension mismatch: basis is {}-dimensional, anchor has {} entries, query has {}",
            m,
            anchor_point.len(),
            query.len()
        )));
    }
    let diff = query - anchor_point;
    let mut alpha = DVector::zeros(basis.dim());
    let mut residual = DVector::zeros(m);
    let dist = projection_residual(&basis.basis, &diff, &mut alpha, &mut residual);
    Ok((dist, alpha))
}

/// Row-asymmetric tangent distances: entry `(i, j)` is the distance from
/// `x_j` to the affine tangent space anchored at `x_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentDistanceMatrix {
    values: DMatrix<f64>,
}

impl TangentDistanceMatrix {
    /// Validates squareness, a zero diagonal, and finite nonnegative entries.
    pub fn new(values: DMatrix<f64>) -> Result<Self> {
        if values.nrows() != values.ncols() {
            return Err(Error::InvalidArgument(format!(
                "tangent distance matrix must be square, got {}x{}",
                values.nrows(),
                values.ncols()
            )));
        }
        for i in 0..values.nrows() {
            if values[(i, i)] != 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "tangent distance diagonal entry ({i},{i}) is not zero"
                )));
            }
            for j in 0..values.ncols() {
                let v = values[(i, j)];
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::InvalidArgument(format!(
                        "tangent distance entry ({i},{j}) = {v} is invalid"
                    )));
                }
            }
        }
        Ok(Self { values })
    }

    pub fn n(&self) -> usize {
        self.values.nrows()
    }

    pub fn values(&self) -> &DMatrix<f64> {
        &self.values
    }
}

/// Tangent distances from every anchored tangent space to every point.
/// Rows are independent and computed in parallel; the result is identical
/// to sequential evaluation.
pub fn tangent_distance_matrix(
    data: &DataMatrix,
    neighbors: &NeighborIndex,
    d: usize,
) -> Result<TangentDistanceMatrix> {
    let v = data.values();
    let (m, n) = (v.nrows(), v.ncols());
    if neighbors.n_points() != n {
        return Err(Error::InvalidArgument(format!(
            "neighbor index covers {} points but data has {}",
            neighbors.n_points(),
            n
        )));
    }
    if neighbors.k() <= d {
        return Err(Error::InvalidArgument(format!(
            "neighborhood too small for tangent rank: k = {} <= d = {}",
            neighbors.k(),
            d
        )));
    }

    let results: Vec<Result<Vec<f64>>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let basis = tangent_basis(data, i, neighbors.row(i), d)?;
            let mut row = vec![0.0f64; n];
            let mut diff = DVector::zeros(m);
            let mut alpha = DVector::zeros(d);
            let mut residual = DVector::zeros(m);
            for j in 0..n {
                if j == i {
                    continue;
                }
                for r in 0..m {
                    diff[r] = v[(r, j)] - v[(r, i)];
                }
                row[j] = projection_residual(basis.basis(), &diff, &mut alpha, &mut residual);
            }
            Ok(row)
        })
        .collect();

    // surface the lowest-index failure so errors are deterministic
    let mut values = DMatrix::zeros(n, n);
    for (i, row) in results.into_iter().enumerate() {
        let row = row?;
        for j in 0..n {
            values[(i, j)] = row[j];
        }
    }
    Ok(TangentDistanceMatrix { values })
}

/// How to combine `TD(i,j)` and `TD(j,i)` into a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SymmetrizeMode {
    #[default]
    Mean,
    Min,
    Max,
}

impl SymmetrizeMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            SymmetrizeMode::Mean => "mean",
            SymmetrizeMode::Min => "min",
            SymmetrizeMode::Max => "max",
        }
    }
}

impl std::str::FromStr for SymmetrizeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mean" => Ok(SymmetrizeMode::Mean),
            "min" => Ok(SymmetrizeMode::Min),
            "max" => Ok(SymmetrizeMode::Max),
            other => Err(Error::InvalidArgument(format!(
                "unknown symmetrize mode {other:?}"
            ))),
        }
    }
}

impl std::fmt::Display for SymmetrizeMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Combines the two directed tangent distances of every pair under the
/// chosen mode. The mean mode preserves the Euclidean upper bound.
pub fn symmetrize(td: &TangentDistanceMatrix, mode: SymmetrizeMode) -> DistanceMatrix {
    let n = td.n();
    let v = td.values();
    let mut out = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..i {
            let (a, b) = (v[(i, j)], v[(j, i)]);
            let s = match mode {
                SymmetrizeMode::Mean => 0.5 * (a + b),
                SymmetrizeMode::Min => a.min(b),
                SymmetrizeMode::Max => a.max(b),
            };
            out[(i, j)] = s;
            out[(j, i)] = s;
        }
    }
    DistanceMatrix::new_unchecked(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{generate_plane, generate_swiss_roll, Seed};
    use crate::neighbors::{knn, pairwise_distances};
    use approx::assert_relative_eq;
    use nalgebra::dmatrix;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn data(values: DMatrix<f64>) -> DataMatrix {
        DataMatrix::new(values).unwrap()
    }

    fn random_orthonormal(rng: &mut ChaCha8Rng, m: usize, d: usize) -> DMatrix<f64> {
        let a = DMatrix::from_fn(m, m, |_, _| rng.random_range(-1.0..1.0));
        let q = a.qr().q();
        q.columns(0, d).into_owned()
    }

    #[test]
    fn basis_of_collinear_neighbors() {
        // anchor 0 with neighbors on the diagonal; d = 1
        let m = data(dmatrix![0.0, 1.0, 2.0, 3.0; 0.0, 1.0, 2.0, 3.0]);
        let b = tangent_basis(&m, 0, &[1, 2, 3], 1).unwrap();
        let c = 1.0 / 2.0f64.sqrt();
        assert_relative_eq!(b.basis()[(0, 0)], c, epsilon = 1e-12);
        assert_relative_eq!(b.basis()[(1, 0)], c, epsilon = 1e-12);
    }

    #[test]
    fn basis_of_planar_square_spans_xy() {
        let m = data(dmatrix![
            0.0, 1.0, 1.0, 0.0, 0.5;
            0.0, 0.0, 1.0, 1.0, 0.5;
            0.0, 0.0, 0.0, 0.0, 0.0
        ]);
        let b = tangent_basis(&m, 4, &[0, 1, 2, 3], 2).unwrap();
        let projector = b.basis() * b.basis().transpose();
        let expected = dmatrix![1.0, 0.0, 0.0; 0.0, 1.0, 0.0; 0.0, 0.0, 0.0];
        assert_relative_eq!(projector, expected, epsilon = 1e-10);
    }

    #[test]
    fn basis_orthonormal_and_matches_full_svd_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        // 12 points near the plane spanned by two random directions
        let span = random_orthonormal(&mut rng, 4, 2);
        let mut pts = DMatrix::zeros(4, 13);
        for j in 0..13 {
            let coeff = DVector::from_fn(2, |_, _| rng.random_range(-1.0..1.0));
            let noise = DVector::from_fn(4, |_, _| rng.random_range(-1e-4..1e-4));
            pts.set_column(j, &(&span * coeff + noise));
        }
        let m = data(pts.clone());
        let neighbors: Vec<usize> = (1..13).collect();
        let b = tangent_basis(&m, 0, &neighbors, 2).unwrap();

        // orthonormality
        let gram = b.basis().transpose() * b.basis();
        assert_relative_eq!(gram, DMatrix::identity(2, 2), epsilon = 1e-10);

        // independent oracle: full SVD of the explicitly centered matrix
        let mut centered = DMatrix::zeros(4, 12);
        for (c, &j) in neighbors.iter().enumerate() {
            centered.set_column(c, &pts.column(j));
        }
        let mean = centered.column_mean();
        for mut col in centered.column_iter_mut() {
            col -= &mean;
        }
        let svd = centered.clone().svd(true, true);
        let u = svd.u.unwrap().columns(0, 2).into_owned();
        // compare as projectors (sign/rotation free)
        let p_est = b.basis() * b.basis().transpose();
        let p_oracle = &u * u.transpose();
        assert_relative_eq!(p_est, p_oracle, epsilon = 1e-10);

        // principal angle to the true plane bounded by the noise floor
        let s3 = svd.singular_values[2];
        let cross = b.basis().transpose() * &span;
        let min_sv = cross.svd(false, false).singular_values.min();
        let angle = min_sv.clamp(-1.0, 1.0).acos();
        assert!(angle < (10.0 * s3).asin() + 1e-6, "angle {angle}, s3 {s3}");
    }

    #[test]
    fn basis_rejects_small_neighborhood() {
        let m = data(dmatrix![0.0, 1.0, 2.0; 0.0, 1.0, 2.0]);
        match tangent_basis(&m, 0, &[1, 2], 2) {
            Err(Error::InvalidArgument(msg)) => {
                assert!(msg.contains("neighborhood too small"), "{msg}");
            }
            other => panic!("expected invalid-argument, got {other:?}"),
        }
    }

    #[test]
    fn basis_reports_degenerate_rank() {
        // duplicate neighbors: centered matrix is exactly zero
        let m = data(dmatrix![0.0, 1.0, 1.0, 1.0; 0.0, 2.0, 2.0, 2.0]);
        match tangent_basis(&m, 0, &[1, 2, 3], 1) {
            Err(Error::DegenerateNeighborhood { point, rank, required }) => {
                assert_eq!((point, rank, required), (0, 0, 1));
            }
            other => panic!("expected degenerate neighborhood, got {other:?}"),
        }
    }

    #[test]
    fn distance_on_the_tangent_line_is_zero() {
        let m = data(dmatrix![0.0, 1.0, -1.0; 0.0, 1.0, -1.0]);
        let b = tangent_basis(&m, 0, &[1, 2], 1).unwrap();
        // query along the basis direction
        let anchor = DVector::from_vec(vec![0.0, 0.0]);
        let q = DVector::from_vec(vec![2.0, 2.0]);
        let (dist, alpha) = tangent_distance(anchor.column(0), &b, q.column(0)).unwrap();
        assert!(dist < 1e-12);
        assert_relative_eq!(alpha[0], 8.0f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn distance_is_orthogonal_component() {
        // basis = x axis in the plane
        let basis = TangentBasis {
            anchor: 0,
            basis: dmatrix![1.0; 0.0],
            singular_values: vec![1.0],
        };
        let anchor = DVector::from_vec(vec![0.0, 0.0]);
        let q = DVector::from_vec(vec![3.0, 4.0]);
        let (dist, alpha) = tangent_distance(anchor.column(0), &basis, q.column(0)).unwrap();
        assert_relative_eq!(dist, 4.0, epsilon = 1e-12);
        assert_relative_eq!(alpha[0], 3.0, epsilon = 1e-12);
    }

    #[test]
    fn distance_in_three_space() {
        let basis = TangentBasis {
            anchor: 0,
            basis: dmatrix![1.0, 0.0; 0.0, 1.0; 0.0, 0.0],
            singular_values: vec![1.0, 1.0],
        };
        let anchor = DVector::from_vec(vec![0.0, 0.0, 0.0]);
        let q = DVector::from_vec(vec![1.0, 2.0, 3.0]);
        let (dist, alpha) = tangent_distance(anchor.column(0), &basis, q.column(0)).unwrap();
        assert_relative_eq!(dist, 3.0, epsilon = 1e-12);
        assert_relative_eq!(alpha[0], 1.0, epsilon = 1e-12);
        assert_relative_eq!(alpha[1], 2.0, epsilon = 1e-12);
    }

    #[test]
    fn distance_rejects_dimension_mismatch() {
        let basis = TangentBasis {
            anchor: 0,
            basis: dmatrix![1.0; 0.0],
            singular_values: vec![1.0],
        };
        let anchor = DVector::from_vec(vec![0.0, 0.0, 0.0]);
        let q = DVector::from_vec(vec![1.0, 2.0, 3.0]);
        assert!(tangent_distance(anchor.column(0), &basis, q.column(0)).is_err());
    }

    #[test]
    fn closed_form_matches_least_squares_oracle() {
        // the closed form alpha = P^T (x - x*) must agree with a generic
        // least-squares minimization that does not assume orthonormality
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..100 {
            let m = rng.random_range(3..=10usize);
            let d = rng.random_range(1..m);
            let p = random_orthonormal(&mut rng, m, d);
            let basis = TangentBasis {
                anchor: 0,
                basis: p.clone(),
                singular_values: vec![1.0; d],
            };
            let anchor = DVector::from_fn(m, |_, _| rng.random_range(-2.0..2.0));
            let q = DVector::from_fn(m, |_, _| rng.random_range(-2.0..2.0));
            let (dist, alpha) = tangent_distance(anchor.column(0), &basis, q.column(0)).unwrap();

            let b = &q - &anchor;
            let alpha_ls = p
                .clone()
                .svd(true, true)
                .solve(&b, 1e-14)
                .expect("least squares solve");
            let dist_ls = (&p * &alpha_ls - &b).norm();
            assert!((dist - dist_ls).abs() < 1e-9, "dist {dist} vs {dist_ls}");
            assert!((&alpha - &alpha_ls).norm() < 1e-9);
            assert!(dist <= b.norm() + 1e-12);
        }
    }

    #[test]
    fn closed_form_matches_grid_search_oracle() {
        // coarse-to-fine grid over alpha in 2 tangent dimensions
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..10 {
            let p = random_orthonormal(&mut rng, 3, 2);
            let basis = TangentBasis {
                anchor: 0,
                basis: p.clone(),
                singular_values: vec![1.0, 1.0],
            };
            let anchor = DVector::from_fn(3, |_, _| rng.random_range(-1.0..1.0));
            let q = DVector::from_fn(3, |_, _| rng.random_range(2.0..3.0));
            let (dist, _) = tangent_distance(anchor.column(0), &basis, q.column(0)).unwrap();

            let b = &q - &anchor;
            let mut center = [0.0f64, 0.0];
            let mut radius = b.norm() + 1.0;
            let mut best = f64::INFINITY;
            for _ in 0..6 {
                let mut best_cell = center;
                for s in 0..=40 {
                    for t in 0..=40 {
                        let a0 = center[0] - radius + 2.0 * radius * s as f64 / 40.0;
                        let a1 = center[1] - radius + 2.0 * radius * t as f64 / 40.0;
                        let cand = (&p * DVector::from_vec(vec![a0, a1]) - &b).norm();
                        if cand < best {
                            best = cand;
                            best_cell = [a0, a1];
                        }
                    }
                }
                center = best_cell;
                radius /= 8.0;
            }
            assert!((dist - best).abs() < 1e-6, "dist {dist} vs grid {best}");
        }
    }

    #[test]
    fn projection_idempotent_on_in_space_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..20 {
            let p = random_orthonormal(&mut rng, 5, 2);
            let basis = TangentBasis {
                anchor: 0,
                basis: p.clone(),
                singular_values: vec![1.0, 1.0],
            };
            let anchor = DVector::from_fn(5, |_, _| rng.random_range(-1.0..1.0));
            let beta = DVector::from_fn(2, |_, _| rng.random_range(-3.0..3.0));
            let q = &anchor + &p * beta;
            let (dist, _) = tangent_distance(anchor.column(0), &basis, q.column(0)).unwrap();
            assert!(dist < 1e-10);
        }
    }

    #[test]
    fn matrix_collapses_on_flat_plane() {
        let sample = generate_plane(60, Seed(5)).unwrap();
        let idx = knn(&sample.data, 8).unwrap();
        let td = tangent_distance_matrix(&sample.data, &idx, 2).unwrap();
        assert!(td.values().max() < 1e-9);
    }

    #[test]
    fn matrix_bounded_by_euclidean_on_swiss_roll() {
        let sample = generate_swiss_roll(20, Seed(12)).unwrap();
        let idx = knn(&sample.data, 6).unwrap();
        let td = tangent_distance_matrix(&sample.data, &idx, 2).unwrap();
        let euclid = pairwise_distances(&sample.data);
        for i in 0..20 {
            assert_eq!(td.values()[(i, i)], 0.0);
            for j in 0..20 {
                assert!(td.values()[(i, j)] <= euclid.values()[(i, j)] + 1e-9);
            }
        }
    }

    #[test]
    fn matrix_rejects_too_small_k() {
        let sample = generate_swiss_roll(10, Seed(1)).unwrap();
        let idx = knn(&sample.data, 2).unwrap();
        match tangent_distance_matrix(&sample.data, &idx, 2) {
            Err(Error::InvalidArgument(msg)) => assert!(msg.contains("neighborhood too small")),
            other => panic!("expected invalid-argument, got {other:?}"),
        }
    }

    #[test]
    fn matrix_propagates_degenerate_point_index() {
        // points 0..3 duplicated so every neighborhood of point 4 is fine but
        // neighborhoods among duplicates have rank 0
        let m = data(dmatrix![
            1.0, 1.0, 1.0, 1.0, 0.0, 2.0;
            1.0, 1.0, 1.0, 1.0, 0.0, 2.0
        ]);
        let idx = knn(&m, 3).unwrap();
        match tangent_distance_matrix(&m, &idx, 1) {
            Err(Error::DegenerateNeighborhood { point, .. }) => assert_eq!(point, 0),
            other => panic!("expected degenerate neighborhood, got {other:?}"),
        }
    }

    #[test]
    fn matrix_invariant_under_rotation() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let sample = generate_swiss_roll(40, Seed(3)).unwrap();
        let idx = knn(&sample.data, 8).unwrap();
        let td = tangent_distance_matrix(&sample.data, &idx, 2).unwrap();

        let q = random_orthonormal(&mut rng, 3, 3);
        let rotated = data(&q * sample.data.values());
        let idx_r = knn(&rotated, 8).unwrap();
        assert_eq!(idx.rows(), idx_r.rows());
        let td_r = tangent_distance_matrix(&rotated, &idx_r, 2).unwrap();
        for i in 0..40 {
            for j in 0..40 {
                assert!((td.values()[(i, j)] - td_r.values()[(i, j)]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn symmetrize_modes() {
        let td = TangentDistanceMatrix::new(dmatrix![0.0, 1.0; 3.0, 0.0]).unwrap();
        assert_eq!(
            symmetrize(&td, SymmetrizeMode::Mean).values(),
            &dmatrix![0.0, 2.0; 2.0, 0.0]
        );
        assert_eq!(
            symmetrize(&td, SymmetrizeMode::Min).values(),
            &dmatrix![0.0, 1.0; 1.0, 0.0]
        );
        assert_eq!(
            symmetrize(&td, SymmetrizeMode::Max).values(),
            &dmatrix![0.0, 3.0; 3.0, 0.0]
        );
    }

    #[test]
    fn symmetrize_fixed_point_on_symmetric_input() {
        let td = TangentDistanceMatrix::new(dmatrix![0.0, 2.0; 2.0, 0.0]).unwrap();
        for mode in [SymmetrizeMode::Mean, SymmetrizeMode::Min, SymmetrizeMode::Max] {
            assert_eq!(symmetrize(&td, mode).values(), td.values());
        }
    }

    #[test]
    fn negative_entries_rejected_at_construction() {
        assert!(matches!(
            TangentDistanceMatrix::new(dmatrix![0.0, -1.0; 3.0, 0.0]),
            Err(Error::InvalidArgument(_))
        ));
    }
}
