//! Exact k-nearest-neighbor search over a data matrix.
//!
//! Brute-force search: at desk scale (a few thousand points) the full
//! pairwise matrix is cheap and keeps neighbor rows trivially consistent
//! with it. Ties are broken by ascending point index so every downstream
//! result is deterministic.

use nalgebra::DMatrix;

use crate::dataset::DataMatrix;
use crate::error::{Error, Result};
use crate::mds::DistanceMatrix;

/// For each point, the indices of its `k` nearest neighbors by ascending
/// Euclidean distance. A point is never its own neighbor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborIndex {
    k: usize,
    rows: Vec<Vec<usize>>,
}

impl NeighborIndex {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of points the index was built over.
    pub fn n_points(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
}

/// Full pairwise Euclidean distances. Each unordered pair is computed once,
/// so the result is exactly symmetric with an exactly zero diagonal.
pub fn pairwise_distances(data: &DataMatrix) -> DistanceMatrix {
    let v = data.values();
    let (m, n) = (v.nrows(), v.ncols());
    let mut out = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..i {
            let mut sum = 0.0;
            for r in 0..m {
                let diff = v[(r, i)] - v[(r, j)];
                sum += diff * diff;
            }
            let d = sum.sqrt();
            out[(i, j)] = d;
            out[(j, i)] = d;
        }
    }
    DistanceMatrix::new_unchecked(out)
}

/// Exact k-nearest neighbors, self excluded, ties broken by ascending index.
pub fn knn(data: &DataMatrix, k: usize) -> Result<NeighborIndex> {
    let n = data.n_points();
    if k < 1 || k > n - 1 {
        return Err(Error::InvalidArgument(format!(
            "k = {} out of range 1..={} for {} points",
            k,
            n - 1,
            n
        )));
    }
    let dist = pairwise_distances(data);
    let d = dist.values();
    let rows = (0..n)
        .map(|i| {
            let mut order: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            order.sort_unstable_by(|&a, &b| d[(i, a)].total_cmp(&d[(i, b)]).then(a.cmp(&b)));
            order.truncate(k);
            order
        })
        .collect();
    Ok(NeighborIndex { k, rows })
}
