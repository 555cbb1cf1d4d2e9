//! End-to-end embedding pipelines and quality metrics.
//!
//! `tdpm_embed` chains neighbor search, the tangent distance matrix,
//! symmetrization, and classical MDS. `tdpm_then_isomap` feeds the first
//! stage's coordinates through the reference ISOMAP, which checks whether
//! the folded structure survived the first projection. Reports carry
//! normalized stress and the Pearson correlation between target and
//! embedded distances so figure-level claims become regression numbers.

use nalgebra::DMatrix;
use rayon::prelude::*;

use crate::dataset::{DataMatrix, ManifoldSample};
use crate::error::{Error, Result};
use crate::isomap::{build_graph, geodesic_distances};
use crate::mds::{classical_mds, DistanceMatrix, Embedding};
use crate::neighbors::{knn, pairwise_distances};
use crate::tangent::{symmetrize, tangent_distance_matrix, SymmetrizeMode};

/// Parameters of the tangent-distance pipeline.
///
/// `tangent_dim` is the rank of the estimated tangent spaces and defaults to
/// the embedding dimension `d`; the two roles can be set independently.
/// Validity (`k > tangent_dim >= 1`) is enforced by the stage that consumes
/// each field, so invalid combinations surface with a stage label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdpmConfig {
    pub k: usize,
    pub d: usize,
    pub tangent_dim: usize,
    pub symmetrize_mode: SymmetrizeMode,
}

impl TdpmConfig {
    pub fn new(k: usize, d: usize) -> Self {
        Self {
            k,
            d,
            tangent_dim: d,
            symmetrize_mode: SymmetrizeMode::Mean,
        }
    }

    pub fn with_tangent_dim(mut self, tangent_dim: usize) -> Self {
        self.tangent_dim = tangent_dim;
        self
    }

    pub fn with_symmetrize_mode(mut self, mode: SymmetrizeMode) -> Self {
        self.symmetrize_mode = mode;
        self
    }
}

/// An embedding plus how well it preserves the target distances.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingReport {
    pub embedding: Embedding,
    pub normalized_stress: f64,
    pub distance_correlation: f64,
    pub negative_mass: f64,
}

fn embedded_distances(embedding: &Embedding) -> DMatrix<f64> {
    let y = embedding.coordinates();
    let n = y.ncols();
    let mut out = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..i {
            let d = (y.column(i) - y.column(j)).norm();
            out[(i, j)] = d;
            out[(j, i)] = d;
        }
    }
    out
}

/// Root of the squared distance discrepancy over the squared target
/// distances, summed over unordered pairs. Zero means perfect preservation;
/// an all-zero embedding against a nonzero target gives exactly 1.
pub fn normalized_stress(target: &DistanceMatrix, embedding: &Embedding) -> Result<f64> {
    if embedding.n_points() != target.n() {
        return Err(Error::InvalidArgument(format!(
            "embedding has {} points but target has {}",
            embedding.n_points(),
            target.n()
        )));
    }
    let emb = embedded_distances(embedding);
    let t = target.values();
    let n = target.n();
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..n {
        for j in 0..i {
            let diff = t[(i, j)] - emb[(i, j)];
            num += diff * diff;
            den += t[(i, j)] * t[(i, j)];
        }
    }
    if den == 0.0 {
        return Ok(if num == 0.0 { 0.0 } else { f64::INFINITY });
    }
    Ok((num / den).sqrt())
}

/// Pearson correlation between target and embedded distances over unordered
/// pairs. Returns 0 when either side has no variance (collapsed input).
pub fn distance_correlation(target: &DistanceMatrix, embedding: &Embedding) -> Result<f64> {
    if embedding.n_points() != target.n() {
        return Err(Error::InvalidArgument(format!(
            "embedding has {} points but target has {}",
            embedding.n_points(),
            target.n()
        )));
    }
    let emb = embedded_distances(embedding);
    let t = target.values();
    let n = target.n();
    let pairs = (n * (n - 1) / 2) as f64;
    let (mut mean_t, mut mean_e) = (0.0, 0.0);
    for i in 0..n {
        for j in 0..i {
            mean_t += t[(i, j)];
            mean_e += emb[(i, j)];
        }
    }
    mean_t /= pairs;
    mean_e /= pairs;
    let (mut cov, mut var_t, mut var_e) = (0.0, 0.0, 0.0);
    for i in 0..n {
        for j in 0..i {
            let a = t[(i, j)] - mean_t;
            let b = emb[(i, j)] - mean_e;
            cov += a * b;
            var_t += a * a;
            var_e += b * b;
        }
    }
    if var_t == 0.0 || var_e == 0.0 {
        return Ok(0.0);
    }
    Ok(cov / (var_t.sqrt() * var_e.sqrt()))
}

fn report_for(target: &DistanceMatrix, embedding: Embedding) -> Result<EmbeddingReport> {
    let normalized_stress = normalized_stress(target, &embedding)?;
    let distance_correlation = distance_correlation(target, &embedding)?;
    Ok(EmbeddingReport {
        normalized_stress,
        distance_correlation,
        negative_mass: embedding.negative_mass(),
        embedding,
    })
}

/// The tangent-distance pipeline: k-nearest neighbors, tangent distance
/// matrix, symmetrization, classical MDS. Metrics compare the symmetrized
/// tangent distances with the embedded Euclidean distances.
pub fn tdpm_embed(data: &DataMatrix, config: &TdpmConfig) -> Result<EmbeddingReport> {
    let neighbors = knn(data, config.k).map_err(Error::stage("neighbors"))?;
    let td = tangent_distance_matrix(data, &neighbors, config.tangent_dim)
        .map_err(Error::stage("tangent"))?;
    let sym = symmetrize(&td, config.symmetrize_mode);
    let embedding = classical_mds(&sym, config.d).map_err(Error::stage("mds"))?;
    report_for(&sym, embedding)
}

/// Reference ISOMAP as a report. With `largest_component` set, a
/// disconnected graph is restricted to its largest connected component and
/// the kept original point indices are returned alongside.
pub fn isomap_report(
    data: &DataMatrix,
    k: usize,
    d: usize,
    largest_component: bool,
) -> Result<(EmbeddingReport, Option<Vec<usize>>)> {
    let graph = build_graph(data, k).map_err(Error::stage("isomap"))?;
    let (geodesics, kept) = match geodesic_distances(&graph) {
        Ok(g) => (g, None),
        Err(Error::DisconnectedGraph { .. }) if largest_component => {
            let (sub, kept) = graph.largest_component();
            let g = geodesic_distances(&sub).map_err(Error::stage("isomap"))?;
            (g, Some(kept))
        }
        Err(e) => return Err(Error::stage("isomap")(e)),
    };
    let embedding = classical_mds(&geodesics, d).map_err(Error::stage("mds"))?;
    Ok((report_for(&geodesics, embedding)?, kept))
}

/// Classical MDS of the plain Euclidean distances, reported against them.
pub fn mds_report(data: &DataMatrix, d: usize) -> Result<EmbeddingReport> {
    let dist = pairwise_distances(data);
    let embedding = classical_mds(&dist, d).map_err(Error::stage("mds"))?;
    report_for(&dist, embedding)
}

/// Two-stage validation pipeline: the tangent-distance embedding into
/// `config.d` dimensions (the intermediate dimension `h`), then ISOMAP of
/// those coordinates into `final_d`. The report compares the stage-two
/// geodesics with the final embedded distances.
pub fn tdpm_then_isomap(
    data: &DataMatrix,
    config: &TdpmConfig,
    isomap_k: usize,
    final_d: usize,
) -> Result<EmbeddingReport> {
    let stage_one = tdpm_embed(data, config).map_err(Error::stage("tdpm"))?;
    let intermediate = DataMatrix::new(stage_one.embedding.coordinates().clone())
        .map_err(Error::stage("tdpm"))?;
    let graph = build_graph(&intermediate, isomap_k).map_err(Error::stage("isomap"))?;
    let geodesics = geodesic_distances(&graph).map_err(Error::stage("isomap"))?;
    let embedding = classical_mds(&geodesics, final_d).map_err(Error::stage("isomap"))?;
    report_for(&geodesics, embedding)
}

/// Smallest root-mean-square discrepancy between two point configurations
/// over scale, orthogonal transforms (reflections allowed), and translation.
/// Both matrices are `d x n` with one column per point.
pub fn procrustes_error(a: &DMatrix<f64>, b: &DMatrix<f64>) -> Result<f64> {
    if a.shape() != b.shape() {
        return Err(Error::InvalidArgument(format!(
            "shape mismatch: {:?} vs {:?}",
            a.shape(),
            b.shape()
        )));
    }
    let n = a.ncols();
    if n == 0 {
        return Err(Error::InvalidArgument("empty configurations".into()));
    }
    let center = |m: &DMatrix<f64>| {
        let mean = m.column_mean();
        let mut c = m.clone();
        for mut col in c.column_iter_mut() {
            col -= &mean;
        }
        c
    };
    let ac = center(a);
    let bc = center(b);
    let na2 = ac.norm_squared();
    let nb2 = bc.norm_squared();
    if nb2 == 0.0 {
        // b collapses to a point; scaling cannot help
        return Ok((na2 / n as f64).sqrt());
    }
    // optimal orthogonal transform via the SVD of the cross-covariance;
    // residual^2 = |ac|^2 - (sum of singular values)^2 / |bc|^2
    let cross = &ac * bc.transpose();
    let trace: f64 = cross.svd(false, false).singular_values.iter().sum();
    let residual_sq = (na2 - trace * trace / nb2).max(0.0);
    Ok((residual_sq / n as f64).sqrt())
}

/// One `(k, n)` cell of a sensitivity sweep.
#[derive(Debug)]
pub struct SweepCell {
    pub k: usize,
    pub n: usize,
    pub result: Result<EmbeddingReport>,
}

/// Procrustes discrepancy between the embeddings at two adjacent `k` values
/// for the same `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjacentProcrustes {
    pub n: usize,
    pub k_low: usize,
    pub k_high: usize,
    pub error: f64,
}

/// Sweep results, cells ordered by the given `n` then `k` lists.
#[derive(Debug)]
pub struct SweepTable {
    pub cells: Vec<SweepCell>,
    pub adjacent: Vec<AdjacentProcrustes>,
}

impl SweepTable {
    pub fn cell(&self, k: usize, n: usize) -> Option<&SweepCell> {
        self.cells.iter().find(|c| c.k == k && c.n == n)
    }
}

/// Runs `tdpm_embed` over a grid of `(k, n)`. For each `n` the first `n`
/// points of the sample are used, isolating the effect of `n` from sampling
/// noise. Per-cell failures are recorded in the table and do not abort the
/// sweep.
pub fn sensitivity_sweep(
    sample: &ManifoldSample,
    k_values: &[usize],
    n_values: &[usize],
    d: usize,
) -> SweepTable {
    let grid: Vec<(usize, usize)> = n_values
        .iter()
        .flat_map(|&n| k_values.iter().map(move |&k| (k, n)))
        .collect();
    let cells: Vec<SweepCell> = grid
        .into_par_iter()
        .map(|(k, n)| {
            let result = sample
                .prefix(n)
                .and_then(|sub| tdpm_embed(&sub.data, &TdpmConfig::new(k, d)));
            SweepCell { k, n, result }
        })
        .collect();

    let mut adjacent = Vec::new();
    for &n in n_values {
        for pair in k_values.windows(2) {
            let (lo, hi) = (pair[0], pair[1]);
            let (Some(a), Some(b)) = (
                cells.iter().find(|c| c.k == lo && c.n == n),
                cells.iter().find(|c| c.k == hi && c.n == n),
            ) else {
                continue;
            };
            if let (Ok(ra), Ok(rb)) = (&a.result, &b.result) {
                let error = procrustes_error(
                    ra.embedding.coordinates(),
                    rb.embedding.coordinates(),
                )
                .expect("embeddings over the same points have equal shapes");
                adjacent.push(AdjacentProcrustes {
                    n,
                    k_low: lo,
                    k_high: hi,
                    error,
                });
            }
        }
    }
    SweepTable { cells, adjacent }
}
