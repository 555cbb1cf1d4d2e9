//! Manifold embedding by tangent distance preservation.
//!
//! Most manifold learners flatten a sampled manifold to its intrinsic
//! coordinates. The pipeline here does the opposite: it estimates a local
//! tangent space at every point by neighborhood PCA, measures how far each
//! point lies from every other point's tangent space (the tangent distance,
//! never larger than the Euclidean distance), and embeds the symmetrized
//! tangent-distance matrix with classical MDS. The result keeps the folded
//! shape of the manifold visible in the low-dimensional view.
//!
//! The crate also ships a reference ISOMAP (kNN graph, shortest-path
//! geodesics, classical MDS) used both as a baseline and as the second
//! stage of a validation pipeline, plus synthetic manifold generators and
//! embedding-quality metrics.
//!
//! # Modules
//!
//! - [`dataset`] — swiss roll / s-curve / plane generators, CSV I/O
//! - [`neighbors`] — brute-force exact kNN and pairwise distances
//! - [`tangent`] — tangent bases, tangent distances, symmetrization
//! - [`mds`] — double centering and classical MDS
//! - [`isomap`] — neighbor graph, geodesics, reference ISOMAP
//! - [`pipeline`] — end-to-end runs, metrics, sensitivity sweeps
//!
//! # Example
//!
//! ```
//! use tdpm::dataset::{generate_swiss_roll, Seed};
//! use tdpm::pipeline::{tdpm_embed, TdpmConfig};
//!
//! let sample = generate_swiss_roll(200, Seed(7)).unwrap();
//! let report = tdpm_embed(&sample.data, &TdpmConfig::new(12, 2)).unwrap();
//! assert_eq!(report.embedding.dim(), 2);
//! assert!(report.distance_correlation > 0.5);
//! ```

pub mod dataset;
pub mod error;
pub mod isomap;
pub mod mds;
pub mod neighbors;
pub mod pipeline;
pub mod tangent;
mod util;

pub use dataset::{DataMatrix, ManifoldSample, Seed};
pub use error::{Error, Result};
pub use mds::{DistanceMatrix, Embedding};
pub use pipeline::{EmbeddingReport, TdpmConfig};
pub use tangent::SymmetrizeMode;
