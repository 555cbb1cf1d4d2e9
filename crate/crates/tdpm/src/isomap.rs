//! Reference ISOMAP: union-symmetrized kNN graph, all-pairs shortest-path
//! geodesics via per-source Dijkstra, then classical MDS.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use nalgebra::DMatrix;
use ordered_float::OrderedFloat;
use rayon::prelude::*;

use crate::dataset::DataMatrix;
use crate::error::{Error, Result};
use crate::mds::{classical_mds, DistanceMatrix, Embedding};
use crate::neighbors::{knn, pairwise_distances};

/// Undirected neighbor graph with Euclidean edge weights. An edge is present
/// when either endpoint selected the other as a k-nearest neighbor.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborGraph {
    n: usize,
    adjacency: Vec<Vec<(usize, f64)>>,
}

impl NeighborGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbors of `i` as `(index, weight)`, sorted by index.
    pub fn neighbors(&self, i: usize) -> &[(usize, f64)] {
        &self.adjacency[i]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Connected components, each sorted ascending; components are ordered by
    /// their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut component = vec![usize::MAX; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if component[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            component[start] = id;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for &(v, _) in &self.adjacency[u] {
                    if component[v] == usize::MAX {
                        component[v] = id;
                        members.push(v);
                        queue.push(v);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    /// Subgraph induced by the largest connected component (ties broken by
    /// smallest vertex). Returns the subgraph and the kept original indices.
    pub fn largest_component(&self) -> (NeighborGraph, Vec<usize>) {
        let components = self.connected_components();
        let keep = components
            .iter()
            .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
            .expect("graph has at least one vertex")
            .clone();
        let mut remap = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let adjacency = keep
            .iter()
            .map(|&old| {
                self.adjacency[old]
                    .iter()
                    .map(|&(v, w)| (remap[v], w))
                    .collect()
            })
            .collect();
        (
            NeighborGraph {
                n: keep.len(),
                adjacency,
            },
            keep,
        )
    }
}

/// Builds the union-symmetrized kNN graph with Euclidean weights.
pub fn build_graph(data: &DataMatrix, k: usize) -> Result<NeighborGraph> {
    let n = data.n_points();
    let index = knn(data, k)?;
    let dist = pairwise_distances(data);
    let mut adjacency: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for i in 0..n {
        for &j in index.row(i) {
            adjacency[i].push((j, dist.values()[(i, j)]));
            adjacency[j].push((i, dist.values()[(i, j)]));
        }
    }
    for adj in &mut adjacency {
        adj.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        adj.dedup_by(|a, b| a.0 == b.0);
    }
    Ok(NeighborGraph { n, adjacency })
}

fn dijkstra(graph: &NeighborGraph, source: usize) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; graph.n];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(Reverse((OrderedFloat(0.0f64), source)));
    while let Some(Reverse((OrderedFloat(d), u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for &(v, w) in &graph.adjacency[u] {
            let nd = d + w;
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(Reverse((OrderedFloat(nd), v)));
            }
        }
    }
    dist
}

/// All-pairs shortest-path distances along the graph. Forward and reverse
/// sums over the same path can differ in the last ulp, so each pair takes
/// the smaller of the two directions to stay exactly symmetric.
pub fn geodesic_distances(graph: &NeighborGraph) -> Result<DistanceMatrix> {
    let components = graph.connected_components();
    if components.len() > 1 {
        let mut sizes: Vec<usize> = components.iter().map(|c| c.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        return Err(Error::DisconnectedGraph { sizes });
    }
    let n = graph.n;
    let rows: Vec<Vec<f64>> = (0..n).into_par_iter().map(|i| dijkstra(graph, i)).collect();
    let mut values = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..i {
            let d = rows[i][j].min(rows[j][i]);
            values[(i, j)] = d;
            values[(j, i)] = d;
        }
    }
    Ok(DistanceMatrix::new_unchecked(values))
}

/// kNN graph, geodesics, then classical MDS into `d` dimensions.
pub fn isomap_embed(data: &DataMatrix, k: usize, d: usize) -> Result<Embedding> {
    let graph = build_graph(data, k)?;
    let geodesics = geodesic_distances(&graph)?;
    classical_mds(&geodesics, d)
}
