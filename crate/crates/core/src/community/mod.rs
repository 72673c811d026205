//! Community detection and modularity.

mod girvan_newman;
mod louvain;

pub use girvan_newman::{best_partition_by_modularity, girvan_newman, girvan_newman_with, Dendrogram, Split};
pub use louvain::{louvain, louvain_with_order, ScanOrder};

use crate::{Error, Graph, NodeId, Result};

/// Community assignment over all nodes of a graph, with its modularity.
///
/// Labels are canonical: communities are numbered `0..k` in order of their
/// smallest member id.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    nodes: Vec<NodeId>,
    labels: Vec<usize>,
    community_count: usize,
    modularity: f64,
}

impl Partition {
    /// Canonicalizes `labels` (aligned with [`Graph::nodes`]) and scores them on `g`.
    pub fn from_labels(g: &Graph, labels: &[usize]) -> Result<Partition> {
        let q = modularity(g, labels)?;
        Ok(Self::with_modularity(g, labels, q))
    }

    pub(crate) fn with_modularity(g: &Graph, labels: &[usize], modularity: f64) -> Partition {
        let (labels, community_count) = canonicalize(labels);
        Partition {
            nodes: g.nodes().to_vec(),
            labels,
            community_count,
            modularity,
        }
    }

    pub fn community_count(&self) -> usize {
        self.community_count
    }

    pub fn modularity(&self) -> f64 {
        self.modularity
    }

    /// Labels aligned with the source graph's ascending node ids.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, id: NodeId) -> Option<usize> {
        self.nodes.binary_search(&id).ok().map(|i| self.labels[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, usize)> + '_ {
        self.nodes.iter().copied().zip(self.labels.iter().copied())
    }

    /// Members of each community, ascending.
    pub fn communities(&self) -> Vec<Vec<NodeId>> {
        let mut out = vec![Vec::new(); self.community_count];
        for (id, c) in self.iter() {
            out[c].push(id);
        }
        out
    }
}

/// Relabels to `0..k` in first-appearance order.
pub(crate) fn canonicalize(labels: &[usize]) -> (Vec<usize>, usize) {
    let mut seen = std::collections::HashMap::new();
    let out = labels
        .iter()
        .map(|&l| {
            let next = seen.len();
            *seen.entry(l).or_insert(next)
        })
        .collect();
    (out, seen.len())
}

/// Newman–Girvan modularity `Σ_c [L_c/m − (d_c/2m)²]` of `labels` (aligned
/// with [`Graph::nodes`], any label values).
///
/// Intra-community edge counts and degree sums are accumulated as integers and
/// divided once, so small fixtures come out exact.
pub fn modularity(g: &Graph, labels: &[usize]) -> Result<f64> {
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::NoEdges);
    }
    if labels.len() != g.node_count() {
        return Err(Error::IncompleteAssignment {
            expected: g.node_count(),
            got: labels.len(),
        });
    }
    let (labels, k) = canonicalize(labels);
    let mut internal = vec![0u64; k];
    let mut degree = vec![0u64; k];
    for (i, &c) in labels.iter().enumerate() {
        degree[c] += g.degree_at(i) as u64;
    }
    for &(u, v) in g.edge_indices() {
        if labels[u] == labels[v] {
            internal[labels[u]] += 1;
        }
    }
    Ok(modularity_from_totals(m as u128, &internal, &degree))
}

/// `(4m ΣL − Σd²) / 4m²` from per-community internal weight and degree sums.
pub(crate) fn modularity_from_totals(m: u128, internal: &[u64], degree: &[u64]) -> f64 {
    let l: u128 = internal.iter().map(|&x| x as u128).sum();
    let d2: u128 = degree.iter().map(|&d| (d as u128) * (d as u128)).sum();
    let num = 4 * m * l;
    let den = 4 * m * m;
    if num >= d2 {
        (num - d2) as f64 / den as f64
    } else {
        -((d2 - num) as f64 / den as f64)
    }
}
