//! Degree, closeness and betweenness centrality, plus edge betweenness.
//!
//! Betweenness uses Brandes' accumulation: one BFS per source counting
//! shortest paths, then dependencies propagated back in reverse BFS order.
//! Pairs are unordered, so the summed per-source dependencies are halved.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::paths::{bfs_into, UNREACHED};
use crate::{Error, Exec, Graph, NodeId, Result};

/// Sources processed per parallel batch before folding into the totals.
const SOURCE_CHUNK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CentralityKind {
    Degree,
    Closeness,
    Betweenness,
}

impl fmt::Display for CentralityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CentralityKind::Degree => "degree",
            CentralityKind::Closeness => "closeness",
            CentralityKind::Betweenness => "betweenness",
        })
    }
}

impl FromStr for CentralityKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "degree" => Ok(CentralityKind::Degree),
            "closeness" => Ok(CentralityKind::Closeness),
            "betweenness" => Ok(CentralityKind::Betweenness),
            other => Err(format!("unknown centrality {other:?}")),
        }
    }
}

/// One score per node, aligned with [`Graph::nodes`].
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityScores {
    pub kind: CentralityKind,
    pub normalized: bool,
    nodes: Vec<NodeId>,
    values: Vec<f64>,
}

impl CentralityScores {
    fn new(g: &Graph, kind: CentralityKind, normalized: bool, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), g.node_count());
        CentralityScores {
            kind,
            normalized,
            nodes: g.nodes().to_vec(),
            values,
        }
    }

    pub fn get(&self, id: NodeId) -> Option<f64> {
        self.nodes.binary_search(&id).ok().map(|i| self.values[i])
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, f64)> + '_ {
        self.nodes.iter().copied().zip(self.values.iter().copied())
    }

    /// Node ids ordered by score descending, then id ascending.
    pub fn ranking(&self) -> Vec<NodeId> {
        let mut order: Vec<usize> = (0..self.values.len()).collect();
        order.sort_by(|&a, &b| self.values[b].total_cmp(&self.values[a]).then(a.cmp(&b)));
        order.into_iter().map(|i| self.nodes[i]).collect()
    }
}

/// Edge scores aligned with [`Graph::edges`].
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeScores {
    edges: Vec<(NodeId, NodeId)>,
    values: Vec<f64>,
}

impl EdgeScores {
    pub fn get(&self, a: NodeId, b: NodeId) -> Option<f64> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).ok().map(|i| self.values[i])
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = ((NodeId, NodeId), f64)> + '_ {
        self.edges.iter().copied().zip(self.values.iter().copied())
    }
}

fn non_empty(g: &Graph) -> Result<usize> {
    match g.node_count() {
        0 => Err(Error::EmptyGraph),
        n => Ok(n),
    }
}

pub fn degree_centrality(g: &Graph) -> Result<CentralityScores> {
    let n = non_empty(g)?;
    let values = (0..n)
        .map(|i| {
            if n < 2 {
                0.0
            } else {
                g.degree_at(i) as f64 / (n - 1) as f64
            }
        })
        .collect();
    Ok(CentralityScores::new(g, CentralityKind::Degree, true, values))
}

/// Reachability-scaled closeness: `(r / (n-1)) * (r / S)` where `r` nodes are
/// reachable at total distance `S`; zero for nodes that reach nothing.
pub fn closeness_centrality(g: &Graph) -> Result<CentralityScores> {
    closeness_centrality_with(g, Exec::default())
}

pub fn closeness_centrality_with(g: &Graph, exec: Exec) -> Result<CentralityScores> {
    let n = non_empty(g)?;
    let values = exec.map(0..n, |s| {
        let mut dist = vec![UNREACHED; n];
        let order = bfs_into(g, s, &mut dist, &mut VecDeque::new());
        let reached = (order.len() - 1) as f64;
        let total: u64 = order.iter().map(|&v| dist[v] as u64).sum();
        if total == 0 {
            0.0
        } else {
            (reached / (n - 1) as f64) * (reached / total as f64)
        }
    });
    Ok(CentralityScores::new(g, CentralityKind::Closeness, true, values))
}

/// Node (and optionally edge) dependencies of one source, over ordered pairs.
struct SourceDependencies {
    node: Vec<f64>,
    edge: Vec<f64>,
}

fn single_source(g: &Graph, s: usize, with_edges: bool) -> SourceDependencies {
    let n = g.node_count();
    let mut dist = vec![UNREACHED; n];
    let mut sigma = vec![0.0f64; n];
    let mut delta = vec![0.0f64; n];
    let mut edge = if with_edges {
        vec![0.0f64; g.edge_count()]
    } else {
        Vec::new()
    };

    let order = bfs_into(g, s, &mut dist, &mut VecDeque::new());
    sigma[s] = 1.0;
    for &v in &order {
        let dv = dist[v];
        for &w in g.adjacent(v) {
            if dist[w] == dv + 1 {
                sigma[w] += sigma[v];
            }
        }
    }

    for &w in order.iter().rev() {
        let dw = dist[w];
        if dw == 0 {
            continue;
        }
        let share = (1.0 + delta[w]) / sigma[w];
        for &v in g.adjacent(w) {
            if dist[v] + 1 == dw {
                let c = sigma[v] * share;
                delta[v] += c;
                if with_edges {
                    edge[g.edge_position(v, w).expect("adjacent pair is an edge")] += c;
                }
            }
        }
    }
    delta[s] = 0.0;
    SourceDependencies { node: delta, edge }
}

fn accumulate(g: &Graph, with_edges: bool, exec: Exec) -> (Vec<f64>, Vec<f64>) {
    let n = g.node_count();
    let init = (vec![0.0; n], vec![0.0; if with_edges { g.edge_count() } else { 0 }]);
    let (mut node, mut edge) = exec.fold_ordered(
        n,
        SOURCE_CHUNK,
        init,
        |s| single_source(g, s, with_edges),
        |(node, edge), dep| {
            for (a, d) in node.iter_mut().zip(&dep.node) {
                *a += d;
            }
            for (a, d) in edge.iter_mut().zip(&dep.edge) {
                *a += d;
            }
        },
    );
    for x in node.iter_mut().chain(edge.iter_mut()) {
        *x /= 2.0;
    }
    (node, edge)
}

/// Node betweenness over unordered pairs, endpoints excluded. Normalized
/// scores divide by `(n-1)(n-2)/2`; graphs with fewer than three nodes score zero.
pub fn betweenness_centrality(g: &Graph, normalized: bool) -> Result<CentralityScores> {
    betweenness_centrality_with(g, normalized, Exec::default())
}

pub fn betweenness_centrality_with(g: &Graph, normalized: bool, exec: Exec) -> Result<CentralityScores> {
    let n = non_empty(g)?;
    let values = if n < 3 {
        vec![0.0; n]
    } else {
        let (mut raw, _) = accumulate(g, false, exec);
        if normalized {
            let scale = ((n - 1) * (n - 2)) as f64 / 2.0;
            for x in &mut raw {
                *x /= scale;
            }
        }
        raw
    };
    Ok(CentralityScores::new(
        g,
        CentralityKind::Betweenness,
        normalized,
        values,
    ))
}

/// Raw edge betweenness over unordered pairs.
pub fn edge_betweenness(g: &Graph) -> Result<EdgeScores> {
    edge_betweenness_with(g, Exec::default())
}

pub fn edge_betweenness_with(g: &Graph, exec: Exec) -> Result<EdgeScores> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let values = edge_betweenness_values(g, exec);
    Ok(EdgeScores {
        edges: g.edges().collect(),
        values,
    })
}

/// Raw edge betweenness aligned with [`Graph::edge_indices`]; zero edges give an empty vector.
pub(crate) fn edge_betweenness_values(g: &Graph, exec: Exec) -> Vec<f64> {
    accumulate(g, true, exec).1
}

/// Scores of the requested kind; betweenness is normalized.
pub fn compute(g: &Graph, kind: CentralityKind) -> Result<CentralityScores> {
    match kind {
        CentralityKind::Degree => degree_centrality(g),
        CentralityKind::Closeness => closeness_centrality(g),
        CentralityKind::Betweenness => betweenness_centrality(g, true),
    }
}
