//! BFS, connected components and average shortest-path length.

use std::collections::{BTreeMap, VecDeque};

use crate::rng::{partial_shuffle, SplitMix64};
use crate::{Error, Exec, Graph, NodeId, Result};

pub(crate) const UNREACHED: u32 = u32::MAX;

/// Unweighted BFS from `source` (an index), writing hop counts into `dist`
/// and returning the nodes in visit order.
pub(crate) fn bfs_into(g: &Graph, source: usize, dist: &mut [u32], queue: &mut VecDeque<usize>) -> Vec<usize> {
    dist.fill(UNREACHED);
    queue.clear();
    let mut order = Vec::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        let next = dist[u] + 1;
        for &w in g.adjacent(u) {
            if dist[w] == UNREACHED {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    order
}

/// Hop distance from `source` to every node it reaches. Unreachable nodes are absent.
pub fn bfs_distances(g: &Graph, source: NodeId) -> Result<BTreeMap<NodeId, usize>> {
    let s = g.require(source)?;
    let mut dist = vec![UNREACHED; g.node_count()];
    let order = bfs_into(g, s, &mut dist, &mut VecDeque::new());
    Ok(order.into_iter().map(|i| (g.id(i), dist[i] as usize)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    /// Node ids per component, each ascending. Components are ordered by size
    /// descending, then by smallest member id.
    pub components: Vec<Vec<NodeId>>,
}

impl ComponentDecomposition {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn largest_size(&self) -> usize {
        self.components.first().map_or(0, Vec::len)
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }
}

/// Component label per node index; labels follow smallest member index.
pub(crate) fn component_labels(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.node_count();
    let mut label = vec![usize::MAX; n];
    let mut stack = Vec::new();
    let mut count = 0;
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = count;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &w in g.adjacent(u) {
                if label[w] == usize::MAX {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

fn component_index_sets(g: &Graph) -> Vec<Vec<usize>> {
    let (label, count) = component_labels(g);
    let mut sets = vec![Vec::new(); count];
    for (i, &c) in label.iter().enumerate() {
        sets[c].push(i);
    }
    // labels were issued in order of smallest member, so a stable sort by
    // size keeps the id tie-break
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    sets
}

pub fn connected_components(g: &Graph) -> ComponentDecomposition {
    let components = component_index_sets(g)
        .into_iter()
        .map(|set| set.into_iter().map(|i| g.id(i)).collect())
        .collect();
    ComponentDecomposition { components }
}

/// Induced subgraph on the first component of [`connected_components`].
pub fn largest_component_subgraph(g: &Graph) -> Result<Graph> {
    let sets = component_index_sets(g);
    let first = sets.first().ok_or(Error::EmptyGraph)?;
    Ok(g.induced(first))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PathLengthMode {
    #[default]
    Exact,
    /// Mean over BFS trees rooted at `sources` nodes drawn without
    /// replacement (splitmix64 partial Fisher–Yates over ascending ids).
    Sampled { sources: usize, seed: u64 },
}

/// Mean shortest-path length over all unordered node pairs of a connected graph.
pub fn average_path_length(g: &Graph, mode: PathLengthMode) -> Result<f64> {
    average_path_length_with(g, mode, Exec::default())
}

pub fn average_path_length_with(g: &Graph, mode: PathLengthMode, exec: Exec) -> Result<f64> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let (_, count) = component_labels(g);
    if count > 1 {
        return Err(Error::Disconnected(count));
    }
    if n == 1 {
        return Ok(0.0);
    }

    let sources: Vec<usize> = match mode {
        PathLengthMode::Exact => (0..n).collect(),
        PathLengthMode::Sampled { sources, seed } => {
            let mut pool: Vec<usize> = (0..n).collect();
            partial_shuffle(&mut pool, sources.max(1), &mut SplitMix64::new(seed))
        }
    };

    // integer sums make the reduction order irrelevant
    let total: u64 = exec
        .map(0..sources.len(), |i| {
            let mut dist = vec![UNREACHED; n];
            bfs_into(g, sources[i], &mut dist, &mut VecDeque::new());
            dist.iter().map(|&d| d as u64).sum::<u64>()
        })
        .into_iter()
        .sum();
    Ok(total as f64 / (sources.len() as f64 * (n - 1) as f64))
}
