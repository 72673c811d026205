//! Undirected simple graph.
//!
//! Nodes carry opaque [`NodeId`]s but are stored densely in ascending id
//! order, so a node's index doubles as its rank under the id ordering. Every
//! tie-break in the crate relies on this.

use std::fmt;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct NodeId(pub u64);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for NodeId {
    fn from(v: u64) -> Self {
        NodeId(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    ids: Vec<NodeId>,
    adj: Vec<Vec<usize>>,
    /// `(u, v)` index pairs with `u < v`, sorted.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a simple graph. Duplicate and reversed edges collapse; nodes in
    /// `isolated` are added even when no edge touches them.
    pub fn from_edges<I, J>(edges: I, isolated: J) -> Result<Graph>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
        J: IntoIterator<Item = NodeId>,
    {
        let mut pairs = Vec::new();
        let mut ids: Vec<NodeId> = isolated.into_iter().collect();
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            ids.push(a);
            ids.push(b);
            pairs.push(if a < b { (a, b) } else { (b, a) });
        }
        ids.sort_unstable();
        ids.dedup();

        let pos = |id: NodeId| ids.binary_search(&id).expect("endpoint registered");
        let mut edges: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (pos(a), pos(b))).collect();
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_parts(ids, edges))
    }

    /// Convenience over `u64` pairs, mostly for tests and generators.
    pub fn from_pairs(edges: &[(u64, u64)]) -> Result<Graph> {
        Self::from_edges(edges.iter().map(|&(a, b)| (NodeId(a), NodeId(b))), [])
    }

    /// Graph on nodes `0..n` with the given edges.
    pub fn with_nodes(n: u64, edges: &[(u64, u64)]) -> Result<Graph> {
        Self::from_edges(edges.iter().map(|&(a, b)| (NodeId(a), NodeId(b))), (0..n).map(NodeId))
    }

    fn from_parts(ids: Vec<NodeId>, edges: Vec<(usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); ids.len()];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { ids, adj, edges }
    }

    pub fn node_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Node ids in ascending order.
    pub fn nodes(&self) -> &[NodeId] {
        &self.ids
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.index_of(id).is_some()
    }

    pub fn index_of(&self, id: NodeId) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    pub(crate) fn require(&self, id: NodeId) -> Result<usize> {
        self.index_of(id).ok_or(Error::UnknownNode(id))
    }

    #[inline]
    pub fn id(&self, index: usize) -> NodeId {
        self.ids[index]
    }

    /// Neighbors of `u`, ascending.
    pub fn neighbors(&self, u: NodeId) -> Result<Vec<NodeId>> {
        let i = self.require(u)?;
        Ok(self.adj[i].iter().map(|&j| self.ids[j]).collect())
    }

    /// Neighbor indices of the node at `index`, ascending.
    #[inline]
    pub fn adjacent(&self, index: usize) -> &[usize] {
        &self.adj[index]
    }

    #[inline]
    pub fn degree_at(&self, index: usize) -> usize {
        self.adj[index].len()
    }

    pub fn degree(&self, u: NodeId) -> Result<usize> {
        Ok(self.degree_at(self.require(u)?))
    }

    /// Edges as id pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.edges.iter().map(|&(u, v)| (self.ids[u], self.ids[v]))
    }

    pub fn edge_indices(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Position of edge `{u, v}` in [`Graph::edge_indices`].
    pub fn edge_position(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, a: NodeId, b: NodeId) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(u), Some(v)) => self.edge_position(u, v).is_some(),
            _ => false,
        }
    }

    /// Subgraph induced by the node indices in `keep` (any order, no duplicates).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        let mut remap = vec![usize::MAX; self.ids.len()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let ids = keep.iter().map(|&i| self.ids[i]).collect();
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| remap[u] != usize::MAX && remap[v] != usize::MAX)
            .map(|&(u, v)| (remap[u], remap[v]))
            .collect();
        Self::from_parts(ids, edges)
    }

    /// Copy of the graph without `victims` and their incident edges.
    pub fn without_nodes(&self, victims: &[NodeId]) -> Result<Graph> {
        let mut dropped = vec![false; self.ids.len()];
        for &v in victims {
            dropped[self.require(v)?] = true;
        }
        let keep: Vec<usize> = (0..self.ids.len()).filter(|&i| !dropped[i]).collect();
        Ok(self.induced(&keep))
    }

    /// Removes the edge at position `pos` of [`Graph::edge_indices`].
    pub(crate) fn remove_edge_at(&mut self, pos: usize) -> (usize, usize) {
        let (u, v) = self.edges.remove(pos);
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adj[a];
            let at = list.binary_search(&b).expect("adjacency in sync with edge list");
            list.remove(at);
        }
        (u, v)
    }
}
