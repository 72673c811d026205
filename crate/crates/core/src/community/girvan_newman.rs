//! Divisive clustering by repeated removal of the highest-betweenness edge.

use crate::centrality::edge_betweenness_values;
use crate::paths::component_labels;
use crate::{Error, Exec, Graph, NodeId, Result};

use super::Partition;

/// Relative tolerance under which two edge-betweenness scores count as tied.
const TIE_TOLERANCE: f64 = 1e-9;

/// One split of the residual graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Split {
    /// Index into [`Dendrogram::removed`] of the removal that caused the split.
    pub step: usize,
    pub edge: (NodeId, NodeId),
    /// Components of the residual graph, scored on the original graph.
    pub partition: Partition,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Dendrogram {
    /// Every removed edge in removal order.
    pub removed: Vec<(NodeId, NodeId)>,
    /// Snapshots taken whenever the component count grew; counts strictly increase.
    pub splits: Vec<Split>,
}

impl Dendrogram {
    pub fn best_partition(&self) -> Result<&Partition> {
        best_partition_by_modularity(self)
    }
}

/// Runs Girvan–Newman until no edges remain, or until `max_splits` splits
/// have been recorded. Ties between edges go to the lexicographically
/// smallest `(min id, max id)` pair.
pub fn girvan_newman(g: &Graph, max_splits: Option<usize>) -> Result<Dendrogram> {
    girvan_newman_with(g, max_splits, Exec::default())
}

pub fn girvan_newman_with(g: &Graph, max_splits: Option<usize>, exec: Exec) -> Result<Dendrogram> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let mut residual = g.clone();
    let mut dendrogram = Dendrogram::default();
    let (_, mut count) = component_labels(&residual);

    while residual.edge_count() > 0 {
        if max_splits.is_some_and(|cap| dendrogram.splits.len() >= cap) {
            break;
        }
        let scores = edge_betweenness_values(&residual, exec);
        let best = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let cutoff = best - TIE_TOLERANCE * best.abs().max(1.0);
        let pos = scores.iter().position(|&s| s >= cutoff).expect("non-empty scores");

        let (u, v) = residual.remove_edge_at(pos);
        let edge = (residual.id(u), residual.id(v));
        dendrogram.removed.push(edge);

        let (labels, now) = component_labels(&residual);
        if now > count {
            count = now;
            dendrogram.splits.push(Split {
                step: dendrogram.removed.len() - 1,
                edge,
                partition: Partition::from_labels(g, &labels)?,
            });
        }
    }
    Ok(dendrogram)
}

/// The snapshot with maximal modularity; ties go to fewer communities, then
/// to the earlier snapshot.
pub fn best_partition_by_modularity(d: &Dendrogram) -> Result<&Partition> {
    let mut best: Option<&Partition> = None;
    for split in &d.splits {
        let p = &split.partition;
        best = match best {
            Some(b)
                if p.modularity() > b.modularity() + 1e-12
                    || ((p.modularity() - b.modularity()).abs() <= 1e-12
                        && p.community_count() < b.community_count()) =>
            {
                Some(p)
            }
            None => Some(p),
            keep => keep,
        };
    }
    best.ok_or(Error::EmptyDendrogram)
}
