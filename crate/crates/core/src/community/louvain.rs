//! Louvain modularity optimization: local moving, then aggregation of
//! communities into super-nodes, repeated until a level makes no move.
//!
//! Edge weights are integers (an input edge weighs 1) and modularity gains are
//! compared in exact integer arithmetic, so the outcome does not depend on
//! floating-point rounding.

use std::collections::BTreeMap;

use crate::rng::{partial_shuffle, SplitMix64};
use crate::{Error, Graph, Result};

use super::{canonicalize, modularity_from_totals, Partition};

/// Node scan order within each local-moving pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScanOrder {
    /// Ascending node id at the first level, ascending super-node label above it.
    #[default]
    Ascending,
    /// A fresh splitmix64 permutation per level.
    Shuffled(u64),
}

/// Weighted graph private to the optimizer. `loops[i]` is the weight of
/// edges folded inside super-node `i`, each counted once.
struct Level {
    adj: Vec<Vec<(usize, u64)>>,
    loops: Vec<u64>,
}

impl Level {
    fn from_graph(g: &Graph) -> Level {
        let adj = (0..g.node_count())
            .map(|i| g.adjacent(i).iter().map(|&j| (j, 1)).collect())
            .collect();
        Level {
            adj,
            loops: vec![0; g.node_count()],
        }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    fn strength(&self, i: usize) -> u64 {
        self.adj[i].iter().map(|&(_, w)| w).sum::<u64>() + 2 * self.loops[i]
    }

    /// Moves nodes between communities until a full pass changes nothing.
    /// Returns the community of every node and whether anything moved.
    fn local_moving(&self, order: &[usize], two_m: u64) -> (Vec<usize>, bool) {
        let n = self.len();
        let strength: Vec<u64> = (0..n).map(|i| self.strength(i)).collect();
        let mut community: Vec<usize> = (0..n).collect();
        let mut total = strength.clone();
        let mut link = vec![0u64; n];
        let mut touched: Vec<usize> = Vec::new();
        let mut moved_any = false;

        // gain of joining community c, scaled by 2m²: 2m·k_in − Σ_tot·k_i
        let gain = |k_in: u64, tot: u64, k: u64| (two_m as i128) * (k_in as i128) - (tot as i128) * (k as i128);

        loop {
            let mut moved = false;
            for &i in order {
                let own = community[i];
                let k = strength[i];
                for &(j, w) in &self.adj[i] {
                    let c = community[j];
                    if link[c] == 0 {
                        touched.push(c);
                    }
                    link[c] += w;
                }
                total[own] -= k;

                let stay = gain(link[own], total[own], k);
                let mut best: Option<(i128, usize)> = None;
                touched.sort_unstable();
                for &c in &touched {
                    if c == own {
                        continue;
                    }
                    let g = gain(link[c], total[c], k);
                    if best.is_none_or(|(bg, _)| g > bg) {
                        best = Some((g, c));
                    }
                }
                let target = match best {
                    Some((g, c)) if g > stay => c,
                    _ => own,
                };
                total[target] += k;
                if target != own {
                    community[i] = target;
                    moved = true;
                }
                for &c in &touched {
                    link[c] = 0;
                }
                touched.clear();
            }
            if !moved {
                break;
            }
            moved_any = true;
        }
        (community, moved_any)
    }

    /// Collapses each community (dense labels `0..k`) into one super-node.
    fn aggregate(&self, community: &[usize], k: usize) -> Level {
        let mut loops = vec![0u64; k];
        let mut links: Vec<BTreeMap<usize, u64>> = vec![BTreeMap::new(); k];
        for i in 0..self.len() {
            let ci = community[i];
            loops[ci] += self.loops[i];
            for &(j, w) in &self.adj[i] {
                let cj = community[j];
                if ci == cj {
                    if i < j {
                        loops[ci] += w;
                    }
                } else {
                    *links[ci].entry(cj).or_insert(0) += w;
                }
            }
        }
        let adj = links.into_iter().map(|m| m.into_iter().collect()).collect();
        Level { adj, loops }
    }

    fn modularity(&self, two_m: u64) -> f64 {
        let degree: Vec<u64> = (0..self.len()).map(|i| self.strength(i)).collect();
        modularity_from_totals((two_m / 2) as u128, &self.loops, &degree)
    }
}

/// Louvain with the default ascending scan order. The seed only matters for
/// [`ScanOrder::Shuffled`]; pass it through [`louvain_with_order`].
pub fn louvain(g: &Graph) -> Result<Partition> {
    louvain_with_order(g, ScanOrder::Ascending)
}

pub fn louvain_with_order(g: &Graph, order: ScanOrder) -> Result<Partition> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let two_m = 2 * g.edge_count() as u64;
    let mut rng = match order {
        ScanOrder::Shuffled(seed) => Some(SplitMix64::new(seed)),
        ScanOrder::Ascending => None,
    };

    let mut level = Level::from_graph(g);
    let mut membership: Vec<usize> = (0..g.node_count()).collect();
    loop {
        let mut scan: Vec<usize> = (0..level.len()).collect();
        if let Some(rng) = rng.as_mut() {
            let n = scan.len();
            scan = partial_shuffle(&mut scan, n, rng);
        }
        let (community, moved) = level.local_moving(&scan, two_m);
        if !moved {
            break;
        }
        let (dense, k) = canonicalize(&community);
        for m in &mut membership {
            *m = dense[*m];
        }
        level = level.aggregate(&dense, k);
    }
    // modularity read off the final aggregated level; each super-node is a community
    Ok(Partition::with_modularity(g, &membership, level.modularity(two_m)))
}
