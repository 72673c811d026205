//! Seeded synthetic graphs: Barabási–Albert preferential attachment and
//! Erdős–Rényi G(n, p).

use crate::rng::SplitMix64;
use crate::{Error, Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    BarabasiAlbert { n: usize, m_attach: usize },
    ErdosRenyi { n: usize, p: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorConfig {
    pub model: Model,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn generate(&self) -> Result<Graph> {
        match self.model {
            Model::BarabasiAlbert { n, m_attach } => barabasi_albert(n, m_attach, self.seed),
            Model::ErdosRenyi { n, p } => erdos_renyi(n, p, self.seed),
        }
    }
}

/// Preferential attachment grown from a star on nodes `0..=m_attach`
/// (center 0). Every later node links to `m_attach` distinct existing nodes
/// drawn from an urn holding one entry per edge endpoint; repeated draws are
/// rejected. The result has `m_attach + (n - m_attach - 1) * m_attach` edges.
pub fn barabasi_albert(n: usize, m_attach: usize, seed: u64) -> Result<Graph> {
    if m_attach < 1 || m_attach >= n {
        return Err(Error::BadParams(format!(
            "barabasi-albert needs 1 <= m < n, got n={n} m={m_attach}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges: Vec<(u64, u64)> = (1..=m_attach as u64).map(|leaf| (0, leaf)).collect();
    let mut urn: Vec<u64> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let mut targets: Vec<u64> = Vec::with_capacity(m_attach);

    for v in (m_attach + 1) as u64..n as u64 {
        targets.clear();
        while targets.len() < m_attach {
            let pick = urn[rng.below(urn.len())];
            if !targets.contains(&pick) {
                targets.push(pick);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            urn.push(t);
            urn.push(v);
        }
    }
    Graph::with_nodes(n as u64, &edges)
}

/// G(n, p): pairs `(i, j)`, `i < j`, visited in lexicographic order; each
/// becomes an edge when the next uniform draw is below `p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParams(format!("erdos-renyi needs 0 <= p <= 1, got {p}")));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for i in 0..n as u64 {
        for j in i + 1..n as u64 {
            if rng.next_f64() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::with_nodes(n as u64, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::connected_components;

    #[test]
    fn ba_small() {
        let g = barabasi_albert(3, 1, 99).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (3, 2));
        let g = barabasi_albert(5, 2, 4).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(connected_components(&g).count(), 1);
    }

    #[test]
    fn ba_golden_edges() {
        // reference run of the urn procedure, seed 3
        let g = barabasi_albert(6, 2, 3).unwrap();
        let e: Vec<(u64, u64)> = g.edges().map(|(a, b)| (a.0, b.0)).collect();
        assert_eq!(e, vec![(0, 1), (0, 2), (0, 5), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5)]);
    }

    #[test]
    fn ba_bad_params() {
        assert!(matches!(barabasi_albert(3, 3, 0), Err(Error::BadParams(_))));
        assert!(matches!(barabasi_albert(3, 0, 0), Err(Error::BadParams(_))));
    }

    #[test]
    fn er_extremes() {
        let g = erdos_renyi(7, 0.0, 1).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (7, 0));
        let g = erdos_renyi(7, 1.0, 1).unwrap();
        assert_eq!(g.edge_count(), 21);
        assert!(matches!(erdos_renyi(3, 1.5, 0), Err(Error::BadParams(_))));
    }

    #[test]
    fn er_golden_edges() {
        let g = erdos_renyi(10, 0.3, 1).unwrap();
        let e: Vec<(u64, u64)> = g.edges().map(|(a, b)| (a.0, b.0)).collect();
        assert_eq!(
            e,
            vec![
                (0, 9),
                (1, 8),
                (2, 6),
                (2, 7),
                (2, 9),
                (3, 4),
                (3, 5),
                (3, 8),
                (4, 9),
                (7, 8)
            ]
        );
    }

    #[test]
    fn config_dispatch() {
        let cfg = GeneratorConfig {
            model: Model::BarabasiAlbert { n: 50, m_attach: 3 },
            seed: 8,
        };
        assert_eq!(cfg.generate().unwrap(), barabasi_albert(50, 3, 8).unwrap());
    }
}
