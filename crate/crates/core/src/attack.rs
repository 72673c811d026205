//! Node-removal attacks and the fragmentation they cause.
//!
//! A targeted attack removes the top `⌊f·n⌋` nodes of a centrality ranking
//! (betweenness by default); a random attack removes a uniform sample of the
//! same size. Both are measured by component count, largest-component size
//! and the mean shortest-path length inside the largest component.

use crate::centrality::{self, CentralityKind};
use crate::paths::{average_path_length_with, connected_components, largest_component_subgraph, PathLengthMode};
use crate::rng::{partial_shuffle, SplitMix64};
use crate::{Error, Exec, Graph, NodeId, Result};

/// Slack absorbing representation error in `f·n` (e.g. `(1.0/3.0) * 6.0`).
const FLOOR_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TargetingMode {
    /// Rank once on the intact graph, remove the top `k` together.
    #[default]
    Static,
    /// Recompute the ranking after every single removal.
    Adaptive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AttackKind {
    Targeted {
        centrality: CentralityKind,
        mode: TargetingMode,
    },
    Random {
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttackScenario {
    pub kind: AttackKind,
    fraction: f64,
}

impl AttackScenario {
    pub const DEFAULT_FRACTION: f64 = 1.0 / 3.0;

    /// Static betweenness targeting.
    pub fn targeted(fraction: f64) -> Result<Self> {
        Self::new(
            AttackKind::Targeted {
                centrality: CentralityKind::Betweenness,
                mode: TargetingMode::Static,
            },
            fraction,
        )
    }

    pub fn random(fraction: f64, seed: u64) -> Result<Self> {
        Self::new(AttackKind::Random { seed }, fraction)
    }

    pub fn new(kind: AttackKind, fraction: f64) -> Result<Self> {
        if !(fraction > 0.0 && fraction < 1.0) {
            return Err(Error::BadFraction(fraction));
        }
        Ok(AttackScenario { kind, fraction })
    }

    pub fn with_centrality(mut self, centrality: CentralityKind) -> Self {
        if let AttackKind::Targeted { mode, .. } = self.kind {
            self.kind = AttackKind::Targeted { centrality, mode };
        }
        self
    }

    pub fn with_mode(mut self, mode: TargetingMode) -> Self {
        if let AttackKind::Targeted { centrality, .. } = self.kind {
            self.kind = AttackKind::Targeted { centrality, mode };
        }
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        if let AttackKind::Random { .. } = self.kind {
            self.kind = AttackKind::Random { seed };
        }
        self
    }

    pub fn fraction(&self) -> f64 {
        self.fraction
    }

    /// `⌊f·n⌋`.
    pub fn victim_count(&self, n: usize) -> usize {
        (self.fraction * n as f64 + FLOOR_SLACK).floor() as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FragmentationMetrics {
    pub component_count: usize,
    pub largest_component_size: usize,
    pub avg_path_length_largest: f64,
}

impl FragmentationMetrics {
    pub const EMPTY: FragmentationMetrics = FragmentationMetrics {
        component_count: 0,
        largest_component_size: 0,
        avg_path_length_largest: 0.0,
    };
}

#[derive(Debug, Clone, PartialEq)]
pub struct AttackOutcome {
    pub scenario: AttackScenario,
    /// Victims in selection order.
    pub removed: Vec<NodeId>,
    pub before: FragmentationMetrics,
    pub after: FragmentationMetrics,
}

/// How the largest component's path length is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PathLengthPolicy {
    #[default]
    Exact,
    /// Exact up to `threshold` nodes, sampled from `sources` BFS roots above it.
    SampledAbove {
        threshold: usize,
        sources: usize,
        seed: u64,
    },
}

impl PathLengthPolicy {
    pub const DEFAULT_THRESHOLD: usize = 2000;

    fn mode_for(&self, n: usize) -> PathLengthMode {
        match *self {
            PathLengthPolicy::SampledAbove {
                threshold,
                sources,
                seed,
            } if n > threshold => PathLengthMode::Sampled { sources, seed },
            _ => PathLengthMode::Exact,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AttackConfig {
    pub path_length: PathLengthPolicy,
    pub exec: Exec,
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k == 0 || k > g.node_count() {
        return Err(Error::BadK { k, n: g.node_count() });
    }
    Ok(())
}

/// The `k` highest-ranked nodes, ranked by (score desc, id asc).
pub fn select_targets_targeted(
    g: &Graph,
    centrality: CentralityKind,
    k: usize,
    mode: TargetingMode,
) -> Result<Vec<NodeId>> {
    check_k(g, k)?;
    match mode {
        TargetingMode::Static => {
            let mut ranking = centrality::compute(g, centrality)?.ranking();
            ranking.truncate(k);
            Ok(ranking)
        }
        TargetingMode::Adaptive => {
            let mut residual = g.clone();
            let mut removed = Vec::with_capacity(k);
            for _ in 0..k {
                let top = centrality::compute(&residual, centrality)?.ranking()[0];
                removed.push(top);
                residual = residual.without_nodes(&[top])?;
            }
            Ok(removed)
        }
    }
}

/// Uniform sample of `k` nodes without replacement: partial Fisher–Yates over
/// the ascending node list, driven by splitmix64 seeded with `seed`.
pub fn select_targets_random(g: &Graph, k: usize, seed: u64) -> Result<Vec<NodeId>> {
    check_k(g, k)?;
    let mut pool = g.nodes().to_vec();
    Ok(partial_shuffle(&mut pool, k, &mut SplitMix64::new(seed)))
}

pub fn apply_removal(g: &Graph, victims: &[NodeId]) -> Result<Graph> {
    g.without_nodes(victims)
}

pub fn measure(g: &Graph) -> Result<FragmentationMetrics> {
    measure_with(g, &AttackConfig::default())
}

pub fn measure_with(g: &Graph, config: &AttackConfig) -> Result<FragmentationMetrics> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let components = connected_components(g);
    let largest = largest_component_subgraph(g)?;
    let mode = config.path_length.mode_for(largest.node_count());
    Ok(FragmentationMetrics {
        component_count: components.count(),
        largest_component_size: components.largest_size(),
        avg_path_length_largest: average_path_length_with(&largest, mode, config.exec)?,
    })
}

pub fn run_scenario(g: &Graph, scenario: &AttackScenario) -> Result<AttackOutcome> {
    run_scenario_with(g, scenario, &AttackConfig::default())
}

pub fn run_scenario_with(g: &Graph, scenario: &AttackScenario, config: &AttackConfig) -> Result<AttackOutcome> {
    let before = measure_with(g, config)?;
    run_measured(g, scenario, before, config)
}

fn run_measured(
    g: &Graph,
    scenario: &AttackScenario,
    before: FragmentationMetrics,
    config: &AttackConfig,
) -> Result<AttackOutcome> {
    let n = g.node_count();
    let k = scenario.victim_count(n);
    if k == 0 {
        return Err(Error::FractionTooSmall {
            fraction: scenario.fraction,
            n,
        });
    }
    let removed = match scenario.kind {
        AttackKind::Targeted { centrality, mode } => select_targets_targeted(g, centrality, k, mode)?,
        AttackKind::Random { seed } => select_targets_random(g, k, seed)?,
    };
    let residual = apply_removal(g, &removed)?;
    let after = if residual.is_empty() {
        FragmentationMetrics::EMPTY
    } else {
        measure_with(&residual, config)?
    };
    Ok(AttackOutcome {
        scenario: *scenario,
        removed,
        before,
        after,
    })
}

/// Targeted versus random attack on the same intact graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub before: FragmentationMetrics,
    pub targeted: AttackOutcome,
    /// One outcome per random trial.
    pub random: Vec<AttackOutcome>,
}

impl Comparison {
    /// Mean of the random trials' after-attack metrics as
    /// `(components, largest size, path length)`.
    pub fn random_mean(&self) -> (f64, f64, f64) {
        let t = self.random.len() as f64;
        let sum = self.random.iter().fold((0.0, 0.0, 0.0), |acc, o| {
            (
                acc.0 + o.after.component_count as f64,
                acc.1 + o.after.largest_component_size as f64,
                acc.2 + o.after.avg_path_length_largest,
            )
        });
        (sum.0 / t, sum.1 / t, sum.2 / t)
    }
}

pub fn compare_scenarios(g: &Graph, targeted: &AttackScenario, random: &AttackScenario) -> Result<Comparison> {
    compare_scenarios_with(g, targeted, random, 1, &AttackConfig::default())
}

/// Runs the targeted scenario once and the random scenario `trials` times;
/// trial `i` uses seed `seed + i` (wrapping).
pub fn compare_scenarios_with(
    g: &Graph,
    targeted: &AttackScenario,
    random: &AttackScenario,
    trials: usize,
    config: &AttackConfig,
) -> Result<Comparison> {
    if targeted.fraction != random.fraction {
        return Err(Error::MismatchedFraction(targeted.fraction, random.fraction));
    }
    let AttackKind::Targeted { .. } = targeted.kind else {
        return Err(Error::WrongScenario("first scenario must be targeted"));
    };
    let AttackKind::Random { seed } = random.kind else {
        return Err(Error::WrongScenario("second scenario must be random"));
    };
    let before = measure_with(g, config)?;
    let trials = trials.max(1);
    let (t, r) = config.exec.join(
        || run_measured(g, targeted, before, config),
        || {
            config
                .exec
                .map(0..trials, |i| {
                    run_measured(g, &random.with_seed(seed.wrapping_add(i as u64)), before, config)
                })
                .into_iter()
                .collect::<Result<Vec<_>>>()
        },
    );
    Ok(Comparison {
        before,
        targeted: t?,
        random: r?,
    })
}
