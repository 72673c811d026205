//! Edge-list ingestion and canonical report output (JSON, CSV, DOT).
//!
//! Reports serialize with a fixed key order and fixed decimal places, so
//! identical inputs always produce identical bytes.

mod dot;
mod edgelist;

pub use dot::{export_dot, export_dot_labeled, PALETTE};
pub use edgelist::{display_name, emit_edge_list, parse_edge_list, LabelMap};

use serde::{Serialize, Serializer};

use crate::attack::{AttackKind, Comparison};
use crate::centrality::{self, CentralityKind};
use crate::community::{self, Partition};
use crate::{attack, Graph, Result};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Decimal places for path lengths in the resilience report.
pub const PATH_DECIMALS: usize = 4;
/// Decimal places for centralities and modularity.
pub const SCORE_DECIMALS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// A real printed with a fixed number of decimals, in JSON and CSV alike.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fixed(pub f64, pub usize);

impl Fixed {
    pub fn path(x: f64) -> Fixed {
        Fixed(x, PATH_DECIMALS)
    }

    pub fn score(x: f64) -> Fixed {
        Fixed(x, SCORE_DECIMALS)
    }
}

impl std::fmt::Display for Fixed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:.*}", self.1, self.0)
    }
}

impl Serialize for Fixed {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n: serde_json::Number = self.to_string().parse().map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

/// One report cell: an integer count, or a fixed-decimal real.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Count(usize),
    Real(Fixed),
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cell::Count(c) => c.fmt(f),
            Cell::Real(x) => x.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportMeta {
    pub tool_version: String,
    pub n: usize,
    pub m: usize,
    pub fraction: f64,
    pub k: usize,
    pub centrality: CentralityKind,
    pub mode: attack::TargetingMode,
    /// Random-attack seed per trial.
    pub seeds: Vec<u64>,
    pub trials: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricRow {
    pub metric: String,
    pub before: Cell,
    pub after_targeted: Cell,
    pub after_random: Cell,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RemovedNodes {
    pub targeted: Vec<String>,
    /// One list per random trial.
    pub random: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRow {
    pub seed: u64,
    pub component_count: usize,
    pub largest_component_size: usize,
    pub avg_path_length_largest: Fixed,
}

/// Before / after-targeted / after-random table. With several random trials
/// the `after_random` column holds their mean and `random_trials` lists each one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResilienceReport {
    pub meta: ReportMeta,
    pub rows: Vec<MetricRow>,
    pub removed: RemovedNodes,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub random_trials: Option<Vec<TrialRow>>,
}

pub const METRIC_NAMES: [&str; 3] = ["component_count", "largest_component_size", "avg_path_length_largest"];

impl ResilienceReport {
    pub fn new(g: &Graph, cmp: &Comparison, labels: Option<&LabelMap>) -> ResilienceReport {
        let names = |ids: &[crate::NodeId]| ids.iter().map(|&id| display_name(labels, id)).collect::<Vec<_>>();
        let (centrality, mode) = match cmp.targeted.scenario.kind {
            AttackKind::Targeted { centrality, mode } => (centrality, mode),
            AttackKind::Random { .. } => unreachable!("comparison holds a targeted outcome"),
        };
        let seeds: Vec<u64> = cmp
            .random
            .iter()
            .map(|o| match o.scenario.kind {
                AttackKind::Random { seed } => seed,
                AttackKind::Targeted { .. } => unreachable!("random trials hold random outcomes"),
            })
            .collect();

        let (b, t) = (cmp.before, cmp.targeted.after);
        let random_cells: [Cell; 3] = if cmp.random.len() == 1 {
            let r = cmp.random[0].after;
            [
                Cell::Count(r.component_count),
                Cell::Count(r.largest_component_size),
                Cell::Real(Fixed::path(r.avg_path_length_largest)),
            ]
        } else {
            let (c, l, a) = cmp.random_mean();
            [
                Cell::Real(Fixed::path(c)),
                Cell::Real(Fixed::path(l)),
                Cell::Real(Fixed::path(a)),
            ]
        };
        let before = [
            Cell::Count(b.component_count),
            Cell::Count(b.largest_component_size),
            Cell::Real(Fixed::path(b.avg_path_length_largest)),
        ];
        let targeted = [
            Cell::Count(t.component_count),
            Cell::Count(t.largest_component_size),
            Cell::Real(Fixed::path(t.avg_path_length_largest)),
        ];
        let rows = (0..3)
            .map(|i| MetricRow {
                metric: METRIC_NAMES[i].to_owned(),
                before: before[i],
                after_targeted: targeted[i],
                after_random: random_cells[i],
            })
            .collect();

        let random_trials = (cmp.random.len() > 1).then(|| {
            cmp.random
                .iter()
                .zip(&seeds)
                .map(|(o, &seed)| TrialRow {
                    seed,
                    component_count: o.after.component_count,
                    largest_component_size: o.after.largest_component_size,
                    avg_path_length_largest: Fixed::path(o.after.avg_path_length_largest),
                })
                .collect()
        });

        ResilienceReport {
            meta: ReportMeta {
                tool_version: TOOL_VERSION.to_owned(),
                n: g.node_count(),
                m: g.edge_count(),
                fraction: cmp.targeted.scenario.fraction(),
                k: cmp.targeted.removed.len(),
                centrality,
                mode,
                trials: seeds.len(),
                seeds,
            },
            rows,
            removed: RemovedNodes {
                targeted: names(&cmp.targeted.removed),
                random: cmp.random.iter().map(|o| names(&o.removed)).collect(),
            },
            random_trials,
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("report values are serializable");
    out.push(b'\n');
    out
}

fn csv_bytes(rows: impl IntoIterator<Item = Vec<String>>) -> Vec<u8> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

/// Canonical bytes. CSV starts with `metric,before,after_targeted,after_random`
/// and the three metric rows; per-trial rows follow after a blank line when
/// there were several random trials.
pub fn emit_report(r: &ResilienceReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => to_json(r),
        Format::Csv => {
            let mut rows = vec![vec![
                "metric".into(),
                "before".into(),
                "after_targeted".into(),
                "after_random".into(),
            ]];
            for row in &r.rows {
                rows.push(vec![
                    row.metric.clone(),
                    row.before.to_string(),
                    row.after_targeted.to_string(),
                    row.after_random.to_string(),
                ]);
            }
            let mut out = csv_bytes(rows);
            if let Some(trials) = &r.random_trials {
                out.push(b'\n');
                let mut rows = vec![vec![
                    "trial".into(),
                    "seed".into(),
                    "component_count".into(),
                    "largest_component_size".into(),
                    "avg_path_length_largest".into(),
                ]];
                for (i, t) in trials.iter().enumerate() {
                    rows.push(vec![
                        i.to_string(),
                        t.seed.to_string(),
                        t.component_count.to_string(),
                        t.largest_component_size.to_string(),
                        t.avg_path_length_largest.to_string(),
                    ]);
                }
                rows.push(
                    ["mean", ""]
                        .into_iter()
                        .map(String::from)
                        .chain(r.rows.iter().map(|x| x.after_random.to_string()))
                        .collect(),
                );
                out.extend(csv_bytes(rows));
            }
            out
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommunityAlgorithm {
    #[default]
    Louvain,
    GirvanNewman,
}

impl std::str::FromStr for CommunityAlgorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "louvain" => Ok(CommunityAlgorithm::Louvain),
            "girvan-newman" => Ok(CommunityAlgorithm::GirvanNewman),
            other => Err(format!("unknown community algorithm {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphMeta {
    pub tool_version: String,
    pub n: usize,
    pub m: usize,
}

impl GraphMeta {
    fn of(g: &Graph) -> GraphMeta {
        GraphMeta {
            tool_version: TOOL_VERSION.to_owned(),
            n: g.node_count(),
            m: g.edge_count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Assignment {
    pub node: String,
    pub community: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplitRow {
    pub step: usize,
    pub edge: [String; 2],
    pub community_count: usize,
    pub modularity: Fixed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommunityReport {
    pub meta: GraphMeta,
    pub algorithm: CommunityAlgorithm,
    pub community_count: usize,
    pub modularity: Fixed,
    pub assignment: Vec<Assignment>,
    /// Girvan–Newman dendrogram levels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub splits: Option<Vec<SplitRow>>,
    #[serde(skip)]
    pub partition: Partition,
}

/// Detects communities; Girvan–Newman reports its best-modularity level.
pub fn detect_communities(
    g: &Graph,
    algorithm: CommunityAlgorithm,
    labels: Option<&LabelMap>,
) -> Result<CommunityReport> {
    let (partition, splits) = match algorithm {
        CommunityAlgorithm::Louvain => (community::louvain(g)?, None),
        CommunityAlgorithm::GirvanNewman => {
            let d = community::girvan_newman(g, None)?;
            let splits = d
                .splits
                .iter()
                .map(|s| SplitRow {
                    step: s.step,
                    edge: [display_name(labels, s.edge.0), display_name(labels, s.edge.1)],
                    community_count: s.partition.community_count(),
                    modularity: Fixed::score(s.partition.modularity()),
                })
                .collect();
            (d.best_partition()?.clone(), Some(splits))
        }
    };
    Ok(CommunityReport {
        meta: GraphMeta::of(g),
        algorithm,
        community_count: partition.community_count(),
        modularity: Fixed::score(partition.modularity()),
        assignment: partition
            .iter()
            .map(|(id, c)| Assignment {
                node: display_name(labels, id),
                community: c,
            })
            .collect(),
        splits,
        partition,
    })
}

pub fn emit_communities(r: &CommunityReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => to_json(r),
        Format::Csv => csv_bytes(
            std::iter::once(vec!["node".to_owned(), "community".to_owned()]).chain(
                r.assignment
                    .iter()
                    .map(|a| vec![a.node.clone(), a.community.to_string()]),
            ),
        ),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricsSummary {
    pub component_count: usize,
    pub largest_component_size: usize,
    pub avg_path_length_largest: Fixed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommunitySummary {
    pub algorithm: CommunityAlgorithm,
    pub community_count: usize,
    pub modularity: Fixed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeRow {
    pub node: String,
    pub degree: Fixed,
    pub closeness: Fixed,
    pub betweenness: Fixed,
    /// Absent when the graph has no edges.
    pub community: Option<usize>,
}

/// Centralities, communities and fragmentation metrics of one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub meta: GraphMeta,
    pub metrics: MetricsSummary,
    pub communities: Option<CommunitySummary>,
    pub nodes: Vec<NodeRow>,
}

pub fn analyze(g: &Graph, algorithm: CommunityAlgorithm, labels: Option<&LabelMap>) -> Result<AnalysisReport> {
    let metrics = attack::measure(g)?;
    let degree = centrality::degree_centrality(g)?;
    let closeness = centrality::closeness_centrality(g)?;
    let betweenness = centrality::betweenness_centrality(g, true)?;
    let communities = if g.edge_count() > 0 {
        Some(detect_communities(g, algorithm, labels)?)
    } else {
        None
    };

    let nodes = (0..g.node_count())
        .map(|i| NodeRow {
            node: display_name(labels, g.id(i)),
            degree: Fixed::score(degree.values()[i]),
            closeness: Fixed::score(closeness.values()[i]),
            betweenness: Fixed::score(betweenness.values()[i]),
            community: communities.as_ref().map(|c| c.partition.labels()[i]),
        })
        .collect();
    Ok(AnalysisReport {
        meta: GraphMeta::of(g),
        metrics: MetricsSummary {
            component_count: metrics.component_count,
            largest_component_size: metrics.largest_component_size,
            avg_path_length_largest: Fixed::path(metrics.avg_path_length_largest),
        },
        communities: communities.map(|c| CommunitySummary {
            algorithm: c.algorithm,
            community_count: c.community_count,
            modularity: c.modularity,
        }),
        nodes,
    })
}

pub fn emit_analysis(r: &AnalysisReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => to_json(r),
        Format::Csv => csv_bytes(
            std::iter::once(
                ["node", "degree", "closeness", "betweenness", "community"]
                    .map(String::from)
                    .to_vec(),
            )
            .chain(r.nodes.iter().map(|n| {
                vec![
                    n.node.clone(),
                    n.degree.to_string(),
                    n.closeness.to_string(),
                    n.betweenness.to_string(),
                    n.community.map(|c| c.to_string()).unwrap_or_default(),
                ]
            })),
        ),
    }
}
