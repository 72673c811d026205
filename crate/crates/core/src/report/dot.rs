//! Graphviz DOT export.

use std::fmt::Write;

use crate::community::Partition;
use crate::Graph;

use super::edgelist::LabelMap;

/// ColorBrewer "Paired"; community `c` gets `PALETTE[c % 12]`.
pub const PALETTE: [&str; 12] = [
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c", "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a",
    "#ffff99", "#b15928",
];

pub fn export_dot(g: &Graph, partition: Option<&Partition>) -> String {
    export_dot_labeled(g, partition, None)
}

/// DOT text with nodes ascending by id, then edges. Labels, when given, are
/// attached as `label` attributes.
pub fn export_dot_labeled(g: &Graph, partition: Option<&Partition>, labels: Option<&LabelMap>) -> String {
    let mut out = String::from("graph G {\n");
    for &id in g.nodes() {
        let mut attrs = Vec::new();
        if let Some(name) = labels.and_then(|l| l.label(id)) {
            attrs.push(format!("label=\"{}\"", escape(name)));
        }
        if let Some(c) = partition.and_then(|p| p.label(id)) {
            attrs.push(format!("color=\"{}\"", PALETTE[c % PALETTE.len()]));
            attrs.push("style=filled".to_owned());
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {id};");
        } else {
            let _ = writeln!(out, "  {id} [{}];", attrs.join(", "));
        }
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
