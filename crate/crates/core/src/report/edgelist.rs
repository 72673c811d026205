//! Whitespace-separated edge-list text.
//!
//! One edge per line as two labels. Blank lines and lines starting with `#`
//! are skipped. Labels get dense ids in order of first appearance.

use std::collections::HashMap;

use crate::{Error, Graph, NodeId, Result};

/// Bidirectional label ↔ id mapping.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabelMap {
    labels: Vec<String>,
    ids: HashMap<String, NodeId>,
}

impl LabelMap {
    fn intern(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = NodeId(self.labels.len() as u64);
        self.labels.push(label.to_owned());
        self.ids.insert(label.to_owned(), id);
        id
    }

    pub fn id(&self, label: &str) -> Option<NodeId> {
        self.ids.get(label).copied()
    }

    pub fn label(&self, id: NodeId) -> Option<&str> {
        self.labels.get(id.0 as usize).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Display name for `id`: its label when known, otherwise the number.
pub fn display_name(labels: Option<&LabelMap>, id: NodeId) -> String {
    labels
        .and_then(|l| l.label(id))
        .map_or_else(|| id.to_string(), str::to_owned)
}

pub fn parse_edge_list(text: &str) -> Result<(Graph, LabelMap)> {
    let mut labels = LabelMap::default();
    let mut edges = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::MalformedLine(no + 1));
        };
        if a == b {
            return Err(Error::SelfLoopLabel(a.to_owned()));
        }
        edges.push((labels.intern(a), labels.intern(b)));
    }
    Ok((Graph::from_edges(edges, [])?, labels))
}

/// `a b` per edge in the graph's edge order, LF-terminated.
pub fn emit_edge_list(g: &Graph, labels: Option<&LabelMap>) -> String {
    let mut out = String::new();
    for (a, b) in g.edges() {
        out.push_str(&display_name(labels, a));
        out.push(' ');
        out.push_str(&display_name(labels, b));
        out.push('\n');
    }
    out
}
