//! Graphviz export.

use std::fmt::Write;

use crate::dynamics::StateGraph;
use crate::neighborhood::HasseSlice;

/// A minimal directed graph document. Nodes and edges are emitted in
/// insertion order.
type Attrs = Vec<(String, String)>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DotGraph {
    name: String,
    nodes: Vec<(String, Attrs)>,
    edges: Vec<(String, String, Attrs)>,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn attrs(list: &[(String, String)]) -> String {
    if list.is_empty() {
        return String::new();
    }
    let body: Vec<String> = list
        .iter()
        .map(|(k, v)| format!("{k}={}", quote(v)))
        .collect();
    format!(" [{}]", body.join(", "))
}

impl DotGraph {
    pub fn new(name: &str) -> Self {
        DotGraph {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn node(&mut self, id: &str, attributes: &[(&str, &str)]) {
        self.nodes.push((id.to_string(), own(attributes)));
    }

    pub fn edge(&mut self, from: &str, to: &str, attributes: &[(&str, &str)]) {
        self.edges
            .push((from.to_string(), to.to_string(), own(attributes)));
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {} {{", quote(&self.name));
        for (id, a) in &self.nodes {
            let _ = writeln!(out, "  {}{};", quote(id), attrs(a));
        }
        for (from, to, a) in &self.edges {
            let _ = writeln!(out, "  {} -> {}{};", quote(from), quote(to), attrs(a));
        }
        out.push_str("}\n");
        out
    }
}

fn own(attributes: &[(&str, &str)]) -> Vec<(String, String)> {
    attributes
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

/// States in numeric order; stable states are filled.
pub fn state_graph_dot(graph: &StateGraph) -> DotGraph {
    let mut dot = DotGraph::new(match graph.mode() {
        crate::dynamics::UpdateMode::Async => "stg_async",
        crate::dynamics::UpdateMode::Sync => "stg_sync",
    });
    for i in 0..graph.state_count() {
        let s = crate::state::State::new(i as u64, graph.dim());
        if graph.is_stable(s) {
            dot.node(
                &s.to_string(),
                &[
                    ("style", "filled"),
                    ("fillcolor", "red"),
                    ("stable", "true"),
                ],
            );
        } else {
            dot.node(&s.to_string(), &[]);
        }
    }
    for (from, to) in graph.edges() {
        dot.edge(&from.to_string(), &to.to_string(), &[]);
    }
    dot
}

/// Center, parents and children with rule-tagged edges pointing upward,
/// siblings as dashed nodes.
pub fn hasse_slice_dot(slice: &HasseSlice) -> DotGraph {
    let mut dot = DotGraph::new("hasse");
    let center = slice.center.to_string();
    dot.node(&center, &[("shape", "box"), ("style", "bold")]);
    for p in &slice.parents {
        dot.node(&p.target.to_string(), &[("role", "parent")]);
    }
    for c in &slice.children {
        dot.node(&c.target.to_string(), &[("role", "child")]);
    }
    for s in &slice.siblings {
        dot.node(&s.to_string(), &[("role", "sibling"), ("style", "dashed")]);
    }
    for p in &slice.parents {
        let label = format!("{} +{}", p.rule, p.delta_true_states());
        dot.edge(&center, &p.target.to_string(), &[("label", &label)]);
    }
    for c in &slice.children {
        let label = format!("{} +{}", c.rule, c.delta_true_states());
        dot.edge(&c.target.to_string(), &center, &[("label", &label)]);
    }
    dot
}
