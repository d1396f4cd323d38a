//! JSON graph documents and Graphviz export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::artin::w_succ;
use crate::graph::{ColoredGraph, Edge, EdgeColor, GraphError, PairOrigin, WTag};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub format_version: u32,
    pub n: u32,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wlabel: Option<WTag>,
    /// Ids of the two factor vertices, for fiber-product vertices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    pub left: u64,
    pub right: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_wlabel: Option<WTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_wlabel: Option<WTag>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub src: u64,
    pub dst: u64,
    pub color: EdgeColor,
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl From<GraphError> for IoError {
    fn from(e: GraphError) -> Self {
        IoError::Invariant(e.to_string())
    }
}

impl GraphDocument {
    pub fn from_graph(g: &ColoredGraph, n: u32) -> Self {
        let vertices = (0..g.vertex_count())
            .map(|v| VertexDoc {
                id: g.id(v),
                wlabel: g.wlabel(v),
                pair: g.pairs().map(|p| {
                    let PairOrigin { left, right, left_tag, right_tag } = p[v];
                    PairDoc { left, right, left_wlabel: left_tag, right_wlabel: right_tag }
                }),
            })
            .collect();
        let edges = g.edges().iter().map(|e| EdgeDoc { src: g.id(e.src), dst: g.id(e.dst), color: e.color }).collect();
        GraphDocument { format_version: FORMAT_VERSION, n, vertices, edges, basepoint: g.basepoint().map(|b| g.id(b)) }
    }

    /// Build and validate the graph described by the document.
    pub fn to_graph(&self) -> Result<ColoredGraph, IoError> {
        let fail = |msg: String| Err(IoError::Invariant(msg));
        if self.format_version != FORMAT_VERSION {
            return fail(format!("unsupported format_version {}", self.format_version));
        }
        let ids: Vec<u64> = self.vertices.iter().map(|v| v.id).collect();
        let mut index = std::collections::HashMap::with_capacity(ids.len());
        for (i, &id) in ids.iter().enumerate() {
            if index.insert(id, i).is_some() {
                return fail(format!("duplicate vertex id {id}"));
            }
        }
        let lookup = |id: u64| index.get(&id).copied().ok_or_else(|| IoError::Invariant(format!("unknown vertex id {id}")));
        let edges = self
            .edges
            .iter()
            .map(|e| Ok(Edge::new(lookup(e.src)?, lookup(e.dst)?, e.color)))
            .collect::<Result<Vec<_>, IoError>>()?;
        let basepoint = self.basepoint.map(lookup).transpose()?;

        let labeled = self.vertices.iter().filter(|v| v.wlabel.is_some()).count();
        let labels = match labeled {
            0 => None,
            k if k == self.vertices.len() => Some(self.vertices.iter().map(|v| v.wlabel.expect("counted")).collect::<Vec<_>>()),
            _ => return fail("W-labels must be given for every vertex or for none".into()),
        };
        if let Some(labels) = &labels {
            let n = self.n;
            if n < 4 {
                return fail(format!("labeled documents need n at least 4, got {n}"));
            }
            for (v, tag) in labels.iter().enumerate() {
                if tag.base == 0 || tag.base > n {
                    return fail(format!("vertex {} has W-label base {} outside 1..{n}", ids[v], tag.base));
                }
                if tag.barred && tag.base != 1 && tag.base != n - 1 {
                    return fail(format!("vertex {} has a barred label on base {}", ids[v], tag.base));
                }
            }
            for e in &edges {
                let (s, d) = (labels[e.src].base, labels[e.dst].base);
                if w_succ(n, s, e.color) != Some(d) {
                    return fail(format!("{}-edge {} -> {} does not lie over an edge of W({n})", e.color, ids[e.src], ids[e.dst]));
                }
            }
        }
        let pairs = match self.vertices.iter().filter(|v| v.pair.is_some()).count() {
            0 => None,
            k if k == self.vertices.len() => Some(
                self.vertices
                    .iter()
                    .map(|v| {
                        let p = v.pair.as_ref().expect("counted");
                        PairOrigin { left: p.left, right: p.right, left_tag: p.left_wlabel, right_tag: p.right_wlabel }
                    })
                    .collect(),
            ),
            _ => return fail("pairs must be given for every vertex or for none".into()),
        };

        let g = ColoredGraph::from_parts(ids, edges, basepoint, labels)?;
        g.tables()?;
        Ok(g.with_pairs(pairs))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn encode_graph(g: &ColoredGraph, n: u32) -> String {
    GraphDocument::from_graph(g, n).to_json()
}

/// Parse and validate a document; returns the graph and the document's `n`.
pub fn decode_graph(text: &str) -> Result<(ColoredGraph, u32), IoError> {
    let doc = GraphDocument::from_json(text)?;
    Ok((doc.to_graph()?, doc.n))
}

/// Graphviz rendering: x red, y green, δ yellow; W-labels as captions.
pub fn to_dot(g: &ColoredGraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..g.vertex_count() {
        let caption = match g.wlabel(v) {
            Some(t) if t.barred => format!("{}\u{0305}", t.base),
            Some(t) => t.base.to_string(),
            None => g.id(v).to_string(),
        };
        let shape = if g.basepoint() == Some(v) { ", shape=doublecircle" } else { "" };
        writeln!(out, "  v{} [label=\"{caption}\"{shape}];", g.id(v)).unwrap();
    }
    for e in g.edges() {
        let (color, label) = match e.color {
            EdgeColor::X => ("red", "x"),
            EdgeColor::Y => ("green", "y"),
            EdgeColor::D => ("\"#e6c200\"", "δ"),
        };
        writeln!(out, "  v{} -> v{} [color={color}, label=\"{label}\"];", g.id(e.src), g.id(e.dst)).unwrap();
    }
    out.push_str("}\n");
    out
}
