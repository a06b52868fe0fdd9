//! Tree file formats.
//!
//! JSON: `{"vertices":["x1","x2"],"edges":[{"u":"x1","v":"x2","w":1}]}`
//!
//! Plain text: one edge per line as `u v w`; a line holding a single label
//! declares a (possibly isolated) vertex. Vertex order is order of first
//! appearance. Blank lines and `#` comments are ignored.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub u: String,
    pub v: String,
    pub w: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
}

impl TreeFile {
    pub fn from_graph(g: &WeightedGraph) -> Self {
        TreeFile {
            vertices: g.labels().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    u: g.label(e.u).to_string(),
                    v: g.label(e.v).to_string(),
                    w: e.w as i64,
                })
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<WeightedGraph> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            if e.w <= 0 {
                return Err(Error::NonpositiveWeight(e.u.clone(), e.v.clone(), e.w));
            }
            edges.push((e.u.as_str(), e.v.as_str(), e.w as u64));
        }
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        WeightedGraph::new(&vertices, &edges)
    }
}

pub fn parse_json(src: &str) -> Result<WeightedGraph> {
    let file: TreeFile = serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
    file.to_graph()
}

pub fn parse_text(src: &str) -> Result<WeightedGraph> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let declare = |l: &str, vertices: &mut Vec<String>| {
        if !vertices.iter().any(|v| v == l) {
            vertices.push(l.to_string());
        }
    };
    for (lineno, line) in src.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [u] => declare(u, &mut vertices),
            [u, v, w] => {
                let w: i64 = w.parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad weight `{}`", lineno + 1, w))
                })?;
                if w <= 0 {
                    return Err(Error::NonpositiveWeight(u.to_string(), v.to_string(), w));
                }
                declare(u, &mut vertices);
                declare(v, &mut vertices);
                edges.push((u.to_string(), v.to_string(), w as u64));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected `u v w` or `u`, got {} fields",
                    lineno + 1,
                    fields.len()
                )))
            }
        }
    }
    WeightedGraph::new(&vertices, &edges)
}

/// JSON if the first non-blank character is `{`, plain text otherwise.
pub fn parse_auto(src: &str) -> Result<WeightedGraph> {
    if src.trim_start().starts_with('{') {
        parse_json(src)
    } else {
        parse_text(src)
    }
}

pub fn to_json(g: &WeightedGraph) -> String {
    serde_json::to_string(&TreeFile::from_graph(g)).expect("tree files always serialize")
}

pub fn to_text(g: &WeightedGraph) -> String {
    let mut out = String::new();
    // Declare vertices up front so that the inferred order matches exactly.
    for v in g.vertices() {
        out.push_str(g.label(v));
        out.push('\n');
    }
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", g.label(e.u), g.label(e.v), e.w));
    }
    out
}
