//! JSON and DIMACS graph serialisation.
//!
//! JSON documents look like `{"n": 4, "edges": [[0,1],[1,2]]}` with
//! `u < v` and edges sorted; CFI exports add optional `colors` and `names`.
//! DIMACS files are 1-based (`p edge n m`, `e u v`, `c` comments).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::BaseGraph;

/// Serialised graph with optional vertex colours and names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl GraphDoc {
    pub fn from_graph(g: &BaseGraph) -> Self {
        GraphDoc { n: g.n(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(), colors: None, names: None }
    }

    pub fn graph(&self) -> Result<BaseGraph> {
        let edges: Vec<_> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = BaseGraph::from_edges(self.n, &edges)?;
        for (field, len) in
            [("colors", self.colors.as_ref().map(Vec::len)), ("names", self.names.as_ref().map(Vec::len))]
        {
            if let Some(len) = len {
                if len != self.n {
                    return Err(Error::Json(format!("{field} has length {len}, expected {}", self.n)));
                }
            }
        }
        Ok(g)
    }
}

pub fn to_json(doc: &GraphDoc) -> String {
    serde_json::to_string(doc).expect("graph documents always serialise")
}

pub fn from_json(text: &str) -> Result<GraphDoc> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    doc.graph()?;
    Ok(doc)
}

pub fn write_dimacs(g: &BaseGraph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Parses a DIMACS edge file. Duplicate edges collapse; loops are errors.
pub fn read_dimacs(text: &str) -> Result<BaseGraph> {
    let mut graph: Option<BaseGraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: String| Error::Parse { line, msg };
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(err("duplicate problem line".into()));
                }
                if toks.next() != Some("edge") {
                    return Err(err("expected `p edge n m`".into()));
                }
                let n = parse_num(toks.next(), line)?;
                parse_num(toks.next(), line)?;
                graph = Some(BaseGraph::empty(n));
            }
            Some("e") => {
                let g = graph.as_mut().ok_or_else(|| err("edge before problem line".into()))?;
                let u = parse_num(toks.next(), line)?;
                let v = parse_num(toks.next(), line)?;
                if u == 0 || v == 0 {
                    return Err(err("vertices are numbered from 1".into()));
                }
                g.add_edge(u - 1, v - 1).map_err(|e| err(e.to_string()))?;
            }
            Some(tok) => return Err(err(format!("unknown line type `{tok}`"))),
        }
    }
    graph.ok_or(Error::Parse { line: 0, msg: "missing problem line".into() })
}

fn parse_num(tok: Option<&str>, line: usize) -> Result<usize> {
    let tok = tok.ok_or(Error::Parse { line, msg: "missing number".into() })?;
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("`{tok}` is not a number") })
}
