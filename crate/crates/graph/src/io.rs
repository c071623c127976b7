//! Graph JSON and edge-list text formats.
//!
//! Graph JSON: `{"n": 4, "edges": [[0,1],...], "rotation": {"0": [1,2,3], ...}}`
//! where `rotation` is optional and lists neighbors clockwise.
//! Edge list: one `u v` pair per line, 0-indexed; `#` starts a comment.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{Graph, GraphError, RotationScheme};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotation: Option<BTreeMap<String, Vec<usize>>>,
}

/// Parses Graph JSON. The rotation, when present, must cover every vertex.
pub fn parse_graph_json(text: &str) -> Result<(Graph, Option<RotationScheme>), GraphError> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
    if doc.n > 1_000_000 {
        return Err(GraphError::Parse(format!("n = {} is too large", doc.n)));
    }
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
    let g = Graph::from_edges(doc.n, &edges)?;
    let rot = match doc.rotation {
        None => None,
        Some(map) => {
            let mut order = vec![None; doc.n];
            for (k, ring) in map {
                let v: usize = k.parse().map_err(|_| GraphError::Parse(format!("bad vertex key {k:?}")))?;
                if v >= doc.n {
                    return Err(GraphError::VertexOutOfRange(v, doc.n));
                }
                order[v] = Some(ring);
            }
            let order: Vec<Vec<usize>> = order
                .into_iter()
                .enumerate()
                .map(|(v, o)| match o {
                    Some(o) => Ok(o),
                    None if g.degree(v) == 0 => Ok(Vec::new()),
                    None => Err(GraphError::InconsistentRotation(v)),
                })
                .collect::<Result<_, _>>()?;
            Some(RotationScheme::from_clockwise(&g, order)?)
        }
    };
    Ok((g, rot))
}

pub fn graph_to_json(g: &Graph, rot: Option<&RotationScheme>) -> String {
    let doc = GraphDoc {
        n: g.n(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        rotation: rot.map(|r| (0..g.n()).map(|v| (v.to_string(), r.order(v).to_vec())).collect()),
    };
    serde_json::to_string(&doc).expect("serializable")
}

/// Parses the edge-list format; `n` is one more than the largest id seen.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let mut id = || -> Result<usize, GraphError> {
            it.next()
                .ok_or_else(|| GraphError::Parse(format!("line {}: expected two ids", lineno + 1)))?
                .parse()
                .map_err(|_| GraphError::Parse(format!("line {}: bad vertex id", lineno + 1)))
        };
        let (u, v) = (id()?, id()?);
        if it.next().is_some() {
            return Err(GraphError::Parse(format!("line {}: trailing tokens", lineno + 1)));
        }
        if u.max(v) >= 1_000_000 {
            return Err(GraphError::Parse(format!("line {}: vertex id too large", lineno + 1)));
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

pub fn graph_to_edge_list(g: &Graph) -> String {
    g.edges().into_iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}
