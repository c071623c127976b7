use std::collections::HashMap;

use strandkit_graph::families::PlaneGraph;
use strandkit_graph::LrPlanarity;

use crate::{BreakVector, Mode, OracleError};

/// The graph H: one crossing node per edge, a tail and a head node per
/// vertex, and a path per vertex through its crossings in break order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractDiagram {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
    pub gadgets: bool,
    /// Crossing node (hub, with gadgets) of each edge, in `Layout::edges` order.
    pub crossing: Vec<usize>,
    /// `(tail, head)` node of each vertex.
    pub ends: Vec<(usize, usize)>,
}

/// Node numbering and fixed parts of H for one plane graph.
///
/// Nodes: crossings `0..m`, then tail/head pairs, then four rim nodes per
/// edge when gadgets are on. The apex, if any, comes last.
#[derive(Debug, Clone)]
pub struct Layout {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub gadgets: bool,
    /// Edge ids around each vertex, clockwise.
    pub(crate) around: Vec<Vec<usize>>,
    pub(crate) fixed: Vec<(usize, usize)>,
}

impl Layout {
    pub fn new(pg: &PlaneGraph, gadgets: bool) -> Self {
        let n = pg.graph.n();
        let edges = pg.graph.edges();
        let id: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let around = (0..n)
            .map(|v| pg.rot.order(v).iter().map(|&u| id[&(v.min(u), v.max(u))]).collect())
            .collect();
        let m = edges.len();
        let mut fixed = Vec::new();
        if gadgets {
            for e in 0..m {
                let rim = m + 2 * n + 4 * e;
                for k in 0..4 {
                    fixed.push((e, rim + k));
                    fixed.push((rim + k, rim + (k + 1) % 4));
                }
            }
        }
        Layout { n, edges, gadgets, around, fixed }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.around[v].len()
    }

    /// Nodes of H without the apex.
    pub fn nodes(&self) -> usize {
        let m = self.edges.len();
        m + 2 * self.n + if self.gadgets { 4 * m } else { 0 }
    }

    pub fn apex(&self) -> usize {
        self.nodes()
    }

    pub fn tail(&self, v: usize) -> usize {
        self.edges.len() + 2 * v
    }

    pub fn head(&self, v: usize) -> usize {
        self.edges.len() + 2 * v + 1
    }

    /// Node where the strand of `v` enters (`leave = false`) or leaves edge `e`.
    /// The lower endpoint uses rim nodes 1 and 3, the other 2 and 4.
    fn port(&self, v: usize, e: usize, leave: bool) -> usize {
        if !self.gadgets {
            return e;
        }
        let low = self.edges[e].0 == v;
        let k = match (low, leave) {
            (true, false) => 0,
            (false, false) => 1,
            (true, true) => 2,
            (false, true) => 3,
        };
        self.edges.len() + 2 * self.n + 4 * e + k
    }

    /// Writes the `degree(v) + 1` path edges of `v` cut at `b`.
    pub(crate) fn path(&self, v: usize, b: usize, out: &mut [(usize, usize)]) {
        let d = self.degree(v);
        let mut prev = self.tail(v);
        for i in 0..d {
            let e = self.around[v][(b + i) % d];
            out[i] = (prev, self.port(v, e, false));
            prev = self.port(v, e, true);
        }
        out[d] = (prev, self.head(v));
    }

    pub(crate) fn check(&self, b: &BreakVector) -> Result<(), OracleError> {
        if b.break_at.len() != self.n {
            return Err(OracleError::WrongLength(b.break_at.len(), self.n));
        }
        for (v, &i) in b.break_at.iter().enumerate() {
            let d = self.degree(v);
            if i >= d.max(1) {
                return Err(OracleError::InvalidBreak { vertex: v, index: i, degree: d });
            }
        }
        Ok(())
    }
}

pub fn build_h(pg: &PlaneGraph, b: &BreakVector, gadgets: bool) -> Result<AbstractDiagram, OracleError> {
    let layout = Layout::new(pg, gadgets);
    layout.check(b)?;
    let mut edges = layout.fixed.clone();
    for v in 0..layout.n {
        let start = edges.len();
        edges.resize(start + layout.degree(v) + 1, (0, 0));
        layout.path(v, b.break_at[v], &mut edges[start..]);
    }
    Ok(AbstractDiagram {
        nodes: layout.nodes(),
        edges,
        gadgets,
        crossing: (0..layout.edges.len()).collect(),
        ends: (0..layout.n).map(|v| (layout.tail(v), layout.head(v))).collect(),
    })
}

/// Planarity of H, with an apex joined to the ends required on the contour.
pub fn decide_fixed(pg: &PlaneGraph, b: &BreakVector, mode: &Mode, gadgets: bool) -> Result<bool, OracleError> {
    let h = build_h(pg, b, gadgets)?;
    let mut edges = h.edges;
    let apex = h.nodes;
    match mode {
        Mode::Base => {}
        Mode::BothEnds => {
            for &(t, hd) in &h.ends {
                edges.push((apex, t));
                edges.push((apex, hd));
            }
        }
        Mode::AtLeastOneEnd(choice) => {
            if choice.len() != h.ends.len() {
                return Err(OracleError::WrongLength(choice.len(), h.ends.len()));
            }
            for (&(t, hd), &head) in h.ends.iter().zip(choice) {
                edges.push((apex, if head { hd } else { t }));
            }
        }
    }
    Ok(LrPlanarity::new().test(apex + 1, &edges))
}
