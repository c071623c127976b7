use std::collections::{BTreeSet, HashSet};

use crate::{Graph, GraphError};

/// Elimination order of a partial 2-tree together with the fill edges
/// that complete it to a 2-tree.
///
/// `attach[i]` lists the neighbors of `order[i]` among the vertices that
/// come later in `order`; reversing the order rebuilds the 2-tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
    pub attach: Vec<Vec<usize>>,
    pub fill_edges: Vec<(usize, usize)>,
}

impl EliminationOrder {
    /// The completed 2-tree: `g` plus the fill edges.
    pub fn completed(&self, g: &Graph) -> Graph {
        let mut h = g.clone();
        for &(a, b) in &self.fill_edges {
            h.add_edge(a, b);
        }
        h
    }
}

fn norm(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Repeatedly removes the smallest vertex of degree at most two, adding the
/// edge between its neighbors when absent.
pub fn two_tree_completion(g: &Graph) -> Result<EliminationOrder, GraphError> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut low: BTreeSet<usize> = (0..n).filter(|&v| adj[v].len() <= 2).collect();
    let mut fill: Vec<(usize, usize)> = Vec::new();
    let mut fill_set: HashSet<(usize, usize)> = HashSet::new();
    let mut order = Vec::with_capacity(n);
    let mut attach = Vec::with_capacity(n);

    let mut link = |adj: &mut Vec<BTreeSet<usize>>, a: usize, b: usize| {
        if adj[a].insert(b) {
            adj[b].insert(a);
            if fill_set.insert(norm(a, b)) {
                fill.push(norm(a, b));
            }
        }
    };

    while alive.len() > 2 {
        let v = *low.iter().next().ok_or(GraphError::NotPartialTwoTree)?;
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        let pair = match nb.len() {
            2 => (nb[0], nb[1]),
            1 => {
                let x = nb[0];
                let y = adj[x].iter().copied().find(|&y| y != v).or_else(|| {
                    alive.iter().copied().find(|&y| y != v && y != x)
                });
                let y = y.expect("at least three vertices alive");
                (x, y)
            }
            _ => {
                let x = alive.iter().copied().find(|&x| x != v).unwrap();
                let y = adj[x]
                    .iter()
                    .copied()
                    .find(|&y| y != v)
                    .or_else(|| alive.iter().copied().find(|&y| y != v && y != x))
                    .unwrap();
                (x, y)
            }
        };
        let (x, y) = pair;
        link(&mut adj, v, x);
        link(&mut adj, v, y);
        link(&mut adj, x, y);
        for w in [x, y] {
            adj[w].remove(&v);
        }
        adj[v].clear();
        alive.remove(&v);
        low.remove(&v);
        for w in [x, y] {
            if adj[w].len() <= 2 {
                low.insert(w);
            } else {
                low.remove(&w);
            }
        }
        order.push(v);
        attach.push(vec![x.min(y), x.max(y)]);
    }
    let rest: Vec<usize> = alive.iter().copied().collect();
    if rest.len() == 2 {
        link(&mut adj, rest[0], rest[1]);
        order.push(rest[0]);
        attach.push(vec![rest[1]]);
        order.push(rest[1]);
        attach.push(vec![]);
    } else if rest.len() == 1 {
        order.push(rest[0]);
        attach.push(vec![]);
    }
    Ok(EliminationOrder { order, attach, fill_edges: fill })
}
