//! Generators for the graph families used by the constructions, the
//! oracle and the test corpora. Random generators use ChaCha8 seeded from
//! a `u64`, so corpora are reproducible across platforms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rotation::faces;
use crate::{Graph, GraphError, RotationScheme};

/// A graph with a plane rotation scheme.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    pub graph: Graph,
    pub rot: RotationScheme,
}

impl PlaneGraph {
    /// Checks the Euler condition before accepting the scheme.
    pub fn new(graph: Graph, order: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let rot = RotationScheme::plane(&graph, order)?;
        Ok(PlaneGraph { graph, rot })
    }

    pub fn face_count(&self) -> usize {
        faces(&self.graph, &self.rot).map(|f| f.len()).unwrap_or(0)
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn too_small(family: &'static str, min: usize, n: usize) -> Result<(), GraphError> {
    if n < min {
        Err(GraphError::TooSmall { family, min, n })
    } else {
        Ok(())
    }
}

/// Hub `0`, rim `v_i = i` for `i = 1..=n`, rim placed clockwise.
pub fn wheel(n: usize) -> Result<PlaneGraph, GraphError> {
    too_small("wheel", 3, n)?;
    let mut g = Graph::new(n + 1);
    let v = |i: usize| 1 + (i + n) % n;
    for i in 0..n {
        g.add_edge(0, v(i));
        g.add_edge(v(i), v(i + 1));
    }
    let mut order = vec![(1..=n).collect::<Vec<_>>()];
    for i in 0..n {
        order.push(vec![0, v(i + n - 1), v(i + 1)]);
    }
    PlaneGraph::new(g, order)
}

/// The wheel plus `w_i = n + i` (for `i = 1..=n`) adjacent to `v_i` and `v_{i+1}`,
/// embedded outside the rim.
pub fn extended_wheel(n: usize) -> Result<PlaneGraph, GraphError> {
    too_small("extended_wheel", 3, n)?;
    let w = wheel(n)?;
    let mut g = w.graph;
    let v = |i: usize| 1 + (i + n) % n;
    let wi = |i: usize| n + 1 + (i + n) % n;
    for i in 0..n {
        let x = g.add_vertex();
        debug_assert_eq!(x, wi(i));
        g.add_edge(x, v(i));
        g.add_edge(x, v(i + 1));
    }
    let mut order = vec![(1..=n).collect::<Vec<_>>()];
    for i in 0..n {
        order.push(vec![0, v(i + n - 1), wi(i + n - 1), wi(i), v(i + 1)]);
    }
    for i in 0..n {
        order.push(vec![v(i), v(i + 1)]);
    }
    PlaneGraph::new(g, order)
}

/// Inserts one new vertex into every face, adjacent to the face's corners.
///
/// Faces must be simple cycles (true for 2-connected plane graphs).
pub fn stellate(pg: &PlaneGraph) -> PlaneGraph {
    let fs = faces(&pg.graph, &pg.rot).expect("plane input");
    let mut g = pg.graph.clone();
    let mut order: Vec<Vec<usize>> = pg.rot.orders().to_vec();
    for face in &fs.faces {
        insert_into_face(&mut g, &mut order, face);
    }
    PlaneGraph::new(g, order).expect("stellation keeps the scheme plane")
}

pub fn triple_stellation(pg: &PlaneGraph) -> PlaneGraph {
    stellate(&stellate(&stellate(pg)))
}

/// `K_{2,3}` with every edge subdivided: poles `0, 1`, middles `2, 3, 4`,
/// subdivision vertices `5..=10`.
pub fn subdivided_k23() -> Graph {
    let mut g = Graph::new(11);
    let mut next = 5;
    for pole in 0..2 {
        for mid in 2..5 {
            g.add_edge(pole, next);
            g.add_edge(next, mid);
            next += 1;
        }
    }
    g
}

/// Inserts a vertex adjacent to every corner of `face`. Faces are traversed
/// counterclockwise, so the clockwise order at the new vertex is the
/// traversal reversed.
fn insert_into_face(g: &mut Graph, order: &mut Vec<Vec<usize>>, face: &[(usize, usize)]) {
    let s = g.add_vertex();
    let mut ring: Vec<usize> = face.iter().map(|&(a, _)| a).collect();
    ring.reverse();
    order.push(ring);
    for &(a, b) in face {
        g.add_edge(b, s);
        let o = &mut order[b];
        let i = o.iter().position(|&x| x == a).unwrap();
        o.insert(i + 1, s);
    }
}

/// Random stacked triangulation: `K_4`, then repeated insertion into a
/// uniformly chosen face.
pub fn random_planar_3tree(n: usize, seed: u64) -> Result<PlaneGraph, GraphError> {
    too_small("random_planar_3tree", 4, n)?;
    let mut r = rng(seed);
    let k4 = wheel(3)?;
    let (mut g, mut order) = (k4.graph, k4.rot.orders().to_vec());
    while g.n() < n {
        let rot = RotationScheme::from_clockwise(&g, order.clone())?;
        let fs = faces(&g, &rot)?;
        let f = r.gen_range(0..fs.len());
        insert_into_face(&mut g, &mut order, &fs.faces[f]);
    }
    PlaneGraph::new(g, order)
}

fn relabel(g: &Graph, order: Option<&[Vec<usize>]>, perm: &[usize]) -> (Graph, Option<Vec<Vec<usize>>>) {
    let mut h = Graph::new(g.n());
    for (u, v) in g.edges() {
        h.add_edge(perm[u], perm[v]);
    }
    let order = order.map(|o| {
        let mut out = vec![Vec::new(); g.n()];
        for (v, ring) in o.iter().enumerate() {
            out[perm[v]] = ring.iter().map(|&w| perm[w]).collect();
        }
        out
    });
    (h, order)
}

/// Random triangulated polygon, randomly relabeled. The embedding is the
/// convex drawing with the polygon placed clockwise.
pub fn random_maximal_outerplanar(n: usize, seed: u64) -> Result<PlaneGraph, GraphError> {
    too_small("random_maximal_outerplanar", 3, n)?;
    let mut r = rng(seed);
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    let mut work = vec![(0usize, n - 1)];
    while let Some((a, b)) = work.pop() {
        if b - a < 2 {
            continue;
        }
        let m = r.gen_range(a + 1..b);
        for (x, y) in [(a, m), (m, b)] {
            if !g.has_edge(x, y) {
                g.add_edge(x, y);
            }
        }
        work.push((a, m));
        work.push((m, b));
    }
    let order: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let mut o = g.neighbors(i).to_vec();
            o.sort_by_key(|&j| (j + n - i) % n);
            o
        })
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut r);
    let (h, order) = relabel(&g, Some(&order), &perm);
    PlaneGraph::new(h, order.unwrap())
}

/// Random 2-tree with edges dropped independently with probability
/// `1 - density`, keeping the graph connected; randomly relabeled.
pub fn random_partial_2tree(n: usize, density: f64, seed: u64) -> Result<Graph, GraphError> {
    too_small("random_partial_2tree", 3, n)?;
    let mut r = rng(seed);
    let mut g = Graph::new(n);
    g.add_edge(0, 1);
    let mut edges = vec![(0, 1)];
    for v in 2..n {
        let (a, b) = edges[r.gen_range(0..edges.len())];
        g.add_edge(v, a);
        g.add_edge(v, b);
        edges.push((a, v));
        edges.push((b, v));
    }
    let mut cand = g.edges();
    cand.shuffle(&mut r);
    for (a, b) in cand {
        if r.gen::<f64>() < density {
            continue;
        }
        let kept: Vec<(usize, usize)> = g.edges().into_iter().filter(|&e| e != (a, b)).collect();
        let h = Graph::from_edges(n, &kept)?;
        if h.is_connected() {
            g = h;
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut r);
    Ok(relabel(&g, None, &perm).0)
}
