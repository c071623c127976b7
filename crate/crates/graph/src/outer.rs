use crate::rotation::faces;
use crate::{planar_embedding, FaceSet, Graph, GraphError, RotationScheme};

/// An outer-plane embedding: rotation scheme plus faces, one of which
/// contains every vertex.
#[derive(Debug, Clone)]
pub struct OuterPlane {
    pub rot: RotationScheme,
    pub faces: FaceSet,
}

impl OuterPlane {
    pub fn outer_face_index(&self) -> usize {
        self.faces.outer_face_index.expect("outer face is always set")
    }

    /// Darts of the outer face in traversal order.
    pub fn outer_face(&self) -> &[(usize, usize)] {
        &self.faces.faces[self.outer_face_index()]
    }

    pub fn is_outer_edge(&self, u: usize, v: usize) -> bool {
        let f = self.outer_face();
        f.contains(&(u, v)) || f.contains(&(v, u))
    }
}

/// Tests outer-planarity by embedding `g` plus an apex joined to every vertex.
pub fn is_outerplanar(g: &Graph) -> Option<OuterPlane> {
    if !g.is_connected() {
        return None;
    }
    let n = g.n();
    let mut h = g.clone();
    let apex = h.add_vertex();
    for v in 0..n {
        h.add_edge(v, apex);
    }
    let rot_h = planar_embedding(&h)?;
    let order: Vec<Vec<usize>> =
        (0..n).map(|v| rot_h.order(v).iter().copied().filter(|&w| w != apex).collect()).collect();
    let rot = RotationScheme::from_clockwise(g, order).ok()?;
    let mut fs = faces(g, &rot).ok()?;
    let idx = if g.edge_count() == 0 {
        0
    } else {
        // dart (apex, 0) is followed by (0, w) in an apex face; in g that
        // dart lies on the face left behind by the apex
        let w = rot_h.succ(0, apex);
        fs.face_of(0, w).expect("outer dart must exist")
    };
    fs.outer_face_index = Some(idx);
    let seen = fs.vertices(idx);
    if g.edge_count() > 0 && (0..n).any(|v| !seen.contains(&v)) {
        return None;
    }
    Some(OuterPlane { rot, faces: fs })
}

/// No cut vertex (and connected). `K_1` and `K_2` count as 2-connected.
pub fn is_biconnected(g: &Graph) -> bool {
    let n = g.n();
    if !g.is_connected() {
        return false;
    }
    if n <= 2 {
        return true;
    }
    // iterative lowpoint DFS
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut root_children = 0;
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    disc[0] = 0;
    low[0] = 0;
    time += 1;
    while let Some(&mut (v, ref mut i)) = stack.last_mut() {
        if *i < g.degree(v) {
            let w = g.neighbors(v)[*i];
            *i += 1;
            if disc[w] == usize::MAX {
                parent[w] = v;
                disc[w] = time;
                low[w] = time;
                time += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, 0));
            } else if w != parent[v] {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            let p = parent[v];
            if p != usize::MAX {
                low[p] = low[p].min(low[v]);
                if p != 0 && low[v] >= disc[p] {
                    return false;
                }
            }
        }
    }
    root_children <= 1
}

/// Adds edges between consecutive first visits of the outer-face walk.
/// Returns the supergraph and the added edges; vertex ids are unchanged.
pub fn biconnect_outerplanar(g: &Graph) -> Result<(Graph, Vec<(usize, usize)>), GraphError> {
    let op = is_outerplanar(g).ok_or(GraphError::NotOuterplanar)?;
    let n = g.n();
    let mut h = g.clone();
    let mut added = Vec::new();
    if n <= 2 || is_biconnected(g) {
        return Ok((h, added));
    }
    let mut seen = vec![false; n];
    let mut firsts = Vec::with_capacity(n);
    for &(u, _) in op.outer_face() {
        if !seen[u] {
            seen[u] = true;
            firsts.push(u);
        }
    }
    for i in 0..firsts.len() {
        let (a, b) = (firsts[i], firsts[(i + 1) % firsts.len()]);
        if !h.has_edge(a, b) {
            h.add_edge(a, b);
            added.push((a.min(b), a.max(b)));
        }
    }
    Ok((h, added))
}

/// One ear: `path[0]` and `path[last]` are the attachment edge, the
/// interior vertices are new.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ear {
    pub path: Vec<usize>,
}

impl Ear {
    pub fn ends(&self) -> (usize, usize) {
        (self.path[0], *self.path.last().unwrap())
    }

    pub fn interior(&self) -> &[usize] {
        &self.path[1..self.path.len() - 1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarDecomposition {
    pub root_edge: (usize, usize),
    pub ears: Vec<Ear>,
}

impl EarDecomposition {
    /// Replays the decomposition, checking that each ear attaches to an
    /// edge of the graph built so far and only adds new vertices.
    pub fn replay(&self, n: usize) -> Option<Graph> {
        let mut g = Graph::new(n);
        let mut present = vec![false; n];
        let (a, b) = self.root_edge;
        g.try_add_edge(a, b).ok()?;
        present[a] = true;
        present[b] = true;
        for ear in &self.ears {
            let (u, v) = ear.ends();
            if !g.has_edge(u, v) || ear.path.len() < 3 {
                return None;
            }
            for &x in ear.interior() {
                if present[x] {
                    return None;
                }
                present[x] = true;
            }
            for w in ear.path.windows(2) {
                g.try_add_edge(w[0], w[1]).ok()?;
            }
        }
        Some(g)
    }
}

/// Lexicographically smallest edge of the outer face.
pub fn default_root(op: &OuterPlane) -> (usize, usize) {
    op.outer_face().iter().map(|&(u, v)| (u.min(v), u.max(v))).min().expect("graph has an edge")
}

/// Ears in DFS order of the weak dual tree, rooted at the inner face on `root`.
pub fn ear_decomposition(
    g: &Graph,
    op: &OuterPlane,
    root: Option<(usize, usize)>,
) -> Result<EarDecomposition, GraphError> {
    if !is_biconnected(g) || g.edge_count() == 0 {
        return Err(GraphError::NotBiconnected);
    }
    let root = root.unwrap_or_else(|| default_root(op));
    let (a, b) = root;
    if !g.has_edge(a, b) || !op.is_outer_edge(a, b) {
        return Err(GraphError::RootNotOnOuterFace(a, b));
    }
    let fs = &op.faces;
    let outer = op.outer_face_index();
    let mut ears = Vec::new();
    if fs.len() == 1 {
        // a single edge
        return Ok(EarDecomposition { root_edge: root, ears });
    }
    let root_dart = if fs.face_of(a, b) == Some(outer) { (b, a) } else { (a, b) };
    let mut done = vec![false; fs.len()];
    let mut stack = vec![root_dart];
    while let Some((x, y)) = stack.pop() {
        let f = fs.face_of(x, y).unwrap();
        if done[f] {
            continue;
        }
        done[f] = true;
        let darts = &fs.faces[f];
        let start = darts.iter().position(|&d| d == (x, y)).unwrap();
        let k = darts.len();
        let mut path = Vec::with_capacity(k);
        path.push(y);
        for i in 1..k {
            path.push(darts[(start + i) % k].1);
        }
        ears.push(Ear { path });
        // children in reverse so that the first shared edge is expanded first
        for i in (1..k).rev() {
            let (p, q) = darts[(start + i) % k];
            let g2 = fs.face_of(q, p).unwrap();
            if g2 != outer && !done[g2] {
                stack.push((q, p));
            }
        }
    }
    Ok(EarDecomposition { root_edge: root, ears })
}
