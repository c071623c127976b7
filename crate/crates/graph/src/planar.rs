//! Left-right planarity test (de Fraysseix / Rosenstiehl, Brandes' formulation)
//! with an optional embedding phase.

use crate::{Graph, RotationScheme};

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn new() -> Self {
        ConflictPair { left: Interval::EMPTY, right: Interval::EMPTY }
    }

    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// Reusable planarity tester. Buffers are kept between calls so that
/// repeated tests on graphs of similar size do not reallocate.
#[derive(Default)]
pub struct LrPlanarity {
    n: usize,
    // undirected adjacency: (neighbor, edge id)
    adj_start: Vec<usize>,
    adj: Vec<(usize, usize)>,
    // oriented edges
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: Vec<bool>,
    out: Vec<Vec<usize>>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    eref: Vec<usize>,
    side: Vec<i8>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    roots: Vec<usize>,
    scratch: Vec<usize>,
}

impl LrPlanarity {
    pub fn new() -> Self {
        Self::default()
    }

    fn load(&mut self, n: usize, edges: &[(usize, usize)]) {
        let m = edges.len();
        self.n = n;
        let deg = &mut self.scratch;
        deg.clear();
        deg.resize(n + 1, 0);
        for &(u, v) in edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        self.adj_start.clear();
        self.adj_start.push(0);
        for v in 0..n {
            let s = self.adj_start[v] + deg[v];
            self.adj_start.push(s);
        }
        // reuse the degree buffer as insertion cursors
        deg[..n].copy_from_slice(&self.adj_start[..n]);
        self.adj.clear();
        self.adj.resize(2 * m, (0, 0));
        for (i, &(u, v)) in edges.iter().enumerate() {
            self.adj[deg[u]] = (v, i);
            deg[u] += 1;
            self.adj[deg[v]] = (u, i);
            deg[v] += 1;
        }
        // written during orientation before any read
        for vec in [&mut self.src, &mut self.dst, &mut self.lowpt, &mut self.lowpt2, &mut self.lowpt_edge, &mut self.stack_bottom] {
            if vec.len() < m {
                vec.resize(m, 0);
            }
        }
        if self.nesting.len() < m {
            self.nesting.resize(m, 0);
        }
        self.oriented.clear();
        self.oriented.resize(m, false);
        self.eref.clear();
        self.eref.resize(m, NONE);
        self.side.clear();
        self.side.resize(m, 1);
        if self.out.len() < n {
            self.out.resize(n, Vec::new());
        }
        for o in self.out.iter_mut().take(n) {
            o.clear();
        }
        self.height.clear();
        self.height.resize(n, NONE);
        self.parent_edge.clear();
        self.parent_edge.resize(n, NONE);
        self.stack.clear();
        self.roots.clear();
    }

    /// Planarity test only.
    pub fn test(&mut self, n: usize, edges: &[(usize, usize)]) -> bool {
        if n > 2 && edges.len() > 3 * n - 6 {
            return false;
        }
        self.load(n, edges);
        self.orient_and_test()
    }

    fn orient_and_test(&mut self) -> bool {
        for v in 0..self.n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.dfs_orientation(v);
            }
        }
        for v in 0..self.n {
            let mut o = std::mem::take(&mut self.out[v]);
            o.sort_by_key(|&e| self.nesting[e]);
            self.out[v] = o;
        }
        for i in 0..self.roots.len() {
            let r = self.roots[i];
            if !self.dfs_testing(r) {
                return false;
            }
        }
        true
    }

    /// Returns clockwise neighbor orders of a planar embedding, or `None`.
    pub fn embed(&mut self, n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
        if n > 2 && edges.len() > 3 * n - 6 {
            return None;
        }
        self.load(n, edges);
        if !self.orient_and_test() {
            return None;
        }
        let m = edges.len();
        for e in 0..m {
            let s = self.sign(e) as i64;
            self.nesting[e] *= s;
        }
        let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            let mut o = std::mem::take(&mut self.out[v]);
            o.sort_by_key(|&e| self.nesting[e]);
            rot[v] = o.iter().map(|&e| self.dst[e]).collect();
            self.out[v] = o;
        }
        let mut left_ref = vec![NONE; n];
        let mut right_ref = vec![NONE; n];
        for i in 0..self.roots.len() {
            let r = self.roots[i];
            self.dfs_embedding(r, &mut rot, &mut left_ref, &mut right_ref);
        }
        Some(rot)
    }

    fn dfs_orientation(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for k in self.adj_start[v]..self.adj_start[v + 1] {
            let (w, id) = self.adj[k];
            if self.oriented[id] {
                continue;
            }
            self.oriented[id] = true;
            self.src[id] = v;
            self.dst[id] = w;
            self.out[v].push(id);
            self.lowpt[id] = self.height[v];
            self.lowpt2[id] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = id;
                self.height[w] = self.height[v] + 1;
                self.dfs_orientation(w);
            } else {
                self.lowpt[id] = self.height[w];
            }
            self.nesting[id] = 2 * self.lowpt[id] as i64;
            if self.lowpt2[id] < self.height[v] {
                self.nesting[id] += 1;
            }
            if e != NONE {
                let (lw, lw2) = (self.lowpt[id], self.lowpt2[id]);
                if lw < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(lw2);
                    self.lowpt[e] = lw;
                } else if lw > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(lw);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(lw2);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn dfs_testing(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let deg = self.out[v].len();
        for k in 0..deg {
            let ei = self.out[v][k];
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if ei == self.parent_edge[w] {
                if !self.dfs_testing(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair { left: Interval::EMPTY, right: Interval { low: ei, high: ei } });
            }
            if self.lowpt[ei] < self.height[v] {
                if k == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::new();
        loop {
            let mut q = self.stack.pop().expect("conflict stack underflow");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.eref[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.eref[q.right.low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.eref[p.right.low] = q.right.high;
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.eref[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if p.left.low != NONE {
                self.side[p.left.low] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.dst[p.left.high] == u {
                p.left.high = self.eref[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.eref[p.left.low] = p.right.low;
                self.side[p.left.low] = -1;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.dst[p.right.high] == u {
                p.right.high = self.eref[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.eref[p.right.low] = p.left.low;
                self.side[p.right.low] = -1;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.eref[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                    hl
                } else {
                    hr
                };
            }
        }
    }

    fn sign(&mut self, e: usize) -> i8 {
        let mut chain = Vec::new();
        let mut cur = e;
        while self.eref[cur] != NONE {
            chain.push(cur);
            cur = self.eref[cur];
        }
        let mut s = self.side[cur];
        for &c in chain.iter().rev() {
            s *= self.side[c];
            self.side[c] = s;
            self.eref[c] = NONE;
        }
        self.side[e]
    }

    fn dfs_embedding(
        &mut self,
        v: usize,
        rot: &mut [Vec<usize>],
        left_ref: &mut [usize],
        right_ref: &mut [usize],
    ) {
        let deg = self.out[v].len();
        for k in 0..deg {
            let ei = self.out[v][k];
            let w = self.dst[ei];
            if ei == self.parent_edge[w] {
                rot[w].insert(0, v);
                left_ref[v] = w;
                right_ref[v] = w;
                self.dfs_embedding(w, rot, left_ref, right_ref);
            } else if self.side[ei] == 1 {
                let r = right_ref[w];
                let i = rot[w].iter().position(|&x| x == r).expect("missing reference");
                rot[w].insert(i + 1, v);
            } else {
                let r = left_ref[w];
                let i = rot[w].iter().position(|&x| x == r).expect("missing reference");
                rot[w].insert(i, v);
                left_ref[w] = v;
            }
        }
    }
}

/// Planarity test for a [`Graph`].
pub fn is_planar(g: &Graph) -> bool {
    LrPlanarity::new().test(g.n(), &g.edges())
}

/// A planar rotation scheme for `g`, or `None` if `g` is not planar.
pub fn planar_embedding(g: &Graph) -> Option<RotationScheme> {
    let rot = LrPlanarity::new().embed(g.n(), &g.edges())?;
    Some(RotationScheme::from_raw(rot))
}
