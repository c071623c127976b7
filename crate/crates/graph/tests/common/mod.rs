#![allow(dead_code)]

use strandkit_graph::{is_planar, Graph};

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

pub fn k33() -> Graph {
    let mut g = Graph::new(6);
    for a in 0..3 {
        for b in 3..6 {
            g.add_edge(a, b);
        }
    }
    g
}

/// Graph on `n` vertices whose edge set is the bit pattern `mask` over
/// pairs in lexicographic order.
pub fn from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

/// Branch-vertex adjacency after smoothing degree-2 vertices, or `None`
/// if some path closes on itself or hits a degree-1 vertex.
fn smooth(g: &Graph, branch: &[usize]) -> Option<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for &b in branch {
        for &first in g.neighbors(b) {
            let (mut prev, mut cur) = (b, first);
            while !branch.contains(&cur) {
                if g.degree(cur) != 2 {
                    return None;
                }
                let nx = g.neighbors(cur).iter().copied().find(|&x| x != prev)?;
                prev = cur;
                cur = nx;
            }
            if cur == b {
                return None;
            }
            if b < cur {
                out.push((b, cur));
            }
        }
    }
    out.sort_unstable();
    Some(out)
}

/// True if `g` minus isolated vertices is a subdivision of K5 or K3,3.
pub fn is_kuratowski_subdivision(g: &Graph) -> bool {
    if (0..g.n()).any(|v| g.degree(v) == 1) {
        return false;
    }
    let branch: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    let Some(sk) = smooth(g, &branch) else { return false };
    let mut dedup = sk.clone();
    dedup.dedup();
    if dedup.len() != sk.len() {
        return false;
    }
    let degs: Vec<usize> = branch.iter().map(|&v| g.degree(v)).collect();
    if branch.len() == 5 && degs.iter().all(|&d| d == 4) && sk.len() == 10 {
        return true;
    }
    if branch.len() == 6 && degs.iter().all(|&d| d == 3) && sk.len() == 9 {
        // bipartite check by 2-colouring the skeleton
        let mut col = std::collections::HashMap::new();
        col.insert(branch[0], 0);
        for _ in 0..6 {
            for &(a, b) in &sk {
                if let Some(&c) = col.get(&a) {
                    col.insert(b, 1 - c);
                } else if let Some(&c) = col.get(&b) {
                    col.insert(a, 1 - c);
                }
            }
        }
        return sk.iter().all(|(a, b)| col.get(a) != col.get(b)) && col.len() == 6;
    }
    false
}

/// Deletes edges while the graph stays non-planar.
pub fn minimal_nonplanar(g: &Graph) -> Graph {
    let mut edges = g.edges();
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        if !is_planar(&Graph::from_edges(g.n(), &trial).unwrap()) {
            edges = trial;
        } else {
            i += 1;
        }
    }
    Graph::from_edges(g.n(), &edges).unwrap()
}

/// Book-embedding test: some cyclic vertex order makes all edges
/// non-crossing chords. Brute force, for tiny graphs.
pub fn has_one_page_book(g: &Graph) -> bool {
    let n = g.n();
    if n <= 3 {
        return true;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let edges = g.edges();
    fn heap(k: usize, perm: &mut Vec<usize>, test: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == 1 {
            return test(perm);
        }
        for i in 0..k {
            if heap(k - 1, perm, test) {
                return true;
            }
            let j = if k % 2 == 0 { i } else { 0 };
            perm.swap(j, k - 1);
        }
        false
    }
    let mut test = |p: &[usize]| {
        let mut pos = vec![0; n];
        pos[0] = 0;
        for (i, &v) in p.iter().enumerate() {
            pos[v] = i + 1;
        }
        let chords: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
            .collect();
        for (i, &(a, b)) in chords.iter().enumerate() {
            for &(c, d) in &chords[i + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return false;
                }
            }
        }
        true
    };
    let mut rest: Vec<usize> = perm.drain(1..).collect();
    let k = rest.len();
    heap(k, &mut rest, &mut test)
}
