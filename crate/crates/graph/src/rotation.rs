use crate::{Graph, GraphError};

/// Clockwise cyclic neighbor order around every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationScheme {
    order: Vec<Vec<usize>>,
}

/// Faces as cyclic sequences of darts `(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Vec<(usize, usize)>>,
    pub outer_face_index: Option<usize>,
}

impl RotationScheme {
    /// Takes clockwise orders; each must be a permutation of the adjacency list.
    pub fn from_clockwise(g: &Graph, order: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        if order.len() != g.n() {
            return Err(GraphError::InconsistentRotation(order.len().min(g.n())));
        }
        for (v, ord) in order.iter().enumerate() {
            let mut a = ord.clone();
            let mut b = g.neighbors(v).to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Err(GraphError::InconsistentRotation(v));
            }
        }
        Ok(RotationScheme { order })
    }

    /// Takes counterclockwise orders and stores them reversed.
    pub fn from_counterclockwise(g: &Graph, mut order: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        for o in &mut order {
            o.reverse();
        }
        Self::from_clockwise(g, order)
    }

    /// Like `from_clockwise`, but also requires `V - E + F = 2`.
    pub fn plane(g: &Graph, order: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let rot = Self::from_clockwise(g, order)?;
        rot.check_plane(g)?;
        Ok(rot)
    }

    pub(crate) fn from_raw(order: Vec<Vec<usize>>) -> Self {
        RotationScheme { order }
    }

    pub fn order(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    pub fn orders(&self) -> &[Vec<usize>] {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn position(&self, v: usize, u: usize) -> Option<usize> {
        self.order[v].iter().position(|&w| w == u)
    }

    /// Neighbor following `u` clockwise around `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let o = &self.order[v];
        let i = self.position(v, u).expect("not a neighbor");
        o[(i + 1) % o.len()]
    }

    /// Neighbor preceding `u` clockwise around `v`.
    pub fn pred(&self, v: usize, u: usize) -> usize {
        let o = &self.order[v];
        let i = self.position(v, u).expect("not a neighbor");
        o[(i + o.len() - 1) % o.len()]
    }

    /// Mirror image: every cyclic order reversed.
    pub fn reversed(&self) -> Self {
        RotationScheme {
            order: self.order.iter().map(|o| o.iter().rev().copied().collect()).collect(),
        }
    }

    pub fn euler_characteristic(&self, g: &Graph) -> i64 {
        let f = faces_unchecked(self, g).len() as i64;
        g.n() as i64 - g.edge_count() as i64 + f
    }

    pub fn check_plane(&self, g: &Graph) -> Result<(), GraphError> {
        g.check_connected()?;
        let chi = self.euler_characteristic(g);
        if chi == 2 {
            Ok(())
        } else {
            Err(GraphError::NotPlane(chi))
        }
    }
}

/// Traverses faces with the rule `(u, v) -> (v, succ_v(u))`.
pub fn faces(g: &Graph, rot: &RotationScheme) -> Result<FaceSet, GraphError> {
    RotationScheme::from_clockwise(g, rot.order.clone())?;
    Ok(FaceSet { faces: faces_unchecked(rot, g), outer_face_index: None })
}

fn faces_unchecked(rot: &RotationScheme, g: &Graph) -> Vec<Vec<(usize, usize)>> {
    if g.edge_count() == 0 {
        return vec![Vec::new()];
    }
    let n = g.n();
    // index darts by (vertex, position in its rotation)
    let mut seen: Vec<Vec<bool>> = (0..n).map(|v| vec![false; rot.order[v].len()]).collect();
    let mut out = Vec::new();
    for u in 0..n {
        for i in 0..rot.order[u].len() {
            if seen[u][i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut j) = (u, i);
            while !seen[a][j] {
                seen[a][j] = true;
                let b = rot.order[a][j];
                face.push((a, b));
                let k = rot.position(b, a).expect("asymmetric rotation");
                let next_j = (k + 1) % rot.order[b].len();
                a = b;
                j = next_j;
            }
            out.push(face);
        }
    }
    out
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Index of the face containing dart `(u, v)`.
    pub fn face_of(&self, u: usize, v: usize) -> Option<usize> {
        self.faces.iter().position(|f| f.contains(&(u, v)))
    }

    pub fn vertices(&self, i: usize) -> Vec<usize> {
        self.faces[i].iter().map(|&(u, _)| u).collect()
    }
}
