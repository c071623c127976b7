use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num::Zero;

use crate::point::angle_cmp;
use crate::segment::{segment_intersection, surely_disjoint, SegHit};
use crate::{GeomError, Pt, Rat, StringRep};

/// Proper crossings of a representation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CrossingProfile {
    /// Keyed by `(u, v)` with `u < v`; pairs that never cross are absent.
    pub pair_counts: BTreeMap<(usize, usize), usize>,
    /// Crossing partners of each curve, ordered from tail to head.
    pub sequences: BTreeMap<usize, Vec<usize>>,
    /// Every proper crossing as `(u, v, point)` with `u < v`.
    pub points: Vec<(usize, usize, Pt)>,
}

impl CrossingProfile {
    pub fn count(&self, u: usize, v: usize) -> usize {
        *self.pair_counts.get(&(u.min(v), u.max(v))).unwrap_or(&0)
    }
}

/// Closed interval of floats certainly containing `r`.
pub(crate) fn float_hull(r: &Rat) -> (f64, f64) {
    let v = crate::point::to_f64(r);
    if !v.is_finite() || v.abs() > 1e300 {
        return (f64::NEG_INFINITY, f64::INFINITY);
    }
    let e = v.abs() * 1e-9 + 1e-200;
    (v - e, v + e)
}

/// Float bounding box of a segment, padded so that it contains the exact one.
#[derive(Debug, Clone, Copy)]
pub(crate) struct FBox {
    pub fa: (f64, f64),
    pub fb: (f64, f64),
    pub lo_x: f64,
    pub hi_x: f64,
    pub lo_y: f64,
    pub hi_y: f64,
}

impl FBox {
    pub fn of(a: &Pt, b: &Pt) -> Self {
        let (ax, bx) = (float_hull(&a.x), float_hull(&b.x));
        let (ay, by) = (float_hull(&a.y), float_hull(&b.y));
        FBox { fa: a.to_f64(), fb: b.to_f64(), lo_x: ax.0.min(bx.0), hi_x: ax.1.max(bx.1), lo_y: ay.0.min(by.0), hi_y: ay.1.max(by.1) }
    }

    pub fn meets(&self, o: &FBox) -> bool {
        !(o.lo_x > self.hi_x || self.lo_x > o.hi_x || o.lo_y > self.hi_y || self.lo_y > o.hi_y)
    }
}

pub(crate) struct SegBox<'a> {
    pub owner: usize,
    pub index: usize,
    pub a: &'a Pt,
    pub b: &'a Pt,
    pub f: FBox,
}

impl<'a> SegBox<'a> {
    pub fn new(owner: usize, index: usize, a: &'a Pt, b: &'a Pt) -> Self {
        SegBox { owner, index, a, b, f: FBox::of(a, b) }
    }
}

/// Index pairs of boxes from different owners whose bounding boxes meet,
/// found by a sweep over x.
pub(crate) fn candidate_pairs(boxes: &[SegBox<'_>]) -> Vec<(usize, usize)> {
    let mut idx: Vec<usize> = (0..boxes.len()).collect();
    idx.sort_by(|&i, &j| boxes[i].f.lo_x.total_cmp(&boxes[j].f.lo_x));
    let mut out = Vec::new();
    for (k, &i) in idx.iter().enumerate() {
        let bi = &boxes[i];
        for &j in &idx[k + 1..] {
            let bj = &boxes[j];
            if bj.f.lo_x > bi.f.hi_x {
                break;
            }
            if bi.owner != bj.owner && bi.f.meets(&bj.f) {
                out.push((i.min(j), i.max(j)));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Where `p` sits on a curve: at vertex `k`, or inside segment `k`.
pub(crate) enum Place {
    Vertex(usize),
    Inside(usize),
}

pub(crate) fn place(points: &[Pt], seg: usize, p: &Pt) -> Place {
    if *p == points[seg] {
        Place::Vertex(seg)
    } else if *p == points[seg + 1] {
        Place::Vertex(seg + 1)
    } else {
        Place::Inside(seg)
    }
}

/// Outgoing directions of a curve at `p` (one at an endpoint, two otherwise).
pub(crate) fn branches(points: &[Pt], pl: &Place, p: &Pt) -> Vec<Pt> {
    match *pl {
        Place::Inside(s) => vec![points[s].sub(p), points[s + 1].sub(p)],
        Place::Vertex(k) => {
            let mut v = Vec::new();
            if k > 0 {
                v.push(points[k - 1].sub(p));
            }
            if k + 1 < points.len() {
                v.push(points[k + 1].sub(p));
            }
            v
        }
    }
}

/// Radial alternation of two branch pairs around a common point.
pub(crate) fn alternates(a: &[Pt], b: &[Pt]) -> bool {
    let mut dirs: Vec<(&Pt, u8)> = a.iter().map(|d| (d, 0)).chain(b.iter().map(|d| (d, 1))).collect();
    dirs.sort_by(|x, y| angle_cmp(x.0, y.0));
    if dirs.windows(2).any(|w| angle_cmp(w[0].0, w[1].0) == Ordering::Equal) {
        return false;
    }
    dirs.len() == 4 && dirs[0].1 != dirs[1].1 && dirs[1].1 != dirs[2].1 && dirs[2].1 != dirs[3].1
}

fn position_key(points: &[Pt], pl: &Place, p: &Pt) -> (usize, Rat) {
    match *pl {
        Place::Vertex(k) => (k, Rat::zero()),
        Place::Inside(s) => (s, p.sub(&points[s]).norm2()),
    }
}

/// Counts proper crossings between every pair of curves and records the
/// order in which each curve meets its partners.
pub fn crossing_profile(rep: &StringRep) -> Result<CrossingProfile, GeomError> {
    let mut seen = BTreeSet::new();
    for c in &rep.curves {
        c.validate()?;
        if !seen.insert(c.vertex) {
            return Err(GeomError::BadCurve(c.vertex, "duplicate curve".into()));
        }
    }
    let mut boxes = Vec::new();
    for (ci, c) in rep.curves.iter().enumerate() {
        for (k, (a, b)) in c.segments().enumerate() {
            boxes.push(SegBox::new(ci, k, a, b));
        }
    }
    // (curve i, curve j, point) -> segment indices where it was found
    let mut hits: BTreeMap<(usize, usize, Pt), (usize, usize)> = BTreeMap::new();
    for (i, j) in candidate_pairs(&boxes) {
        let (bi, bj) = (&boxes[i], &boxes[j]);
        let (bi, bj) = if bi.owner < bj.owner { (bi, bj) } else { (bj, bi) };
        if surely_disjoint(&bi.f, &bj.f) {
            continue;
        }
        match segment_intersection(bi.a, bi.b, bj.a, bj.b)? {
            SegHit::None => {}
            SegHit::Overlap => {
                return Err(GeomError::CurveOverlap(
                    rep.curves[bi.owner].vertex,
                    rep.curves[bj.owner].vertex,
                ))
            }
            SegHit::Point(p) => {
                hits.entry((bi.owner, bj.owner, p)).or_insert((bi.index, bj.index));
            }
        }
    }
    let mut at_point: BTreeMap<&Pt, BTreeSet<usize>> = BTreeMap::new();
    for (i, j, p) in hits.keys() {
        let s = at_point.entry(p).or_default();
        s.insert(*i);
        s.insert(*j);
        if s.len() >= 3 {
            return Err(GeomError::TripleIntersection(Box::new(p.clone())));
        }
    }
    let mut profile = CrossingProfile::default();
    let mut keyed: BTreeMap<usize, Vec<((usize, Rat), usize)>> = BTreeMap::new();
    for ((i, j, p), (si, sj)) in &hits {
        let (ci, cj) = (&rep.curves[*i], &rep.curves[*j]);
        for (a, b) in [(ci, cj), (cj, ci)] {
            if a.tail() == p || a.head() == p {
                return Err(GeomError::EndpointOnCurve(a.vertex, b.vertex));
            }
        }
        let (pi, pj) = (place(&ci.points, *si, p), place(&cj.points, *sj, p));
        if !alternates(&branches(&ci.points, &pi, p), &branches(&cj.points, &pj, p)) {
            return Err(GeomError::TouchingPoint(ci.vertex, cj.vertex, Box::new(p.clone())));
        }
        let (u, v) = (ci.vertex.min(cj.vertex), ci.vertex.max(cj.vertex));
        *profile.pair_counts.entry((u, v)).or_insert(0) += 1;
        profile.points.push((u, v, p.clone()));
        keyed.entry(ci.vertex).or_default().push((position_key(&ci.points, &pi, p), cj.vertex));
        keyed.entry(cj.vertex).or_default().push((position_key(&cj.points, &pj, p), ci.vertex));
    }
    for c in &rep.curves {
        let mut ks = keyed.remove(&c.vertex).unwrap_or_default();
        ks.sort();
        profile.sequences.insert(c.vertex, ks.into_iter().map(|(_, w)| w).collect());
    }
    Ok(profile)
}
