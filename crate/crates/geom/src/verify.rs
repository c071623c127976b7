use strandkit_graph::{Graph, RotationScheme};

use crate::profile::{alternates, branches, candidate_pairs, place, FBox, Place, SegBox};
use crate::segment::{point_on_segment, segment_intersection, surely_disjoint, SegHit};
use crate::point::orient;
use crate::{crossing_profile, ContourWitness, CrossingProfile, Curve, GeomError, Pt, Rat, StringRep};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OuterMode {
    BothEnds,
    AtLeastOneEnd,
}

/// PASS iff every edge of `g` is crossed exactly once and non-edges never.
pub fn verify_1string(rep: &StringRep, g: &Graph) -> Result<CrossingProfile, GeomError> {
    for c in &rep.curves {
        if c.vertex >= g.n() {
            return Err(GeomError::ExtraCurve(c.vertex));
        }
    }
    for v in 0..g.n() {
        if rep.curve(v).is_none() {
            return Err(GeomError::MissingCurve(v));
        }
    }
    let profile = crossing_profile(rep)?;
    for (&(u, v), &c) in &profile.pair_counts {
        let want = usize::from(g.has_edge(u, v));
        if c != want {
            return Err(GeomError::CrossingCount(u, v, c, want));
        }
    }
    for (u, v) in g.edges() {
        if profile.count(u, v) == 0 {
            return Err(GeomError::CrossingCount(u, v, 0, 1));
        }
    }
    Ok(profile)
}

/// Start index `b` with `seq == order[b..] ++ order[..b]`, if any.
fn break_of(seq: &[usize], order: &[usize]) -> Option<usize> {
    if seq.len() != order.len() {
        return None;
    }
    if order.is_empty() {
        return Some(0);
    }
    let b = order.iter().position(|&w| w == seq[0])?;
    let k = order.len();
    (0..k).all(|i| seq[i] == order[(b + i) % k]).then_some(b)
}

/// Per vertex: the break position and whether the curve had to be read
/// head to tail. `strict` forbids the reversed reading.
pub fn order_breaks(
    profile: &CrossingProfile,
    rot: &RotationScheme,
    strict: bool,
) -> Result<Vec<(usize, bool)>, GeomError> {
    let mut out = Vec::with_capacity(rot.n());
    for v in 0..rot.n() {
        let seq = profile.sequences.get(&v).cloned().unwrap_or_default();
        let order = rot.order(v);
        if let Some(b) = break_of(&seq, order) {
            out.push((b, false));
            continue;
        }
        let rev: Vec<usize> = seq.iter().rev().copied().collect();
        match break_of(&rev, order) {
            Some(b) if !strict => out.push((b, true)),
            _ => {
                return Err(GeomError::OrderViolation { v, observed: seq, expected: order.to_vec() })
            }
        }
    }
    Ok(out)
}

/// 1-string check followed by the order condition against `rot`.
pub fn verify_order_preserving(
    rep: &StringRep,
    g: &Graph,
    rot: &RotationScheme,
    strict: bool,
) -> Result<Vec<(usize, bool)>, GeomError> {
    let profile = verify_1string(rep, g)?;
    order_breaks(&profile, rot, strict)
}

/// Polygon with padded float boxes per edge for quick rejection.
struct Indexed<'a> {
    poly: &'a [Pt],
    boxes: Vec<FBox>,
}

impl<'a> Indexed<'a> {
    fn new(poly: &'a [Pt]) -> Self {
        let m = poly.len();
        Indexed { poly, boxes: (0..m).map(|i| FBox::of(&poly[i], &poly[(i + 1) % m])).collect() }
    }

    fn edge(&self, i: usize) -> (&Pt, &Pt) {
        (&self.poly[i], &self.poly[(i + 1) % self.poly.len()])
    }

    fn contains(&self, p: &Pt) -> bool {
        let q = FBox::of(p, p);
        let mut inside = false;
        for (i, b) in self.boxes.iter().enumerate() {
            // an edge entirely above or below p never toggles
            if b.lo_y > q.hi_y || b.hi_y < q.lo_y {
                continue;
            }
            let (a, c) = self.edge(i);
            if (a.y > p.y) != (c.y > p.y) {
                let x = &a.x + (&p.y - &a.y) * (&c.x - &a.x) / (&c.y - &a.y);
                if p.x < x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    fn on_boundary(&self, p: &Pt) -> bool {
        let q = FBox::of(p, p);
        self.boxes.iter().enumerate().any(|(i, b)| {
            b.meets(&q) && {
                let (a, c) = self.edge(i);
                point_on_segment(a, c, p)
            }
        })
    }
}

fn check_polyline_simple(poly: &[Pt]) -> Result<(), GeomError> {
    let m = poly.len();
    if m < 3 {
        return Err(GeomError::BadWitness("fewer than three points".into()));
    }
    let next = |i: usize| &poly[(i + 1) % m];
    if (0..m).any(|i| poly[i] == *next(i)) {
        return Err(GeomError::BadWitness("repeated consecutive point".into()));
    }
    let boxes: Vec<SegBox> = (0..m).map(|i| SegBox::new(i, i, &poly[i], next(i))).collect();
    for (i, j) in candidate_pairs(&boxes) {
        if surely_disjoint(&boxes[i].f, &boxes[j].f) {
            continue;
        }
        // consecutive edges that turn meet only at their shared point
        if j == i + 1 && orient(&poly[i], &poly[j], next(j)) != std::cmp::Ordering::Equal {
            continue;
        }
        if i == 0 && j == m - 1 && orient(&poly[j], &poly[0], next(0)) != std::cmp::Ordering::Equal {
            continue;
        }
        let hit = segment_intersection(&poly[i], next(i), &poly[j], next(j))?;
        let ok = match hit {
            SegHit::None => true,
            SegHit::Overlap => false,
            SegHit::Point(p) => (j == i + 1 && p == poly[j]) || (i == 0 && j == m - 1 && p == poly[0]),
        };
        if !ok {
            return Err(GeomError::BadWitness(format!("self-intersection near segment {i}")));
        }
    }
    Ok(())
}

fn sample_off(c: &Curve, on: impl Fn(&Pt) -> bool) -> Option<Pt> {
    let two = Rat::from_integer(2.into());
    c.segments()
        .map(|(a, b)| a.add(b).scale(&(Rat::from_integer(1.into()) / &two)))
        .chain(c.points.iter().cloned())
        .find(|p| !on(p))
}

/// Contour witness check plus endpoint incidence per `mode`.
pub fn verify_outer_string(rep: &StringRep, mode: OuterMode) -> Result<(), GeomError> {
    let w = rep.witness.as_ref().ok_or(GeomError::MissingWitness)?;
    for c in &rep.curves {
        c.validate()?;
    }
    let on_contour: Box<dyn Fn(&Pt) -> bool> = match w {
        ContourWitness::Circle { center, r2 } => {
            if *r2 <= Rat::from_integer(0.into()) {
                return Err(GeomError::BadWitness("non-positive radius".into()));
            }
            for c in &rep.curves {
                if c.points.iter().any(|p| p.sub(center).norm2() > *r2) {
                    return Err(GeomError::CurveOutsideWitness(c.vertex));
                }
            }
            Box::new(move |p: &Pt| p.sub(center).norm2() == *r2)
        }
        ContourWitness::Polyline(poly) => {
            check_polyline_simple(poly)?;
            let m = poly.len();
            let next = |i: usize| &poly[(i + 1) % m];
            let mut boxes: Vec<SegBox> = (0..m).map(|i| SegBox::new(usize::MAX, i, &poly[i], next(i))).collect();
            for (ci, c) in rep.curves.iter().enumerate() {
                for (k, (a, b)) in c.segments().enumerate() {
                    boxes.push(SegBox::new(ci, k, a, b));
                }
            }
            for (i, j) in candidate_pairs(&boxes) {
                let (s, t) = if boxes[i].owner == usize::MAX { (i, j) } else { (j, i) };
                if boxes[s].owner != usize::MAX || boxes[t].owner == usize::MAX {
                    continue;
                }
                let c = &rep.curves[boxes[t].owner];
                if surely_disjoint(&boxes[s].f, &boxes[t].f) {
                    continue;
                }
                match segment_intersection(boxes[s].a, boxes[s].b, boxes[t].a, boxes[t].b)? {
                    SegHit::None => {}
                    SegHit::Overlap => return Err(GeomError::WitnessCrossesCurve(c.vertex)),
                    SegHit::Point(p) => {
                        if p == *c.tail() || p == *c.head() {
                            continue;
                        }
                        let pc = place(&c.points, boxes[t].index, &p);
                        let k = boxes[s].index;
                        let ps = if p == poly[k] {
                            vec![poly[(k + m - 1) % m].sub(&p), next(k).sub(&p)]
                        } else if p == *next(k) {
                            vec![poly[k].sub(&p), poly[(k + 2) % m].sub(&p)]
                        } else {
                            branches(&[poly[k].clone(), next(k).clone()], &Place::Inside(0), &p)
                        };
                        if alternates(&branches(&c.points, &pc, &p), &ps) {
                            return Err(GeomError::WitnessCrossesCurve(c.vertex));
                        }
                    }
                }
            }
            let index = Indexed::new(poly);
            for c in &rep.curves {
                match sample_off(c, |p| index.on_boundary(p)) {
                    Some(p) if index.contains(&p) => {}
                    _ => return Err(GeomError::CurveOutsideWitness(c.vertex)),
                }
            }
            Box::new(move |p: &Pt| index.on_boundary(p))
        }
    };
    for c in &rep.curves {
        let (t, h) = (on_contour(c.tail()), on_contour(c.head()));
        let ok = match mode {
            OuterMode::BothEnds => t && h,
            OuterMode::AtLeastOneEnd => t || h,
        };
        if !ok {
            return Err(GeomError::EndpointNotOnContour(c.vertex));
        }
    }
    Ok(())
}
