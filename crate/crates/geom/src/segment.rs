use std::cmp::Ordering;

use num::Zero;

use crate::profile::FBox;
use crate::point::orient;
use crate::{GeomError, Pt, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegHit {
    None,
    Point(Pt),
    Overlap,
}

fn on_segment_collinear(a: &Pt, b: &Pt, p: &Pt) -> bool {
    a.x.clone().min(b.x.clone()) <= p.x
        && p.x <= a.x.clone().max(b.x.clone())
        && a.y.clone().min(b.y.clone()) <= p.y
        && p.y <= a.y.clone().max(b.y.clone())
}

/// True if `p` lies on the closed segment `a b`.
pub fn point_on_segment(a: &Pt, b: &Pt, p: &Pt) -> bool {
    orient(a, b, p) == Ordering::Equal && on_segment_collinear(a, b, p)
}

fn bbox_disjoint(a0: &Pt, a1: &Pt, b0: &Pt, b1: &Pt) -> bool {
    let (ax0, ax1) = if a0.x <= a1.x { (&a0.x, &a1.x) } else { (&a1.x, &a0.x) };
    let (bx0, bx1) = if b0.x <= b1.x { (&b0.x, &b1.x) } else { (&b1.x, &b0.x) };
    if ax1 < bx0 || bx1 < ax0 {
        return true;
    }
    let (ay0, ay1) = if a0.y <= a1.y { (&a0.y, &a1.y) } else { (&a1.y, &a0.y) };
    let (by0, by1) = if b0.y <= b1.y { (&b0.y, &b1.y) } else { (&b1.y, &b0.y) };
    ay1 < by0 || by1 < ay0
}

/// Exact classification of the intersection of closed segments `a0 a1` and `b0 b1`.
pub fn segment_intersection(a0: &Pt, a1: &Pt, b0: &Pt, b1: &Pt) -> Result<SegHit, GeomError> {
    if a0 == a1 {
        return Err(GeomError::DegenerateSegment(Box::new(a0.clone())));
    }
    if b0 == b1 {
        return Err(GeomError::DegenerateSegment(Box::new(b0.clone())));
    }
    if bbox_disjoint(a0, a1, b0, b1) {
        return Ok(SegHit::None);
    }
    let d1 = orient(b0, b1, a0);
    let d2 = orient(b0, b1, a1);
    let d3 = orient(a0, a1, b0);
    let d4 = orient(a0, a1, b1);
    use Ordering::*;
    if d1 == Equal && d2 == Equal {
        // collinear: intersect the parameter ranges along the dominant axis
        let key = |p: &Pt| -> Rat {
            if a0.x != a1.x {
                p.x.clone()
            } else {
                p.y.clone()
            }
        };
        let (mut s0, mut s1) = (key(a0), key(a1));
        if s0 > s1 {
            std::mem::swap(&mut s0, &mut s1);
        }
        let (mut t0, mut t1) = (key(b0), key(b1));
        if t0 > t1 {
            std::mem::swap(&mut t0, &mut t1);
        }
        let lo = if s0 > t0 { s0 } else { t0 };
        let hi = if s1 < t1 { s1 } else { t1 };
        return Ok(match lo.cmp(&hi) {
            Greater => SegHit::None,
            Less => SegHit::Overlap,
            Equal => {
                let p = [a0, a1].into_iter().find(|p| key(p) == lo).unwrap();
                SegHit::Point(p.clone())
            }
        });
    }
    if d1 == d2 || d3 == d4 {
        // both ends strictly on one side (equal non-zero signs)
        if (d1 == d2 && d1 != Equal) || (d3 == d4 && d3 != Equal) {
            return Ok(SegHit::None);
        }
    }
    let r = a1.sub(a0);
    let s = b1.sub(b0);
    let denom = r.cross(&s);
    if denom.is_zero() {
        return Ok(SegHit::None);
    }
    let t = b0.sub(a0).cross(&s) / &denom;
    let u = b0.sub(a0).cross(&r) / &denom;
    let zero = Rat::zero();
    let one = Rat::from_integer(1.into());
    if t < zero || t > one || u < zero || u > one {
        return Ok(SegHit::None);
    }
    Ok(SegHit::Point(a0.add(&r.scale(&t))))
}


/// Float filter: true only when the segments certainly do not meet.
pub(crate) fn surely_disjoint(s: &FBox, t: &FBox) -> bool {
    let (a, b, c, d) = (s.fa, s.fb, t.fa, t.fb);
    if [a, b, c, d].iter().any(|p| !p.0.is_finite() || !p.1.is_finite() || p.0.abs() > 1e150 || p.1.abs() > 1e150) {
        return false;
    }
    // orientations of r and s against the line pq, with a generous error bound
    let side = |p: (f64, f64), q: (f64, f64), r: (f64, f64), s: (f64, f64)| {
        let o = |r: (f64, f64)| {
            let v = (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
            let m = (q.0.abs() + p.0.abs()) * (r.1.abs() + p.1.abs()) + (q.1.abs() + p.1.abs()) * (r.0.abs() + p.0.abs());
            (v, m * 1e-8 + 1e-200)
        };
        let ((o1, e1), (o2, e2)) = (o(r), o(s));
        (o1 > e1 && o2 > e2) || (o1 < -e1 && o2 < -e2)
    };
    side(a, b, c, d) || side(c, d, a, b)
}
