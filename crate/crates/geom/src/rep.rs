use std::cmp::Ordering;

use crate::point::orient;
use crate::segment::{segment_intersection, SegHit};
use crate::{GeomError, Pt, Rat};

/// A directed polyline: tail is `points[0]`, head is the last point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub vertex: usize,
    pub points: Vec<Pt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContourWitness {
    Circle { center: Pt, r2: Rat },
    /// Closed polyline; the last point connects back to the first.
    Polyline(Vec<Pt>),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StringRep {
    pub curves: Vec<Curve>,
    pub witness: Option<ContourWitness>,
}

impl Curve {
    pub fn new(vertex: usize, points: Vec<Pt>) -> Self {
        Curve { vertex, points }
    }

    pub fn tail(&self) -> &Pt {
        &self.points[0]
    }

    pub fn head(&self) -> &Pt {
        self.points.last().unwrap()
    }

    pub fn segments(&self) -> impl Iterator<Item = (&Pt, &Pt)> {
        self.points.windows(2).map(|w| (&w[0], &w[1]))
    }

    /// Interior points where the direction changes.
    pub fn bends(&self) -> usize {
        self.points
            .windows(3)
            .filter(|w| {
                orient(&w[0], &w[1], &w[2]) != Ordering::Equal
                    || w[1].sub(&w[0]).dot(&w[2].sub(&w[1])) < Rat::from_integer(0.into())
            })
            .count()
    }

    pub fn reversed(&self) -> Curve {
        Curve { vertex: self.vertex, points: self.points.iter().rev().cloned().collect() }
    }

    /// At least two points, consecutive points distinct, no self-intersection.
    pub fn validate(&self) -> Result<(), GeomError> {
        let bad = |m: &str| Err(GeomError::BadCurve(self.vertex, m.to_string()));
        if self.points.len() < 2 {
            return bad("fewer than two points");
        }
        if self.points.windows(2).any(|w| w[0] == w[1]) {
            return bad("repeated consecutive point");
        }
        let segs: Vec<(&Pt, &Pt)> = self.segments().collect();
        for i in 0..segs.len() {
            for j in i + 1..segs.len() {
                let hit = segment_intersection(segs[i].0, segs[i].1, segs[j].0, segs[j].1)?;
                let ok = match hit {
                    SegHit::None => true,
                    SegHit::Point(p) => j == i + 1 && p == *segs[i].1,
                    SegHit::Overlap => false,
                };
                if !ok {
                    return bad("self-intersection");
                }
            }
        }
        Ok(())
    }
}

impl StringRep {
    pub fn new(curves: Vec<Curve>) -> Self {
        StringRep { curves, witness: None }
    }

    pub fn curve(&self, v: usize) -> Option<&Curve> {
        self.curves.iter().find(|c| c.vertex == v)
    }

    /// Applies `f` to every point of every curve and of a polyline witness.
    /// Circle witnesses are mapped through their center with `r2` rescaled
    /// by `scale2`, the squared scale factor of `f`.
    pub fn map_points(&self, f: impl Fn(&Pt) -> Pt, scale2: &Rat) -> StringRep {
        let curves = self
            .curves
            .iter()
            .map(|c| Curve { vertex: c.vertex, points: c.points.iter().map(&f).collect() })
            .collect();
        let witness = self.witness.as_ref().map(|w| match w {
            ContourWitness::Circle { center, r2 } => {
                ContourWitness::Circle { center: f(center), r2: r2 * scale2 }
            }
            ContourWitness::Polyline(ps) => ContourWitness::Polyline(ps.iter().map(&f).collect()),
        });
        StringRep { curves, witness }
    }

    pub fn total_bends(&self) -> usize {
        self.curves.iter().map(Curve::bends).sum()
    }

    /// All curve points, for bounding boxes.
    pub fn points(&self) -> impl Iterator<Item = &Pt> {
        self.curves.iter().flat_map(|c| c.points.iter())
    }
}
