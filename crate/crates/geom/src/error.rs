use thiserror::Error;

use crate::Pt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("degenerate segment at {0}")]
    DegenerateSegment(Box<Pt>),
    #[error("curve {0} is malformed: {1}")]
    BadCurve(usize, String),
    #[error("curves {0} and {1} touch at {2} without crossing")]
    TouchingPoint(usize, usize, Box<Pt>),
    #[error("three or more curves meet at {0}")]
    TripleIntersection(Box<Pt>),
    #[error("curves {0} and {1} overlap")]
    CurveOverlap(usize, usize),
    #[error("an endpoint of curve {0} lies on curve {1}")]
    EndpointOnCurve(usize, usize),
    #[error("curves {0} and {1} cross {2} times, expected {3}")]
    CrossingCount(usize, usize, usize, usize),
    #[error("no curve for vertex {0}")]
    MissingCurve(usize),
    #[error("curve for unknown vertex {0}")]
    ExtraCurve(usize),
    #[error("order violation at {v}: observed {observed:?}, clockwise order {expected:?}")]
    OrderViolation { v: usize, observed: Vec<usize>, expected: Vec<usize> },
    #[error("representation has no contour witness")]
    MissingWitness,
    #[error("contour witness is malformed: {0}")]
    BadWitness(String),
    #[error("contour witness crosses curve {0}")]
    WitnessCrossesCurve(usize),
    #[error("curve {0} lies outside the contour witness")]
    CurveOutsideWitness(usize),
    #[error("required endpoint of curve {0} is not on the contour")]
    EndpointNotOnContour(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
