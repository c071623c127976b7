//! Decides order-preserving (outer-)1-string realizability of a plane graph
//! for fixed break vectors by planarity of an abstract diagram, and searches
//! the space of break vectors.

mod diagram;
mod search;

use strandkit_graph::GraphError;
use thiserror::Error;

pub use diagram::{build_h, decide_fixed, AbstractDiagram, Layout};
pub use search::{enumerate, resolve_jobs, space_size, Budget, Options, SearchMode, Verdict};

/// Where each vertex's curve is cut open: the curve meets its neighbors in
/// clockwise order starting at `break_at[v]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BreakVector {
    pub break_at: Vec<usize>,
}

/// Which curve ends must reach the contour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    Base,
    BothEnds,
    /// Per vertex: `false` for the tail, `true` for the head.
    AtLeastOneEnd(Vec<bool>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("break {index} out of range at vertex {vertex} of degree {degree}")]
    InvalidBreak { vertex: usize, index: usize, degree: usize },
    #[error("break vector has {0} entries, graph has {1} vertices")]
    WrongLength(usize, usize),
    #[error("sample budget is zero")]
    BudgetZero,
    #[error("break-vector space does not fit in 64 bits; use sampling")]
    SpaceTooLarge,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
