use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("rotation at vertex {0} is not a permutation of its neighbors")]
    InconsistentRotation(usize),
    #[error("rotation scheme is not planar: V-E+F = {0}")]
    NotPlane(i64),
    #[error("graph is not outer-planar")]
    NotOuterplanar,
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("root edge {0}-{1} is not on the outer face")]
    RootNotOnOuterFace(usize, usize),
    #[error("graph is not a partial 2-tree")]
    NotPartialTwoTree,
    #[error("{family} needs n >= {min}, got {n}")]
    TooSmall { family: &'static str, min: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
