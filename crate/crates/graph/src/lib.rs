//! Combinatorial graph infrastructure: simple graphs, rotation schemes,
//! face traversal, planarity and outer-planarity, ear decompositions,
//! 2-tree completion, plus generators for the graph families used
//! throughout strandkit.

mod error;
pub mod families;
mod graph;
pub mod io;
mod outer;
mod planar;
mod rotation;
mod twotree;

pub use error::GraphError;
pub use graph::{Edge, Graph};
pub use outer::{
    biconnect_outerplanar, default_root, ear_decomposition, is_biconnected, is_outerplanar, Ear,
    EarDecomposition, OuterPlane,
};
pub use planar::{is_planar, planar_embedding, LrPlanarity};
pub use rotation::{faces, FaceSet, RotationScheme};
pub use twotree::{two_tree_completion, EliminationOrder};
