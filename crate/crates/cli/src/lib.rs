//! Shared pieces of the `strandkit` binary: input loading, run manifests and
//! the reproduction drivers.

pub mod checks;
pub mod manifest;
pub mod repro;

use std::path::Path;

use anyhow::{bail, Context, Result};
use sha2::{Digest, Sha256};
use strandkit_graph::families::PlaneGraph;
use strandkit_graph::io::{parse_edge_list, parse_graph_json};
use strandkit_graph::{planar_embedding, Graph, RotationScheme};

/// Input bytes kept around for hashing.
pub struct Input {
    pub path: String,
    pub bytes: Vec<u8>,
}

impl Input {
    pub fn read(path: &Path) -> Result<Self> {
        let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
        Ok(Input { path: path.display().to_string(), bytes })
    }

    pub fn text(&self) -> Result<&str> {
        std::str::from_utf8(&self.bytes).with_context(|| format!("{} is not UTF-8", self.path))
    }

    pub fn sha256(&self) -> String {
        sha256(&self.bytes)
    }
}

pub fn sha256(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Graph JSON, or an edge list when the text does not start with `{`.
pub fn parse_graph(text: &str) -> Result<(Graph, Option<RotationScheme>)> {
    if text.trim_start().starts_with('{') {
        Ok(parse_graph_json(text)?)
    } else {
        Ok((parse_edge_list(text)?, None))
    }
}

/// The given rotation, else a computed planar embedding.
pub fn plane_graph(graph: Graph, rot: Option<RotationScheme>) -> Result<PlaneGraph> {
    let rot = match rot {
        Some(r) => r,
        None => match planar_embedding(&graph) {
            Some(r) => r,
            None => bail!("graph is not planar"),
        },
    };
    rot.check_plane(&graph)?;
    Ok(PlaneGraph { graph, rot })
}
