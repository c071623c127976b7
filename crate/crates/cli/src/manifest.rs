use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use serde::Serialize;

use crate::{sha256, Input};

#[derive(Debug, Clone, Serialize)]
pub struct FileHash {
    pub path: String,
    pub sha256: String,
}

/// Record of one invocation. Timings aside, equal manifests mean equal outputs.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: Vec<String>,
    pub inputs: Vec<FileHash>,
    pub seed: Option<u64>,
    pub versions: BTreeMap<&'static str, &'static str>,
    pub grid_constant: u64,
    pub outputs: Vec<FileHash>,
    pub timings_ms: BTreeMap<String, u128>,
    #[serde(skip)]
    clock: Option<(String, Instant)>,
}

impl RunManifest {
    pub fn new(command: Vec<String>) -> Self {
        let versions = BTreeMap::from([("strandkit", env!("CARGO_PKG_VERSION"))]);
        RunManifest {
            command,
            inputs: Vec::new(),
            seed: None,
            versions,
            grid_constant: strandkit_build::GRID_CONSTANT,
            outputs: Vec::new(),
            timings_ms: BTreeMap::new(),
            clock: None,
        }
    }

    pub fn input(&mut self, input: &Input) {
        self.inputs.push(FileHash { path: input.path.clone(), sha256: input.sha256() });
    }

    /// Starts timing `phase`, closing the previous one.
    pub fn phase(&mut self, phase: &str) {
        self.stop();
        self.clock = Some((phase.to_string(), Instant::now()));
    }

    pub fn stop(&mut self) {
        if let Some((name, t)) = self.clock.take() {
            *self.timings_ms.entry(name).or_default() += t.elapsed().as_millis();
        }
    }

    /// Writes `text` to `path`, or to stdout for `None` or `-`.
    pub fn emit(&mut self, path: Option<&Path>, text: &str) -> Result<()> {
        let name = match path {
            Some(p) if p.as_os_str() != "-" => {
                std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?;
                p.display().to_string()
            }
            _ => {
                let mut out = std::io::stdout().lock();
                writeln!(out, "{text}").and_then(|_| out.flush()).context("cannot write to stdout")?;
                "-".to_string()
            }
        };
        self.outputs.push(FileHash { path: name, sha256: sha256(text.as_bytes()) });
        Ok(())
    }

    /// To `path` if given, else one JSON line on stderr.
    pub fn finish(mut self, path: Option<&Path>) -> Result<()> {
        self.stop();
        match path {
            Some(p) => {
                let text = serde_json::to_string_pretty(&self)?;
                std::fs::write(p, text + "\n").with_context(|| format!("cannot write {}", p.display()))?;
            }
            None => eprintln!("{}", serde_json::to_string(&self)?),
        }
        Ok(())
    }
}
