//! Drivers behind `strandkit repro`. Each returns a JSON report and whether
//! the outcome matched the expected one.

use std::time::Instant;

use anyhow::Result;
use serde_json::{json, Value};
use strandkit_build::GRID_CONSTANT;
use strandkit_geom::Rat;
use strandkit_graph::families::{extended_wheel, random_maximal_outerplanar, random_partial_2tree, random_planar_3tree, subdivided_k23, triple_stellation, PlaneGraph};
use strandkit_graph::Graph;
use strandkit_oracle::{enumerate, Budget, Options, SearchMode, Verdict};

use crate::{checks, plane_graph};

pub struct Report {
    pub ok: bool,
    pub body: Value,
}

fn mix(seed: u64, i: u64) -> u64 {
    let mut z = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ i.wrapping_add(0x632b_e59b_d9b4_e019);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Maximal outer-planar graphs; `n` fixed or spread over 5..=200.
pub fn outerplanar_corpus(count: usize, seed: u64, n: Option<usize>) -> Result<Vec<Graph>> {
    (0..count as u64)
        .map(|i| {
            let h = mix(seed, i);
            let n = n.unwrap_or(5 + (h % 196) as usize);
            Ok(random_maximal_outerplanar(n, h)?.graph)
        })
        .collect()
}

/// Partial 2-trees, `n` fixed or spread over 3..=100, edge density in [0.3, 1].
pub fn partial_2tree_corpus(count: usize, seed: u64, n: Option<usize>) -> Result<Vec<Graph>> {
    (0..count as u64)
        .map(|i| {
            let h = mix(seed, i);
            let n = n.unwrap_or(3 + (h % 98) as usize);
            let density = 0.3 + 0.7 * ((h >> 11) as f64 / (1u64 << 53) as f64);
            Ok(random_partial_2tree(n, density, h)?)
        })
        .collect()
}

fn run_corpus(name: &str, corpus: &[Graph], mut one: impl FnMut(&Graph) -> Result<()>) -> Report {
    let t = Instant::now();
    let failures: Vec<Value> = corpus
        .iter()
        .enumerate()
        .filter_map(|(i, g)| one(g).err().map(|e| json!({"index": i, "n": g.n(), "error": e.to_string()})))
        .collect();
    Report {
        ok: failures.is_empty(),
        body: json!({
            "repro": name,
            "graphs": corpus.len(),
            "max_n": corpus.iter().map(Graph::n).max(),
            "failures": failures,
            "elapsed_ms": t.elapsed().as_millis() as u64,
        }),
    }
}

pub fn thm3(corpus: &[Graph]) -> Report {
    run_corpus("thm3", corpus, |g| checks::circle(g, false).map(|_| ()))
}

pub fn thm4(corpus: &[Graph]) -> Report {
    let mut worst: Option<Rat> = None;
    let mut r = run_corpus("thm4", corpus, |g| {
        let b = checks::vpg(g, GRID_CONSTANT, false)?;
        let ratio = checks::vpg_ratio(&b.rep, g.n());
        if worst.as_ref().is_none_or(|w| ratio > *w) {
            worst = Some(ratio);
        }
        Ok(())
    });
    r.body["grid_constant"] = json!(GRID_CONSTANT);
    r.body["max_dimension_over_n"] = json!(worst.map(|w| w.to_string()));
    r
}

pub fn lem2(corpus: &[Graph]) -> Report {
    run_corpus("lem2", corpus, |g| checks::sp(g).map(|_| ()))
}

pub fn verdict_json(v: &Verdict, elapsed_ms: u128) -> Value {
    let mut out = json!({"status": v.status(), "tried": v.tried(), "elapsed_ms": elapsed_ms as u64});
    if let Verdict::Yes { witness, ends, .. } = v {
        out["witness"] = json!(witness.break_at);
        if let Some(ends) = ends {
            out["ends"] = json!(ends);
        }
    }
    out
}

fn timed(pg: &PlaneGraph, mode: SearchMode, budget: Budget, opts: &Options) -> Result<(Verdict, Value)> {
    let t = Instant::now();
    let v = enumerate(pg, mode, budget, opts)?;
    let j = verdict_json(&v, t.elapsed().as_millis());
    Ok((v, j))
}

/// Subdivided K_{2,3}: no vector with both ends outside, some vector in base mode.
pub fn k23(opts: &Options) -> Result<Report> {
    let pg = plane_graph(subdivided_k23(), None)?;
    let (both, bj) = timed(&pg, SearchMode::BothEnds, Budget::Exhaustive, opts)?;
    let (base, sj) = timed(&pg, SearchMode::Base, Budget::Exhaustive, opts)?;
    let ok = matches!(both, Verdict::No { .. }) && matches!(base, Verdict::Yes { .. });
    Ok(Report { ok, body: json!({"repro": "sec5-k23", "both_ends": bj, "base": sj, "expected": {"both_ends": "NO", "base": "YES"}}) })
}

/// W7+ in both-ends mode. A partial budget can only be UNKNOWN.
pub fn thm6(opts: &Options, budget: Budget) -> Result<Report> {
    let pg = extended_wheel(7)?;
    let (v, j) = timed(&pg, SearchMode::BothEnds, budget, opts)?;
    let ok = match budget {
        Budget::Exhaustive => matches!(v, Verdict::No { .. }),
        _ => !matches!(v, Verdict::Yes { .. }),
    };
    Ok(Report { ok, body: json!({"repro": "thm6", "graph": "W7+", "mode": "both-ends", "verdict": j}) })
}

/// Triple stellation of a random 6-vertex planar 3-tree, sampled in base mode.
pub fn thm2_sample(seed: u64, samples: u64, opts: &Options) -> Result<Report> {
    let pg = triple_stellation(&random_planar_3tree(6, seed)?);
    let (v, j) = timed(&pg, SearchMode::Base, Budget::Samples(samples), opts)?;
    let hits = u64::from(matches!(v, Verdict::Yes { .. }));
    Ok(Report {
        ok: hits == 0,
        body: json!({
            "repro": "thm2-sample",
            "label": "evidence, not proof",
            "outcome": if hits == 0 { "UNKNOWN-with-zero-hits" } else { "YES" },
            "graph": {"n": pg.graph.n(), "m": pg.graph.edge_count(), "seed": seed},
            "samples": samples,
            "verdict": j,
        }),
    })
}
