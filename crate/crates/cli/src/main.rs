use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use strandkit_build::{chord_to_geometry, GRID_CONSTANT};
use strandkit_cli::checks::{self, VerifyFailed};
use strandkit_cli::manifest::RunManifest;
use strandkit_cli::{parse_graph, plane_graph, repro, Input};
use strandkit_geom::json::{rep_from_json, rep_to_json, rep_to_value};
use strandkit_geom::{emit_svg, verify_1string, verify_order_preserving, verify_outer_string, OuterMode, StringRep, SvgOptions};
use strandkit_graph::families::{self as fam, PlaneGraph};
use strandkit_graph::io::graph_to_json;
use strandkit_graph::{faces, planar_embedding, Graph};
use strandkit_oracle::{decide_fixed, enumerate, space_size, BreakVector, Budget, Mode, Options, SearchMode};

#[derive(Parser)]
#[command(name = "strandkit", version, about = "Order-preserving 1-string representations of plane graphs")]
struct Cli {
    /// Write the run manifest here instead of stderr.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph of a family as Graph JSON.
    Gen {
        family: Family,
        #[arg(long, default_value_t = 7)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge density for partial 2-trees.
        #[arg(long, default_value_t = 1.0)]
        density: f64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Validate the rotation of a graph, or compute one if it has none.
    Embed {
        graph: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build a representation; it is verified before anything is written.
    Build {
        #[command(subcommand)]
        kind: BuildKind,
    },
    /// Check a representation against a graph.
    Verify {
        rep: PathBuf,
        graph: PathBuf,
        /// Check order preservation against the graph's rotation.
        #[arg(long)]
        order: bool,
        /// With --order, forbid reading a curve head to tail.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        outer: Option<OuterArg>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Decide realizability by break-vector search, or for one break vector.
    Oracle(OracleArgs),
    /// Render a representation as SVG.
    Svg {
        rep: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        crossings: bool,
        #[arg(long, default_value_t = 600.0)]
        size: f64,
    },
    /// Rerun one of the reproduction experiments.
    Repro(ReproArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Wheel,
    ExtendedWheel,
    MaximalOuterplanar,
    #[value(name = "partial-2tree")]
    Partial2tree,
    #[value(name = "planar-3tree")]
    Planar3tree,
    Stellation,
    TripleStellation,
    SubdividedK23,
}

#[derive(Args)]
struct BuildOut {
    graph: PathBuf,
    /// Representation JSON; stdout if absent.
    #[arg(short, long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Break vector JSON of the built representation.
    #[arg(long)]
    breaks: Option<PathBuf>,
}

#[derive(Subcommand)]
enum BuildKind {
    /// Chords of a circle, for outer-planar graphs.
    Circle {
        #[command(flatten)]
        io: BuildOut,
        /// JSON array of the drawing after each ear.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// One-bend orthogonal curves, for outer-planar graphs.
    Vpg {
        #[command(flatten)]
        io: BuildOut,
        #[arg(long, value_enum, default_value_t = Frame::Ortho)]
        frame: Frame,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Extended touching Ls, for partial 2-trees.
    Sp {
        #[command(flatten)]
        io: BuildOut,
        /// Graph JSON carrying the rotation derived from the contacts.
        #[arg(long)]
        embedding: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Frame {
    Diag,
    Ortho,
}

#[derive(Clone, Copy, ValueEnum)]
enum OuterArg {
    BothEnds,
    OneEnd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Base,
    BothEnds,
    OneEnd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Yes,
    No,
    Unknown,
}

#[derive(Args)]
struct OracleArgs {
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeArg::BothEnds)]
    mode: ModeArg,
    /// Try every break vector (the default).
    #[arg(long, conflicts_with_all = ["samples", "prefix", "breaks"])]
    exhaustive: bool,
    /// Test this many seeded random break vectors.
    #[arg(long, conflicts_with_all = ["prefix", "breaks"])]
    samples: Option<u64>,
    /// Test the first K vectors in exhaustive order.
    #[arg(long, conflicts_with = "breaks")]
    prefix: Option<u64>,
    /// Decide one break vector given as {"break_at": [...], "ends": [...]}.
    #[arg(long)]
    breaks: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    no_gadgets: bool,
    /// Exit 1 unless the status matches.
    #[arg(long)]
    expect: Option<Expect>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReproKind {
    Thm3,
    Thm4,
    Lem2,
    #[value(name = "sec5-k23")]
    Sec5K23,
    Thm6,
    #[value(name = "thm2-sample")]
    Thm2Sample,
}

#[derive(Args)]
struct ReproArgs {
    which: ReproKind,
    /// Vertex count; spread over the corpus range if absent.
    #[arg(long)]
    n: Option<usize>,
    /// Corpus size; 1 with --n, else 100.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    jobs: Option<usize>,
    /// Sample count for thm2-sample.
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    /// Fraction of the space to search for thm6 (whole space if absent).
    #[arg(long)]
    fraction: Option<f64>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

fn load(path: &Path, m: &mut RunManifest) -> Result<(Graph, Option<strandkit_graph::RotationScheme>)> {
    let input = Input::read(path)?;
    m.input(&input);
    parse_graph(input.text()?).with_context(|| format!("cannot parse {}", path.display()))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON value")
}

fn generate(family: Family, n: usize, seed: u64, density: f64) -> Result<PlaneGraph> {
    Ok(match family {
        Family::Wheel => fam::wheel(n)?,
        Family::ExtendedWheel => fam::extended_wheel(n)?,
        Family::MaximalOuterplanar => fam::random_maximal_outerplanar(n, seed)?,
        Family::Partial2tree => plane_graph(fam::random_partial_2tree(n, density, seed)?, None)?,
        Family::Planar3tree => fam::random_planar_3tree(n, seed)?,
        Family::Stellation => fam::stellate(&fam::random_planar_3tree(n, seed)?),
        Family::TripleStellation => fam::triple_stellation(&fam::random_planar_3tree(n, seed)?),
        Family::SubdividedK23 => plane_graph(fam::subdivided_k23(), None)?,
    })
}

fn write_build(m: &mut RunManifest, io: &BuildOut, rep: &StringRep, breaks: &[usize]) -> Result<()> {
    m.phase("write");
    m.emit(io.out.as_deref(), &rep_to_json(rep))?;
    if let Some(p) = &io.svg {
        m.emit(Some(p), &emit_svg(rep, &SvgOptions::default()))?;
    }
    if let Some(p) = &io.breaks {
        m.emit(Some(p), &pretty(&json!({"break_at": breaks})))?;
    }
    Ok(())
}

fn build(kind: BuildKind, m: &mut RunManifest) -> Result<()> {
    match kind {
        BuildKind::Circle { io, trace } => {
            let (g, given) = load(&io.graph, m)?;
            m.phase("build");
            let b = checks::circle(&g, trace.is_some())?;
            let mut rep = b.rep.clone();
            let breaks = checks::align(&mut rep, &b.rot, &g, given.as_ref())?.unwrap_or(b.breaks);
            write_build(m, &io, &rep, &breaks)?;
            if let Some(p) = trace {
                let steps = b.trace.iter().map(|d| Ok(rep_to_value(&chord_to_geometry(d)?))).collect::<Result<Vec<_>>>()?;
                m.emit(Some(&p), &pretty(&Value::Array(steps)))?;
            }
        }
        BuildKind::Vpg { io, frame, trace } => {
            let (g, given) = load(&io.graph, m)?;
            m.phase("build");
            let b = checks::vpg(&g, GRID_CONSTANT, trace.is_some())?;
            let mut rep = if frame == Frame::Diag {
                checks::verify_all(&b.diagonal, &g, &b.rot)?;
                b.diagonal.clone()
            } else {
                b.rep.clone()
            };
            let breaks = checks::align(&mut rep, &b.rot, &g, given.as_ref())?.unwrap_or(b.breaks);
            write_build(m, &io, &rep, &breaks)?;
            if let Some(p) = trace {
                let steps: Vec<Value> = b.trace.iter().map(rep_to_value).collect();
                m.emit(Some(&p), &pretty(&Value::Array(steps)))?;
            }
        }
        BuildKind::Sp { io, embedding } => {
            let (g, _) = load(&io.graph, m)?;
            m.phase("build");
            let b = checks::sp(&g)?;
            write_build(m, &io, &b.rep, &b.breaks)?;
            if let Some(p) = embedding {
                m.emit(Some(&p), &graph_to_json(&g, Some(&b.rot)))?;
            }
        }
    }
    Ok(())
}

fn verdict_line<T, E: std::fmt::Display>(r: &Result<T, E>) -> String {
    match r {
        Ok(_) => "PASS".to_string(),
        Err(e) => format!("FAIL: {e}"),
    }
}

fn verify(rep: &Path, graph: &Path, order: bool, strict: bool, outer: Option<OuterArg>, out: Option<&Path>, m: &mut RunManifest) -> Result<()> {
    let input = Input::read(rep)?;
    m.input(&input);
    let rep = rep_from_json(input.text()?)?;
    let (g, rot) = load(graph, m)?;
    m.phase("verify");
    let mut report = json!({});
    let mut ok = true;
    let r = verify_1string(&rep, &g);
    ok &= r.is_ok();
    report["one_string"] = json!(verdict_line(&r));
    if order {
        let Some(rot) = rot else { bail!("--order needs a graph with a rotation") };
        let r = verify_order_preserving(&rep, &g, &rot, strict);
        ok &= r.is_ok();
        report["order"] = json!(verdict_line(&r));
        if let Ok(b) = r {
            report["breaks"] = json!(b.iter().map(|x| x.0).collect::<Vec<_>>());
            report["reversed"] = json!(b.iter().filter(|x| x.1).count());
        }
    }
    if let Some(o) = outer {
        let mode = match o {
            OuterArg::BothEnds => OuterMode::BothEnds,
            OuterArg::OneEnd => OuterMode::AtLeastOneEnd,
        };
        let r = verify_outer_string(&rep, mode);
        ok &= r.is_ok();
        report["outer"] = json!(verdict_line(&r));
    }
    report["status"] = json!(if ok { "PASS" } else { "FAIL" });
    m.emit(out, &pretty(&report))?;
    checks::ensure(ok, "representation")
}

fn oracle(a: OracleArgs, m: &mut RunManifest) -> Result<()> {
    let (g, rot) = load(&a.graph, m)?;
    let pg = plane_graph(g, rot)?;
    m.seed = Some(a.seed);
    m.phase("oracle");
    let t = Instant::now();
    let gadgets = !a.no_gadgets;
    let (status, mut out) = if let Some(p) = &a.breaks {
        let input = Input::read(p)?;
        m.input(&input);
        let doc: Value = serde_json::from_str(input.text()?)?;
        let break_at: Vec<usize> = serde_json::from_value(doc["break_at"].clone()).context("break_at")?;
        let b = BreakVector { break_at };
        let mode = match a.mode {
            ModeArg::Base => Mode::Base,
            ModeArg::BothEnds => Mode::BothEnds,
            ModeArg::OneEnd => Mode::AtLeastOneEnd(serde_json::from_value(doc["ends"].clone()).context("one-end mode needs ends")?),
        };
        let with = decide_fixed(&pg, &b, &mode, true)?;
        let plain = decide_fixed(&pg, &b, &mode, false)?;
        let chosen = if gadgets { with } else { plain };
        let status = if chosen { "YES" } else { "NO" };
        let mut v = json!({"status": status, "tried": 1, "elapsed_ms": t.elapsed().as_millis() as u64});
        if with != plain {
            v["gadgets"] = json!(with);
            v["plain"] = json!(plain);
        }
        (status, v)
    } else {
        let mode = match a.mode {
            ModeArg::Base => SearchMode::Base,
            ModeArg::BothEnds => SearchMode::BothEnds,
            ModeArg::OneEnd => SearchMode::AtLeastOneEnd,
        };
        let budget = match (a.samples, a.prefix) {
            (Some(s), _) => Budget::Samples(s),
            (_, Some(k)) => Budget::Prefix(k),
            _ => Budget::Exhaustive,
        };
        let opts = Options { gadgets, jobs: a.jobs, seed: a.seed };
        let v = enumerate(&pg, mode, budget, &opts)?;
        let mut j = repro::verdict_json(&v, t.elapsed().as_millis());
        j["space"] = json!(space_size(&pg, mode).map(|s| s.to_string()));
        (v.status(), j)
    };
    out["gadgets_on"] = json!(gadgets);
    m.emit(a.out.as_deref(), &pretty(&out))?;
    if let Some(e) = a.expect {
        let want = match e {
            Expect::Yes => "YES",
            Expect::No => "NO",
            Expect::Unknown => "UNKNOWN",
        };
        checks::ensure(status == want, &format!("expected {want}, got {status}"))?;
    }
    Ok(())
}

fn run_repro(a: ReproArgs, m: &mut RunManifest) -> Result<()> {
    m.seed = Some(a.seed);
    let count = a.count.unwrap_or(if a.n.is_some() { 1 } else { 100 });
    let opts = Options { gadgets: true, jobs: a.jobs, seed: a.seed };
    m.phase("repro");
    let report = match a.which {
        ReproKind::Thm3 => repro::thm3(&repro::outerplanar_corpus(count, a.seed, a.n)?),
        ReproKind::Thm4 => repro::thm4(&repro::outerplanar_corpus(count, a.seed, a.n)?),
        ReproKind::Lem2 => repro::lem2(&repro::partial_2tree_corpus(count, a.seed, a.n)?),
        ReproKind::Sec5K23 => repro::k23(&opts)?,
        ReproKind::Thm6 => {
            let budget = match a.fraction {
                None => Budget::Exhaustive,
                Some(f) if f > 0.0 && f <= 1.0 => {
                    let total = space_size(&fam::extended_wheel(7)?, SearchMode::BothEnds).expect("W7+ space fits");
                    Budget::Prefix(((total as f64 * f).ceil() as u64).max(1))
                }
                Some(f) => bail!("--fraction {f} is not in (0, 1]"),
            };
            repro::thm6(&opts, budget)?
        }
        ReproKind::Thm2Sample => repro::thm2_sample(a.seed, a.samples, &opts)?,
    };
    let mut body = report.body;
    body["ok"] = json!(report.ok);
    m.emit(a.out.as_deref(), &pretty(&body))?;
    checks::ensure(report.ok, "reproduction did not match the expected outcome")
}

fn run(cli: Cli, m: &mut RunManifest) -> Result<()> {
    match cli.cmd {
        Cmd::Gen { family, n, seed, density, out } => {
            m.seed = Some(seed);
            m.phase("gen");
            let pg = generate(family, n, seed, density)?;
            m.emit(out.as_deref(), &graph_to_json(&pg.graph, Some(&pg.rot)))?;
        }
        Cmd::Embed { graph, out } => {
            let (g, rot) = load(&graph, m)?;
            m.phase("embed");
            match rot {
                Some(rot) => {
                    let r = rot.check_plane(&g).map_err(anyhow::Error::from).and_then(|_| Ok(faces(&g, &rot)?.len()));
                    let report = match &r {
                        Ok(f) => json!({"status": "PASS", "faces": f}),
                        Err(e) => json!({"status": "FAIL", "error": e.to_string()}),
                    };
                    m.emit(out.as_deref(), &pretty(&report))?;
                    checks::ensure(r.is_ok(), "rotation is not a plane embedding")?;
                }
                None => {
                    let Some(rot) = planar_embedding(&g) else {
                        bail!(VerifyFailed("graph is not planar".into()));
                    };
                    m.emit(out.as_deref(), &graph_to_json(&g, Some(&rot)))?;
                }
            }
        }
        Cmd::Build { kind } => build(kind, m)?,
        Cmd::Verify { rep, graph, order, strict, outer, out } => verify(&rep, &graph, order, strict, outer, out.as_deref(), m)?,
        Cmd::Oracle(a) => oracle(a, m)?,
        Cmd::Svg { rep, out, crossings, size } => {
            let input = Input::read(&rep)?;
            m.input(&input);
            let rep = rep_from_json(input.text()?)?;
            let opts = SvgOptions { size, mark_crossings: crossings, ..SvgOptions::default() };
            m.emit(out.as_deref(), &emit_svg(&rep, &opts))?;
        }
        Cmd::Repro(a) => run_repro(a, m)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let manifest_path = cli.manifest.clone();
    let mut m = RunManifest::new(std::env::args().collect());
    let r = run(cli, &mut m);
    if let Err(e) = m.finish(manifest_path.as_deref()) {
        eprintln!("strandkit: {e:#}");
    }
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("strandkit: {e:#}");
            if e.downcast_ref::<VerifyFailed>().is_some() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
