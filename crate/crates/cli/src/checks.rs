//! Build-and-verify for each constructor. Every build output goes through
//! these before it is written anywhere.

use anyhow::{bail, Result};
use strandkit_build::{build_circle, build_circle_traced, build_sp, build_vpg, build_vpg_traced, grid_size, is_l_shape, CircleBuild, SpBuild, VpgBuild};
use strandkit_geom::{rat, verify_1string, verify_order_preserving, verify_outer_string, OuterMode, Rat, StringRep};
use strandkit_graph::{Graph, RotationScheme};

/// Failed check; the binary maps it to exit code 1.
#[derive(Debug)]
pub struct VerifyFailed(pub String);

impl std::fmt::Display for VerifyFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "verification failed: {}", self.0)
    }
}

impl std::error::Error for VerifyFailed {}

fn fail<T>(what: &str, e: impl std::fmt::Display) -> Result<T> {
    Err(VerifyFailed(format!("{what}: {e}")).into())
}

/// 1-string, strict order against `rot`, and both ends on the contour.
pub fn verify_all(rep: &StringRep, g: &Graph, rot: &RotationScheme) -> Result<()> {
    if let Err(e) = verify_order_preserving(rep, g, rot, true) {
        return fail("order", e);
    }
    if let Err(e) = verify_outer_string(rep, OuterMode::BothEnds) {
        return fail("outer", e);
    }
    Ok(())
}

pub fn circle(g: &Graph, traced: bool) -> Result<CircleBuild> {
    let b = if traced { build_circle_traced(g)? } else { build_circle(g)? };
    verify_all(&b.rep, g, &b.rot)?;
    Ok(b)
}

fn axis_parallel(rep: &StringRep) -> bool {
    rep.curves.iter().all(|c| c.segments().all(|(p, q)| p.x == q.x || p.y == q.y))
}

/// Largest of width/n and height/n.
pub fn vpg_ratio(rep: &StringRep, n: usize) -> Rat {
    let (w, h) = grid_size(rep);
    let n = rat(n.max(1) as i64, 1);
    (w / &n).max(h / &n)
}

pub fn vpg(g: &Graph, grid_constant: u64, traced: bool) -> Result<VpgBuild> {
    let b = if traced { build_vpg_traced(g)? } else { build_vpg(g)? };
    verify_all(&b.rep, g, &b.rot)?;
    if let Some(c) = b.rep.curves.iter().find(|c| c.bends() > 1) {
        return fail("bends", format!("curve {} has {} bends", c.vertex, c.bends()));
    }
    if !axis_parallel(&b.rep) {
        return fail("frame", "a segment is not axis-parallel");
    }
    let r = vpg_ratio(&b.rep, g.n());
    if r > rat(grid_constant as i64, 1) {
        return fail("grid", format!("dimension/n = {r} exceeds {grid_constant}"));
    }
    Ok(b)
}

pub fn sp(g: &Graph) -> Result<SpBuild> {
    let b = build_sp(g)?;
    if let Err(e) = verify_1string(&b.rep, g) {
        return fail("1-string", e);
    }
    if let Err(e) = verify_order_preserving(&b.rep, g, &b.rot, true) {
        return fail("order", e);
    }
    if let Some(c) = b.rep.curves.iter().find(|c| !is_l_shape(c)) {
        return fail("shape", format!("curve {} is not an L", c.vertex));
    }
    Ok(b)
}

pub fn ensure(ok: bool, what: &str) -> Result<()> {
    if !ok {
        bail!(VerifyFailed(what.to_string()));
    }
    Ok(())
}

fn same_rotation(a: &RotationScheme, b: &RotationScheme) -> bool {
    a.n() == b.n()
        && (0..a.n()).all(|v| a.order(v).len() == b.order(v).len() && a.order(v).iter().all(|&u| b.position(v, u).is_some() && a.succ(v, u) == b.succ(v, u)))
}

/// Reflection in a vertical line through the bounding box, with every curve
/// reversed, so it preserves the mirrored rotation read tail to head.
pub fn mirror(rep: &StringRep) -> StringRep {
    let xs: Vec<&Rat> = rep.points().map(|p| &p.x).collect();
    let sum = match (xs.iter().min(), xs.iter().max()) {
        (Some(&lo), Some(&hi)) => lo + hi,
        _ => rat(0, 1),
    };
    let mut out = rep.map_points(|p| strandkit_geom::Pt::new(&sum - &p.x, p.y.clone()), &rat(1, 1));
    for c in &mut out.curves {
        c.points.reverse();
    }
    out
}

/// Matches a build to the rotation the input carried, if any. Outer-planar
/// embeddings are unique up to mirroring, so anything else is rejected.
/// Returns the breaks as indices into the input rotation's lists.
pub fn align(rep: &mut StringRep, built: &RotationScheme, g: &Graph, given: Option<&RotationScheme>) -> Result<Option<Vec<usize>>> {
    let Some(given) = given else { return Ok(None) };
    if !same_rotation(built, given) {
        if !same_rotation(&built.reversed(), given) {
            bail!("input rotation is not an outer-planar embedding of the graph");
        }
        *rep = mirror(rep);
        verify_all(rep, g, given)?;
    }
    let breaks = verify_order_preserving(rep, g, given, true).map_err(|e| VerifyFailed(e.to_string()))?;
    Ok(Some(breaks.into_iter().map(|b| b.0).collect()))
}
