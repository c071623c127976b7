use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use strandkit_graph::families::PlaneGraph;
use strandkit_graph::{LrPlanarity, RotationScheme};

use crate::diagram::Layout;
use crate::{BreakVector, OracleError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Base,
    BothEnds,
    /// Searches end choices along with breaks.
    AtLeastOneEnd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Budget {
    Exhaustive,
    /// The first `k` vectors of the exhaustive order.
    Prefix(u64),
    /// Uniform samples drawn from the seeded generator.
    Samples(u64),
}

#[derive(Debug, Clone)]
pub struct Options {
    pub gadgets: bool,
    /// Worker count; falls back to `STRANDKIT_JOBS`, then to the core count.
    pub jobs: Option<usize>,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { gadgets: true, jobs: None, seed: 0 }
    }
}

/// `tried` counts vectors up to and including the witness in search order,
/// so it does not depend on the worker count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Yes { witness: BreakVector, ends: Option<Vec<bool>>, tried: u64 },
    No { tried: u64 },
    Unknown { tried: u64 },
}

impl Verdict {
    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Yes { .. } => "YES",
            Verdict::No { .. } => "NO",
            Verdict::Unknown { .. } => "UNKNOWN",
        }
    }

    pub fn tried(&self) -> u64 {
        match self {
            Verdict::Yes { tried, .. } | Verdict::No { tried } | Verdict::Unknown { tried } => *tried,
        }
    }
}

pub fn resolve_jobs(jobs: Option<usize>) -> usize {
    jobs.or_else(|| std::env::var("STRANDKIT_JOBS").ok().and_then(|s| s.parse().ok()))
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1)
}

/// Number of break vectors (times end choices), if it fits in 64 bits.
pub fn space_size(pg: &PlaneGraph, mode: SearchMode) -> Option<u64> {
    let per = if mode == SearchMode::AtLeastOneEnd { 2 } else { 1 };
    (0..pg.graph.n()).try_fold(1u64, |acc, v| acc.checked_mul(pg.graph.degree(v).max(1) as u64 * per))
}

/// H for one layout, with the edge slots each vertex rewrites. A core may
/// cover an induced subgraph; `local` and `rebreak` translate vertices and
/// breaks into it.
struct Core {
    layout: Layout,
    slot: Vec<usize>,
    apex_slot: Vec<usize>,
    template: Vec<(usize, usize)>,
    local: Option<Vec<Option<usize>>>,
    rebreak: Vec<Vec<usize>>,
    members: Vec<usize>,
}

impl Core {
    fn new(pg: &PlaneGraph, mode: SearchMode, gadgets: bool) -> Self {
        let layout = Layout::new(pg, gadgets);
        let n = layout.n;
        let mut template = layout.fixed.clone();
        let mut slot = vec![0; n];
        for v in 0..n {
            slot[v] = template.len();
            template.resize(template.len() + layout.degree(v) + 1, (0, 0));
            layout.path(v, 0, &mut template[slot[v]..]);
        }
        let apex = layout.apex();
        let mut apex_slot = vec![0; n];
        for v in 0..n {
            match mode {
                SearchMode::Base => {}
                SearchMode::BothEnds => {
                    template.push((apex, layout.tail(v)));
                    template.push((apex, layout.head(v)));
                }
                SearchMode::AtLeastOneEnd => {
                    apex_slot[v] = template.len();
                    template.push((apex, layout.tail(v)));
                }
            }
        }
        Core { layout, slot, apex_slot, template, local: None, rebreak: Vec::new(), members: (0..n).collect() }
    }

    /// Core on the subgraph induced by `keep` (sorted), with the induced
    /// rotation. Its diagram is a minor of the full one.
    fn induced(pg: &PlaneGraph, keep: &[usize], mode: SearchMode, gadgets: bool) -> Self {
        let graph = pg.graph.induced(keep);
        let inside = |w: &usize| keep.binary_search(w).is_ok();
        let order = keep
            .iter()
            .map(|&v| pg.rot.order(v).iter().filter_map(|w| keep.binary_search(w).ok()).collect())
            .collect();
        let rot = RotationScheme::from_clockwise(&graph, order).expect("induced rotation");
        let mut core = Core::new(&PlaneGraph { graph, rot }, mode, gadgets);
        let mut local = vec![None; pg.graph.n()];
        let mut rebreak = vec![Vec::new(); pg.graph.n()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = Some(i);
            let full = pg.rot.order(v);
            let d = core.layout.degree(i).max(1);
            rebreak[v] = (0..full.len().max(1)).map(|b| full[..b].iter().filter(|w| inside(w)).count() % d).collect();
        }
        core.local = Some(local);
        core.rebreak = rebreak;
        core.members = keep.to_vec();
        core
    }

    fn set(&self, edges: &mut [(usize, usize)], v: usize, b: usize, end: Option<bool>) {
        let (v, b) = match &self.local {
            None => (v, b),
            Some(local) => match local[v] {
                Some(i) => (i, self.rebreak[v][b]),
                None => return,
            },
        };
        let start = self.slot[v];
        self.layout.path(v, b, &mut edges[start..start + self.layout.degree(v) + 1]);
        if let Some(head) = end {
            let e = if head { self.layout.head(v) } else { self.layout.tail(v) };
            edges[self.apex_slot[v]] = (self.layout.apex(), e);
        }
    }
}

/// Neighbors per window filter, and the most windows kept.
const WINDOW: usize = 5;
const MAX_FILTERS: usize = 24;

/// Mixed-radix numbering of the search space. Position 0 is the vertex of
/// highest degree and the most significant digit.
struct Space {
    core: Core,
    // minors of H, each a cheap early rejection: a high degree vertex with
    // a few consecutive neighbors, and the same without gadgets
    filters: Vec<Core>,
    n: usize,
    one_end: bool,
    order: Vec<usize>,
    pos: Vec<usize>,
    radix: Vec<u64>,
    member_of: Vec<Vec<usize>>,
}

impl Space {
    fn new(pg: &PlaneGraph, mode: SearchMode, gadgets: bool) -> Self {
        let core = Core::new(pg, mode, gadgets);
        let n = core.layout.n;
        let one_end = mode == SearchMode::AtLeastOneEnd;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(core.layout.degree(v)), v));
        let mut pos = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let radix = order.iter().map(|&v| core.layout.degree(v).max(1) as u64 * if one_end { 2 } else { 1 }).collect();
        let mut windows: Vec<Vec<usize>> = Vec::new();
        for &c in &order {
            let around = pg.rot.order(c);
            let d = around.len();
            if d < WINDOW || windows.len() >= MAX_FILTERS {
                break;
            }
            let count = if d == WINDOW { 1 } else { d };
            for i in 0..count {
                let mut w: Vec<usize> = (0..WINDOW).map(|j| around[(i + j) % d]).collect();
                w.push(c);
                w.sort_unstable();
                if w.len() < n && !windows.contains(&w) {
                    windows.push(w);
                }
            }
        }
        windows.truncate(MAX_FILTERS);
        let mut filters: Vec<Core> = windows.iter().map(|w| Core::induced(pg, w, mode, gadgets)).collect();
        if gadgets {
            filters.extend(windows.iter().map(|w| Core::induced(pg, w, mode, false)));
            filters.push(Core::new(pg, mode, false));
        }
        let mut member_of = vec![Vec::new(); n];
        for (k, c) in filters.iter().enumerate() {
            for &v in &c.members {
                member_of[v].push(k);
            }
        }
        Space { core, filters, n, one_end, order, pos, radix, member_of }
    }
    fn digits_of(&self, mut index: u64) -> Vec<u64> {
        let mut d = vec![0; self.radix.len()];
        for p in (0..self.radix.len()).rev() {
            d[p] = index % self.radix[p];
            index /= self.radix[p];
        }
        d
    }

    fn witness(&self, digits: &[u64]) -> (BreakVector, Option<Vec<bool>>) {
        let mut b = vec![0; self.n];
        let mut ends = vec![false; self.n];
        for (p, &v) in self.order.iter().enumerate() {
            let (i, e) = self.split(digits[p]);
            b[v] = i;
            ends[v] = e;
        }
        (BreakVector { break_at: b }, self.one_end.then_some(ends))
    }

    fn split(&self, digit: u64) -> (usize, bool) {
        if self.one_end {
            ((digit / 2) as usize, digit % 2 == 1)
        } else {
            (digit as usize, false)
        }
    }
}

struct Worker<'a> {
    space: &'a Space,
    edges: Vec<(usize, usize)>,
    filters: Vec<Vec<(usize, usize)>>,
    digits: Vec<u64>,
    // sampling redraws every digit, so diagrams are written only when tested
    lazy: bool,
    lr: LrPlanarity,
    // filters in use, best first, with how often each was reached and
    // how often it rejected
    active: Vec<usize>,
    reached: Vec<u64>,
    rejected: Vec<u64>,
    calls: u64,
}

impl<'a> Worker<'a> {
    fn new(space: &'a Space, lazy: bool) -> Self {
        let digits = vec![0; space.radix.len()];
        let filters = space.filters.iter().map(|c| c.template.clone()).collect();
        let k = space.filters.len();
        Worker {
            space,
            edges: space.core.template.clone(),
            filters,
            digits,
            lazy,
            lr: LrPlanarity::new(),
            active: (0..k).collect(),
            reached: vec![0; k],
            rejected: vec![0; k],
            calls: 0,
        }
    }

    fn write(&self, c: &Core, edges: &mut [(usize, usize)], v: usize) {
        let (b, head) = self.space.split(self.digits[self.space.pos[v]]);
        c.set(edges, v, b, self.space.one_end.then_some(head));
    }

    fn set(&mut self, p: usize, digit: u64) {
        self.digits[p] = digit;
        if self.lazy {
            return;
        }
        let s = self.space;
        let v = s.order[p];
        let mut edges = std::mem::take(&mut self.edges);
        self.write(&s.core, &mut edges, v);
        self.edges = edges;
        for &k in &s.member_of[v] {
            let mut edges = std::mem::take(&mut self.filters[k]);
            self.write(&s.filters[k], &mut edges, v);
            self.filters[k] = edges;
        }
    }

    fn load(&mut self, index: u64) {
        for (p, d) in self.space.digits_of(index).into_iter().enumerate() {
            self.set(p, d);
        }
    }

    fn step(&mut self) {
        for p in (0..self.digits.len()).rev() {
            let d = self.digits[p] + 1;
            if d < self.space.radix[p] {
                self.set(p, d);
                return;
            }
            self.set(p, 0);
        }
    }

    fn test(&mut self, c: &Core, mut edges: Vec<(usize, usize)>) -> (bool, Vec<(usize, usize)>) {
        if self.lazy {
            for &v in &c.members {
                self.write(c, &mut edges, v);
            }
        }
        (self.lr.test(c.layout.apex() + 1, &edges), edges)
    }

    /// Keeps the filters whose expected saving exceeds their cost, ordered by
    /// rejection rate per edge.
    fn reorder(&mut self) {
        let s = self.space;
        let full = s.core.template.len() as f64;
        let score = |k: usize| {
            let p = (self.rejected[k] + 1) as f64 / (self.reached[k] + 2) as f64;
            (p, p / s.filters[k].template.len() as f64)
        };
        let mut keep: Vec<usize> =
            (0..s.filters.len()).filter(|&k| score(k).0 * full > s.filters[k].template.len() as f64).collect();
        keep.sort_by(|&a, &b| score(b).1.total_cmp(&score(a).1));
        self.active = keep;
    }

    fn planar(&mut self) -> bool {
        let s = self.space;
        self.calls += 1;
        // a few calls in every round run all filters to refresh their rates
        let explore = self.calls % 4096 < 8;
        if self.calls % 4096 == 8 {
            self.reorder();
        }
        let mut pass = true;
        let count = if explore { s.filters.len() } else { self.active.len() };
        for i in 0..count {
            let k = if explore { i } else { self.active[i] };
            let taken = std::mem::take(&mut self.filters[k]);
            let (ok, edges) = self.test(&s.filters[k], taken);
            self.filters[k] = edges;
            if explore {
                self.reached[k] += 1;
                self.rejected[k] += u64::from(!ok);
            }
            if !ok {
                pass = false;
                if !explore {
                    return false;
                }
            }
        }
        if !pass {
            return false;
        }
        let taken = std::mem::take(&mut self.edges);
        let (ok, edges) = self.test(&s.core, taken);
        self.edges = edges;
        ok
    }
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    // the planarity DFS recurses once per node of H
    rayon::ThreadPoolBuilder::new().num_threads(jobs).stack_size(64 << 20).build().expect("thread pool")
}

/// Searches break vectors of `pg` for one whose diagram is planar.
pub fn enumerate(pg: &PlaneGraph, mode: SearchMode, budget: Budget, opts: &Options) -> Result<Verdict, OracleError> {
    let space = Space::new(pg, mode, opts.gadgets);
    let jobs = resolve_jobs(opts.jobs);
    let found = AtomicU64::new(u64::MAX);
    let hit = match budget {
        Budget::Samples(0) | Budget::Prefix(0) => return Err(OracleError::BudgetZero),
        Budget::Samples(k) => {
            const CHUNK: u64 = 1024;
            let chunks = k.div_ceil(CHUNK);
            let hit = pool(jobs).install(|| {
                (0..chunks)
                    .into_par_iter()
                    .map_init(
                        || Worker::new(&space, true),
                        |w, c| {
                            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
                            rng.set_stream(c);
                            let start = c * CHUNK;
                            for i in start..(start + CHUNK).min(k) {
                                if found.load(Ordering::Relaxed) < i {
                                    return None;
                                }
                                for p in 0..space.radix.len() {
                                    let d = rng.gen_range(0..space.radix[p]);
                                    w.set(p, d);
                                }
                                if w.planar() {
                                    found.fetch_min(i, Ordering::Relaxed);
                                    return Some((i, w.digits.clone()));
                                }
                            }
                            None
                        },
                    )
                    .flatten()
                    .min_by_key(|(i, _)| *i)
            });
            return Ok(match hit {
                Some((i, d)) => yes(&space, &d, i),
                None => Verdict::Unknown { tried: k },
            });
        }
        Budget::Exhaustive | Budget::Prefix(_) => {
            let total = space_size(pg, mode).ok_or(OracleError::SpaceTooLarge)?;
            let limit = match budget {
                Budget::Prefix(k) => k.min(total),
                _ => total,
            };
            let chunk = limit.div_ceil(1024).clamp(1, 1 << 18);
            let chunks = limit.div_ceil(chunk);
            let hit = pool(jobs).install(|| {
                (0..chunks)
                    .into_par_iter()
                    .map_init(
                        || Worker::new(&space, false),
                        |w, c| {
                            let start = c * chunk;
                            w.load(start);
                            for i in start..(start + chunk).min(limit) {
                                if found.load(Ordering::Relaxed) < i {
                                    return None;
                                }
                                if w.planar() {
                                    found.fetch_min(i, Ordering::Relaxed);
                                    return Some((i, w.digits.clone()));
                                }
                                w.step();
                            }
                            None
                        },
                    )
                    .flatten()
                    .min_by_key(|(i, _)| *i)
            });
            match hit {
                Some((i, d)) => yes(&space, &d, i),
                None if limit == total => Verdict::No { tried: total },
                None => Verdict::Unknown { tried: limit },
            }
        }
    };
    Ok(hit)
}

fn yes(space: &Space, digits: &[u64], index: u64) -> Verdict {
    let (witness, ends) = space.witness(digits);
    Verdict::Yes { witness, ends, tried: index + 1 }
}
