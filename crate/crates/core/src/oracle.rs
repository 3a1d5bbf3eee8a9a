//! Exhaustive enumeration of simple realizations with bounded segment
//! lengths.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bounds::{axis_bounds, min_vertical_crossings, ordinary_from_chain, rotation_number, self_intersections, vertical_crossings};
use crate::construct::Constructor;
use crate::error::{Error, Result};
use crate::geom::{apply_isometry, Chain, Isometry, Point};
use crate::reach::{characterize, connectivity, contains, Closest};
use crate::turnseq::{Dir, TurnSequence};

pub const BUDGET_ENV: &str = "TURNREACH_TIME_BUDGET_MS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    pub lmax: u32,
    /// Endpoints are recorded inside `[-window, window]²`.
    pub window: i64,
    /// Increasing length caps; convergence compares the last two.
    pub escalation: Vec<u32>,
    pub budget: Option<Duration>,
}

impl OracleConfig {
    /// `lmax = n + 2`, window `3n + 5`, escalation `{n, n+2, n+4}`.
    pub fn for_len(n: usize) -> OracleConfig {
        let n32 = n as u32;
        OracleConfig {
            lmax: n32 + 2,
            window: 3 * n as i64 + 5,
            escalation: vec![n32.max(1), n32 + 2, n32 + 4],
            budget: None,
        }
    }

    /// Fixed cap; convergence is judged between `lmax - 1` and `lmax`.
    pub fn fixed(n: usize, lmax: u32) -> OracleConfig {
        let lmax = lmax.max(1);
        let escalation = if lmax > 1 { vec![lmax - 1, lmax] } else { vec![lmax] };
        OracleConfig { lmax, escalation, ..OracleConfig::for_len(n) }
    }

    pub fn with_window(mut self, window: i64) -> OracleConfig {
        self.window = window;
        self
    }

    pub fn with_budget(mut self, budget: Option<Duration>) -> OracleConfig {
        self.budget = budget;
        self
    }

    /// Reads the time budget from `TURNREACH_TIME_BUDGET_MS` when set.
    pub fn budget_from_env(self) -> OracleConfig {
        let ms = std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse::<u64>().ok());
        match ms {
            Some(ms) => self.with_budget(Some(Duration::from_millis(ms))),
            None => self,
        }
    }

    /// Largest cap the enumeration has to run at.
    pub fn top(&self) -> u32 {
        self.escalation.iter().copied().chain([self.lmax]).max().unwrap_or(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub lmax: u32,
    pub reachable_points: BTreeSet<Point>,
    /// Signed coordinate of the closest point on each reached axis.
    pub closest_axis: Closest,
    pub converged: bool,
}

/// Walks every simple realization of `seq` with segment lengths in
/// `1..=lmax`, calling `visit(bends, longest)` once per chain.
pub fn for_each_realization<F>(seq: &TurnSequence, lmax: u32, budget: Option<Duration>, mut visit: F) -> Result<()>
where
    F: FnMut(&[Point], u32),
{
    walk(seq, lmax, budget, |b, l| {
        visit(b, l);
        false
    })
    .map(|_| ())
}

/// First realization (in ascending length order) accepted by `accept`.
pub fn find_realization<F>(seq: &TurnSequence, lmax: u32, budget: Option<Duration>, mut accept: F) -> Result<Option<Chain>>
where
    F: FnMut(&[Point]) -> bool,
{
    let mut found = None;
    walk(seq, lmax, budget, |b, _| {
        if accept(b) {
            found = Some(Chain::new(b.to_vec()));
            true
        } else {
            false
        }
    })?;
    Ok(found)
}

/// Depth-first walk; `visit` returns true to stop.
fn walk<F>(seq: &TurnSequence, lmax: u32, budget: Option<Duration>, mut visit: F) -> Result<bool>
where
    F: FnMut(&[Point], u32) -> bool,
{
    let n = seq.len();
    let lmax = lmax.max(1) as i64;
    let dirs: Vec<Dir> = seq.profile().directions;
    let reach = (n as i64 + 1) * lmax + 1;
    let side = (2 * reach + 1) as usize;
    let mut walker = Walker {
        dirs,
        lmax,
        reach,
        side,
        occupied: vec![false; side * side],
        bends: vec![Point::ORIGIN; n + 2],
        deadline: budget.map(|b| Instant::now() + b),
        ticks: 0,
    };
    let o = walker.cell(Point::ORIGIN);
    walker.occupied[o] = true;
    walker.go(0, 0, &mut visit)
}

struct Walker {
    dirs: Vec<Dir>,
    lmax: i64,
    reach: i64,
    side: usize,
    occupied: Vec<bool>,
    bends: Vec<Point>,
    deadline: Option<Instant>,
    ticks: u32,
}

impl Walker {
    fn cell(&self, p: Point) -> usize {
        ((p.y + self.reach) as usize) * self.side + (p.x + self.reach) as usize
    }

    fn go<F: FnMut(&[Point], u32) -> bool>(&mut self, k: usize, longest: i64, visit: &mut F) -> Result<bool> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Error::Timeout);
                }
            }
        }
        let last = k + 1 == self.dirs.len();
        let (dx, dy) = self.dirs[k].unit();
        let start = self.bends[k];
        let mut p = start;
        let mut len = 0;
        let mut result = Ok(false);
        while len < self.lmax {
            p = Point::new(p.x + dx, p.y + dy);
            let c = self.cell(p);
            if self.occupied[c] {
                break;
            }
            self.occupied[c] = true;
            len += 1;
            self.bends[k + 1] = p;
            let longest = longest.max(len);
            if last {
                if visit(&self.bends, longest as u32) {
                    result = Ok(true);
                    break;
                }
            } else {
                result = self.go(k + 1, longest, visit);
                if !matches!(result, Ok(false)) {
                    break;
                }
            }
        }
        // Unmark the walked segment.
        let mut q = start;
        for _ in 0..len {
            q = Point::new(q.x + dx, q.y + dy);
            let c = self.cell(q);
            self.occupied[c] = false;
        }
        result
    }
}

/// Smallest cap reaching each window point, kept in a flat grid.
struct CapGrid {
    w: i64,
    side: usize,
    cells: Vec<u32>,
}

impl CapGrid {
    fn new(w: i64) -> CapGrid {
        let side = (2 * w + 1) as usize;
        CapGrid { w, side, cells: vec![u32::MAX; side * side] }
    }

    #[inline]
    fn record(&mut self, p: Point, longest: u32) {
        if p.x.abs() <= self.w && p.y.abs() <= self.w {
            let i = ((p.y + self.w) as usize) * self.side + (p.x + self.w) as usize;
            if longest < self.cells[i] {
                self.cells[i] = longest;
            }
        }
    }

    fn into_map(self) -> BTreeMap<Point, u32> {
        let mut out = BTreeMap::new();
        for (i, &c) in self.cells.iter().enumerate() {
            if c != u32::MAX {
                let (x, y) = ((i % self.side) as i64 - self.w, (i / self.side) as i64 - self.w);
                out.insert(Point::new(x, y), c);
            }
        }
        out
    }
}

/// Endpoints inside the window together with the smallest cap that reaches
/// each of them.
fn endpoint_caps(seq: &TurnSequence, cfg: &OracleConfig) -> Result<BTreeMap<Point, u32>> {
    let mut grid = CapGrid::new(cfg.window);
    for_each_realization(seq, cfg.top(), cfg.budget, |bends, longest| {
        grid.record(bends[bends.len() - 1], longest);
    })?;
    Ok(grid.into_map())
}

fn closest_at(caps: &BTreeMap<Point, u32>, cap: u32) -> Closest {
    let mut out = Closest::new();
    for (&p, &c) in caps {
        if c > cap {
            continue;
        }
        for axis in Dir::ALL {
            if let Some(d) = p.axis_distance(axis) {
                let (ux, uy) = axis.unit();
                let coord = d * (ux + uy);
                let e = out.entry(axis).or_insert(coord);
                if coord.abs() < e.abs() {
                    *e = coord;
                }
            }
        }
    }
    out
}

pub fn enumerate(seq: &TurnSequence, cfg: &OracleConfig) -> Result<OracleResult> {
    let caps = endpoint_caps(seq, cfg)?;
    Ok(result_from_caps(&caps, cfg))
}

fn result_from_caps(caps: &BTreeMap<Point, u32>, cfg: &OracleConfig) -> OracleResult {
    let reachable_points = caps.iter().filter(|(_, &c)| c <= cfg.lmax).map(|(&p, _)| p).collect();
    let closest_axis = closest_at(caps, cfg.lmax);
    let converged = match cfg.escalation.as_slice() {
        [.., a, b] => closest_at(caps, *a) == closest_at(caps, *b),
        _ => true,
    };
    OracleResult { lmax: cfg.lmax, reachable_points, closest_axis, converged }
}

/// Signed coordinate of the closest enumerated endpoint on `axis`.
pub fn exact_closest(seq: &TurnSequence, axis: Dir, cfg: &OracleConfig) -> Result<Option<i64>> {
    let (ux, uy) = axis.unit();
    let sign = ux + uy;
    let mut best: Option<i64> = None;
    for_each_realization(seq, cfg.lmax, cfg.budget, |bends, _| {
        if let Some(d) = bends[bends.len() - 1].axis_distance(axis) {
            if best.is_none_or(|b| d < b) {
                best = Some(d);
            }
        }
    })?;
    Ok(best.map(|d| d * sign))
}

/// Closes `points` under stretching: off-axis points grow into their
/// quadrant, axis points into the halfplane beyond them. With no turns the
/// only stretch is along the single segment.
pub fn stretched_closure(points: &BTreeSet<Point>, seq: &TurnSequence, window: i64) -> BTreeSet<Point> {
    let w = window;
    let side = (2 * w + 1) as usize;
    let mut grid = vec![false; side * side];
    let idx = |x: i64, y: i64| ((y + w) as usize) * side + (x + w) as usize;
    let mut fill = |xs: (i64, i64), ys: (i64, i64)| {
        for y in ys.0.max(-w)..=ys.1.min(w) {
            for x in xs.0.max(-w)..=xs.1.min(w) {
                grid[idx(x, y)] = true;
            }
        }
    };
    let beyond = |v: i64| if v > 0 { (v, w) } else { (-w, v) };
    for &p in points {
        if seq.is_empty() {
            if p.y == 0 && p.x > 0 {
                fill((p.x, w), (0, 0));
            }
            continue;
        }
        match (p.x, p.y) {
            (0, 0) => {}
            (0, b) => fill((-w, w), beyond(b)),
            (a, 0) => fill(beyond(a), (-w, w)),
            (a, b) => fill(beyond(a), beyond(b)),
        }
    }
    let mut out = BTreeSet::new();
    for y in -w..=w {
        for x in -w..=w {
            if grid[idx(x, y)] {
                out.insert(Point::new(x, y));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not a failure; the enumeration cap may be too small to decide.
    Flag,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub sequence: TurnSequence,
    pub lmax: u32,
    pub converged: bool,
    pub closest_axis: Closest,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn flagged(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Flag)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

struct Collector {
    problems: Vec<String>,
}

impl Collector {
    fn new() -> Collector {
        Collector { problems: Vec::new() }
    }

    fn note(&mut self, msg: String) {
        if self.problems.len() < 8 {
            self.problems.push(msg);
        }
    }

    fn into_check(self, name: &'static str, bad: Status) -> Check {
        if self.problems.is_empty() {
            Check { name, status: Status::Pass, detail: String::new() }
        } else {
            Check { name, status: bad, detail: self.problems.join("; ") }
        }
    }
}

/// Chain-level facts gathered in the same pass as the endpoints.
struct ChainStats {
    crossing_min: Option<i64>,
    crossing_low: Option<(usize, Vec<Point>)>,
    polygon_bad: Option<String>,
}

fn chain_stats(seq: &TurnSequence, cfg: &OracleConfig) -> Result<(ChainStats, BTreeMap<Point, u32>)> {
    let mut grid = CapGrid::new(cfg.window);
    let delta = seq.excess();
    let crossing_min = if delta % 4 != 0 {
        let s = if delta < 0 { seq.mirror() } else { seq.clone() };
        Some(min_vertical_crossings(&s)?)
    } else {
        None
    };
    let mut stats = ChainStats { crossing_min, crossing_low: None, polygon_bad: None };
    for_each_realization(seq, cfg.top(), cfg.budget, |bends, longest| {
        let p = bends[bends.len() - 1];
        grid.record(p, longest);
        if longest > cfg.lmax || (p.x != 0 && p.y != 0) || bends.len() < 3 {
            return;
        }
        let chain = Chain::new(bends.to_vec());
        if p.y == 0 && p.x > 0 {
            if let Some(m) = stats.crossing_min {
                let c = vertical_crossings(&chain);
                if (c as i64) < m && stats.crossing_low.is_none() {
                    stats.crossing_low = Some((c, bends.to_vec()));
                }
            }
        }
        if stats.polygon_bad.is_some() {
            return;
        }
        let closed = if p.y == 0 { chain } else { Chain::new(apply_isometry(bends, Isometry::Rot90Cw)) };
        let verdict = ordinary_from_chain(&closed).and_then(|poly| {
            let r = rotation_number(&poly)?;
            let need = (r.to_integer().abs() - 1).abs();
            if need == 0 {
                return Ok((0, 0, r));
            }
            let i = self_intersections(&poly)? as i64;
            Ok((i, need, r))
        });
        match verdict {
            Ok((i, need, _)) if i >= need => {}
            Ok((i, need, r)) => stats.polygon_bad = Some(format!("{chain_s}: I={i} < {need} (R={r})", chain_s = Chain::new(bends.to_vec()))),
            Err(e) => stats.polygon_bad = Some(format!("{}: {e}", Chain::new(bends.to_vec()))),
        }
    })?;
    Ok((stats, grid.into_map()))
}

pub fn verify_sequence(seq: &TurnSequence, cfg: &OracleConfig) -> Result<VerificationReport> {
    let (stats, caps) = chain_stats(seq, cfg)?;
    let oracle = result_from_caps(&caps, cfg);
    // Everything found at the top cap, for escalated lookups.
    let all: BTreeSet<Point> = caps.keys().copied().collect();
    let mut checks = Vec::new();

    // Hooks against axis points. A hooked axis the oracle misses only means
    // the cap is too small.
    let mut c = Collector::new();
    let mut flags = Collector::new();
    for axis in Dir::ALL {
        // With no turns the single segment is the only way onto an axis.
        let hook = seq.has_hook(axis) || (seq.is_empty() && axis == Dir::PosX);
        let found = oracle.closest_axis.contains_key(&axis);
        if found && !hook {
            c.note(format!("{axis}: reached without a hook"));
        } else if hook && !found {
            flags.note(format!("{axis}: hooked but not reached at lmax {}", cfg.lmax));
        }
        if seq.is_empty() {
            continue;
        }
        match (hook, crate::construct::axis_witness(seq, axis)) {
            (true, Ok(ch)) => {
                if !ch.realizes(seq) || ch.end().axis_distance(axis).is_none() {
                    c.note(format!("{axis}: bad witness {ch}"));
                }
            }
            (false, Err(_)) => {}
            (true, Err(e)) => c.note(format!("{axis}: witness failed: {e}")),
            (false, Ok(ch)) => c.note(format!("{axis}: witness without hook {ch}")),
        }
    }
    // Partner and characterization checks trust the oracle's closest points
    // only when every hooked axis was reached and the values are stable.
    let strict = flags.problems.is_empty() && oracle.converged;
    checks.push(c.into_check("hook_axis", Status::Fail));
    checks.push(flags.into_check("hook_axis_cap", Status::Flag));

    // Many more lefts than rights (or the reverse) give every hook.
    let mut c = Collector::new();
    if seq.excess().abs() >= 5 {
        for axis in Dir::ALL {
            if !seq.has_hook(axis) {
                c.note(format!("no {} hook", axis.hook_name()));
            }
        }
    }
    checks.push(c.into_check("four_hooks", Status::Fail));

    // Bound sandwich and constructions. The oracle value is an upper
    // estimate of the true closest point, so exceeding the upper bound is
    // only a failure when a construction within the cap does better.
    let mut c = Collector::new();
    let mut flags = Collector::new();
    let builder = Constructor::new();
    for axis in Dir::ALL {
        if !seq.has_hook(axis) {
            continue;
        }
        let b = axis_bounds(seq, axis)?;
        let (lo, hi) = (b.lower.value, b.upper.value);
        if lo > hi {
            c.note(format!("{axis}: lower {lo} > upper {hi}"));
        }
        let exact = oracle.closest_axis.get(&axis).map(|v| v.abs());
        if let Some(e) = exact.filter(|&e| e < lo) {
            c.note(format!("{axis}: exact {e} below lower {lo}"));
        }
        match builder.closest(seq, axis) {
            Ok(ch) => match ch.end().axis_distance(axis) {
                Some(d) if ch.realizes(seq) => {
                    if d > hi {
                        c.note(format!("{axis}: construction {d} > upper {hi}"));
                    }
                    let longest = (0..ch.segment_count()).map(|k| ch.segment_len(k)).max().unwrap_or(0);
                    match exact {
                        Some(e) if d < e && longest <= cfg.lmax as i64 => {
                            c.note(format!("{axis}: oracle {e} missed construction {d} ({ch})"))
                        }
                        Some(e) if d < e => flags.note(format!("{axis}: construction {d} beats oracle {e}, longest segment {longest}")),
                        _ => {}
                    }
                }
                _ => c.note(format!("{axis}: invalid construction {ch}")),
            },
            Err(e) => c.note(format!("{axis}: construction failed: {e}")),
        }
    }
    checks.push(c.into_check("sandwich", Status::Fail));
    checks.push(flags.into_check("sandwich_cap", Status::Flag));

    // Off-axis points have an axis point in their row or column.
    let mut c = Collector::new();
    if !seq.is_staircase() {
        for p in &oracle.reachable_points {
            if p.x != 0 && p.y != 0 && !all.contains(&Point::new(p.x, 0)) && !all.contains(&Point::new(0, p.y)) {
                c.note(format!("({}, {}) without axis partner", p.x, p.y));
            }
        }
    }
    checks.push(c.into_check("axis_partner", if strict { Status::Fail } else { Status::Flag }));

    // Characterization against the stretched closure.
    let mut c = Collector::new();
    let mut flags = Collector::new();
    let known = if seq.is_empty() { Closest::new() } else { oracle.closest_axis.clone() };
    match characterize(seq, &known) {
        Ok(set) => {
            let w = cfg.window;
            let closed = stretched_closure(&oracle.reachable_points, seq, w);
            for p in &closed {
                if !contains(&set, *p) {
                    c.note(format!("oracle point ({}, {}) outside characterization", p.x, p.y));
                }
            }
            let wide = stretched_closure(&all, seq, w);
            'outer: for y in -w..=w {
                for x in -w..=w {
                    let q = Point::new(x, y);
                    if contains(&set, q) && !wide.contains(&q) {
                        flags.note(format!("({x}, {y}) predicted but not found"));
                        break 'outer;
                    }
                }
            }
            if connectivity(&set) != (true, true) {
                c.note("characterization not connected".into());
            }
        }
        Err(e) if strict => c.note(format!("characterize: {e}")),
        Err(e) => flags.note(format!("characterize: {e}")),
    }
    checks.push(c.into_check("characterization", if strict { Status::Fail } else { Status::Flag }));
    checks.push(flags.into_check("characterization_cap", Status::Flag));

    // Crossings of the closing segment and polygon intersections.
    let mut c = Collector::new();
    if let Some((count, bends)) = stats.crossing_low {
        c.note(format!("{} crosses {count} < {}", Chain::new(bends), stats.crossing_min.unwrap_or(0)));
    }
    checks.push(c.into_check("crossings", Status::Fail));
    let mut c = Collector::new();
    if let Some(msg) = stats.polygon_bad {
        c.note(msg);
    }
    checks.push(c.into_check("polygon_intersections", Status::Fail));

    Ok(VerificationReport {
        sequence: seq.clone(),
        lmax: cfg.lmax,
        converged: oracle.converged,
        closest_axis: oracle.closest_axis,
        checks,
    })
}

/// Formula-only checks for sequences too long to enumerate: every hooked
/// axis has ordered bounds, and large excess gives all four hooks.
pub fn verify_bounds_only(seq: &TurnSequence) -> VerificationReport {
    let mut hooks = Collector::new();
    if seq.excess().abs() >= 5 {
        for axis in Dir::ALL {
            if !seq.has_hook(axis) {
                hooks.note(format!("no {} hook", axis.hook_name()));
            }
        }
    }
    let mut order = Collector::new();
    for axis in Dir::ALL {
        if !seq.has_hook(axis) {
            continue;
        }
        match axis_bounds(seq, axis) {
            Ok(b) if b.lower.value <= b.upper.value => {}
            Ok(b) => order.note(format!("{axis}: lower {} > upper {}", b.lower.value, b.upper.value)),
            Err(e) => order.note(format!("{axis}: {e}")),
        }
    }
    VerificationReport {
        sequence: seq.clone(),
        lmax: 0,
        converged: true,
        closest_axis: Closest::new(),
        checks: vec![hooks.into_check("four_hooks", Status::Fail), order.into_check("bound_order", Status::Fail)],
    }
}
