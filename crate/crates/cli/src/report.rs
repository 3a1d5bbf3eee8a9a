use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};
use turnreach_core::bounds::{axis_bounds, Bound};
use turnreach_core::construct::Constructor;
use turnreach_core::oracle::{enumerate, OracleConfig};
use turnreach_core::reach::{characterize, Closest, ReachableSet};
use turnreach_core::{Dir, Point, Result, TurnSequence};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundView {
    pub value: i64,
    pub formula: String,
}

impl From<Bound> for BoundView {
    fn from(b: Bound) -> Self {
        BoundView { value: b.value, formula: b.formula.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub distance: i64,
    pub bends: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisView {
    pub axis: Dir,
    pub reachable: bool,
    pub lower: Option<BoundView>,
    pub upper: Option<BoundView>,
    pub exact: Option<i64>,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasuresView {
    pub mo: BTreeMap<Dir, usize>,
    pub mp: BTreeMap<Dir, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleView {
    pub lmax: u32,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub sequence: TurnSequence,
    pub n: usize,
    pub lefts: usize,
    pub rights: usize,
    pub excess: i64,
    pub deltas: Vec<i64>,
    pub staircase: bool,
    pub hooks: Vec<String>,
    pub measures: MeasuresView,
    pub axes: Vec<AxisView>,
    pub characterization: ReachableSet,
    /// `oracle`, `exact` (no axes), `bounds` (tight everywhere) or
    /// `construction` (upper estimate).
    pub closest_source: String,
    pub oracle: Option<OracleView>,
}

pub fn build(seq: &TurnSequence, oracle_cfg: Option<&OracleConfig>) -> Result<Report> {
    let m = seq.measures();
    let measures = MeasuresView {
        mo: Dir::ALL.iter().map(|&d| (d, m.mo[d.index()])).collect(),
        mp: Dir::ALL.iter().map(|&d| (d, m.mp[d.index()])).collect(),
    };
    let oracle = oracle_cfg.map(|cfg| enumerate(seq, cfg)).transpose()?;
    let builder = Constructor::new();
    let mut axes = Vec::new();
    let mut tight = true;
    let mut estimate = Closest::new();
    for axis in Dir::ALL {
        let reachable = seq.has_hook(axis);
        let (mut lower, mut upper, mut witness) = (None, None, None);
        if reachable {
            let b = axis_bounds(seq, axis)?;
            tight &= b.lower.value == b.upper.value;
            lower = Some(b.lower.into());
            upper = Some(b.upper.into());
            let ch = builder.closest(seq, axis)?;
            let distance = ch.end().axis_distance(axis).unwrap_or(0);
            let (ux, uy) = axis.unit();
            estimate.insert(axis, distance * (ux + uy));
            witness = Some(Witness { distance, bends: ch.bends });
        }
        let exact = oracle.as_ref().and_then(|o| o.closest_axis.get(&axis)).copied().filter(|_| reachable);
        axes.push(AxisView { axis, reachable, lower, upper, exact, witness });
    }
    let (closest, source) = match &oracle {
        Some(o) if !seq.is_empty() && o.closest_axis.len() == estimate.len() => (o.closest_axis.clone(), "oracle"),
        _ if estimate.is_empty() => (estimate, "exact"),
        _ if tight => (estimate, "bounds"),
        _ => (estimate, "construction"),
    };
    let characterization = characterize(seq, &closest)?;
    Ok(Report {
        sequence: seq.clone(),
        n: seq.len(),
        lefts: seq.lefts(),
        rights: seq.rights(),
        excess: seq.excess(),
        deltas: seq.profile().deltas,
        staircase: seq.is_staircase(),
        hooks: seq.hooks().iter().map(|h| h.to_string()).collect(),
        measures,
        axes,
        characterization,
        closest_source: source.to_string(),
        oracle: oracle.map(|o| OracleView { lmax: o.lmax, converged: o.converged }),
    })
}

fn point(p: Point) -> String {
    format!("({},{})", p.x, p.y)
}

pub fn describe_set(set: &ReachableSet) -> String {
    match set {
        ReachableSet::EastRay => "A = {(a,0) | a >= 1}".to_string(),
        ReachableSet::Quadrant { corner } => format!("A = Q+({})", point(*corner)),
        ReachableSet::HalfplaneUnion { parts } => {
            let terms: Vec<String> = parts
                .iter()
                .map(|h| {
                    if h.axis.is_horizontal() {
                        format!("V+({})", point(Point::new(h.coord, 0)))
                    } else {
                        format!("H+({})", point(Point::new(0, h.coord)))
                    }
                })
                .collect();
            format!("A = {}", terms.join(" u "))
        }
    }
}

pub fn render_text(r: &Report) -> String {
    let mut s = String::new();
    let shown = if r.sequence.is_empty() { "(empty)".to_string() } else { r.sequence.to_string() };
    let _ = writeln!(s, "sequence {shown}: n={} l={} r={} delta={}", r.n, r.lefts, r.rights, r.excess);
    let deltas: Vec<String> = r.deltas.iter().map(|d| d.to_string()).collect();
    let _ = writeln!(s, "prefix numbers: {}", deltas.join(" "));
    if r.hooks.is_empty() {
        let _ = writeln!(s, "hooks: none");
    } else {
        let _ = writeln!(s, "hooks: {}", r.hooks.join(", "));
    }
    let kind = match (&r.characterization, r.staircase) {
        (ReachableSet::EastRay, _) => "no turns",
        (_, true) => "staircase",
        _ => "hooked",
    };
    let _ = writeln!(s, "{kind}; {} [{}]", describe_set(&r.characterization), r.closest_source);
    for a in &r.axes {
        if !a.reachable {
            let _ = writeln!(s, "  {:>2}: unreachable", a.axis.as_str());
            continue;
        }
        let (lo, hi) = (a.lower.as_ref().map_or(0, |b| b.value), a.upper.as_ref().map_or(0, |b| b.value));
        let _ = write!(s, "  {:>2}: bounds [{lo}, {hi}]", a.axis.as_str());
        if let Some(w) = &a.witness {
            let _ = write!(s, ", constructed {}", w.distance);
        }
        if let Some(e) = a.exact {
            let _ = write!(s, ", exact {}", e.abs());
        }
        s.push('\n');
    }
    if let Some(o) = &r.oracle {
        let _ = writeln!(s, "oracle: lmax {}, {}", o.lmax, if o.converged { "converged" } else { "not converged" });
    }
    s
}
