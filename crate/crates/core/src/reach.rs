//! Symbolic description of the set of reachable endpoints.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::turnseq::{Dir, Turn, TurnSequence};

/// Points on or beyond an axis point: `{x ≥ a}` for +x, `{y ≤ b}` for -y and
/// so on. `coord` is the signed coordinate of the closest axis point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Halfplane {
    pub axis: Dir,
    pub coord: i64,
}

impl Halfplane {
    pub fn contains(&self, q: Point) -> bool {
        let v = if self.axis.is_horizontal() { q.x } else { q.y };
        v * self.coord.signum() >= self.coord.abs()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReachableSet {
    /// `{(a, 0) | a ≥ 1}`.
    EastRay,
    /// Points at least as far from both axes as `corner`, on its side.
    Quadrant { corner: Point },
    HalfplaneUnion { parts: Vec<Halfplane> },
}

/// Closest axis points as signed coordinates along each axis.
pub type Closest = BTreeMap<Dir, i64>;

pub fn characterize(seq: &TurnSequence, closest: &Closest) -> Result<ReachableSet> {
    let mut hooked: Vec<Dir> = seq.hooks().iter().map(|h| h.direction).collect();
    hooked.sort();
    hooked.dedup();
    let keys: Vec<Dir> = closest.keys().copied().collect();
    if keys != hooked {
        return Err(Error::AxisMismatch);
    }
    if seq.is_empty() {
        return Ok(ReachableSet::EastRay);
    }
    if hooked.is_empty() {
        let n = seq.len() as i64;
        let y = (n + 1) / 2;
        let sy = if seq.first() == Some(Turn::L) { 1 } else { -1 };
        return Ok(ReachableSet::Quadrant { corner: Point::new(1 + n / 2, sy * y) });
    }
    let mut parts = Vec::new();
    for (&axis, &coord) in closest {
        let (ux, uy) = axis.unit();
        if coord == 0 || coord.signum() != ux + uy {
            return Err(Error::AxisMismatch);
        }
        parts.push(Halfplane { axis, coord });
    }
    Ok(ReachableSet::HalfplaneUnion { parts })
}

pub fn contains(set: &ReachableSet, q: Point) -> bool {
    match set {
        ReachableSet::EastRay => q.y == 0 && q.x >= 1,
        ReachableSet::Quadrant { corner } => {
            q.x * corner.x.signum() >= corner.x.abs() && q.y * corner.y.signum() >= corner.y.abs()
        }
        ReachableSet::HalfplaneUnion { parts } => parts.iter().any(|h| h.contains(q)),
    }
}

/// `(set connected, complement connected)` under 4-adjacency.
///
/// A union of halfplanes falls apart only when it is exactly two opposite
/// halfplanes. Its complement is an intersection of open halfplanes that
/// all contain o, hence a nonempty box. Rays and quadrants are connected
/// with connected complements.
pub fn connectivity(set: &ReachableSet) -> (bool, bool) {
    match set {
        ReachableSet::EastRay | ReachableSet::Quadrant { .. } => (true, true),
        ReachableSet::HalfplaneUnion { parts } => {
            let mut axes: Vec<Dir> = parts.iter().map(|h| h.axis).collect();
            axes.sort();
            axes.dedup();
            let split = axes.len() == 2 && axes[0].opposite() == axes[1];
            (!split, true)
        }
    }
}
