//! Exact integer geometry for rectilinear chains.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::turnseq::{Dir, Turn, TurnSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Point {
        Point { x, y }
    }

    pub fn step(self, d: Dir, len: i64) -> Point {
        let (dx, dy) = d.unit();
        Point::new(self.x + dx * len, self.y + dy * len)
    }

    pub fn coord(self, horizontal: bool) -> i64 {
        if horizontal {
            self.x
        } else {
            self.y
        }
    }

    /// Distance along `axis` if the point lies strictly on that signed axis.
    pub fn axis_distance(self, axis: Dir) -> Option<i64> {
        let (ux, uy) = axis.unit();
        let along = self.x * ux + self.y * uy;
        let across = self.x * uy - self.y * ux;
        (across == 0 && along > 0).then_some(along)
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Point {
        Point::new(x, y)
    }
}

impl From<Point> for (i64, i64) {
    fn from(p: Point) -> (i64, i64) {
        (p.x, p.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl Mul<i64> for Point {
    type Output = Point;
    fn mul(self, k: i64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

fn dir_between(a: Point, b: Point) -> Option<Dir> {
    match ((b.x - a.x).signum(), (b.y - a.y).signum()) {
        (1, 0) => Some(Dir::PosX),
        (-1, 0) => Some(Dir::NegX),
        (0, 1) => Some(Dir::PosY),
        (0, -1) => Some(Dir::NegY),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundingBox {
    pub xmin: i64,
    pub xmax: i64,
    pub ymin: i64,
    pub ymax: i64,
}

impl BoundingBox {
    pub fn of(points: &[Point]) -> BoundingBox {
        let mut b = BoundingBox {
            xmin: i64::MAX,
            xmax: i64::MIN,
            ymin: i64::MAX,
            ymax: i64::MIN,
        };
        for p in points {
            b.xmin = b.xmin.min(p.x);
            b.xmax = b.xmax.max(p.x);
            b.ymin = b.ymin.min(p.y);
            b.ymax = b.ymax.max(p.y);
        }
        b
    }

    pub fn width(&self) -> i64 {
        self.xmax - self.xmin
    }

    pub fn height(&self) -> i64 {
        self.ymax - self.ymin
    }

    pub fn on_side(&self, p: Point) -> bool {
        p.x == self.xmin || p.x == self.xmax || p.y == self.ymin || p.y == self.ymax
    }

    /// True when `p` lies on the side facing `d` (e.g. the right side for +x).
    pub fn on_side_facing(&self, p: Point, d: Dir) -> bool {
        match d {
            Dir::PosX => p.x == self.xmax,
            Dir::NegX => p.x == self.xmin,
            Dir::PosY => p.y == self.ymax,
            Dir::NegY => p.y == self.ymin,
        }
    }

    pub fn is_corner(&self, p: Point) -> bool {
        (p.x == self.xmin || p.x == self.xmax) && (p.y == self.ymin || p.y == self.ymax)
    }
}

/// A rectilinear polyline given by its bend points, starting at `bends[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chain {
    pub bends: Vec<Point>,
}

impl Chain {
    pub fn new(bends: Vec<Point>) -> Chain {
        Chain { bends }
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Chain {
        Chain::new(pairs.iter().map(|&p| p.into()).collect())
    }

    pub fn start(&self) -> Point {
        self.bends[0]
    }

    pub fn end(&self) -> Point {
        *self.bends.last().expect("chain has at least one point")
    }

    pub fn segment_count(&self) -> usize {
        self.bends.len().saturating_sub(1)
    }

    pub fn segment_dir(&self, k: usize) -> Option<Dir> {
        dir_between(self.bends[k], self.bends[k + 1])
    }

    pub fn segment_len(&self, k: usize) -> i64 {
        let (a, b) = (self.bends[k], self.bends[k + 1]);
        (b.x - a.x).abs() + (b.y - a.y).abs()
    }

    pub fn bounding_box(&self) -> BoundingBox {
        BoundingBox::of(&self.bends)
    }

    /// All lattice points along the chain in order; `None` if a segment is
    /// not axis-parallel or has zero length.
    pub fn lattice_points(&self) -> Option<Vec<Point>> {
        let mut out = vec![self.bends[0]];
        for w in self.bends.windows(2) {
            let d = dir_between(w[0], w[1])?;
            let mut p = w[0];
            while p != w[1] {
                p = p.step(d, 1);
                out.push(p);
            }
        }
        Some(out)
    }

    pub fn is_simple(&self) -> bool {
        match self.lattice_points() {
            None => false,
            Some(mut pts) => {
                pts.sort_unstable();
                pts.windows(2).all(|w| w[0] != w[1])
            }
        }
    }

    pub fn turns(&self) -> Result<TurnSequence> {
        turns_of(self)
    }

    /// Simple, starts at o heading east, and realizes `seq`.
    pub fn realizes(&self, seq: &TurnSequence) -> bool {
        self.bends.len() == seq.len() + 2
            && self.bends[0] == Point::ORIGIN
            && self.segment_dir(0) == Some(Dir::PosX)
            && self.turns().map(|t| &t == seq).unwrap_or(false)
            && self.is_simple()
    }

    pub fn axis_distance(&self, axis: Dir) -> Option<i64> {
        self.end().axis_distance(axis)
    }

    pub fn translated(&self, v: Point) -> Chain {
        Chain::new(self.bends.iter().map(|&p| p + v).collect())
    }

    /// Translate to start at o and rotate so that the first segment heads east.
    pub fn normalized(&self) -> Chain {
        let c = self.translated(-self.start());
        let iso = match c.segment_dir(0) {
            Some(Dir::PosY) => Some(Isometry::Rot90Cw),
            Some(Dir::NegX) => Some(Isometry::Rot180),
            Some(Dir::NegY) => Some(Isometry::Rot90Ccw),
            _ => None,
        };
        match iso {
            Some(i) => Chain::new(apply_isometry(&c.bends, i)),
            None => c,
        }
    }

    /// The same curve traversed from the end, normalized.
    pub fn reversed(&self) -> Chain {
        let mut b = self.bends.clone();
        b.reverse();
        Chain::new(b).normalized()
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.bends.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

pub fn realize(seq: &TurnSequence, lengths: &[i64]) -> Result<Chain> {
    if lengths.len() != seq.len() + 1 {
        return Err(Error::LengthMismatch { expected: seq.len() + 1, got: lengths.len() });
    }
    if let Some(index) = lengths.iter().position(|&l| l < 1) {
        return Err(Error::NonPositiveLength { index });
    }
    let dirs = seq.profile().directions;
    let mut p = Point::ORIGIN;
    let mut bends = vec![p];
    for (d, &l) in dirs.iter().zip(lengths) {
        p = p.step(*d, l);
        bends.push(p);
    }
    Ok(Chain::new(bends))
}

pub fn is_simple(chain: &Chain) -> bool {
    chain.is_simple()
}

/// Independent all-pairs check: non-adjacent segments are disjoint, and
/// adjacent ones meet only at their shared bend.
pub fn is_simple_pairwise(chain: &Chain) -> bool {
    let b = &chain.bends;
    let k = chain.segment_count();
    for i in 0..k {
        if dir_between(b[i], b[i + 1]).is_none() {
            return false;
        }
    }
    let seg = |i: usize| {
        let (p, q) = (b[i], b[i + 1]);
        (p.x.min(q.x), p.x.max(q.x), p.y.min(q.y), p.y.max(q.y))
    };
    for i in 0..k {
        for j in i + 1..k {
            let (a, c) = (seg(i), seg(j));
            let ox = a.0.max(c.0) <= a.1.min(c.1);
            let oy = a.2.max(c.2) <= a.3.min(c.3);
            if !(ox && oy) {
                continue;
            }
            if j > i + 1 {
                return false;
            }
            // Adjacent: the overlap must be exactly the shared bend.
            let single = a.0.max(c.0) == a.1.min(c.1) && a.2.max(c.2) == a.3.min(c.3);
            if !single {
                return false;
            }
        }
    }
    true
}

pub fn turns_of(chain: &Chain) -> Result<TurnSequence> {
    let b = &chain.bends;
    if b.len() < 2 {
        return Err(Error::DegenerateBend { index: 0 });
    }
    let mut turns = Vec::with_capacity(b.len().saturating_sub(2));
    let mut prev = dir_between(b[0], b[1]).ok_or(Error::DegenerateBend { index: 1 })?;
    for i in 1..b.len() - 1 {
        let cur = dir_between(b[i], b[i + 1]).ok_or(Error::DegenerateBend { index: i + 1 })?;
        if cur == prev.ccw() {
            turns.push(Turn::L);
        } else if cur == prev.cw() {
            turns.push(Turn::R);
        } else {
            return Err(Error::DegenerateBend { index: i });
        }
        prev = cur;
    }
    Ok(TurnSequence::new(turns))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Isometry {
    Rot90Ccw,
    Rot90Cw,
    Rot180,
    ReflectX,
}

impl Isometry {
    pub fn apply(self, p: Point) -> Point {
        match self {
            Isometry::Rot90Ccw => Point::new(-p.y, p.x),
            Isometry::Rot90Cw => Point::new(p.y, -p.x),
            Isometry::Rot180 => Point::new(-p.x, -p.y),
            Isometry::ReflectX => Point::new(p.x, -p.y),
        }
    }

    pub fn apply_dir(self, d: Dir) -> Dir {
        match self {
            Isometry::Rot90Ccw => d.ccw(),
            Isometry::Rot90Cw => d.cw(),
            Isometry::Rot180 => d.opposite(),
            Isometry::ReflectX => match d {
                Dir::PosY => Dir::NegY,
                Dir::NegY => Dir::PosY,
                h => h,
            },
        }
    }

    /// The rotation taking direction `from` to direction `to`.
    pub fn rotation(from: Dir, to: Dir) -> Option<Isometry> {
        match (to as i64 - from as i64).rem_euclid(4) {
            0 => None,
            1 => Some(Isometry::Rot90Ccw),
            2 => Some(Isometry::Rot180),
            _ => Some(Isometry::Rot90Cw),
        }
    }
}

pub fn apply_isometry(bends: &[Point], op: Isometry) -> Vec<Point> {
    bends.iter().map(|&p| op.apply(p)).collect()
}

/// Shift every point strictly beyond the half-integer line `line2 / 2`
/// (a doubled, odd coordinate) on side `sign` by `d` units outward.
/// Inserting such a band never creates intersections or changes turns.
pub fn insert_band(bends: &[Point], horizontal: bool, line2: i64, sign: i64, d: i64) -> Vec<Point> {
    bends
        .iter()
        .map(|&p| {
            let v = p.coord(horizontal);
            if (2 * v - line2) * sign > 0 {
                if horizontal {
                    Point::new(p.x + sign * d, p.y)
                } else {
                    Point::new(p.x, p.y + sign * d)
                }
            } else {
                p
            }
        })
        .collect()
}

/// Remove the unit band between `c` and `c + 1` (when `c >= 0`) or between
/// `c` and `c + 1` on the negative side (when `c < 0`), pulling the outer
/// part toward the origin.
fn contract(bends: &[Point], horizontal: bool, c: i64) -> Vec<Point> {
    bends
        .iter()
        .map(|&p| {
            let v = p.coord(horizontal);
            let nv = if c >= 0 {
                if v > c {
                    v - 1
                } else {
                    v
                }
            } else if v <= c {
                v + 1
            } else {
                v
            };
            if horizontal {
                Point::new(nv, p.y)
            } else {
                Point::new(p.x, nv)
            }
        })
        .collect()
}

/// Contract unit bands toward the origin until no contraction keeps the
/// chain a realization of `seq`.
pub fn compact(chain: &Chain, seq: &TurnSequence) -> Chain {
    let mut cur = chain.bends.clone();
    loop {
        let mut changed = false;
        for horizontal in [true, false] {
            let bb = BoundingBox::of(&cur);
            let (lo, hi) = if horizontal { (bb.xmin, bb.xmax) } else { (bb.ymin, bb.ymax) };
            let lines = (lo..0).chain((0..hi).rev());
            for c in lines {
                let q = contract(&cur, horizontal, c);
                if q.windows(2).any(|w| w[0] == w[1]) {
                    continue;
                }
                let qc = Chain::new(q);
                if qc.realizes(seq) {
                    cur = qc.bends;
                    changed = true;
                }
            }
        }
        if !changed {
            return Chain::new(cur);
        }
    }
}

/// Which chain segments a cut is allowed to cross.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Crosses {
    Horizontal,
    Vertical,
}

/// A monotone staircase curve on the doubled grid. A y-monotone cut runs
/// from y = -inf to +inf and crosses horizontal segments; an x-monotone cut
/// runs from x = -inf to +inf and crosses vertical segments. Vertices have
/// odd doubled coordinates, so the cut never meets a lattice point. The
/// first and last vertex continue as rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub crosses: Crosses,
    pub vertices: Vec<Point>,
}

impl Cut {
    /// Straight vertical cut at doubled x = `x2` (odd).
    pub fn vertical(x2: i64) -> Cut {
        Cut { crosses: Crosses::Horizontal, vertices: vec![Point::new(x2, 1)] }
    }

    /// Straight horizontal cut at doubled y = `y2` (odd).
    pub fn horizontal(y2: i64) -> Cut {
        Cut { crosses: Crosses::Vertical, vertices: vec![Point::new(1, y2)] }
    }

    fn well_formed(&self) -> bool {
        let v = &self.vertices;
        if v.is_empty() || v.iter().any(|p| p.x % 2 == 0 || p.y % 2 == 0) {
            return false;
        }
        v.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            match self.crosses {
                Crosses::Horizontal => (a.x == b.x && a.y < b.y) || (a.y == b.y && a.x != b.x),
                Crosses::Vertical => (a.y == b.y && a.x < b.x) || (a.x == b.x && a.y != b.y),
            }
        })
    }

    /// Cut position (doubled) across the monotone dimension at lattice
    /// coordinate `t` (a row for y-monotone cuts, a column otherwise).
    fn position_at(&self, t: i64) -> i64 {
        let t2 = 2 * t;
        let along = |p: Point| if self.crosses == Crosses::Horizontal { p.y } else { p.x };
        let across = |p: Point| if self.crosses == Crosses::Horizontal { p.x } else { p.y };
        let mut pos = across(self.vertices[0]);
        for p in &self.vertices {
            if along(*p) > t2 {
                break;
            }
            pos = across(*p);
        }
        pos
    }

    /// -1 or +1 depending on which side of the cut `p` lies.
    pub fn side(&self, p: Point) -> i64 {
        match self.crosses {
            Crosses::Horizontal => (2 * p.x - self.position_at(p.y)).signum(),
            Crosses::Vertical => (2 * p.y - self.position_at(p.x)).signum(),
        }
    }

    /// Indices of crossed segments, or the reason the cut is not valid.
    pub fn crossed_segments(&self, chain: &Chain) -> Result<Vec<usize>> {
        if !self.well_formed() {
            return Err(Error::InvalidCut("malformed cut"));
        }
        let mut crossed = Vec::new();
        for k in 0..chain.segment_count() {
            let d = chain.segment_dir(k).ok_or(Error::InvalidCut("degenerate chain"))?;
            let mut p = chain.bends[k];
            let mut s = self.side(p);
            let mut changes = 0;
            while p != chain.bends[k + 1] {
                p = p.step(d, 1);
                let s2 = self.side(p);
                if s2 != s {
                    changes += 1;
                    s = s2;
                }
            }
            if changes == 0 {
                continue;
            }
            let ok = changes == 1
                && match self.crosses {
                    Crosses::Horizontal => d.is_horizontal(),
                    Crosses::Vertical => !d.is_horizontal(),
                };
            if !ok {
                return Err(Error::InvalidCut("crosses a segment of the wrong orientation"));
            }
            crossed.push(k);
        }
        if crossed.is_empty() {
            return Err(Error::InvalidCut("crosses no segment"));
        }
        Ok(crossed)
    }
}

/// Lengthen every segment crossed by `cut` by `d`, translating the part of
/// the chain on the side of the cut away from the start. The endpoint may
/// lie on either side.
pub fn stretch(chain: &Chain, cut: &Cut, d: i64) -> Result<Chain> {
    if d < 1 {
        return Err(Error::InvalidCut("stretch amount must be positive"));
    }
    cut.crossed_segments(chain)?;
    let far = -cut.side(chain.start());
    let shift = match cut.crosses {
        Crosses::Horizontal => Point::new(far * d, 0),
        Crosses::Vertical => Point::new(0, far * d),
    };
    let out = Chain::new(
        chain
            .bends
            .iter()
            .map(|&p| if cut.side(p) == far { p + shift } else { p })
            .collect(),
    );
    if !out.is_simple() {
        return Err(Error::InvalidCut("stretch produced a self-intersection"));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutTarget {
    /// Move the endpoint away from the y-axis.
    VPlus,
    /// Move the endpoint away from the x-axis.
    HPlus,
    /// Endpoint on the y-axis, moved to the left.
    TowardYAxisLeft,
    TowardYAxisRight,
    /// Endpoint on the x-axis, moved up.
    TowardXAxisUp,
    TowardXAxisDown,
}

/// The cuts used to show that reachable sets are closed under moving the
/// endpoint away from the axes.
pub fn standard_cuts(chain: &Chain, target: CutTarget) -> Result<Cut> {
    let p = chain.end() - chain.start();
    let (a, b) = (p.x, p.y);
    match target {
        CutTarget::VPlus if a != 0 => Ok(Cut::vertical(a.signum())),
        CutTarget::HPlus if b != 0 => Ok(Cut::horizontal(b.signum())),
        CutTarget::TowardYAxisLeft | CutTarget::TowardYAxisRight if a == 0 && b != 0 => {
            // The cut hugs x = -1/2 near o and x = +1/2 near p (or the
            // mirror), switching sides just past o toward p.
            let s = b.signum();
            let left = target == CutTarget::TowardYAxisLeft;
            let (near_o, near_p) = if left { (-1, 1) } else { (1, -1) };
            let o = chain.start();
            let (xo, yo) = (2 * o.x, 2 * o.y);
            let v = if s > 0 {
                vec![Point::new(xo + near_o, yo + 1), Point::new(xo + near_p, yo + 1)]
            } else {
                vec![Point::new(xo + near_p, yo - 1), Point::new(xo + near_o, yo - 1)]
            };
            Ok(Cut { crosses: Crosses::Horizontal, vertices: v })
        }
        CutTarget::TowardXAxisUp | CutTarget::TowardXAxisDown if b == 0 && a != 0 => {
            // Switch sides just beyond the first segment (toward +x) or just
            // left of o (toward -x); no horizontal segment spans those gaps.
            let up = target == CutTarget::TowardXAxisUp;
            let (near_o, near_p) = if up { (1, -1) } else { (-1, 1) };
            let o = chain.start();
            let (xo, yo) = (2 * o.x, 2 * o.y);
            let v = if a > 0 {
                let t = chain.segment_len(0);
                let xs = xo + 2 * t + 1;
                vec![Point::new(xs, yo + near_o), Point::new(xs, yo + near_p)]
            } else {
                vec![Point::new(xo - 1, yo + near_p), Point::new(xo - 1, yo + near_o)]
            };
            Ok(Cut { crosses: Crosses::Vertical, vertices: v })
        }
        _ => Err(Error::IncompatibleTarget),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> TurnSequence {
        TurnSequence::parse(t).unwrap()
    }

    fn c(p: &[(i64, i64)]) -> Chain {
        Chain::from_pairs(p)
    }

    #[test]
    fn realize_examples() {
        assert_eq!(realize(&s(""), &[1]).unwrap(), c(&[(0, 0), (1, 0)]));
        assert_eq!(realize(&s("LL"), &[1, 1, 1]).unwrap(), c(&[(0, 0), (1, 0), (1, 1), (0, 1)]));
        assert_eq!(realize(&s("LRLR"), &[1; 5]).unwrap().end(), Point::new(3, 2));
        assert_eq!(
            realize(&s("L"), &[1]),
            Err(Error::LengthMismatch { expected: 2, got: 1 })
        );
        assert_eq!(realize(&s("L"), &[1, 0]), Err(Error::NonPositiveLength { index: 1 }));
    }

    #[test]
    fn simplicity() {
        assert!(realize(&s("LL"), &[1, 1, 1]).unwrap().is_simple());
        assert!(!realize(&s("LLLL"), &[1; 5]).unwrap().is_simple());
        let spiral = realize(&s("LLLL"), &[2, 2, 3, 3, 1]).unwrap();
        assert!(spiral.is_simple() && is_simple_pairwise(&spiral));
    }

    #[test]
    fn turns() {
        assert_eq!(turns_of(&c(&[(0, 0), (2, 0), (2, 3)])).unwrap(), s("L"));
        assert!(matches!(
            turns_of(&c(&[(0, 0), (1, 0), (2, 0)])),
            Err(Error::DegenerateBend { .. })
        ));
        let ch = realize(&s("LRRL"), &[2, 1, 3, 1, 2]).unwrap();
        assert_eq!(ch.turns().unwrap(), s("LRRL"));
    }

    #[test]
    fn stretch_examples() {
        let ch = c(&[(0, 0), (1, 0), (1, 1)]);
        assert_eq!(stretch(&ch, &Cut::vertical(1), 3).unwrap(), c(&[(0, 0), (4, 0), (4, 1)]));
        let ch = c(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let out = stretch(&ch, &Cut::vertical(1), 2).unwrap();
        assert_eq!(out, c(&[(0, 0), (3, 0), (3, 1), (0, 1)]));
        assert_eq!(stretch(&ch, &Cut::vertical(5), 1), Err(Error::InvalidCut("crosses no segment")));
    }

    #[test]
    fn standard_cut_examples() {
        let ch = realize(&s("L"), &[2, 3]).unwrap();
        assert_eq!(standard_cuts(&ch, CutTarget::VPlus).unwrap(), Cut::vertical(1));
        assert_eq!(standard_cuts(&ch, CutTarget::TowardYAxisLeft), Err(Error::IncompatibleTarget));
        // "LL" with endpoint (0,2).
        let ch = realize(&s("LL"), &[1, 2, 1]).unwrap();
        for (t, dx) in [(CutTarget::TowardYAxisLeft, -2), (CutTarget::TowardYAxisRight, 2)] {
            let cut = standard_cuts(&ch, t).unwrap();
            let out = stretch(&ch, &cut, 2).unwrap();
            assert_eq!(out.end(), Point::new(dx, 2));
            assert_eq!(out.turns().unwrap(), s("LL"));
        }
        // "RR" with endpoint (0,-1) moved right.
        let ch = realize(&s("RR"), &[1, 1, 1]).unwrap();
        let out = stretch(&ch, &standard_cuts(&ch, CutTarget::TowardYAxisRight).unwrap(), 1).unwrap();
        assert_eq!(out.end(), Point::new(1, -1));
    }

    #[test]
    fn x_axis_cuts() {
        let ch = realize(&s("LLL"), &[1, 1, 2, 1]).unwrap();
        assert_eq!(ch.end(), Point::new(-1, 0));
        for (t, dy) in [(CutTarget::TowardXAxisUp, 1), (CutTarget::TowardXAxisDown, -1)] {
            let out = stretch(&ch, &standard_cuts(&ch, t).unwrap(), 1).unwrap();
            assert_eq!(out.end(), Point::new(-1, dy));
            assert!(out.realizes(&s("LLL")));
        }
    }

    #[test]
    fn isometries() {
        let b = [Point::new(0, 0), Point::new(1, 0)];
        assert_eq!(apply_isometry(&b, Isometry::Rot90Ccw), vec![Point::new(0, 0), Point::new(0, 1)]);
        let ch = realize(&s("LRRL"), &[1, 2, 3, 1, 1]).unwrap();
        let back = apply_isometry(&apply_isometry(&ch.bends, Isometry::Rot90Ccw), Isometry::Rot90Cw);
        assert_eq!(back, ch.bends);
        let refl = Chain::new(apply_isometry(&realize(&s("L"), &[1, 1]).unwrap().bends, Isometry::ReflectX));
        assert_eq!(refl.turns().unwrap(), s("R"));
    }

    #[test]
    fn compaction_shrinks() {
        let ch = realize(&s("LL"), &[3, 4, 2]).unwrap();
        let out = compact(&ch, &s("LL"));
        assert_eq!(out, c(&[(0, 0), (1, 0), (1, 1), (0, 1)]));
    }

    #[test]
    fn axis_distance() {
        assert_eq!(Point::new(-3, 0).axis_distance(Dir::NegX), Some(3));
        assert_eq!(Point::new(-3, 0).axis_distance(Dir::PosX), None);
        assert_eq!(Point::new(0, 2).axis_distance(Dir::PosY), Some(2));
        assert_eq!(Point::ORIGIN.axis_distance(Dir::PosY), None);
    }
}
