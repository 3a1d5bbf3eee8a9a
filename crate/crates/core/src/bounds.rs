//! Closed-form bounds on the closest reachable axis points, and the
//! rotation-number tools behind the lower bounds.

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{Chain, Point};
use crate::turnseq::{is_x_monotone, Dir, Turn, TurnSequence};

/// A bound value with the name of the table case that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: i64,
    pub formula: &'static str,
}

fn b(value: i64, formula: &'static str) -> Result<Bound> {
    Ok(Bound { value, formula })
}

fn quarter(d: i64) -> i64 {
    (d + 2).div_euclid(4)
}

fn require_nonneg(seq: &TurnSequence) -> Result<i64> {
    let d = seq.excess();
    if d < 0 {
        return Err(Error::UnsupportedExcess(d));
    }
    Ok(d)
}

fn is_right(t: Option<Turn>) -> bool {
    t == Some(Turn::R)
}

pub fn upper_x_minus(seq: &TurnSequence) -> Result<Bound> {
    let d = require_nonneg(seq)?;
    if !seq.has_hook(Dir::NegX) {
        return Err(Error::Unreachable("-x"));
    }
    let m = seq.measures();
    let nw = m.stair_p(Dir::NegX, Dir::PosY) as i64;
    let last_r = is_right(seq.last());
    match d {
        0 => b(2, "x-:excess=0"),
        1 => b(nw + 1, "x-:excess=1"),
        2 if last_r => b(2, "x-:excess=2,last=R"),
        2 => b(nw + 2, "x-:excess=2,last=L"),
        _ if last_r && d % 4 == 2 => b(quarter(d) + 1, "x-:winding,excess=2mod4,last=R"),
        _ => b(quarter(d), "x-:winding"),
    }
}

pub fn lower_x_minus(seq: &TurnSequence) -> Result<Bound> {
    let d = require_nonneg(seq)?;
    if !seq.has_hook(Dir::NegX) {
        return Err(Error::Unreachable("-x"));
    }
    let q = quarter(d);
    match d % 4 {
        0 | 1 => b((q - 1).abs() + 1, "x-:lower,excess=0,1mod4"),
        2 if is_right(seq.last()) => b(q + 1, "x-:lower,excess=2mod4,last=R"),
        2 => b((q - 2).abs() + 2, "x-:lower,excess=2mod4,last=L"),
        _ => b(q, "x-:lower,excess=3mod4"),
    }
}

pub fn upper_x_plus(seq: &TurnSequence) -> Result<Bound> {
    let d = require_nonneg(seq)?;
    let monotone = is_x_monotone(seq);
    let hook = seq.has_hook(Dir::PosX);
    if !hook {
        return Err(Error::Unreachable("+x"));
    }
    let m = seq.measures();
    let (px, py, my) = (Dir::PosX, Dir::PosY, Dir::NegY);
    let mo = m.mo(px) as i64;
    let mp = m.mp(px) as i64;
    let so_py = m.stair_o(px, py) as i64;
    let so_my = m.stair_o(px, my) as i64;
    let sp_py = m.stair_p(px, py) as i64;
    let sp_my = m.stair_p(px, my) as i64;
    let left = seq.first() == Some(Turn::L);
    let q = quarter(d);
    let prof = seq.profile();
    let general = match d {
        2 if left => b(so_py + 2, "x+:excess=2,first=L"),
        2 => b(2, "x+:excess=2,first=R"),
        _ if d >= 6 && d % 4 == 2 && left => b(q, "x+:winding,excess=2mod4,first=L"),
        _ if d >= 6 && d % 4 == 2 => b(q + 1, "x+:winding,excess=2mod4,first=R"),
        _ if d >= 6 => b((mo + 2).min(mp + if left { 1 } else { 2 }) + q, "x+:monotone-split"),
        1 => b(
            (mo + sp_py + 1).min(mp + if left { so_py } else { so_my } + 2),
            "x+:excess=1",
        ),
        0 => b(
            (mo + sp_py.max(sp_my)).min(mp + if left { so_py } else { so_my }) + 2,
            "x+:excess=0",
        ),
        3 | 4 if left => {
            let mut c = Vec::new();
            if prof.contains(-1) {
                c.push(so_py);
            }
            if prof.contains(5) {
                c.push(sp_my);
            }
            let add = if d == 3 { 2 } else { 3 };
            match c.into_iter().min() {
                Some(v) => b(v + add, if d == 3 { "x+:excess=3,first=L" } else { "x+:excess=4,first=L" }),
                None => return Err(Error::Unreachable("+x")),
            }
        }
        3 => b(2, "x+:excess=3,first=R"),
        4 => b(so_my.min(sp_py) + 3, "x+:excess=4,first=R"),
        _ if left => b(2, "x+:excess=5,first=L"),
        _ => b(so_my.min(sp_py) + 2, "x+:excess=5,first=R"),
    }?;
    if monotone && mo < general.value {
        return b(mo, "x+:monotone");
    }
    Ok(general)
}

pub fn lower_x_plus(seq: &TurnSequence) -> Result<Bound> {
    let d = require_nonneg(seq)?;
    if !seq.has_hook(Dir::PosX) {
        return Err(Error::Unreachable("+x"));
    }
    let m = seq.measures();
    let (px, py, my) = (Dir::PosX, Dir::PosY, Dir::NegY);
    let so_py = m.stair_o(px, py) as i64;
    let so_my = m.stair_o(px, my) as i64;
    let sp_py = m.stair_p(px, py) as i64;
    let sp_my = m.stair_p(px, my) as i64;
    let left = seq.first() == Some(Turn::L);
    let q = quarter(d);
    match (d % 4, left) {
        (1, true) => b((q - 1).abs() + 2, "x+:lower,excess=1mod4,first=L"),
        (1, false) => b(so_my.min(sp_py) + q + 1, "x+:lower,excess=1mod4,first=R"),
        (3, true) => b(so_py.min(sp_my) + (q - 2).abs() + 1, "x+:lower,excess=3mod4,first=L"),
        (3, false) => b(q + 1, "x+:lower,excess=3mod4,first=R"),
        (2, true) => b((q - 2).abs() + 2, "x+:lower,excess=2mod4,first=L"),
        (2, false) => b(q + 1, "x+:lower,excess=2mod4,first=R"),
        _ if d == 0 && left => b(so_py.min(sp_my).min(2) + 2, "x+:lower,excess=0,first=L"),
        _ if d == 0 => b(so_my.min(sp_py).min(2) + 2, "x+:lower,excess=0,first=R"),
        _ if d == 4 => b(3, "x+:lower,excess=4"),
        (_, true) => b(so_py.min(sp_my).min(2) + q, "x+:lower,excess=0mod4,first=L"),
        (_, false) => b(q + 2, "x+:lower,excess=0mod4,first=R"),
    }
}

/// Lower and upper bound on one signed axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AxisBounds {
    pub lower: Bound,
    pub upper: Bound,
}

fn x_bounds(seq: &TurnSequence, axis: Dir) -> Result<AxisBounds> {
    let s = if seq.excess() < 0 { seq.mirror() } else { seq.clone() };
    if axis == Dir::NegX {
        Ok(AxisBounds { lower: lower_x_minus(&s)?, upper: upper_x_minus(&s)? })
    } else {
        Ok(AxisBounds { lower: lower_x_plus(&s)?, upper: upper_x_plus(&s)? })
    }
}

fn shifted(b: Bound) -> Bound {
    Bound { value: b.value - 1, formula: b.formula }
}

/// Bounds on -y (from +x of `Lσ`) and +y (from +x of `Rσ`), each shifted
/// by one.
pub fn bounds_y(seq: &TurnSequence) -> (Result<AxisBounds>, Result<AxisBounds>) {
    let one = |axis: Dir, t: Turn| -> Result<AxisBounds> {
        if !seq.has_hook(axis) {
            return Err(Error::Unreachable(axis.as_str()));
        }
        let xb = x_bounds(&seq.prepend(t), Dir::PosX)?;
        Ok(AxisBounds { lower: shifted(xb.lower), upper: shifted(xb.upper) })
    };
    (one(Dir::NegY, Turn::L), one(Dir::PosY, Turn::R))
}

/// Bounds for any signed axis; sequences with negative excess are mirrored.
pub fn axis_bounds(seq: &TurnSequence, axis: Dir) -> Result<AxisBounds> {
    match axis {
        Dir::PosX | Dir::NegX => {
            if !seq.has_hook(axis) {
                return Err(Error::Unreachable(axis.as_str()));
            }
            x_bounds(seq, axis)
        }
        Dir::NegY => bounds_y(seq).0,
        Dir::PosY => bounds_y(seq).1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxisReport {
    pub axis: Dir,
    pub reachable: bool,
    pub bounds: Option<AxisBounds>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub sequence: TurnSequence,
    pub axes: Vec<AxisReport>,
}

impl BoundsReport {
    pub fn get(&self, axis: Dir) -> &AxisReport {
        self.axes.iter().find(|a| a.axis == axis).expect("all four axes present")
    }
}

pub fn bounds_report(seq: &TurnSequence) -> BoundsReport {
    let axes = Dir::ALL
        .iter()
        .map(|&axis| {
            let bounds = axis_bounds(seq, axis).ok();
            AxisReport { axis, reachable: seq.has_hook(axis), bounds }
        })
        .collect();
    BoundsReport { sequence: seq.clone(), axes }
}

/// Closed rectilinear polygon on the doubled grid (coordinates are twice
/// the lattice ones, so one unit is an ε-shift).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectPolygon {
    pub vertices: Vec<Point>,
}

fn unit_dir(a: Point, b: Point) -> Option<(i64, i64)> {
    let (dx, dy) = ((b.x - a.x).signum(), (b.y - a.y).signum());
    ((dx == 0) != (dy == 0)).then_some((dx, dy))
}

impl RectPolygon {
    pub fn new(vertices: Vec<Point>) -> RectPolygon {
        RectPolygon { vertices }
    }

    fn edge(&self, i: usize) -> (Point, Point) {
        let n = self.vertices.len();
        (self.vertices[i], self.vertices[(i + 1) % n])
    }

    /// Signed quarter turns, or the vertex where two edges fold back.
    fn quarter_turns(&self) -> Result<i64> {
        let n = self.vertices.len();
        let mut total = 0;
        for i in 0..n {
            let (a, v) = self.edge((i + n - 1) % n);
            let (_, c) = self.edge(i);
            let u = unit_dir(a, v).ok_or(Error::WhiskerDetected(i))?;
            let w = unit_dir(v, c).ok_or(Error::WhiskerDetected(i))?;
            let cross = u.0 * w.1 - u.1 * w.0;
            let dot = u.0 * w.0 + u.1 * w.1;
            if dot < 0 {
                return Err(Error::WhiskerDetected(i));
            }
            total += cross;
        }
        Ok(total)
    }

    pub fn is_whisker_free(&self) -> bool {
        self.quarter_turns().is_ok()
    }
}

/// Sum of signed vertex deflections divided by a full turn.
pub fn rotation_number(p: &RectPolygon) -> Result<Rational64> {
    Ok(Rational64::new(p.quarter_turns()?, 4))
}

fn bbox(a: Point, b: Point) -> (i64, i64, i64, i64) {
    (a.x.min(b.x), a.x.max(b.x), a.y.min(b.y), a.y.max(b.y))
}

/// Number of transversal crossings between edges.
pub fn self_intersections(p: &RectPolygon) -> Result<usize> {
    p.quarter_turns()?;
    let n = p.vertices.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            let (a0, a1) = p.edge(i);
            let (b0, b1) = p.edge(j);
            let (ax0, ax1, ay0, ay1) = bbox(a0, a1);
            let (bx0, bx1, by0, by1) = bbox(b0, b1);
            let ox = ax0.max(bx0) <= ax1.min(bx1);
            let oy = ay0.max(by0) <= ay1.min(by1);
            if !(ox && oy) {
                continue;
            }
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // Whisker-freeness already rules out overlap beyond the shared vertex.
                continue;
            }
            let a_h = a0.y == a1.y;
            let b_h = b0.y == b1.y;
            if a_h == b_h {
                return Err(Error::NotOrdinary);
            }
            let (h, v) = if a_h { ((ax0, ax1, ay0), (bx0, by0, by1)) } else { ((bx0, bx1, by0), (ax0, ay0, ay1)) };
            let interior = h.0 < v.0 && v.0 < h.1 && v.1 < h.2 && h.2 < v.2;
            if !interior {
                return Err(Error::NotOrdinary);
            }
            count += 1;
        }
    }
    Ok(count)
}

/// Close a chain ending on the x-axis with the segment back to o. Segments
/// overlapping that closing segment at the ends are dropped; inner ones are
/// pushed off the axis by one doubled unit.
pub fn ordinary_from_chain(chain: &Chain) -> Result<RectPolygon> {
    let p = chain.end();
    if p == chain.start() {
        return Err(Error::DegenerateClosure);
    }
    if p.y != chain.start().y {
        return Err(Error::Construction("chain does not end on the x-axis".into()));
    }
    let o = chain.start();
    let (lo, hi) = (o.x.min(p.x), o.x.max(p.x));
    let mut pts: Vec<Point> = chain.bends.iter().map(|&q| Point::new(2 * q.x, 2 * q.y)).collect();
    let on_closing = |a: Point, b: Point| a.y == 2 * o.y && b.y == a.y && a.x.max(b.x) > 2 * lo && a.x.min(b.x) < 2 * hi;
    if pts.len() > 2 && on_closing(pts[0], pts[1]) {
        pts.remove(0);
    }
    let k = pts.len();
    if k > 2 && on_closing(pts[k - 2], pts[k - 1]) {
        pts.pop();
    }
    // Push inner segments lying on the closing line off it.
    let k = pts.len();
    for i in 1..k.saturating_sub(2) {
        if on_closing(pts[i], pts[i + 1]) {
            // Shift toward the side the previous vertical segment comes from.
            let s = (pts[i - 1].y - pts[i].y).signum();
            pts[i].y += s;
            pts[i + 1].y += s;
        }
    }
    // Merge collinear consecutive vertices (closing edge continuing a segment).
    let mut v: Vec<Point> = Vec::with_capacity(pts.len());
    for q in pts {
        if v.last() == Some(&q) {
            continue;
        }
        v.push(q);
    }
    let mut changed = true;
    while changed && v.len() >= 3 {
        changed = false;
        let n = v.len();
        for i in 0..n {
            let (a, c, e) = (v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
            if (a.x == c.x && c.x == e.x) || (a.y == c.y && c.y == e.y) {
                let u = unit_dir(a, c);
                let w = unit_dir(c, e);
                if u.is_some() && u == w {
                    v.remove(i);
                    changed = true;
                    break;
                }
            }
        }
    }
    if v.len() < 4 {
        return Err(Error::DegenerateClosure);
    }
    let poly = RectPolygon::new(v);
    poly.quarter_turns()?;
    Ok(poly)
}

/// Minimum number of vertical segments meeting the closing segment for
/// chains reaching +x.
pub fn min_vertical_crossings(seq: &TurnSequence) -> Result<i64> {
    let d = require_nonneg(seq)?;
    if d % 4 == 0 {
        return Err(Error::UnsupportedResidue(0));
    }
    let k = d.div_euclid(4);
    Ok(if seq.first() == Some(Turn::L) { (k - 1).abs() + 1 } else { k + 1 })
}

/// Vertical segments of `chain` meeting the segment from its start to its end.
pub fn vertical_crossings(chain: &Chain) -> usize {
    let (o, p) = (chain.start(), chain.end());
    let (lo, hi) = (o.x.min(p.x), o.x.max(p.x));
    chain
        .bends
        .windows(2)
        .filter(|w| w[0].x == w[1].x && w[0].y != w[1].y)
        .filter(|w| {
            let (y0, y1) = (w[0].y.min(w[1].y), w[0].y.max(w[1].y));
            lo <= w[0].x && w[0].x <= hi && y0 <= o.y && o.y <= y1
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::realize;

    fn s(t: &str) -> TurnSequence {
        TurnSequence::parse(t).unwrap()
    }

    #[test]
    fn x_minus_table() {
        assert_eq!(upper_x_minus(&s("LLLRRR")).unwrap().value, 2);
        assert_eq!(lower_x_minus(&s("LLLRRR")).unwrap().value, 2);
        assert_eq!(upper_x_minus(&s("LLRR")), Err(Error::Unreachable("-x")));
        assert_eq!(upper_x_minus(&s("LLLLLLL")).unwrap().value, 2);
        assert_eq!(upper_x_minus(&s("LLLLLLLR")).unwrap().value, 3);
        assert_eq!(lower_x_minus(&s("LLL")).unwrap().value, 1);
        assert_eq!(lower_x_minus(&s("LLLLLLLR")).unwrap().value, 3);
        assert_eq!(upper_x_minus(&s("RR")), Err(Error::UnsupportedExcess(-2)));
    }

    #[test]
    fn x_plus_table() {
        // +x-monotone with a right hook.
        assert_eq!(upper_x_plus(&s("LRRL")).unwrap(), Bound { value: 3, formula: "x+:monotone" });
        assert_eq!(upper_x_plus(&s("RRLLLL")).unwrap().value, 2);
        let ten_l = s("LRRLLLLLLLLLLL");
        assert_eq!(ten_l.excess(), 10);
        assert_eq!(upper_x_plus(&ten_l).unwrap().value, 3);
        assert_eq!(lower_x_plus(&s("RLLLLLLL")).unwrap().value, 3);
        assert_eq!(lower_x_plus(&s("LLLLLLRR")).unwrap().value, 3);
        assert_eq!(lower_x_plus(&s("LRRLL")).unwrap().value, 3);
    }

    #[test]
    fn y_bounds() {
        let (neg, pos) = bounds_y(&s("RR"));
        let neg = neg.unwrap();
        assert!(neg.lower.value <= 1 && 1 <= neg.upper.value);
        assert!(pos.is_err());
        let (_, pos) = bounds_y(&s("LL"));
        let pos = pos.unwrap();
        assert!(pos.lower.value <= 1 && 1 <= pos.upper.value);
        let (a, c) = bounds_y(&s("LRLR"));
        assert!(a.is_err() && c.is_err());
    }

    fn poly(p: &[(i64, i64)]) -> RectPolygon {
        RectPolygon::new(p.iter().map(|&q| q.into()).collect())
    }

    #[test]
    fn rotation() {
        let ccw = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(rotation_number(&ccw).unwrap(), Rational64::from_integer(1));
        let cw = poly(&[(0, 0), (0, 1), (1, 1), (1, 0)]);
        assert_eq!(rotation_number(&cw).unwrap(), Rational64::from_integer(-1));
        let whisker = poly(&[(0, 0), (2, 0), (1, 0), (1, 1)]);
        assert!(matches!(rotation_number(&whisker), Err(Error::WhiskerDetected(_))));
    }

    #[test]
    fn crossings() {
        assert_eq!(self_intersections(&poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap(), 0);
        // Figure eight.
        let eight = poly(&[(3, 0), (3, 2), (1, 2), (1, -2), (-1, -2), (-1, 0)]);
        let r = rotation_number(&eight).unwrap();
        let i = self_intersections(&eight).unwrap() as i64;
        assert!(i >= (r.to_integer().abs() - 1).abs());
        assert_eq!(r, Rational64::from_integer(0));
        assert_eq!(i, 1);
        let loop1 = poly(&[(0, 0), (2, 0), (2, 2), (4, 2), (4, 4), (3, 4), (3, 1), (0, 1)]);
        assert_eq!(rotation_number(&loop1).unwrap(), Rational64::from_integer(1));
        assert_eq!(self_intersections(&loop1).unwrap(), 2);
        // Double-wound spiral.
        let spiral = poly(&[(0, 0), (4, 0), (4, 2), (2, 2), (2, -2), (6, -2), (6, 4), (0, 4)]);
        let r = rotation_number(&spiral).unwrap();
        assert_eq!(r, Rational64::from_integer(2));
        assert!(self_intersections(&spiral).unwrap() >= 1);
    }

    #[test]
    fn closure() {
        let c = realize(&s("LLL"), &[1, 1, 2, 1]).unwrap();
        assert_eq!(c.end(), Point::new(-1, 0));
        let p = ordinary_from_chain(&c).unwrap();
        assert!(self_intersections(&p).is_ok());
        assert_eq!(rotation_number(&p).unwrap(), Rational64::from_integer(1));
        let c = Chain::from_pairs(&[(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)]);
        assert_eq!(ordinary_from_chain(&c), Err(Error::DegenerateClosure));
    }

    #[test]
    fn crossing_minimum() {
        assert_eq!(min_vertical_crossings(&s("LRRLL")).unwrap(), 2);
        assert_eq!(min_vertical_crossings(&s("RLLLLLLL")).unwrap(), 2);
        assert_eq!(min_vertical_crossings(&s("LLLL")), Err(Error::UnsupportedResidue(0)));
    }
}
