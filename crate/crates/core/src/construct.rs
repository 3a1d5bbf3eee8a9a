//! Drawing algorithms: Box, TwoBox, the LR reduction, axis witnesses, and
//! constructions of close axis endpoints.

use std::cell::RefCell;
use std::collections::HashMap;
use std::time::Duration;

use crate::bounds::axis_bounds;
use crate::error::{Error, Result};
use crate::geom::{compact, insert_band, realize, BoundingBox, Chain, Isometry, Point};
use crate::oracle::find_realization;
use crate::turnseq::{Dir, Turn, TurnSequence};

/// A chain together with its bounding box and end points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxedChain {
    pub chain: Chain,
    pub bbox: BoundingBox,
    pub entry: Point,
    pub exit: Point,
}

impl BoxedChain {
    pub fn new(chain: Chain) -> BoxedChain {
        BoxedChain { bbox: chain.bounding_box(), entry: chain.start(), exit: chain.end(), chain }
    }

    pub fn ends_on_sides(&self) -> bool {
        self.bbox.on_side(self.entry) && self.bbox.on_side(self.exit)
    }

    /// The last segment lies inside one side of the box.
    pub fn last_segment_on_side(&self) -> bool {
        let b = &self.chain.bends;
        last_segment_on_side(b)
    }
}

fn last_segment_on_side(b: &[Point]) -> bool {
    if b.len() < 2 {
        return false;
    }
    let bb = BoundingBox::of(b);
    let (p, q) = (b[b.len() - 2], b[b.len() - 1]);
    (p.x == q.x && (p.x == bb.xmin || p.x == bb.xmax)) || (p.y == q.y && (p.y == bb.ymin || p.y == bb.ymax))
}

/// Incremental drawing: a turn that repeats the previous one wraps the
/// new segment around everything drawn so far, otherwise it gets unit length.
pub fn box_draw(seq: &TurnSequence) -> BoxedChain {
    let dirs = seq.profile().directions;
    let mut bends = vec![Point::ORIGIN, Point::new(1, 0)];
    let mut bb = BoundingBox::of(&bends);
    let t = seq.turns();
    for i in 0..t.len() {
        let d = dirs[i + 1];
        let len = if i == 0 || t[i - 1] != t[i] {
            1
        } else if d.is_horizontal() {
            bb.width() + 1
        } else {
            bb.height() + 1
        };
        let p = bends.last().unwrap().step(d, len);
        bends.push(p);
        bb = BoundingBox::of(&bends);
    }
    BoxedChain::new(Chain::new(bends))
}

/// Draw `σ_1..σ_split` and the reversed complement of the rest with
/// `box_draw`, then glue the two along their final segments.
pub fn twobox_draw(seq: &TurnSequence, split: usize) -> Result<Chain> {
    let n = seq.len();
    if split < 1 || split >= n {
        return Err(Error::InvalidSplit { split, n });
    }
    let c1 = box_draw(&seq.slice(0, split)).chain;
    let c2 = box_draw(&seq.slice(split, n).reverse_complement()).chain;
    let d1 = c1.segment_dir(c1.segment_count() - 1).unwrap();
    let d2 = c2.segment_dir(c2.segment_count() - 1).unwrap();
    let mut b2 = c2.bends.clone();
    if let Some(iso) = Isometry::rotation(d2, d1.opposite()) {
        b2 = b2.iter().map(|&p| iso.apply(p)).collect();
    }
    let target = c1.end().step(d1, 1);
    let off = target - *b2.last().unwrap();
    let mut out: Vec<Point> = c1.bends[..c1.bends.len() - 1].to_vec();
    out.extend(b2.iter().rev().skip(1).map(|&p| p + off));
    Ok(Chain::new(out))
}

/// Lengthen segment `k` by `t`, translating everything after it.
fn stretch_segment(bends: &[Point], k: usize, t: i64) -> Vec<Point> {
    let d = Chain::new(bends.to_vec()).segment_dir(k).unwrap();
    let (dx, dy) = d.unit();
    let v = Point::new(dx * t, dy * t);
    bends
        .iter()
        .enumerate()
        .map(|(i, &p)| if i > k { p + v } else { p })
        .collect()
}

fn hooks_toward(seq: &TurnSequence, axis: Dir) -> Vec<usize> {
    seq.hooks().iter().filter(|h| h.direction == axis).map(|h| h.index).collect()
}

/// TwoBox at hook `h` (1-based), then stretch next to the hook segment so
/// the endpoint lands on `axis`.
fn witness_at(seq: &TurnSequence, axis: Dir, h: usize) -> Result<Chain> {
    let mut b = twobox_draw(seq, h)?.bends;
    let (ux, uy) = axis.unit();
    let p = *b.last().unwrap();
    // Offset across the axis that has to be removed.
    let v = if ux != 0 { p.y } else { p.x };
    if v != 0 {
        let c = Chain::new(b.clone());
        for k in [h - 1, h + 1] {
            let (dx, dy) = c.segment_dir(k).unwrap().unit();
            let across = if ux != 0 { dy } else { dx };
            if across * v < 0 {
                b = stretch_segment(&b, k, v.abs());
                break;
            }
        }
    }
    let p = *b.last().unwrap();
    let along = p.x * ux + p.y * uy;
    if along <= 0 {
        b = stretch_segment(&b, h, 1 - along);
    }
    let c = Chain::new(b);
    if c.axis_distance(axis).is_none() || !c.realizes(seq) {
        return Err(Error::Construction(format!("witness for {seq} on {axis} at hook {h}")));
    }
    Ok(c)
}

/// A chain ending on `axis`, built at the first hook heading that way.
pub fn axis_witness(seq: &TurnSequence, axis: Dir) -> Result<Chain> {
    match hooks_toward(seq, axis).first() {
        Some(&h) => witness_at(seq, axis, h),
        None => Err(Error::NoSuchHook(axis.hook_name())),
    }
}

/// A deleted pair: position in the shorter sequence and the two turns.
type Deletion = (usize, [Turn; 2]);

/// Repeatedly delete an adjacent `LR` or `RL` pair, never touching the
/// original positions in `keep`.
fn reduce(seq: &TurnSequence, keep: &[usize], rightmost: bool) -> (TurnSequence, Vec<Deletion>) {
    let mut cur: Vec<Turn> = seq.turns().to_vec();
    let mut tags: Vec<usize> = (0..cur.len()).collect();
    let mut dels = Vec::new();
    loop {
        let m = cur.len();
        let ok = |i: usize| cur[i] != cur[i + 1] && !keep.contains(&tags[i]) && !keep.contains(&tags[i + 1]);
        let found = if m < 2 {
            None
        } else if rightmost {
            (0..m - 1).rev().find(|&i| ok(i))
        } else {
            (0..m - 1).find(|&i| ok(i))
        };
        match found {
            Some(i) => {
                dels.push((i, [cur[i], cur[i + 1]]));
                cur.drain(i..i + 2);
                tags.drain(i..i + 2);
            }
            None => return (TurnSequence::new(cur), dels),
        }
    }
}

/// Insert the turn pair into segment `k` at offset `j` from its start.
/// Variant 0 pushes the tail of the segment aside, variant 1 the head.
fn jog(bends: &[Point], k: usize, pair: [Turn; 2], j: i64, variant: u8) -> Vec<Point> {
    let (p, q) = (bends[k], bends[k + 1]);
    let d = Chain::new(vec![p, q]).segment_dir(0).unwrap();
    let side = d.turned(pair[0]);
    let push = if variant == 0 { side } else { side.opposite() };
    let horizontal = push.is_horizontal();
    let (sx, sy) = push.unit();
    let sign = sx + sy;
    let line2 = 2 * p.coord(horizontal) + sign;
    let shifted = insert_band(bends, horizontal, line2, sign, 1);
    let pv = Point::new(sx, sy);
    let x = p.step(d, j);
    let mut out = Vec::with_capacity(bends.len() + 2);
    if variant == 0 {
        out.extend_from_slice(&shifted[..=k]);
        out.extend([x, x + pv, q + pv]);
        out.extend_from_slice(&shifted[k + 2..]);
    } else {
        out.extend_from_slice(&shifted[..k]);
        out.extend([p + pv, x + pv, x]);
        out.extend_from_slice(&shifted[k + 1..]);
    }
    let o = out[0];
    out.iter().map(|&b| b - o).collect()
}

/// Make segment `k` at least two units long by a band across its interior.
fn lengthen_for_jog(bends: Vec<Point>, k: usize) -> Vec<Point> {
    let c = Chain::new(bends);
    if c.segment_len(k) >= 2 {
        return c.bends;
    }
    let d = c.segment_dir(k).unwrap();
    let (dx, dy) = d.unit();
    let sign = dx + dy;
    let h = d.is_horizontal();
    insert_band(&c.bends, h, 2 * c.bends[k].coord(h) + sign, sign, 1)
}

/// LR-algorithm: reduce to `L^δ` or `R^-δ`, draw that, and re-insert the
/// deleted pairs as jogs chosen so that both ends stay on the bounding box.
pub fn lr_draw(seq: &TurnSequence) -> Result<BoxedChain> {
    let (core, dels) = reduce(seq, &[], false);
    let mut b = if core.len() > 2 {
        box_draw(&core).chain.bends
    } else {
        realize(&core, &vec![1; core.len() + 1])?.bends
    };
    let need_last = seq.excess() == 0;
    for &(pos, pair) in dels.iter().rev() {
        b = lengthen_for_jog(b, pos);
        let len = Chain::new(b.clone()).segment_len(pos);
        let mut chosen = None;
        'search: for variant in [0u8, 1] {
            for j in 1..len {
                let q = jog(&b, pos, pair, j, variant);
                let bb = BoundingBox::of(&q);
                let ok = bb.on_side(q[0])
                    && bb.on_side(*q.last().unwrap())
                    && (!need_last || last_segment_on_side(&q));
                if ok {
                    chosen = Some(q);
                    break 'search;
                }
            }
        }
        b = chosen.unwrap_or_else(|| jog(&b, pos, pair, 1, 0));
    }
    let c = Chain::new(b);
    if !c.realizes(seq) {
        return Err(Error::Construction(format!("lr_draw for {seq}")));
    }
    Ok(BoxedChain::new(c))
}

/// Shorten segment `k` by `t`, translating everything after it back.
fn shift_suffix(bends: &[Point], k: usize, t: i64) -> Vec<Point> {
    stretch_segment(bends, k, -t)
}

/// Move bends `i+1..=j` by `t` along segment `i` (segments `i` and `j` are
/// parallel, so the endpoint stays put).
fn slide(bends: &[Point], i: usize, j: usize, t: i64, d: Dir) -> Vec<Point> {
    let v = Point::new(d.unit().0 * t, d.unit().1 * t);
    bends
        .iter()
        .enumerate()
        .map(|(a, &p)| if a > i && a <= j { p + v } else { p })
        .collect()
}

/// Greedy suffix shortening toward the origin along `axis`.
fn descend(mut c: Chain, seq: &TurnSequence, axis: Dir) -> Chain {
    let mut dist = match c.axis_distance(axis) {
        Some(d) => d,
        None => return c,
    };
    loop {
        let mut best: Option<(i64, Chain)> = None;
        for k in 0..c.segment_count() {
            for t in 1..c.segment_len(k) {
                let q = Chain::new(shift_suffix(&c.bends, k, t));
                let Some(d) = q.axis_distance(axis) else { continue };
                if d >= dist || best.as_ref().is_some_and(|b| b.0 <= d) || !q.realizes(seq) {
                    continue;
                }
                best = Some((d, q));
            }
        }
        match best {
            None => return c,
            Some((_, q)) => {
                c = compact(&q, seq);
                dist = c.axis_distance(axis).unwrap();
            }
        }
    }
}

/// Local search: suffix shortening, plus slides of inner blocks that open
/// room for further shortening.
pub fn improve(c: &Chain, seq: &TurnSequence, axis: Dir) -> Chain {
    let mut c = descend(c.clone(), seq, axis);
    let Some(mut dist) = c.axis_distance(axis) else { return c };
    'outer: loop {
        let m = c.segment_count();
        for i in 0..m {
            let di = c.segment_dir(i).unwrap();
            for j in i + 1..m {
                if c.segment_dir(j).unwrap().is_horizontal() != di.is_horizontal() {
                    continue;
                }
                for t in [-2i64, -1, 1, 2] {
                    let q = Chain::new(slide(&c.bends, i, j, t, di));
                    if !q.realizes(seq) {
                        continue;
                    }
                    let r = descend(q, seq, axis);
                    let d = r.axis_distance(axis).unwrap();
                    if d < dist {
                        c = r;
                        dist = d;
                        continue 'outer;
                    }
                }
            }
        }
        return c;
    }
}

fn pick(best: &mut Option<Chain>, c: Chain, axis: Dir) {
    let d = c.axis_distance(axis).unwrap();
    if best.as_ref().is_none_or(|b| d < b.axis_distance(axis).unwrap()) {
        *best = Some(c);
    }
}

/// Memoizing search for realizations ending close to o on a signed axis.
/// Candidates come from witnesses at every matching hook, LR reduction
/// around each such hook with greedy jog re-insertion, and the exact
/// symmetries (mirror, reversal, 90-degree reduction, dropping the last
/// turn) applied to smaller or equivalent problems.
///
/// When the result misses the upper bound, `new` falls back to a short
/// exhaustive search over small segment lengths for sequences of up to
/// [`SEARCH_MAX_N`] turns; `portfolio_only` never searches.
pub struct Constructor {
    memo: RefCell<HashMap<(TurnSequence, Dir, u8), Option<Chain>>>,
    search: bool,
}

const DEPTH: u8 = 2;
pub const SEARCH_MAX_N: usize = 12;
const SEARCH_CAPS: [u32; 5] = [2, 3, 4, 6, 8];
const SEARCH_BUDGET: Duration = Duration::from_secs(2);

impl Default for Constructor {
    fn default() -> Self {
        Constructor::new()
    }
}

impl Constructor {
    pub fn new() -> Constructor {
        Constructor { memo: RefCell::default(), search: true }
    }

    pub fn portfolio_only() -> Constructor {
        Constructor { memo: RefCell::default(), search: false }
    }

    /// A realization of `seq` ending on `axis`, as close to o as found.
    pub fn closest(&self, seq: &TurnSequence, axis: Dir) -> Result<Chain> {
        if !seq.has_hook(axis) {
            return Err(Error::Unreachable(axis.as_str()));
        }
        let c = self
            .solve(seq, axis, DEPTH)
            .ok_or_else(|| Error::Construction(format!("no chain for {seq} on {axis}")))?;
        let c = improve(&c, seq, axis);
        if !self.search || seq.len() > SEARCH_MAX_N {
            return Ok(c);
        }
        let target = axis_bounds(seq, axis)?.upper.value;
        if c.axis_distance(axis).is_none_or(|d| d <= target) {
            return Ok(c);
        }
        for cap in SEARCH_CAPS {
            let hit = match find_realization(seq, cap, Some(SEARCH_BUDGET), |b| b[b.len() - 1].axis_distance(axis).is_some_and(|d| d <= target)) {
                Err(Error::Timeout) => break,
                r => r?,
            };
            if let Some(h) = hit {
                return Ok(improve(&h, seq, axis));
            }
        }
        Ok(c)
    }

    fn solve(&self, seq: &TurnSequence, axis: Dir, depth: u8) -> Option<Chain> {
        let key = (seq.clone(), axis, depth);
        if let Some(r) = self.memo.borrow().get(&key) {
            return r.clone();
        }
        let r = self.solve_uncached(seq, axis, depth);
        self.memo.borrow_mut().insert(key, r.clone());
        r
    }

    fn solve_uncached(&self, seq: &TurnSequence, axis: Dir, depth: u8) -> Option<Chain> {
        let hooks = hooks_toward(seq, axis);
        if hooks.is_empty() {
            return None;
        }
        let mut best: Option<Chain> = None;
        let mut consider = |c: Chain| {
            if c.realizes(seq) && c.axis_distance(axis).is_some() {
                pick(&mut best, compact(&c, seq), axis);
            }
        };
        for &h in &hooks {
            if let Ok(c) = witness_at(seq, axis, h) {
                consider(c);
            }
        }
        for &h in &hooks {
            for rightmost in [false, true] {
                let (core, dels) = reduce(seq, &[h - 1, h], rightmost);
                if let Some(c) = self.rebuild_core(&core, &dels, axis) {
                    consider(c);
                }
            }
        }
        if depth > 0 {
            let d = depth - 1;
            let mirrored = Isometry::ReflectX.apply_dir(axis);
            if let Some(c) = self.solve(&seq.mirror(), mirrored, d) {
                consider(Chain::new(c.bends.iter().map(|&p| Isometry::ReflectX.apply(p)).collect()));
            }
            let rc = seq.reverse_complement();
            for b in Dir::ALL {
                if let Some(c) = self.solve(&rc, b, d) {
                    consider(c.reversed());
                }
            }
            if !axis.is_horizontal() {
                let t = if axis == Dir::NegY { Turn::L } else { Turn::R };
                if let Some(c) = self.solve(&seq.prepend(t), Dir::PosX, d) {
                    consider(Chain::new(c.bends[1..].to_vec()).normalized());
                }
            }
            if let Ok(shorter) = seq.drop_last() {
                let last = seq.last().unwrap();
                for b in Dir::ALL {
                    let Some(c) = self.solve(&shorter, b, d) else { continue };
                    let dl = c.segment_dir(c.segment_count() - 1).unwrap();
                    let nd = dl.turned(last);
                    for len in 1..=3 {
                        let mut bends = c.bends.clone();
                        bends.push(c.end().step(nd, len));
                        consider(Chain::new(bends));
                    }
                }
            }
        }
        best
    }

    fn rebuild_core(&self, core: &TurnSequence, dels: &[Deletion], axis: Dir) -> Option<Chain> {
        let mut base: Option<Chain> = None;
        for h in hooks_toward(core, axis) {
            if let Ok(c) = witness_at(core, axis, h) {
                pick(&mut base, compact(&c, core), axis);
            }
        }
        let mut b = base?.bends;
        let mut cur = core.turns().to_vec();
        for &(pos, pair) in dels.iter().rev() {
            cur.splice(pos..pos, pair);
            let s2 = TurnSequence::new(cur.clone());
            b = lengthen_for_jog(b, pos);
            let len = Chain::new(b.clone()).segment_len(pos);
            let mut best: Option<Chain> = None;
            for variant in [0u8, 1] {
                for j in 1..len {
                    let q = compact(&Chain::new(jog(&b, pos, pair, j, variant)), &s2);
                    if q.axis_distance(axis).is_some() {
                        pick(&mut best, q, axis);
                    }
                }
            }
            b = best?.bends;
        }
        Some(Chain::new(b))
    }
}

/// Closest construction on -x for δ ≥ 0.
pub fn construct_x_minus(seq: &TurnSequence) -> Result<Chain> {
    if seq.excess() < 0 {
        return Err(Error::UnsupportedExcess(seq.excess()));
    }
    Constructor::new().closest(seq, Dir::NegX)
}

/// Closest construction on +x for δ ≥ -1.
pub fn construct_x_plus(seq: &TurnSequence) -> Result<Chain> {
    if seq.excess() < -1 {
        return Err(Error::UnsupportedExcess(seq.excess()));
    }
    Constructor::new().closest(seq, Dir::PosX)
}

/// Closest construction on any signed axis.
pub fn construct_axis_closest(seq: &TurnSequence, axis: Dir) -> Result<Chain> {
    Constructor::new().closest(seq, axis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> TurnSequence {
        TurnSequence::parse(t).unwrap()
    }

    #[test]
    fn box_examples() {
        let b = box_draw(&s(""));
        assert_eq!((b.bbox.width(), b.bbox.height()), (1, 0));
        let b = box_draw(&s("L"));
        assert_eq!((b.bbox.width(), b.bbox.height()), (1, 1));
        assert!(b.bbox.is_corner(b.exit));
        let b = box_draw(&s("RR"));
        assert_eq!((b.bbox.width(), b.bbox.height()), (2, 1));
        assert!(b.chain.realizes(&s("RR")));
    }

    #[test]
    fn twobox_examples() {
        assert!(twobox_draw(&s("RR"), 1).unwrap().realizes(&s("RR")));
        let c = twobox_draw(&s("RLLR"), 2).unwrap();
        assert!(c.realizes(&s("RLLR")));
        assert_eq!(twobox_draw(&s("RR"), 0), Err(Error::InvalidSplit { split: 0, n: 2 }));
    }

    #[test]
    fn lr_examples() {
        let b = lr_draw(&s("LR")).unwrap();
        assert_eq!(b.chain.segment_count(), 3);
        assert!(b.ends_on_sides());
        let b = lr_draw(&s("RL")).unwrap();
        assert!(b.ends_on_sides() && b.last_segment_on_side());
        assert!(lr_draw(&s("LLL")).unwrap().chain.realizes(&s("LLL")));
    }

    #[test]
    fn witness_examples() {
        let c = axis_witness(&s("RR"), Dir::NegY).unwrap();
        assert!(c.axis_distance(Dir::NegY).is_some());
        let c = axis_witness(&s("LL"), Dir::PosY).unwrap();
        assert!(c.axis_distance(Dir::PosY).is_some());
        for d in Dir::ALL {
            assert_eq!(axis_witness(&s("LRLR"), d), Err(Error::NoSuchHook(d.hook_name())));
        }
    }

    #[test]
    fn closest_examples() {
        let c = construct_x_minus(&s("LLLLL")).unwrap();
        assert_eq!(c.end(), Point::new(-1, 0));
        let c = construct_axis_closest(&s("RR"), Dir::NegY).unwrap();
        assert_eq!(c.end(), Point::new(0, -1));
        let c = construct_axis_closest(&s("LL"), Dir::PosY).unwrap();
        assert_eq!(c.end(), Point::new(0, 1));
        assert_eq!(construct_axis_closest(&s("LRLR"), Dir::PosY), Err(Error::Unreachable("+y")));
        assert_eq!(construct_x_minus(&s("RR")), Err(Error::UnsupportedExcess(-2)));
    }
}
