//! Worked examples. Each expected value is first confirmed by exhaustive
//! enumeration, then compared with the library result.

use std::collections::BTreeSet;

use turnreach_core::bounds::{
    axis_bounds, bounds_y, lower_x_minus, lower_x_plus, min_vertical_crossings, upper_x_minus, upper_x_plus,
};
use turnreach_core::construct::{axis_witness, box_draw, construct_x_minus, construct_x_plus, lr_draw, twobox_draw, Constructor};
use turnreach_core::geom::{realize, turns_of};
use turnreach_core::oracle::{enumerate, exact_closest, verify_sequence, OracleConfig};
use turnreach_core::reach::{characterize, Closest, ReachableSet};
use turnreach_core::{Dir, Error, Point, TurnSequence};

fn s(t: &str) -> TurnSequence {
    TurnSequence::parse(t).unwrap()
}

/// Exact closest distance on `axis` by enumeration at the default cap.
fn oracle(t: &str, axis: Dir) -> Option<i64> {
    let q = s(t);
    exact_closest(&q, axis, &OracleConfig::for_len(q.len())).unwrap().map(i64::abs)
}

#[test]
fn counting_and_prefixes() {
    let q = s("LLRRR");
    assert_eq!((q.len(), q.lefts(), q.rights(), q.excess()), (5, 2, 3, -1));
    assert_eq!(q.profile().deltas, vec![0, 1, 2, 1, 0, -1]);
    assert_eq!(q.profile().directions[3], Dir::PosY);
    assert_eq!(s("").excess(), 0);
    assert_eq!(TurnSequence::parse("LXR"), Err(Error::InvalidCharacter { position: 2 }));
}

#[test]
fn hooks_agree_with_enumeration() {
    // A hook toward an axis exists exactly when the oracle reaches it.
    for t in ["LL", "RR", "LRLR", "LLRRR", "RRLL", "LLLLL"] {
        let q = s(t);
        let found = enumerate(&q, &OracleConfig::for_len(q.len())).unwrap().closest_axis;
        for axis in Dir::ALL {
            assert_eq!(q.has_hook(axis), found.contains_key(&axis), "{t} {axis}");
        }
    }
    let hooks: Vec<String> = s("LL").hooks().iter().map(|h| h.to_string()).collect();
    assert_eq!(hooks, ["up-LL@1"]);
    let hooks: Vec<String> = s("RR").hooks().iter().map(|h| h.to_string()).collect();
    assert_eq!(hooks, ["down-RR@1"]);
    assert!(s("LRLR").hooks().is_empty());
}

#[test]
fn realizations() {
    assert_eq!(realize(&s(""), &[1]).unwrap().bends, vec![Point::new(0, 0), Point::new(1, 0)]);
    assert_eq!(realize(&s("LRLR"), &[1; 5]).unwrap().end(), Point::new(3, 2));
    assert!(!realize(&s("LLLL"), &[1; 5]).unwrap().is_simple());
    let spiral = realize(&s("LLLL"), &[2, 2, 3, 3, 1]).unwrap();
    assert!(spiral.realizes(&s("LLLL")));
    assert_eq!(turns_of(&spiral).unwrap(), s("LLLL"));
}

#[test]
fn drawings() {
    let b = box_draw(&s("RR"));
    assert_eq!((b.bbox.width(), b.bbox.height()), (2, 1));
    assert!(twobox_draw(&s("RR"), 1).unwrap().realizes(&s("RR")));
    assert!(twobox_draw(&s("RLLR"), 2).unwrap().realizes(&s("RLLR")));
    assert!(matches!(twobox_draw(&s("RR"), 0), Err(Error::InvalidSplit { .. })));
    for t in ["LR", "RL", "LLRR", "LRL"] {
        let b = lr_draw(&s(t)).unwrap();
        assert!(b.chain.realizes(&s(t)) && b.ends_on_sides(), "{t}");
    }
    assert!(lr_draw(&s("RL")).unwrap().last_segment_on_side());
}

#[test]
fn witnesses() {
    assert_eq!(oracle("RR", Dir::NegY), Some(1));
    let c = axis_witness(&s("RR"), Dir::NegY).unwrap();
    assert!(c.realizes(&s("RR")) && c.axis_distance(Dir::NegY).is_some());
    let c = axis_witness(&s("LL"), Dir::PosY).unwrap();
    assert!(c.axis_distance(Dir::PosY).is_some());
    for axis in Dir::ALL {
        assert!(matches!(axis_witness(&s("LRLR"), axis), Err(Error::NoSuchHook(_))));
    }
}

#[test]
fn closest_constructions() {
    assert_eq!(oracle("LLLLL", Dir::NegX), Some(1));
    assert_eq!(construct_x_minus(&s("LLLLL")).unwrap().end(), Point::new(-1, 0));
    // With no -x segment the chain runs straight along +x.
    assert_eq!(oracle("LRRL", Dir::PosX), Some(3));
    assert_eq!(construct_x_plus(&s("LRRL")).unwrap().end(), Point::new(3, 0));
    assert!(matches!(construct_x_plus(&s("LRLR")), Err(Error::Unreachable(_))));
    assert_eq!(oracle("RR", Dir::NegY), Some(1));
    assert_eq!(Constructor::new().closest(&s("RR"), Dir::NegY).unwrap().end(), Point::new(0, -1));
    assert_eq!(oracle("LL", Dir::PosY), Some(1));
    assert_eq!(Constructor::new().closest(&s("LL"), Dir::PosY).unwrap().end(), Point::new(0, 1));
    assert!(matches!(Constructor::new().closest(&s("LRLR"), Dir::PosY), Err(Error::Unreachable(_))));
}

#[test]
fn bound_tables() {
    // Every bound brackets the enumerated value.
    for (t, axis) in [("LLLL", Dir::NegX), ("LLLLLL", Dir::NegX), ("LLLLLRL", Dir::NegX), ("RR", Dir::NegY), ("LRRLL", Dir::PosX)] {
        let b = axis_bounds(&s(t), axis).unwrap();
        let e = oracle(t, axis).unwrap();
        assert!(b.lower.value <= e && e <= b.upper.value, "{t} {axis}: {e} vs {b:?}");
    }
    assert_eq!(upper_x_minus(&s("LLLRRR")).unwrap().value, 2);
    assert_eq!(upper_x_minus(&s("LLLLLLL")).unwrap().value, 2);
    assert_eq!(upper_x_minus(&s("LLLLLLLR")).unwrap().value, 3);
    assert_eq!(upper_x_plus(&s("RLLL")).unwrap().value, 2);
    assert_eq!(upper_x_plus(&s("LLLLLLLLLL")).unwrap().value, 3);
    assert_eq!(lower_x_plus(&s("RLLLLLLL")).unwrap().value, 3);
    assert_eq!(lower_x_plus(&s("LLLLLLRR")).unwrap().value, 3);
    assert_eq!(lower_x_plus(&s("LRRLL")).unwrap().value, 3);
    assert_eq!(lower_x_minus(&s("LLL")).unwrap().value, 1);
    assert_eq!(lower_x_minus(&s("LLLLLLLR")).unwrap().value, 3);
    assert_eq!(lower_x_minus(&s("LLLRRR")).unwrap().value, 2);
    let (down, _) = bounds_y(&s("RR"));
    let down = down.unwrap();
    assert!(down.lower.value <= 1 && 1 <= down.upper.value);
    assert_eq!(min_vertical_crossings(&s("LLRLR")).unwrap(), 2);
    assert_eq!(min_vertical_crossings(&s("RLLLLLLL")).unwrap(), 2);
    assert_eq!(min_vertical_crossings(&s("LLLL")), Err(Error::UnsupportedResidue(0)));
}

#[test]
fn oracle_examples() {
    let pts = |v: &[(i64, i64)]| v.iter().map(|&p| p.into()).collect::<BTreeSet<Point>>();
    assert_eq!(enumerate(&s(""), &OracleConfig::fixed(0, 3)).unwrap().reachable_points, pts(&[(1, 0), (2, 0), (3, 0)]));
    assert_eq!(enumerate(&s("L"), &OracleConfig::fixed(1, 1)).unwrap().reachable_points, pts(&[(1, 1)]));
    assert_eq!(oracle("LRLR", Dir::PosX), None);
    assert_eq!(oracle("LLLL", Dir::NegX), Some(1));
}

#[test]
fn characterizations() {
    let r = enumerate(&s("LL"), &OracleConfig::for_len(2)).unwrap();
    assert_eq!(r.closest_axis, [(Dir::PosY, 1)].into_iter().collect::<Closest>());
    let set = characterize(&s("LL"), &r.closest_axis).unwrap();
    assert!(matches!(set, ReachableSet::HalfplaneUnion { ref parts } if parts.len() == 1));
    assert_eq!(characterize(&s("LRLR"), &Closest::new()).unwrap(), ReachableSet::Quadrant { corner: Point::new(3, 2) });
}

#[test]
fn verification_examples() {
    for t in ["RR", "LRLR", "LLRRR", "LLLLLL"] {
        let q = s(t);
        let r = verify_sequence(&q, &OracleConfig::for_len(q.len())).unwrap();
        assert!(r.passed() && !r.flagged(), "{t}: {:?}", r.checks);
    }
}
