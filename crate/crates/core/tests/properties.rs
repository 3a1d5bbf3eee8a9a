use proptest::prelude::*;
use turnreach_core::construct::box_draw;
use turnreach_core::geom::{realize, stretch, turns_of, Cut};
use turnreach_core::{Dir, Turn, TurnSequence};

fn seq(max: usize) -> impl Strategy<Value = TurnSequence> {
    prop::collection::vec(prop::bool::ANY, 0..=max)
        .prop_map(|v| TurnSequence::new(v.into_iter().map(|b| if b { Turn::L } else { Turn::R }).collect()))
}

fn flip_y(d: Dir) -> Dir {
    match d {
        Dir::PosY => Dir::NegY,
        Dir::NegY => Dir::PosY,
        other => other,
    }
}

proptest! {
    #[test]
    fn text_round_trip(s in seq(40)) {
        prop_assert_eq!(TurnSequence::parse(&s.to_string()).unwrap(), s.clone());
        let j = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<TurnSequence>(&j).unwrap(), s);
    }

    #[test]
    fn involutions(s in seq(40)) {
        prop_assert_eq!(s.reverse_complement().reverse_complement(), s.clone());
        prop_assert_eq!(s.mirror().mirror(), s.clone());
        prop_assert_eq!(s.mirror().excess(), -s.excess());
        prop_assert_eq!(s.reverse_complement().excess(), -s.excess());
    }

    #[test]
    fn mirror_swaps_vertical_hooks(s in seq(24)) {
        for axis in Dir::ALL {
            prop_assert_eq!(s.has_hook(axis), s.mirror().has_hook(flip_y(axis)));
        }
    }

    #[test]
    fn realize_then_read_back(s in seq(12), lens in prop::collection::vec(1i64..6, 13)) {
        let c = realize(&s, &lens[..s.len() + 1]).unwrap();
        if c.is_simple() {
            prop_assert!(c.realizes(&s));
            prop_assert_eq!(turns_of(&c).unwrap(), s);
        }
    }

    #[test]
    fn reversal_realizes_reverse_complement(s in seq(30)) {
        let c = box_draw(&s).chain;
        prop_assert!(c.realizes(&s));
        prop_assert!(c.reversed().realizes(&s.reverse_complement()));
    }

    #[test]
    fn stretching_keeps_turns(s in seq(20), col in -6i64..6, d in 1i64..4) {
        let c = box_draw(&s).chain;
        if let Ok(out) = stretch(&c, &Cut::vertical(2 * col + 1), d) {
            prop_assert!(out.realizes(&s));
            let moved = out.end() - c.end();
            prop_assert!(moved.y == 0 && (moved.x == 0 || moved.x.abs() == d));
        }
    }
}
