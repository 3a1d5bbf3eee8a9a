//! Construction invariants over every sequence up to a fixed length.

use turnreach_core::bounds::axis_bounds;
use turnreach_core::construct::{axis_witness, box_draw, lr_draw, twobox_draw, Constructor};
use turnreach_core::{Dir, Turn, TurnSequence};

fn all_sequences(max_n: usize) -> impl Iterator<Item = TurnSequence> {
    (0..=max_n).flat_map(|n| {
        (0u32..1 << n).map(move |bits| {
            TurnSequence::new((0..n).map(|i| if bits >> i & 1 == 0 { Turn::L } else { Turn::R }).collect())
        })
    })
}

#[test]
fn closest_within_upper_bound() {
    let builder = Constructor::new();
    let mut checked = 0;
    for seq in all_sequences(10) {
        for axis in Dir::ALL {
            if !seq.has_hook(axis) {
                continue;
            }
            let c = builder.closest(&seq, axis).unwrap();
            assert!(c.realizes(&seq), "{seq} {axis}: not a realization");
            let d = c.axis_distance(axis).unwrap_or_else(|| panic!("{seq} {axis}: off axis"));
            let upper = axis_bounds(&seq, axis).unwrap().upper.value;
            assert!(d <= upper, "{seq} {axis}: built {d}, bound {upper}");
            checked += 1;
        }
    }
    assert!(checked > 5000);
}

#[test]
fn witnesses_reach_hooked_axes() {
    for seq in all_sequences(9) {
        for axis in Dir::ALL {
            match axis_witness(&seq, axis) {
                Ok(c) => {
                    assert!(seq.has_hook(axis));
                    assert!(c.realizes(&seq) && c.axis_distance(axis).is_some(), "{seq} {axis}");
                }
                Err(_) => assert!(!seq.has_hook(axis), "{seq} {axis}"),
            }
        }
    }
}

#[test]
fn drawings_realize() {
    for seq in all_sequences(9) {
        assert!(box_draw(&seq).chain.realizes(&seq), "{seq}: box");
        for k in 1..seq.len() {
            assert!(twobox_draw(&seq, k).unwrap().realizes(&seq), "{seq}: split {k}");
        }
        assert!(twobox_draw(&seq, 0).is_err() && twobox_draw(&seq, seq.len()).is_err());
        if seq.excess().abs() <= 2 {
            let b = lr_draw(&seq).unwrap();
            assert!(b.chain.realizes(&seq) && b.ends_on_sides(), "{seq}: lr");
        }
    }
}
