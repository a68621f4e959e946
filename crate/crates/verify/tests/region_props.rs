use board::{Position, Square, WallSlot};
use proptest::prelude::*;
use reduction::Crop;
use std::collections::BTreeMap;
use verify::Region;

const N: u32 = 12;

fn slot() -> impl Strategy<Value = WallSlot> {
    (any::<bool>(), 1..N, 1..N).prop_map(|(h, x, y)| if h { WallSlot::h(x, y) } else { WallSlot::v(x, y) })
}

proptest! {
    #[test]
    fn crop_walls_are_the_parent_walls_touching_the_bounds(
        walls in proptest::collection::btree_set(slot(), 0..40),
        (x0, x1) in (0..N).prop_flat_map(|a| (Just(a), a..N)),
        (y0, y1) in (0..N).prop_flat_map(|a| (Just(a), a..N)),
    ) {
        let mut pos = Position::start(N, 0);
        pos.walls = walls.clone();
        let bounds = Crop { x0, y0, x1, y1 };
        let region = Region::crop("r", &pos, bounds, BTreeMap::new());
        for w in &walls {
            // A wall touches the window when one of the four squares around
            // its centre vertex lies inside it.
            let touching = [(w.x - 1, w.y - 1), (w.x - 1, w.y), (w.x, w.y - 1), (w.x, w.y)]
                .iter()
                .any(|&(c, r)| bounds.contains(Square::new(c, r)));
            prop_assert_eq!(region.walls.contains(w), touching, "{}", w);
        }
        prop_assert!(region.walls.is_subset(&walls));
    }
}
