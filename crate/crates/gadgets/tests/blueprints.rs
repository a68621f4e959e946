use board::{distance_between, pawn_moves_from, slot_conflict, Square, WallSlot};
use gadgets::*;
use std::collections::BTreeSet;

fn catalogue() -> Vec<GadgetBlueprint> {
    let mut all = vec![
        build_cross_junction().unwrap(),
        build_truth_box().unwrap(),
        build_victory_block_chamber().unwrap(),
    ];
    for len in [2, 3, 5, 8, 13] {
        all.push(build_corridor(len, Axis::Horizontal).unwrap());
        all.push(build_corridor(len, Axis::Vertical).unwrap());
    }
    for q in 0..4 {
        all.push(build_t_junction_standard(q).unwrap());
        all.push(build_t_junction_unblockable(q).unwrap());
    }
    for extra in [2, 4, 6, 10, 16] {
        all.push(build_elongator(extra).unwrap());
    }
    for (l, span) in [(2, 6), (8, 6), (14, 10), (40, 30)] {
        all.push(build_winding_road(l, span).unwrap());
        all.push(build_long_winding_road(l, span).unwrap());
    }
    for k in 2..=5 {
        all.push(build_chamber(k).unwrap());
    }
    all
}

/// Board-level distance on the smallest square board holding the box.
fn board_distance(walls: &BTreeSet<WallSlot>, bp: &GadgetBlueprint, a: Square, b: Square) -> Option<u32> {
    distance_between(walls, bp.width.max(bp.height), a, b).steps()
}

fn pairwise_legal(walls: &BTreeSet<WallSlot>) -> bool {
    walls.iter().all(|&w| {
        let mut rest = walls.clone();
        rest.remove(&w);
        slot_conflict(&rest, w).is_none()
    })
}

#[test]
fn declared_lengths_match_breadth_first_search() {
    for bp in catalogue() {
        for m in bp.meta.values() {
            let got = board_distance(&bp.walls, &bp, bp.port(&m.from), bp.port(&m.to));
            assert_eq!(got, Some(m.length), "{} {}-{}", bp.name, m.from, m.to);
        }
    }
}

#[test]
fn walls_are_mutually_legal_and_pass_audit() {
    for bp in catalogue() {
        assert!(pairwise_legal(&bp.walls), "{}", bp.name);
        assert!(audit(&bp.channel, &bp.walls, bp.width, bp.height).is_empty(), "{}", bp.name);
    }
}

#[test]
fn ports_sit_on_the_channel() {
    for bp in catalogue() {
        for (name, s) in &bp.ports {
            assert!(bp.channel.cells.contains(s), "{} port {name}", bp.name);
        }
    }
}

#[test]
fn corridor_admits_no_blocking_wall() {
    for len in [2, 5, 9] {
        let bp = build_corridor(len, Axis::Horizontal).unwrap();
        let n = bp.width.max(bp.height);
        for slot in WallSlot::all(n) {
            if slot.x >= bp.width || slot.y >= bp.height || slot_conflict(&bp.walls, slot).is_some() {
                continue;
            }
            let mut with = bp.walls.clone();
            with.insert(slot);
            assert_eq!(board_distance(&with, &bp, bp.port("a"), bp.port("b")), Some(len), "{slot} blocks");
        }
    }
}

#[test]
fn corridor_lengths_are_exact() {
    for len in 2..=12 {
        let bp = build_corridor(len, Axis::Horizontal).unwrap();
        assert_eq!(bp.measure("a", "b"), Some(len));
    }
}

#[test]
fn rotations_keep_walls_legal_and_lengths() {
    for bp in catalogue() {
        for q in 1..4 {
            let r = bp.rotated(q);
            assert_eq!((r.width, r.height), if q % 2 == 1 { (bp.height, bp.width) } else { (bp.width, bp.height) });
            assert!(pairwise_legal(&r.walls), "{} turned {q}", bp.name);
            for m in r.meta.values() {
                assert_eq!(r.measure(&m.from, &m.to), Some(m.length), "{} turned {q}", bp.name);
            }
        }
        let back = bp.rotated(1).rotated(3);
        assert_eq!(back.walls, bp.walls);
        assert_eq!(back.ports, bp.ports);
    }
}

#[test]
fn placement_translates_and_rotates() {
    let bp = build_corridor(5, Axis::Horizontal).unwrap();
    let same = place(&bp, Placement::default(), &BTreeSet::new(), 20).unwrap();
    assert_eq!(same, bp.walls);

    let turned = place(&bp, Placement::turned(1, 3, 4), &BTreeSet::new(), 20).unwrap();
    let vertical = build_corridor(5, Axis::Vertical).unwrap();
    let shifted: BTreeSet<WallSlot> =
        vertical.walls.iter().map(|w| WallSlot::new(w.orientation, w.x + 3, w.y + 4)).collect();
    assert_eq!(turned, shifted);
}

#[test]
fn placement_reports_conflicts_and_bounds() {
    let bp = build_corridor(5, Axis::Horizontal).unwrap();
    let walls = place(&bp, Placement::at(0, 0), &BTreeSet::new(), 20).unwrap();
    match place(&bp, Placement::at(1, 0), &walls, 20) {
        Err(PlaceError::Conflict { .. }) => {}
        other => panic!("expected conflict, got {other:?}"),
    }
    match place(&bp, Placement::at(15, 0), &BTreeSet::new(), 20) {
        Err(PlaceError::OutOfBounds(_)) => {}
        other => panic!("expected out of bounds, got {other:?}"),
    }
    // a far-away copy composes cleanly
    let far = place(&bp, Placement::at(0, 8), &walls, 20).unwrap();
    let mut both = walls.clone();
    both.extend(far);
    assert!(pairwise_legal(&both));
}

#[test]
fn elongators_in_series_add_their_excess() {
    let first = build_elongator(2).unwrap();
    let second = build_elongator(2).unwrap();
    let shift = first.width - 2;
    let t = Transform::shift(second.width, second.height, shift, 0);
    let mut ch = first.channel.clone();
    ch.absorb(&second.channel.transformed(&t));
    let join_a = first.port("b");
    let join_b = t.square(second.port("a"));
    ch.connect(join_a, join_b);
    let (w, h) = (first.width + shift, first.height.max(second.height));
    let walls = synthesize(&ch, w, h).unwrap();
    assert!(audit(&ch, &walls, w, h).is_empty());
    let end = t.square(second.port("b"));
    let straight = end.col - first.port("a").col;
    let got = distance_between(&walls, w.max(h), first.port("a"), end).steps().unwrap();
    assert_eq!(got, straight + 4);
}

#[test]
fn road_excess_is_exact() {
    for l in (2..=30).step_by(2) {
        for span in [6, 9, 15] {
            let road = build_winding_road(l, span).unwrap();
            assert_eq!(road.measure("a", "b"), Some(span + l), "L={l} span={span}");
            let long = build_long_winding_road(l, span).unwrap();
            assert_eq!(long.measure("a", "b"), Some(span + 3 * l), "L={l} span={span}");
        }
    }
}

#[test]
fn winding_road_spec_example() {
    let road = build_winding_road(8, 6).unwrap();
    assert_eq!(road.measure("a", "b"), Some(14));
}

#[test]
fn bad_parameters_are_rejected() {
    let invalid = |r: Result<GadgetBlueprint, GadgetError>| matches!(r, Err(GadgetError::InvalidParam(_)));
    assert!(invalid(build_corridor(1, Axis::Horizontal)));
    assert!(invalid(build_elongator(0)));
    assert!(invalid(build_elongator(3)));
    assert!(invalid(build_winding_road(1, 6)));
    assert!(invalid(build_winding_road(8, 2)));
    assert!(invalid(build_long_winding_road(0, 6)));
    assert!(invalid(build_chamber(1)));
}

#[test]
fn chamber_seals_corridors_top_first() {
    for k in 2..=6 {
        let bp = build_chamber(k).unwrap();
        let shape = ChamberShape::new(k);
        let mut walls = bp.walls.clone();
        let mut last = 0;
        for i in 1..=k {
            let d = bp.measure_with(&walls, "entrance", "exit").unwrap();
            assert_eq!(d, shape.distance_via(i));
            assert!(d > last, "route through corridor {i} must be longer");
            last = d;
            let gate = bp.gate(&format!("close_{i}"));
            assert_eq!(slot_conflict(&walls, gate), None, "closure {i} placeable");
            walls.insert(gate);
        }
        assert_eq!(bp.measure_with(&walls, "entrance", "exit"), None);
    }
}

#[test]
fn chamber_closures_are_pairwise_compatible() {
    let bp = build_chamber(4).unwrap();
    let gates: BTreeSet<WallSlot> = bp.gates.values().copied().collect();
    assert_eq!(gates.len(), 4);
    assert!(pairwise_legal(&gates));
}

#[test]
fn truth_box_has_three_states() {
    let bp = build_truth_box().unwrap();
    let (t, f) = (bp.gate("true"), bp.gate("false"));
    assert!(bp.measure("s", "n").is_some());
    let touching = slots_touching(&bp.channel, bp.width, bp.height);

    for (gate, passable) in [(t, true), (f, false)] {
        let mut walls = bp.walls.clone();
        assert_eq!(slot_conflict(&walls, gate), None);
        walls.insert(gate);
        assert_eq!(bp.measure_with(&walls, "s", "n").is_some(), passable, "{gate}");
        for &s in &touching {
            assert!(slot_conflict(&walls, s).is_some(), "{s} still fits after {gate}");
        }
    }
}

#[test]
fn victory_block_closure_cuts_the_goal() {
    let bp = build_victory_block_chamber().unwrap();
    assert_eq!(bp.measure("top", "goal"), Some(5));
    for name in ["closure", "closure_alt"] {
        let mut walls = bp.walls.clone();
        let g = bp.gate(name);
        assert_eq!(slot_conflict(&walls, g), None);
        walls.insert(g);
        assert_eq!(bp.measure_with(&walls, "top", "goal"), None);
    }
    let spread = bp.gate("closure").x.abs_diff(bp.gate("closure_alt").x) + 2;
    assert_eq!(spread, 3, "the two closures span three columns");
}

#[test]
fn cross_junction_railroads_the_turn() {
    let bp = build_cross_junction().unwrap();
    let n = bp.width.max(bp.height);
    let centre = bp.port("junction");
    let west = Square::new(centre.col - 1, centre.row);
    let moves = pawn_moves_from(&bp.walls, n, west, centre);
    let mut want = vec![Square::new(centre.col + 1, centre.row), Square::new(centre.col - 2, centre.row)];
    want.sort();
    let mut got = moves.clone();
    got.sort();
    assert_eq!(got, want);
}

#[test]
fn standard_t_lets_the_stem_turn() {
    let bp = build_t_junction_standard(0).unwrap();
    let n = bp.width.max(bp.height);
    let j = bp.port("junction");
    let below = Square::new(j.col, j.row - 1);
    let moves = pawn_moves_from(&bp.walls, n, below, j);
    assert!(moves.contains(&Square::new(j.col - 1, j.row)));
    assert!(moves.contains(&Square::new(j.col + 1, j.row)));
}
