use board::{
    parse, serialize, Distance, MoveRec, Orientation, Player, Position, Square, WallSlot,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use std::collections::BTreeSet;

fn at(n: u32, w: (u32, u32), b: (u32, u32), to_move: Player) -> Position {
    Position {
        n,
        white_pawn: Square::new(w.0, w.1),
        black_pawn: Square::new(b.0, b.1),
        walls: BTreeSet::new(),
        white_walls_left: 0,
        black_walls_left: 0,
        to_move,
    }
}

/// Wall-free move rule written from scratch with coordinate arithmetic.
fn open_board_moves(n: i64, me: (i64, i64), them: (i64, i64)) -> BTreeSet<(i64, i64)> {
    let on = |(c, r): (i64, i64)| (0..n).contains(&c) && (0..n).contains(&r);
    let mut out = BTreeSet::new();
    for (dc, dr) in [(0, 1), (0, -1), (1, 0), (-1, 0)] {
        let step = (me.0 + dc, me.1 + dr);
        if !on(step) {
            continue;
        }
        if step != them {
            out.insert(step);
            continue;
        }
        let jump = (step.0 + dc, step.1 + dr);
        if on(jump) {
            out.insert(jump);
        } else {
            for side in [(dr, dc), (-dr, -dc)] {
                let s = (step.0 + side.0, step.1 + side.1);
                if on(s) {
                    out.insert(s);
                }
            }
        }
    }
    out
}

#[test]
fn n3_every_pawn_pair_matches_coordinate_rule() {
    let squares: Vec<(u32, u32)> = (0..3).flat_map(|c| (0..3).map(move |r| (c, r))).collect();
    let mut cases = 0;
    for &w in &squares {
        for &b in &squares {
            if w == b {
                continue;
            }
            for side in [Player::White, Player::Black] {
                let p = at(3, w, b, side);
                let (me, them) = if side == Player::White { (w, b) } else { (b, w) };
                let got: BTreeSet<(i64, i64)> =
                    p.pawn_moves().iter().map(|s| (s.col as i64, s.row as i64)).collect();
                let want = open_board_moves(3, (me.0 as i64, me.1 as i64), (them.0 as i64, them.1 as i64));
                assert_eq!(got, want, "white {w:?} black {b:?} {side:?} to move");
                cases += 1;
            }
        }
    }
    assert_eq!(cases, 9 * 8 * 2);
}

#[test]
fn n3_hand_table() {
    // (mover, opponent) -> destinations, worked out by hand
    type Case = ((u32, u32), (u32, u32), &'static [(u32, u32)]);
    let table: &[Case] = &[
        ((1, 1), (1, 2), &[(0, 1), (2, 1), (1, 0), (0, 2), (2, 2)]),
        ((1, 0), (1, 1), &[(0, 0), (2, 0), (1, 2)]),
        ((0, 0), (1, 0), &[(0, 1), (2, 0)]),
        ((0, 0), (0, 1), &[(1, 0), (0, 2)]),
        ((1, 1), (0, 1), &[(1, 0), (1, 2), (2, 1), (0, 0), (0, 2)]),
        ((0, 0), (2, 2), &[(0, 1), (1, 0)]),
        ((2, 1), (2, 2), &[(2, 0), (1, 1), (1, 2)]),
    ];
    for &(me, them, want) in table {
        let p = at(3, me, them, Player::White);
        let got: BTreeSet<_> = p.pawn_moves().into_iter().collect();
        let want: BTreeSet<_> = want.iter().map(|&(c, r)| Square::new(c, r)).collect();
        assert_eq!(got, want, "mover {me:?} opponent {them:?}");
    }
}

#[test]
fn sealed_pocket_slot_missing() {
    let mut p = at(5, (0, 0), (4, 4), Player::White);
    p.white_walls_left = 1;
    p.walls.insert(WallSlot::v(1, 1));
    assert!(p.wall_placements().contains(&WallSlot::h(1, 3)));
    assert!(!p.wall_placements().contains(&WallSlot::h(1, 2)));
}

fn random_play(seed: u64, n: u32, walls_each: u32, plies: usize) -> Vec<Position> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut p = Position::start(n, walls_each);
    let mut seen = vec![p.clone()];
    for _ in 0..plies {
        if p.winner().is_some() {
            break;
        }
        let moves = p.legal_moves();
        let Some(&m) = moves.choose(&mut rng) else { break };
        p = p.apply(m).expect("generated move must be legal");
        seen.push(p.clone());
    }
    seen
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn play_keeps_invariants(seed in any::<u64>(), n in 3u32..8) {
        let line = random_play(seed, n, 3, 60);
        for pair in line.windows(2) {
            prop_assert!(pair[0].walls.is_subset(&pair[1].walls));
        }
        for p in &line {
            prop_assert!(p.validate().is_ok());
            prop_assert!(p.has_victory_path(Player::White));
            prop_assert!(p.has_victory_path(Player::Black));
            let moves = p.pawn_moves();
            prop_assert!(moves.len() <= 5);
            let me = p.pawn(p.to_move);
            let them = p.pawn(p.to_move.other());
            let diagonal = moves.iter().any(|s| s.col != me.col && s.row != me.row);
            let straight_jump = moves.iter().any(|s| {
                (s.col == me.col && s.row.abs_diff(me.row) == 2)
                    || (s.row == me.row && s.col.abs_diff(me.col) == 2)
            });
            prop_assert!(!(diagonal && straight_jump));
            prop_assert!(!moves.contains(&them));
            prop_assert_eq!(parse(&serialize(p)).unwrap(), p.clone());
        }
    }

    #[test]
    fn removing_a_wall_never_lengthens_paths(seed in any::<u64>(), n in 3u32..8) {
        let line = random_play(seed, n, 4, 80);
        let last = line.last().unwrap();
        for &w in &last.walls {
            let mut lighter = last.clone();
            lighter.walls.remove(&w);
            for pl in [Player::White, Player::Black] {
                let before = last.shortest_victory_distance(pl);
                let after = lighter.shortest_victory_distance(pl);
                prop_assert!(after <= before);
            }
        }
    }

    #[test]
    fn serialization_ignores_wall_order(seed in any::<u64>()) {
        let line = random_play(seed, 7, 5, 40);
        let p = line.last().unwrap();
        let text = serialize(p);
        let mut lines: Vec<&str> = text.lines().collect();
        let mut rng = StdRng::seed_from_u64(seed);
        lines[7..].shuffle(&mut rng);
        let shuffled = lines.join("\n");
        prop_assert_eq!(serialize(&parse(&shuffled).unwrap()), text);
    }
}

#[test]
fn corridor_distance_is_its_length() {
    // row 1 is a channel roofed and floored over columns 0..=5
    let mut p = at(7, (0, 1), (6, 2), Player::White);
    for x in (1..6).step_by(2) {
        p.walls.insert(WallSlot::h(x, 1));
        p.walls.insert(WallSlot::h(x, 2));
    }
    assert!(p.validate().is_ok());
    // east 6 to the open column, then north 5
    assert_eq!(p.shortest_victory_distance(Player::White), Distance::Steps(11));
}

#[test]
fn wall_place_budget_accounting() {
    let p = Position::start(9, 10);
    let q = p.apply(MoveRec::Wall(WallSlot::new(Orientation::V, 4, 4))).unwrap();
    let r = q.apply(MoveRec::Wall(WallSlot::h(1, 1))).unwrap();
    assert_eq!((r.white_walls_left, r.black_walls_left), (9, 9));
}
