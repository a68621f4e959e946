//! Channel drawing primitives in board coordinates.

use board::{Dir, Square};
use gadgets::{Channel, RING};
use serde::{Deserialize, Serialize};

/// Leg spacing of one bump and the period between bumps, matching the
/// standalone winding-road gadgets.
pub const LEG_GAP: u32 = 3;
pub const BUMP_PERIOD: u32 = 6;

fn offset(s: (u32, u32), d: Dir, k: u32) -> (u32, u32) {
    match d {
        Dir::North => (s.0, s.1 + k),
        Dir::South => (s.0, s.1 - k),
        Dir::East => (s.0 + k, s.1),
        Dir::West => (s.0 - k, s.1),
    }
}

fn dir_between(a: (u32, u32), b: (u32, u32)) -> Dir {
    match (a.0.cmp(&b.0), a.1.cmp(&b.1)) {
        (std::cmp::Ordering::Less, _) => Dir::East,
        (std::cmp::Ordering::Greater, _) => Dir::West,
        (_, std::cmp::Ordering::Less) => Dir::North,
        _ => Dir::South,
    }
}

/// One detour off a straight road: legs at `at` and `at + LEG_GAP` steps
/// from the road's start, reaching `depth` squares sideways.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bump {
    pub at: u32,
    pub depth: u32,
}

/// Spreads `excess` over bumps whose first leg is `first` steps in, one
/// every period, the last ending at or before `last`. Uses the fewest bumps
/// that keep every depth within `max_depth`.
///
/// Depths are always even: the wall run along the inside of a leg is as
/// long as the depth, and an odd one would have to borrow the very vertex
/// the run on the road's far side may need. Hence `excess` must be a
/// multiple of 4.
pub fn plan_bumps(excess: u32, first: u32, last: u32, max_depth: u32) -> Option<Vec<Bump>> {
    if excess == 0 {
        return Some(Vec::new());
    }
    if !excess.is_multiple_of(4) || last < first + LEG_GAP || max_depth < 2 {
        return None;
    }
    let slots = (last - first - LEG_GAP) / BUMP_PERIOD + 1;
    let pairs = excess / 4;
    let count = pairs.div_ceil(max_depth / 2);
    if count > slots {
        return None;
    }
    let (base, rem) = (pairs / count, pairs % count);
    Some(
        (0..count)
            .map(|i| Bump { at: first + BUMP_PERIOD * i, depth: 2 * (base + u32::from(i < rem)) })
            .collect(),
    )
}

pub fn excess_of(bumps: &[Bump]) -> u32 {
    bumps.iter().map(|b| 2 * b.depth).sum()
}

/// Straight road from `from` to `to` with bumps toward `side`.
pub fn road(ch: &mut Channel, from: (u32, u32), to: (u32, u32), side: Dir, bumps: &[Bump]) {
    let along = dir_between(from, to);
    let mut pts = vec![from];
    for b in bumps {
        let p = offset(from, along, b.at);
        let q = offset(from, along, b.at + LEG_GAP);
        pts.extend([p, offset(p, side, b.depth), offset(q, side, b.depth), q]);
    }
    pts.push(to);
    ch.path(&pts);
}

/// Square loop with its south-west corner at `sw`.
pub fn ring(ch: &mut Channel, sw: (u32, u32)) {
    let (x0, y0) = sw;
    let (x1, y1) = (x0 + RING, y0 + RING);
    ch.path(&[(x0, y0), (x1, y0), (x1, y1), (x0, y1), (x0, y0)]);
}

pub fn sq(c: u32, r: u32) -> Square {
    Square::new(c, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bumps_add_their_excess() {
        let bumps = plan_bumps(40, 3, 40, 5).unwrap();
        assert_eq!(excess_of(&bumps), 40);
        assert!(bumps.iter().all(|b| b.depth <= 5 && b.depth % 2 == 0));
        assert!(bumps.last().unwrap().at + LEG_GAP <= 40);
    }

    #[test]
    fn too_little_room_is_refused() {
        assert_eq!(plan_bumps(40, 3, 10, 5), None);
        assert_eq!(plan_bumps(7, 3, 40, 5), None);
        assert_eq!(plan_bumps(10, 3, 40, 5), None);
    }

    #[test]
    fn road_length_is_span_plus_excess() {
        let mut ch = Channel::new();
        let bumps = plan_bumps(12, 3, 20, 4).unwrap();
        road(&mut ch, (2, 10), (24, 10), Dir::South, &bumps);
        assert_eq!(ch.links.len() as u32, 22 + 12);
    }
}
