//! Breadth-first search on the wall graph. Pawns are ignored throughout.

use crate::geometry::{Dir, Square, WallSlot};
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

/// Anything that can answer "is this wall present".
pub trait WallLookup {
    fn has(&self, slot: WallSlot) -> bool;
}

impl WallLookup for BTreeSet<WallSlot> {
    fn has(&self, slot: WallSlot) -> bool {
        self.contains(&slot)
    }
}

impl WallLookup for HashSet<WallSlot> {
    fn has(&self, slot: WallSlot) -> bool {
        self.contains(&slot)
    }
}

/// A wall set with one extra slot layered on top, for trial placements.
pub struct WithSlot<'a, W: ?Sized>(pub &'a W, pub WallSlot);

impl<W: WallLookup + ?Sized> WallLookup for WithSlot<'_, W> {
    fn has(&self, slot: WallSlot) -> bool {
        slot == self.1 || self.0.has(slot)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Steps(u32),
    Unreachable,
}

impl Distance {
    pub fn steps(self) -> Option<u32> {
        match self {
            Distance::Steps(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

/// True when a wall stops a one-square move from `from` towards `dir`.
/// Leaving the board is not reported here; callers bound-check separately.
pub fn step_blocked<W: WallLookup + ?Sized>(walls: &W, from: Square, dir: Dir) -> bool {
    let (c, r) = (from.col, from.row);
    match dir {
        Dir::North => walls.has(WallSlot::h(c, r + 1)) || walls.has(WallSlot::h(c + 1, r + 1)),
        Dir::South => r > 0 && (walls.has(WallSlot::h(c, r)) || walls.has(WallSlot::h(c + 1, r))),
        Dir::East => walls.has(WallSlot::v(c + 1, r)) || walls.has(WallSlot::v(c + 1, r + 1)),
        Dir::West => c > 0 && (walls.has(WallSlot::v(c, r)) || walls.has(WallSlot::v(c, r + 1))),
    }
}

fn open_neighbours<'a, W: WallLookup + ?Sized>(
    walls: &'a W,
    n: u32,
    sq: Square,
) -> impl Iterator<Item = Square> + 'a {
    Dir::ALL
        .into_iter()
        .filter(move |&d| !step_blocked(walls, sq, d))
        .filter_map(move |d| sq.step(d, n))
}

/// Shortest number of steps from `from` to any square of `goal_row`.
pub fn shortest_victory_distance<W: WallLookup + ?Sized>(
    walls: &W,
    n: u32,
    from: Square,
    goal_row: u32,
) -> Distance {
    bfs_until(walls, n, from, |s| s.row == goal_row)
}

/// Shortest number of steps between two squares.
pub fn distance_between<W: WallLookup + ?Sized>(walls: &W, n: u32, a: Square, b: Square) -> Distance {
    bfs_until(walls, n, a, |s| s == b)
}

fn bfs_until<W: WallLookup + ?Sized>(
    walls: &W,
    n: u32,
    from: Square,
    mut done: impl FnMut(Square) -> bool,
) -> Distance {
    if done(from) {
        return Distance::Steps(0);
    }
    let mut dist = HashMap::from([(from, 0u32)]);
    let mut queue = VecDeque::from([from]);
    while let Some(sq) = queue.pop_front() {
        let d = dist[&sq];
        for next in open_neighbours(walls, n, sq) {
            if dist.contains_key(&next) {
                continue;
            }
            if done(next) {
                return Distance::Steps(d + 1);
            }
            dist.insert(next, d + 1);
            queue.push_back(next);
        }
    }
    Distance::Unreachable
}

/// Every square reachable from `start`, with its distance.
pub fn reachable_from<W: WallLookup + ?Sized>(walls: &W, n: u32, start: Square) -> HashMap<Square, u32> {
    let mut dist = HashMap::from([(start, 0u32)]);
    let mut queue = VecDeque::from([start]);
    while let Some(sq) = queue.pop_front() {
        let d = dist[&sq];
        for next in open_neighbours(walls, n, sq) {
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(next) {
                e.insert(d + 1);
                queue.push_back(next);
            }
        }
    }
    dist
}

/// Every square with a path to some square of `row`.
pub fn squares_reaching_row<W: WallLookup + ?Sized>(walls: &W, n: u32, row: u32) -> HashSet<Square> {
    let mut seen: HashSet<Square> = (0..n).map(|c| Square::new(c, row)).collect();
    let mut queue: VecDeque<Square> = seen.iter().copied().collect();
    while let Some(sq) = queue.pop_front() {
        for next in open_neighbours(walls, n, sq) {
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_wall_blocks_both_columns() {
        let walls = BTreeSet::from([WallSlot::h(4, 5)]);
        assert!(step_blocked(&walls, Square::new(3, 4), Dir::North));
        assert!(step_blocked(&walls, Square::new(4, 4), Dir::North));
        assert!(!step_blocked(&walls, Square::new(5, 4), Dir::North));
        assert!(step_blocked(&walls, Square::new(4, 5), Dir::South));
    }

    #[test]
    fn v_wall_blocks_both_rows() {
        let walls = BTreeSet::from([WallSlot::v(2, 2)]);
        assert!(step_blocked(&walls, Square::new(1, 1), Dir::East));
        assert!(step_blocked(&walls, Square::new(1, 2), Dir::East));
        assert!(step_blocked(&walls, Square::new(2, 2), Dir::West));
        assert!(!step_blocked(&walls, Square::new(1, 3), Dir::East));
    }

    #[test]
    fn empty_board_distances() {
        let walls = BTreeSet::new();
        assert_eq!(shortest_victory_distance(&walls, 9, Square::new(4, 0), 8), Distance::Steps(8));
        assert_eq!(shortest_victory_distance(&walls, 9, Square::new(4, 8), 8), Distance::Steps(0));
        assert_eq!(distance_between(&walls, 5, Square::new(0, 0), Square::new(4, 4)), Distance::Steps(8));
    }

    #[test]
    fn ring_encloses() {
        // 2x2 ring around squares (1..=2, 1..=2) on a 4x4 board
        let walls = BTreeSet::from([
            WallSlot::h(2, 1),
            WallSlot::h(2, 3),
            WallSlot::v(1, 2),
            WallSlot::v(3, 2),
        ]);
        let r = reachable_from(&walls, 4, Square::new(1, 1));
        assert_eq!(r.len(), 4);
        assert_eq!(shortest_victory_distance(&walls, 4, Square::new(1, 1), 3), Distance::Unreachable);
    }

    #[test]
    fn reaching_row_matches_single_source() {
        let walls = BTreeSet::from([WallSlot::h(2, 1), WallSlot::h(2, 3), WallSlot::v(1, 2), WallSlot::v(3, 2)]);
        let good = squares_reaching_row(&walls, 4, 3);
        for c in 0..4 {
            for r in 0..4 {
                let s = Square::new(c, r);
                let d = shortest_victory_distance(&walls, 4, s, 3);
                assert_eq!(good.contains(&s), d != Distance::Unreachable);
            }
        }
    }

    #[test]
    fn with_slot_overlay() {
        let walls = BTreeSet::new();
        let w = WithSlot(&walls, WallSlot::h(1, 1));
        assert!(step_blocked(&w, Square::new(0, 0), Dir::North));
    }
}
