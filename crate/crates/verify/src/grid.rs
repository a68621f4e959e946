use board::{Dir, Orientation, Square, WallLookup, WallSlot};
use std::collections::BTreeSet;

/// Dense wall membership for fast whole-board searches.
#[derive(Debug, Clone)]
pub struct WallGrid {
    side: usize,
    present: Vec<bool>,
}

impl WallGrid {
    pub fn new(n: u32, walls: &BTreeSet<WallSlot>) -> WallGrid {
        let side = n as usize + 1;
        let mut grid = WallGrid { side, present: vec![false; 2 * side * side] };
        for &w in walls {
            grid.set(w, true);
        }
        grid
    }

    fn index(&self, w: WallSlot) -> Option<usize> {
        let (x, y) = (w.x as usize, w.y as usize);
        if x >= self.side || y >= self.side {
            return None;
        }
        let layer = match w.orientation {
            Orientation::H => 0,
            Orientation::V => 1,
        };
        Some((layer * self.side + x) * self.side + y)
    }

    pub fn set(&mut self, w: WallSlot, on: bool) {
        let i = self.index(w).unwrap_or_else(|| panic!("wall {w} is off the grid"));
        self.present[i] = on;
    }

    /// Adds a wall across the edge leaving `s` towards `dir`.
    pub fn plug(&mut self, s: Square, dir: Dir) {
        let slot = match dir {
            Dir::North => WallSlot::h(s.col + 1, s.row + 1),
            Dir::South => WallSlot::h(s.col + 1, s.row),
            Dir::East => WallSlot::v(s.col + 1, s.row + 1),
            Dir::West => WallSlot::v(s.col, s.row + 1),
        };
        self.set(slot, true);
    }
}

impl WallLookup for WallGrid {
    fn has(&self, slot: WallSlot) -> bool {
        self.index(slot).is_some_and(|i| self.present[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use board::step_blocked;

    #[test]
    fn grid_agrees_with_the_set() {
        let walls: BTreeSet<WallSlot> = [WallSlot::h(2, 3), WallSlot::v(4, 1), WallSlot::v(7, 7)].into();
        let grid = WallGrid::new(8, &walls);
        for w in WallSlot::all(8) {
            assert_eq!(grid.has(w), walls.contains(&w), "{w}");
        }
    }

    #[test]
    fn plug_blocks_the_named_edge() {
        let s = Square::new(3, 3);
        for d in Dir::ALL {
            let mut grid = WallGrid::new(8, &BTreeSet::new());
            grid.plug(s, d);
            assert!(step_blocked(&grid, s, d), "{d:?}");
        }
    }
}
