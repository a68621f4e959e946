use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Square {
    pub col: u32,
    pub row: u32,
}

impl Square {
    pub const fn new(col: u32, row: u32) -> Self {
        Square { col, row }
    }

    /// Neighbor in `dir`, or `None` when it would leave an `n`-sided board.
    pub fn step(self, dir: Dir, n: u32) -> Option<Square> {
        let (c, r) = (self.col, self.row);
        match dir {
            Dir::North if r + 1 < n => Some(Square::new(c, r + 1)),
            Dir::South if r > 0 => Some(Square::new(c, r - 1)),
            Dir::East if c + 1 < n => Some(Square::new(c + 1, r)),
            Dir::West if c > 0 => Some(Square::new(c - 1, r)),
            _ => None,
        }
    }

    pub fn in_bounds(self, n: u32) -> bool {
        self.col < n && self.row < n
    }

    /// Direction from `self` to an orthogonally adjacent square.
    pub fn dir_to(self, other: Square) -> Option<Dir> {
        Dir::ALL.into_iter().find(|&d| self.step(d, u32::MAX) == Some(other))
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    North,
    East,
    South,
    West,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::North, Dir::East, Dir::South, Dir::West];

    pub fn opposite(self) -> Dir {
        match self {
            Dir::North => Dir::South,
            Dir::South => Dir::North,
            Dir::East => Dir::West,
            Dir::West => Dir::East,
        }
    }

    /// The two directions at right angles.
    pub fn sides(self) -> [Dir; 2] {
        match self {
            Dir::North | Dir::South => [Dir::West, Dir::East],
            Dir::East | Dir::West => [Dir::South, Dir::North],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    H,
    V,
}

impl Orientation {
    pub fn flip(self) -> Orientation {
        match self {
            Orientation::H => Orientation::V,
            Orientation::V => Orientation::H,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::H => "H",
            Orientation::V => "V",
        })
    }
}

/// A length-2 wall centred on the interior lattice vertex `(x, y)`.
///
/// `H` at `(x, y)` separates rows `y-1` and `y` in columns `x-1` and `x`.
/// `V` at `(x, y)` separates columns `x-1` and `x` in rows `y-1` and `y`.
/// Field order gives the canonical sort: orientation, then x, then y.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WallSlot {
    pub orientation: Orientation,
    pub x: u32,
    pub y: u32,
}

impl WallSlot {
    pub const fn new(orientation: Orientation, x: u32, y: u32) -> Self {
        WallSlot { orientation, x, y }
    }

    pub const fn h(x: u32, y: u32) -> Self {
        WallSlot::new(Orientation::H, x, y)
    }

    pub const fn v(x: u32, y: u32) -> Self {
        WallSlot::new(Orientation::V, x, y)
    }

    pub fn in_bounds(self, n: u32) -> bool {
        (1..n).contains(&self.x) && (1..n).contains(&self.y)
    }

    /// Same-orientation neighbours that would share a blocked edge.
    pub fn overlapping(self) -> impl Iterator<Item = WallSlot> {
        let WallSlot { orientation, x, y } = self;
        let cands = match orientation {
            Orientation::H => [(x.wrapping_sub(1), y), (x + 1, y)],
            Orientation::V => [(x, y.wrapping_sub(1)), (x, y + 1)],
        };
        cands
            .into_iter()
            .filter(|&(a, b)| a != u32::MAX && b != u32::MAX)
            .map(move |(a, b)| WallSlot::new(orientation, a, b))
    }

    /// The perpendicular wall on the same vertex.
    pub fn crossing(self) -> WallSlot {
        WallSlot::new(self.orientation.flip(), self.x, self.y)
    }

    /// The two square edges this wall blocks, each as (square, direction).
    pub fn blocked_edges(self) -> [(Square, Dir); 2] {
        let WallSlot { orientation, x, y } = self;
        match orientation {
            Orientation::H => [
                (Square::new(x - 1, y - 1), Dir::North),
                (Square::new(x, y - 1), Dir::North),
            ],
            Orientation::V => [
                (Square::new(x - 1, y - 1), Dir::East),
                (Square::new(x - 1, y), Dir::East),
            ],
        }
    }

    /// Every slot in `1..n` x `1..n`, in canonical order.
    pub fn all(n: u32) -> impl Iterator<Item = WallSlot> {
        [Orientation::H, Orientation::V].into_iter().flat_map(move |o| {
            (1..n).flat_map(move |x| (1..n).map(move |y| WallSlot::new(o, x, y)))
        })
    }
}

impl fmt::Display for WallSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.orientation, self.x, self.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_respects_edges() {
        let s = Square::new(0, 0);
        assert_eq!(s.step(Dir::South, 3), None);
        assert_eq!(s.step(Dir::West, 3), None);
        assert_eq!(s.step(Dir::North, 3), Some(Square::new(0, 1)));
        assert_eq!(Square::new(2, 2).step(Dir::East, 3), None);
    }

    #[test]
    fn overlap_neighbours() {
        let h: Vec<_> = WallSlot::h(3, 3).overlapping().collect();
        assert_eq!(h, vec![WallSlot::h(2, 3), WallSlot::h(4, 3)]);
        let v: Vec<_> = WallSlot::v(3, 3).overlapping().collect();
        assert_eq!(v, vec![WallSlot::v(3, 2), WallSlot::v(3, 4)]);
    }

    #[test]
    fn canonical_order_is_h_then_x_then_y() {
        let mut w = vec![WallSlot::v(1, 1), WallSlot::h(2, 1), WallSlot::h(1, 5)];
        w.sort();
        assert_eq!(w, vec![WallSlot::h(1, 5), WallSlot::h(2, 1), WallSlot::v(1, 1)]);
    }

    #[test]
    fn slot_count() {
        assert_eq!(WallSlot::all(9).count(), 128);
    }
}
