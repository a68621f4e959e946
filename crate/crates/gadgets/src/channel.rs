//! Channel maps: the open squares of a structure, which neighbouring squares
//! connect, and which wall slots must stay placeable. Walls are derived from
//! this description by [`crate::synthesize`].

use board::{Orientation, Square, WallSlot};
use serde::Serialize;
use std::collections::BTreeSet;

/// An unordered pair of orthogonally adjacent squares, stored low-high.
pub type Link = (Square, Square);

pub fn link(a: Square, b: Square) -> Link {
    assert_eq!(a.col.abs_diff(b.col) + a.row.abs_diff(b.row), 1, "{a} and {b} are not adjacent");
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Channel {
    pub cells: BTreeSet<Square>,
    pub links: BTreeSet<Link>,
    pub gates: BTreeSet<WallSlot>,
}

/// Quarter turns counter-clockwise inside a `width` x `height` box, then a shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transform {
    pub width: u32,
    pub height: u32,
    pub quarter_turns: u8,
    pub dcol: u32,
    pub drow: u32,
}

impl Transform {
    pub fn shift(width: u32, height: u32, dcol: u32, drow: u32) -> Transform {
        Transform { width, height, quarter_turns: 0, dcol, drow }
    }

    /// Box size after rotation.
    pub fn rotated_size(&self) -> (u32, u32) {
        if self.quarter_turns.is_multiple_of(2) {
            (self.width, self.height)
        } else {
            (self.height, self.width)
        }
    }

    pub fn square(&self, s: Square) -> Square {
        let (mut c, mut r) = (s.col, s.row);
        let (mut w, mut h) = (self.width, self.height);
        for _ in 0..self.quarter_turns % 4 {
            (c, r) = (h - 1 - r, c);
            (w, h) = (h, w);
        }
        Square::new(c + self.dcol, r + self.drow)
    }

    /// Walls are rotated through their centre vertex.
    pub fn slot(&self, w: WallSlot) -> WallSlot {
        let (mut o, mut x, mut y) = (w.orientation, w.x, w.y);
        let (mut bw, mut bh) = (self.width, self.height);
        for _ in 0..self.quarter_turns % 4 {
            (x, y) = (bh - y, x);
            o = o.flip();
            (bw, bh) = (bh, bw);
        }
        WallSlot::new(o, x + self.dcol, y + self.drow)
    }
}

impl Channel {
    pub fn new() -> Channel {
        Channel::default()
    }

    pub fn add_cell(&mut self, s: Square) {
        self.cells.insert(s);
    }

    /// Opens the edge between two adjacent squares, adding both as cells.
    pub fn connect(&mut self, a: Square, b: Square) {
        self.cells.insert(a);
        self.cells.insert(b);
        self.links.insert(link(a, b));
    }

    /// A corridor along axis-aligned segments through the given waypoints.
    pub fn path(&mut self, points: &[(u32, u32)]) {
        self.add_cell(Square::new(points[0].0, points[0].1));
        for pair in points.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            assert!(a.0 == b.0 || a.1 == b.1, "path segment {a:?} -> {b:?} is diagonal");
            let mut cur = Square::new(a.0, a.1);
            let end = Square::new(b.0, b.1);
            while cur != end {
                let next = Square::new(step_toward(cur.col, end.col), step_toward(cur.row, end.row));
                self.connect(cur, next);
                cur = next;
            }
        }
    }

    pub fn add_gate(&mut self, slot: WallSlot) {
        self.gates.insert(slot);
    }

    pub fn is_open(&self, a: Square, b: Square) -> bool {
        self.links.contains(&link(a, b))
    }

    pub fn transformed(&self, t: &Transform) -> Channel {
        Channel {
            cells: self.cells.iter().map(|&s| t.square(s)).collect(),
            links: self.links.iter().map(|&(a, b)| link(t.square(a), t.square(b))).collect(),
            gates: self.gates.iter().map(|&g| t.slot(g)).collect(),
        }
    }

    pub fn absorb(&mut self, other: &Channel) {
        self.cells.extend(other.cells.iter().copied());
        self.links.extend(other.links.iter().copied());
        self.gates.extend(other.gates.iter().copied());
    }

    /// Smallest box `(width, height)` from the origin holding every cell.
    pub fn extent(&self) -> (u32, u32) {
        self.cells.iter().fold((0, 0), |(w, h), s| (w.max(s.col + 1), h.max(s.row + 1)))
    }
}

fn step_toward(a: u32, b: u32) -> u32 {
    match a.cmp(&b) {
        std::cmp::Ordering::Less => a + 1,
        std::cmp::Ordering::Greater => a - 1,
        std::cmp::Ordering::Equal => a,
    }
}

/// Which wall line an edge lies on and where along it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    /// Orientation of walls that can cover this edge.
    pub orientation: Orientation,
    /// Lattice line index: the y of an H line, the x of a V line.
    pub line: u32,
    /// Square index along the line: column for H lines, row for V lines.
    pub pos: u32,
}

impl Edge {
    /// The edge separating two adjacent squares.
    pub fn between(a: Square, b: Square) -> Edge {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        if a.col == b.col {
            Edge { orientation: Orientation::H, line: a.row.max(b.row), pos: a.col }
        } else {
            Edge { orientation: Orientation::V, line: a.col.max(b.col), pos: a.row }
        }
    }

    /// The two squares on either side, low then high.
    pub fn sides(self) -> (Square, Square) {
        match self.orientation {
            Orientation::H => (Square::new(self.pos, self.line - 1), Square::new(self.pos, self.line)),
            Orientation::V => (Square::new(self.line - 1, self.pos), Square::new(self.line, self.pos)),
        }
    }
}

/// The two edges a wall covers.
pub fn covered(w: WallSlot) -> [Edge; 2] {
    let line = match w.orientation {
        Orientation::H => w.y,
        Orientation::V => w.x,
    };
    let centre = match w.orientation {
        Orientation::H => w.x,
        Orientation::V => w.y,
    };
    [
        Edge { orientation: w.orientation, line, pos: centre - 1 },
        Edge { orientation: w.orientation, line, pos: centre },
    ]
}

/// The wall on `line` whose centre sits at position `centre` along it.
pub fn slot_on(orientation: Orientation, line: u32, centre: u32) -> WallSlot {
    match orientation {
        Orientation::H => WallSlot::h(centre, line),
        Orientation::V => WallSlot::v(line, centre),
    }
}
