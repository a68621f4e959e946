//! One maze cell: the stretch of a clause corridor and a variable corridor
//! inside the rectangle framed by four shortcut corridors.
//!
//! Local coordinates put the origin on the crossing of the cell's west
//! shortcut with its south shortcut. The clause corridor runs east at
//! `clause_row`; the variable corridor runs north at `variable_col`.
//!
//! ```text
//!   north shortcut ------------------------------------------
//!        |            upper ring  ________
//!        |   long road (west)   |chamber |
//!        |            lower ring  --------
//!   clause ==ring T========= X ====winding road=====
//!        |    stem        |  parity bump      (south bumps)
//!        |    side road ==|
//!   south shortcut ------------------------------------------
//! ```

use crate::draw::{plan_bumps, ring, road, Bump};
use board::{Dir, Square};
use gadgets::{ChamberShape, Channel, Transform, RING};
use serde::{Deserialize, Serialize};

/// Deepest detour on the side road. The side road's row, and with it most
/// of the lower half of the cell, is sized from this.
pub const BUMP_DEPTH: u32 = 32;

/// Free squares kept between a bump and any corridor running alongside it.
const CLEARANCE: u32 = 5;

/// Columns from the side ring to where the stem turns south.
const STEM_WEST: u32 = 3;

/// Length of the dead-end stubs beyond the corner squares of route b.
const STUB: u32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellGeometry {
    pub width: u32,
    pub height: u32,
    /// Corridors per chamber.
    pub k: u32,
    /// Winding-road excess; the long road adds three times this.
    pub l: u32,
    pub side_ring_col: u32,
    pub side_row: u32,
    pub parity_bump_row: u32,
    pub clause_row: u32,
    pub variable_col: u32,
    pub lower_ring_row: u32,
    pub upper_ring_row: u32,
    pub clause_bumps: Vec<Bump>,
    pub side_bumps: Vec<Bump>,
    pub long_bumps: Vec<Bump>,
}

/// Number of bumps of depth at most `depth` that absorb `excess`.
fn bumps_needed(excess: u32, depth: u32) -> u32 {
    (excess / 4).div_ceil(depth / 2).max(1)
}

/// Columns (or rows) a road needs for `count` bumps starting `first` in,
/// keeping `CLEARANCE` free after the last leg.
fn road_span(first: u32, count: u32) -> u32 {
    first + 3 + 6 * (count - 1) + CLEARANCE
}

impl CellGeometry {
    /// The smallest cell hosting winding roads of excess `l`, a long road
    /// of excess `3l` and a chamber of `k` corridors. `l` must be a
    /// positive multiple of 4.
    pub fn fit(l: u32, k: u32) -> CellGeometry {
        assert!(l > 0 && l.is_multiple_of(4), "road excess {l} is not a positive multiple of 4");
        let side_ring_col = 9;
        let side_row = BUMP_DEPTH + CLEARANCE;
        let parity_bump_row = side_row + 4;
        let clause_row = parity_bump_row + 8;
        let lower_ring_row = clause_row + RING;

        let side_start = side_ring_col - STEM_WEST;
        let side_count = bumps_needed(l, BUMP_DEPTH);
        let variable_col = side_start + road_span(3, side_count);

        let clause_depth = clause_row - CLEARANCE;
        let clause_count = bumps_needed(l, clause_depth);
        let chamber = ChamberShape::new(k);
        let width = (variable_col + road_span(9, clause_count)).max(variable_col + 3 + chamber.height + CLEARANCE);

        let long_depth = variable_col - CLEARANCE;
        let long_count = bumps_needed(3 * l, long_depth);
        let upper_ring_row = (lower_ring_row + RING + road_span(3, long_count)).max(lower_ring_row + 30);
        let height = (upper_ring_row + 10).max(chamber.height + 27);

        let plan = |excess, first, last, depth| {
            plan_bumps(excess, first, last, depth).expect("cell sized to hold its bumps")
        };
        CellGeometry {
            width,
            height,
            k,
            l,
            side_ring_col,
            side_row,
            parity_bump_row,
            clause_row,
            variable_col,
            lower_ring_row,
            upper_ring_row,
            clause_bumps: plan(l, 9, width - variable_col - CLEARANCE, clause_depth),
            side_bumps: plan(l, 3, variable_col - side_start - CLEARANCE, BUMP_DEPTH),
            long_bumps: plan(3 * l, 3, upper_ring_row - lower_ring_row - RING - CLEARANCE, long_depth),
        }
    }

    pub fn perimeter(&self) -> u32 {
        2 * (self.width + self.height)
    }

    /// Placement of the in-cell chamber for a cell with origin `o`.
    pub fn chamber_transform(&self, o: (u32, u32)) -> Transform {
        let shape = ChamberShape::new(self.k);
        Transform {
            width: shape.width,
            height: shape.height,
            quarter_turns: 1,
            dcol: o.0 + self.variable_col + RING,
            drow: o.1 + self.lower_ring_row + RING + 1,
        }
    }

    /// Entrance and exit of the in-cell chamber, local coordinates.
    pub fn chamber_ports(&self) -> (Square, Square) {
        let shape = ChamberShape::new(self.k);
        let t = self.chamber_transform((0, 0));
        (t.square(shape.entrance()), t.square(shape.exit()))
    }

    /// Local bounding box (x0, y0, x1, y1) of the rotated chamber.
    pub fn chamber_box(&self) -> (u32, u32, u32, u32) {
        let t = self.chamber_transform((0, 0));
        let (w, h) = t.rotated_size();
        (t.dcol, t.drow, t.dcol + w - 1, t.drow + h - 1)
    }

    /// Start of the side road: the foot of the stem.
    pub fn side_road_start(&self) -> (u32, u32) {
        (self.side_ring_col - STEM_WEST, self.side_row)
    }

    /// Steps along route b, between the top corner of the lower ring and
    /// the bottom corner of the upper ring, through the first corridor.
    pub fn chamber_route_length(&self) -> u32 {
        let (lo, hi) = self.chamber_ports();
        let shape = ChamberShape::new(self.k);
        (lo.row - (self.lower_ring_row + RING)) + 1 + shape.distance_via(1) + 1 + (self.upper_ring_row - hi.row)
    }

    /// Draws the cell with its origin at `o`; `member` adds the side path.
    /// Shortcut corridors are not part of the cell.
    pub fn draw(&self, ch: &mut Channel, o: (u32, u32), member: bool) {
        let g = |x: u32, y: u32| (o.0 + x, o.1 + y);
        let (xv, yc, yl, yu) = (self.variable_col, self.clause_row, self.lower_ring_row, self.upper_ring_row);

        ch.path(&[g(0, yc), g(xv, yc)]);
        road(ch, g(xv, yc), g(self.width, yc), Dir::South, &self.clause_bumps);

        if member {
            let xt = self.side_ring_col;
            let (sx, sy) = self.side_road_start();
            ring(ch, g(xt, yc - RING));
            ch.path(&[g(xt, yc - RING), g(sx, yc - RING), g(sx, sy)]);
            road(ch, g(sx, sy), g(xv, sy), Dir::South, &self.side_bumps);
        }

        let a = self.parity_bump_row;
        ch.path(&[g(xv, 0), g(xv, a), g(xv + 4, a), g(xv + 4, a + 3), g(xv, a + 3), g(xv, yl)]);

        ring(ch, g(xv, yl));
        road(ch, g(xv, yl + RING), g(xv, yu), Dir::West, &self.long_bumps);
        ring(ch, g(xv, yu));
        ch.path(&[g(xv, yu + RING), g(xv, self.height)]);

        ch.absorb(&ChamberShape::new(self.k).channel().transformed(&self.chamber_transform(o)));
        let (lo, hi) = self.chamber_ports();
        let corner = xv + RING;
        ch.path(&[g(corner, yl + RING), g(corner, lo.row + STUB)]);
        ch.path(&[g(corner, lo.row), g(lo.col, lo.row)]);
        ch.path(&[g(corner, hi.row - STUB), g(corner, yu)]);
        ch.path(&[g(corner, hi.row), g(hi.col, hi.row)]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::draw::excess_of;

    #[test]
    fn bumps_realise_the_excess() {
        for l in [4, 40, 300, 628] {
            let c = CellGeometry::fit(l, 4);
            assert_eq!(excess_of(&c.clause_bumps), l);
            assert_eq!(excess_of(&c.side_bumps), l);
            assert_eq!(excess_of(&c.long_bumps), 3 * l);
        }
    }

    #[test]
    fn parities_hold() {
        for l in (4..=800).step_by(4) {
            let c = CellGeometry::fit(l, 3);
            assert_eq!(c.width % 2, 0);
            assert_eq!(c.height % 2, 0);
            assert_eq!(c.variable_col % 2, 1);
            assert_eq!(c.clause_row % 2, 1);
            assert_eq!(c.side_row % 2, 1);
            assert_eq!(c.lower_ring_row % 2, 0);
            assert_eq!(c.upper_ring_row % 2, 0);
        }
    }

    #[test]
    fn cell_grows_with_the_excess() {
        let small = CellGeometry::fit(40, 3);
        let large = CellGeometry::fit(400, 3);
        assert!(large.width > small.width && large.height > small.height);
    }
}
