//! Board-level layout: where every structure of the construction sits.

use crate::cell::CellGeometry;
use board::{Orientation, Square, WallSlot};
use formula::Formula;
use gadgets::{ChamberShape, Transform, CLOSURE_ROW, RING, TRUTH_GATES};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScaleMode {
    /// The construction's own constants; the board is never materialised.
    Faithful,
    /// Same structures on a board small enough to build and search.
    Desk,
}

/// Size constants. Lengths are multiples of a unit: `m` in faithful mode,
/// the smallest unit that fits the layout in desk mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaleConfig {
    pub mode: ScaleMode,
    /// Black victory corridors per unit (faithful) or in total (desk).
    pub corridor_mult: u32,
    pub white_len_mult: u32,
    pub black_len_mult: u32,
    pub budget_mult: u32,
}

impl ScaleConfig {
    pub fn faithful() -> ScaleConfig {
        ScaleConfig { mode: ScaleMode::Faithful, corridor_mult: 13, white_len_mult: 24, black_len_mult: 16, budget_mult: 15 }
    }

    pub fn desk() -> ScaleConfig {
        ScaleConfig { mode: ScaleMode::Desk, corridor_mult: 3, ..ScaleConfig::faithful() }
    }
}

/// Crop rectangle, inclusive, for measuring a structure on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crop {
    pub x0: u32,
    pub y0: u32,
    pub x1: u32,
    pub y1: u32,
}

impl Crop {
    pub fn contains(&self, s: Square) -> bool {
        (self.x0..=self.x1).contains(&s.col) && (self.y0..=self.y1).contains(&s.row)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Landmark {
    Square { col: u32, row: u32 },
    Wall { slot: WallSlot },
    /// A stretch of corridor whose walk inside `crop` is `length` steps.
    Route { from: Square, to: Square, length: u64, crop: Crop },
    /// `count` squares, `pitch` columns apart, starting at `first`.
    Series { first: Square, pitch: u32, count: u64 },
    /// `count` wall slots, `pitch` columns apart, starting at `first`.
    WallSeries { first: WallSlot, pitch: u32, count: u64 },
}

/// Global anchor coordinates, all derived from the cell and the scale.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frame {
    /// Column of the chamber access corridor.
    pub access_col: u32,
    /// Entrance column of every clause entrance chamber.
    pub chamber_col: u32,
    /// South-west shortcut crossing of the maze.
    pub maze_x: u32,
    pub maze_y: u32,
    /// Row of the corridor feeding Black's victory corridors.
    pub hub_row: u32,
    /// Westmost Black corridor; the others follow every third column.
    pub first_corridor_col: u32,
    /// Column where White's exit route turns south towards her corridor.
    pub down_col: u32,
    pub white_col: u32,
    /// Bottom row of the truth-box boxes.
    pub truth_row: u32,
    pub collector_row: u32,
    pub white_start_row: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayoutPlan {
    pub v: u32,
    pub c: u32,
    /// Clauses as 1-based variable lists, so the plan can be checked on its own.
    pub clauses: Vec<Vec<u32>>,
    pub m_h: u64,
    pub m_w: u64,
    pub m: u64,
    pub l: u32,
    pub b: u64,
    pub n: u64,
    /// Length unit: `m` in faithful mode.
    pub unit: u64,
    pub white_len: u64,
    pub black_len: u64,
    pub white_budget: u64,
    pub black_budget: u64,
    /// Corridors per chamber.
    pub k: u32,
    /// Columns from the access corridor to the clause entrance chambers.
    pub chamber_distance: u32,
    /// Planned walks used by the race arithmetic.
    pub white_entry_walk: u64,
    pub white_exit_walk: u64,
    pub black_approach: u64,
    pub scale: ScaleConfig,
    pub cell: CellGeometry,
    pub frame: Frame,
    pub landmarks: BTreeMap<String, Landmark>,
}

/// Rounds of the cell-sizing fixpoint before giving up; it settles in a
/// handful because the perimeter grows at half the rate of the excess.
const FIXPOINT_ROUNDS: usize = 64;

/// Smallest multiple of 4 above `x`.
fn next_multiple_of_4(x: u32) -> u32 {
    (x / 4 + 1) * 4
}

/// Corridors in every chamber for `v` variables.
pub fn chamber_corridors(v: u32) -> u32 {
    v.div_ceil(2) + 2
}

/// Sizes the maze cell: starting from the smallest excess, set L above the
/// cell perimeter and regrow the cell until both agree.
pub fn fit_cell(k: u32) -> CellGeometry {
    let mut l = 4;
    for _ in 0..FIXPOINT_ROUNDS {
        let cell = CellGeometry::fit(l, k);
        let next = next_multiple_of_4(cell.perimeter());
        if next <= l {
            return cell;
        }
        l = next;
    }
    panic!("cell sizing did not settle within {FIXPOINT_ROUNDS} rounds");
}

/// Steps along a rectilinear path through `corners`.
pub fn path_length(corners: &[(u32, u32)]) -> u32 {
    corners.windows(2).map(|w| w[0].0.abs_diff(w[1].0) + w[0].1.abs_diff(w[1].1)).sum()
}

fn sq(col: u32, row: u32) -> Square {
    Square::new(col, row)
}

fn to_u32(x: u64, what: &str) -> u32 {
    u32::try_from(x).unwrap_or_else(|_| panic!("{what} {x} does not fit a board coordinate"))
}

/// Geometry shared by planning and drawing.
#[derive(Debug, Clone)]
pub struct Layout {
    pub v: u32,
    pub c: u32,
    pub cell: CellGeometry,
    pub frame: Frame,
    pub n: u32,
    pub b: u32,
    pub shape: ChamberShape,
}

/// Dead-end stubs at the maze border.
pub const STUB: u32 = 4;
/// Sideways jog on each variable's exit, between the maze and its truth
/// box: it flips the relative parity of the corridor's two wall runs.
pub const EXIT_JOG: u32 = 4;
/// Rows above the maze's north edge where the exit jog starts.
pub const EXIT_JOG_ROW: u32 = 3;
/// Rows from a clause row down to its entrance chamber's ports. Odd, so
/// the spine's wall runs reach the first loop with even length.
pub const CHAMBER_DROP: u32 = 5;
/// Columns between the exit route's down leg and White's corridor.
pub const WHITE_GAP: u32 = 5;
/// Columns from the maze's west shortcut to the nearest Black corridor.
pub const HUB_OFFSET: u32 = 6;
/// Gap between the Black hub and the bottom of the maze.
const HUB_GAP: u32 = 10;
const WEST_MARGIN: u32 = 5;

impl Layout {
    pub fn from_plan(plan: &LayoutPlan) -> Layout {
        Layout {
            v: plan.v,
            c: plan.c,
            cell: plan.cell.clone(),
            frame: plan.frame.clone(),
            n: to_u32(plan.n, "board side"),
            b: to_u32(plan.b, "corridor count"),
            shape: ChamberShape::new(plan.k),
        }
    }

    pub fn cell_origin(&self, i: u32, j: u32) -> (u32, u32) {
        (self.frame.maze_x + j * self.cell.width, self.frame.maze_y + i * self.cell.height)
    }

    /// Column of variable `j` (0-based).
    pub fn variable_x(&self, j: u32) -> u32 {
        self.frame.maze_x + j * self.cell.width + self.cell.variable_col
    }

    /// Row of clause `i` (0-based).
    pub fn clause_y(&self, i: u32) -> u32 {
        self.frame.maze_y + i * self.cell.height + self.cell.clause_row
    }

    pub fn maze_east(&self) -> u32 {
        self.frame.maze_x + self.v * self.cell.width
    }

    pub fn maze_north(&self) -> u32 {
        self.frame.maze_y + self.c * self.cell.height
    }

    /// Bottom-left corner of clause `i`'s entrance chamber box.
    pub fn entrance_box(&self, i: u32) -> (u32, u32) {
        let entrance_row = self.clause_y(i) - CHAMBER_DROP;
        (self.frame.chamber_col - self.shape.west, entrance_row - self.shape.entrance().row)
    }

    /// South-west corner of the loop joining clause `i` to the access corridor.
    pub fn access_ring(&self, i: u32) -> (u32, u32) {
        (self.frame.access_col, self.clause_y(i) + RING)
    }

    /// South-west corner of variable `j`'s collector loop.
    pub fn collector_ring(&self, j: u32) -> (u32, u32) {
        (self.variable_x(j) + RING, self.frame.collector_row - RING)
    }

    /// South-west corner of the loop joining the emergency exit to the exit route.
    pub fn emergency_ring(&self) -> (u32, u32) {
        (self.frame.down_col - RING, self.frame.maze_y - 2 * RING - 2)
    }

    /// Corners of the emergency exit, from the maze's south-east shortcut
    /// crossing to the loop. It jogs like the chamber exits, for the same
    /// wall-parity reason.
    pub fn emergency_route(&self) -> Vec<(u32, u32)> {
        let (x, y) = self.emergency_ring();
        let top = y + RING;
        let row = self.frame.maze_y;
        vec![(self.maze_east(), row), (x - 2, row), (x - 2, row - 2), (x, row - 2), (x, top)]
    }

    pub fn corridor_col(&self, t: u32) -> u32 {
        self.frame.first_corridor_col + 3 * t
    }

    /// Frame for a board with `hub_row` rows below the hub.
    fn frame(v: u32, c: u32, cell: &CellGeometry, shape: &ChamberShape, hub_row: u32, b: u32) -> Frame {
        // Even, which keeps the stem's wall runs tileable.
        let stem = (v + 1).max(6).next_multiple_of(2);
        let natural_maze_x = WEST_MARGIN + RING + stem + (shape.east - shape.west) + 9;
        // Black's corridors hang west of the maze's west shortcut, below
        // everything else; the whole west side moves right to make room.
        let shift = (3 * (b - 1) + HUB_OFFSET + 2).saturating_sub(natural_maze_x);
        let access_col = WEST_MARGIN + shift;
        let chamber_col = access_col + RING + stem;
        let maze_x = natural_maze_x + shift;
        let drop = (shape.height + 8).saturating_sub(cell.clause_row);
        // Odd, so the wall runs beside the hub's feeder tile evenly.
        let maze_y = hub_row + (HUB_GAP.max(drop) | 1);
        let maze_east = maze_x + v * cell.width;
        // An even offset keeps the wall runs along the collector even.
        let down_col = maze_east + 14;
        // The truth box and collector rows keep the wall runs beside the
        // variable corridor's straight stretches even.
        let truth_row = maze_y + c * cell.height + 7;
        Frame {
            access_col,
            chamber_col,
            maze_x,
            maze_y,
            hub_row,
            first_corridor_col: maze_x - HUB_OFFSET - 3 * (b - 1),
            down_col,
            white_col: down_col + WHITE_GAP,
            truth_row,
            collector_row: truth_row + 15,
            white_start_row: maze_y + (c - 1) * cell.height + cell.clause_row + 10,
        }
    }

    /// Whether everything fits on an `n` x `n` board.
    fn fits(frame: &Frame, n: u64) -> bool {
        let top = u64::from(frame.collector_row.max(frame.white_start_row)) + 6;
        top <= n && u64::from(frame.white_col) + 2 <= n && frame.hub_row >= 8
    }
}

/// Computes the whole layout: cell size and L by fixpoint, then the unit,
/// board side and every landmark.
pub fn plan_layout(f: &Formula, scale: ScaleConfig) -> LayoutPlan {
    let (v, c) = (f.v, f.c() as u32);
    assert!(v >= 1 && c >= 1, "formula needs at least one variable and one clause");
    let k = chamber_corridors(v);
    let shape = ChamberShape::new(k);
    let cell = fit_cell(k);
    let m_w = u64::from(v * cell.width + 2 * STUB + 1);
    let m_h = u64::from(c * cell.height + 2 * STUB + 1);
    let m = m_h * m_w;
    let lens = u64::from(scale.white_len_mult + scale.black_len_mult);

    let (unit, b, frame) = match scale.mode {
        ScaleMode::Faithful => {
            let b = m * u64::from(scale.corridor_mult);
            let hub = to_u32(m * u64::from(scale.black_len_mult), "hub row");
            let frame = Layout::frame(v, c, &cell, &shape, hub, to_u32(b, "corridor count"));
            assert!(Layout::fits(&frame, m * lens), "faithful layout does not fit a side-40m board");
            (m, b, frame)
        }
        ScaleMode::Desk => {
            let b = u64::from(scale.corridor_mult);
            let mut unit = 1u64;
            loop {
                let hub = to_u32(unit * u64::from(scale.black_len_mult), "hub row");
                let frame = Layout::frame(v, c, &cell, &shape, hub, to_u32(b, "corridor count"));
                if Layout::fits(&frame, unit * lens) {
                    break (unit, b, frame);
                }
                unit += 1;
            }
        }
    };
    let n = unit * lens;
    let layout = Layout { v, c, cell: cell.clone(), frame: frame.clone(), n: to_u32(n, "board side"), b: b as u32, shape };
    let white_len = unit * u64::from(scale.white_len_mult);
    let black_len = unit * u64::from(scale.black_len_mult);

    LayoutPlan {
        v,
        c,
        clauses: f.clauses.iter().map(|cl| cl.iter().copied().collect()).collect(),
        m_h,
        m_w,
        m,
        l: cell.l,
        b,
        n,
        unit,
        white_len,
        black_len,
        white_budget: u64::from(v.div_ceil(2) + 1),
        black_budget: unit * u64::from(scale.budget_mult),
        k,
        chamber_distance: frame.chamber_col - frame.access_col,
        white_entry_walk: (0..c).map(|i| layout.entry_walk(i)).max().unwrap_or(0),
        white_exit_walk: (0..v).map(|j| layout.exit_walk(j)).max().unwrap_or(0),
        black_approach: u64::from(frame.maze_y - 1 - frame.hub_row + HUB_OFFSET),
        scale,
        landmarks: layout.landmarks(f, white_len, black_len),
        cell,
        frame,
    }
}

impl Layout {
    /// White's walk from her start into the maze on clause row `i` when
    /// only the last chamber corridor is open.
    pub fn entry_walk(&self, i: u32) -> u64 {
        let fr = &self.frame;
        let y = self.clause_y(i);
        let down = fr.white_start_row - (y + 2 * RING);
        let ring = 2 * RING;
        let stem = RING + (fr.chamber_col - (fr.access_col + RING)) + CHAMBER_DROP;
        let inside = self.shape.distance_via(self.shape.k);
        let out = path_length(&self.exit_route(i));
        u64::from(down + ring + stem + inside + out)
    }

    /// Corners of the route from clause `i`'s entrance chamber exit to the
    /// maze. The short jog before the last rise lets both wall runs at the
    /// turn onto the clause row tile.
    pub fn exit_route(&self, i: u32) -> Vec<(u32, u32)> {
        let (bx, by) = self.entrance_box(i);
        let (x, p) = (bx + self.shape.east, by + self.shape.exit().row);
        let y = self.clause_y(i);
        vec![(x, p), (x, y - 2), (x + 2, y - 2), (x + 2, y), (self.frame.maze_x, y)]
    }

    /// Walk from variable `j`'s crossing with the north shortcut to the
    /// foot of White's victory corridor.
    pub fn exit_walk(&self, j: u32) -> u64 {
        let fr = &self.frame;
        let x = self.variable_x(j);
        let up = fr.collector_row - RING - self.maze_north() + 2 * EXIT_JOG;
        let across = RING + 2 * RING + (fr.down_col - (x + 2 * RING));
        let down = fr.collector_row - (fr.hub_row - 1);
        u64::from(up + across + down + (fr.white_col - fr.down_col))
    }

    fn landmarks(&self, f: &Formula, white_len: u64, black_len: u64) -> BTreeMap<String, Landmark> {
        let mut out = BTreeMap::new();
        let mut put = |name: String, lm: Landmark| {
            out.insert(name, lm);
        };
        let point = |s: (u32, u32)| Landmark::Square { col: s.0, row: s.1 };
        let fr = &self.frame;
        let cell = &self.cell;
        let shape = &self.shape;

        put("1.white_start".into(), point((fr.access_col, fr.white_start_row)));
        put("2.black_start".into(), point((fr.maze_x, fr.maze_y - 1)));

        let lowest = self.clause_y(0) + RING;
        put(
            "4.access_corridor".into(),
            Landmark::Route {
                from: sq(fr.access_col, fr.white_start_row),
                to: sq(fr.access_col, lowest),
                length: u64::from(fr.white_start_row - lowest),
                crop: Crop { x0: fr.access_col, y0: lowest, x1: fr.access_col, y1: fr.white_start_row },
            },
        );

        for i in 0..self.c {
            let ci = i + 1;
            let (bx, by) = self.entrance_box(i);
            put(
                format!("3.clause_chamber[{ci}]"),
                Landmark::Route {
                    from: sq(bx + shape.west, by + shape.entrance().row),
                    to: sq(bx + shape.east, by + shape.exit().row),
                    length: u64::from(shape.distance_via(1)),
                    crop: Crop { x0: bx, y0: by, x1: bx + shape.width - 1, y1: by + shape.height - 1 },
                },
            );
            for t in 1..=shape.k {
                let slot = Transform::shift(shape.width, shape.height, bx, by).slot(shape.closure(t));
                put(format!("3.clause_chamber[{ci}].close[{t}]"), Landmark::Wall { slot });
            }
            put(format!("junction.access_ring[{ci}]"), point(self.access_ring(i)));
            put(format!("junction.maze_entry[{ci}]"), point((fr.maze_x, self.clause_y(i))));
        }

        put("7a.maze_nw".into(), point((fr.maze_x - STUB, self.maze_north() + STUB)));
        put("7b.maze_se".into(), point((self.maze_east() + STUB, fr.maze_y - STUB)));

        for i in 0..=self.c {
            for j in 0..=self.v {
                put(format!("junction.shortcut[{i}][{j}]"), point((fr.maze_x + j * cell.width, fr.maze_y + i * cell.height)));
            }
        }

        for i in 0..self.c {
            for j in 0..self.v {
                let (ci, vj) = (i + 1, j + 1);
                let (ox, oy) = self.cell_origin(i, j);
                let (xv, yc) = (ox + cell.variable_col, oy + cell.clause_row);
                put(format!("junction.x[{ci}][{vj}]"), point((xv, yc)));
                put(format!("junction.clause_shortcut[{ci}][{j}]"), point((ox, yc)));
                put(format!("junction.variable_shortcut[{i}][{vj}]"), point((xv, oy)));

                let clause_depth = cell.clause_bumps.iter().map(|b| b.depth).max().unwrap_or(0);
                put(
                    format!("5.winding_road[{ci}][{vj}]"),
                    Landmark::Route {
                        from: sq(xv, yc),
                        to: sq(ox + cell.width, yc),
                        length: u64::from(cell.width - cell.variable_col + cell.l),
                        crop: Crop { x0: xv, y0: yc - clause_depth, x1: ox + cell.width, y1: yc },
                    },
                );

                if f.clauses[i as usize].contains(&vj) {
                    let (sx, sy) = cell.side_road_start();
                    let side_depth = cell.side_bumps.iter().map(|b| b.depth).max().unwrap_or(0);
                    put(
                        format!("6.side_path[{ci}][{vj}]"),
                        Landmark::Route {
                            from: sq(ox + sx, oy + sy),
                            to: sq(xv, oy + sy),
                            length: u64::from(cell.variable_col - sx + cell.l),
                            crop: Crop { x0: ox + sx, y0: oy + sy - side_depth, x1: xv, y1: oy + sy },
                        },
                    );
                    put(format!("junction.side_ring[{ci}][{vj}]"), point((ox + cell.side_ring_col, yc - RING)));
                    put(format!("junction.entrance[{ci}][{vj}]"), point((xv, oy + sy)));
                }

                let (yl, yu) = (oy + cell.lower_ring_row, oy + cell.upper_ring_row);
                let long_depth = cell.long_bumps.iter().map(|b| b.depth).max().unwrap_or(0);
                put(
                    format!("10.long_winding_road[{ci}][{vj}]"),
                    Landmark::Route {
                        from: sq(xv, yl + RING),
                        to: sq(xv, yu),
                        length: u64::from(yu - yl - RING + 3 * cell.l),
                        crop: Crop { x0: xv - long_depth, y0: yl + RING, x1: xv, y1: yu },
                    },
                );
                let (cx0, _, cx1, _) = cell.chamber_box();
                put(
                    format!("9.chamber[{ci}][{vj}]"),
                    Landmark::Route {
                        from: sq(xv + RING, yl + RING),
                        to: sq(xv + RING, yu),
                        length: u64::from(cell.chamber_route_length()),
                        crop: Crop { x0: ox + cx0, y0: yl + RING, x1: ox + cx1, y1: yu },
                    },
                );
                let t = cell.chamber_transform((ox, oy));
                for q in 1..=shape.k {
                    put(format!("9.chamber[{ci}][{vj}].close[{q}]"), Landmark::Wall { slot: t.slot(shape.closure(q)) });
                }
                put(format!("junction.lower_ring[{ci}][{vj}]"), point((xv, yl)));
                put(format!("junction.upper_ring[{ci}][{vj}]"), point((xv, yu)));
            }
        }

        for j in 0..self.v {
            let vj = j + 1;
            let x = self.variable_x(j);
            let (bx, by) = (x - 2, fr.truth_row);
            put(
                format!("8.truth_box[{vj}]"),
                Landmark::Route {
                    from: sq(x, by + 1),
                    to: sq(x, by + 8),
                    length: 7,
                    crop: Crop { x0: bx, y0: by, x1: bx + 5, y1: by + 9 },
                },
            );
            let place = Transform::shift(6, 10, bx, by);
            put(format!("8.truth_box[{vj}].true"), Landmark::Wall { slot: place.slot(TRUTH_GATES.0) });
            put(format!("8.truth_box[{vj}].false"), Landmark::Wall { slot: place.slot(TRUTH_GATES.1) });
            put(format!("junction.collector_ring[{vj}]"), point(self.collector_ring(j)));
        }

        let (ex, ey) = self.emergency_ring();
        put(
            "11.emergency_exit".into(),
            Landmark::Route {
                from: sq(self.maze_east(), fr.maze_y),
                to: sq(ex, ey + RING),
                length: u64::from(path_length(&self.emergency_route())),
                crop: Crop { x0: self.maze_east(), y0: ey + RING, x1: ex, y1: fr.maze_y },
            },
        );
        put("junction.emergency_ring".into(), point((ex, ey)));

        put(
            "12.black_corridors".into(),
            Landmark::Series { first: sq(fr.first_corridor_col, fr.hub_row), pitch: 3, count: u64::from(self.b) },
        );
        put(
            "12.black_corridor_length".into(),
            Landmark::Route {
                from: sq(fr.first_corridor_col, fr.hub_row),
                to: sq(fr.first_corridor_col, 0),
                length: black_len,
                crop: Crop { x0: fr.first_corridor_col, y0: 0, x1: fr.first_corridor_col, y1: fr.hub_row },
            },
        );
        put(
            "13.closures".into(),
            Landmark::WallSeries {
                first: WallSlot::new(Orientation::H, fr.first_corridor_col + 1, CLOSURE_ROW),
                pitch: 3,
                count: u64::from(self.b),
            },
        );
        put(
            "13.closures_alt".into(),
            Landmark::WallSeries {
                first: WallSlot::new(Orientation::H, fr.first_corridor_col, CLOSURE_ROW),
                pitch: 3,
                count: u64::from(self.b),
            },
        );
        put(
            "14.white_corridor".into(),
            Landmark::Route {
                from: sq(fr.white_col, fr.hub_row - 1),
                to: sq(fr.white_col, self.n - 1),
                length: white_len,
                crop: Crop { x0: fr.white_col, y0: fr.hub_row - 1, x1: fr.white_col, y1: self.n - 1 },
            },
        );
        out
    }
}
