//! Constructors for every structure the construction uses.
//!
//! Geometry conventions shared by all builders: channels are one square
//! wide; parallel channels keep at least two dead squares between them
//! (room for spacer walls); ports sit one square inside the box edge so
//! that wall runs ending there can borrow an edge when their length is odd.

use crate::blueprint::{GadgetBlueprint, GadgetError};
use crate::channel::Channel;
use board::{Square, WallSlot};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Horizontal,
    Vertical,
}

fn sq(c: u32, r: u32) -> Square {
    Square::new(c, r)
}

fn invalid(msg: impl Into<String>) -> GadgetError {
    GadgetError::InvalidParam(msg.into())
}

/// Straight corridor whose ports are `length` steps apart.
pub fn build_corridor(length: u32, axis: Axis) -> Result<GadgetBlueprint, GadgetError> {
    if length < 2 {
        return Err(invalid(format!("corridor length {length} is below 2")));
    }
    let mut ch = Channel::new();
    ch.path(&[(1, 2), (length + 1, 2)]);
    let bp = GadgetBlueprint::assemble(
        "corridor",
        length + 3,
        5,
        ch,
        &[("a", sq(1, 2)), ("b", sq(length + 1, 2))],
        &[],
        &[("a", "b", length)],
    )?;
    Ok(match axis {
        Axis::Horizontal => bp,
        Axis::Vertical => bp.rotated(1),
    })
}

const ARM: u32 = 4;

/// Four arms of length 4 meeting at one junction square.
pub fn build_cross_junction() -> Result<GadgetBlueprint, GadgetError> {
    let c = ARM + 1;
    let far = 2 * ARM + 1;
    let mut ch = Channel::new();
    ch.path(&[(1, c), (far, c)]);
    ch.path(&[(c, 1), (c, far)]);
    let d = 2 * ARM;
    GadgetBlueprint::assemble(
        "cross_junction",
        far + 2,
        far + 2,
        ch,
        &[("w", sq(1, c)), ("e", sq(far, c)), ("s", sq(c, 1)), ("n", sq(c, far)), ("junction", sq(c, c))],
        &[],
        &[("w", "e", d), ("s", "n", d), ("w", "n", d), ("n", "e", d), ("e", "s", d), ("s", "w", d)],
    )
}

/// A plain (railroadable) T: bar west-east, stem south, rotated by `quarter_turns`.
pub fn build_t_junction_standard(quarter_turns: u8) -> Result<GadgetBlueprint, GadgetError> {
    let c = ARM + 1;
    let far = 2 * ARM + 1;
    let mut ch = Channel::new();
    ch.path(&[(1, c), (far, c)]);
    ch.path(&[(c, 1), (c, c)]);
    let d = 2 * ARM;
    let bp = GadgetBlueprint::assemble(
        "t_junction_standard",
        far + 2,
        c + 3,
        ch,
        &[("bar_a", sq(1, c)), ("bar_b", sq(far, c)), ("stem", sq(c, 1)), ("junction", sq(c, c))],
        &[],
        &[("bar_a", "bar_b", d), ("bar_a", "stem", d), ("bar_b", "stem", d)],
    )?;
    Ok(bp.rotated(quarter_turns))
}

/// Side of the square loop inside the unblockable T, in steps. Odd, so the
/// wall runs inside the loop tile exactly.
pub const RING: u32 = 3;

/// Channel of the unblockable T in its base orientation. The bar runs
/// straight along the top side of a square loop hanging below it; the stem
/// leaves the loop's south-west corner westward, parallel to the bar, then
/// turns south. Each arm is collinear with a loop side, so a pawn parked at an
/// attachment corner can be side-stepped, and a pawn parked anywhere else
/// leaves the other half of the loop free.
fn unblockable_t_channel() -> (Channel, u32, u32, [(&'static str, Square); 3]) {
    let (x0, y0) = (5, 4);
    let (x1, y1) = (x0 + RING, y0 + RING);
    let mut ch = Channel::new();
    ch.path(&[(x0, y0), (x1, y0), (x1, y1), (x0, y1), (x0, y0)]);
    ch.path(&[(1, y1), (x0, y1)]);
    ch.path(&[(x1, y1), (x1 + 3, y1)]);
    ch.path(&[(x0, y0), (x0 - 3, y0), (x0 - 3, 1)]);
    let ports = [("bar_a", sq(1, y1)), ("bar_b", sq(x1 + 3, y1)), ("stem", sq(x0 - 3, 1))];
    (ch, x1 + 5, y1 + 3, ports)
}

/// T-junction that a pawn parked anywhere inside cannot railroad.
pub fn build_t_junction_unblockable(quarter_turns: u8) -> Result<GadgetBlueprint, GadgetError> {
    let (ch, w, h, ports) = unblockable_t_channel();
    let (arm_w, arm_e, stem) = (4, 3, 6);
    let bp = GadgetBlueprint::assemble(
        "t_junction_unblockable",
        w,
        h,
        ch,
        &ports,
        &[],
        &[
            ("bar_a", "bar_b", arm_w + RING + arm_e),
            ("bar_a", "stem", arm_w + RING + stem),
            ("bar_b", "stem", arm_e + 2 * RING + stem),
        ],
    )?;
    Ok(bp.rotated(quarter_turns))
}

/// Column distance between the two legs of one zig-zag bump.
const LEG_GAP: u32 = 3;
/// Column period of consecutive bumps.
const BUMP_PERIOD: u32 = 6;

/// Horizontal road from column 1 to `width - 2` on row 2, with upward bumps
/// of the given heights. Each bump of height h adds 2h steps.
fn bumpy_road(width: u32, heights: &[u32]) -> Channel {
    let mut pts = vec![(1, 2)];
    for (i, &h) in heights.iter().enumerate() {
        let a = 2 + BUMP_PERIOD * i as u32;
        let b = a + LEG_GAP;
        pts.extend([(a, 2), (a, 2 + h), (b, 2 + h), (b, 2)]);
    }
    pts.push((width - 2, 2));
    let mut ch = Channel::new();
    ch.path(&pts);
    ch
}

fn bump_capacity(width: u32) -> u32 {
    if width < 8 {
        0
    } else {
        (width - 8) / BUMP_PERIOD + 1
    }
}

/// Splits `extra` (even) into bump heights for a road of the given width,
/// using as many bumps as fit so the road stays as low as possible.
fn bump_heights(extra: u32, width: u32) -> Option<Vec<u32>> {
    let total = extra / 2;
    let bumps = bump_capacity(width).min(total);
    if bumps == 0 {
        return None;
    }
    let base = total / bumps;
    let rem = total % bumps;
    Some((0..bumps).map(|i| base + u32::from(i < rem)).collect())
}

/// Height of the box a road with this excess needs at this span.
pub fn road_height(extra: u32, span: u32) -> Option<u32> {
    bump_heights(extra, span + 3).map(|hs| hs.iter().max().copied().unwrap_or(0) + 5)
}

fn road(name: &str, extra: u32, span: u32) -> Result<GadgetBlueprint, GadgetError> {
    if extra < 2 || extra % 2 == 1 {
        return Err(invalid(format!("excess {extra} must be even and at least 2")));
    }
    let width = span + 3;
    let heights = bump_heights(extra, width)
        .ok_or_else(|| invalid(format!("span {span} is too short for a zig-zag (needs 5)")))?;
    let top = heights.iter().max().copied().unwrap_or(0);
    let ch = bumpy_road(width, &heights);
    GadgetBlueprint::assemble(
        name,
        width,
        top + 5,
        ch,
        &[("a", sq(1, 2)), ("b", sq(width - 2, 2))],
        &[],
        &[("a", "b", span + extra)],
    )
}

/// Zig-zag that lengthens a horizontal channel by `extra` steps.
pub fn build_elongator(extra: u32) -> Result<GadgetBlueprint, GadgetError> {
    if extra < 2 || extra % 2 == 1 {
        return Err(invalid(format!("elongator excess {extra} must be even and at least 2")));
    }
    road("elongator", extra, 7)
}

/// Horizontal road spanning `span` columns between its ports, `l` steps longer than straight.
pub fn build_winding_road(l: u32, span: u32) -> Result<GadgetBlueprint, GadgetError> {
    road("winding_road", l, span)
}

/// Vertical road spanning `span` rows, `3l` steps longer than straight.
pub fn build_long_winding_road(l: u32, span: u32) -> Result<GadgetBlueprint, GadgetError> {
    if l < 2 || l % 2 == 1 {
        return Err(invalid(format!("road excess {l} must be even and at least 2")));
    }
    let mut bp = road("long_winding_road", 3 * l, span)?.rotated(1);
    bp.name = "long_winding_road".into();
    Ok(bp)
}

/// 2x2 box on a vertical channel. The vertical gate wall keeps the left
/// column open; the horizontal one cuts the box in half.
pub fn build_truth_box() -> Result<GadgetBlueprint, GadgetError> {
    let (open, close) = TRUTH_GATES;
    GadgetBlueprint::assemble(
        "truth_box",
        6,
        10,
        truth_box_channel(),
        &[("s", sq(2, 1)), ("n", sq(2, 8))],
        &[("true", open), ("false", close)],
        &[("s", "n", 7)],
    )
}

/// The "true" and "false" gates of the truth box, in box coordinates.
pub const TRUTH_GATES: (WallSlot, WallSlot) = (WallSlot::v(3, 5), WallSlot::h(3, 5));

/// Channel of the 6x10 truth box: a straight corridor from (2,1) to (2,8)
/// with a 2x2 pocket beside rows 4 and 5.
pub fn truth_box_channel() -> Channel {
    let mut ch = Channel::new();
    ch.path(&[(2, 1), (2, 8)]);
    ch.connect(sq(2, 4), sq(3, 4));
    ch.connect(sq(2, 5), sq(3, 5));
    ch.connect(sq(3, 4), sq(3, 5));
    ch.add_gate(TRUTH_GATES.0);
    ch.add_gate(TRUTH_GATES.1);
    ch
}

/// Row of the closure walls above the goal row in a victory corridor.
pub const CLOSURE_ROW: u32 = 2;

/// Bottom end of one black victory corridor. The corridor owns three
/// columns; either of two walls on row 2 cuts it from the goal row. The box
/// includes one dead column of each neighbour for the spacer walls.
pub fn build_victory_block_chamber() -> Result<GadgetBlueprint, GadgetError> {
    let top = 5;
    let mut ch = Channel::new();
    ch.path(&[(2, top), (2, 0)]);
    let closure = WallSlot::h(3, CLOSURE_ROW);
    let alt = WallSlot::h(2, CLOSURE_ROW);
    ch.add_gate(closure);
    ch.add_gate(alt);
    GadgetBlueprint::assemble(
        "victory_block_chamber",
        5,
        top + 2,
        ch,
        &[("top", sq(2, top)), ("goal", sq(2, 0))],
        &[("closure", closure), ("closure_alt", alt)],
        &[("top", "goal", top)],
    )
}

/// Vertical pitch between consecutive loops of a chamber spine.
pub const CHAMBER_PITCH: u32 = RING + 3;
/// Columns between the two spines of a chamber (odd, so corridor walls tile).
pub const CHAMBER_SPAN: u32 = 2 * RING + 7;

/// Chamber geometry shared by the builder and the layout code.
///
/// Each spine threads a column of loops. Odd-numbered loops are entered at
/// their outer top corner and left at the inner bottom corner, with the
/// corridor on the top side; even-numbered loops mirror that, with the
/// corridor on the bottom side. The spine therefore zig-zags between two
/// columns, which keeps every wall run the right parity.
#[derive(Debug, Clone, Copy)]
pub struct ChamberShape {
    pub k: u32,
    pub width: u32,
    pub height: u32,
    pub west: u32,
    pub east: u32,
}

impl ChamberShape {
    pub fn new(k: u32) -> ChamberShape {
        let west = 2;
        let east = west + CHAMBER_SPAN;
        let height = Self::loop_bottom_for(k, 1) + RING + 6;
        ChamberShape { k, width: east + 3, height, west, east }
    }

    fn loop_bottom_for(k: u32, i: u32) -> u32 {
        2 + CHAMBER_PITCH * (k - i)
    }

    /// Bottom row of the loops serving corridor `i` (1 = top).
    pub fn loop_bottom(&self, i: u32) -> u32 {
        Self::loop_bottom_for(self.k, i)
    }

    pub fn corridor_row(&self, i: u32) -> u32 {
        if i % 2 == 1 {
            self.loop_bottom(i) + RING
        } else {
            self.loop_bottom(i)
        }
    }

    pub fn entrance(&self) -> Square {
        sq(self.west, self.loop_bottom(1) + RING + 4)
    }

    pub fn exit(&self) -> Square {
        sq(self.east, self.loop_bottom(1) + RING + 4)
    }

    /// Closure wall for corridor `i`: a vertical wall at a joint of the
    /// corridor's walls, reaching into the dead band beside it.
    pub fn closure(&self, i: u32) -> WallSlot {
        let r = self.corridor_row(i);
        let x = self.west + RING + 4;
        if i % 2 == 1 {
            WallSlot::v(x, r + 1)
        } else {
            WallSlot::v(x, r)
        }
    }

    /// Steps from entrance to exit when corridor `i` is the first open one.
    pub fn distance_via(&self, i: u32) -> u32 {
        let spine = 4 + RING + (i - 1) * (2 * RING + 3);
        2 * spine + CHAMBER_SPAN - 2 * RING
    }

    pub fn channel(&self) -> Channel {
        let mut ch = Channel::new();
        let (w, e) = (self.west, self.east);
        let top = self.entrance().row;
        ch.path(&[(w, top), (w, self.loop_bottom(1) + RING)]);
        ch.path(&[(e, top), (e, self.loop_bottom(1) + RING)]);
        for i in 1..=self.k {
            let b = self.loop_bottom(i);
            for x0 in [w, e - RING] {
                ch.path(&[(x0, b), (x0 + RING, b), (x0 + RING, b + RING), (x0, b + RING), (x0, b)]);
            }
            let r = self.corridor_row(i);
            ch.path(&[(w + RING, r), (e - RING, r)]);
            if i < self.k {
                let next_top = self.loop_bottom(i + 1) + RING;
                // odd loops leave at the inner column, even ones at the outer
                let (wx, ex) = if i % 2 == 1 { (w + RING, e - RING) } else { (w, e) };
                ch.path(&[(wx, b), (wx, next_top)]);
                ch.path(&[(ex, b), (ex, next_top)]);
            }
            ch.add_gate(self.closure(i));
        }
        ch
    }
}

/// Bank of `k` parallel corridors between two spines. The entrance is the
/// top of the west spine and the exit the top of the east spine; every spine
/// junction is an unblockable loop, and each corridor has one closure gate.
pub fn build_chamber(k: u32) -> Result<GadgetBlueprint, GadgetError> {
    if k < 2 {
        return Err(invalid(format!("chamber needs at least 2 corridors, got {k}")));
    }
    let s = ChamberShape::new(k);
    let names: Vec<String> = (1..=k).map(|i| format!("close_{i}")).collect();
    let gates: Vec<(&str, WallSlot)> = names.iter().map(String::as_str).zip((1..=k).map(|i| s.closure(i))).collect();
    GadgetBlueprint::assemble(
        "chamber",
        s.width,
        s.height,
        s.channel(),
        &[("entrance", s.entrance()), ("exit", s.exit())],
        &gates,
        &[("entrance", "exit", s.distance_via(1))],
    )
}
