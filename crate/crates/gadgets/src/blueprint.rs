use crate::channel::{Channel, Transform};
use crate::synth::{synthesize, SynthError};
use crate::audit::{audit, AuditIssue};
use board::{slot_conflict, step_blocked, Dir, IllegalMove, Square, WallSlot};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use thiserror::Error;

/// A declared port-to-port path length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathMeta {
    pub from: String,
    pub to: String,
    pub length: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetBlueprint {
    pub name: String,
    pub width: u32,
    pub height: u32,
    pub walls: BTreeSet<WallSlot>,
    pub ports: BTreeMap<String, Square>,
    pub meta: BTreeMap<String, PathMeta>,
    /// Named slots that stay placeable: closures, truth-box walls.
    pub gates: BTreeMap<String, WallSlot>,
    pub channel: Channel,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("wall synthesis failed: {0}")]
    Synth(#[from] SynthError),
    #[error("synthesised walls fail audit: {0}")]
    Audit(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaceError {
    #[error("wall {0} leaves the board")]
    OutOfBounds(WallSlot),
    #[error("wall {slot} conflicts with the board ({kind})")]
    Conflict { slot: WallSlot, kind: IllegalMove },
}

/// Rotation (quarter turns counter-clockwise) then translation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Placement {
    pub quarter_turns: u8,
    pub dcol: u32,
    pub drow: u32,
}

impl Placement {
    pub fn at(dcol: u32, drow: u32) -> Placement {
        Placement { quarter_turns: 0, dcol, drow }
    }

    pub fn turned(quarter_turns: u8, dcol: u32, drow: u32) -> Placement {
        Placement { quarter_turns, dcol, drow }
    }
}

/// Breadth-first distances from `start`, never leaving the `width` x `height` box.
pub fn distances_in_box(
    walls: &BTreeSet<WallSlot>,
    width: u32,
    height: u32,
    start: Square,
) -> HashMap<Square, u32> {
    let mut dist = HashMap::from([(start, 0)]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let d = dist[&s];
        for dir in Dir::ALL {
            let Some(t) = s.step(dir, width.max(height)) else { continue };
            if t.col >= width || t.row >= height || step_blocked(walls, s, dir) || dist.contains_key(&t) {
                continue;
            }
            dist.insert(t, d + 1);
            queue.push_back(t);
        }
    }
    dist
}

impl GadgetBlueprint {
    /// Synthesises walls for `channel` and audits them before returning.
    pub(crate) fn assemble(
        name: &str,
        width: u32,
        height: u32,
        channel: Channel,
        ports: &[(&str, Square)],
        gates: &[(&str, WallSlot)],
        meta: &[(&str, &str, u32)],
    ) -> Result<GadgetBlueprint, GadgetError> {
        let walls = synthesize(&channel, width, height)?;
        let issues: Vec<AuditIssue> = audit(&channel, &walls, width, height);
        if let Some(first) = issues.first() {
            return Err(GadgetError::Audit(format!("{name}: {first} ({} issues)", issues.len())));
        }
        Ok(GadgetBlueprint {
            name: name.to_string(),
            width,
            height,
            walls,
            ports: ports.iter().map(|&(k, s)| (k.to_string(), s)).collect(),
            meta: meta
                .iter()
                .map(|&(a, b, length)| {
                    (format!("{a}-{b}"), PathMeta { from: a.to_string(), to: b.to_string(), length })
                })
                .collect(),
            gates: gates.iter().map(|&(k, g)| (k.to_string(), g)).collect(),
            channel,
        })
    }

    pub fn port(&self, name: &str) -> Square {
        *self.ports.get(name).unwrap_or_else(|| panic!("{} has no port {name}", self.name))
    }

    pub fn gate(&self, name: &str) -> WallSlot {
        *self.gates.get(name).unwrap_or_else(|| panic!("{} has no gate {name}", self.name))
    }

    /// BFS distance between two ports on the blueprint's own walls.
    pub fn measure(&self, from: &str, to: &str) -> Option<u32> {
        self.measure_with(&self.walls, from, to)
    }

    /// BFS distance between two ports with a different wall set.
    pub fn measure_with(&self, walls: &BTreeSet<WallSlot>, from: &str, to: &str) -> Option<u32> {
        distances_in_box(walls, self.width, self.height, self.port(from)).get(&self.port(to)).copied()
    }

    /// Wall-list fragment in `.qpos` syntax, with the box and ports as comments.
    pub fn fragment(&self) -> String {
        let mut out = format!("# {} {}x{}\n", self.name, self.width, self.height);
        for (name, s) in &self.ports {
            out.push_str(&format!("# port {name} {} {}\n", s.col, s.row));
        }
        for (name, g) in &self.gates {
            out.push_str(&format!("# gate {name} {} {} {}\n", g.orientation, g.x, g.y));
        }
        for w in &self.walls {
            out.push_str(&format!("wall {} {} {}\n", w.orientation, w.x, w.y));
        }
        out
    }

    pub fn transform(&self, p: Placement) -> Transform {
        Transform {
            width: self.width,
            height: self.height,
            quarter_turns: p.quarter_turns % 4,
            dcol: p.dcol,
            drow: p.drow,
        }
    }

    /// The blueprint rotated in place (translation ignored), with ports,
    /// gates and channel carried along.
    pub fn rotated(&self, quarter_turns: u8) -> GadgetBlueprint {
        let t = self.transform(Placement::turned(quarter_turns, 0, 0));
        let (width, height) = t.rotated_size();
        GadgetBlueprint {
            name: self.name.clone(),
            width,
            height,
            walls: self.walls.iter().map(|&w| t.slot(w)).collect(),
            ports: self.ports.iter().map(|(k, &s)| (k.clone(), t.square(s))).collect(),
            meta: self.meta.clone(),
            gates: self.gates.iter().map(|(k, &g)| (k.clone(), t.slot(g))).collect(),
            channel: self.channel.transformed(&t),
        }
    }
}

/// Transforms the blueprint's walls onto an `n` x `n` board already holding
/// `board_walls`, returning the new walls.
pub fn place(
    bp: &GadgetBlueprint,
    placement: Placement,
    board_walls: &BTreeSet<WallSlot>,
    n: u32,
) -> Result<BTreeSet<WallSlot>, PlaceError> {
    let t = bp.transform(placement);
    let mut out = BTreeSet::new();
    for &w in &bp.walls {
        let moved = t.slot(w);
        if !moved.in_bounds(n) {
            return Err(PlaceError::OutOfBounds(moved));
        }
        if let Some(kind) = slot_conflict(board_walls, moved) {
            return Err(PlaceError::Conflict { slot: moved, kind });
        }
        out.insert(moved);
    }
    Ok(out)
}
