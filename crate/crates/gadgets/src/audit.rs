//! Independent check that a wall set realises a channel map.

use crate::channel::{Channel, Edge};
use board::{slot_conflict, step_blocked, Dir, Orientation, Square, WallSlot};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditIssue {
    /// Two walls overlap or cross.
    Clash(WallSlot, WallSlot),
    /// A wall leaves the canvas.
    Outside(WallSlot),
    /// An edge that should be walled is open.
    Leak(Square, Square),
    /// A linked edge is blocked.
    Sealed(Square, Square),
    /// A non-gate slot that would block a linked edge is placeable.
    Blockable(WallSlot),
    /// A gate slot is not placeable.
    GateStuck(WallSlot),
}

impl fmt::Display for AuditIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditIssue::Clash(a, b) => write!(f, "walls {a} and {b} clash"),
            AuditIssue::Outside(w) => write!(f, "wall {w} is outside the canvas"),
            AuditIssue::Leak(a, b) => write!(f, "edge {a}-{b} should be walled"),
            AuditIssue::Sealed(a, b) => write!(f, "edge {a}-{b} should be open"),
            AuditIssue::Blockable(w) => write!(f, "slot {w} could block the channel"),
            AuditIssue::GateStuck(w) => write!(f, "gate {w} cannot be placed"),
        }
    }
}

fn fits(w: WallSlot, width: u32, height: u32) -> bool {
    w.x >= 1 && w.y >= 1 && w.x < width && w.y < height
}

/// Every slot, within the canvas, that would block some edge of the channel.
pub fn slots_touching(ch: &Channel, width: u32, height: u32) -> BTreeSet<WallSlot> {
    let mut out = BTreeSet::new();
    for &(a, b) in &ch.links {
        let e = Edge::between(a, b);
        for c in [e.pos, e.pos + 1] {
            let w = match e.orientation {
                Orientation::H => WallSlot::h(c, e.line),
                Orientation::V => WallSlot::v(e.line, c),
            };
            if fits(w, width, height) {
                out.insert(w);
            }
        }
    }
    out
}

pub fn audit(ch: &Channel, walls: &BTreeSet<WallSlot>, width: u32, height: u32) -> Vec<AuditIssue> {
    let mut issues = Vec::new();
    for &w in walls {
        if !fits(w, width, height) {
            issues.push(AuditIssue::Outside(w));
        }
        for other in w.overlapping().chain([w.crossing()]) {
            if w < other && walls.contains(&other) {
                issues.push(AuditIssue::Clash(w, other));
            }
        }
    }
    for &s in &ch.cells {
        for d in Dir::ALL {
            let Some(t) = s.step(d, width.max(height)) else { continue };
            if t.col >= width || t.row >= height {
                continue;
            }
            let open = ch.is_open(s, t);
            let blocked = step_blocked(walls, s, d);
            if open && blocked {
                issues.push(AuditIssue::Sealed(s, t));
            } else if !open && !blocked && !(ch.cells.contains(&t) && t < s) {
                issues.push(AuditIssue::Leak(s, t));
            }
        }
    }
    for w in slots_touching(ch, width, height) {
        if !ch.gates.contains(&w) && slot_conflict(walls, w).is_none() {
            issues.push(AuditIssue::Blockable(w));
        }
    }
    for &g in &ch.gates {
        if slot_conflict(walls, g).is_some() {
            issues.push(AuditIssue::GateStuck(g));
        }
    }
    issues
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::synthesize;

    fn corridor() -> (Channel, BTreeSet<WallSlot>) {
        let mut ch = Channel::new();
        ch.path(&[(1, 2), (4, 2)]);
        let walls = synthesize(&ch, 6, 5).unwrap();
        (ch, walls)
    }

    #[test]
    fn clean_walls_pass() {
        let (ch, walls) = corridor();
        assert_eq!(audit(&ch, &walls, 6, 5), vec![]);
    }

    #[test]
    fn missing_wall_is_reported() {
        let (ch, mut walls) = corridor();
        let first = *walls.iter().next().unwrap();
        walls.remove(&first);
        let issues = audit(&ch, &walls, 6, 5);
        assert!(issues.iter().any(|i| matches!(i, AuditIssue::Leak(..) | AuditIssue::Blockable(_))));
    }

    #[test]
    fn blocking_wall_is_reported() {
        let (ch, mut walls) = corridor();
        // force a wall across the passage between (2,2) and (3,2)
        walls.retain(|w| !matches!((w.orientation, w.x), (Orientation::V, 3)));
        walls.insert(WallSlot::v(3, 3));
        let issues = audit(&ch, &walls, 6, 5);
        assert!(issues.iter().any(|i| matches!(i, AuditIssue::Sealed(..))));
    }

    #[test]
    fn gates_must_stay_placeable() {
        let mut ch = Channel::new();
        ch.path(&[(2, 1), (2, 5)]);
        let walls = synthesize(&ch, 5, 7).unwrap();
        let blocked = walls.iter().find(|w| w.orientation == Orientation::V).unwrap().crossing();
        ch.add_gate(blocked);
        assert!(audit(&ch, &walls, 5, 7).contains(&AuditIssue::GateStuck(blocked)));
    }
}
