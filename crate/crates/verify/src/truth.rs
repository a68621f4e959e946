use crate::region::Region;
use crate::report::{CheckReport, Recorder};
use board::{Orientation, WallSlot};
use std::collections::BTreeSet;

fn list(slots: &[WallSlot]) -> String {
    if slots.is_empty() {
        return "none".into();
    }
    slots.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// The three states of a truth box between ports `s` (south) and `n`:
/// empty and passable with exactly one cutting and one non-cutting free
/// slot; after the horizontal wall, sealed and full; after the vertical
/// wall, passable and full.
pub fn check_truth_box(region: &Region) -> CheckReport {
    let mut rec = Recorder::new("truth_box");
    let (Some(&s), Some(&n)) = (region.ports.get("s"), region.ports.get("n")) else {
        rec.expect("ports", false, "s and n", format!("{:?}", region.ports.keys().collect::<Vec<_>>()));
        return rec.finish();
    };
    let passable = |walls: &BTreeSet<WallSlot>| region.distances(walls, s).get(&n).copied();
    let empty = passable(&region.walls);
    rec.expect("empty: s -> n", empty.is_some(), "passable", fmt_len(empty));

    let free = region.cutting_slots(&region.walls);
    rec.expect("empty: free interior slots", free.len() == 2, "2", format!("{} ({})", free.len(), list(&free)));
    let mut states = Vec::new();
    for &slot in &free {
        let mut walls = region.walls.clone();
        walls.insert(slot);
        states.push((slot, passable(&walls).is_some(), region.cutting_slots(&walls)));
    }
    let closing: Vec<_> = states.iter().filter(|st| !st.1).collect();
    let opening: Vec<_> = states.iter().filter(|st| st.1).collect();
    rec.expect("slots that close the box", closing.len() == 1, "1", closing.len());
    rec.expect("slots that keep it open", opening.len() == 1, "1", opening.len());
    for (slot, open, rest) in &states {
        let (label, want) = match slot.orientation {
            Orientation::H => ("closed", false),
            Orientation::V => ("open", true),
        };
        rec.expect(
            format!("after {slot}: s -> n"),
            *open == want,
            if want { "passable" } else { "sealed" },
            if *open { "passable" } else { "sealed" },
        );
        rec.expect(format!("{label} box ({slot}): further free slots"), rest.is_empty(), "none", list(rest));
    }
    rec.finish()
}

fn fmt_len(d: Option<u32>) -> String {
    d.map_or("sealed".into(), |d| format!("{d} steps"))
}
