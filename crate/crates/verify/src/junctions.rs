use crate::region::Region;
use crate::report::{CheckReport, Recorder};
use board::{step_blocked, Square, WallSlot};
use std::collections::{BTreeSet, HashMap};

/// Plies granted to White per unit of region diameter.
pub const PLY_FACTOR: u32 = 4;

fn at(s: Square) -> String {
    format!("({},{})", s.col, s.row)
}

/// Pursuit game on one wall set: White travels to `goal`, Black moves or
/// passes. A Black pawn standing on the exit square itself does not hold
/// White back, since the arm continues beyond it and White jumps on.
struct Pursuit<'a> {
    region: &'a Region,
    walls: &'a BTreeSet<WallSlot>,
    squares: Vec<Square>,
    index: HashMap<Square, usize>,
}

impl<'a> Pursuit<'a> {
    fn new(region: &'a Region, walls: &'a BTreeSet<WallSlot>) -> Pursuit<'a> {
        let squares = region.open_squares(walls);
        let index = squares.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        Pursuit { region, walls, squares, index }
    }

    fn arrived(&self, w: Square, b: Square, goal: Square) -> bool {
        w == goal || (b == goal && w.dir_to(goal).is_some_and(|d| !step_blocked(self.walls, w, d)))
    }

    /// Plies White needs against best defence, for every (White, Black)
    /// pair with White to move; `None` when the bound runs out first.
    fn solve(&self, goal: Square, ply_bound: u32) -> Vec<Option<u32>> {
        let s = self.squares.len();
        let id = |w: usize, b: usize| w * s + b;
        let mut white: Vec<Option<u32>> = vec![None; s * s];
        let mut black: Vec<Option<u32>> = vec![None; s * s];
        let moves = |me: Square, them: Square| -> Vec<usize> {
            self.region.moves(self.walls, me, them).into_iter().filter_map(|t| self.index.get(&t).copied()).collect()
        };
        for (wi, &w) in self.squares.iter().enumerate() {
            for (bi, &b) in self.squares.iter().enumerate() {
                if wi != bi && self.arrived(w, b, goal) {
                    white[id(wi, bi)] = Some(0);
                }
            }
        }
        // Each round extends White-to-move values by one White ply and one Black ply.
        for ply in (2..=ply_bound).step_by(2) {
            let mut next_black = black.clone();
            for wi in 0..s {
                for bi in 0..s {
                    if wi == bi || black[id(wi, bi)].is_some() {
                        continue;
                    }
                    let (w, b) = (self.squares[wi], self.squares[bi]);
                    let replies = std::iter::once(bi).chain(moves(b, w));
                    let worst = replies.map(|r| white[id(wi, r)]).try_fold(0, |acc, v| v.map(|v| acc.max(v)));
                    next_black[id(wi, bi)] = worst.map(|v| v + 1);
                }
            }
            black = next_black;
            let mut changed = false;
            for wi in 0..s {
                for bi in 0..s {
                    if wi == bi || white[id(wi, bi)].is_some() {
                        continue;
                    }
                    let (w, b) = (self.squares[wi], self.squares[bi]);
                    let best = moves(w, b).into_iter().filter_map(|t| {
                        if t == bi {
                            None
                        } else if self.arrived(self.squares[t], b, goal) {
                            Some(1)
                        } else {
                            black[id(t, bi)].map(|v| v + 1)
                        }
                    });
                    if let Some(v) = best.min().filter(|&v| v <= ply) {
                        white[id(wi, bi)] = Some(v);
                        changed = true;
                    }
                }
            }
            if !changed && ply > 2 {
                break;
            }
        }
        white
    }
}

/// White must pass between every pair of ports whatever square the Black
/// pawn starts on and whichever single free cutting wall Black adds, with
/// Black moving or waiting adversarially.
pub fn check_unblockable(region: &Region) -> CheckReport {
    let mut rec = Recorder::new("unblockable");
    let bound = PLY_FACTOR * region.diameter().max(1);
    rec.expect("ports", region.ports.len() >= 2, "at least 2", region.ports.len());
    let mut variants: Vec<(String, BTreeSet<WallSlot>)> = vec![(String::new(), region.walls.clone())];
    for slot in region.cutting_slots(&region.walls) {
        let mut added = region.walls.clone();
        added.insert(slot);
        variants.push((format!(" + wall {slot}"), added));
    }
    rec.expect("extra walls tried", true, "any", variants.len() - 1);
    let mut worst = 0;
    for (tag, walls) in &variants {
        let game = Pursuit::new(region, walls);
        for (to_name, &to) in &region.ports {
            if !game.index.contains_key(&to) {
                rec.expect(format!("port {to_name}{tag}"), false, "connected", "cut off");
                continue;
            }
            let values = game.solve(to, bound);
            for (from_name, &from) in &region.ports {
                if from == to {
                    continue;
                }
                let Some(&fi) = game.index.get(&from) else { continue };
                for (bi, &b) in game.squares.iter().enumerate() {
                    if bi == fi {
                        continue;
                    }
                    match values[fi * game.squares.len() + bi] {
                        Some(v) => worst = worst.max(v),
                        None => rec.expect(
                            format!("black {}: {from_name} -> {to_name}{tag}", at(b)),
                            false,
                            format!("White through within {bound} plies"),
                            "held",
                        ),
                    }
                }
            }
        }
    }
    rec.expect("slowest forced passage (plies)", worst <= bound, format!("<= {bound}"), worst);
    rec.finish()
}

/// With the Black pawn parked, White entering along an arm that has a
/// collinear partner can only carry straight on.
pub fn check_railroading(region: &Region) -> CheckReport {
    let mut rec = Recorder::new("railroading");
    let Some(black) = region.black else {
        rec.expect("black pawn", false, "on the junction", "absent");
        return rec.finish();
    };
    let mut straight_arms = 0;
    for (from_name, &from) in &region.ports {
        let opposite = region.ports.iter().find(|(_, &q)| q != from && collinear_through(from, black, q));
        let Some((opp_name, _)) = opposite else { continue };
        straight_arms += 1;
        let reach = white_reach(region, from, black);
        for (to_name, &to) in &region.ports {
            if to == from {
                continue;
            }
            let want = to_name == opp_name;
            let got = reach.contains(&to);
            let what = if want { "straight on" } else { "turn" };
            rec.expect(
                format!("{from_name} -> {to_name} ({what}), black {}", at(black)),
                want == got,
                if want { "reachable" } else { "unreachable" },
                if got { "reachable" } else { "unreachable" },
            );
        }
    }
    rec.expect("arms with a straight partner", straight_arms > 0, "at least 1", straight_arms);
    rec.finish()
}

fn collinear_through(a: Square, mid: Square, b: Square) -> bool {
    let between = |p: u32, m: u32, q: u32| (p < m && m < q) || (q < m && m < p);
    (a.col == mid.col && b.col == mid.col && between(a.row, mid.row, b.row))
        || (a.row == mid.row && b.row == mid.row && between(a.col, mid.col, b.col))
}

fn white_reach(region: &Region, from: Square, black: Square) -> BTreeSet<Square> {
    let mut seen = BTreeSet::from([from]);
    let mut stack = vec![from];
    while let Some(w) = stack.pop() {
        for t in region.moves(&region.walls, w, black) {
            if seen.insert(t) {
                stack.push(t);
            }
        }
    }
    seen
}
