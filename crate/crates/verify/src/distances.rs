use crate::landmarks::{self, Route};
use crate::region::distances_within;
use crate::report::{CheckReport, Recorder};
use crate::grid::WallGrid;
use board::{distance_between, shortest_victory_distance, Dir, Player, Position, Square};
use reduction::{Crop, Layout, LayoutPlan, Landmark, ScaleMode};

fn measure(walls: &WallGrid, n: u32, r: &Route) -> Option<u64> {
    distances_within(walls, n, &r.crop, r.from).get(&r.to).map(|&d| u64::from(d))
}

fn manhattan(a: Square, b: Square) -> u64 {
    u64::from(a.col.abs_diff(b.col) + a.row.abs_diff(b.row))
}

fn shown(d: Option<u64>) -> String {
    d.map_or("unreachable".into(), |d| d.to_string())
}

/// Breadth-first measurements of the compiled board against the plan:
/// every landmark route, the road excesses, each Black corridor, White's
/// walk into the maze and her exit through each truth box.
pub fn check_distances(pos: &Position, plan: &LayoutPlan) -> CheckReport {
    if plan.scale.mode == ScaleMode::Faithful {
        return CheckReport::skipped("distances", "faithful boards are too large for full-board search");
    }
    let mut rec = Recorder::new("distances");
    let lay = Layout::from_plan(plan);
    let grid = WallGrid::new(pos.n, &pos.walls);

    for name in plan.landmarks.keys() {
        let Some(r) = landmarks::route(plan, name) else { continue };
        let got = measure(&grid, pos.n, &r);
        rec.expect(format!("route {name}"), got == Some(r.length), r.length, shown(got));
        let excess = match name.split('.').next() {
            Some("5") | Some("6") => Some(("winding excess", u64::from(plan.l))),
            Some("10") => Some(("long winding excess", 3 * u64::from(plan.l))),
            _ => None,
        };
        if let Some((what, want)) = excess {
            let found = got.map(|d| d.saturating_sub(manhattan(r.from, r.to)));
            rec.expect(format!("{what} {name}"), found == Some(want), want, shown(found));
        }
    }

    for (t, top) in landmarks::series(plan, "12.black_corridors").unwrap_or_default().into_iter().enumerate() {
        let column = Crop { x0: top.col, y0: 0, x1: top.col, y1: top.row };
        let got = distances_within(&grid, pos.n, &column, top).get(&Square::new(top.col, 0)).map(|&d| u64::from(d));
        rec.expect(format!("black corridor {}", t + 1), got == Some(plan.black_len), plan.black_len, shown(got));
    }

    let start = landmarks::square(plan, "1.white_start");
    for i in 0..plan.c {
        let ci = i + 1;
        let mut walls = grid.clone();
        for t in 1..lay.shape.k {
            if let Some(slot) = landmarks::wall(plan, &format!("3.clause_chamber[{ci}].close[{t}]")) {
                walls.set(slot, true);
            }
        }
        let entry = landmarks::square(plan, &format!("junction.maze_entry[{ci}]"));
        let got = start.zip(entry).and_then(|(s, e)| distance_between(&walls, pos.n, s, e).steps()).map(u64::from);
        rec.expect(
            format!("white entry via clause {ci}, last chamber corridor open"),
            got.is_some_and(|d| d <= plan.white_entry_walk),
            format!("<= {}", plan.white_entry_walk),
            shown(got),
        );
    }
    rec.expect(
        "planned entry walk",
        plan.white_entry_walk < 3 * plan.m,
        format!("< 3m = {}", 3 * plan.m),
        plan.white_entry_walk,
    );

    // Black railroads White away from the emergency exit; stand in for
    // that by plugging its first step.
    let mut exits = grid.clone();
    if let Some(r) = landmarks::route(plan, "11.emergency_exit") {
        exits.plug(r.from, Dir::East);
    }
    let foot = Square::new(lay.frame.white_col, lay.frame.hub_row - 1);
    let mut longest_exit = 0;
    for j in 0..plan.v {
        let mut walls = exits.clone();
        for u in 1..=plan.v {
            let gate = if u == j + 1 { "true" } else { "false" };
            if let Some(slot) = landmarks::wall(plan, &format!("8.truth_box[{u}].{gate}")) {
                walls.set(slot, true);
            }
        }
        let top = Square::new(lay.variable_x(j), lay.maze_north());
        let got = distance_between(&walls, pos.n, top, foot).steps().map(u64::from);
        let want = lay.exit_walk(j);
        longest_exit = longest_exit.max(got.unwrap_or(u64::MAX));
        rec.expect(format!("white exit through truth box {}", j + 1), got == Some(want), want, shown(got));
    }
    let escape = plan.white_entry_walk.saturating_add(plan.m).saturating_add(longest_exit);
    rec.expect("escape route (entry, maze, exit)", escape < 5 * plan.m, format!("< 5m = {}", 5 * plan.m), escape);

    let white = shortest_victory_distance(&grid, pos.n, pos.white_pawn, Player::White.goal_row(pos.n)).steps();
    rec.expect("white can still win", white.is_some(), "a path", shown(white.map(u64::from)));
    if let Some(Landmark::Route { length, .. }) = plan.landmarks.get("14.white_corridor") {
        rec.expect_eq("white corridor length", plan.white_len, *length);
    }
    rec.finish()
}
