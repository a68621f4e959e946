use crate::grid::WallGrid;
use crate::landmarks;
use crate::report::{CheckReport, Recorder};
use board::{shortest_victory_distance, slot_conflict, step_blocked, Dir, Player, Position, Square};
use formula::Formula;
use gadgets::{audit, CLOSURE_ROW};
use reduction::{board_channel, compile, Layout, LayoutPlan, ScaleMode};
use std::collections::BTreeSet;

/// Structural invariants of a compiled board. The plan-level part always
/// runs; the board-level part needs the position, which faithful plans
/// are too large to materialise.
pub fn check_structure(pos: Option<&Position>, plan: &LayoutPlan) -> CheckReport {
    let mut rec = Recorder::new("structure");
    let Some(f) = landmarks::formula(plan) else {
        rec.expect("plan: formula", false, "well-formed clauses", format!("{:?}", plan.clauses));
        return rec.finish();
    };
    plan_checks(&mut rec, plan, &f);
    match pos {
        Some(pos) => board_checks(&mut rec, pos, plan, &f),
        None => rec.expect("board", true, "optional", "not materialised; board-level checks skipped"),
    }
    rec.finish()
}

fn count(plan: &LayoutPlan, prefix: &str) -> usize {
    plan.landmarks.keys().filter(|k| k.starts_with(prefix) && k.ends_with(']') && !k[prefix.len()..].contains('.')).count()
}

fn plan_checks(rec: &mut Recorder, plan: &LayoutPlan, f: &Formula) {
    let (v, c) = (plan.v as usize, plan.c as usize);
    let wanted: BTreeSet<(u32, u32)> = f.memberships().into_iter().map(|(i, j)| (i as u32, j)).collect();
    let drawn = landmarks::side_paths(plan);
    for (ci, vj) in wanted.symmetric_difference(&drawn) {
        let member = wanted.contains(&(*ci, *vj));
        rec.expect(
            format!("membership: plan side path [{ci}][{vj}]"),
            false,
            if member { "present" } else { "absent" },
            if member { "absent" } else { "present" },
        );
    }
    rec.expect_eq("plan: side paths", wanted.len(), drawn.len());
    rec.expect_eq("plan: clause chambers", c, count(plan, "3.clause_chamber["));
    rec.expect_eq("plan: winding roads", c * v, count(plan, "5.winding_road["));
    rec.expect_eq("plan: in-cell chambers", c * v, count(plan, "9.chamber["));
    rec.expect_eq("plan: long winding roads", c * v, count(plan, "10.long_winding_road["));
    rec.expect_eq("plan: truth boxes", v, count(plan, "8.truth_box["));
    rec.expect_eq("plan: corridors per chamber", plan.v.div_ceil(2) + 2, plan.k);
    rec.expect_eq("plan: white budget", u64::from(plan.v.div_ceil(2) + 1), plan.white_budget);
    rec.expect(
        "plan: black budget",
        plan.black_budget + 1 >= plan.b,
        format!(">= {}", plan.b.saturating_sub(1)),
        plan.black_budget,
    );

    match (
        plan.landmarks.get("12.black_corridors"),
        landmarks::wall_series(plan, "13.closures"),
        landmarks::wall_series(plan, "13.closures_alt"),
    ) {
        (Some(reduction::Landmark::Series { first, pitch, count }), Some(close), Some(alt)) => {
            rec.expect_eq("plan: corridor count", plan.b, *count);
            rec.expect_eq("plan: corridor spacing", 3, *pitch);
            rec.expect_eq("plan: closure count", plan.b, close.len() as u64);
            for (t, (&a, &b)) in close.iter().zip(&alt).enumerate() {
                let col = first.col + pitch * t as u32;
                let ok = a.y == CLOSURE_ROW && b.y == CLOSURE_ROW && a.x == col + 1 && b.x == col;
                rec.expect(format!("plan: closures of corridor {}", t + 1), ok, format!("H {} {CLOSURE_ROW} / H {col} {CLOSURE_ROW}", col + 1), format!("{a} / {b}"));
            }
        }
        _ => rec.expect("plan: corridor landmarks", false, "present", "missing"),
    }

    if plan.scale.mode == ScaleMode::Faithful {
        let m = plan.m;
        rec.expect_eq("plan: board side 40m", 40 * m, plan.n);
        rec.expect_eq("plan: corridors 13m", 13 * m, plan.b);
        rec.expect_eq("plan: white corridor 24m", 24 * m, plan.white_len);
        rec.expect_eq("plan: black corridor 16m", 16 * m, plan.black_len);
    }
}

fn board_checks(rec: &mut Recorder, pos: &Position, plan: &LayoutPlan, f: &Formula) {
    let lay = Layout::from_plan(plan);
    rec.expect("board: legal", pos.validate().is_ok(), "valid", pos.validate().err().map_or("valid".into(), |e| e.to_string()));
    rec.expect_eq("board: side", plan.n, u64::from(pos.n));
    rec.expect_eq("board: white walls", plan.white_budget, u64::from(pos.white_walls_left));
    rec.expect_eq("board: black walls", plan.black_budget, u64::from(pos.black_walls_left));
    for (name, p, who) in [("1.white_start", pos.white_pawn, "white"), ("2.black_start", pos.black_pawn, "black")] {
        let want = landmarks::square(plan, name);
        rec.expect(format!("board: {who} pawn"), want == Some(p), fmt_sq(want), fmt_sq(Some(p)));
    }

    let grid = WallGrid::new(pos.n, &pos.walls);
    for (t, top) in landmarks::series(plan, "12.black_corridors").unwrap_or_default().into_iter().enumerate() {
        let leaks: Vec<u32> = (0..top.row)
            .filter(|&row| {
                let s = Square::new(top.col, row);
                !step_blocked(&grid, s, Dir::East) || !step_blocked(&grid, s, Dir::West)
            })
            .collect();
        rec.expect(
            format!("board: corridor {} side walls", t + 1),
            leaks.is_empty(),
            "closed on both sides",
            format!("open beside rows {leaks:?}"),
        );
    }

    for i in 0..plan.c {
        for j in 0..plan.v {
            let (ci, vj) = (i + 1, j + 1);
            let member = f.clauses[i as usize].contains(&vj);
            let (_, oy) = lay.cell_origin(i, j);
            let entrance = Square::new(lay.variable_x(j), oy + lay.cell.side_road_start().1);
            let open = !step_blocked(&grid, entrance, Dir::West);
            rec.expect(
                format!("membership: board side path [{ci}][{vj}]"),
                open == member,
                if member { "joined" } else { "walled off" },
                if open { "joined" } else { "walled off" },
            );
        }
    }

    for vj in 1..=plan.v {
        for gate in ["true", "false"] {
            let Some(slot) = landmarks::wall(plan, &format!("8.truth_box[{vj}].{gate}")) else {
                rec.expect(format!("board: truth box {vj} {gate} gate"), false, "landmark", "missing");
                continue;
            };
            let err = slot_conflict(&grid, slot);
            rec.expect(
                format!("board: truth box {vj} {gate} gate"),
                err.is_none(),
                "free",
                err.map_or("free".into(), |e| e.to_string()),
            );
        }
    }

    for who in [Player::White, Player::Black] {
        let d = shortest_victory_distance(&grid, pos.n, pos.pawn(who), who.goal_row(pos.n)).steps();
        rec.expect(format!("board: {who:?} path to goal"), d.is_some(), "exists", d.map_or("none".into(), |d| format!("{d} steps")));
    }

    let issues = audit(&board_channel(&lay, f), &pos.walls, pos.n, pos.n);
    rec.expect(
        "board: walls realise the channel",
        issues.is_empty(),
        "no issues",
        issues.iter().take(5).map(ToString::to_string).collect::<Vec<_>>().join("; "),
    );
    match compile(f, plan.scale) {
        Ok((fresh, _)) => {
            let extra: Vec<_> = pos.walls.difference(&fresh.walls).take(5).map(ToString::to_string).collect();
            let missing: Vec<_> = fresh.walls.difference(&pos.walls).take(5).map(ToString::to_string).collect();
            rec.expect(
                "board: walls equal a fresh compile",
                extra.is_empty() && missing.is_empty(),
                "identical",
                format!("extra [{}], missing [{}]", extra.join(", "), missing.join(", ")),
            );
        }
        Err(e) => rec.expect("board: walls equal a fresh compile", false, "compiles", e),
    }
}

fn fmt_sq(s: Option<Square>) -> String {
    s.map_or("none".into(), |s| format!("({},{})", s.col, s.row))
}
