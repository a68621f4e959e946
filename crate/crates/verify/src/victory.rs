use crate::landmarks;
use crate::region::distances_within;
use crate::report::{CheckReport, Recorder};
use board::{IllegalMove, Player, Position, Square};
use reduction::{Crop, LayoutPlan};

/// Closes Black's victory corridors one by one, westmost first. Every
/// closure but the last must be legal, cut its own corridor and leave the
/// rest open; the last must be refused because it would seal Black in.
pub fn check_victory_blocks(pos: &Position, plan: &LayoutPlan) -> CheckReport {
    let mut rec = Recorder::new("victory_blocks");
    let (Some(tops), Some(closures)) =
        (landmarks::series(plan, "12.black_corridors"), landmarks::wall_series(plan, "13.closures"))
    else {
        rec.expect("landmarks", false, "corridor and closure series", "missing");
        return rec.finish();
    };
    rec.expect_eq("corridors", plan.b, tops.len() as u64);
    rec.expect_eq("closures", tops.len(), closures.len());
    rec.expect("black budget", plan.black_budget + 1 >= plan.b, format!(">= {}", plan.b.saturating_sub(1)), plan.black_budget);

    let open = |walls: &_, top: Square| {
        let column = Crop { x0: top.col, y0: 0, x1: top.col, y1: top.row };
        distances_within(walls, pos.n, &column, top).contains_key(&Square::new(top.col, 0))
    };
    let mut state = pos.clone();
    state.to_move = Player::Black;
    let last = closures.len().saturating_sub(1);
    for (t, (&slot, &top)) in closures.iter().zip(&tops).enumerate() {
        let err = state.slot_error(slot);
        if t < last {
            rec.expect(format!("closure {} ({slot})", t + 1), err.is_none(), "legal", describe(err));
            if err.is_some() {
                continue;
            }
            state.walls.insert(slot);
            rec.expect(format!("corridor {} after its closure", t + 1), !open(&state.walls, top), "cut", "open");
            for (u, &other) in tops.iter().enumerate().skip(t + 1) {
                rec.expect(
                    format!("corridor {} after closure {}", u + 1, t + 1),
                    open(&state.walls, other),
                    "open",
                    "cut",
                );
            }
        } else {
            rec.expect(
                format!("closure {} ({slot})", t + 1),
                err == Some(IllegalMove::PathSealing),
                "path-sealing",
                describe(err),
            );
        }
    }
    let walk = state.shortest_victory_distance(Player::Black).steps().map(u64::from);
    let planned = plan.black_len + plan.black_approach;
    rec.expect(
        "black distance with one corridor left",
        walk == Some(planned),
        planned,
        walk.map_or("sealed".into(), |d| d.to_string()),
    );
    rec.finish()
}

fn describe(err: Option<IllegalMove>) -> String {
    err.map_or("legal".into(), |e| e.to_string())
}
