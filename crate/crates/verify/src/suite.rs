use crate::landmarks;
use crate::region::Region;
use crate::report::CheckReport;
use crate::{check_distances, check_railroading, check_structure, check_truth_box, check_unblockable, check_victory_blocks};
use board::Position;
use gadgets::{build_cross_junction, build_t_junction_unblockable};
use reduction::LayoutPlan;
use std::collections::BTreeMap;

/// Every check name accepted by [`run_checks`].
pub const CHECKS: [&str; 6] = ["distances", "railroading", "structure", "truth_box", "unblockable", "victory_blocks"];

/// Truth boxes cut out of the board, one region per variable.
pub fn truth_box_regions(pos: &Position, plan: &LayoutPlan) -> Vec<Region> {
    (1..=plan.v)
        .filter_map(|vj| {
            let name = format!("8.truth_box[{vj}]");
            let r = landmarks::route(plan, &name)?;
            let ports = BTreeMap::from([("s".to_string(), r.from), ("n".to_string(), r.to)]);
            Some(Region::crop(&name, pos, r.crop, ports))
        })
        .collect()
}

fn gadget(name: &str, result: Result<CheckReport, gadgets::GadgetError>) -> CheckReport {
    result.unwrap_or_else(|e| {
        let mut rec = crate::Recorder::new(name);
        rec.expect("gadget", false, "builds", e);
        rec.finish()
    })
}

/// Runs the named checks (all of them when `names` is empty) and returns
/// the reports sorted by check name. Junction checks run on the gadgets
/// the compiler instantiates; truth boxes and the rest on the board.
pub fn run_checks(pos: Option<&Position>, plan: &LayoutPlan, names: &[&str]) -> Vec<CheckReport> {
    let wanted = |n: &str| names.is_empty() || names.contains(&n);
    let mut out = Vec::new();
    if wanted("structure") {
        out.push(check_structure(pos, plan));
    }
    let need_board = |check: &str| CheckReport::skipped(check, "no board: the plan was not materialised");
    if wanted("distances") {
        out.push(pos.map_or_else(|| need_board("distances"), |p| check_distances(p, plan)));
    }
    if wanted("victory_blocks") {
        out.push(pos.map_or_else(|| need_board("victory_blocks"), |p| check_victory_blocks(p, plan)));
    }
    if wanted("truth_box") {
        match pos {
            Some(p) => {
                for region in truth_box_regions(p, plan) {
                    let mut rep = check_truth_box(&region);
                    rep.check = format!("truth_box {}", region.name);
                    out.push(rep);
                }
            }
            None => out.push(need_board("truth_box")),
        }
    }
    if wanted("unblockable") {
        for q in 0..4u8 {
            let mut rep = gadget("unblockable", build_t_junction_unblockable(q).map(|bp| check_unblockable(&Region::from_blueprint(&bp))));
            rep.check = format!("unblockable t_junction turn {q}");
            out.push(rep);
        }
    }
    if wanted("railroading") {
        let mut rep = gadget("railroading", build_cross_junction().map(|bp| check_railroading(&Region::from_blueprint(&bp))));
        rep.check = "railroading cross_junction".into();
        out.push(rep);
    }
    out.sort_by(|a, b| a.check.cmp(&b.check));
    out
}
