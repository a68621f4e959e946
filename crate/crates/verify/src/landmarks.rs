//! Typed lookups into a plan's landmark table.

use board::{Square, WallSlot};
use formula::Formula;
use reduction::{Crop, Landmark, LayoutPlan};
use std::collections::BTreeSet;

pub struct Route {
    pub from: Square,
    pub to: Square,
    pub length: u64,
    pub crop: Crop,
}

pub fn square(plan: &LayoutPlan, name: &str) -> Option<Square> {
    match plan.landmarks.get(name)? {
        Landmark::Square { col, row } => Some(Square::new(*col, *row)),
        _ => None,
    }
}

pub fn wall(plan: &LayoutPlan, name: &str) -> Option<WallSlot> {
    match plan.landmarks.get(name)? {
        Landmark::Wall { slot } => Some(*slot),
        _ => None,
    }
}

pub fn route(plan: &LayoutPlan, name: &str) -> Option<Route> {
    match plan.landmarks.get(name)? {
        Landmark::Route { from, to, length, crop } => Some(Route { from: *from, to: *to, length: *length, crop: *crop }),
        _ => None,
    }
}

/// The `count` squares of a square series.
pub fn series(plan: &LayoutPlan, name: &str) -> Option<Vec<Square>> {
    match plan.landmarks.get(name)? {
        Landmark::Series { first, pitch, count } => {
            Some((0..*count as u32).map(|t| Square::new(first.col + pitch * t, first.row)).collect())
        }
        _ => None,
    }
}

pub fn wall_series(plan: &LayoutPlan, name: &str) -> Option<Vec<WallSlot>> {
    match plan.landmarks.get(name)? {
        Landmark::WallSeries { first, pitch, count } => {
            Some((0..*count as u32).map(|t| WallSlot::new(first.orientation, first.x + pitch * t, first.y)).collect())
        }
        _ => None,
    }
}

/// The formula a plan was laid out for.
pub fn formula(plan: &LayoutPlan) -> Option<Formula> {
    let clauses = plan.clauses.iter().map(|c| c.iter().copied().collect::<BTreeSet<u32>>()).collect();
    Formula::new(plan.v, clauses).ok()
}

/// (clause, variable) pairs, 1-based, carrying a side-path landmark.
pub fn side_paths(plan: &LayoutPlan) -> BTreeSet<(u32, u32)> {
    plan.landmarks
        .keys()
        .filter_map(|k| k.strip_prefix("6.side_path["))
        .filter_map(|rest| {
            let (ci, rest) = rest.split_once("][")?;
            let vj = rest.strip_suffix(']')?;
            Some((ci.parse().ok()?, vj.parse().ok()?))
        })
        .collect()
}
