//! Exact solving of small Quoridor positions.
//!
//! Positions where neither side can force a win are reported as
//! [`Outcome::NoForcedWin`]. Two independent algorithms are provided: the
//! epoch search in [`solve`], and [`solve_naive`], a plain retrograde pass over
//! the whole reachable state graph, kept as a cross-check.

mod epoch;
mod naive;
mod value;

pub use epoch::{solve, solve_with, SearchStats, SolveConfig, Solver};
pub use naive::{solve_naive, solve_naive_batch};
pub use value::Outcome;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("resource limit: {what} exceeded {limit}")]
    ResourceLimit { what: &'static str, limit: u64 },
    #[error("invalid position: {0}")]
    Invalid(#[from] board::ValidationError),
}

/// True when White can force a win from `pos`.
pub fn white_wins(pos: &board::Position) -> Result<bool, SolveError> {
    Ok(matches!(solve(pos)?.0, Outcome::WhiteWin(_)))
}
