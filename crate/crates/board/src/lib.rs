//! Rules engine for two-player Quoridor on an arbitrary n x n board.
//!
//! Squares are `(col, row)` with row 0 on the south edge. White starts
//! anywhere and races north to row `n - 1`; Black races south to row 0.

mod error;
mod geometry;
mod path;
mod position;
mod qpos;

pub use error::{IllegalMove, ParseError, ValidationError};
pub use geometry::{Dir, Orientation, Square, WallSlot};
pub use path::{
    distance_between, reachable_from, shortest_victory_distance, squares_reaching_row, step_blocked,
    Distance, WallLookup, WithSlot,
};
pub use position::{pawn_moves_from, slot_conflict, MoveRec, Player, Position};
pub use qpos::{parse, serialize, QposError};
