//! Compiles a positive CNF formula into a Quoridor position whose winner
//! matches the winner of the formula game.

pub mod cell;
pub mod compile;
pub mod draw;
pub mod plan;
pub mod race;

pub use compile::{board_channel, compile, CompileError};
pub use plan::{plan_layout, Crop, Frame, Landmark, Layout, LayoutPlan, ScaleConfig, ScaleMode};
pub use race::{check_inequalities, Inequality, InequalityReport, Relation};
