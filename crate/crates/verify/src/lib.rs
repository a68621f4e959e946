//! Executable checks of the construction's gadget and layout claims, run on
//! standalone gadgets, cropped regions and whole compiled positions.

mod distances;
mod grid;
mod junctions;
pub mod landmarks;
mod region;
mod report;
mod structure;
mod suite;
mod truth;
mod victory;

pub use distances::check_distances;
pub use grid::WallGrid;
pub use junctions::{check_railroading, check_unblockable, PLY_FACTOR};
pub use region::{distances_within, Region};
pub use report::{CheckReport, Recorder, Verdict, Witness};
pub use structure::check_structure;
pub use suite::{run_checks, truth_box_regions, CHECKS};
pub use truth::check_truth_box;
pub use victory::check_victory_blocks;
