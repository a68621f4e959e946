//! Wall structures for the Quoridor hardness construction.

mod audit;
mod blueprint;
mod builders;
mod channel;
mod synth;

pub use audit::{audit, slots_touching, AuditIssue};
pub use blueprint::{distances_in_box, place, GadgetBlueprint, GadgetError, PathMeta, PlaceError, Placement};
pub use builders::{
    build_chamber, build_corridor, build_cross_junction, build_elongator, build_long_winding_road,
    build_t_junction_standard, build_t_junction_unblockable, build_truth_box, build_victory_block_chamber,
    build_winding_road, road_height, truth_box_channel, Axis, ChamberShape, CHAMBER_PITCH, CHAMBER_SPAN, CLOSURE_ROW, RING, TRUTH_GATES,
};
pub use channel::{covered, link, slot_on, Channel, Edge, Link, Transform};
pub use synth::{parity_defects, synthesize, synthesize_partial, PartialWalls, SynthError};
