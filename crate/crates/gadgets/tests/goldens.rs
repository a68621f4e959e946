//! Frozen wall layouts. Set `GADGET_GOLDENS=update` to rewrite them.

use gadgets::*;
use std::path::PathBuf;

fn fixtures() -> Vec<(&'static str, GadgetBlueprint)> {
    vec![
        ("corridor_5", build_corridor(5, Axis::Horizontal).unwrap()),
        ("cross_junction", build_cross_junction().unwrap()),
        ("t_junction_standard", build_t_junction_standard(0).unwrap()),
        ("t_junction_unblockable", build_t_junction_unblockable(0).unwrap()),
        ("elongator_4", build_elongator(4).unwrap()),
        ("winding_road_8_6", build_winding_road(8, 6).unwrap()),
        ("long_winding_road_8_6", build_long_winding_road(8, 6).unwrap()),
        ("truth_box", build_truth_box().unwrap()),
        ("victory_block_chamber", build_victory_block_chamber().unwrap()),
        ("chamber_4", build_chamber(4).unwrap()),
    ]
}

#[test]
fn blueprints_match_goldens() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("goldens");
    let update = std::env::var("GADGET_GOLDENS").is_ok_and(|v| v == "update");
    for (name, bp) in fixtures() {
        let path = dir.join(format!("{name}.qpos"));
        let text = bp.fragment();
        if update {
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{}: {e}; run with GADGET_GOLDENS=update", path.display()));
        assert_eq!(text, want, "{name} drifted from its golden");
    }
}
