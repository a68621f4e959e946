use formula::Formula;
use proptest::prelude::*;
use reduction::{check_inequalities, plan_layout, ScaleConfig};
use std::collections::BTreeSet;

fn formulas(max_v: u32, max_c: usize) -> impl Strategy<Value = Formula> {
    (1..=max_v).prop_flat_map(move |v| {
        let clause = proptest::collection::btree_set(1..=v, 1..=v as usize);
        proptest::collection::vec(clause, 1..=max_c).prop_map(move |cs| Formula::new(v, cs).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn side_paths_biject_with_memberships(f in formulas(5, 4)) {
        let plan = plan_layout(&f, ScaleConfig::faithful());
        let planned: BTreeSet<String> = plan.landmarks.keys().filter(|k| k.starts_with("6.side_path[")).cloned().collect();
        let expected: BTreeSet<String> = f.memberships().iter().map(|(i, j)| format!("6.side_path[{i}][{j}]")).collect();
        prop_assert_eq!(planned, expected);
    }

    #[test]
    fn faithful_plans_pass_the_race_arithmetic(f in formulas(5, 4)) {
        let report = check_inequalities(&plan_layout(&f, ScaleConfig::faithful()));
        prop_assert!(report.all_pass(), "{}", report);
    }

    #[test]
    fn board_side_is_polynomial(f in formulas(6, 5)) {
        let plan = plan_layout(&f, ScaleConfig::faithful());
        let (v, c) = (u64::from(plan.v), u64::from(plan.c));
        // cells are at most linear in v; the maze is c by v cells
        let side = 160 + 40 * v;
        prop_assert!(u64::from(plan.cell.width) <= side && u64::from(plan.cell.height) <= side);
        prop_assert!(plan.n <= 40 * (c * side + 9) * (v * side + 9));
    }
}
