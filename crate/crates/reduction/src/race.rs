//! The race arithmetic behind the construction, evaluated on a plan.

use crate::plan::LayoutPlan;
use gadgets::CLOSURE_ROW;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = ">")]
    Greater,
    #[serde(rename = "=")]
    Equal,
}

impl Relation {
    fn holds(self, lhs: u64, rhs: u64) -> bool {
        match self {
            Relation::Less => lhs < rhs,
            Relation::Greater => lhs > rhs,
            Relation::Equal => lhs == rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::Greater => ">",
            Relation::Equal => "=",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub name: String,
    /// What the two sides count, for the report.
    pub meaning: String,
    pub lhs: u64,
    pub relation: Relation,
    pub rhs: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub items: Vec<Inequality>,
}

impl InequalityReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Inequality> {
        self.items.iter().find(|i| i.name == name)
    }
}

impl fmt::Display for InequalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.items {
            let verdict = if i.pass { "pass" } else { "FAIL" };
            writeln!(f, "{verdict} {}: {} {} {} ({})", i.name, i.lhs, i.relation.symbol(), i.rhs, i.meaning)?;
        }
        Ok(())
    }
}

/// Evaluates every inequality the game analysis depends on.
pub fn check_inequalities(plan: &LayoutPlan) -> InequalityReport {
    let m = plan.m;
    let white_turns = plan.white_entry_walk + m + plan.white_exit_walk;
    // Walls White may spend during the formula stage.
    let stage_one = u64::from(plan.v.div_ceil(2));
    // Black, stopped just above a closure, walks back to the hub and down
    // the neighbouring corridor.
    let backtrack = 2 * plan.black_len - 2 * u64::from(CLOSURE_ROW) + 3;
    let black_exit = m + plan.black_approach;
    let mut items = Vec::new();
    let mut push = |name: &str, meaning: &str, lhs: u64, relation: Relation, rhs: u64| {
        items.push(Inequality {
            name: name.into(),
            meaning: meaning.into(),
            lhs,
            relation,
            rhs,
            pass: relation.holds(lhs, rhs),
        });
    };
    push("board_side", "board side against 40m", plan.n, Relation::Equal, 40 * m);
    push("white_entry", "White's walk into the maze against 3m", plan.white_entry_walk, Relation::Less, 3 * m);
    push("white_escape", "White's walk to her corridor's foot against 5m", white_turns, Relation::Less, 5 * m);
    push(
        "white_win_29m",
        "turn by which White wins after escaping, against 29m",
        stage_one + white_turns + plan.white_len,
        Relation::Less,
        29 * m,
    );
    push(
        "black_race_29m",
        "Black's closures plus approach and corridor, against 29m",
        plan.b.saturating_sub(1) + plan.black_approach + plan.black_len,
        Relation::Greater,
        29 * m,
    );
    push("gap_8m", "White's corridor minus Black's, against 8m", plan.white_len - plan.black_len, Relation::Equal, 8 * m);
    push(
        "black_exit_within_gap",
        "Black's walk out of the maze into a corridor, against the corridor gap",
        black_exit,
        Relation::Less,
        plan.white_len - plan.black_len,
    );
    push(
        "backtrack_32m",
        "Black's walk after a closure, against White's whole walk",
        backtrack,
        Relation::Greater,
        white_turns + plan.white_len,
    );
    push("l_exceeds_perimeter", "winding excess against the cell perimeter", u64::from(plan.l), Relation::Greater, u64::from(plan.cell.perimeter()));
    push("chamber_distance", "chamber access distance against the variable count", u64::from(plan.chamber_distance), Relation::Greater, u64::from(plan.v));
    push("chamber_corridors", "corridors per chamber against half the variables plus two", u64::from(plan.k), Relation::Equal, u64::from(plan.v.div_ceil(2) + 2));
    InequalityReport { items }
}
