//! Positive CNF formulas and the two-player claiming game on them.
//!
//! Player I claims variables that become true, Player II claims variables
//! that become false. Player I wins when every clause ends up containing a
//! true variable.

mod game;
mod pcnf;

pub use game::{
    endphase_winner, gpos_solve, gpos_solve_exhaustive, is_decided, principal_line, Decided,
    FormulaState, Side, Winner,
};
pub use pcnf::{parse_formula, to_pcnf, FormulaError};

use serde::Serialize;
use std::collections::BTreeSet;

/// A conjunction of clauses, each a non-empty set of 1-based variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Formula {
    pub v: u32,
    pub clauses: Vec<BTreeSet<u32>>,
}

impl Formula {
    /// Builds a formula, checking that clauses are non-empty and in range.
    pub fn new(v: u32, clauses: Vec<BTreeSet<u32>>) -> Result<Formula, FormulaError> {
        for (i, cl) in clauses.iter().enumerate() {
            if cl.is_empty() {
                return Err(FormulaError::EmptyClause(i + 1));
            }
            if let Some(&bad) = cl.iter().find(|&&x| x == 0 || x > v) {
                return Err(FormulaError::VariableOutOfRange { var: bad, v });
            }
        }
        Ok(Formula { v, clauses })
    }

    pub fn c(&self) -> usize {
        self.clauses.len()
    }

    /// Every `(clause, variable)` membership, 1-based, in order.
    pub fn memberships(&self) -> Vec<(usize, u32)> {
        self.clauses
            .iter()
            .enumerate()
            .flat_map(|(i, cl)| cl.iter().map(move |&x| (i + 1, x)))
            .collect()
    }

    /// The formula `x ∧ (y ∨ z) ∧ (y ∨ w)` with x, y, z, w numbered 1 to 4.
    pub fn example() -> Formula {
        Formula::new(
            4,
            vec![BTreeSet::from([1]), BTreeSet::from([2, 3]), BTreeSet::from([2, 4])],
        )
        .unwrap()
    }
}

/// Every formula with exactly `v` variables and `c` clauses, taking clauses
/// as a multiset: clause bitmasks appear in non-decreasing order.
pub fn canonical_formulas(v: u32, c: usize) -> impl Iterator<Item = Formula> {
    assert!(v <= 16, "enumeration is meant for tiny formulas");
    let top = (1u32 << v) - 1;
    let mut masks: Vec<u32> = vec![1; c];
    let mut done = c == 0 || v == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let clauses = masks
            .iter()
            .map(|&m| (1..=v).filter(|x| m >> (x - 1) & 1 == 1).collect())
            .collect();
        // advance to the next non-decreasing sequence
        match (0..c).rev().find(|&i| masks[i] < top) {
            Some(i) => {
                let next = masks[i] + 1;
                masks[i..].iter_mut().for_each(|m| *m = next);
            }
            None => done = true,
        }
        Some(Formula { v, clauses })
    })
}
