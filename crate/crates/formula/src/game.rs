use crate::Formula;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    I,
    II,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::I => Side::II,
            Side::II => Side::I,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::I => "I",
            Side::II => "II",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Winner {
    IWins,
    IIWins,
}

impl Winner {
    pub fn side(self) -> Side {
        match self {
            Winner::IWins => Side::I,
            Winner::IIWins => Side::II,
        }
    }

    fn of(side: Side) -> Winner {
        match side {
            Side::I => Winner::IWins,
            Side::II => Winner::IIWins,
        }
    }
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} wins", self.side())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decided {
    IWinsAlready,
    IIWinsAlready,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaState {
    pub formula: Formula,
    pub chosen_true: BTreeSet<u32>,
    pub chosen_false: BTreeSet<u32>,
    pub to_move: Side,
}

impl FormulaState {
    pub fn new(formula: Formula, first: Side) -> FormulaState {
        FormulaState {
            formula,
            chosen_true: BTreeSet::new(),
            chosen_false: BTreeSet::new(),
            to_move: first,
        }
    }
}

pub fn is_decided(state: &FormulaState) -> Decided {
    let clauses = &state.formula.clauses;
    if clauses.iter().any(|cl| cl.is_subset(&state.chosen_false)) {
        Decided::IIWinsAlready
    } else if clauses.iter().all(|cl| !cl.is_disjoint(&state.chosen_true)) {
        Decided::IWinsAlready
    } else {
        Decided::Undecided
    }
}

/// Player II names a clause, Player I names a variable inside it; I wins
/// when that variable is true. Variables outside `chosen_true` are false.
pub fn endphase_winner(f: &Formula, chosen_true: &BTreeSet<u32>) -> Winner {
    let i_wins_clause = |cl: &BTreeSet<u32>| cl.iter().any(|x| chosen_true.contains(x));
    if f.clauses.iter().all(i_wins_clause) {
        Winner::IWins
    } else {
        Winner::IIWins
    }
}

/// Bitmask view of a formula for the search.
struct Masks {
    clauses: Vec<u64>,
    all: u64,
}

impl Masks {
    fn new(f: &Formula) -> Masks {
        assert!(f.v <= 64, "search supports at most 64 variables");
        let bit = |x: u32| 1u64 << (x - 1);
        Masks {
            clauses: f.clauses.iter().map(|cl| cl.iter().fold(0, |m, &x| m | bit(x))).collect(),
            all: if f.v == 64 { u64::MAX } else { (1u64 << f.v) - 1 },
        }
    }

    fn decided(&self, t: u64, fl: u64) -> Decided {
        if self.clauses.iter().any(|&c| c & !fl == 0) {
            Decided::IIWinsAlready
        } else if self.clauses.iter().all(|&c| c & t != 0) {
            Decided::IWinsAlready
        } else {
            Decided::Undecided
        }
    }
}

struct Search<'a> {
    formula: &'a Formula,
    masks: &'a Masks,
    early_stop: bool,
    memo: HashMap<(u64, u64), Winner>,
}

impl Search<'_> {
    fn value(&mut self, t: u64, fl: u64, mover: Side) -> Winner {
        let free = self.masks.all & !(t | fl);
        if free == 0 && !self.early_stop {
            let chosen_true = (1..=self.formula.v).filter(|x| t >> (x - 1) & 1 == 1).collect();
            return endphase_winner(self.formula, &chosen_true);
        }
        if self.early_stop || free == 0 {
            match self.masks.decided(t, fl) {
                Decided::IWinsAlready => return Winner::IWins,
                Decided::IIWinsAlready => return Winner::IIWins,
                Decided::Undecided => {}
            }
        }
        if let Some(&w) = self.memo.get(&(t, fl)) {
            return w;
        }
        let mut result = Winner::of(mover.other());
        let mut rest = free;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            let (nt, nf) = match mover {
                Side::I => (t | bit, fl),
                Side::II => (t, fl | bit),
            };
            if self.value(nt, nf, mover.other()) == Winner::of(mover) {
                result = Winner::of(mover);
                break;
            }
        }
        self.memo.insert((t, fl), result);
        result
    }
}

fn run(f: &Formula, first: Side, early_stop: bool) -> Winner {
    let masks = Masks::new(f);
    let mut s = Search { formula: f, masks: &masks, early_stop, memo: HashMap::new() };
    s.value(0, 0, first)
}

/// Exact value of the claiming game, stopping as soon as the outcome is fixed.
pub fn gpos_solve(f: &Formula, first: Side) -> Winner {
    run(f, first, true)
}

/// Same game, but every variable is claimed first and the result is then
/// judged by the clause-then-variable endphase.
pub fn gpos_solve_exhaustive(f: &Formula, first: Side) -> Winner {
    run(f, first, false)
}

/// One optimal line of play, taking the smallest optimal variable at each
/// turn, until the outcome is fixed.
pub fn principal_line(f: &Formula, first: Side) -> (Winner, Vec<(Side, u32)>) {
    let masks = Masks::new(f);
    let mut s = Search { formula: f, masks: &masks, early_stop: true, memo: HashMap::new() };
    let value = s.value(0, 0, first);
    let (mut t, mut fl, mut mover) = (0u64, 0u64, first);
    let mut line = Vec::new();
    while masks.decided(t, fl) == Decided::Undecided {
        let free = masks.all & !(t | fl);
        let pick = (0..f.v)
            .filter(|&i| free >> i & 1 == 1)
            .find(|&i| {
                let bit = 1u64 << i;
                let (nt, nf) = match mover {
                    Side::I => (t | bit, fl),
                    Side::II => (t, fl | bit),
                };
                s.value(nt, nf, mover.other()) == value
            })
            .expect("an undecided position has a value-preserving move");
        let bit = 1u64 << pick;
        match mover {
            Side::I => t |= bit,
            Side::II => fl |= bit,
        }
        line.push((mover, pick + 1));
        mover = mover.other();
    }
    (value, line)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn state(t: &[u32], f: &[u32]) -> FormulaState {
        FormulaState {
            formula: Formula::example(),
            chosen_true: t.iter().copied().collect(),
            chosen_false: f.iter().copied().collect(),
            to_move: Side::I,
        }
    }

    #[test]
    fn decided_examples() {
        assert_eq!(is_decided(&state(&[], &[1])), Decided::IIWinsAlready);
        assert_eq!(is_decided(&state(&[1, 2], &[])), Decided::IWinsAlready);
        assert_eq!(is_decided(&state(&[1], &[])), Decided::Undecided);
    }

    #[test]
    fn example_is_a_win_for_ii() {
        assert_eq!(gpos_solve(&Formula::example(), Side::I), Winner::IIWins);
        assert_eq!(Winner::IIWins.to_string(), "II wins");
    }

    #[test]
    fn tiny_formulas() {
        let single = Formula::new(1, vec![BTreeSet::from([1])]).unwrap();
        assert_eq!(gpos_solve(&single, Side::I), Winner::IWins);
        let conj = Formula::new(2, vec![BTreeSet::from([1]), BTreeSet::from([2])]).unwrap();
        assert_eq!(gpos_solve(&conj, Side::I), Winner::IIWins);
    }

    #[test]
    fn endphase_examples() {
        let f = Formula::example();
        assert_eq!(endphase_winner(&f, &BTreeSet::from([2, 1])), Winner::IWins);
        assert_eq!(endphase_winner(&f, &BTreeSet::from([1, 3])), Winner::IIWins);
        assert_eq!(endphase_winner(&f, &BTreeSet::new()), Winner::IIWins);
    }

    #[test]
    fn line_for_example() {
        let (w, line) = principal_line(&Formula::example(), Side::I);
        assert_eq!(w, Winner::IIWins);
        // I loses whatever it does, so always takes the smallest variable
        assert_eq!(line, vec![(Side::I, 1), (Side::II, 2), (Side::I, 3), (Side::II, 4)]);
    }
}
