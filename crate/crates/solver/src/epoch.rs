//! Search organised by wall epochs.
//!
//! Walls are never removed, so the set of placed walls (together with the
//! two budgets) only grows. Every stretch of play between two wall
//! placements happens inside one such epoch, where only the pawns move.
//! Epochs form a DAG and are solved leaves first.
//!
//! Inside an epoch we store one value per White-to-move pawn pair, so no
//! more than n^2 * (n^2 - 1) < n^4 positions are kept per epoch. Values are
//! settled in order of increasing distance to the win. A White win of depth
//! d is only ever derived from a strictly shallower value, so no winning line
//! passes through the same White-to-move position twice: White repetitions
//! are pruned by construction. Positions never settled this way are the ones
//! where optimal play cycles, and they are reported as no forced win.

use crate::value::{Outcome, Val};
use crate::SolveError;
use board::{pawn_moves_from, slot_conflict, squares_reaching_row, Player, Position, Square, WallSlot};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

#[derive(Debug, Clone, Default)]
pub struct SolveConfig {
    /// Abort with a resource-limit error after this many node evaluations.
    pub max_nodes: Option<u64>,
    /// Shuffle evaluation and move order with this seed. Only speed may change.
    pub shuffle_seed: Option<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub memo_hits: u64,
    /// Largest number of positions stored for any single epoch.
    pub peak_epoch_positions: u64,
    pub epochs: u64,
    /// Longest forced line (in plies) among all settled positions.
    pub max_plies: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct EpochKey {
    walls: Vec<WallSlot>,
    white_left: u32,
    black_left: u32,
}

struct Slot {
    wall: WallSlot,
    /// Squares that still reach White's (resp. Black's) goal with this wall added.
    white_ok: Vec<bool>,
    black_ok: Vec<bool>,
}

struct Table {
    walls: BTreeSet<WallSlot>,
    slots: Vec<Slot>,
    white_children: Vec<Rc<Table>>,
    black_children: Vec<Rc<Table>>,
    /// Value of each White-to-move pawn pair, from White's side.
    white: Vec<Val>,
}

pub struct Solver {
    n: u32,
    cfg: SolveConfig,
    tables: HashMap<EpochKey, Rc<Table>>,
    stats: SearchStats,
    rng: Option<StdRng>,
}

/// Solves `pos` with default settings.
pub fn solve(pos: &Position) -> Result<(Outcome, SearchStats), SolveError> {
    solve_with(pos, &SolveConfig::default())
}

pub fn solve_with(pos: &Position, cfg: &SolveConfig) -> Result<(Outcome, SearchStats), SolveError> {
    let mut s = Solver::new(pos.n, cfg.clone());
    let out = s.solve(pos)?;
    Ok((out, s.stats))
}

struct Board {
    n: u32,
    n2: usize,
}

impl Board {
    fn idx(&self, s: Square) -> usize {
        (s.row * self.n + s.col) as usize
    }
    fn sq(&self, i: usize) -> Square {
        Square::new(i as u32 % self.n, i as u32 / self.n)
    }
    fn pair(&self, w: usize, b: usize) -> usize {
        w * self.n2 + b
    }
    fn split(&self, p: usize) -> (Square, Square) {
        (self.sq(p / self.n2), self.sq(p % self.n2))
    }
    /// Value of a terminal position for the side to move, if it is terminal.
    fn terminal(&self, p: usize, mover: Player) -> Option<Val> {
        let (w, b) = self.split(p);
        let winner = if w.row == self.n - 1 {
            Player::White
        } else if b.row == 0 {
            Player::Black
        } else {
            return None;
        };
        Some(if winner == mover { Val::Win(0) } else { Val::Loss(0) })
    }
}

/// Collapses the options of one node. With every option known the result is
/// exact. Otherwise only a win no deeper than `limit` is trusted.
fn decide(opts: &[Option<Val>], limit: u32) -> Option<Val> {
    let mut best: Option<Val> = None;
    let mut quickest_win: Option<u32> = None;
    let mut all_known = true;
    for o in opts {
        match *o {
            None => all_known = false,
            Some(v) => {
                best = Some(best.map_or(v, |b| Val::best(b, v)));
                if let Val::Win(d) = v {
                    quickest_win = Some(quickest_win.map_or(d, |q| q.min(d)));
                }
            }
        }
    }
    if all_known {
        return best;
    }
    quickest_win.filter(|&d| d <= limit).map(Val::Win)
}

impl Solver {
    pub fn new(n: u32, cfg: SolveConfig) -> Solver {
        let rng = cfg.shuffle_seed.map(StdRng::seed_from_u64);
        Solver { n, cfg, tables: HashMap::new(), stats: SearchStats::default(), rng }
    }

    pub fn stats(&self) -> &SearchStats {
        &self.stats
    }

    /// Exact outcome of `pos`. Epoch tables are kept between calls, so
    /// solving many positions on one board size shares work.
    pub fn solve(&mut self, pos: &Position) -> Result<Outcome, SolveError> {
        assert_eq!(pos.n, self.n, "solver was built for another board size");
        pos.validate()?;
        let key = EpochKey {
            walls: pos.walls.iter().copied().collect(),
            white_left: pos.white_walls_left,
            black_left: pos.black_walls_left,
        };
        let table = self.table(key)?;
        let bd = Board { n: self.n, n2: (self.n * self.n) as usize };
        let p = bd.pair(bd.idx(pos.white_pawn), bd.idx(pos.black_pawn));
        let v = match pos.to_move {
            Player::White => table.white[p],
            Player::Black => black_value(&bd, &table, p),
        };
        Ok(Outcome::from_val(v, pos.to_move))
    }

    fn bump(&mut self) -> Result<(), SolveError> {
        self.stats.nodes += 1;
        match self.cfg.max_nodes {
            Some(limit) if self.stats.nodes > limit => {
                Err(SolveError::ResourceLimit { what: "search nodes", limit })
            }
            _ => Ok(()),
        }
    }

    fn table(&mut self, key: EpochKey) -> Result<Rc<Table>, SolveError> {
        if let Some(t) = self.tables.get(&key) {
            self.stats.memo_hits += 1;
            return Ok(t.clone());
        }
        let n = self.n;
        let bd = Board { n, n2: (n * n) as usize };
        let walls: BTreeSet<WallSlot> = key.walls.iter().copied().collect();

        let mut slots = Vec::new();
        if key.white_left > 0 || key.black_left > 0 {
            for wall in WallSlot::all(n) {
                if slot_conflict(&walls, wall).is_some() {
                    continue;
                }
                let mut trial = walls.clone();
                trial.insert(wall);
                let to_vec = |set: std::collections::HashSet<Square>| {
                    let mut v = vec![false; bd.n2];
                    for s in set {
                        v[bd.idx(s)] = true;
                    }
                    v
                };
                let white_ok = to_vec(squares_reaching_row(&trial, n, n - 1));
                let black_ok = to_vec(squares_reaching_row(&trial, n, 0));
                slots.push(Slot { wall, white_ok, black_ok });
            }
        }
        let child_keys = |dw: u32, db: u32| -> Vec<EpochKey> {
            slots
                .iter()
                .map(|s| {
                    let mut w = key.walls.clone();
                    w.push(s.wall);
                    w.sort();
                    EpochKey { walls: w, white_left: key.white_left - dw, black_left: key.black_left - db }
                })
                .collect()
        };
        let white_keys = if key.white_left > 0 { child_keys(1, 0) } else { Vec::new() };
        let black_keys = if key.black_left > 0 { child_keys(0, 1) } else { Vec::new() };
        let mut white_children = Vec::with_capacity(white_keys.len());
        for k in white_keys {
            white_children.push(self.table(k)?);
        }
        let mut black_children = Vec::with_capacity(black_keys.len());
        for k in black_keys {
            black_children.push(self.table(k)?);
        }

        let mut table = Table { walls, slots, white_children, black_children, white: Vec::new() };
        let pairs: Vec<usize> = (0..bd.n2 * bd.n2).filter(|&p| p / bd.n2 != p % bd.n2).collect();

        // best wall move for each side, read from already solved epochs
        let mut white_ext: Vec<Option<Val>> = vec![None; bd.n2 * bd.n2];
        let mut black_ext: Vec<Option<Val>> = vec![None; bd.n2 * bd.n2];
        let mut max_ext = 0;
        for &p in &pairs {
            if bd.terminal(p, Player::White).is_some() {
                continue;
            }
            let (wi, bi) = (p / bd.n2, p % bd.n2);
            for (slot, child) in table.slots.iter().zip(&table.white_children) {
                if slot.white_ok[wi] && slot.black_ok[bi] {
                    let v = black_value(&bd, child, p).through();
                    white_ext[p] = Some(white_ext[p].map_or(v, |e| Val::best(e, v)));
                }
            }
            for (slot, child) in table.slots.iter().zip(&table.black_children) {
                if slot.white_ok[wi] && slot.black_ok[bi] {
                    let v = child.white[p].through();
                    black_ext[p] = Some(black_ext[p].map_or(v, |e| Val::best(e, v)));
                }
            }
            for e in [white_ext[p], black_ext[p]].into_iter().flatten() {
                max_ext = max_ext.max(e.depth().unwrap_or(0));
            }
        }

        let mut white: Vec<Option<Val>> = vec![None; bd.n2 * bd.n2];
        let mut open = Vec::new();
        for &p in &pairs {
            match bd.terminal(p, Player::White) {
                Some(v) => white[p] = Some(v),
                None => open.push(p),
            }
        }
        if let Some(rng) = self.rng.as_mut() {
            open.shuffle(rng);
        }
        let white_moves: HashMap<usize, Vec<usize>> = open
            .iter()
            .map(|&p| {
                let (w, b) = bd.split(p);
                let mut m: Vec<usize> = pawn_moves_from(&table.walls, n, w, b).iter().map(|&s| bd.idx(s)).collect();
                if let Some(rng) = self.rng.as_mut() {
                    m.shuffle(rng);
                }
                (p, m)
            })
            .collect();
        let black_moves: HashMap<usize, Vec<usize>> = pairs
            .iter()
            .map(|&p| {
                let (w, b) = bd.split(p);
                (p, pawn_moves_from(&table.walls, n, b, w).iter().map(|&s| bd.idx(s)).collect())
            })
            .collect();

        let black_partial = |white: &[Option<Val>], p: usize, limit: u32| -> Option<Val> {
            let wi = p / bd.n2;
            let mut opts: Vec<Option<Val>> = black_moves[&p]
                .iter()
                .map(|&b2| {
                    if bd.sq(b2).row == 0 {
                        Some(Val::Win(1))
                    } else {
                        white[bd.pair(wi, b2)].map(Val::through)
                    }
                })
                .collect();
            opts.extend(black_ext[p].map(Some));
            if opts.is_empty() {
                opts.push(white[p].map(Val::through));
            }
            decide(&opts, limit)
        };

        let mut limit: u32 = 1;
        let mut deepest = 0;
        loop {
            let mut changed = false;
            for &p in &open {
                if white[p].is_some() {
                    continue;
                }
                self.bump()?;
                let bi = p % bd.n2;
                let mut opts: Vec<Option<Val>> = white_moves[&p]
                    .iter()
                    .map(|&w2| {
                        if bd.sq(w2).row == n - 1 {
                            Some(Val::Win(1))
                        } else {
                            black_partial(&white, bd.pair(w2, bi), limit - 1).map(Val::through)
                        }
                    })
                    .collect();
                opts.extend(white_ext[p].map(Some));
                if opts.is_empty() {
                    opts.push(black_partial(&white, p, limit - 1).map(Val::through));
                }
                if let Some(v) = decide(&opts, limit) {
                    deepest = deepest.max(v.depth().unwrap_or(0));
                    white[p] = Some(v);
                    changed = true;
                }
            }
            if !changed && limit >= deepest.max(max_ext) + 3 {
                break;
            }
            limit += 1;
        }

        table.white = white.into_iter().map(|v| v.unwrap_or(Val::Draw)).collect();
        self.stats.epochs += 1;
        self.stats.peak_epoch_positions = self.stats.peak_epoch_positions.max(pairs.len() as u64);
        self.stats.max_plies = self.stats.max_plies.max(deepest).max(max_ext);
        let table = Rc::new(table);
        self.tables.insert(key, table.clone());
        Ok(table)
    }
}

/// Final value of a Black-to-move pair inside a solved epoch, from Black's side.
fn black_value(bd: &Board, t: &Table, p: usize) -> Val {
    if let Some(v) = bd.terminal(p, Player::Black) {
        return v;
    }
    let (w, b) = bd.split(p);
    let wi = bd.idx(w);
    let mut best: Option<Val> = None;
    let mut take = |v: Val| best = Some(best.map_or(v, |x| Val::best(x, v)));
    for b2 in pawn_moves_from(&t.walls, bd.n, b, w) {
        take(if b2.row == 0 { Val::Win(1) } else { t.white[bd.pair(wi, bd.idx(b2))].through() });
    }
    let bi = bd.idx(b);
    for (slot, child) in t.slots.iter().zip(&t.black_children) {
        if slot.white_ok[wi] && slot.black_ok[bi] {
            take(child.white[p].through());
        }
    }
    best.unwrap_or_else(|| t.white[p].through())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(n: u32, w: (u32, u32), b: (u32, u32), to_move: Player) -> Position {
        Position {
            n,
            white_pawn: Square::new(w.0, w.1),
            black_pawn: Square::new(b.0, b.1),
            walls: BTreeSet::new(),
            white_walls_left: 0,
            black_walls_left: 0,
            to_move,
        }
    }

    #[test]
    fn one_step_from_goal() {
        let (o, _) = solve(&at(5, (2, 3), (0, 4), Player::White)).unwrap();
        assert_eq!(o, Outcome::WhiteWin(1));
    }

    #[test]
    fn pure_race() {
        // White needs 2 steps, Black needs 3, White to move
        let (o, _) = solve(&at(4, (0, 1), (3, 3), Player::White)).unwrap();
        assert_eq!(o, Outcome::WhiteWin(3));
    }

    #[test]
    fn decided_root() {
        let (o, _) = solve(&at(3, (1, 2), (0, 1), Player::Black)).unwrap();
        assert_eq!(o, Outcome::WhiteWin(0));
    }

    #[test]
    fn node_budget() {
        let mut p = at(4, (1, 0), (2, 3), Player::White);
        p.white_walls_left = 1;
        p.black_walls_left = 1;
        let cfg = SolveConfig { max_nodes: Some(10), shuffle_seed: None };
        assert!(matches!(solve_with(&p, &cfg), Err(SolveError::ResourceLimit { .. })));
    }
}
