//! Reference solver: build the full reachable state graph and run a plain
//! retrograde pass over it. Slow, but simple enough to trust.

use crate::value::{Outcome, Val};
use crate::SolveError;
use board::{pawn_moves_from, slot_conflict, squares_reaching_row, Player, Position, Square, WallSlot};
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct State {
    white: Square,
    black: Square,
    walls: usize,
    white_left: u32,
    black_left: u32,
    to_move: Player,
}

/// A reachable wall set and the squares still connected to White's and
/// Black's goal rows once it is in place.
type WallOption = (usize, HashSet<Square>, HashSet<Square>);

/// Per wall set: every geometrically free slot, the wall set it leads to,
/// and the squares that keep a path to each goal once it is placed.
struct WallSets {
    n: u32,
    sets: Vec<BTreeSet<WallSlot>>,
    ids: HashMap<BTreeSet<WallSlot>, usize>,
    options: HashMap<usize, Vec<WallOption>>,
}

impl WallSets {
    fn intern(&mut self, set: BTreeSet<WallSlot>) -> usize {
        if let Some(&id) = self.ids.get(&set) {
            return id;
        }
        self.sets.push(set.clone());
        self.ids.insert(set, self.sets.len() - 1);
        self.sets.len() - 1
    }

    fn options(&mut self, id: usize) -> &[WallOption] {
        if !self.options.contains_key(&id) {
            let n = self.n;
            let base = self.sets[id].clone();
            let mut out = Vec::new();
            for w in WallSlot::all(n) {
                if slot_conflict(&base, w).is_some() {
                    continue;
                }
                let mut next = base.clone();
                next.insert(w);
                let white_ok = squares_reaching_row(&next, n, n - 1);
                let black_ok = squares_reaching_row(&next, n, 0);
                let nid = self.intern(next);
                out.push((nid, white_ok, black_ok));
            }
            self.options.insert(id, out);
        }
        &self.options[&id]
    }
}

fn winner(n: u32, s: &State) -> Option<Player> {
    if s.white.row == n - 1 {
        Some(Player::White)
    } else if s.black.row == 0 {
        Some(Player::Black)
    } else {
        None
    }
}

fn successors(ws: &mut WallSets, s: &State) -> Vec<State> {
    let n = ws.n;
    let (me, them) = match s.to_move {
        Player::White => (s.white, s.black),
        Player::Black => (s.black, s.white),
    };
    let mut out = Vec::new();
    let flip = Player::other(s.to_move);
    for dest in pawn_moves_from(&ws.sets[s.walls], n, me, them) {
        let mut t = *s;
        match s.to_move {
            Player::White => t.white = dest,
            Player::Black => t.black = dest,
        }
        t.to_move = flip;
        out.push(t);
    }
    let budget = match s.to_move {
        Player::White => s.white_left,
        Player::Black => s.black_left,
    };
    if budget > 0 {
        for (nid, white_ok, black_ok) in ws.options(s.walls) {
            if white_ok.contains(&s.white) && black_ok.contains(&s.black) {
                let mut t = *s;
                t.walls = *nid;
                match s.to_move {
                    Player::White => t.white_left -= 1,
                    Player::Black => t.black_left -= 1,
                }
                t.to_move = flip;
                out.push(t);
            }
        }
    }
    if out.is_empty() {
        // nothing to do: the turn passes
        let mut t = *s;
        t.to_move = flip;
        out.push(t);
    }
    out
}

/// Exact outcome of one position by full-graph retrograde analysis.
pub fn solve_naive(pos: &Position, max_states: Option<u64>) -> Result<Outcome, SolveError> {
    Ok(solve_naive_batch(std::slice::from_ref(pos), max_states)?[0])
}

/// Solves several same-size positions over one shared state graph. A state's
/// value does not depend on where play started, so sharing is exact.
pub fn solve_naive_batch(roots: &[Position], max_states: Option<u64>) -> Result<Vec<Outcome>, SolveError> {
    let Some(first) = roots.first() else { return Ok(Vec::new()) };
    let n = first.n;
    let mut ws = WallSets { n, sets: Vec::new(), ids: HashMap::new(), options: HashMap::new() };
    let mut index: HashMap<State, usize> = HashMap::new();
    let mut states: Vec<State> = Vec::new();
    let mut root_ids = Vec::new();
    for r in roots {
        assert_eq!(r.n, n, "batch positions must share a board size");
        r.validate()?;
        let s = State {
            white: r.white_pawn,
            black: r.black_pawn,
            walls: ws.intern(r.walls.clone()),
            white_left: r.white_walls_left,
            black_left: r.black_walls_left,
            to_move: r.to_move,
        };
        let id = *index.entry(s).or_insert_with(|| {
            states.push(s);
            states.len() - 1
        });
        root_ids.push(id);
    }

    // forward expansion
    let mut succ: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < states.len() {
        if let Some(limit) = max_states {
            if states.len() as u64 > limit {
                return Err(SolveError::ResourceLimit { what: "oracle states", limit });
            }
        }
        let s = states[i];
        let mut ids = Vec::new();
        if winner(n, &s).is_none() {
            for t in successors(&mut ws, &s) {
                let id = *index.entry(t).or_insert_with(|| {
                    states.push(t);
                    states.len() - 1
                });
                ids.push(id);
            }
        }
        succ.push(ids);
        i += 1;
    }

    // backward propagation in order of increasing depth
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); states.len()];
    for (from, ts) in succ.iter().enumerate() {
        for &t in ts {
            preds[t].push(from);
        }
    }
    let mut pending: Vec<usize> = succ.iter().map(Vec::len).collect();
    let mut value: Vec<Option<Val>> = vec![None; states.len()];
    let mut queue = VecDeque::new();
    for (id, s) in states.iter().enumerate() {
        if let Some(w) = winner(n, s) {
            value[id] = Some(if w == s.to_move { Val::Win(0) } else { Val::Loss(0) });
            queue.push_back(id);
        }
    }
    while let Some(id) = queue.pop_front() {
        let v = value[id].unwrap();
        for &p in &preds[id] {
            if value[p].is_some() {
                continue;
            }
            match v {
                Val::Loss(d) => {
                    value[p] = Some(Val::Win(d + 1));
                    queue.push_back(p);
                }
                Val::Win(d) => {
                    pending[p] -= 1;
                    if pending[p] == 0 {
                        value[p] = Some(Val::Loss(d + 1));
                        queue.push_back(p);
                    }
                }
                Val::Draw => unreachable!(),
            }
        }
    }

    Ok(root_ids
        .into_iter()
        .map(|id| Outcome::from_val(value[id].unwrap_or(Val::Draw), states[id].to_move))
        .collect())
}
