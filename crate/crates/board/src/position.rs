use crate::error::{IllegalMove, ValidationError};
use crate::geometry::{Dir, Square, WallSlot};
use crate::path::{self, step_blocked, Distance, WallLookup, WithSlot};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    White,
    Black,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::White => Player::Black,
            Player::Black => Player::White,
        }
    }

    /// Goal row on an `n`-sided board: north for White, south for Black.
    pub fn goal_row(self, n: u32) -> u32 {
        match self {
            Player::White => n - 1,
            Player::Black => 0,
        }
    }

    /// Direction of travel towards the goal.
    pub fn forward(self) -> Dir {
        match self {
            Player::White => Dir::North,
            Player::Black => Dir::South,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveRec {
    Pawn(Square),
    Wall(WallSlot),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Position {
    pub n: u32,
    pub white_pawn: Square,
    pub black_pawn: Square,
    pub walls: BTreeSet<WallSlot>,
    pub white_walls_left: u32,
    pub black_walls_left: u32,
    pub to_move: Player,
}

/// Geometric conflict of `slot` with an existing wall set (overlap or plus).
/// Path legality is not considered.
pub fn slot_conflict<W: WallLookup + ?Sized>(walls: &W, slot: WallSlot) -> Option<IllegalMove> {
    if walls.has(slot) || slot.overlapping().any(|o| walls.has(o)) {
        Some(IllegalMove::Overlap)
    } else if walls.has(slot.crossing()) {
        Some(IllegalMove::Plus)
    } else {
        None
    }
}

/// Pawn destinations for a pawn on `me` with the opponent on `them`.
pub fn pawn_moves_from<W: WallLookup + ?Sized>(walls: &W, n: u32, me: Square, them: Square) -> Vec<Square> {
    let mut out = Vec::with_capacity(5);
    for d in Dir::ALL {
        if step_blocked(walls, me, d) {
            continue;
        }
        let Some(next) = me.step(d, n) else { continue };
        if next != them {
            out.push(next);
            continue;
        }
        match them.step(d, n).filter(|_| !step_blocked(walls, them, d)) {
            Some(jump) => out.push(jump),
            None => {
                for side in d.sides() {
                    if !step_blocked(walls, them, side) {
                        if let Some(s) = them.step(side, n) {
                            out.push(s);
                        }
                    }
                }
            }
        }
    }
    out
}

impl Position {
    /// Pawns on the middle of their home rows, White to move.
    pub fn start(n: u32, walls_each: u32) -> Position {
        Position {
            n,
            white_pawn: Square::new(n / 2, 0),
            black_pawn: Square::new(n / 2, n - 1),
            walls: BTreeSet::new(),
            white_walls_left: walls_each,
            black_walls_left: walls_each,
            to_move: Player::White,
        }
    }

    pub fn pawn(&self, p: Player) -> Square {
        match p {
            Player::White => self.white_pawn,
            Player::Black => self.black_pawn,
        }
    }

    pub fn walls_left(&self, p: Player) -> u32 {
        match p {
            Player::White => self.white_walls_left,
            Player::Black => self.black_walls_left,
        }
    }

    /// The player whose pawn stands on its goal row, if any. White is
    /// checked first; legal play never produces both.
    pub fn winner(&self) -> Option<Player> {
        if self.white_pawn.row == Player::White.goal_row(self.n) {
            Some(Player::White)
        } else if self.black_pawn.row == Player::Black.goal_row(self.n) {
            Some(Player::Black)
        } else {
            None
        }
    }

    pub fn has_victory_path(&self, p: Player) -> bool {
        self.shortest_victory_distance(p) != Distance::Unreachable
    }

    pub fn shortest_victory_distance(&self, p: Player) -> Distance {
        path::shortest_victory_distance(&self.walls, self.n, self.pawn(p), p.goal_row(self.n))
    }

    /// Checks every stored-position invariant.
    pub fn validate(&self) -> Result<(), ValidationError> {
        if self.n < 2 {
            return Err(ValidationError::BoardTooSmall(self.n));
        }
        for p in [Player::White, Player::Black] {
            if !self.pawn(p).in_bounds(self.n) {
                return Err(ValidationError::PawnOffBoard(p));
            }
        }
        if self.white_pawn == self.black_pawn {
            return Err(ValidationError::PawnsCoincide);
        }
        for &w in &self.walls {
            if !w.in_bounds(self.n) {
                return Err(ValidationError::WallOutOfRange(w));
            }
            if let Some(o) = w.overlapping().find(|o| self.walls.contains(o)) {
                return Err(ValidationError::Overlap(w.min(o), w.max(o)));
            }
            if self.walls.contains(&w.crossing()) {
                return Err(ValidationError::Plus(w.x, w.y));
            }
        }
        for p in [Player::White, Player::Black] {
            if !self.has_victory_path(p) {
                return Err(ValidationError::Sealed(p));
            }
        }
        Ok(())
    }

    /// Legal pawn destinations for the side to move.
    pub fn pawn_moves(&self) -> Vec<Square> {
        pawn_moves_from(&self.walls, self.n, self.pawn(self.to_move), self.pawn(self.to_move.other()))
    }

    /// Why `slot` cannot be placed by the side to move, if it cannot.
    pub fn wall_error(&self, slot: WallSlot) -> Option<IllegalMove> {
        if self.walls_left(self.to_move) == 0 {
            return Some(IllegalMove::NoBudget);
        }
        self.slot_error(slot)
    }

    /// Like [`Position::wall_error`] but ignoring the mover's budget.
    pub fn slot_error(&self, slot: WallSlot) -> Option<IllegalMove> {
        if !slot.in_bounds(self.n) {
            return Some(IllegalMove::OffBoard);
        }
        if let Some(e) = slot_conflict(&self.walls, slot) {
            return Some(e);
        }
        let trial = WithSlot(&self.walls, slot);
        for p in [Player::White, Player::Black] {
            let d = path::shortest_victory_distance(&trial, self.n, self.pawn(p), p.goal_row(self.n));
            if d == Distance::Unreachable {
                return Some(IllegalMove::PathSealing);
            }
        }
        None
    }

    /// Legal wall placements for the side to move, in canonical order.
    pub fn wall_placements(&self) -> Vec<WallSlot> {
        if self.walls_left(self.to_move) == 0 {
            return Vec::new();
        }
        WallSlot::all(self.n).filter(|&s| self.slot_error(s).is_none()).collect()
    }

    pub fn legal_moves(&self) -> Vec<MoveRec> {
        let mut out: Vec<MoveRec> = self.pawn_moves().into_iter().map(MoveRec::Pawn).collect();
        out.extend(self.wall_placements().into_iter().map(MoveRec::Wall));
        out
    }

    fn pawn_error(&self, target: Square) -> IllegalMove {
        let me = self.pawn(self.to_move);
        if !target.in_bounds(self.n) {
            return IllegalMove::OffBoard;
        }
        match me.dir_to(target) {
            Some(d) if step_blocked(&self.walls, me, d) => IllegalMove::WallBlocked,
            _ => IllegalMove::NotAPawnMove,
        }
    }

    pub fn apply(&self, m: MoveRec) -> Result<Position, IllegalMove> {
        if self.winner().is_some() {
            return Err(IllegalMove::GameOver);
        }
        let mut next = self.clone();
        match m {
            MoveRec::Pawn(target) => {
                if !self.pawn_moves().contains(&target) {
                    return Err(self.pawn_error(target));
                }
                match self.to_move {
                    Player::White => next.white_pawn = target,
                    Player::Black => next.black_pawn = target,
                }
            }
            MoveRec::Wall(slot) => {
                if let Some(e) = self.wall_error(slot) {
                    return Err(e);
                }
                next.walls.insert(slot);
                match self.to_move {
                    Player::White => next.white_walls_left -= 1,
                    Player::Black => next.black_walls_left -= 1,
                }
            }
        }
        next.to_move = self.to_move.other();
        Ok(next)
    }
}
