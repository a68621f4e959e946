use crate::geometry::WallSlot;
use crate::position::Player;
use thiserror::Error;

/// Why a move was refused. The display form is the bare reason word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IllegalMove {
    #[error("off-board")]
    OffBoard,
    #[error("wall-blocked")]
    WallBlocked,
    #[error("not-a-pawn-move")]
    NotAPawnMove,
    #[error("overlap")]
    Overlap,
    #[error("plus")]
    Plus,
    #[error("path-sealing")]
    PathSealing,
    #[error("no-budget")]
    NoBudget,
    #[error("game-over")]
    GameOver,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("board side {0} is too small")]
    BoardTooSmall(u32),
    #[error("{0:?} pawn is off the board")]
    PawnOffBoard(Player),
    #[error("pawns share a square")]
    PawnsCoincide,
    #[error("wall {0} is outside the interior lattice")]
    WallOutOfRange(WallSlot),
    #[error("overlap: walls {0} and {1} share an edge")]
    Overlap(WallSlot, WallSlot),
    #[error("plus: walls cross at vertex ({0},{1})")]
    Plus(u32, u32),
    #[error("sealed: {0:?} has no path to its goal row")]
    Sealed(Player),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}
