use serde::Serialize;
use std::fmt;

/// Game value from the point of view of the side to move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Val {
    Win(u32),
    Loss(u32),
    Draw,
}

impl Val {
    /// Value of a move into a position whose mover sees `self`.
    pub(crate) fn through(self) -> Val {
        match self {
            Val::Win(d) => Val::Loss(d + 1),
            Val::Loss(d) => Val::Win(d + 1),
            Val::Draw => Val::Draw,
        }
    }

    /// Larger is better for the mover: quick wins, then draws, then slow losses.
    fn rank(self) -> (u8, i64) {
        match self {
            Val::Win(d) => (2, -(d as i64)),
            Val::Draw => (1, 0),
            Val::Loss(d) => (0, d as i64),
        }
    }

    pub(crate) fn best(a: Val, b: Val) -> Val {
        if b.rank() > a.rank() {
            b
        } else {
            a
        }
    }

    pub(crate) fn depth(self) -> Option<u32> {
        match self {
            Val::Win(d) | Val::Loss(d) => Some(d),
            Val::Draw => None,
        }
    }
}

/// Exact result of a position under optimal play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Outcome {
    /// White forces a win; the count is plies until White reaches its goal.
    WhiteWin(u32),
    BlackWin(u32),
    /// Neither side can force a win, so best play repeats forever.
    NoForcedWin,
}

impl Outcome {
    pub(crate) fn from_val(v: Val, mover: board::Player) -> Outcome {
        use board::Player::*;
        match (v, mover) {
            (Val::Win(d), White) | (Val::Loss(d), Black) => Outcome::WhiteWin(d),
            (Val::Win(d), Black) | (Val::Loss(d), White) => Outcome::BlackWin(d),
            (Val::Draw, _) => Outcome::NoForcedWin,
        }
    }

    pub fn plies(self) -> Option<u32> {
        match self {
            Outcome::WhiteWin(d) | Outcome::BlackWin(d) => Some(d),
            Outcome::NoForcedWin => None,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::WhiteWin(d) => write!(f, "WhiteWin in {d}"),
            Outcome::BlackWin(d) => write!(f, "BlackWin in {d}"),
            Outcome::NoForcedWin => f.write_str("NoForcedWin"),
        }
    }
}
