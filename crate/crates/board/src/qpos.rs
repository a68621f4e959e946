//! The line-based `.qpos` text format.

use crate::error::{ParseError, ValidationError};
use crate::geometry::{Orientation, Square, WallSlot};
use crate::position::{Player, Position};
use std::collections::BTreeSet;
use std::fmt::Write;
use thiserror::Error;

pub const HEADER: &str = "quoridor-position v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QposError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("invalid position: {0}")]
    Invalid(#[from] ValidationError),
}

/// Canonical text: fixed field order, walls sorted H before V, then x, then y.
pub fn serialize(pos: &Position) -> String {
    let mut s = String::new();
    let side = |p: Player| match p {
        Player::White => "white",
        Player::Black => "black",
    };
    writeln!(s, "{HEADER}").unwrap();
    writeln!(s, "n {}", pos.n).unwrap();
    writeln!(s, "to-move {}", side(pos.to_move)).unwrap();
    writeln!(s, "pawn white {} {}", pos.white_pawn.col, pos.white_pawn.row).unwrap();
    writeln!(s, "pawn black {} {}", pos.black_pawn.col, pos.black_pawn.row).unwrap();
    writeln!(s, "walls-left white {}", pos.white_walls_left).unwrap();
    writeln!(s, "walls-left black {}", pos.black_walls_left).unwrap();
    for w in &pos.walls {
        writeln!(s, "wall {} {} {}", w.orientation, w.x, w.y).unwrap();
    }
    s
}

#[derive(Default)]
struct Fields {
    n: Option<u32>,
    to_move: Option<Player>,
    white: Option<Square>,
    black: Option<Square>,
    white_left: Option<u32>,
    black_left: Option<u32>,
    walls: BTreeSet<WallSlot>,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn num(line: usize, tok: Option<&str>) -> Result<u32, ParseError> {
    let tok = tok.ok_or_else(|| err(line, "missing number"))?;
    tok.parse().map_err(|_| err(line, format!("bad number `{tok}`")))
}

fn player(line: usize, tok: Option<&str>) -> Result<Player, ParseError> {
    match tok {
        Some("white") => Ok(Player::White),
        Some("black") => Ok(Player::Black),
        other => Err(err(line, format!("expected white|black, got {other:?}"))),
    }
}

fn set_once<T>(slot: &mut Option<T>, v: T, line: usize, key: &str) -> Result<(), ParseError> {
    if slot.replace(v).is_some() {
        return Err(err(line, format!("duplicate `{key}`")));
    }
    Ok(())
}

/// Parses and validates a position.
pub fn parse(text: &str) -> Result<Position, QposError> {
    let mut f = Fields::default();
    let mut seen_header = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        if !seen_header {
            if l != HEADER {
                return Err(err(line, format!("expected `{HEADER}`")).into());
            }
            seen_header = true;
            continue;
        }
        let mut toks = l.split_whitespace();
        let key = toks.next().unwrap();
        match key {
            "n" => set_once(&mut f.n, num(line, toks.next())?, line, key)?,
            "to-move" => set_once(&mut f.to_move, player(line, toks.next())?, line, key)?,
            "pawn" => {
                let p = player(line, toks.next())?;
                let sq = Square::new(num(line, toks.next())?, num(line, toks.next())?);
                let slot = match p {
                    Player::White => &mut f.white,
                    Player::Black => &mut f.black,
                };
                set_once(slot, sq, line, "pawn")?;
            }
            "walls-left" => {
                let p = player(line, toks.next())?;
                let k = num(line, toks.next())?;
                let slot = match p {
                    Player::White => &mut f.white_left,
                    Player::Black => &mut f.black_left,
                };
                set_once(slot, k, line, "walls-left")?;
            }
            "wall" => {
                let o = match toks.next() {
                    Some("H") => Orientation::H,
                    Some("V") => Orientation::V,
                    other => return Err(err(line, format!("expected H|V, got {other:?}")).into()),
                };
                let w = WallSlot::new(o, num(line, toks.next())?, num(line, toks.next())?);
                if !f.walls.insert(w) {
                    return Err(err(line, format!("duplicate wall {w}")).into());
                }
            }
            _ => return Err(err(line, format!("unknown key `{key}`")).into()),
        }
        if let Some(extra) = toks.next() {
            return Err(err(line, format!("unexpected token `{extra}`")).into());
        }
    }
    let end = text.lines().count() + 1;
    if !seen_header {
        return Err(err(end, "missing header").into());
    }
    let missing = |what: &str| err(end, format!("missing `{what}`"));
    let pos = Position {
        n: f.n.ok_or_else(|| missing("n"))?,
        to_move: f.to_move.ok_or_else(|| missing("to-move"))?,
        white_pawn: f.white.ok_or_else(|| missing("pawn white"))?,
        black_pawn: f.black.ok_or_else(|| missing("pawn black"))?,
        white_walls_left: f.white_left.ok_or_else(|| missing("walls-left white"))?,
        black_walls_left: f.black_left.ok_or_else(|| missing("walls-left black"))?,
        walls: f.walls,
    };
    pos.validate()?;
    Ok(pos)
}
