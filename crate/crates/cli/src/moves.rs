use anyhow::{anyhow, bail, Context, Result};
use board::{MoveRec, Orientation, Square, WallSlot};

fn number(tok: Option<&str>, what: &str) -> Result<u32> {
    let tok = tok.ok_or_else(|| anyhow!("missing {what}"))?;
    tok.parse().with_context(|| format!("{what} `{tok}` is not a number"))
}

/// Parses one move: `p <col> <row>` or `w <H|V> <x> <y>`.
pub fn parse_move(text: &str) -> Result<MoveRec> {
    let mut toks = text.split_whitespace();
    let mv = match toks.next() {
        Some("p") => MoveRec::Pawn(Square::new(number(toks.next(), "column")?, number(toks.next(), "row")?)),
        Some("w") => {
            let orientation = match toks.next() {
                Some("H") => Orientation::H,
                Some("V") => Orientation::V,
                other => bail!("wall orientation must be H or V, got {other:?}"),
            };
            MoveRec::Wall(WallSlot::new(orientation, number(toks.next(), "x")?, number(toks.next(), "y")?))
        }
        other => bail!("move must start with p or w, got {other:?}"),
    };
    if let Some(extra) = toks.next() {
        bail!("unexpected `{extra}` after the move");
    }
    Ok(mv)
}

/// Parses a `;`-separated move list; blank entries are skipped.
pub fn parse_moves(text: &str) -> Result<Vec<(String, MoveRec)>> {
    text.split(';')
        .map(str::trim)
        .filter(|m| !m.is_empty())
        .enumerate()
        .map(|(i, m)| parse_move(m).map(|mv| (m.to_string(), mv)).with_context(|| format!("move {} `{m}`", i + 1)))
        .collect()
}
