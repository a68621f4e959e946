use anyhow::{bail, Result};
use board::{step_blocked, Dir, Orientation, Position, Square, WallLookup, WallSlot};
use reduction::{Landmark, LayoutPlan};
use std::fmt::Write;

/// Widest board drawn as text; larger boards only render as SVG.
pub const ASCII_MAX_SIDE: u32 = 100;

/// Pixels per square in SVG output.
const CELL: u32 = 10;

/// Text picture, north at the top. Squares are `.`, `W` and `B`; `|` and
/// `-` mark blocked edges and `+` a wall's centre vertex.
pub fn ascii(pos: &Position) -> Result<String> {
    let n = pos.n;
    if n > ASCII_MAX_SIDE {
        bail!("board side {n} exceeds the ASCII limit of {ASCII_MAX_SIDE}; render as SVG instead");
    }
    let walls = &pos.walls;
    let mut out = String::new();
    for row in (0..n).rev() {
        for col in 0..n {
            let s = Square::new(col, row);
            out.push(match s {
                _ if s == pos.white_pawn => 'W',
                _ if s == pos.black_pawn => 'B',
                _ => '.',
            });
            if col + 1 < n {
                out.push(if step_blocked(walls, s, Dir::East) { '|' } else { ' ' });
            }
        }
        out.push('\n');
        if row == 0 {
            break;
        }
        for col in 0..n {
            out.push(if step_blocked(walls, Square::new(col, row), Dir::South) { '-' } else { ' ' });
            if col + 1 < n {
                let centre = walls.has(WallSlot::h(col + 1, row)) || walls.has(WallSlot::v(col + 1, row));
                out.push(if centre { '+' } else { ' ' });
            }
        }
        let trimmed = out.trim_end_matches(' ').len();
        out.truncate(trimmed);
        out.push('\n');
    }
    Ok(out)
}

/// SVG picture with walls as two-square segments on the lattice, pawns as
/// circles and, given a plan, numbered landmark labels.
pub fn svg(pos: &Position, plan: Option<&LayoutPlan>) -> String {
    let n = pos.n;
    let side = n * CELL;
    // Lattice point (x, y) with y counted from the south edge.
    let px = |x: u32| x * CELL;
    let py = |y: u32| (n - y) * CELL;
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#);
    let _ = writeln!(out, r##"<rect width="{side}" height="{side}" fill="#fdfcf7" stroke="#444"/>"##);
    let mut d = String::new();
    for w in &pos.walls {
        match w.orientation {
            Orientation::H => {
                let _ = write!(d, "M{} {}h{}", px(w.x - 1), py(w.y), 2 * CELL);
            }
            Orientation::V => {
                let _ = write!(d, "M{} {}v{}", px(w.x), py(w.y + 1), 2 * CELL);
            }
        }
    }
    let _ = writeln!(out, r##"<path d="{d}" stroke="#7a3b12" stroke-width="2" fill="none"/>"##);
    let centre = |s: Square| (px(s.col) + CELL / 2, py(s.row) - CELL / 2);
    for (s, fill) in [(pos.white_pawn, "#ffffff"), (pos.black_pawn, "#111111")] {
        let (cx, cy) = centre(s);
        let _ = writeln!(out, r##"<circle cx="{cx}" cy="{cy}" r="{}" fill="{fill}" stroke="#111"/>"##, CELL * 2 / 5);
    }
    if let Some(plan) = plan {
        for (name, lm) in &plan.landmarks {
            let Some(label) = name.split('.').next().filter(|l| l.starts_with(|c: char| c.is_ascii_digit())) else {
                continue;
            };
            let at = match lm {
                Landmark::Square { col, row } => Square::new(*col, *row),
                Landmark::Route { from, .. } | Landmark::Series { first: from, .. } => *from,
                Landmark::Wall { .. } | Landmark::WallSeries { .. } => continue,
            };
            let (x, y) = centre(at);
            let _ = writeln!(out, r##"<text x="{x}" y="{y}" font-size="{}" fill="#b00020">{label}</text>"##, CELL * 3);
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture() -> Position {
        let mut pos = Position::start(3, 0);
        pos.walls.insert(WallSlot::h(2, 1));
        pos.walls.insert(WallSlot::v(2, 2));
        pos
    }

    #[test]
    fn ascii_marks_pawns_edges_and_centres() {
        let text = ascii(&fixture()).unwrap();
        let expected = ". B|.\n   +\n. .|.\n  -+-\n. W .\n";
        assert_eq!(text, expected);
    }

    #[test]
    fn ascii_refuses_large_boards() {
        assert!(ascii(&Position::start(ASCII_MAX_SIDE + 1, 0)).is_err());
    }

    #[test]
    fn svg_segments_sit_on_the_same_lattice_points() {
        let text = svg(&fixture(), None);
        // H 2 1 spans x 10..30 at y = (3-1)*10; V 2 2 spans y 0..20 at x = 20.
        assert!(text.contains("M10 20h20"), "{text}");
        assert!(text.contains("M20 0v20"), "{text}");
        assert_eq!(text.matches("<circle").count(), 2);
    }
}
