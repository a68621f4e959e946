//! Materialises a layout plan as a position.

use crate::draw::ring;
use crate::plan::{plan_layout, Layout, LayoutPlan, ScaleConfig, ScaleMode, EXIT_JOG, EXIT_JOG_ROW, STUB};
use board::{Player, Position, Square, WallSlot};
use formula::Formula;
use gadgets::{synthesize, truth_box_channel, Channel, SynthError, Transform, CLOSURE_ROW, RING};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CompileError {
    #[error("formula needs at least one variable and one clause")]
    EmptyFormula,
    /// Faithful boards are planned but never built.
    #[error("board side {n} is too large to materialise; use desk scale or the plan alone")]
    TooLarge { n: u64, plan: Box<LayoutPlan> },
    #[error("a wall budget of {0} does not fit the position format")]
    Budget(u64),
    #[error("wall synthesis failed: {0}")]
    Synthesis(#[from] SynthError),
}

/// Compiles `f`; desk scale only, faithful scale returns its plan inside
/// [`CompileError::TooLarge`].
pub fn compile(f: &Formula, scale: ScaleConfig) -> Result<(Position, LayoutPlan), CompileError> {
    if f.v == 0 || f.clauses.is_empty() {
        return Err(CompileError::EmptyFormula);
    }
    let plan = plan_layout(f, scale);
    if scale.mode == ScaleMode::Faithful {
        return Err(CompileError::TooLarge { n: plan.n, plan: Box::new(plan) });
    }
    let layout = Layout::from_plan(&plan);
    let ch = board_channel(&layout, f);
    let walls = synthesize(&ch, layout.n, layout.n)?;
    let budget = |b: u64| u32::try_from(b).map_err(|_| CompileError::Budget(b));
    let fr = &layout.frame;
    let position = Position {
        n: layout.n,
        white_pawn: Square::new(fr.access_col, fr.white_start_row),
        black_pawn: Square::new(fr.maze_x, fr.maze_y - 1),
        walls,
        white_walls_left: budget(plan.white_budget)?,
        black_walls_left: budget(plan.black_budget)?,
        to_move: Player::White,
    };
    Ok((position, plan))
}

/// Open squares, links and gates of the whole board.
pub fn board_channel(lay: &Layout, f: &Formula) -> Channel {
    let mut ch = Channel::new();
    let fr = &lay.frame;
    let cell = &lay.cell;
    let (east, north) = (lay.maze_east(), lay.maze_north());

    for i in 0..lay.c {
        for j in 0..lay.v {
            let member = f.clauses[i as usize].contains(&(j + 1));
            cell.draw(&mut ch, lay.cell_origin(i, j), member);
        }
    }

    // Shortcuts, with dead-end stubs past the maze border.
    let (ex, ey) = lay.emergency_ring();
    ch.path(&[(fr.maze_x - STUB, fr.maze_y), (east, fr.maze_y)]);
    ch.path(&lay.emergency_route());
    for i in 1..=lay.c {
        let y = fr.maze_y + i * cell.height;
        ch.path(&[(fr.maze_x - STUB, y), (east + STUB, y)]);
    }
    ch.path(&[(fr.maze_x, fr.hub_row), (fr.maze_x, north + STUB)]);
    for j in 1..=lay.v {
        let x = fr.maze_x + j * cell.width;
        ch.path(&[(x, fr.maze_y - STUB), (x, north + STUB)]);
    }
    for i in 0..lay.c {
        let y = lay.clause_y(i);
        ch.path(&[(east, y), (east + STUB, y)]);
    }

    // White's side: access corridor, loops, entrance chambers.
    let shape = &lay.shape;
    ch.path(&[(fr.access_col, fr.white_start_row), lay.access_ring(0)]);
    for i in 0..lay.c {
        let y = lay.clause_y(i);
        let (rx, ry) = lay.access_ring(i);
        ring(&mut ch, (rx, ry));
        let (bx, by) = lay.entrance_box(i);
        let entrance = (bx + shape.west, by + shape.entrance().row);
        ch.path(&[(rx + RING, ry), (rx + RING, y), (entrance.0, y), entrance]);
        ch.absorb(&shape.channel().transformed(&Transform::shift(shape.width, shape.height, bx, by)));
        ch.path(&lay.exit_route(i));
    }

    // Variable exits: truth boxes, collector, White's corridor.
    for j in 0..lay.v {
        let x = lay.variable_x(j);
        let (bx, by) = (x - 2, fr.truth_row);
        ch.path(&[(x, fr.maze_y - STUB), (x, fr.maze_y)]);
        let jog = north + EXIT_JOG_ROW;
        ch.path(&[(x, north), (x, jog), (x + EXIT_JOG, jog), (x + EXIT_JOG, jog + 3), (x, jog + 3), (x, by + 1)]);
        ch.absorb(&truth_box_channel().transformed(&Transform::shift(6, 10, bx, by)));
        let (rx, ry) = lay.collector_ring(j);
        ch.path(&[(x, by + 8), (x, ry), (rx, ry)]);
        if j == 0 {
            // the collector's west end, so the loop's outer runs tile
            ch.path(&[(rx - 2, ry + RING), (rx, ry + RING)]);
        }
        ring(&mut ch, (rx, ry));
        let next = if j + 1 < lay.v { lay.collector_ring(j + 1).0 } else { fr.down_col };
        ch.path(&[(rx + RING, ry + RING), (next, ry + RING)]);
    }
    ch.path(&[(fr.down_col, fr.collector_row), (fr.down_col, fr.hub_row - 1), (fr.white_col, fr.hub_row - 1), (fr.white_col, lay.n - 1)]);
    ring(&mut ch, (ex, ey));

    // Black's hub and victory corridors.
    ch.path(&[(fr.first_corridor_col, fr.hub_row), (fr.maze_x, fr.hub_row)]);
    for t in 0..lay.b {
        let x = lay.corridor_col(t);
        ch.path(&[(x, fr.hub_row), (x, 0)]);
        ch.add_gate(WallSlot::h(x + 1, CLOSURE_ROW));
        ch.add_gate(WallSlot::h(x, CLOSURE_ROW));
    }
    ch
}
