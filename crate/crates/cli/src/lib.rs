//! The `quoridor` command line: compile positive CNF formulas into boards,
//! solve small boards exactly, run the construction checks, render boards
//! and replay moves.

pub mod moves;
pub mod render;

use anyhow::{anyhow, Context};
use board::Position;
use clap::{Parser, Subcommand, ValueEnum};
use formula::{gpos_solve, parse_formula, principal_line, Formula, Side};
use reduction::{compile, CompileError, LayoutPlan, ScaleConfig};
use solver::{solve_naive, solve_with, SolveConfig, SolveError};
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(name = "quoridor", version, about = "Quoridor boards built from positive CNF formulas")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Faithful,
    Desk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum First {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the board for a formula.
    Compile {
        formula: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Also write the layout plan as JSON.
        #[arg(long)]
        plan: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Scale::Desk)]
        scale: Scale,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Exact outcome of a small position.
    Solve {
        position: PathBuf,
        /// Use the plain retrograde solver instead of the epoch search.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Shuffle the search order; the outcome does not change.
        #[arg(long)]
        shuffle_seed: Option<u64>,
        /// Print search statistics as JSON after the outcome.
        #[arg(long)]
        stats: bool,
    },
    /// Winner of the claiming game on a formula.
    FormulaSolve {
        formula: PathBuf,
        #[arg(long, value_enum, default_value_t = First::I)]
        first: First,
        /// Print one optimal line of claims.
        #[arg(long)]
        line: bool,
    },
    /// Run construction checks against a compiled board and its plan.
    Verify {
        /// Omit for plans too large to materialise; board checks are skipped.
        position: Option<PathBuf>,
        #[arg(long)]
        plan: PathBuf,
        /// Comma-separated subset of checks.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Draw a board.
    Render {
        position: PathBuf,
        #[arg(long, conflicts_with = "svg", required_unless_present = "svg")]
        ascii: bool,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Label landmarks from this plan in the SVG.
        #[arg(long)]
        plan: Option<PathBuf>,
    },
    /// Play a list of moves and write the resulting position.
    Apply {
        position: PathBuf,
        /// Moves such as "p 3 4; w H 2 5".
        #[arg(long)]
        moves: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// A failed command and the exit status it maps to.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments, unreadable files, illegal moves: exit 1.
    Input(anyhow::Error),
    /// Some verify check failed: exit 2.
    Checks(usize),
    /// A size or search limit was hit: exit 3.
    Resource(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Checks(_) => 2,
            Failure::Resource(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(e) => write!(f, "{e:#}"),
            Failure::Checks(k) => write!(f, "{k} check(s) failed"),
            Failure::Resource(what) => write!(f, "resource limit: {what}"),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        Failure::Input(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Input(e.into())
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_formula(path: &Path) -> anyhow::Result<Formula> {
    parse_formula(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_position(path: &Path) -> anyhow::Result<Position> {
    board::parse(&read(path)?).map_err(|e| anyhow!("{e}")).with_context(|| format!("parsing {}", path.display()))
}

fn load_plan(path: &Path) -> anyhow::Result<LayoutPlan> {
    serde_json::from_str(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn plan_json(plan: &LayoutPlan) -> String {
    let mut text = serde_json::to_string_pretty(plan).expect("plans serialise");
    text.push('\n');
    text
}

/// Runs one command, writing its normal output to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Compile { formula, output, plan, scale, svg } => {
            let f = load_formula(&formula)?;
            let config = match scale {
                Scale::Faithful => ScaleConfig::faithful(),
                Scale::Desk => ScaleConfig::desk(),
            };
            match compile(&f, config) {
                Ok((pos, layout)) => {
                    write(&output, &board::serialize(&pos))?;
                    if let Some(p) = plan {
                        write(&p, &plan_json(&layout))?;
                    }
                    if let Some(s) = svg {
                        write(&s, &render::svg(&pos, Some(&layout)))?;
                    }
                    writeln!(out, "board side {}, {} walls", pos.n, pos.walls.len())?;
                    Ok(())
                }
                Err(CompileError::TooLarge { n, plan: layout }) => {
                    if let Some(p) = plan {
                        write(&p, &plan_json(&layout))?;
                    }
                    Err(Failure::Resource(format!("board side {n} is too large to materialise; only the plan was written")))
                }
                Err(e) => Err(Failure::Input(anyhow!("{e}"))),
            }
        }
        Command::Solve { position, oracle, max_nodes, shuffle_seed, stats } => {
            let pos = load_position(&position)?;
            let result = if oracle {
                solve_naive(&pos, max_nodes).map(|o| (o, None))
            } else {
                solve_with(&pos, &SolveConfig { max_nodes, shuffle_seed }).map(|(o, s)| (o, Some(s)))
            };
            match result {
                Ok((outcome, search)) => {
                    writeln!(out, "{outcome}")?;
                    if let (true, Some(s)) = (stats, search) {
                        writeln!(out, "{}", serde_json::to_string(&s).expect("stats serialise"))?;
                    }
                    Ok(())
                }
                Err(SolveError::ResourceLimit { what, limit }) => Err(Failure::Resource(format!("{what} exceeded {limit}"))),
                Err(e) => Err(Failure::Input(anyhow!("{e}"))),
            }
        }
        Command::FormulaSolve { formula, first, line } => {
            let f = load_formula(&formula)?;
            let side = match first {
                First::I => Side::I,
                First::II => Side::II,
            };
            if line {
                let (winner, claims) = principal_line(&f, side);
                writeln!(out, "{winner}")?;
                for (who, var) in claims {
                    writeln!(out, "{who} claims x{var}")?;
                }
            } else {
                writeln!(out, "{}", gpos_solve(&f, side))?;
            }
            Ok(())
        }
        Command::Verify { position, plan, checks, json } => {
            let layout = load_plan(&plan)?;
            let pos = position.as_deref().map(load_position).transpose()?;
            let names: Vec<&str> = checks.iter().map(String::as_str).collect();
            if let Some(bad) = names.iter().find(|n| !verify::CHECKS.contains(n)) {
                return Err(Failure::Input(anyhow!("unknown check `{bad}`; known: {}", verify::CHECKS.join(", "))));
            }
            let reports = verify::run_checks(pos.as_ref(), &layout, &names);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&reports).expect("reports serialise"))?;
            } else {
                for r in &reports {
                    write!(out, "{r}")?;
                }
            }
            match reports.iter().filter(|r| r.failed()).count() {
                0 => Ok(()),
                k => Err(Failure::Checks(k)),
            }
        }
        Command::Render { position, ascii, svg, plan } => {
            let pos = load_position(&position)?;
            if ascii {
                write!(out, "{}", render::ascii(&pos)?)?;
            }
            if let Some(s) = svg {
                let layout = plan.as_deref().map(load_plan).transpose()?;
                write(&s, &render::svg(&pos, layout.as_ref()))?;
            }
            Ok(())
        }
        Command::Apply { position, moves, output } => {
            let mut pos = load_position(&position)?;
            for (i, (text, mv)) in moves::parse_moves(&moves)?.into_iter().enumerate() {
                pos = pos.apply(mv).map_err(|e| anyhow!("illegal move {} `{text}`: {e}", i + 1))?;
            }
            write(&output, &board::serialize(&pos))?;
            Ok(())
        }
    }
}
