//! End-to-end acceptance run. Prints one line per criterion and fails if
//! any criterion fails.

use board::{Player, Position, Square, WallSlot};
use formula::{canonical_formulas, gpos_solve, gpos_solve_exhaustive, Formula, Side};
use gadgets::{build_cross_junction, build_t_junction_standard, build_t_junction_unblockable, build_truth_box};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use reduction::{check_inequalities, compile, plan_layout, LayoutPlan, ScaleConfig};
use solver::{solve_naive_batch, SearchStats, SolveConfig, Solver};
use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;
use verify::{landmarks, Region};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn quoridor(args: &[&str]) -> Result<Vec<u8>, String> {
    let o = Command::new(env!("CARGO_BIN_EXE_quoridor")).args(args).output().map_err(|e| e.to_string())?;
    if !o.status.success() {
        return Err(format!("{args:?} exited {:?}: {}", o.status.code(), String::from_utf8_lossy(&o.stderr)));
    }
    Ok(o.stdout)
}

fn desk_example() -> &'static (Position, LayoutPlan) {
    static COMPILED: OnceLock<(Position, LayoutPlan)> = OnceLock::new();
    COMPILED.get_or_init(|| compile(&Formula::example(), ScaleConfig::desk()).expect("example compiles"))
}

fn schaefer_example() -> Verdict {
    let out = quoridor(&["formula-solve", fixture("example.pcnf").to_str().unwrap(), "--first", "I"])?;
    let text = String::from_utf8_lossy(&out).trim().to_string();
    ensure(text == "II wins", || format!("printed `{text}`"))?;
    Ok(text)
}

fn formulation_equivalence() -> Verdict {
    let mut formulas = 0u64;
    for v in 1..=5 {
        for c in 1..=4 {
            for f in canonical_formulas(v, c) {
                formulas += 1;
                for first in [Side::I, Side::II] {
                    let (early, full) = (gpos_solve(&f, first), gpos_solve_exhaustive(&f, first));
                    ensure(early == full, || format!("{f:?} with {first} first: {early} vs {full}"))?;
                }
            }
        }
    }
    Ok(format!("{formulas} formulas, both first players"))
}

fn bare(n: u32, w: Square, b: Square, to_move: Player, walls_each: u32) -> Position {
    Position {
        n,
        white_pawn: w,
        black_pawn: b,
        walls: BTreeSet::new(),
        white_walls_left: walls_each,
        black_walls_left: walls_each,
        to_move,
    }
}

fn n3_suite() -> Vec<Position> {
    let squares: Vec<Square> = (0..3).flat_map(|c| (0..3).map(move |r| Square::new(c, r))).collect();
    let mut out = Vec::new();
    for &w in &squares {
        for &b in &squares {
            for side in [Player::White, Player::Black] {
                if w != b {
                    out.push(bare(3, w, b, side, 0));
                }
            }
        }
    }
    out
}

fn n4_suite(count: usize, seed: u64) -> Vec<Position> {
    let mut rng = StdRng::seed_from_u64(seed);
    let slots: Vec<WallSlot> = WallSlot::all(4).collect();
    let mut out = Vec::new();
    while out.len() < count {
        let w = Square::new(rng.gen_range(0..4), rng.gen_range(0..4));
        let b = Square::new(rng.gen_range(0..4), rng.gen_range(0..4));
        if w == b {
            continue;
        }
        let side = if rng.gen_bool(0.5) { Player::White } else { Player::Black };
        let mut p = bare(4, w, b, side, 1);
        if rng.gen_bool(0.3) {
            let s = *slots.choose(&mut rng).unwrap();
            if p.slot_error(s).is_none() {
                p.walls.insert(s);
            }
        }
        out.push(p);
    }
    out
}

fn against_oracle(positions: &[Position]) -> Result<SearchStats, String> {
    let want = solve_naive_batch(positions, None).map_err(|e| e.to_string())?;
    let mut s = Solver::new(positions[0].n, SolveConfig::default());
    for (p, w) in positions.iter().zip(want) {
        let got = s.solve(p).map_err(|e| e.to_string())?;
        ensure(got == w, || format!("{}: solve {got}, oracle {w}", board::serialize(p)))?;
    }
    Ok(s.stats().clone())
}

fn solver_suites() -> &'static Result<(SearchStats, SearchStats), String> {
    static STATS: OnceLock<Result<(SearchStats, SearchStats), String>> = OnceLock::new();
    STATS.get_or_init(|| Ok((against_oracle(&n3_suite())?, against_oracle(&n4_suite(500, 5))?)))
}

fn solver_oracle() -> Verdict {
    solver_suites().as_ref().map_err(Clone::clone)?;
    Ok("144 n=3 positions and 500 random n=4 positions agree".into())
}

fn bounds() -> Verdict {
    let (s3, s4) = solver_suites().as_ref().map_err(Clone::clone)?;
    let mut parts = Vec::new();
    for (n, s) in [(3u64, s3), (4, s4)] {
        ensure(s.peak_epoch_positions <= n.pow(4), || format!("n={n}: {} stored > {}", s.peak_epoch_positions, n.pow(4)))?;
        ensure(u64::from(s.max_plies) <= n.pow(6), || format!("n={n}: {} plies > {}", s.max_plies, n.pow(6)))?;
        parts.push(format!("n={n}: peak {} <= {}, plies {} <= {}", s.peak_epoch_positions, n.pow(4), s.max_plies, n.pow(6)));
    }
    Ok(parts.join("; "))
}

fn region(bp: Result<gadgets::GadgetBlueprint, gadgets::GadgetError>) -> Result<Region, String> {
    bp.map(|b| Region::from_blueprint(&b)).map_err(|e| e.to_string())
}

fn gadget_suite() -> Verdict {
    for q in 0..4 {
        let rep = verify::check_unblockable(&region(build_t_junction_unblockable(q))?);
        ensure(rep.passed(), || format!("unblockable T, turn {q}: {rep}"))?;
    }
    let rep = verify::check_unblockable(&region(build_t_junction_standard(0))?);
    ensure(rep.failed() && !rep.witnesses.is_empty(), || "standard T was not held".into())?;
    let standard_witness = rep.witnesses[0].subject.clone();

    let rep = verify::check_railroading(&region(build_cross_junction())?);
    ensure(rep.passed(), || format!("cross: {rep}"))?;
    let arms = rep.measurements.iter().find(|m| m.subject == "arms with a straight partner").map(|m| m.found.clone());
    ensure(arms.as_deref() == Some("4"), || format!("railroading judged {arms:?} arms"))?;

    let rep = verify::check_truth_box(&region(build_truth_box())?);
    ensure(rep.passed(), || format!("truth box: {rep}"))?;

    let (pos, plan) = desk_example();
    ensure(plan.b == 3, || format!("desk b = {}", plan.b))?;
    let rep = verify::check_victory_blocks(pos, plan);
    ensure(rep.passed(), || format!("victory blocks: {rep}"))?;
    let last = rep.measurements.iter().find(|m| m.subject.starts_with("closure 3"));
    ensure(last.is_some_and(|m| m.found == "path-sealing"), || format!("final closure: {last:?}"))?;
    Ok(format!("T held by `{standard_witness}`; cross railroads 4 arms; truth box 3 states; closure 3 refused"))
}

fn random_formula(rng: &mut StdRng) -> Formula {
    let v = rng.gen_range(1..=5);
    let c = rng.gen_range(1..=4);
    let clauses = (0..c)
        .map(|_| {
            let mut cl = BTreeSet::new();
            while cl.is_empty() {
                cl.extend((1..=v).filter(|_| rng.gen_bool(0.4)));
            }
            cl
        })
        .collect();
    Formula::new(v, clauses).expect("clauses are in range")
}

fn compilation_invariants() -> Verdict {
    let mut rng = StdRng::seed_from_u64(2024);
    for k in 0..10 {
        let f = random_formula(&mut rng);
        let plan = plan_layout(&f, ScaleConfig::faithful());
        let rep = verify::check_structure(None, &plan);
        ensure(rep.passed(), || format!("formula {k} {f:?}: {rep}"))?;
        let ineq = check_inequalities(&plan);
        ensure(ineq.all_pass(), || format!("formula {k} {f:?}:\n{ineq}"))?;
        let wanted: BTreeSet<(u32, u32)> = f.memberships().into_iter().map(|(i, x)| (i as u32, x)).collect();
        ensure(landmarks::side_paths(&plan) == wanted, || format!("formula {k}: side paths differ from memberships"))?;
    }
    Ok("10 faithful plans: structure, inequalities, membership bijection".into())
}

fn desk_distances() -> Verdict {
    let (pos, plan) = desk_example();
    let rep = verify::check_distances(pos, plan);
    ensure(rep.passed(), || rep.to_string())?;
    let found = |prefix: &str| -> Vec<String> {
        rep.measurements.iter().filter(|m| m.subject.starts_with(prefix)).map(|m| m.found.clone()).collect()
    };
    let (l, long) = (plan.l.to_string(), (3 * plan.l).to_string());
    let winding = found("winding excess");
    ensure(!winding.is_empty() && winding.iter().all(|x| *x == l), || format!("winding excesses {winding:?}"))?;
    let longs = found("long winding excess");
    ensure(!longs.is_empty() && longs.iter().all(|x| *x == long), || format!("long excesses {longs:?}"))?;
    let black = found("black corridor");
    ensure(black.len() as u64 == plan.b && black.iter().all(|x| *x == plan.black_len.to_string()), || format!("black corridors {black:?}"))?;
    let white = found("route 14.white_corridor");
    ensure(white == [plan.white_len.to_string()], || format!("white corridor {white:?}"))?;
    Ok(format!(
        "L = {l} on {} roads, 3L = {long} on {} roads, corridors {} x {} and {}",
        winding.len(),
        longs.len(),
        plan.b,
        plan.black_len,
        plan.white_len
    ))
}

fn determinism() -> Verdict {
    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let src = fixture("example.pcnf");
    let mut outputs = Vec::new();
    for run in 0..3 {
        let (pos, plan) = (dir.path().join(format!("{run}.qpos")), dir.path().join(format!("{run}.json")));
        quoridor(&["compile", src.to_str().unwrap(), "-o", pos.to_str().unwrap(), "--plan", plan.to_str().unwrap()])?;
        let read = |p: &Path| std::fs::read(p).map_err(|e| e.to_string());
        outputs.push((read(&pos)?, read(&plan)?));
    }
    ensure(outputs.windows(2).all(|w| w[0] == w[1]), || "compile outputs differ between runs".into())?;

    let probes: Vec<PathBuf> = n4_suite(6, 77)
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let path = dir.path().join(format!("probe{i}.qpos"));
            std::fs::write(&path, board::serialize(p)).map(|_| path).map_err(|e| e.to_string())
        })
        .collect::<Result<_, _>>()?;
    for probe in &probes {
        let probe = probe.to_str().unwrap();
        let plain: Vec<Vec<u8>> = (0..3).map(|_| quoridor(&["solve", probe])).collect::<Result<_, _>>()?;
        ensure(plain.windows(2).all(|w| w[0] == w[1]), || format!("{probe}: solve output varies"))?;
        for seed in ["1", "2", "3"] {
            let shuffled = quoridor(&["solve", probe, "--shuffle-seed", seed])?;
            ensure(shuffled == plain[0], || format!("{probe}: seed {seed} changed the outcome"))?;
        }
    }
    Ok(format!("3 compiles byte-identical ({} bytes); {} positions solved 3 times plus 3 shuffled orders", outputs[0].0.len(), probes.len()))
}

fn mutation_sensitivity() -> Verdict {
    let (pos, plan) = desk_example();
    let mut flipped = Vec::new();
    let mut expect_flip = |name: &str, before: verify::CheckReport, after: verify::CheckReport| -> Result<(), String> {
        ensure(before.passed(), || format!("{name} fails before mutation: {before}"))?;
        ensure(after.failed() && !after.witnesses.is_empty(), || format!("{name} still passes after mutation"))?;
        flipped.push(format!("{name} ({})", after.witnesses[0].subject));
        Ok(())
    };

    let top = landmarks::series(plan, "12.black_corridors").ok_or("no corridors")?[1];
    let side = *pos
        .walls
        .iter()
        .find(|w| w.orientation == board::Orientation::V && w.x == top.col + 1 && (10..=11).contains(&w.y))
        .ok_or("no corridor side wall")?;
    let mut bad = pos.clone();
    bad.walls.remove(&side);
    expect_flip("structure", verify::check_structure(Some(pos), plan), verify::check_structure(Some(&bad), plan))?;

    let r = landmarks::route(plan, "14.white_corridor").ok_or("no white corridor")?;
    let mut bad = pos.clone();
    bad.walls.insert(WallSlot::h(r.from.col + 1, (r.from.row + r.to.row) / 2));
    expect_flip("distances", verify::check_distances(pos, plan), verify::check_distances(&bad, plan))?;

    let first = landmarks::wall_series(plan, "13.closures").ok_or("no closures")?[0];
    let mut bad = pos.clone();
    bad.walls.insert(first.crossing());
    expect_flip("victory_blocks", verify::check_victory_blocks(pos, plan), verify::check_victory_blocks(&bad, plan))?;

    let t = region(build_t_junction_unblockable(0))?;
    let mut bad = t.clone();
    bad.walls.insert(WallSlot::h(9, 6));
    expect_flip("unblockable", verify::check_unblockable(&t), verify::check_unblockable(&bad))?;

    let cross = region(build_cross_junction())?;
    let mut bad = cross.clone();
    // Blocks the straight jump out of the junction towards the east arm.
    bad.walls.insert(WallSlot::v(6, 6));
    expect_flip("railroading", verify::check_railroading(&cross), verify::check_railroading(&bad))?;

    let tb = region(build_truth_box())?;
    let mut bad = tb.clone();
    bad.walls.remove(&WallSlot::v(4, 5));
    expect_flip("truth_box", verify::check_truth_box(&tb), verify::check_truth_box(&bad))?;

    Ok(flipped.join("; "))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("schaefer example", schaefer_example),
        ("formulation equivalence", formulation_equivalence),
        ("solver matches oracle", solver_oracle),
        ("epoch and ply bounds", bounds),
        ("gadget suite", gadget_suite),
        ("compilation invariants", compilation_invariants),
        ("desk distances", desk_distances),
        ("determinism", determinism),
        ("mutation sensitivity", mutation_sensitivity),
    ];
    let results: Vec<(Verdict, f64)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, run)| {
                s.spawn(move || {
                    let start = Instant::now();
                    let v = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
                    (v, start.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread")).collect()
    });
    // Written to the raw handle so the lines survive libtest's capture.
    let mut log = std::io::stderr().lock();
    let mut failed = Vec::new();
    for (i, ((name, _), (verdict, secs))) in criteria.iter().zip(&results).enumerate() {
        match verdict {
            Ok(detail) => writeln!(log, "criterion {} {name}: PASS in {secs:.1}s ({detail})", i + 1).unwrap(),
            Err(why) => {
                writeln!(log, "criterion {} {name}: FAIL in {secs:.1}s ({why})", i + 1).unwrap();
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
