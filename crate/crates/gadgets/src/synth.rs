//! Wall synthesis for a channel map.
//!
//! Every edge between an open square and anything it is not linked to must
//! be walled; linked edges must stay open; and every slot that could cover a
//! linked edge must already be illegal (overlap or plus), unless it is one of
//! the channel's gates.
//!
//! Walled edges come in maximal runs along each lattice line. A run is tiled
//! by consecutive walls; when its length is odd it borrows one free edge at
//! one end, and an even run may borrow at both ends to shift its phase. That
//! choice per run is the only freedom. Given the choices, any slot that could
//! still cover a linked edge gets a spacer wall on the same line just beyond
//! the linked edge. Conflicts are repaired by re-choosing runs near them.

use crate::channel::{covered, slot_on, Channel, Edge};
use board::{Orientation, Square, WallSlot};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error("square {0} lies outside the {1}x{2} canvas")]
    OutsideCanvas(Square, u32, u32),
    #[error("gate {0} lies outside the canvas")]
    GateOutside(WallSlot),
    #[error("gate {0} would have to cover a walled edge")]
    GateOnWall(WallSlot),
    #[error("odd run of {len} walled edges on {orientation} line {line} at {start} has no free edge to borrow")]
    Parity { orientation: Orientation, line: u32, start: u32, len: u32 },
    #[error("{count} conflicts left after repair, near vertices {near:?}")]
    Unresolved { count: usize, near: Vec<(u32, u32)> },
}

#[derive(Debug, Clone)]
struct Run {
    orientation: Orientation,
    line: u32,
    start: u32,
    len: u32,
    /// (borrow before, borrow after)
    options: Vec<(bool, bool)>,
}

impl Run {
    fn walls(&self, choice: usize) -> impl Iterator<Item = WallSlot> + '_ {
        let (before, after) = self.options[choice];
        let first = self.start - before as u32;
        let total = self.len + before as u32 + after as u32;
        (0..total / 2).map(move |i| slot_on(self.orientation, self.line, first + 2 * i + 1))
    }
}

struct Problem {
    width: u32,
    height: u32,
    forbid: HashSet<Edge>,
    passages: Vec<Edge>,
    gates: HashSet<WallSlot>,
    runs: Vec<Run>,
}

impl Problem {
    fn line_len(&self, o: Orientation) -> u32 {
        match o {
            Orientation::H => self.width,
            Orientation::V => self.height,
        }
    }

    fn line_exists(&self, o: Orientation, line: u32) -> bool {
        let limit = match o {
            Orientation::H => self.height,
            Orientation::V => self.width,
        };
        line >= 1 && line < limit
    }

    fn slot_fits(&self, w: WallSlot) -> bool {
        w.x >= 1 && w.y >= 1 && w.x < self.width && w.y < self.height
    }
}

fn vertex(o: Orientation, line: u32, pos: u32) -> (u32, u32) {
    match o {
        Orientation::H => (pos, line),
        Orientation::V => (line, pos),
    }
}

fn centre(w: WallSlot) -> (u32, u32) {
    (w.x, w.y)
}

fn build(ch: &Channel, width: u32, height: u32) -> Result<Problem, SynthError> {
    let (p, defects) = build_all(ch, width, height)?;
    match defects.into_iter().next() {
        Some(first) => Err(first),
        None => Ok(p),
    }
}

/// Every odd wall run that cannot borrow, not just the first.
pub fn parity_defects(ch: &Channel, width: u32, height: u32) -> Result<Vec<SynthError>, SynthError> {
    build_all(ch, width, height).map(|(_, d)| d)
}

fn build_all(ch: &Channel, width: u32, height: u32) -> Result<(Problem, Vec<SynthError>), SynthError> {
    let mut defects = Vec::new();
    for &s in &ch.cells {
        if s.col >= width || s.row >= height {
            return Err(SynthError::OutsideCanvas(s, width, height));
        }
    }
    let mut p = Problem {
        width,
        height,
        forbid: HashSet::new(),
        passages: Vec::new(),
        gates: ch.gates.iter().copied().collect(),
        runs: Vec::new(),
    };
    for &(a, b) in &ch.links {
        let e = Edge::between(a, b);
        p.forbid.insert(e);
        p.passages.push(e);
    }
    p.passages.sort();

    let mut must: HashMap<(Orientation, u32), BTreeSet<u32>> = HashMap::new();
    for &s in &ch.cells {
        let mut around = Vec::new();
        if s.row > 0 {
            around.push(Square::new(s.col, s.row - 1));
        }
        if s.col > 0 {
            around.push(Square::new(s.col - 1, s.row));
        }
        around.push(Square::new(s.col, s.row + 1));
        around.push(Square::new(s.col + 1, s.row));
        for t in around {
            let e = Edge::between(s, t);
            if !p.line_exists(e.orientation, e.line) || ch.is_open(s, t) {
                continue;
            }
            must.entry((e.orientation, e.line)).or_default().insert(e.pos);
        }
    }

    for &g in &ch.gates {
        if !p.slot_fits(g) {
            return Err(SynthError::GateOutside(g));
        }
        for e in covered(g) {
            if must.get(&(e.orientation, e.line)).is_some_and(|m| m.contains(&e.pos)) {
                return Err(SynthError::GateOnWall(g));
            }
            p.forbid.insert(e);
        }
    }

    let mut keys: Vec<_> = must.keys().copied().collect();
    keys.sort();
    for (o, line) in keys {
        let positions: Vec<u32> = must[&(o, line)].iter().copied().collect();
        let mut i = 0;
        while i < positions.len() {
            let mut j = i;
            while j + 1 < positions.len() && positions[j + 1] == positions[j] + 1 {
                j += 1;
            }
            let (start, end) = (positions[i], positions[j]);
            let len = end - start + 1;
            let free = |pos: Option<u32>| {
                pos.is_some_and(|q| {
                    q < p.line_len(o)
                        && !p.forbid.contains(&Edge { orientation: o, line, pos: q })
                        && !must[&(o, line)].contains(&q)
                })
            };
            let before = free(start.checked_sub(1));
            let after = free(Some(end + 1));
            let options: Vec<(bool, bool)> = if len % 2 == 0 {
                let mut v = vec![(false, false)];
                if before && after {
                    v.push((true, true));
                }
                v
            } else {
                [(true, false), (false, true)]
                    .into_iter()
                    .filter(|&(b, a)| (!b || before) && (!a || after))
                    .collect()
            };
            if options.is_empty() {
                defects.push(SynthError::Parity { orientation: o, line, start, len });
                i = j + 1;
                continue;
            }
            p.runs.push(Run { orientation: o, line, start, len, options });
            i = j + 1;
        }
    }
    Ok((p, defects))
}

struct Evaluation {
    walls: HashSet<WallSlot>,
    conflicts: Vec<(u32, u32)>,
}

/// Walls of the chosen runs, spacers for every passage that needs one, and
/// every vertex where something clashes. Only the given runs, passages and
/// gates (each sorted) take part, so a window of the canvas can be checked
/// on its own.
fn evaluate(p: &Problem, choice: &[usize], runs: &[usize], passages: &[usize], gates: &[WallSlot]) -> Evaluation {
    let mut walls: HashSet<WallSlot> = HashSet::new();
    let mut cover: HashSet<Edge> = HashSet::new();
    let mut conflicts = Vec::new();

    for &r in runs {
        for w in p.runs[r].walls(choice[r]) {
            for e in covered(w) {
                if !cover.insert(e) {
                    conflicts.push(vertex(e.orientation, e.line, e.pos));
                }
            }
            walls.insert(w);
        }
    }
    let mut ordered: Vec<WallSlot> = walls.iter().copied().collect();
    ordered.sort();
    for &w in &ordered {
        if w.orientation == Orientation::H && walls.contains(&w.crossing()) {
            conflicts.push(centre(w));
        }
    }
    for &g in gates {
        if walls.contains(&g.crossing()) || covered(g).iter().any(|e| cover.contains(e)) {
            conflicts.push(centre(g));
        }
    }

    for &i in passages {
        let e = p.passages[i];
        for c in [e.pos, e.pos + 1] {
            let cand = slot_on(e.orientation, e.line, c);
            if !p.slot_fits(cand) || p.gates.contains(&cand) {
                continue;
            }
            let other = if c == e.pos { e.pos - 1 } else { e.pos + 1 };
            let other_edge = Edge { orientation: e.orientation, line: e.line, pos: other };
            if cover.contains(&other_edge) || walls.contains(&cand.crossing()) {
                continue;
            }
            // spacer on the same line covering `other` and the edge beyond it
            let spacer_centre = if c == e.pos { other } else { other + 1 };
            let spacer = (spacer_centre >= 1).then(|| slot_on(e.orientation, e.line, spacer_centre));
            let ok = spacer.is_some_and(|s| {
                p.slot_fits(s)
                    && covered(s).iter().all(|x| !p.forbid.contains(x) && !cover.contains(x))
                    && !walls.contains(&s.crossing())
                    && !p.gates.contains(&s.crossing())
            });
            if ok {
                let s = spacer.unwrap();
                for x in covered(s) {
                    cover.insert(x);
                }
                walls.insert(s);
            } else {
                conflicts.push(vertex(e.orientation, e.line, c));
            }
        }
    }
    Evaluation { walls, conflicts }
}

/// Inclusive box of lattice vertices: (x0, y0, x1, y1).
type VBox = (u32, u32, u32, u32);

fn grow(b: VBox, by: u32) -> VBox {
    (b.0.saturating_sub(by), b.1.saturating_sub(by), b.2 + by, b.3 + by)
}

fn union(a: VBox, b: VBox) -> VBox {
    (a.0.min(b.0), a.1.min(b.1), a.2.max(b.2), a.3.max(b.3))
}

fn inside(v: (u32, u32), b: VBox) -> bool {
    v.0 >= b.0 && v.0 <= b.2 && v.1 >= b.1 && v.1 <= b.3
}

fn line_box(o: Orientation, line: u32, from: u32, to: u32) -> VBox {
    let (x0, y0) = vertex(o, line, from);
    let (x1, y1) = vertex(o, line, to);
    (x0, y0, x1, y1)
}

fn run_box(r: &Run) -> VBox {
    line_box(r.orientation, r.line, r.start.saturating_sub(1), r.start + r.len + 1)
}

const BUCKET: u32 = 8;

/// Bucketed lookup of runs, passages and gates by the vertices they affect.
struct Index {
    runs: HashMap<(u32, u32), Vec<usize>>,
    passages: HashMap<(u32, u32), Vec<usize>>,
    gates: HashMap<(u32, u32), Vec<WallSlot>>,
}

fn buckets(b: VBox) -> impl Iterator<Item = (u32, u32)> {
    (b.0 / BUCKET..=b.2 / BUCKET).flat_map(move |x| (b.1 / BUCKET..=b.3 / BUCKET).map(move |y| (x, y)))
}

impl Index {
    fn new(p: &Problem) -> Index {
        let mut idx = Index { runs: HashMap::new(), passages: HashMap::new(), gates: HashMap::new() };
        for (i, r) in p.runs.iter().enumerate() {
            for k in buckets(run_box(r)) {
                idx.runs.entry(k).or_default().push(i);
            }
        }
        for (i, e) in p.passages.iter().enumerate() {
            for k in buckets(line_box(e.orientation, e.line, e.pos.saturating_sub(2), e.pos + 3)) {
                idx.passages.entry(k).or_default().push(i);
            }
        }
        for &g in &p.gates {
            for k in buckets(grow((g.x, g.y, g.x, g.y), 1)) {
                idx.gates.entry(k).or_default().push(g);
            }
        }
        idx
    }

    fn query<T: Copy + Ord>(map: &HashMap<(u32, u32), Vec<T>>, b: VBox) -> Vec<T> {
        let mut out: Vec<T> = buckets(b).filter_map(|k| map.get(&k)).flatten().copied().collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// How far beyond a window its evaluation looks, so that spacers placed
/// just outside are accounted for.
const MARGIN: u32 = 6;

fn window_conflicts(p: &Problem, idx: &Index, choice: &[usize], core: VBox) -> Vec<(u32, u32)> {
    let wide = grow(core, MARGIN);
    let runs = Index::query(&idx.runs, wide);
    let passages = Index::query(&idx.passages, wide);
    let gates = Index::query(&idx.gates, wide);
    let mut out: Vec<(u32, u32)> =
        evaluate(p, choice, &runs, &passages, &gates).conflicts.into_iter().filter(|&v| inside(v, core)).collect();
    out.sort_unstable();
    out
}

fn evaluate_all(p: &Problem, choice: &[usize]) -> Evaluation {
    let runs: Vec<usize> = (0..p.runs.len()).collect();
    let passages: Vec<usize> = (0..p.passages.len()).collect();
    let mut gates: Vec<WallSlot> = p.gates.iter().copied().collect();
    gates.sort();
    evaluate(p, choice, &runs, &passages, &gates)
}

const MAX_STEPS: usize = 20_000;
const NOISE: f64 = 0.1;
const SEED: u64 = 0x005e_ed0f_3a11;

/// Derives a wall set realising the channel inside a `width` x `height` canvas.
pub fn synthesize(ch: &Channel, width: u32, height: u32) -> Result<BTreeSet<WallSlot>, SynthError> {
    let (walls, mut conflicts) = search(ch, width, height)?;
    if conflicts.is_empty() {
        return Ok(walls);
    }
    let count = conflicts.len();
    conflicts.sort_unstable();
    conflicts.dedup();
    conflicts.truncate(12);
    Err(SynthError::Unresolved { count, near: conflicts })
}

/// A wall set together with the vertices where runs still clash.
pub type PartialWalls = (BTreeSet<WallSlot>, Vec<(u32, u32)>);

/// The final wall set and leftover conflict vertices, even when repair
/// fails. Meant for inspecting layouts that do not synthesise.
pub fn synthesize_partial(ch: &Channel, width: u32, height: u32) -> Result<PartialWalls, SynthError> {
    search(ch, width, height)
}

/// Min-conflicts repair: pick a clashing vertex, try every alternative
/// choice of the runs around it, and keep the one that leaves the fewest
/// clashes in its neighbourhood (occasionally a random one instead).
fn search(ch: &Channel, width: u32, height: u32) -> Result<PartialWalls, SynthError> {
    let p = build(ch, width, height)?;
    let idx = Index::new(&p);
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut choice = vec![0usize; p.runs.len()];
    let mut steps = 0;
    loop {
        let ev = evaluate_all(&p, &choice);
        if ev.conflicts.is_empty() || steps >= MAX_STEPS {
            return Ok((ev.walls.into_iter().collect(), ev.conflicts));
        }
        let mut open: BTreeMap<(u32, u32), ()> = ev.conflicts.iter().map(|&v| (v, ())).collect();
        while !open.is_empty() && steps < MAX_STEPS {
            steps += 1;
            let v = *open.keys().nth(rng.gen_range(0..open.len())).expect("non-empty");
            let spot = grow((v.0, v.1, v.0, v.1), 2);
            let mut moves: Vec<(usize, usize, i64)> = Vec::new();
            for r in Index::query(&idx.runs, spot) {
                let run = &p.runs[r];
                let rb = run_box(run);
                if run.options.len() < 2 || !(rb.0 <= spot.2 && spot.0 <= rb.2 && rb.1 <= spot.3 && spot.1 <= rb.3) {
                    continue;
                }
                let core = grow(union(rb, spot), 3);
                let before = window_conflicts(&p, &idx, &choice, core).len() as i64;
                let old = choice[r];
                for o in (0..run.options.len()).filter(|&o| o != old) {
                    choice[r] = o;
                    let after = window_conflicts(&p, &idx, &choice, core).len() as i64;
                    moves.push((r, o, after - before));
                }
                choice[r] = old;
            }
            if moves.is_empty() {
                open.remove(&v);
                continue;
            }
            let (r, o, _) = if rng.gen_bool(NOISE) {
                moves[rng.gen_range(0..moves.len())]
            } else {
                let best = moves.iter().map(|m| m.2).min().expect("non-empty");
                let ties: Vec<_> = moves.iter().filter(|m| m.2 == best).copied().collect();
                ties[rng.gen_range(0..ties.len())]
            };
            choice[r] = o;
            let core = grow(union(run_box(&p.runs[r]), spot), 3);
            open.retain(|&k, _| !inside(k, core));
            for k in window_conflicts(&p, &idx, &choice, core) {
                open.insert(k, ());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audit::audit;

    #[test]
    fn straight_channel_gets_full_walls() {
        let mut ch = Channel::new();
        ch.path(&[(1, 2), (4, 2)]);
        let walls = synthesize(&ch, 6, 5).unwrap();
        assert!(audit(&ch, &walls, 6, 5).is_empty());
    }

    #[test]
    fn odd_run_between_passages_is_a_parity_error() {
        // a 4x4 loop: each inner run has 3 edges fenced by passages
        let mut ch = Channel::new();
        ch.path(&[(2, 2), (6, 2), (6, 6), (2, 6), (2, 2)]);
        assert!(matches!(synthesize(&ch, 9, 9), Err(SynthError::Parity { len: 3, .. })));
    }

    #[test]
    fn gate_on_a_walled_edge_is_rejected() {
        let mut ch = Channel::new();
        ch.path(&[(1, 2), (4, 2)]);
        // covers the channel's south side
        ch.add_gate(WallSlot::h(2, 2));
        assert!(matches!(synthesize(&ch, 6, 5), Err(SynthError::GateOnWall(_))));
    }

    #[test]
    fn cells_outside_the_canvas_are_rejected() {
        let mut ch = Channel::new();
        ch.path(&[(1, 1), (5, 1)]);
        assert!(matches!(synthesize(&ch, 4, 4), Err(SynthError::OutsideCanvas(..))));
    }

    #[test]
    fn synthesis_is_deterministic() {
        let mut ch = Channel::new();
        ch.path(&[(1, 2), (4, 2), (4, 6), (8, 6)]);
        assert_eq!(synthesize(&ch, 11, 9).unwrap(), synthesize(&ch, 11, 9).unwrap());
    }
}
