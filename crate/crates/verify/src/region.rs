use board::{pawn_moves_from, slot_conflict, step_blocked, Dir, Position, Square, WallLookup, WallSlot};
use gadgets::GadgetBlueprint;
use reduction::Crop;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

/// Board side assumed for a standalone gadget, large enough that no move
/// near the gadget meets a board edge other than row or column 0.
const FREE_SIDE: u32 = 1 << 24;

/// A rectangular window onto a board, with named exit squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub name: String,
    pub bounds: Crop,
    /// Every wall touching a square of `bounds`.
    pub walls: BTreeSet<WallSlot>,
    pub ports: BTreeMap<String, Square>,
    pub white: Option<Square>,
    pub black: Option<Square>,
    /// Side of the board the window was cut from, when there is one.
    pub board_n: Option<u32>,
}

/// Whether `slot` separates two squares of which at least one lies in `bounds`.
fn touches(slot: WallSlot, b: &Crop) -> bool {
    let cols = slot.x.saturating_sub(1)..=slot.x;
    let rows = slot.y.saturating_sub(1)..=slot.y;
    cols.clone().any(|c| (b.x0..=b.x1).contains(&c)) && rows.clone().any(|r| (b.y0..=b.y1).contains(&r))
}

/// Pawn-free BFS distances from `start` on an `n`-sided board, never leaving `bounds`.
pub fn distances_within<W: WallLookup + ?Sized>(walls: &W, n: u32, bounds: &Crop, start: Square) -> HashMap<Square, u32> {
    let mut dist = HashMap::from([(start, 0)]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let d = dist[&s];
        for dir in Dir::ALL {
            if step_blocked(walls, s, dir) {
                continue;
            }
            let Some(t) = s.step(dir, n).filter(|&t| bounds.contains(t)) else { continue };
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(t) {
                e.insert(d + 1);
                queue.push_back(t);
            }
        }
    }
    dist
}

impl Region {
    /// The whole canvas of a gadget. A port named `junction` is not an
    /// exit; it becomes the Black pawn's square.
    pub fn from_blueprint(bp: &GadgetBlueprint) -> Region {
        let mut ports = bp.ports.clone();
        let black = ports.remove("junction");
        Region {
            name: bp.name.clone(),
            bounds: Crop { x0: 0, y0: 0, x1: bp.width - 1, y1: bp.height - 1 },
            walls: bp.walls.clone(),
            ports,
            white: None,
            black,
            board_n: None,
        }
    }

    pub fn crop(name: &str, pos: &Position, bounds: Crop, ports: BTreeMap<String, Square>) -> Region {
        let walls = pos.walls.iter().copied().filter(|&w| touches(w, &bounds)).collect();
        let inside = |s: Square| bounds.contains(s).then_some(s);
        Region {
            name: name.into(),
            bounds,
            walls,
            ports,
            white: inside(pos.white_pawn),
            black: inside(pos.black_pawn),
            board_n: Some(pos.n),
        }
    }

    pub fn side(&self) -> u32 {
        self.board_n.unwrap_or(FREE_SIDE)
    }

    pub fn contains(&self, s: Square) -> bool {
        self.bounds.contains(s)
    }

    pub fn port(&self, name: &str) -> Square {
        self.ports[name]
    }

    /// Pawn-free distances from `start` over `walls`, inside the bounds.
    pub fn distances(&self, walls: &BTreeSet<WallSlot>, start: Square) -> HashMap<Square, u32> {
        distances_within(walls, self.side(), &self.bounds, start)
    }

    /// Squares connected to some port, in canonical order.
    pub fn open_squares(&self, walls: &BTreeSet<WallSlot>) -> Vec<Square> {
        let mut all = BTreeSet::new();
        for &p in self.ports.values() {
            all.extend(self.distances(walls, p).into_keys());
        }
        all.into_iter().collect()
    }

    /// Greatest pawn-free distance between two open squares.
    pub fn diameter(&self) -> u32 {
        self.open_squares(&self.walls)
            .into_iter()
            .map(|s| self.distances(&self.walls, s).into_values().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Pawn moves from `me` with the other pawn on `them`, kept inside the bounds.
    pub fn moves(&self, walls: &BTreeSet<WallSlot>, me: Square, them: Square) -> Vec<Square> {
        let mut out = pawn_moves_from(walls, self.side(), me, them);
        out.retain(|&s| self.contains(s));
        out
    }

    /// Slots that are free to place and would cut a passage between two
    /// open squares. Path legality is not considered: a region has no goal rows.
    pub fn cutting_slots(&self, walls: &BTreeSet<WallSlot>) -> Vec<WallSlot> {
        let open: BTreeSet<Square> = self.open_squares(walls).into_iter().collect();
        let b = &self.bounds;
        let mut out = Vec::new();
        for orientation in [board::Orientation::H, board::Orientation::V] {
            for x in b.x0.max(1)..=b.x1 + 1 {
                for y in b.y0.max(1)..=b.y1 + 1 {
                    let slot = WallSlot::new(orientation, x, y);
                    if self.board_n.is_some_and(|n| !slot.in_bounds(n)) {
                        continue;
                    }
                    let cuts = slot.blocked_edges().into_iter().any(|(s, d)| {
                        open.contains(&s) && s.step(d, self.side()).is_some_and(|t| open.contains(&t))
                    });
                    if cuts && slot_conflict(walls, slot).is_none() {
                        out.push(slot);
                    }
                }
            }
        }
        out
    }
}
