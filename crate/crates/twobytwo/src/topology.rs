//! Swap and half-swap moves, layers and tiles, and path search.
//!
//! Every move acts on one player's pattern in the orientation given, and the
//! result is canonicalized. Moves taken along a path therefore always refer
//! to the canonical orientation of the game they leave.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::atlas::Atlas;
use crate::classify::{classify, Family, Subfamily};
use crate::model::{canonical, Cell, CellSet, Game, Pattern, Player};
use crate::naming::{common_names, resolve};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Level {
    Low,
    Mid,
    High,
}

impl Level {
    pub const ALL: [Level; 3] = [Level::Low, Level::Mid, Level::High];

    pub fn name(self) -> &'static str {
        match self {
            Level::Low => "low",
            Level::Mid => "mid",
            Level::High => "high",
        }
    }
}

impl FromStr for Level {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "low" => Ok(Level::Low),
            "mid" | "middle" => Ok(Level::Mid),
            "high" => Ok(Level::High),
            _ => Err(format!("unknown level {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Low12,
    Mid23,
    High34,
    X13,
    X24,
    X14,
    MakeTie(Level),
    /// Splits the tied group at `level`, promoting the target cells.
    BreakTie(Level, CellSet),
}

impl MoveKind {
    pub const RANK_SWAPS: [MoveKind; 6] = [
        MoveKind::Low12,
        MoveKind::Mid23,
        MoveKind::High34,
        MoveKind::X13,
        MoveKind::X24,
        MoveKind::X14,
    ];

    pub fn ranks(self) -> Option<(u8, u8)> {
        match self {
            MoveKind::Low12 => Some((1, 2)),
            MoveKind::Mid23 => Some((2, 3)),
            MoveKind::High34 => Some((3, 4)),
            MoveKind::X13 => Some((1, 3)),
            MoveKind::X24 => Some((2, 4)),
            MoveKind::X14 => Some((1, 4)),
            _ => None,
        }
    }

    pub fn is_adjacent(self) -> bool {
        matches!(self, MoveKind::Low12 | MoveKind::Mid23 | MoveKind::High34)
    }

    pub fn is_half_swap(self) -> bool {
        matches!(self, MoveKind::MakeTie(_) | MoveKind::BreakTie(..))
    }

    /// Coarse level used for edge styling and graded costs.
    pub fn tier(self) -> &'static str {
        match self {
            MoveKind::Low12 => "low",
            MoveKind::Mid23 => "mid",
            MoveKind::High34 => "high",
            MoveKind::X13 | MoveKind::X24 | MoveKind::X14 => "nonadjacent",
            MoveKind::MakeTie(_) | MoveKind::BreakTie(..) => "half",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveKind::Low12 => f.write_str("low12"),
            MoveKind::Mid23 => f.write_str("mid23"),
            MoveKind::High34 => f.write_str("high34"),
            MoveKind::X13 => f.write_str("x13"),
            MoveKind::X24 => f.write_str("x24"),
            MoveKind::X14 => f.write_str("x14"),
            MoveKind::MakeTie(l) => write!(f, "tie-{}", l.name()),
            MoveKind::BreakTie(l, t) => write!(f, "untie-{}:{t}", l.name()),
        }
    }
}

impl FromStr for MoveKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        let (head, target) = match lower.split_once(':') {
            Some((h, t)) => (h, Some(t)),
            None => (lower.as_str(), None),
        };
        let simple = match head {
            "low12" | "low" | "12" => Some(MoveKind::Low12),
            "mid23" | "mid" | "23" => Some(MoveKind::Mid23),
            "high34" | "high" | "34" => Some(MoveKind::High34),
            "x13" | "13" => Some(MoveKind::X13),
            "x24" | "24" => Some(MoveKind::X24),
            "x14" | "14" => Some(MoveKind::X14),
            _ => None,
        };
        if let Some(k) = simple {
            return match target {
                None => Ok(k),
                Some(_) => Err(format!("move {s:?} takes no target")),
            };
        }
        if let Some(l) = head
            .strip_prefix("tie-")
            .or_else(|| head.strip_prefix("make-tie-"))
        {
            if target.is_some() {
                return Err(format!("move {s:?} takes no target"));
            }
            return Ok(MoveKind::MakeTie(l.parse()?));
        }
        if let Some(l) = head
            .strip_prefix("untie-")
            .or_else(|| head.strip_prefix("break-tie-"))
        {
            let t = target.ok_or_else(|| format!("move {s:?} needs a target such as :UL"))?;
            let cells: CellSet = t.parse()?;
            return Ok(MoveKind::BreakTie(l.parse()?, cells));
        }
        Err(format!("unknown move {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SwapMove {
    pub player: Player,
    pub kind: MoveKind,
}

impl SwapMove {
    pub fn new(player: Player, kind: MoveKind) -> SwapMove {
        SwapMove { player, kind }
    }
}

impl Ord for SwapMove {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.kind, self.player).cmp(&(other.kind, other.player))
    }
}

impl PartialOrd for SwapMove {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Written `player:kind`, e.g. `row:high34`, `column:tie-low`,
/// `row:untie-low:UL`.
impl fmt::Display for SwapMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.player, self.kind)
    }
}

impl FromStr for SwapMove {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p, k) = s
            .split_once(':')
            .ok_or_else(|| format!("expected player:move, got {s:?}"))?;
        Ok(SwapMove::new(p.parse()?, k.parse()?))
    }
}

impl Serialize for SwapMove {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("{mv} not applicable to {game}: {reason}")]
    MoveNotApplicable {
        mv: String,
        game: String,
        reason: String,
    },
    #[error("target {target} is not a proper part of the tied group {group}")]
    InvalidTarget { target: String, group: String },
    #[error("no path found after exploring {explored} games")]
    NoPath { explored: usize },
    #[error("{0} is not a strict game")]
    NotStrict(String),
    #[error("bad goal {0:?}")]
    BadGoal(String),
}

fn not_applicable(game: &Game, mv: SwapMove, reason: impl Into<String>) -> TopologyError {
    TopologyError::MoveNotApplicable {
        mv: mv.to_string(),
        game: game.to_string(),
        reason: reason.into(),
    }
}

fn count(p: Pattern, rank: u8) -> usize {
    p.cells_with(rank).len()
}

/// Pattern-level move; `None` with a reason when the move does not apply.
fn move_pattern(p: Pattern, kind: MoveKind) -> Result<Pattern, String> {
    if let Some((a, b)) = kind.ranks() {
        let (na, nb) = (count(p, a), count(p, b));
        if na == 0 || nb == 0 {
            return Err(format!(
                "pattern {p} lacks rank {}",
                if na == 0 { a } else { b }
            ));
        }
        if na != nb {
            return Err(format!("ranks {a} and {b} are tied unevenly in {p}"));
        }
        return Ok(p.exchange(a, b));
    }
    let groups = p.groups();
    match kind {
        MoveKind::MakeTie(level) => {
            let n = groups.len();
            let at = match level {
                Level::Low if n >= 2 => 0,
                Level::High if n >= 2 => n - 2,
                Level::Mid if n == 4 => 1,
                _ => return Err(format!("no distinct {} pair to tie in {p}", level.name())),
            };
            let mut merged = groups.clone();
            let upper = merged.remove(at + 1);
            merged[at] = merged[at].union(upper);
            Ok(Pattern::from_groups(&merged))
        }
        MoveKind::BreakTie(level, target) => {
            let n = groups.len();
            let at = match level {
                Level::Low => Some(0),
                Level::High => Some(n - 1),
                Level::Mid => (1..n.saturating_sub(1)).find(|i| groups[*i].len() > 1),
            };
            let at = match at {
                Some(i) if groups[i].len() > 1 => i,
                _ => return Err(format!("no {} tie in {p}", level.name())),
            };
            let group = groups[at];
            if target.is_empty() || !target.is_subset(group) || target == group {
                return Err(format!("target:{target}:{group}"));
            }
            let mut split = groups.clone();
            split[at] = group.difference(target);
            split.insert(at + 1, target);
            Ok(Pattern::from_groups(&split))
        }
        _ => unreachable!(),
    }
}

/// Applies any move and canonicalizes the result.
pub fn apply_swap(game: &Game, mv: SwapMove) -> Result<Game, TopologyError> {
    match move_pattern(game.pattern(mv.player), mv.kind) {
        Ok(p) => Ok(canonical(&game.with_pattern(mv.player, p))),
        Err(reason) => match reason.strip_prefix("target:") {
            Some(rest) => {
                let (t, g) = rest.split_once(':').unwrap_or((rest, ""));
                Err(TopologyError::InvalidTarget {
                    target: t.to_string(),
                    group: g.to_string(),
                })
            }
            None => Err(not_applicable(game, mv, reason)),
        },
    }
}

pub fn make_tie(game: &Game, player: Player, level: Level) -> Result<Game, TopologyError> {
    apply_swap(game, SwapMove::new(player, MoveKind::MakeTie(level)))
}

pub fn break_tie(
    game: &Game,
    player: Player,
    level: Level,
    target: CellSet,
) -> Result<Game, TopologyError> {
    apply_swap(
        game,
        SwapMove::new(player, MoveKind::BreakTie(level, target)),
    )
}

/// Which move kinds a search or neighbor listing may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MoveSet {
    pub adjacent: bool,
    pub nonadjacent: bool,
    pub ties: bool,
}

impl Default for MoveSet {
    fn default() -> Self {
        MoveSet::ADJACENT
    }
}

impl MoveSet {
    pub const ADJACENT: MoveSet = MoveSet {
        adjacent: true,
        nonadjacent: false,
        ties: false,
    };
    pub const ALL: MoveSet = MoveSet {
        adjacent: true,
        nonadjacent: true,
        ties: true,
    };

    pub fn allows(self, kind: MoveKind) -> bool {
        if kind.is_adjacent() {
            self.adjacent
        } else if kind.is_half_swap() {
            self.ties
        } else {
            self.nonadjacent
        }
    }
}

impl fmt::Display for MoveSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.adjacent {
            parts.push("adjacent");
        }
        if self.nonadjacent {
            parts.push("nonadjacent");
        }
        if self.ties {
            parts.push("ties");
        }
        f.write_str(&parts.join(","))
    }
}

/// Comma-separated flags: `adjacent`, `nonadjacent`, `ties`, `all`.
impl FromStr for MoveSet {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut m = MoveSet {
            adjacent: false,
            nonadjacent: false,
            ties: false,
        };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part.to_ascii_lowercase().as_str() {
                "adjacent" => m.adjacent = true,
                "nonadjacent" | "non-adjacent" => m.nonadjacent = true,
                "ties" | "half" | "half-swaps" => m.ties = true,
                "all" => m = MoveSet::ALL,
                other => return Err(format!("unknown move flag {other:?}")),
            }
        }
        if !(m.adjacent || m.nonadjacent || m.ties) {
            return Err("empty move set".into());
        }
        Ok(m)
    }
}

/// Move costs, in thousandths of a unit so half-swaps stay integral.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum CostModel {
    #[default]
    Uniform,
    /// Low 1, Mid 2, High 3, half-swaps 0.5; a non-adjacent swap costs the
    /// sum of the adjacent levels it spans.
    Graded,
}

impl CostModel {
    pub const UNIT: u64 = 1000;

    pub fn cost(self, kind: MoveKind) -> u64 {
        match self {
            CostModel::Uniform => Self::UNIT,
            CostModel::Graded => match kind {
                MoveKind::Low12 => 1000,
                MoveKind::Mid23 => 2000,
                MoveKind::High34 => 3000,
                MoveKind::X13 => 3000,
                MoveKind::X24 => 5000,
                MoveKind::X14 => 6000,
                MoveKind::MakeTie(_) | MoveKind::BreakTie(..) => 500,
            },
        }
    }
}

impl FromStr for CostModel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "uniform" => Ok(CostModel::Uniform),
            "graded" => Ok(CostModel::Graded),
            _ => Err(format!("unknown cost model {s:?}")),
        }
    }
}

impl fmt::Display for CostModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CostModel::Uniform => "uniform",
            CostModel::Graded => "graded",
        })
    }
}

/// Every applicable move of the set, in move order.
pub fn candidate_moves(game: &Game, move_set: MoveSet) -> Vec<SwapMove> {
    let mut out = Vec::new();
    let mut kinds: Vec<MoveKind> = MoveKind::RANK_SWAPS.to_vec();
    kinds.extend(Level::ALL.map(MoveKind::MakeTie));
    for player in Player::BOTH {
        let mut ks = kinds.clone();
        if move_set.ties {
            let groups = game.pattern(player).groups();
            for level in Level::ALL {
                for g in &groups {
                    for t in g.proper_subsets() {
                        ks.push(MoveKind::BreakTie(level, t));
                    }
                }
            }
        }
        for k in ks {
            if move_set.allows(k) && move_pattern(game.pattern(player), k).is_ok() {
                out.push(SwapMove::new(player, k));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn neighbors(game: &Game, move_set: MoveSet) -> Vec<(SwapMove, Game)> {
    candidate_moves(game, move_set)
        .into_iter()
        .map(|m| (m, apply_swap(game, m).expect("candidate moves apply")))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Layer {
    L1Discord,
    L2ColumnAligned,
    L3WinWin,
    L4RowAligned,
}

impl Layer {
    pub const ALL: [Layer; 4] = [
        Layer::L1Discord,
        Layer::L2ColumnAligned,
        Layer::L3WinWin,
        Layer::L4RowAligned,
    ];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    fn of_cells(row_top: Cell, column_top: Cell) -> Layer {
        if row_top == column_top {
            Layer::L3WinWin
        } else if row_top.col() == column_top.col() {
            Layer::L2ColumnAligned
        } else if row_top.row() == column_top.row() {
            Layer::L4RowAligned
        } else {
            Layer::L1Discord
        }
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.number())
    }
}

impl FromStr for Layer {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let k = s.to_ascii_lowercase().replace(['_', '-', ' '], "");
        let n = match k.as_str() {
            "1" | "l1" | "discord" | "l1discord" => 1,
            "2" | "l2" | "columnaligned" | "l2columnaligned" => 2,
            "3" | "l3" | "winwin" | "l3winwin" => 3,
            "4" | "l4" | "rowaligned" | "l4rowaligned" => 4,
            _ => return Err(format!("unknown layer {s:?}")),
        };
        Ok(Layer::ALL[n - 1])
    }
}

/// Layer of a strict game, from where the two 4s sit.
pub fn layer_of(game: &Game) -> Result<Layer, TopologyError> {
    if !game.is_strict() {
        return Err(TopologyError::NotStrict(game.to_string()));
    }
    let layers = layers_of(game);
    Ok(*layers.iter().next().expect("one layer"))
}

/// Every layer obtained by choosing one best cell per player. Strict games
/// and games whose top ranks are untied get one layer; tied tops sit
/// between several.
pub fn layers_of(game: &Game) -> BTreeSet<Layer> {
    let mut out = BTreeSet::new();
    for a in game.row.top_cells().iter() {
        for b in game.column.top_cells().iter() {
            out.insert(Layer::of_cells(a, b));
        }
    }
    out
}

/// Closure of a game under the given move kinds for both players.
pub fn swap_closure(game: &Game, kinds: &[MoveKind]) -> BTreeSet<Game> {
    let start = canonical(game);
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(g) = stack.pop() {
        for player in Player::BOTH {
            for k in kinds {
                if let Ok(h) = apply_swap(&g, SwapMove::new(player, *k)) {
                    if seen.insert(h) {
                        stack.push(h);
                    }
                }
            }
        }
    }
    seen
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tile {
    pub members: BTreeSet<Game>,
}

impl Tile {
    /// Least member, used as the tile's label.
    pub fn key(&self) -> Game {
        *self.members.iter().next().expect("tiles are non-empty")
    }
}

pub fn tile_of(game: &Game) -> Result<Tile, TopologyError> {
    if !game.is_strict() {
        return Err(TopologyError::NotStrict(game.to_string()));
    }
    Ok(Tile {
        members: swap_closure(game, &[MoveKind::Low12]),
    })
}

/// Experimental groupings by closure under one other swap kind.
pub fn experimental_tile(game: &Game, kind: MoveKind) -> BTreeSet<Game> {
    swap_closure(game, &[kind])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TileLinkKind {
    Hotspot,
    Pipe,
    Simple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TileLink {
    pub kind: TileLinkKind,
    /// Tile labels (least member), sorted.
    pub tiles: Vec<Game>,
    /// Undirected High34 edges as (lesser game, move from it, other game).
    pub edges: Vec<(Game, SwapMove, Game)>,
}

/// Groups the inter-layer High34 edges of the strict games by the connected
/// tile structures they form. Two tiles joined only to each other form a
/// hotspot; four tiles on four different layers form a pipe.
pub fn tile_links(atlas: &Atlas) -> Vec<TileLink> {
    let strict = atlas.strict_games();
    let mut tile_key: BTreeMap<Game, Game> = BTreeMap::new();
    for g in &strict {
        if !tile_key.contains_key(g) {
            let t = tile_of(g).expect("strict");
            let k = t.key();
            for m in t.members {
                tile_key.insert(m, k);
            }
        }
    }
    let mut edges: BTreeSet<(Game, SwapMove, Game)> = BTreeSet::new();
    let mut adj: BTreeMap<Game, BTreeSet<Game>> = BTreeMap::new();
    for g in &strict {
        for player in Player::BOTH {
            let mv = SwapMove::new(player, MoveKind::High34);
            let h = apply_swap(g, mv).expect("strict games have ranks 3 and 4");
            if *g < h {
                edges.insert((*g, mv, h));
            }
            let (a, b) = (tile_key[g], tile_key[&h]);
            adj.entry(a).or_default().insert(b);
        }
    }
    // Connected components of the tile graph.
    let mut comp: BTreeMap<Game, usize> = BTreeMap::new();
    let mut comps: Vec<Vec<Game>> = Vec::new();
    for start in adj.keys() {
        if comp.contains_key(start) {
            continue;
        }
        let id = comps.len();
        let mut members = vec![];
        let mut stack = vec![*start];
        comp.insert(*start, id);
        while let Some(t) = stack.pop() {
            members.push(t);
            for n in &adj[&t] {
                if !comp.contains_key(n) {
                    comp.insert(*n, id);
                    stack.push(*n);
                }
            }
        }
        members.sort();
        comps.push(members);
    }
    let mut links: Vec<TileLink> = comps
        .into_iter()
        .map(|tiles| {
            let layers: BTreeSet<Layer> = tiles.iter().map(|t| layer_of(t).unwrap()).collect();
            let kind = match (tiles.len(), layers.len()) {
                (2, 2) => TileLinkKind::Hotspot,
                (4, 4) => TileLinkKind::Pipe,
                _ => TileLinkKind::Simple,
            };
            TileLink {
                kind,
                tiles,
                edges: Vec::new(),
            }
        })
        .collect();
    for e in edges {
        let id = comp[&tile_key[&e.0]];
        links[id].edges.push(e);
    }
    links
}

/// A search target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Goal {
    Family(Family),
    Subfamily(Subfamily),
    Game(Game),
    Layer(Layer),
}

impl Goal {
    pub fn matches(&self, game: &Game) -> bool {
        match self {
            Goal::Family(f) => classify(game).family == *f,
            Goal::Subfamily(s) => classify(game).subfamily == *s,
            Goal::Game(g) => canonical(g) == canonical(game),
            Goal::Layer(l) => layers_of(game).contains(l),
        }
    }
}

impl fmt::Display for Goal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Goal::Family(x) => write!(f, "family:{x}"),
            Goal::Subfamily(x) => write!(f, "subfamily:{x}"),
            Goal::Game(g) => write!(f, "game:{g}"),
            Goal::Layer(l) => write!(f, "layer:{}", l.number()),
        }
    }
}

impl Serialize for Goal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `family:<name>`, `subfamily:<name>`, `game:<encoding or name>` or
/// `layer:<1-4>`. Without a prefix, families, subfamilies and then games
/// are tried in turn.
impl FromStr for Goal {
    type Err = TopologyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TopologyError::BadGoal(s.to_string());
        let s = s.trim();
        match s.split_once(':') {
            Some(("family", v)) => v.parse().map(Goal::Family).map_err(|_| bad()),
            Some(("subfamily", v)) => v.parse().map(Goal::Subfamily).map_err(|_| bad()),
            Some(("layer", v)) => v.parse().map(Goal::Layer).map_err(|_| bad()),
            Some(("game", v)) => resolve(v).map(Goal::Game).ok_or_else(bad),
            Some(_) => Err(bad()),
            None => s
                .parse()
                .map(Goal::Family)
                .or_else(|_| s.parse().map(Goal::Subfamily))
                .or_else(|_| resolve(s).map(Goal::Game).ok_or_else(bad)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathStep {
    #[serde(rename = "move")]
    pub mv: SwapMove,
    pub game: Game,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Path {
    pub start: Game,
    pub steps: Vec<PathStep>,
    /// Total cost in thousandths.
    pub cost: u64,
}

impl Path {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> Game {
        self.steps.last().map_or(self.start, |s| s.game)
    }

    /// Re-applies every move; `Err` names the first step that does not
    /// reproduce the recorded game.
    pub fn replay(&self) -> Result<Game, usize> {
        let mut g = self.start;
        for (i, s) in self.steps.iter().enumerate() {
            match apply_swap(&g, s.mv) {
                Ok(h) if h == s.game => g = h,
                _ => return Err(i),
            }
        }
        Ok(g)
    }

    /// Start encoding, then one `move -> encoding [common name]` line per step.
    pub fn to_text(&self) -> String {
        let label = |g: &Game| {
            let names = common_names(g);
            match names.first().and_then(|e| e.names.first()) {
                Some(n) => format!("{g} [{n}]"),
                None => g.to_string(),
            }
        };
        let mut out = label(&self.start) + "\n";
        for s in &self.steps {
            out.push_str(&format!("{} -> {}\n", s.mv, label(&s.game)));
        }
        out
    }
}

/// Minimum cost and, among those, fewest steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Distance {
    pub cost: u64,
    pub steps: usize,
}

/// Order among equally cheap moves: higher payoffs first, whole swaps
/// before half-swaps.
fn preference(kind: MoveKind) -> u8 {
    let level = |l: Level| match l {
        Level::High => 0,
        Level::Mid => 1,
        Level::Low => 2,
    };
    match kind {
        MoveKind::High34 => 0,
        MoveKind::Mid23 => 1,
        MoveKind::Low12 => 2,
        MoveKind::X14 => 3,
        MoveKind::X24 => 4,
        MoveKind::X13 => 5,
        MoveKind::MakeTie(l) => 6 + level(l),
        MoveKind::BreakTie(l, _) => 9 + level(l),
    }
}

/// Uniform-cost search. Ties are broken by path length, then by the
/// sequence of moves compared step by step, preferring higher swaps.
pub fn shortest_path(
    start: &Game,
    goal: &Goal,
    move_set: MoveSet,
    costs: CostModel,
) -> Result<Path, TopologyError> {
    let start = canonical(start);
    type Key = (u64, usize, Vec<(u8, SwapMove, Game)>, Game);
    let mut heap: BinaryHeap<Reverse<Key>> = BinaryHeap::new();
    let mut settled: BTreeSet<Game> = BTreeSet::new();
    heap.push(Reverse((0, 0, Vec::new(), start)));
    while let Some(Reverse((cost, len, seq, g))) = heap.pop() {
        if !settled.insert(g) {
            continue;
        }
        if goal.matches(&g) {
            return Ok(Path {
                start,
                steps: seq
                    .into_iter()
                    .map(|(_, mv, game)| PathStep { mv, game })
                    .collect(),
                cost,
            });
        }
        for (mv, h) in neighbors(&g, move_set) {
            if settled.contains(&h) {
                continue;
            }
            let mut s = seq.clone();
            s.push((preference(mv.kind), mv, h));
            heap.push(Reverse((cost + costs.cost(mv.kind), len + 1, s, h)));
        }
    }
    Err(TopologyError::NoPath {
        explored: settled.len(),
    })
}

/// Forward move graph over the atlas games.
pub struct MoveGraph {
    pub edges: Vec<Vec<(SwapMove, usize)>>,
}

impl MoveGraph {
    pub fn build(atlas: &Atlas, move_set: MoveSet) -> MoveGraph {
        let edges = atlas
            .games()
            .iter()
            .map(|g| {
                neighbors(g, move_set)
                    .into_iter()
                    .map(|(m, h)| (m, atlas.id_of(&h).expect("moves stay in the atlas")))
                    .collect()
            })
            .collect();
        MoveGraph { edges }
    }
}

/// Distance from every atlas game that can reach the goal, by multi-source
/// search backwards from the goal games.
pub fn escape_map(
    atlas: &Atlas,
    goal: &Goal,
    move_set: MoveSet,
    costs: CostModel,
) -> BTreeMap<Game, Distance> {
    let graph = MoveGraph::build(atlas, move_set);
    let mut reverse: Vec<Vec<(u64, usize)>> = vec![Vec::new(); atlas.len()];
    for (from, out) in graph.edges.iter().enumerate() {
        for (mv, to) in out {
            reverse[*to].push((costs.cost(mv.kind), from));
        }
    }
    let mut best: Vec<Option<Distance>> = vec![None; atlas.len()];
    let mut heap = BinaryHeap::new();
    for (i, g) in atlas.games().iter().enumerate() {
        if goal.matches(g) {
            let d = Distance { cost: 0, steps: 0 };
            best[i] = Some(d);
            heap.push(Reverse((d, i)));
        }
    }
    while let Some(Reverse((d, i))) = heap.pop() {
        if best[i] != Some(d) {
            continue;
        }
        for (c, j) in &reverse[i] {
            let nd = Distance {
                cost: d.cost + c,
                steps: d.steps + 1,
            };
            if best[*j].is_none_or(|b| nd < b) {
                best[*j] = Some(nd);
                heap.push(Reverse((nd, *j)));
            }
        }
    }
    best.into_iter()
        .enumerate()
        .filter_map(|(i, d)| d.map(|d| (atlas.games()[i], d)))
        .collect()
}
