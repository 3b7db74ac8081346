//! Ranks, payoff patterns, games, orientation transforms and canonical forms.
//!
//! Cells are addressed in the fixed order UL, UR, DL, DR. Row chooses the
//! row (Up/Down), Column chooses the column (Left/Right). A game is written
//! as `rUL rUR rDL rDR / cUL cUR cDL cDR`, e.g. `1324/4321`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid payoff: {0}")]
    InvalidPayoff(String),
    #[error("cannot parse game {text:?}: {reason}")]
    Malformed { text: String, reason: String },
    #[error("{player} ranks {multiset} do not form a tie-class multiset")]
    InvalidMultiset { player: Player, multiset: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    Row,
    Column,
}

impl Player {
    pub const BOTH: [Player; 2] = [Player::Row, Player::Column];

    pub fn other(self) -> Player {
        match self {
            Player::Row => Player::Column,
            Player::Column => Player::Row,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Row => "row",
            Player::Column => "column",
        })
    }
}

impl FromStr for Player {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "row" | "r" => Ok(Player::Row),
            "column" | "col" | "c" => Ok(Player::Column),
            _ => Err(format!("unknown player {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Cell {
    UL,
    UR,
    DL,
    DR,
}

impl Cell {
    pub const ALL: [Cell; 4] = [Cell::UL, Cell::UR, Cell::DL, Cell::DR];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Cell {
        Cell::ALL[i]
    }

    /// 0 for Up, 1 for Down.
    pub fn row(self) -> usize {
        self.index() / 2
    }

    /// 0 for Left, 1 for Right.
    pub fn col(self) -> usize {
        self.index() % 2
    }

    /// The cell reached when `player` switches strategy.
    pub fn deviation(self, player: Player) -> Cell {
        match player {
            Player::Row => Cell::from_index(self.index() ^ 2),
            Player::Column => Cell::from_index(self.index() ^ 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Cell::UL => "UL",
            Cell::UR => "UR",
            Cell::DL => "DL",
            Cell::DR => "DR",
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Cell {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "UL" => Ok(Cell::UL),
            "UR" => Ok(Cell::UR),
            "DL" => Ok(Cell::DL),
            "DR" => Ok(Cell::DR),
            _ => Err(format!("unknown cell {s:?}")),
        }
    }
}

/// A set of cells as a 4-bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellSet(u8);

impl CellSet {
    pub const EMPTY: CellSet = CellSet(0);
    pub const ALL: CellSet = CellSet(0b1111);

    pub fn from_bits(bits: u8) -> CellSet {
        CellSet(bits & 0b1111)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn single(cell: Cell) -> CellSet {
        CellSet(1 << cell.index())
    }

    pub fn contains(self, cell: Cell) -> bool {
        self.0 & (1 << cell.index()) != 0
    }

    pub fn insert(&mut self, cell: Cell) {
        self.0 |= 1 << cell.index();
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: CellSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: CellSet) -> CellSet {
        CellSet(self.0 | other.0)
    }

    pub fn difference(self, other: CellSet) -> CellSet {
        CellSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = Cell> {
        Cell::ALL.into_iter().filter(move |c| self.contains(*c))
    }

    /// Non-empty proper subsets, in increasing mask order.
    pub fn proper_subsets(self) -> impl Iterator<Item = CellSet> {
        let full = self.0;
        (1..full).filter(move |m| m & !full == 0).map(CellSet)
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        let mut s = CellSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.iter().map(Cell::name).collect();
        f.write_str(&names.join("+"))
    }
}

impl FromStr for CellSet {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split('+').map(|p| p.trim().parse::<Cell>()).collect()
    }
}

impl Serialize for CellSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(Cell::name))
    }
}

/// The eight Fraser-Kilgour preference classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TieClass {
    Strict,
    LowTies,
    MiddleTies,
    HighTies,
    Triple,
    Double,
    Basic,
    Zero,
}

impl TieClass {
    pub const ALL: [TieClass; 8] = [
        TieClass::Strict,
        TieClass::LowTies,
        TieClass::MiddleTies,
        TieClass::HighTies,
        TieClass::Triple,
        TieClass::Double,
        TieClass::Basic,
        TieClass::Zero,
    ];

    pub fn multiset(self) -> [u8; 4] {
        match self {
            TieClass::Strict => [1, 2, 3, 4],
            TieClass::LowTies => [1, 1, 3, 4],
            TieClass::MiddleTies => [1, 3, 3, 4],
            TieClass::HighTies => [1, 2, 4, 4],
            TieClass::Triple => [1, 4, 4, 4],
            TieClass::Double => [1, 1, 4, 4],
            TieClass::Basic => [1, 1, 1, 4],
            TieClass::Zero => [0, 0, 0, 0],
        }
    }

    /// Sizes of the tied groups, lowest first.
    pub fn shape(self) -> &'static [usize] {
        match self {
            TieClass::Strict => &[1, 1, 1, 1],
            TieClass::LowTies => &[2, 1, 1],
            TieClass::MiddleTies => &[1, 2, 1],
            TieClass::HighTies => &[1, 1, 2],
            TieClass::Triple => &[1, 3],
            TieClass::Double => &[2, 2],
            TieClass::Basic => &[3, 1],
            TieClass::Zero => &[4],
        }
    }

    pub fn from_shape(shape: &[usize]) -> Option<TieClass> {
        TieClass::ALL.into_iter().find(|c| c.shape() == shape)
    }

    pub fn from_multiset(sorted: [u8; 4]) -> Option<TieClass> {
        TieClass::ALL.into_iter().find(|c| c.multiset() == sorted)
    }

    pub fn name(self) -> &'static str {
        match self {
            TieClass::Strict => "strict",
            TieClass::LowTies => "low",
            TieClass::MiddleTies => "middle",
            TieClass::HighTies => "high",
            TieClass::Triple => "triple",
            TieClass::Double => "double",
            TieClass::Basic => "basic",
            TieClass::Zero => "zero",
        }
    }
}

impl fmt::Display for TieClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TieClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.to_ascii_lowercase();
        TieClass::ALL
            .into_iter()
            .find(|c| c.name() == s || format!("{:?}", c).to_ascii_lowercase() == s)
            .ok_or_else(|| format!("unknown tie class {s:?}"))
    }
}

/// One player's ranks over the four cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern([u8; 4]);

impl Pattern {
    pub fn new(ranks: [u8; 4]) -> Option<Pattern> {
        let mut sorted = ranks;
        sorted.sort_unstable();
        TieClass::from_multiset(sorted).map(|_| Pattern(ranks))
    }

    pub(crate) fn raw(ranks: [u8; 4]) -> Pattern {
        debug_assert!(Pattern::new(ranks).is_some(), "{ranks:?}");
        Pattern(ranks)
    }

    /// Builds a pattern from tied groups listed worst first.
    pub fn from_groups(groups: &[CellSet]) -> Pattern {
        let shape: Vec<usize> = groups.iter().map(|g| g.len()).collect();
        let class = TieClass::from_shape(&shape).expect("groups must partition the four cells");
        let ms = class.multiset();
        let mut ranks = [0u8; 4];
        let mut pos = 0;
        for g in groups {
            for c in g.iter() {
                ranks[c.index()] = ms[pos];
            }
            pos += g.len();
        }
        Pattern(ranks)
    }

    pub fn ranks(self) -> [u8; 4] {
        self.0
    }

    pub fn rank(self, cell: Cell) -> u8 {
        self.0[cell.index()]
    }

    pub fn tie_class(self) -> TieClass {
        let mut sorted = self.0;
        sorted.sort_unstable();
        TieClass::from_multiset(sorted).expect("validated on construction")
    }

    pub fn is_strict(self) -> bool {
        self.tie_class() == TieClass::Strict
    }

    pub fn max(self) -> u8 {
        *self.0.iter().max().unwrap()
    }

    pub fn cells_with(self, rank: u8) -> CellSet {
        Cell::ALL
            .into_iter()
            .filter(|c| self.rank(*c) == rank)
            .collect()
    }

    pub fn top_cells(self) -> CellSet {
        self.cells_with(self.max())
    }

    /// Tied groups of cells, worst first.
    pub fn groups(self) -> Vec<CellSet> {
        let mut levels: Vec<u8> = self.0.to_vec();
        levels.sort_unstable();
        levels.dedup();
        levels.into_iter().map(|r| self.cells_with(r)).collect()
    }

    pub fn swap_rows(self) -> Pattern {
        let p = self.0;
        Pattern([p[2], p[3], p[0], p[1]])
    }

    pub fn swap_columns(self) -> Pattern {
        let p = self.0;
        Pattern([p[1], p[0], p[3], p[2]])
    }

    pub fn transpose(self) -> Pattern {
        let p = self.0;
        Pattern([p[0], p[2], p[1], p[3]])
    }

    /// Reflection across the UR-DL diagonal.
    pub fn anti_transpose(self) -> Pattern {
        let p = self.0;
        Pattern([p[3], p[1], p[2], p[0]])
    }

    /// Exchanges every occurrence of ranks `a` and `b`.
    pub(crate) fn exchange(self, a: u8, b: u8) -> Pattern {
        Pattern(self.0.map(|x| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        }))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.0 {
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Pattern {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits: Vec<u8> = s
            .chars()
            .map(|c| c.to_digit(10).filter(|d| *d <= 4).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| format!("pattern {s:?} must use digits 0-4"))?;
        let ranks: [u8; 4] = digits
            .try_into()
            .map_err(|_| format!("pattern {s:?} must have four digits"))?;
        Pattern::new(ranks).ok_or_else(|| format!("{s} is not a tie-class multiset"))
    }
}

/// Maps real payoffs onto the canonical ranks of their weak order.
///
/// Sorted values join the current tied group while they stay within
/// `tolerance` of the group's smallest value.
pub fn normalize_payoffs(values: [f64; 4], tolerance: f64) -> Result<Pattern, ModelError> {
    if let Some(v) = values.iter().find(|v| !v.is_finite()) {
        return Err(ModelError::InvalidPayoff(format!("{v} is not finite")));
    }
    if !(tolerance.is_finite() && tolerance >= 0.0) {
        return Err(ModelError::InvalidPayoff(format!("tolerance {tolerance}")));
    }
    let mut order = Cell::ALL;
    order.sort_by(|a, b| values[a.index()].total_cmp(&values[b.index()]));
    let mut groups: Vec<CellSet> = Vec::new();
    let mut base = f64::NEG_INFINITY;
    for c in order {
        let v = values[c.index()];
        match groups.last_mut() {
            Some(g) if v - base <= tolerance => g.insert(c),
            _ => {
                groups.push(CellSet::single(c));
                base = v;
            }
        }
    }
    Ok(Pattern::from_groups(&groups))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Game {
    pub row: Pattern,
    pub column: Pattern,
}

impl Game {
    pub fn new(row: Pattern, column: Pattern) -> Game {
        Game { row, column }
    }

    pub fn pattern(&self, player: Player) -> Pattern {
        match player {
            Player::Row => self.row,
            Player::Column => self.column,
        }
    }

    pub fn with_pattern(&self, player: Player, p: Pattern) -> Game {
        match player {
            Player::Row => Game::new(p, self.column),
            Player::Column => Game::new(self.row, p),
        }
    }

    pub fn payoff(&self, cell: Cell) -> (u8, u8) {
        (self.row.rank(cell), self.column.rank(cell))
    }

    pub fn rank(&self, player: Player, cell: Cell) -> u8 {
        self.pattern(player).rank(cell)
    }

    pub fn is_strict(&self) -> bool {
        self.row.is_strict() && self.column.is_strict()
    }

    pub fn tie_classes(&self) -> (TieClass, TieClass) {
        (self.row.tie_class(), self.column.tie_class())
    }

    pub fn apply(&self, t: Transform) -> Game {
        let (mut r, mut c) = (self.row, self.column);
        if t.swap_rows {
            r = r.swap_rows();
            c = c.swap_rows();
        }
        if t.swap_columns {
            r = r.swap_columns();
            c = c.swap_columns();
        }
        if t.transpose {
            (r, c) = (c.transpose(), r.transpose());
        }
        Game::new(r, c)
    }

    /// The four row/column interchange variants, identity first.
    pub fn interchange_variants(&self) -> [Game; 4] {
        Transform::INTERCHANGE.map(|t| self.apply(t))
    }

    /// Row's best in the right column and Column's best in the upper row.
    pub fn satisfies_orientation_rule(&self) -> bool {
        let rt = self.row.top_cells();
        let ct = self.column.top_cells();
        rt.iter().any(|c| c.col() == 1) && ct.iter().any(|c| c.row() == 0)
    }
}

impl fmt::Display for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.row, self.column)
    }
}

impl FromStr for Game {
    type Err = ModelError;
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let malformed = |reason: &str| ModelError::Malformed {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let (r, c) = text
            .trim()
            .split_once('/')
            .ok_or_else(|| malformed("expected <row>/<column>"))?;
        let parse = |player: Player, s: &str| -> Result<Pattern, ModelError> {
            let digits: Vec<u8> = s
                .chars()
                .map(|ch| ch.to_digit(10).filter(|d| *d <= 4).map(|d| d as u8))
                .collect::<Option<_>>()
                .ok_or_else(|| malformed("ranks must be digits 0-4"))?;
            let ranks: [u8; 4] = digits
                .try_into()
                .map_err(|_| malformed("each player needs four ranks"))?;
            let mut sorted = ranks;
            sorted.sort_unstable();
            Pattern::new(ranks).ok_or_else(|| ModelError::InvalidMultiset {
                player,
                multiset: sorted.iter().map(|d| d.to_string()).collect(),
            })
        };
        Ok(Game::new(parse(Player::Row, r)?, parse(Player::Column, c)?))
    }
}

impl Serialize for Game {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Game {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of the order-8 group generated by row swaps, column swaps and
/// the transpose. Interchanges are applied first, then the transpose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transform {
    pub swap_rows: bool,
    pub swap_columns: bool,
    pub transpose: bool,
}

impl Transform {
    pub const IDENTITY: Transform = Transform::new(false, false, false);
    pub const SWAP_ROWS: Transform = Transform::new(true, false, false);
    pub const SWAP_COLUMNS: Transform = Transform::new(false, true, false);
    pub const ROTATE_180: Transform = Transform::new(true, true, false);
    pub const TRANSPOSE: Transform = Transform::new(false, false, true);

    pub const INTERCHANGE: [Transform; 4] = [
        Transform::IDENTITY,
        Transform::SWAP_ROWS,
        Transform::SWAP_COLUMNS,
        Transform::ROTATE_180,
    ];

    pub const ALL: [Transform; 8] = [
        Transform::IDENTITY,
        Transform::SWAP_ROWS,
        Transform::SWAP_COLUMNS,
        Transform::ROTATE_180,
        Transform::new(false, false, true),
        Transform::new(true, false, true),
        Transform::new(false, true, true),
        Transform::new(true, true, true),
    ];

    pub const fn new(swap_rows: bool, swap_columns: bool, transpose: bool) -> Transform {
        Transform {
            swap_rows,
            swap_columns,
            transpose,
        }
    }

    /// `self` followed by `next`.
    pub fn then(self, next: Transform) -> Transform {
        // An interchange after a transpose equals the mirrored interchange before it.
        let (r2, c2) = if self.transpose {
            (next.swap_columns, next.swap_rows)
        } else {
            (next.swap_rows, next.swap_columns)
        };
        Transform::new(
            self.swap_rows ^ r2,
            self.swap_columns ^ c2,
            self.transpose ^ next.transpose,
        )
    }

    pub fn inverse(self) -> Transform {
        Transform::ALL
            .into_iter()
            .find(|t| self.then(*t) == Transform::IDENTITY)
            .expect("finite group")
    }

    pub fn is_interchange(self) -> bool {
        !self.transpose
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match (self.swap_rows, self.swap_columns) {
            (false, false) => "identity",
            (true, false) => "swap-rows",
            (false, true) => "swap-columns",
            (true, true) => "rotate-180",
        };
        match (self.transpose, base) {
            (false, b) => f.write_str(b),
            (true, "identity") => f.write_str("transpose"),
            (true, b) => write!(f, "{b}+transpose"),
        }
    }
}

impl Serialize for Transform {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CanonicalKey {
    pub game: Game,
    pub applied: Transform,
}

/// Representative of the interchange orbit.
///
/// Variants obeying "Row's best right, Column's best up" are kept and the
/// lexicographically least encoding wins. For strict games exactly one
/// variant obeys the rule.
pub fn canonicalize(game: &Game) -> CanonicalKey {
    let mut best: Option<CanonicalKey> = None;
    for t in Transform::INTERCHANGE {
        let g = game.apply(t);
        if !g.satisfies_orientation_rule() {
            continue;
        }
        if best.is_none_or(|b| g < b.game) {
            best = Some(CanonicalKey {
                game: g,
                applied: t,
            });
        }
    }
    best.expect("some interchange always satisfies the orientation rule")
}

pub fn canonical(game: &Game) -> Game {
    canonicalize(game).game
}

/// True when some interchange variant gives Column exactly Row's payoff
/// function with the roles swapped.
pub fn is_symmetric(game: &Game) -> bool {
    game.interchange_variants()
        .iter()
        .any(|v| v.column == v.row.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Game {
        s.parse().unwrap()
    }

    #[test]
    fn parses_pd_cells() {
        let pd = g("1324/4321");
        assert_eq!(pd.payoff(Cell::UL), (1, 4));
        assert_eq!(pd.payoff(Cell::UR), (3, 3));
        assert_eq!(pd.payoff(Cell::DL), (2, 2));
        assert_eq!(pd.payoff(Cell::DR), (4, 1));
        let chicken = g("2314/4312");
        let cells: Vec<_> = Cell::ALL.iter().map(|c| chicken.payoff(*c)).collect();
        assert_eq!(cells, vec![(2, 4), (3, 3), (1, 1), (4, 2)]);
    }

    #[test]
    fn rejects_bad_multiset() {
        match "1224/4321".parse::<Game>() {
            Err(ModelError::InvalidMultiset { player, multiset }) => {
                assert_eq!(player, Player::Row);
                assert_eq!(multiset, "1224");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            "1324".parse::<Game>(),
            Err(ModelError::Malformed { .. })
        ));
        assert!(matches!(
            "13x4/4321".parse::<Game>(),
            Err(ModelError::Malformed { .. })
        ));
        assert!(matches!(
            "1324/43210".parse::<Game>(),
            Err(ModelError::Malformed { .. })
        ));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            normalize_payoffs([0.0, 1.0, 3.0, 5.0], 0.0)
                .unwrap()
                .ranks(),
            [1, 2, 3, 4]
        );
        let z = normalize_payoffs([7.0; 4], 0.0).unwrap();
        assert_eq!((z.ranks(), z.tie_class()), ([0; 4], TieClass::Zero));
        let low = normalize_payoffs([2.0, 2.0, 7.5, 9.9], 0.0).unwrap();
        assert_eq!(
            (low.ranks(), low.tie_class()),
            ([1, 1, 3, 4], TieClass::LowTies)
        );
        let mid = normalize_payoffs([1.0, 5.0, 5.05, 9.0], 0.1).unwrap();
        assert_eq!(mid.ranks(), [1, 3, 3, 4]);
        assert!(normalize_payoffs([f64::NAN, 0.0, 0.0, 0.0], 0.0).is_err());
        assert!(normalize_payoffs([0.0; 4], -1.0).is_err());
    }

    #[test]
    fn canonical_pd_from_swapped_rows() {
        let pd = g("1324/4321");
        let swapped = pd.apply(Transform::SWAP_ROWS);
        let key = canonicalize(&swapped);
        assert_eq!(key.game, pd);
        assert_eq!(key.applied, Transform::SWAP_ROWS);
        assert_eq!(canonicalize(&pd).applied, Transform::IDENTITY);
    }

    #[test]
    fn low_dilemma_single_representative() {
        let ld = g("1314/4311");
        for v in ld.interchange_variants() {
            assert_eq!(canonical(&v), ld);
        }
    }

    #[test]
    fn symmetry_examples() {
        assert!(is_symmetric(&g("1324/4321")));
        assert!(!is_symmetric(&g("1324/4312")));
        let pennies = g("1441/4114");
        assert!(!is_symmetric(&pennies));
        assert_eq!(canonical(&pennies.apply(Transform::TRANSPOSE)), pennies);
    }

    #[test]
    fn transpose_exchanges_called_bluff_variants() {
        let a = g("1324/4312");
        let b = canonical(&a.apply(Transform::TRANSPOSE));
        assert_eq!(b, canonical(&g("2314/4321")));
        assert_ne!(a, b);
    }

    #[test]
    fn group_laws() {
        let probe = Game::new(Pattern::raw([1, 2, 3, 4]), Pattern::raw([3, 1, 4, 2]));
        for a in Transform::ALL {
            for b in Transform::ALL {
                assert_eq!(
                    probe.apply(a).apply(b),
                    probe.apply(a.then(b)),
                    "{a} then {b}"
                );
            }
            assert_eq!(probe.apply(a).apply(a.inverse()), probe);
        }
        for a in Transform::INTERCHANGE {
            assert_eq!(a.then(a), Transform::IDENTITY);
            for b in Transform::INTERCHANGE {
                assert!(a.then(b).is_interchange());
                assert_eq!(a.then(b), b.then(a));
            }
        }
        assert_eq!(
            Transform::TRANSPOSE.then(Transform::TRANSPOSE),
            Transform::IDENTITY
        );
    }

    #[test]
    fn from_groups_uses_class_multiset() {
        let p = Pattern::from_groups(&[
            CellSet::single(Cell::UL),
            [Cell::UR, Cell::DL].into_iter().collect(),
            CellSet::single(Cell::DR),
        ]);
        assert_eq!(p.ranks(), [1, 3, 3, 4]);
    }
}
