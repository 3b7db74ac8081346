//! Equilibria, dominance, maximin, Pareto structure, inducement and the
//! payoff-family taxonomy.
//!
//! Families are assigned from the weak Nash equilibria. The best equilibrium
//! payoff pair picks the family; the number of equilibria and the players'
//! dominant strategies pick the subfamily.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::model::{canonical, is_symmetric, normalize_payoffs, Cell, CellSet, Game, Player};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Strategy {
    Up,
    Down,
    Left,
    Right,
}

impl Strategy {
    pub fn of(player: Player, second: bool) -> Strategy {
        match (player, second) {
            (Player::Row, false) => Strategy::Up,
            (Player::Row, true) => Strategy::Down,
            (Player::Column, false) => Strategy::Left,
            (Player::Column, true) => Strategy::Right,
        }
    }

    /// Cells where the owning player uses this strategy.
    pub fn cells(self) -> [Cell; 2] {
        match self {
            Strategy::Up => [Cell::UL, Cell::UR],
            Strategy::Down => [Cell::DL, Cell::DR],
            Strategy::Left => [Cell::UL, Cell::DL],
            Strategy::Right => [Cell::UR, Cell::DR],
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Up => "up",
            Strategy::Down => "down",
            Strategy::Left => "left",
            Strategy::Right => "right",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "strategy")]
pub enum Dominance {
    StrictDominant(Strategy),
    WeaklyDominant(Strategy),
    None,
}

impl Dominance {
    pub fn strategy(self) -> Option<Strategy> {
        match self {
            Dominance::StrictDominant(s) | Dominance::WeaklyDominant(s) => Some(s),
            Dominance::None => None,
        }
    }

    pub fn is_some(self) -> bool {
        self != Dominance::None
    }
}

impl fmt::Display for Dominance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dominance::StrictDominant(s) => write!(f, "strict {s}"),
            Dominance::WeaklyDominant(s) => write!(f, "weak {s}"),
            Dominance::None => f.write_str("none"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum InducementSign {
    AlwaysPositive,
    AlwaysNegative,
    Mixed,
}

impl fmt::Display for InducementSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InducementSign::AlwaysPositive => "+",
            InducementSign::AlwaysNegative => "-",
            InducementSign::Mixed => "mixed",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PerPlayer<T> {
    pub row: T,
    pub column: T,
}

impl<T: Copy> PerPlayer<T> {
    pub fn new(mut f: impl FnMut(Player) -> T) -> PerPlayer<T> {
        PerPlayer {
            row: f(Player::Row),
            column: f(Player::Column),
        }
    }

    pub fn get(&self, player: Player) -> T {
        match player {
            Player::Row => self.row,
            Player::Column => self.column,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    WinWin,
    Biased,
    SecondBest,
    Unfair,
    PdFamily,
    Cyclic,
    Indeterminate,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::WinWin,
        Family::Biased,
        Family::SecondBest,
        Family::Unfair,
        Family::PdFamily,
        Family::Cyclic,
        Family::Indeterminate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::WinWin => "win-win",
            Family::Biased => "biased",
            Family::SecondBest => "second-best",
            Family::Unfair => "unfair",
            Family::PdFamily => "pd-family",
            Family::Cyclic => "cyclic",
            Family::Indeterminate => "indeterminate",
        }
    }

    /// Subfamilies in display order.
    pub fn subfamilies(self) -> &'static [Subfamily] {
        use Subfamily::*;
        match self {
            Family::WinWin => &[Harmonious, StagHunt],
            Family::Biased => &[
                Altruistic,
                AltruisticSelfServing,
                SelfServing,
                BattleOfSexes,
                BiasedUnclassified,
            ],
            Family::SecondBest => &[Subfamily::SecondBest],
            Family::Unfair => &[Chicken, Winner, WinLose, Loser, UnfairUnclassified],
            Family::PdFamily => &[PrisonersDilemma, Alibi, Tragic],
            Family::Cyclic => &[Subfamily::Cyclic],
            Family::Indeterminate => &[Subfamily::Indeterminate],
        }
    }
}

fn squash(s: &str) -> String {
    s.chars()
        .filter(|c| c.is_ascii_alphanumeric())
        .map(|c| c.to_ascii_lowercase())
        .collect()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let k = squash(s);
        let k = match k.as_str() {
            "pd" | "pdfamily" | "prisonersdilemmafamily" => "pdfamily".to_string(),
            _ => k,
        };
        Family::ALL
            .into_iter()
            .find(|f| squash(f.name()) == k)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Subfamily {
    Harmonious,
    StagHunt,
    Altruistic,
    AltruisticSelfServing,
    SelfServing,
    BattleOfSexes,
    /// A tie game with a single (4,3) equilibrium and no dominant strategy.
    BiasedUnclassified,
    SecondBest,
    Chicken,
    Winner,
    WinLose,
    Loser,
    /// A tie game with a single unfair equilibrium and no dominant strategy.
    UnfairUnclassified,
    PrisonersDilemma,
    Alibi,
    Tragic,
    Cyclic,
    Indeterminate,
}

impl Subfamily {
    pub const ALL: [Subfamily; 18] = [
        Subfamily::Harmonious,
        Subfamily::StagHunt,
        Subfamily::Altruistic,
        Subfamily::AltruisticSelfServing,
        Subfamily::SelfServing,
        Subfamily::BattleOfSexes,
        Subfamily::BiasedUnclassified,
        Subfamily::SecondBest,
        Subfamily::Chicken,
        Subfamily::Winner,
        Subfamily::WinLose,
        Subfamily::Loser,
        Subfamily::UnfairUnclassified,
        Subfamily::PrisonersDilemma,
        Subfamily::Alibi,
        Subfamily::Tragic,
        Subfamily::Cyclic,
        Subfamily::Indeterminate,
    ];

    pub fn family(self) -> Family {
        use Subfamily::*;
        match self {
            Harmonious | StagHunt => Family::WinWin,
            Altruistic
            | AltruisticSelfServing
            | SelfServing
            | BattleOfSexes
            | BiasedUnclassified => Family::Biased,
            SecondBest => Family::SecondBest,
            Chicken | Winner | WinLose | Loser | UnfairUnclassified => Family::Unfair,
            PrisonersDilemma | Alibi | Tragic => Family::PdFamily,
            Cyclic => Family::Cyclic,
            Indeterminate => Family::Indeterminate,
        }
    }

    pub fn name(self) -> &'static str {
        use Subfamily::*;
        match self {
            Harmonious => "harmonious",
            StagHunt => "stag-hunt",
            Altruistic => "altruistic",
            AltruisticSelfServing => "altruistic-self-serving",
            SelfServing => "self-serving",
            BattleOfSexes => "battle-of-the-sexes",
            BiasedUnclassified => "biased-unclassified",
            SecondBest => "second-best",
            Chicken => "chicken",
            Winner => "winner",
            WinLose => "win-lose",
            Loser => "loser",
            UnfairUnclassified => "unfair-unclassified",
            PrisonersDilemma => "prisoners-dilemma",
            Alibi => "alibi",
            Tragic => "tragic",
            Cyclic => "cyclic",
            Indeterminate => "indeterminate",
        }
    }
}

impl fmt::Display for Subfamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Subfamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let k = squash(s);
        let k = match k.as_str() {
            "pd" => "prisonersdilemma".to_string(),
            "bos" | "battlesofthesexes" => "battleofthesexes".to_string(),
            _ => k,
        };
        Subfamily::ALL
            .into_iter()
            .find(|f| squash(f.name()) == k)
            .ok_or_else(|| format!("unknown subfamily {s:?}"))
    }
}

/// A mixed equilibrium with ranks read as cardinal values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedEquilibrium {
    /// Probability that Row plays Up.
    pub row_up: Ratio<i64>,
    /// Probability that Column plays Left.
    pub column_left: Ratio<i64>,
    pub row_value: Ratio<i64>,
    pub column_value: Ratio<i64>,
}

/// Exact decimal for terminating fractions, six places otherwise.
pub fn decimal(r: &Ratio<i64>) -> String {
    if r.is_integer() {
        return r.to_integer().to_string();
    }
    // Denominators here divide small integers, so six places are exact
    // or a faithful rounding.
    let scaled = (r * Ratio::from_integer(1_000_000)).round().to_integer();
    let s = format!("{}.{:06}", scaled / 1_000_000, (scaled % 1_000_000).abs());
    s.trim_end_matches('0').to_string()
}

impl Serialize for MixedEquilibrium {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MixedEquilibrium", 5)?;
        st.serialize_field("row_up", &decimal(&self.row_up))?;
        st.serialize_field("column_left", &decimal(&self.column_left))?;
        st.serialize_field("row_value", &decimal(&self.row_value))?;
        st.serialize_field("column_value", &decimal(&self.column_value))?;
        st.serialize_field("cardinal_caveat", "ranks treated as cardinal values")?;
        st.end()
    }
}

impl fmt::Display for MixedEquilibrium {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "up {} left {} values ({}, {})",
            self.row_up,
            self.column_left,
            decimal(&self.row_value),
            decimal(&self.column_value)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("no interior mixed equilibrium")]
    NoInteriorEquilibrium,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub nash_strict: CellSet,
    pub nash_weak: CellSet,
    pub dominance: PerPlayer<Dominance>,
    pub maximin: PerPlayer<StrategySet>,
    pub pareto_optimal: CellSet,
    pub mutually_pareto_optimal: CellSet,
    pub degenerate: PerPlayer<bool>,
    pub fixed_rank_sum: bool,
    pub inducement_sign: PerPlayer<InducementSign>,
    pub family: Family,
    pub subfamily: Subfamily,
    /// Present when no strict pure equilibrium exists and an interior mix does.
    pub mixed: Option<MixedEquilibrium>,
}

/// One or both strategies of a player.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StrategySet {
    pub player: Player,
    pub first: bool,
    pub second: bool,
}

impl StrategySet {
    pub fn iter(self) -> impl Iterator<Item = Strategy> {
        [(self.first, false), (self.second, true)]
            .into_iter()
            .filter(|(on, _)| *on)
            .map(move |(_, second)| Strategy::of(self.player, second))
    }
}

impl Serialize for StrategySet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl fmt::Display for StrategySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.iter().map(|s| s.to_string()).collect();
        f.write_str(&v.join("+"))
    }
}

impl Classification {
    pub fn nash_payoffs(&self, game: &Game) -> Vec<(u8, u8)> {
        self.nash_weak.iter().map(|c| game.payoff(c)).collect()
    }

    pub fn dominant_count(&self) -> usize {
        Player::BOTH
            .iter()
            .filter(|p| self.dominance.get(**p).is_some())
            .count()
    }

    pub fn is_pareto_deficient_equilibrium(&self) -> bool {
        !self.nash_weak.is_empty()
            && self
                .nash_weak
                .iter()
                .all(|c| !self.pareto_optimal.contains(c))
    }
}

/// Ranks of `player` for strategy `second` against each opponent strategy.
fn own_row(game: &Game, player: Player, second: bool) -> [u8; 2] {
    let s = Strategy::of(player, second);
    s.cells().map(|c| game.rank(player, c))
}

pub fn is_weak_nash(game: &Game, cell: Cell) -> bool {
    Player::BOTH
        .iter()
        .all(|p| game.rank(*p, cell) >= game.rank(*p, cell.deviation(*p)))
}

pub fn is_strict_nash(game: &Game, cell: Cell) -> bool {
    Player::BOTH
        .iter()
        .all(|p| game.rank(*p, cell) > game.rank(*p, cell.deviation(*p)))
}

pub fn dominance(game: &Game, player: Player) -> Dominance {
    let a = own_row(game, player, false);
    let b = own_row(game, player, true);
    for (x, y, second) in [(a, b, false), (b, a, true)] {
        let s = Strategy::of(player, second);
        if x[0] > y[0] && x[1] > y[1] {
            return Dominance::StrictDominant(s);
        }
        if x[0] >= y[0] && x[1] >= y[1] && (x[0] > y[0] || x[1] > y[1]) {
            return Dominance::WeaklyDominant(s);
        }
    }
    Dominance::None
}

pub fn maximin(game: &Game, player: Player) -> StrategySet {
    let w0 = *own_row(game, player, false).iter().min().unwrap();
    let w1 = *own_row(game, player, true).iter().min().unwrap();
    StrategySet {
        player,
        first: w0 >= w1,
        second: w1 >= w0,
    }
}

pub fn is_degenerate(game: &Game, player: Player) -> bool {
    own_row(game, player, false) == own_row(game, player, true)
}

fn pareto_dominated(game: &Game, cell: Cell) -> bool {
    let (r, c) = game.payoff(cell);
    Cell::ALL.iter().any(|m| {
        let (r2, c2) = game.payoff(*m);
        r2 >= r && c2 >= c && (r2 > r || c2 > c)
    })
}

fn strictly_dominated_for_both(game: &Game, cell: Cell) -> bool {
    let (r, c) = game.payoff(cell);
    Cell::ALL.iter().any(|m| {
        let (r2, c2) = game.payoff(*m);
        r2 > r && c2 > c
    })
}

/// Sign of the effect on the other player of each switch that improves
/// `player`'s own payoff. Always positive or negative only when every such
/// switch agrees; no switches, a zero effect, or both signs give `Mixed`.
pub fn inducement(game: &Game, player: Player) -> InducementSign {
    let other = player.other();
    let (mut pos, mut neg, mut zero) = (false, false, false);
    for a in Cell::ALL {
        let b = a.deviation(player);
        if game.rank(player, b) > game.rank(player, a) {
            match game.rank(other, b).cmp(&game.rank(other, a)) {
                std::cmp::Ordering::Greater => pos = true,
                std::cmp::Ordering::Less => neg = true,
                std::cmp::Ordering::Equal => zero = true,
            }
        }
    }
    match (pos, neg, zero) {
        (true, false, false) => InducementSign::AlwaysPositive,
        (false, true, false) => InducementSign::AlwaysNegative,
        _ => InducementSign::Mixed,
    }
}

pub fn has_fixed_rank_sum(game: &Game) -> bool {
    let s: Vec<u8> = Cell::ALL
        .iter()
        .map(|c| game.row.rank(*c) + game.column.rank(*c))
        .collect();
    s.iter().all(|x| *x == s[0])
}

/// Order in which equilibrium payoff pairs (larger rank first) pick the family.
const FAMILY_PAIRS: [((u8, u8), Family); 10] = [
    ((4, 4), Family::WinWin),
    ((4, 3), Family::Biased),
    ((3, 3), Family::SecondBest),
    ((4, 2), Family::Unfair),
    ((4, 1), Family::Unfair),
    ((2, 2), Family::PdFamily),
    ((3, 2), Family::PdFamily),
    ((3, 1), Family::PdFamily),
    ((2, 1), Family::PdFamily),
    ((1, 1), Family::PdFamily),
];

fn family_of(game: &Game, nash: CellSet, dom: PerPlayer<Dominance>, pareto: CellSet) -> Subfamily {
    if Player::BOTH.iter().any(|p| is_degenerate(game, *p)) {
        return Subfamily::Indeterminate;
    }
    if nash.is_empty() {
        return Subfamily::Cyclic;
    }
    let sorted = |(a, b): (u8, u8)| if a >= b { (a, b) } else { (b, a) };
    let pairs: Vec<(Cell, (u8, u8))> = nash.iter().map(|c| (c, sorted(game.payoff(c)))).collect();
    let (key, family) = FAMILY_PAIRS
        .iter()
        .find(|(k, _)| pairs.iter().any(|(_, p)| p == k))
        .copied()
        .expect("every non-degenerate equilibrium pays ranks in 1..=4");
    let multiple = nash.len() > 1;
    let both_dominant = dom.row.is_some() && dom.column.is_some();
    // The single equilibrium's payoff to the player holding a dominant strategy.
    let dominant_payoff = || {
        let cell = pairs[0].0;
        Player::BOTH
            .into_iter()
            .find(|p| dom.get(*p).is_some())
            .map(|p| game.rank(p, cell))
    };
    match family {
        Family::WinWin => {
            if multiple {
                Subfamily::StagHunt
            } else {
                Subfamily::Harmonious
            }
        }
        Family::Biased => {
            if multiple {
                Subfamily::BattleOfSexes
            } else if both_dominant {
                Subfamily::AltruisticSelfServing
            } else {
                match dominant_payoff() {
                    Some(4) => Subfamily::SelfServing,
                    Some(_) => Subfamily::Altruistic,
                    None => Subfamily::BiasedUnclassified,
                }
            }
        }
        Family::SecondBest => Subfamily::SecondBest,
        Family::Unfair => {
            if multiple {
                Subfamily::Chicken
            } else if both_dominant {
                Subfamily::WinLose
            } else {
                match dominant_payoff() {
                    Some(4) => Subfamily::Winner,
                    Some(_) => Subfamily::Loser,
                    None => Subfamily::UnfairUnclassified,
                }
            }
        }
        Family::PdFamily => match key {
            (2, 2) | (2, 1) | (1, 1) => Subfamily::PrisonersDilemma,
            _ => {
                if nash.iter().all(|c| !pareto.contains(c)) {
                    Subfamily::Alibi
                } else {
                    Subfamily::Tragic
                }
            }
        },
        Family::Cyclic | Family::Indeterminate => unreachable!("not produced by payoff pairs"),
    }
}

pub fn classify(game: &Game) -> Classification {
    let nash_weak: CellSet = Cell::ALL
        .into_iter()
        .filter(|c| is_weak_nash(game, *c))
        .collect();
    let nash_strict: CellSet = Cell::ALL
        .into_iter()
        .filter(|c| is_strict_nash(game, *c))
        .collect();
    let pareto_optimal: CellSet = Cell::ALL
        .into_iter()
        .filter(|c| !pareto_dominated(game, *c))
        .collect();
    let mutually_pareto_optimal: CellSet = Cell::ALL
        .into_iter()
        .filter(|c| !strictly_dominated_for_both(game, *c))
        .collect();
    let dom = PerPlayer::new(|p| dominance(game, p));
    let subfamily = family_of(game, nash_weak, dom, pareto_optimal);
    Classification {
        nash_strict,
        nash_weak,
        dominance: dom,
        maximin: PerPlayer::new(|p| maximin(game, p)),
        pareto_optimal,
        mutually_pareto_optimal,
        degenerate: PerPlayer::new(|p| is_degenerate(game, p)),
        fixed_rank_sum: has_fixed_rank_sum(game),
        inducement_sign: PerPlayer::new(|p| inducement(game, p)),
        family: subfamily.family(),
        subfamily,
        mixed: if nash_strict.is_empty() {
            mixed_equilibrium(game).ok()
        } else {
            None
        },
    }
}

/// Solves both indifference conditions with ranks as cardinal values.
pub fn mixed_equilibrium(game: &Game) -> Result<MixedEquilibrium, ClassifyError> {
    let r = game.row.ranks().map(i64::from);
    let c = game.column.ranks().map(i64::from);
    // Column's mix makes Row indifferent, and the reverse.
    let qd = r[0] - r[1] - r[2] + r[3];
    let pd = c[0] - c[2] - c[1] + c[3];
    if qd == 0 || pd == 0 {
        return Err(ClassifyError::NoInteriorEquilibrium);
    }
    let q = Ratio::new(r[3] - r[1], qd);
    let p = Ratio::new(c[3] - c[2], pd);
    let zero = Ratio::from_integer(0);
    let one = Ratio::from_integer(1);
    if !(q > zero && q < one && p > zero && p < one) {
        return Err(ClassifyError::NoInteriorEquilibrium);
    }
    let f = |x: i64| Ratio::from_integer(x);
    let row_value = q * f(r[0]) + (one - q) * f(r[1]);
    let column_value = p * f(c[0]) + (one - p) * f(c[2]);
    Ok(MixedEquilibrium {
        row_up: p,
        column_left: q,
        row_value,
        column_value,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Range {
    pub min: usize,
    pub max: usize,
}

impl Range {
    fn add(r: &mut Option<Range>, x: usize) {
        *r = Some(match *r {
            None => Range { min: x, max: x },
            Some(Range { min, max }) => Range {
                min: min.min(x),
                max: max.max(x),
            },
        });
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.min == self.max {
            write!(f, "{}", self.min)
        } else {
            write!(f, "{}-{}", self.min, self.max)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub family: Family,
    /// `None` for a family total line.
    pub subfamily: Option<Subfamily>,
    pub symmetric: usize,
    pub asymmetric: usize,
    pub total: usize,
    pub nash_equilibria: Option<Range>,
    pub dominant_strategies: Option<Range>,
    pub pareto_optima: Option<Range>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Split {
    pub symmetric: usize,
    pub asymmetric: usize,
    pub total: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyCensus {
    pub counts: BTreeMap<(Family, Subfamily), Split>,
    rows: Vec<CensusRow>,
    pub total: Split,
}

impl FamilyCensus {
    pub fn split(&self, family: Family, subfamily: Subfamily) -> Split {
        self.counts
            .get(&(family, subfamily))
            .copied()
            .unwrap_or_default()
    }

    pub fn family_split(&self, family: Family) -> Split {
        self.counts
            .iter()
            .filter(|((f, _), _)| *f == family)
            .fold(Split::default(), |a, (_, s)| Split {
                symmetric: a.symmetric + s.symmetric,
                asymmetric: a.asymmetric + s.asymmetric,
                total: a.total + s.total,
            })
    }

    /// Family lines followed by their subfamily lines. Families with a
    /// single subfamily get one line; empty subfamilies are skipped.
    pub fn rows(&self) -> &[CensusRow] {
        &self.rows
    }

    /// Aligned text table.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let head = [
            "family", "sym", "asym", "total", "%", "NE", "dominant", "pareto",
        ];
        let w = [34usize, 5, 5, 6, 5, 5, 9, 7];
        let line = |cols: [String; 8]| {
            let mut s = String::new();
            for (i, c) in cols.iter().enumerate() {
                if i == 0 {
                    s.push_str(&format!("{:<w$}", c, w = w[0]));
                } else {
                    s.push_str(&format!("{:>w$}", c, w = w[i]));
                }
            }
            s.trim_end().to_string() + "\n"
        };
        out.push_str(&line(head.map(String::from)));
        let pct = |n: usize| {
            (n * 100 + self.total.total / 2)
                .checked_div(self.total.total)
                .unwrap_or(0)
                .to_string()
        };
        let r = |x: &Option<Range>| x.map_or("-".to_string(), |r| r.to_string());
        for row in &self.rows {
            let label = match row.subfamily {
                None => row.family.name().to_string(),
                Some(s) => format!("  {}", s.name()),
            };
            out.push_str(&line([
                label,
                row.symmetric.to_string(),
                row.asymmetric.to_string(),
                row.total.to_string(),
                pct(row.total),
                r(&row.nash_equilibria),
                r(&row.dominant_strategies),
                r(&row.pareto_optima),
            ]));
        }
        out.push_str(&line([
            "total".into(),
            self.total.symmetric.to_string(),
            self.total.asymmetric.to_string(),
            self.total.total.to_string(),
            pct(self.total.total),
            String::new(),
            String::new(),
            String::new(),
        ]));
        out
    }
}

impl Serialize for FamilyCensus {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FamilyCensus", 2)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("total", &self.total)?;
        st.end()
    }
}

pub fn census<'a>(universe: impl IntoIterator<Item = &'a Game>) -> FamilyCensus {
    #[derive(Default)]
    struct Acc {
        split: Split,
        ne: Option<Range>,
        dom: Option<Range>,
        pareto: Option<Range>,
    }
    let mut sub: BTreeMap<(Family, Subfamily), Acc> = BTreeMap::new();
    let mut fam: BTreeMap<Family, Acc> = BTreeMap::new();
    let mut total = Split::default();
    for g in universe {
        let c = classify(g);
        let sym = is_symmetric(g);
        for acc in [
            sub.entry((c.family, c.subfamily)).or_default(),
            fam.entry(c.family).or_default(),
        ] {
            acc.split.total += 1;
            if sym {
                acc.split.symmetric += 1;
            } else {
                acc.split.asymmetric += 1;
            }
            Range::add(&mut acc.ne, c.nash_weak.len());
            Range::add(&mut acc.dom, c.dominant_count());
            Range::add(&mut acc.pareto, c.pareto_optimal.len());
        }
        total.total += 1;
        if sym {
            total.symmetric += 1;
        } else {
            total.asymmetric += 1;
        }
    }
    let mut rows = Vec::new();
    let make = |family, subfamily, a: &Acc| CensusRow {
        family,
        subfamily,
        symmetric: a.split.symmetric,
        asymmetric: a.split.asymmetric,
        total: a.split.total,
        nash_equilibria: a.ne,
        dominant_strategies: a.dom,
        pareto_optima: a.pareto,
    };
    for f in Family::ALL {
        let subs = f.subfamilies();
        let empty = Acc::default();
        // Families the universe never reaches beyond the six strict ones are omitted.
        if f == Family::Indeterminate && !fam.contains_key(&f) {
            continue;
        }
        rows.push(make(f, None, fam.get(&f).unwrap_or(&empty)));
        if subs.len() > 1 {
            for s in subs {
                match sub.get(&(f, *s)) {
                    Some(a) => rows.push(make(f, Some(*s), a)),
                    None if !matches!(
                        s,
                        Subfamily::BiasedUnclassified | Subfamily::UnfairUnclassified
                    ) =>
                    {
                        rows.push(make(f, Some(*s), &empty))
                    }
                    None => {}
                }
            }
        }
    }
    FamilyCensus {
        counts: sub.into_iter().map(|(k, a)| (k, a.split)).collect(),
        rows,
        total,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SpecialSets {
    pub fixed_rank_sum: Vec<Game>,
    pub pure_conflict: Vec<Game>,
    pub pure_cooperation: Vec<Game>,
    pub jekyll_hyde_type: Vec<Game>,
    pub pareto_deficient_equilibrium: Vec<Game>,
    pub ne_at_least_second_best: Vec<Game>,
}

pub fn special_sets<'a>(universe: impl IntoIterator<Item = &'a Game>) -> SpecialSets {
    use InducementSign::*;
    let mut s = SpecialSets::default();
    for g in universe {
        let c = classify(g);
        let ind = (c.inducement_sign.row, c.inducement_sign.column);
        if c.fixed_rank_sum {
            s.fixed_rank_sum.push(*g);
        }
        match ind {
            (AlwaysNegative, AlwaysNegative) => s.pure_conflict.push(*g),
            (AlwaysPositive, AlwaysPositive) => s.pure_cooperation.push(*g),
            (AlwaysPositive, AlwaysNegative) | (AlwaysNegative, AlwaysPositive) => {
                s.jekyll_hyde_type.push(*g)
            }
            _ => {}
        }
        if c.is_pareto_deficient_equilibrium() {
            s.pareto_deficient_equilibrium.push(*g);
        }
        if c.nash_payoffs(g).iter().any(|(a, b)| *a >= 3 && *b >= 3) {
            s.ne_at_least_second_best.push(*g);
        }
    }
    s
}

/// Draws `n` games with eight independent uniform payoffs each (Row's four
/// cells, then Column's), ordinalizes them exactly and counts canonical forms.
pub fn sample_random_games(n: usize, seed: u64) -> BTreeMap<Game, u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut freq = BTreeMap::new();
    for _ in 0..n {
        let mut v = [0f64; 8];
        for x in v.iter_mut() {
            *x = rng.gen::<f64>();
        }
        let row = normalize_payoffs([v[0], v[1], v[2], v[3]], 0.0).expect("finite");
        let col = normalize_payoffs([v[4], v[5], v[6], v[7]], 0.0).expect("finite");
        *freq.entry(canonical(&Game::new(row, col))).or_insert(0) += 1;
    }
    freq
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Game {
        s.parse().unwrap()
    }

    #[test]
    fn prisoners_dilemma() {
        let c = classify(&g("1324/4321"));
        assert_eq!(c.nash_strict.to_string(), "DL");
        assert_eq!(c.nash_weak.to_string(), "DL");
        assert_eq!(c.dominance.row, Dominance::StrictDominant(Strategy::Down));
        assert_eq!(
            c.dominance.column,
            Dominance::StrictDominant(Strategy::Left)
        );
        assert_eq!(c.pareto_optimal.to_string(), "UL+UR+DR");
        assert_eq!(c.subfamily, Subfamily::PrisonersDilemma);
        assert!(c.mixed.is_none());
    }

    #[test]
    fn chicken() {
        let c = classify(&g("2314/4312"));
        assert_eq!(c.nash_weak.to_string(), "UL+DR");
        assert_eq!(c.nash_strict, c.nash_weak);
        assert_eq!(c.dominant_count(), 0);
        assert_eq!(c.subfamily, Subfamily::Chicken);
    }

    #[test]
    fn avatamsaka() {
        let game = g("1414/4411");
        let c = classify(&game);
        assert_eq!(c.nash_weak, CellSet::ALL);
        assert!(c.nash_strict.is_empty());
        assert!(c.degenerate.row && c.degenerate.column);
        assert_eq!(c.dominant_count(), 0);
        assert_eq!(c.family, Family::Indeterminate);
        assert_eq!(
            mixed_equilibrium(&game),
            Err(ClassifyError::NoInteriorEquilibrium)
        );
    }

    #[test]
    fn total_conflict() {
        let c = classify(&g("1234/4321"));
        assert!(c.fixed_rank_sum);
        assert_eq!(c.inducement_sign.row, InducementSign::AlwaysNegative);
        assert_eq!(c.inducement_sign.column, InducementSign::AlwaysNegative);
    }

    #[test]
    fn mixed_fixed_cycle() {
        // sa-sr
        let m = mixed_equilibrium(&g("1432/4123")).unwrap();
        assert_eq!(m.row_up, Ratio::new(1, 4));
        assert_eq!(m.column_left, Ratio::new(1, 2));
        assert_eq!(decimal(&m.row_value), "2.5");
        assert_eq!(decimal(&m.column_value), "2.5");
    }

    #[test]
    fn mixed_matching_pennies() {
        let m = mixed_equilibrium(&g("1441/4114")).unwrap();
        assert_eq!(m.row_up, Ratio::new(1, 2));
        assert_eq!(m.column_left, Ratio::new(1, 2));
        assert_eq!(decimal(&m.row_value), "2.5");
    }

    #[test]
    fn maximin_ties_return_both() {
        let m = maximin(&g("0000/0000"), Player::Row);
        assert_eq!(m.to_string(), "up+down");
    }

    #[test]
    fn family_names_parse() {
        assert_eq!("win-win".parse::<Family>(), Ok(Family::WinWin));
        assert_eq!("WinWin".parse::<Family>(), Ok(Family::WinWin));
        assert_eq!("pd".parse::<Subfamily>(), Ok(Subfamily::PrisonersDilemma));
        assert_eq!("Stag Hunt".parse::<Subfamily>(), Ok(Subfamily::StagHunt));
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(&Ratio::new(3, 4)), "0.75");
        assert_eq!(decimal(&Ratio::new(1, 3)), "0.333333");
        assert_eq!(decimal(&Ratio::new(5, 2)), "2.5");
    }
}
