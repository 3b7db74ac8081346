//! Exhaustive enumeration of patterns and games, orbit counting, and the atlas.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::model::{canonical, is_symmetric, Game, Pattern, TieClass, Transform};
use crate::naming::{coordinate_name, SYMMETRIC_CODES};

/// Which relabelings identify two games.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Equivalence {
    /// No identification: every oriented pattern pair is distinct.
    Oriented,
    /// Row and column interchanges.
    Interchange,
    /// Interchanges plus swapping the players.
    InterchangePlusReflection,
}

impl Equivalence {
    pub fn group(self) -> &'static [Transform] {
        match self {
            Equivalence::Oriented => &Transform::ALL[..1],
            Equivalence::Interchange => &Transform::INTERCHANGE,
            Equivalence::InterchangePlusReflection => &Transform::ALL,
        }
    }

    /// Orbit representative: least encoding among canonical forms.
    pub fn representative(self, game: &Game) -> Game {
        match self {
            Equivalence::Oriented => *game,
            Equivalence::Interchange => canonical(game),
            Equivalence::InterchangePlusReflection => {
                canonical(game).min(canonical(&game.apply(Transform::TRANSPOSE)))
            }
        }
    }
}

impl std::str::FromStr for Equivalence {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "oriented" | "none" => Ok(Equivalence::Oriented),
            "interchange" => Ok(Equivalence::Interchange),
            "reflection" | "interchange+reflection" | "interchange-plus-reflection" => {
                Ok(Equivalence::InterchangePlusReflection)
            }
            _ => Err(format!("unknown equivalence {s:?}")),
        }
    }
}

/// All 75 patterns, grouped by class in class order.
pub fn enumerate_patterns() -> Vec<Pattern> {
    let mut out = Vec::new();
    for class in TieClass::ALL {
        let mut set = BTreeSet::new();
        let ms = class.multiset();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let idx = [a, b, c, d];
                        let mut seen = idx.to_vec();
                        seen.sort_unstable();
                        seen.dedup();
                        if seen.len() == 4 {
                            set.insert(Pattern::raw(idx.map(|i| ms[i])));
                        }
                    }
                }
            }
        }
        out.extend(set);
    }
    out
}

pub fn raw_pairs() -> impl Iterator<Item = Game> {
    let pats = enumerate_patterns();
    let cols = pats.clone();
    pats.into_iter()
        .flat_map(move |r| cols.clone().into_iter().map(move |c| Game::new(r, c)))
}

/// One representative per orbit of the chosen group acting on the raw
/// pairs whose (row, column) classes match `class_filter`.
pub fn enumerate_games(
    class_filter: Option<(TieClass, TieClass)>,
    equivalence: Equivalence,
) -> BTreeSet<Game> {
    raw_pairs()
        .filter(|g| class_filter.is_none_or(|f| g.tie_classes() == f))
        .map(|g| equivalence.representative(&g))
        .collect()
}

/// Burnside count of orbits, from fixed points alone.
pub fn orbit_count_oracle(equivalence: Equivalence) -> u64 {
    orbit_count_filtered(equivalence, |_| true)
}

pub fn orbit_count_filtered(equivalence: Equivalence, keep: impl Fn(&Game) -> bool) -> u64 {
    let group = equivalence.group();
    let pairs: Vec<Game> = raw_pairs().filter(|g| keep(g)).collect();
    let fixed: u64 = group
        .iter()
        .map(|t| pairs.iter().filter(|g| g.apply(*t) == **g).count() as u64)
        .sum();
    assert_eq!(
        fixed % group.len() as u64,
        0,
        "Burnside sum must divide evenly"
    );
    fixed / group.len() as u64
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    /// Position in the 47-entry listing, starting at 1.
    pub index: usize,
    pub code: &'static str,
    pub pattern: Pattern,
    pub game: Game,
    pub names: Vec<&'static str>,
    /// Earlier listing code naming the same game, if any.
    pub same_as: Option<&'static str>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SymmetricCatalog {
    pub entries: Vec<CatalogEntry>,
}

impl SymmetricCatalog {
    pub fn distinct(&self) -> Vec<&CatalogEntry> {
        self.entries
            .iter()
            .filter(|e| e.same_as.is_none())
            .collect()
    }

    pub fn distinct_games(&self) -> BTreeSet<Game> {
        self.entries.iter().map(|e| e.game).collect()
    }
}

pub fn symmetric_catalog() -> SymmetricCatalog {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    for (i, c) in SYMMETRIC_CODES.iter().enumerate() {
        let game = c.game();
        let same_as = entries.iter().find(|e| e.game == game).map(|e| e.code);
        entries.push(CatalogEntry {
            index: i + 1,
            code: c.code,
            pattern: c.pattern(),
            game,
            names: c.names.to_vec(),
            same_as,
        });
    }
    SymmetricCatalog { entries }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AtlasError {
    #[error("line {line}: {reason}")]
    Import { line: usize, reason: String },
}

/// The immutable universe of canonical games with dense ids.
#[derive(Debug, Clone)]
pub struct Atlas {
    equivalence: Equivalence,
    games: Vec<Game>,
    index: HashMap<Game, usize>,
    by_class: BTreeMap<(TieClass, TieClass), Vec<usize>>,
    symmetric: Vec<usize>,
}

impl Atlas {
    /// Ids follow lexicographic order of the canonical encodings.
    pub fn build(equivalence: Equivalence) -> Atlas {
        let games: Vec<Game> = enumerate_games(None, equivalence).into_iter().collect();
        Atlas::from_games(equivalence, games)
    }

    fn from_games(equivalence: Equivalence, games: Vec<Game>) -> Atlas {
        let index = games.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        let mut by_class: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        let mut symmetric = Vec::new();
        for (i, g) in games.iter().enumerate() {
            by_class.entry(g.tie_classes()).or_default().push(i);
            if is_symmetric(g) {
                symmetric.push(i);
            }
        }
        Atlas {
            equivalence,
            games,
            index,
            by_class,
            symmetric,
        }
    }

    pub fn equivalence(&self) -> Equivalence {
        self.equivalence
    }

    pub fn len(&self) -> usize {
        self.games.len()
    }

    pub fn is_empty(&self) -> bool {
        self.games.is_empty()
    }

    pub fn games(&self) -> &[Game] {
        &self.games
    }

    pub fn game(&self, id: usize) -> Option<&Game> {
        self.games.get(id)
    }

    /// Id of the orbit containing `game`, in any orientation.
    pub fn id_of(&self, game: &Game) -> Option<usize> {
        self.index
            .get(&self.equivalence.representative(game))
            .copied()
    }

    pub fn class_roster(&self, row: TieClass, column: TieClass) -> &[usize] {
        self.by_class.get(&(row, column)).map_or(&[], Vec::as_slice)
    }

    pub fn class_rosters(&self) -> &BTreeMap<(TieClass, TieClass), Vec<usize>> {
        &self.by_class
    }

    pub fn strict_ids(&self) -> &[usize] {
        self.class_roster(TieClass::Strict, TieClass::Strict)
    }

    pub fn strict_games(&self) -> Vec<Game> {
        self.strict_ids().iter().map(|i| self.games[*i]).collect()
    }

    pub fn symmetric_ids(&self) -> &[usize] {
        &self.symmetric
    }

    /// One line per game: id, encoding, tie classes, coordinate name.
    pub fn export(&self) -> String {
        let mut out = String::new();
        for (i, g) in self.games.iter().enumerate() {
            let (r, c) = g.tie_classes();
            writeln!(out, "{i}\t{g}\t{r}/{c}\t{}", coordinate_name(g)).unwrap();
        }
        out
    }

    pub fn import(text: &str, equivalence: Equivalence) -> Result<Atlas, AtlasError> {
        let mut games = Vec::new();
        for (n, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let err = |reason: String| AtlasError::Import {
                line: n + 1,
                reason,
            };
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 4 {
                return Err(err(format!("expected 4 fields, found {}", fields.len())));
            }
            let id: usize = fields[0].parse().map_err(|_| err("bad id".into()))?;
            if id != games.len() {
                return Err(err(format!("id {id} out of sequence")));
            }
            let g: Game = fields[1].parse().map_err(|e| err(format!("{e}")))?;
            if equivalence.representative(&g) != g {
                return Err(err(format!("{g} is not a representative")));
            }
            if games.last().is_some_and(|p: &Game| *p >= g) {
                return Err(err("encodings must increase".into()));
            }
            games.push(g);
        }
        Ok(Atlas::from_games(equivalence, games))
    }
}
