//! Symmetric-coordinate names (`sd-sc`, `mk-mh`, ...) and the common-name registry.
//!
//! A coordinate name `X-Y` combines Row's payoffs from the symmetric game `X`
//! with Column's payoffs from the symmetric game `Y`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::model::{canonical, Game, Pattern, Transform};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NamingError {
    #[error("unknown symmetric code {0:?}")]
    UnknownCode(String),
    #[error("malformed coordinate name {0:?}")]
    Malformed(String),
}

/// One row of the symmetric-game listing.
#[derive(Debug, Clone, Copy)]
pub struct SymmetricCode {
    pub code: &'static str,
    /// Row's ranks in the listing orientation.
    pub ranks: [u8; 4],
    pub names: &'static [&'static str],
}

impl SymmetricCode {
    pub fn pattern(&self) -> Pattern {
        Pattern::raw(self.ranks)
    }

    /// The symmetric game this code names.
    pub fn game(&self) -> Game {
        canonical(&Game::new(self.pattern(), self.pattern().anti_transpose()))
    }
}

const fn sc(code: &'static str, ranks: [u8; 4], names: &'static [&'static str]) -> SymmetricCode {
    SymmetricCode { code, ranks, names }
}

/// The 47-entry listing, duplicates included, in table order.
pub const SYMMETRIC_CODES: [SymmetricCode; 47] = [
    sc("sd", [1, 3, 2, 4], &["Prisoner's Dilemma"]),
    sc("sc", [2, 3, 1, 4], &["Chicken", "Hawk-Dove", "Snowdrift"]),
    sc(
        "sb",
        [3, 2, 1, 4],
        &["Battle of the Sexes", "Leader", "Bach or Stravinsky"],
    ),
    sc(
        "sr",
        [3, 1, 2, 4],
        &["Hero", "Battle of the Sexes", "Bach or Stravinsky"],
    ),
    sc(
        "sm",
        [2, 1, 3, 4],
        &["Compromise", "Anti-Chicken", "Prisoner's Delight"],
    ),
    sc(
        "sk",
        [1, 2, 3, 4],
        &["Deadlock", "Lock", "Anti-Prisoner's Dilemma"],
    ),
    sc("sn", [2, 4, 1, 3], &["No Conflict", "Concord"]),
    sc("su", [1, 4, 2, 3], &["Stag Hunt"]),
    sc("sa", [1, 4, 3, 2], &["Assurance", "Coordination"]),
    sc("so", [2, 4, 3, 1], &["Coordination", "Anti-Coordination"]),
    sc("sp", [3, 4, 2, 1], &["Peace", "Resolution"]),
    sc("sh", [3, 4, 1, 2], &["Harmony"]),
    sc("ld", [1, 3, 1, 4], &["Low Dilemma"]),
    sc("lb", [3, 1, 1, 4], &["Low Battle", "Battle of the Sexes"]),
    sc("lk", [1, 1, 3, 4], &["Low Lock"]),
    sc("ln", [1, 4, 1, 3], &["Low Concord", "Low No Conflict"]),
    sc("lo", [1, 4, 3, 1], &["Low Coordination", "Coordination"]),
    sc("lh", [3, 4, 1, 1], &["Low Harmony"]),
    sc(
        "mb",
        [3, 3, 1, 4],
        &["Middle Battle", "Volunteer's Dilemma", "Middle Leader"],
    ),
    sc("mm", [3, 1, 3, 4], &["Middle Compromise"]),
    sc("mk", [1, 3, 3, 4], &["Midlock", "Middle Deadlock"]),
    sc("mu", [1, 4, 3, 3], &["Middle Hunt", "Rousseau's Hunt"]),
    sc("mp", [3, 4, 3, 1], &["Middle Peace"]),
    sc("mh", [3, 4, 1, 3], &["Middle Harmony", "Invisible Hand"]),
    sc("hd", [1, 4, 2, 4], &["High Dilemma", "High Hunt"]),
    sc("hc", [2, 4, 1, 4], &["High Chicken", "High Concord"]),
    sc("hb", [4, 2, 1, 4], &["High Battle", "High Leader"]),
    sc("hr", [4, 1, 2, 4], &["High Hero", "High Battle"]),
    sc("hm", [2, 1, 4, 4], &["High Compromise", "High Harmony"]),
    sc("hk", [1, 2, 4, 4], &["High Lock", "High Peace"]),
    sc("hn", [2, 4, 1, 4], &["High Concord", "High No Conflict"]),
    sc("hu", [1, 4, 2, 4], &["High Dilemma", "High Hunt"]),
    sc("ha", [1, 4, 4, 2], &["High Assurance", "High Coordination"]),
    sc("ho", [2, 4, 4, 1], &["High Coordination"]),
    sc("hp", [4, 4, 2, 1], &["High Peace"]),
    sc("hh", [4, 4, 1, 2], &["High Harmony"]),
    sc("tk", [1, 4, 4, 4], &["Triple Lock"]),
    sc("th", [4, 4, 1, 4], &["Triple Harmony"]),
    sc(
        "dd",
        [1, 4, 1, 4],
        &["Double Dilemma", "Interdependence", "Avatamsaka"],
    ),
    sc(
        "db",
        [4, 1, 1, 4],
        &["Double Battle", "Double Coordination"],
    ),
    sc("dk", [1, 1, 4, 4], &["Double Lock", "Double Harmony"]),
    sc(
        "du",
        [1, 4, 1, 4],
        &[
            "Double Dilemma",
            "Avatamsaka",
            "Interdependence",
            "Double Hunt",
        ],
    ),
    sc("do", [1, 4, 4, 1], &["Double Coordination"]),
    sc("dh", [4, 4, 1, 1], &["Double Harmony"]),
    sc("bd", [1, 1, 1, 4], &["Basic Dilemma", "Basic Discord"]),
    sc("bh", [1, 4, 1, 1], &["Basic Harmony"]),
    sc("ze", [0, 0, 0, 0], &["Zero", "Indifference", "Null"]),
];

/// Codes written differently in places, mapped to the listing code.
const CODE_ALIASES: [(&str, &str); 3] = [("se", "sr"), ("he", "hr"), ("dc", "do")];

/// Single-letter strict codes used for the twelve strict games.
const LETTERS: [(char, &str); 12] = [
    ('D', "sd"),
    ('C', "sc"),
    ('B', "sb"),
    ('R', "sr"),
    ('M', "sm"),
    ('K', "sk"),
    ('N', "sn"),
    ('U', "su"),
    ('A', "sa"),
    ('O', "so"),
    ('P', "sp"),
    ('H', "sh"),
];

pub fn symmetric_code(code: &str) -> Option<&'static SymmetricCode> {
    let lower = code.trim().to_ascii_lowercase();
    let resolved = CODE_ALIASES
        .iter()
        .find(|(a, _)| *a == lower)
        .map(|(_, c)| c.to_string())
        .or_else(|| {
            let mut chars = code.trim().chars();
            match (chars.next(), chars.next()) {
                (Some(ch), None) => LETTERS
                    .iter()
                    .find(|(l, _)| *l == ch.to_ascii_uppercase())
                    .map(|(_, c)| c.to_string()),
                _ => None,
            }
        })
        .unwrap_or(lower);
    SYMMETRIC_CODES.iter().find(|c| c.code == resolved)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordinateName {
    pub row_code: &'static str,
    pub column_code: &'static str,
    /// Set when the codes only match an interchanged variant of the game.
    pub interchanged: bool,
}

impl CoordinateName {
    pub fn is_diagonal(&self) -> bool {
        self.row_code == self.column_code
    }
}

impl fmt::Display for CoordinateName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.row_code, self.column_code)?;
        if self.interchanged {
            f.write_str("'")?;
        }
        Ok(())
    }
}

impl Serialize for CoordinateName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn first_code_where(pred: impl Fn(Pattern) -> bool) -> Option<&'static str> {
    SYMMETRIC_CODES
        .iter()
        .find(|c| pred(c.pattern()))
        .map(|c| c.code)
}

/// Names a game by the symmetric games its two patterns come from.
///
/// A diagonal name is used whenever one exists. Otherwise the game's own
/// orientation is tried first, then its interchanges; the earliest listing
/// code wins when two codes share a pattern.
pub fn coordinate_name(game: &Game) -> CoordinateName {
    let candidates = Transform::INTERCHANGE.into_iter().filter_map(|t| {
        let v = game.apply(t);
        let row = first_code_where(|p| p == v.row)?;
        let col = first_code_where(|p| p.anti_transpose() == v.column)?;
        Some(CoordinateName {
            row_code: row,
            column_code: col,
            interchanged: t != Transform::IDENTITY,
        })
    });
    let all: Vec<CoordinateName> = candidates.collect();
    all.iter()
        .find(|n| n.is_diagonal())
        .or(all.first())
        .copied()
        .unwrap_or_else(|| {
            unreachable!("every pattern appears in the symmetric listing up to interchange: {game}")
        })
}

/// Parses `X-Y`, `X-Y'` or a bare symmetric code `X` into its canonical game.
pub fn parse_name(text: &str) -> Result<Game, NamingError> {
    let t = text.trim().trim_end_matches('\'');
    if t.is_empty() {
        return Err(NamingError::Malformed(text.to_string()));
    }
    let (a, b) = match t.split_once('-') {
        Some((a, b)) => (a, b),
        None => (t, t),
    };
    if a.is_empty() || b.is_empty() || b.contains('-') {
        return Err(NamingError::Malformed(text.to_string()));
    }
    let x = symmetric_code(a).ok_or_else(|| NamingError::UnknownCode(a.to_string()))?;
    let y = symmetric_code(b).ok_or_else(|| NamingError::UnknownCode(b.to_string()))?;
    Ok(canonical(&Game::new(
        x.pattern(),
        y.pattern().anti_transpose(),
    )))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommonNameEntry {
    pub coordinate: String,
    pub names: Vec<String>,
    pub sources: Vec<String>,
}

pub struct Registry {
    entries: Vec<(Game, CommonNameEntry)>,
    by_game: BTreeMap<Game, Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("registry line {line}: {reason}")]
pub struct RegistryError {
    pub line: usize,
    pub reason: String,
}

impl Registry {
    /// Parses the tab-separated registry format: coordinate name, names
    /// separated by `;`, source tags separated by `;`. Lines starting with
    /// `#` are comments.
    pub fn parse(text: &str) -> Result<Registry, RegistryError> {
        let mut entries = Vec::new();
        let mut by_game: BTreeMap<Game, Vec<usize>> = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim_end();
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |reason: String| RegistryError {
                line: i + 1,
                reason,
            };
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() < 2 || fields.len() > 3 {
                return Err(err(format!(
                    "expected 2 or 3 fields, found {}",
                    fields.len()
                )));
            }
            let game = parse_name(fields[0]).map_err(|e| err(e.to_string()))?;
            let split = |s: &str| -> Vec<String> {
                s.split(';')
                    .map(str::trim)
                    .filter(|x| !x.is_empty())
                    .map(String::from)
                    .collect()
            };
            let entry = CommonNameEntry {
                coordinate: fields[0].trim().to_string(),
                names: split(fields[1]),
                sources: fields.get(2).map(|s| split(s)).unwrap_or_default(),
            };
            by_game.entry(game).or_default().push(entries.len());
            entries.push((game, entry));
        }
        Ok(Registry { entries, by_game })
    }

    pub fn builtin() -> &'static Registry {
        static REGISTRY: OnceLock<Registry> = OnceLock::new();
        REGISTRY.get_or_init(|| {
            Registry::parse(include_str!("../data/common_names.tsv"))
                .expect("bundled registry is valid")
        })
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Game, &CommonNameEntry)> {
        self.entries.iter().map(|(g, e)| (g, e))
    }

    pub fn lookup(&self, game: &Game) -> Vec<CommonNameEntry> {
        let g = canonical(game);
        self.by_game
            .get(&g)
            .map(|ids| ids.iter().map(|i| self.entries[*i].1.clone()).collect())
            .unwrap_or_default()
    }

    /// Finds a game by one of its common names, ignoring case.
    pub fn find_by_name(&self, name: &str) -> Option<Game> {
        let n = name.trim().to_ascii_lowercase();
        self.entries
            .iter()
            .find(|(_, e)| e.names.iter().any(|x| x.to_ascii_lowercase() == n))
            .map(|(g, _)| *g)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn common_names(game: &Game) -> Vec<CommonNameEntry> {
    Registry::builtin().lookup(game)
}

/// Resolves a game encoding, a coordinate name or a registered common name.
pub fn resolve(text: &str) -> Option<Game> {
    if let Ok(g) = Game::from_str(text) {
        return Some(canonical(&g));
    }
    if let Ok(g) = parse_name(text) {
        return Some(g);
    }
    Registry::builtin().find_by_name(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Game {
        s.parse().unwrap()
    }

    #[test]
    fn strict_names() {
        assert_eq!(coordinate_name(&g("1324/4321")).to_string(), "sd-sd");
        assert_eq!(parse_name("sd-sd").unwrap(), g("1324/4321"));
        assert_eq!(parse_name("sc").unwrap(), g("2314/4312"));
        assert_eq!(parse_name("sa-sr").unwrap(), g("1432/4123"));
        assert_eq!(parse_name("A-R").unwrap(), g("1432/4123"));
        assert_eq!(parse_name("sd-sc").unwrap(), g("1324/4312"));
    }

    #[test]
    fn tie_names() {
        assert_eq!(coordinate_name(&g("1314/4311")).to_string(), "ld-ld");
        assert_eq!(coordinate_name(&g("1334/3413")).to_string(), "mk-mh");
        assert_eq!(parse_name("mu-ld").unwrap(), g("1433/4311"));
        assert_eq!(coordinate_name(&g("1441/4114")).to_string(), "do-db");
        assert_eq!(
            coordinate_name(&parse_name("dd-dd").unwrap()).to_string(),
            "dd-dd"
        );
        assert_eq!(parse_name("du-du").unwrap(), parse_name("dd-dd").unwrap());
    }

    #[test]
    fn unknown_codes() {
        assert_eq!(
            parse_name("zz-qq"),
            Err(NamingError::UnknownCode("zz".into()))
        );
        assert!(matches!(parse_name("sd-"), Err(NamingError::Malformed(_))));
        assert!(matches!(
            parse_name("a-b-c"),
            Err(NamingError::Malformed(_))
        ));
    }

    #[test]
    fn aliases_resolve() {
        assert_eq!(parse_name("se-sn").unwrap(), parse_name("sr-sn").unwrap());
        assert_eq!(parse_name("dc-db").unwrap(), parse_name("do-db").unwrap());
    }

    #[test]
    fn registry_examples() {
        let pd = common_names(&g("1324/4321"));
        assert_eq!(pd.len(), 1);
        assert_eq!(pd[0].names[0], "Prisoner's Dilemma");
        assert!(pd[0].sources.contains(&"RGG#12".to_string()));
        assert!(pd[0].sources.contains(&"Brams#32".to_string()));
        let dd = common_names(&parse_name("dd-dd").unwrap());
        assert_eq!(
            dd[0].names,
            ["Double Dilemma", "Avatamsaka", "Interdependence"]
        );
        assert!(dd[0].sources.contains(&"RGG#79".to_string()));
        assert!(common_names(&parse_name("ld-mm").unwrap()).is_empty());
    }

    #[test]
    fn registry_rejects_bad_lines() {
        assert!(Registry::parse("xx-yy\tNope").is_err());
        assert!(Registry::parse("sd-sd").is_err());
        assert_eq!(Registry::parse("# c\n\nsd-sd\tPD\n").unwrap().len(), 1);
    }

    #[test]
    fn resolve_accepts_all_forms() {
        let pd = g("1324/4321");
        assert_eq!(resolve("1324/4321"), Some(pd));
        assert_eq!(resolve("sd-sd"), Some(pd));
        assert_eq!(resolve("prisoner's dilemma"), Some(pd));
        assert_eq!(resolve("nonsense"), None);
    }
}
