use std::collections::{BTreeMap, BTreeSet};

use twobytwo::naming::{symmetric_code, NamingError, Registry, SYMMETRIC_CODES};
use twobytwo::*;

fn g(s: &str) -> Game {
    s.parse().unwrap()
}

#[test]
fn names_round_trip_over_atlas() {
    let atlas = Atlas::build(Equivalence::Interchange);
    let mut names = BTreeSet::new();
    for game in atlas.games() {
        let n = coordinate_name(game);
        assert_eq!(parse_name(&n.to_string()).unwrap(), *game, "{n}");
        assert_eq!(n.is_diagonal(), is_symmetric(game), "{game} {n}");
        assert!(names.insert((n.row_code, n.column_code)), "{n} reused");
    }
    // 47 x 47 grid positions for 1413 games.
    assert_eq!(names.len(), 1413);
}

#[test]
fn known_names() {
    let name = |s: &str| coordinate_name(&g(s)).to_string();
    assert_eq!(name("1324/4321"), "sd-sd");
    assert_eq!(name("2314/4312"), "sc-sc");
    assert_eq!(name("1314/4311"), "ld-ld");
    assert_eq!(name("0000/0000"), "ze-ze");
    // Matching Pennies is not symmetric: two distinct codes.
    let mp = coordinate_name(&resolve("Matching Pennies").unwrap());
    assert_eq!(mp.to_string(), "do-db");
    assert!(!mp.is_diagonal());
    // Any orientation of a game gets the same name.
    let pd = g("1324/4321");
    for t in Transform::ALL.iter().filter(|t| t.is_interchange()) {
        assert_eq!(
            coordinate_name(&canonical(&pd.apply(*t))).to_string(),
            "sd-sd"
        );
    }
}

#[test]
fn codes_and_aliases() {
    assert_eq!(SYMMETRIC_CODES.len(), 47);
    let distinct: BTreeSet<Game> = SYMMETRIC_CODES.iter().map(|c| c.game()).collect();
    assert_eq!(distinct.len(), 38);
    for c in &SYMMETRIC_CODES {
        assert!(is_symmetric(&c.game()), "{}", c.code);
    }
    assert_eq!(symmetric_code("D").unwrap().code, "sd");
    assert_eq!(symmetric_code("se").unwrap().code, "sr");
    assert_eq!(symmetric_code("SD").unwrap().code, "sd");
    assert_eq!(parse_name("D-C").unwrap(), parse_name("sd-sc").unwrap());
    assert_eq!(parse_name("sd").unwrap(), g("1324/4321"));
}

#[test]
fn malformed_names() {
    assert!(matches!(
        parse_name("xx-sd"),
        Err(NamingError::UnknownCode(_))
    ));
    assert!(matches!(parse_name(""), Err(NamingError::Malformed(_))));
    assert!(matches!(parse_name("sd-"), Err(NamingError::Malformed(_))));
    assert!(matches!(
        parse_name("sd-sc-sb"),
        Err(NamingError::Malformed(_))
    ));
    assert_eq!(resolve("no such game"), None);
}

#[test]
fn registry_entries_resolve() {
    let reg = Registry::builtin();
    assert!(reg.len() > 70);
    let mut seen: BTreeMap<String, Game> = BTreeMap::new();
    for (game, entry) in reg.entries() {
        assert_eq!(parse_name(&entry.coordinate).unwrap(), *game);
        assert!(!entry.names.is_empty());
        assert!(
            seen.insert(entry.coordinate.clone(), *game).is_none(),
            "{} listed twice",
            entry.coordinate
        );
        for n in &entry.names {
            let found = resolve(n).unwrap();
            // Shared names resolve to their first listing.
            assert!(
                common_names(&found).iter().any(|e| e.names.contains(n)),
                "{n}"
            );
        }
    }
}

#[test]
fn registry_lookup_and_resolve() {
    let pd = g("1324/4321");
    let names = common_names(&pd);
    assert_eq!(names.len(), 1);
    assert_eq!(names[0].names, ["Prisoner's Dilemma"]);
    assert_eq!(names[0].sources, ["RGG#12", "Brams#32"]);
    assert_eq!(resolve("prisoner's dilemma"), Some(pd));
    assert_eq!(resolve("sd-sd"), Some(pd));
    assert_eq!(resolve("3142/1234"), Some(canonical(&g("3142/1234"))));
    // Both orientations of Called Bluff carry the name.
    assert!(!common_names(&parse_name("sc-sd").unwrap()).is_empty());
    assert!(!common_names(&parse_name("sd-sc").unwrap()).is_empty());
}

#[test]
fn registry_parse_errors() {
    let e = Registry::parse("# c\nsd-sd\n").err().unwrap();
    assert_eq!(e.line, 2);
    let e = Registry::parse("qq-sd\tName\n").err().unwrap();
    assert_eq!(e.line, 1);
    let r = Registry::parse("sd-sd\tA; B\tX\n\n").unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!(r.find_by_name("b"), Some(g("1324/4321")));
}
