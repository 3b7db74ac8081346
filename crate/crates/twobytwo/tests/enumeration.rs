use std::collections::{BTreeMap, BTreeSet};

use twobytwo::atlas::{enumerate_patterns, orbit_count_filtered, raw_pairs};
use twobytwo::model::Transform;
use twobytwo::{
    canonical, enumerate_games, is_symmetric, orbit_count_oracle, symmetric_catalog, Atlas,
    Equivalence, Game, TieClass,
};

const STRICT: Option<(TieClass, TieClass)> = Some((TieClass::Strict, TieClass::Strict));

/// Orbit under all eight transforms, built by closure rather than by the
/// library's representative choice.
fn orbit8(g: &Game) -> BTreeSet<Game> {
    let mut seen = BTreeSet::from([*g]);
    let mut stack = vec![*g];
    while let Some(x) = stack.pop() {
        for t in [
            Transform::SWAP_ROWS,
            Transform::SWAP_COLUMNS,
            Transform::TRANSPOSE,
        ] {
            let y = x.apply(t);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen
}

#[test]
fn pattern_and_raw_pair_counts() {
    let pats = enumerate_patterns();
    assert_eq!(pats.len(), 75);
    assert_eq!(pats.iter().filter(|p| p.is_strict()).count(), 24);
    assert_eq!(pats.iter().collect::<BTreeSet<_>>().len(), 75);
    assert_eq!(raw_pairs().count(), 5625);
    assert_eq!(raw_pairs().filter(|g| g.is_strict()).count(), 576);
}

#[test]
fn strict_counts() {
    let strict = enumerate_games(STRICT, Equivalence::Interchange);
    assert_eq!(strict.len(), 144);
    assert_eq!(strict.iter().filter(|g| is_symmetric(g)).count(), 12);
    assert_eq!(
        enumerate_games(STRICT, Equivalence::InterchangePlusReflection).len(),
        78
    );
}

#[test]
fn complete_counts_match_burnside() {
    for (eq, n) in [
        (Equivalence::Oriented, 5625),
        (Equivalence::Interchange, 1413),
        (Equivalence::InterchangePlusReflection, 726),
    ] {
        assert_eq!(enumerate_games(None, eq).len(), n, "{eq:?}");
        assert_eq!(orbit_count_oracle(eq), n as u64, "{eq:?}");
    }
    let strict = |g: &Game| g.is_strict();
    assert_eq!(orbit_count_filtered(Equivalence::Interchange, strict), 144);
    assert_eq!(
        orbit_count_filtered(Equivalence::InterchangePlusReflection, strict),
        78
    );
}

#[test]
fn burnside_fixed_points() {
    // Identity fixes all 5625 raw pairs; each nontrivial interchange fixes 9.
    for t in &Transform::INTERCHANGE[1..] {
        assert_eq!(raw_pairs().filter(|g| g.apply(*t) == *g).count(), 9, "{t}");
    }
}

#[test]
fn reflection_orbits_by_closure() {
    let classes: BTreeSet<BTreeSet<Game>> = raw_pairs().map(|g| orbit8(&g)).collect();
    assert_eq!(classes.len(), 726);
}

#[test]
fn orbit_sizes_sum_to_raw_pairs() {
    let mut sizes: BTreeMap<Game, usize> = BTreeMap::new();
    for g in raw_pairs() {
        *sizes.entry(canonical(&g)).or_default() += 1;
    }
    assert_eq!(sizes.len(), 1413);
    assert_eq!(sizes.values().sum::<usize>(), 5625);
    for (g, n) in &sizes {
        let distinct: BTreeSet<Game> = g.interchange_variants().into_iter().collect();
        assert_eq!(*n, distinct.len(), "{g}");
    }
}

#[test]
fn symmetric_catalog_counts() {
    let cat = symmetric_catalog();
    assert_eq!(cat.entries.len(), 47);
    assert_eq!(cat.distinct().len(), 38);
    assert_eq!(cat.distinct_games().len(), 38);
    let zero: Game = "0000/0000".parse().unwrap();
    assert_eq!(
        cat.distinct_games().iter().filter(|g| **g != zero).count(),
        37
    );
    assert_eq!(
        cat.distinct_games()
            .iter()
            .filter(|g| g.is_strict())
            .count(),
        12
    );

    let atlas = Atlas::build(Equivalence::Interchange);
    let sym: BTreeSet<Game> = atlas
        .symmetric_ids()
        .iter()
        .map(|i| atlas.games()[*i])
        .collect();
    assert_eq!(sym, cat.distinct_games());

    // Listed duplicates name the same game as an earlier code.
    let dups: BTreeMap<&str, &str> = cat
        .entries
        .iter()
        .filter_map(|e| e.same_as.map(|s| (e.code, s)))
        .collect();
    assert_eq!(dups.len(), 9);
    assert_eq!(dups["hu"], "hd");
    assert_eq!(dups["du"], "dd");
}

#[test]
fn self_conjugate_orbits() {
    let atlas = Atlas::build(Equivalence::Interchange);
    let selfconj: Vec<Game> = atlas
        .games()
        .iter()
        .filter(|g| canonical(&g.apply(Transform::TRANSPOSE)) == **g)
        .copied()
        .collect();
    assert_eq!(selfconj.len(), 39);
    let odd: Vec<String> = selfconj
        .iter()
        .filter(|g| !is_symmetric(g))
        .map(|g| g.to_string())
        .collect();
    assert_eq!(odd, ["1441/4114"]);
    assert_eq!((1413 + 39) / 2, 726);
}

#[test]
fn atlas_ids_and_rosters() {
    let a = Atlas::build(Equivalence::Interchange);
    let b = Atlas::build(Equivalence::Interchange);
    assert_eq!(a.games(), b.games());
    assert_eq!(a.len(), 1413);
    assert!(a.games().windows(2).all(|w| w[0] < w[1]));
    let pd: Game = "1324/4321".parse().unwrap();
    let id = a.id_of(&pd.apply(Transform::SWAP_ROWS)).unwrap();
    assert_eq!(a.games()[id], pd);
    assert_eq!(a.strict_ids().len(), 144);
    let total: usize = a.class_rosters().values().map(Vec::len).sum();
    assert_eq!(total, 1413);
    assert_eq!(a.class_roster(TieClass::Zero, TieClass::Zero).len(), 1);
}

#[test]
fn export_import_round_trip() {
    let a = Atlas::build(Equivalence::Interchange);
    let text = a.export();
    assert_eq!(text.lines().count(), 1413);
    let pd = a.id_of(&"1324/4321".parse().unwrap()).unwrap();
    assert!(text.contains(&format!("\n{pd}\t1324/4321\tstrict/strict\tsd-sd\n")));
    let b = Atlas::import(&text, Equivalence::Interchange).unwrap();
    assert_eq!(a.games(), b.games());
}
