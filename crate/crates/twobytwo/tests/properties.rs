use proptest::prelude::*;

use twobytwo::atlas::raw_pairs;
use twobytwo::*;

fn all_raw() -> Vec<Game> {
    raw_pairs().collect()
}

fn any_game() -> impl Strategy<Value = Game> {
    (0..5625usize).prop_map(|i| all_raw()[i])
}

fn any_transform() -> impl Strategy<Value = Transform> {
    (0..8usize).prop_map(|i| Transform::ALL[i])
}

proptest! {
    #[test]
    fn normalization_is_order_preserving(v in prop::array::uniform4(-1000i32..1000)) {
        let values = v.map(f64::from);
        let p = normalize_payoffs(values, 0.0).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                prop_assert_eq!(values[i] < values[j], p.ranks()[i] < p.ranks()[j]);
            }
        }
    }

    #[test]
    fn normalization_ignores_affine_rescaling(v in prop::array::uniform4(-100i32..100), a in 1i32..50, b in -500i32..500) {
        let x = v.map(f64::from);
        let y = v.map(|t| f64::from(t * a + b));
        prop_assert_eq!(normalize_payoffs(x, 0.0).unwrap(), normalize_payoffs(y, 0.0).unwrap());
    }

    #[test]
    fn canonical_is_idempotent_and_orbit_stable(game in any_game(), t in any_transform()) {
        let c = canonical(&game);
        prop_assert_eq!(canonical(&c), c);
        prop_assert!(c.satisfies_orientation_rule());
        if t.is_interchange() {
            prop_assert_eq!(canonical(&game.apply(t)), c);
        }
        let key = canonicalize(&game);
        prop_assert_eq!(game.apply(key.applied), key.game);
    }

    #[test]
    fn transforms_form_a_group(game in any_game(), s in any_transform(), t in any_transform()) {
        prop_assert_eq!(game.apply(s).apply(t), game.apply(s.then(t)));
        prop_assert_eq!(game.apply(s).apply(s.inverse()), game);
        prop_assert_eq!(s.then(t).is_interchange(), s.is_interchange() == t.is_interchange());
    }

    #[test]
    fn encoding_round_trips(game in any_game()) {
        let text = game.to_string();
        prop_assert_eq!(text.parse::<Game>().unwrap(), game);
        prop_assert_eq!(resolve(&coordinate_name(&game).to_string()), Some(canonical(&game)));
    }

    #[test]
    fn swaps_are_involutions(game in any_game()) {
        let c = canonical(&game);
        for (mv, h) in neighbors(&c, MoveSet { adjacent: true, nonadjacent: true, ties: false }) {
            prop_assert_eq!(apply_swap(&h, mv).unwrap(), c);
        }
    }

    #[test]
    fn classification_is_orientation_invariant(game in any_game(), t in any_transform()) {
        prop_assume!(t.is_interchange());
        let a = classify(&game);
        let b = classify(&game.apply(t));
        prop_assert_eq!(a.family, b.family);
        prop_assert_eq!(a.subfamily, b.subfamily);
        prop_assert_eq!(a.nash_weak.len(), b.nash_weak.len());
    }

    #[test]
    fn tie_moves_round_trip(game in any_game(), p in 0..2usize, l in 0..3usize) {
        let c = canonical(&game);
        let (player, level) = (Player::BOTH[p], Level::ALL[l]);
        if let Ok(h) = make_tie(&c, player, level) {
            let ties = MoveSet { adjacent: false, nonadjacent: false, ties: true };
            prop_assert!(neighbors(&h, ties).iter().any(|(_, x)| *x == c));
        }
    }
}
