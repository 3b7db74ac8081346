use std::collections::BTreeSet;

use twobytwo::chart::{layout_complete, layout_strict, render, render_svg, Format, STRICT_AXIS};
use twobytwo::*;

fn atlas() -> Atlas {
    Atlas::build(Equivalence::Interchange)
}

/// Single-pattern difference: the swap kind joining two patterns, if any.
fn swap_kind(a: Pattern, b: Pattern) -> Option<(u8, u8)> {
    let diff: Vec<usize> = (0..4).filter(|i| a.ranks()[*i] != b.ranks()[*i]).collect();
    match diff.as_slice() {
        [i, j] if a.ranks()[*i] == b.ranks()[*j] && a.ranks()[*j] == b.ranks()[*i] => {
            let (x, y) = (a.ranks()[*i], a.ranks()[*j]);
            Some((x.min(y), x.max(y)))
        }
        _ => None,
    }
}

#[test]
fn strict_layout_geometry() {
    let l = layout_strict(&atlas());
    assert_eq!(l.size(), 12);
    assert_eq!(l.cells.len(), 144);
    assert_eq!(
        l.cells
            .iter()
            .map(|c| c.game)
            .collect::<BTreeSet<_>>()
            .len(),
        144
    );
    let pd = l.position(&"1324/4321".parse().unwrap()).unwrap();
    assert_eq!(pd, (5, 5));
    for c in &l.cells {
        assert_eq!(c.symmetric_axis, is_symmetric(&c.game), "{}", c.name);
        assert_eq!(c.symmetric_axis, c.x == c.y);
        assert_eq!(c.panel, layer_of(&c.game).unwrap().to_string());
    }
    for panel in ["L1", "L2", "L3", "L4"] {
        assert_eq!(
            l.cells.iter().filter(|c| c.panel == panel).count(),
            36,
            "{panel}"
        );
    }
    assert_eq!(l.at(0, 0).unwrap().name, "sc-sc");
    assert_eq!(l.at(11, 11).unwrap().name, "sn-sn");
}

#[test]
fn axis_neighbours_differ_by_one_low_or_mid_swap() {
    // Consecutive codes in each half, wrapping, are one low or middle swap apart.
    for half in [&STRICT_AXIS[..6], &STRICT_AXIS[6..]] {
        for i in 0..6 {
            let a = parse_name(half[i]).unwrap().row;
            let b = parse_name(half[(i + 1) % 6]).unwrap().row;
            let k = swap_kind(a, b).unwrap_or_else(|| panic!("{} {}", half[i], half[(i + 1) % 6]));
            assert!(k == (1, 2) || k == (2, 3), "{k:?}");
        }
    }
}

#[test]
fn grid_neighbours_are_one_move_apart() {
    let l = layout_strict(&atlas());
    for c in &l.cells {
        let n: BTreeSet<Game> = neighbors(&c.game, MoveSet::ADJACENT)
            .into_iter()
            .map(|(_, h)| h)
            .collect();
        let (hx, hy) = (c.x / 6 * 6, c.y / 6 * 6);
        let right = l.at(hx + (c.x + 1) % 6, c.y).unwrap();
        let up = l.at(c.x, hy + (c.y + 1) % 6).unwrap();
        assert!(n.contains(&right.game), "{} {}", c.name, right.name);
        assert!(n.contains(&up.game), "{} {}", c.name, up.name);
    }
}

#[test]
fn strict_svg_and_dot() {
    let l = layout_strict(&atlas());
    let svg = render(&l, Format::Svg);
    assert!(svg.starts_with("<?xml"));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("class=\"cell ").count(), 144);
    assert_eq!(svg.matches(" symmetric\"").count(), 12);
    assert!(svg.contains(r#"<g id="sd-sd" class="cell family-pd-family symmetric""#));
    // Equilibrium cells that some other cell Pareto-dominates get the warning ring.
    let pde: usize = l
        .cells
        .iter()
        .map(|c| {
            let cls = classify(&c.game);
            cls.nash_weak
                .iter()
                .filter(|x| !cls.pareto_optimal.contains(*x))
                .count()
        })
        .sum();
    assert_eq!(pde, 16);
    assert_eq!(svg.matches("class=\"ne pd\"").count(), pde);
    assert_eq!(svg, render_svg(&layout_strict(&atlas())));

    let dot = render(&l, Format::Dot);
    assert!(dot.starts_with("graph strict {"));
    assert_eq!(dot.lines().filter(|x| x.contains("pos=")).count(), 144);
    assert_eq!(dot.lines().filter(|x| x.contains(" -- ")).count(), 432);
    assert_eq!(dot.matches("penwidth=2").count(), 144);
    assert_eq!(dot, render(&layout_strict(&atlas()), Format::Dot));
}

#[test]
fn complete_layout() {
    let a = atlas();
    let l = layout_complete(&a);
    assert_eq!(l.size(), 47);
    assert_eq!(l.cells.len(), 1413);
    assert_eq!(l.cross_references.len(), 47 * 47 - 1413);
    assert_eq!(l.cross_references.len(), 796);
    let zero = l.at(0, 0).unwrap();
    assert_eq!(zero.name, "ze-ze");
    assert_eq!(zero.game, "0000/0000".parse().unwrap());
    for r in &l.cross_references {
        let target = parse_name(&r.target).unwrap();
        assert_eq!(parse_name(&r.name).unwrap(), target, "{}", r.name);
    }
    let svg = render_svg(&l);
    assert_eq!(svg.matches("class=\"cell ").count(), 1413);
    assert_eq!(svg.matches("class=\"xref\"").count(), 796);
    assert!(!svg.contains("class=\"torus\""));
}
