//! Grid layouts of the strict and complete game sets, rendered as SVG or DOT.
//!
//! Both layouts put the symmetric games on the southwest-northeast diagonal:
//! a game sits in the column of its column code and the row of its row code,
//! with rows counted from the bottom.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::atlas::Atlas;
use crate::classify::{classify, Family};
use crate::model::{Cell, Game};
use crate::naming::{coordinate_name, parse_name};
use crate::topology::{layer_of, neighbors, Layer, MoveSet};

/// Strict codes in chart order. The first six span the discord side, the
/// last six the aligned side; Prisoner's Dilemma lands at the center.
pub const STRICT_AXIS: [&str; 12] = [
    "sc", "sb", "sr", "sm", "sk", "sd", "su", "sa", "so", "sp", "sh", "sn",
];

/// Codes of the two-rank classes, Zero first.
pub const ARCHETYPAL_AXIS: [&str; 23] = [
    "ze", "bh", "bd", "th", "tk", "dh", "do", "dd", "dk", "db", "du", "hh", "hp", "ho", "ha", "hm",
    "hn", "hk", "hb", "hr", "hc", "hu", "hd",
];

/// Strict codes interlaced with the low and middle codes that lie between them.
pub const INTERLACED_AXIS: [&str; 24] = [
    "mk", "sk", "lk", "sm", "mm", "sr", "lb", "sb", "mb", "sc", "ld", "sd", "su", "mu", "sa", "lo",
    "so", "mp", "sp", "lh", "sh", "mh", "sn", "ln",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Which {
    Strict,
    Complete,
}

impl std::str::FromStr for Which {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "strict" => Ok(Which::Strict),
            "complete" | "all" => Ok(Which::Complete),
            _ => Err(format!("unknown chart {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlacedCell {
    pub game: Game,
    pub id: usize,
    pub name: String,
    pub x: usize,
    /// Counted from the bottom.
    pub y: usize,
    pub panel: String,
    pub symmetric_axis: bool,
    pub family: Family,
}

/// A grid position whose name denotes a game placed elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossReference {
    pub x: usize,
    pub y: usize,
    pub name: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartLayout {
    pub which: Which,
    pub axis: Vec<&'static str>,
    pub cells: Vec<PlacedCell>,
    pub cross_references: Vec<CrossReference>,
}

impl ChartLayout {
    pub fn size(&self) -> usize {
        self.axis.len()
    }

    pub fn position(&self, game: &Game) -> Option<(usize, usize)> {
        self.cells
            .iter()
            .find(|c| c.game == *game)
            .map(|c| (c.x, c.y))
    }

    pub fn at(&self, x: usize, y: usize) -> Option<&PlacedCell> {
        self.cells.iter().find(|c| c.x == x && c.y == y)
    }
}

fn strict_panel(x: usize, y: usize) -> Layer {
    match (x < 6, y < 6) {
        (true, true) => Layer::L1Discord,
        (false, true) => Layer::L2ColumnAligned,
        (false, false) => Layer::L3WinWin,
        (true, false) => Layer::L4RowAligned,
    }
}

pub fn layout_strict(atlas: &Atlas) -> ChartLayout {
    let mut cells = Vec::new();
    for (y, r) in STRICT_AXIS.iter().enumerate() {
        for (x, c) in STRICT_AXIS.iter().enumerate() {
            let name = format!("{r}-{c}");
            let game = parse_name(&name).expect("axis codes exist");
            let layer = layer_of(&game).expect("strict");
            debug_assert_eq!(layer, strict_panel(x, y));
            cells.push(PlacedCell {
                game,
                id: atlas.id_of(&game).expect("strict game in atlas"),
                name,
                x,
                y,
                panel: layer.to_string(),
                symmetric_axis: x == y,
                family: classify(&game).family,
            });
        }
    }
    ChartLayout {
        which: Which::Strict,
        axis: STRICT_AXIS.to_vec(),
        cells,
        cross_references: Vec::new(),
    }
}

/// Every atlas game at the cell of its coordinate name. The remaining cells
/// name games already placed and become cross-references.
pub fn layout_complete(atlas: &Atlas) -> ChartLayout {
    let axis: Vec<&'static str> = ARCHETYPAL_AXIS
        .iter()
        .chain(INTERLACED_AXIS.iter())
        .copied()
        .collect();
    let pos: BTreeMap<&str, usize> = axis.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let arch = ARCHETYPAL_AXIS.len();
    let half = |i: usize| if i < arch { "archetypal" } else { "interlaced" };
    let mut cells = Vec::new();
    let mut home: BTreeMap<(usize, usize), Game> = BTreeMap::new();
    for (id, game) in atlas.games().iter().enumerate() {
        let n = coordinate_name(game);
        let (x, y) = (pos[n.column_code], pos[n.row_code]);
        let prev = home.insert((x, y), *game);
        assert!(prev.is_none(), "two games share cell {n}");
        cells.push(PlacedCell {
            game: *game,
            id,
            name: n.to_string(),
            x,
            y,
            panel: format!("{}/{}", half(y), half(x)),
            symmetric_axis: x == y,
            family: classify(game).family,
        });
    }
    cells.sort_by_key(|c| (c.y, c.x));
    let by_game: BTreeMap<Game, String> = cells.iter().map(|c| (c.game, c.name.clone())).collect();
    let mut cross_references = Vec::new();
    for (y, r) in axis.iter().enumerate() {
        for (x, c) in axis.iter().enumerate() {
            if home.contains_key(&(x, y)) {
                continue;
            }
            let name = format!("{r}-{c}");
            let g = parse_name(&name).expect("axis codes exist");
            cross_references.push(CrossReference {
                x,
                y,
                name,
                target: by_game[&g].clone(),
            });
        }
    }
    ChartLayout {
        which: Which::Complete,
        axis,
        cells,
        cross_references,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Format {
    Svg,
    Dot,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "svg" => Ok(Format::Svg),
            "dot" => Ok(Format::Dot),
            _ => Err(format!("unknown chart format {s:?}")),
        }
    }
}

/// Fill colors per family. Fixed so charts compare across runs.
pub const FAMILY_STYLE: [(Family, &str); 7] = [
    (Family::WinWin, "#b7e1a1"),
    (Family::Biased, "#cfe3f5"),
    (Family::SecondBest, "#fbe7a6"),
    (Family::Unfair, "#f7c99b"),
    (Family::PdFamily, "#f2a7a7"),
    (Family::Cyclic, "#d9c7ea"),
    (Family::Indeterminate, "#e0e0e0"),
];

/// DOT edge style per move tier.
pub const EDGE_STYLE: [(&str, &str); 5] = [
    ("low", "color=\"#4a90d9\""),
    ("mid", "color=\"#2e8b57\""),
    ("high", "color=\"#c0392b\", penwidth=2"),
    ("nonadjacent", "color=\"#7f7f7f\", style=dashed"),
    ("half", "color=\"#999999\", style=dotted"),
];

fn fill(f: Family) -> &'static str {
    FAMILY_STYLE
        .iter()
        .find(|(x, _)| *x == f)
        .map(|(_, c)| *c)
        .unwrap()
}

fn svg_id(name: &str) -> String {
    name.replace('\'', "_i")
}

pub fn render(layout: &ChartLayout, format: Format) -> String {
    match format {
        Format::Svg => render_svg(layout),
        Format::Dot => render_dot(layout, MoveSet::ADJACENT),
    }
}

const CELL: usize = 64;
const MARGIN: usize = 32;

pub fn render_svg(layout: &ChartLayout) -> String {
    let n = layout.size();
    let side = n * CELL + 2 * MARGIN;
    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{side}" height="{side}" viewBox="0 0 {side} {side}" font-family="sans-serif">"#
    )
    .unwrap();
    writeln!(
        s,
        "<style>.cell text{{font-size:10px}} .name{{font-size:9px;fill:#333}} .ne{{fill:none;stroke:#000;stroke-width:1.5}} .mm{{fill:#000}} .pd{{stroke:#c00;stroke-width:2}} .xref text{{font-size:8px;fill:#888}}</style>"
    )
    .unwrap();
    let origin = |x: usize, y: usize| (MARGIN + x * CELL, MARGIN + (n - 1 - y) * CELL);
    for c in &layout.cells {
        let (ox, oy) = origin(c.x, c.y);
        let cls = classify(&c.game);
        writeln!(
            s,
            r#"<g id="{}" class="cell family-{}{}" data-game="{}" data-panel="{}" transform="translate({ox},{oy})">"#,
            svg_id(&c.name),
            c.family.name(),
            if c.symmetric_axis { " symmetric" } else { "" },
            c.game,
            c.panel
        )
        .unwrap();
        writeln!(
            s,
            r##"<rect width="{CELL}" height="{CELL}" fill="{}" stroke="#666" stroke-width="0.5"/>"##,
            fill(c.family)
        )
        .unwrap();
        for cell in Cell::ALL {
            let (r, k) = c.game.payoff(cell);
            let cx = 10 + cell.col() * 26;
            let cy = 14 + cell.row() * 18;
            if cls.nash_weak.contains(cell) {
                let deficient = !cls.pareto_optimal.contains(cell);
                writeln!(
                    s,
                    r#"<circle class="ne{}" cx="{}" cy="{}" r="9"/>"#,
                    if deficient { " pd" } else { "" },
                    cx + 7,
                    cy - 4
                )
                .unwrap();
            }
            writeln!(s, r#"<text x="{cx}" y="{cy}">{r},{k}</text>"#).unwrap();
        }
        for (p, mm) in [("r", cls.maximin.row), ("c", cls.maximin.column)] {
            for st in mm.iter() {
                let cells = st.cells();
                let (a, b) = (cells[0], cells[1]);
                let x = 4 + (a.col() + b.col()) * 13 + if p == "c" { 2 } else { 0 };
                let y = 4 + (a.row() + b.row()) * 9;
                writeln!(
                    s,
                    r#"<rect class="mm" x="{x}" y="{y}" width="3" height="3"/>"#
                )
                .unwrap();
            }
        }
        writeln!(
            s,
            r#"<text class="name" x="4" y="{}">{}</text>"#,
            CELL - 6,
            c.name
        )
        .unwrap();
        writeln!(s, "</g>").unwrap();
    }
    for r in &layout.cross_references {
        let (ox, oy) = origin(r.x, r.y);
        writeln!(
            s,
            r#"<g class="xref" data-name="{}" data-target="{}" transform="translate({ox},{oy})"><text x="4" y="{}">= {}</text></g>"#,
            r.name,
            r.target,
            CELL / 2,
            r.target
        )
        .unwrap();
    }
    if layout.which == Which::Strict {
        // Each panel is a torus: opposite edges meet.
        writeln!(
            s,
            r##"<g class="torus" stroke="#444" stroke-dasharray="4 3" fill="none">"##
        )
        .unwrap();
        for (px, py) in [(0, 0), (6, 0), (0, 6), (6, 6)] {
            let (x0, y0) = origin(px, py + 5);
            writeln!(
                s,
                r#"<rect x="{x0}" y="{y0}" width="{}" height="{}"/>"#,
                6 * CELL,
                6 * CELL
            )
            .unwrap();
        }
        writeln!(s, "</g>").unwrap();
    }
    writeln!(s, "</svg>").unwrap();
    s
}

/// Nodes are the placed games; edges join games one move apart, each pair
/// once, styled by the lowest move tier joining them.
pub fn render_dot(layout: &ChartLayout, move_set: MoveSet) -> String {
    let names: BTreeMap<Game, &str> = layout
        .cells
        .iter()
        .map(|c| (c.game, c.name.as_str()))
        .collect();
    let mut edges: BTreeMap<(Game, Game), &'static str> = BTreeMap::new();
    for c in &layout.cells {
        for (mv, h) in neighbors(&c.game, move_set) {
            if h == c.game || !names.contains_key(&h) {
                continue;
            }
            let key = if c.game < h { (c.game, h) } else { (h, c.game) };
            edges.entry(key).or_insert(mv.kind.tier());
        }
    }
    let mut s = String::new();
    let graph = match layout.which {
        Which::Strict => "strict",
        Which::Complete => "complete",
    };
    writeln!(s, "graph {graph} {{").unwrap();
    writeln!(
        s,
        "  node [shape=box, style=filled, fontname=\"sans-serif\"];"
    )
    .unwrap();
    let mut seen = BTreeSet::new();
    for c in &layout.cells {
        if seen.insert(c.game) {
            writeln!(
                s,
                "  \"{}\" [label=\"{}\\n{}\", fillcolor=\"{}\", pos=\"{},{}!\"];",
                c.name,
                c.name,
                c.game,
                fill(c.family),
                c.x,
                c.y
            )
            .unwrap();
        }
    }
    for ((a, b), tier) in &edges {
        let style = EDGE_STYLE
            .iter()
            .find(|(t, _)| t == tier)
            .map(|(_, s)| *s)
            .unwrap();
        writeln!(s, "  \"{}\" -- \"{}\" [{style}];", names[a], names[b]).unwrap();
    }
    writeln!(s, "}}").unwrap();
    s
}
