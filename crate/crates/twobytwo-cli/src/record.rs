//! Wire records shared by the CLI `records` format and the service.

use serde::{Deserialize, Serialize};
use twobytwo::classify::{decimal, Dominance};
use twobytwo::topology::layers_of;
use twobytwo::{
    classify, common_names, coordinate_name, layer_of, neighbors, resolve, Atlas, Cell, Game,
    MoveSet,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TieClasses {
    pub row: String,
    pub column: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellPayoff {
    pub cell: String,
    pub row: u8,
    pub column: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equilibrium {
    pub cell: String,
    pub row: u8,
    pub column: u8,
    pub strict: bool,
    pub pareto_optimal: bool,
}

/// Probabilities and values are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixedRecord {
    pub row_up: String,
    pub column_left: String,
    pub row_value: String,
    pub column_value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationSummary {
    pub family: String,
    pub subfamily: String,
    pub equilibria: Vec<Equilibrium>,
    pub dominant_row: Option<String>,
    pub dominant_column: Option<String>,
    pub maximin_row: String,
    pub maximin_column: String,
    pub pareto_optimal: Vec<String>,
    pub pareto_deficient_equilibrium: bool,
    pub fixed_rank_sum: bool,
    pub inducement_row: String,
    pub inducement_column: String,
    pub mixed: Option<MixedRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborRecord {
    #[serde(rename = "move")]
    pub mv: String,
    pub id: usize,
    pub encoding: String,
    pub coordinate_name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiGameRecord {
    pub id: usize,
    pub encoding: String,
    pub coordinate_name: String,
    pub common_names: Vec<String>,
    pub tie_classes: TieClasses,
    /// Set for strict games only.
    pub layer: Option<String>,
    /// Layers reachable by breaking ties; one entry for strict games.
    pub layers: Vec<String>,
    pub payoffs: Vec<CellPayoff>,
    pub classification: ClassificationSummary,
    pub neighbors: Vec<NeighborRecord>,
}

fn dominant(d: Dominance) -> Option<String> {
    match d {
        Dominance::None => None,
        other => Some(other.to_string()),
    }
}

pub fn summary(game: &Game) -> ClassificationSummary {
    let c = classify(game);
    let equilibria = c
        .nash_weak
        .iter()
        .map(|cell| {
            let (row, column) = game.payoff(cell);
            Equilibrium {
                cell: cell.to_string(),
                row,
                column,
                strict: c.nash_strict.contains(cell),
                pareto_optimal: c.pareto_optimal.contains(cell),
            }
        })
        .collect();
    ClassificationSummary {
        family: c.family.to_string(),
        subfamily: c.subfamily.to_string(),
        equilibria,
        dominant_row: dominant(c.dominance.row),
        dominant_column: dominant(c.dominance.column),
        maximin_row: c.maximin.row.to_string(),
        maximin_column: c.maximin.column.to_string(),
        pareto_optimal: c.pareto_optimal.iter().map(|x| x.to_string()).collect(),
        pareto_deficient_equilibrium: c.is_pareto_deficient_equilibrium(),
        fixed_rank_sum: c.fixed_rank_sum,
        inducement_row: c.inducement_sign.row.to_string(),
        inducement_column: c.inducement_sign.column.to_string(),
        mixed: c.mixed.map(|m| MixedRecord {
            row_up: decimal(&m.row_up),
            column_left: decimal(&m.column_left),
            row_value: decimal(&m.row_value),
            column_value: decimal(&m.column_value),
        }),
    }
}

pub fn neighbor_records(atlas: &Atlas, game: &Game, moves: MoveSet) -> Vec<NeighborRecord> {
    neighbors(game, moves)
        .into_iter()
        .map(|(mv, h)| NeighborRecord {
            mv: mv.to_string(),
            id: atlas.id_of(&h).expect("moves stay in the atlas"),
            encoding: h.to_string(),
            coordinate_name: coordinate_name(&h).to_string(),
        })
        .collect()
}

/// The record of an atlas game. Neighbours use the adjacent move set.
pub fn game_record(atlas: &Atlas, game: &Game) -> Option<ApiGameRecord> {
    let id = atlas.id_of(game)?;
    let game = atlas.games()[id];
    let (row, column) = game.tie_classes();
    Some(ApiGameRecord {
        id,
        encoding: game.to_string(),
        coordinate_name: coordinate_name(&game).to_string(),
        common_names: common_names(&game)
            .into_iter()
            .flat_map(|e| e.names)
            .collect(),
        tie_classes: TieClasses {
            row: row.to_string(),
            column: column.to_string(),
        },
        layer: layer_of(&game).ok().map(|l| l.to_string()),
        layers: layers_of(&game).iter().map(|l| l.to_string()).collect(),
        payoffs: Cell::ALL
            .iter()
            .map(|c| {
                let (row, column) = game.payoff(*c);
                CellPayoff {
                    cell: c.to_string(),
                    row,
                    column,
                }
            })
            .collect(),
        classification: summary(&game),
        neighbors: neighbor_records(atlas, &game, MoveSet::ADJACENT),
    })
}

/// Looks a game up by atlas id, encoding, coordinate name or common name.
pub fn lookup(atlas: &Atlas, key: &str) -> Option<Game> {
    let key = key.trim();
    if let Ok(id) = key.parse::<usize>() {
        return atlas.games().get(id).copied();
    }
    resolve(key).filter(|g| atlas.id_of(g).is_some())
}

/// Counts the service and CLI rely on. Any mismatch is an internal fault.
pub fn self_check(atlas: &Atlas) -> Result<(), String> {
    let strict = atlas.strict_ids().len();
    let total = atlas.len();
    let symmetric = atlas.symmetric_ids().len();
    if (strict, total, symmetric) == (144, 1413, 38) {
        Ok(())
    } else {
        Err(format!(
            "atlas self-check failed: {strict} strict, {total} total, {symmetric} symmetric"
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameRef {
    pub id: usize,
    pub encoding: String,
    pub coordinate_name: String,
    pub common_names: Vec<String>,
}

impl GameRef {
    pub fn new(atlas: &Atlas, game: &Game) -> GameRef {
        GameRef {
            id: atlas.id_of(game).expect("atlas game"),
            encoding: game.to_string(),
            coordinate_name: coordinate_name(game).to_string(),
            common_names: common_names(game)
                .into_iter()
                .flat_map(|e| e.names)
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStepRecord {
    #[serde(rename = "move")]
    pub mv: String,
    pub game: GameRef,
}

/// Costs are in thousandths of a unit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub from: GameRef,
    pub goal: String,
    pub moves: String,
    pub costs: String,
    pub length: usize,
    pub cost: u64,
    pub steps: Vec<PathStepRecord>,
}

impl PathRecord {
    pub fn new(
        atlas: &Atlas,
        path: &twobytwo::Path,
        goal: &twobytwo::Goal,
        moves: MoveSet,
        costs: twobytwo::CostModel,
    ) -> PathRecord {
        PathRecord {
            from: GameRef::new(atlas, &path.start),
            goal: goal.to_string(),
            moves: moves.to_string(),
            costs: costs.to_string(),
            length: path.len(),
            cost: path.cost,
            steps: path
                .steps
                .iter()
                .map(|s| PathStepRecord {
                    mv: s.mv.to_string(),
                    game: GameRef::new(atlas, &s.game),
                })
                .collect(),
        }
    }
}
