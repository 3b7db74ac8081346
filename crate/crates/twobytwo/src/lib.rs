//! Enumeration, classification and payoff-swap topology of the 2x2 ordinal games.
//!
//! Games are written `rrrr/cccc`: Row's ranks then Column's ranks over the
//! cells UL, UR, DL, DR. Prisoner's Dilemma is `1324/4321`.

pub mod atlas;
pub mod chart;
pub mod classify;
pub mod model;
pub mod naming;
pub mod topology;

pub use atlas::{
    enumerate_games, enumerate_patterns, orbit_count_oracle, symmetric_catalog, Atlas, Equivalence,
    SymmetricCatalog,
};
pub use classify::{
    census, classify, mixed_equilibrium, sample_random_games, special_sets, Classification, Family,
    FamilyCensus, Subfamily,
};
pub use model::{
    canonical, canonicalize, is_symmetric, normalize_payoffs, CanonicalKey, Cell, CellSet, Game,
    ModelError, Pattern, Player, TieClass, Transform,
};
pub use naming::{common_names, coordinate_name, parse_name, resolve, CoordinateName};
pub use topology::{
    apply_swap, break_tie, escape_map, layer_of, make_tie, neighbors, shortest_path, tile_of,
    CostModel, Goal, Layer, Level, MoveKind, MoveSet, Path, SwapMove,
};
