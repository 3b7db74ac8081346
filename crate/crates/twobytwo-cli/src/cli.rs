//! Subcommands. Text output is line-oriented; `--format records` prints one
//! JSON record per line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use twobytwo::chart::{layout_complete, layout_strict, render, Format, Which};
use twobytwo::naming::CommonNameEntry;
use twobytwo::{
    apply_swap, census, classify, common_names, coordinate_name, layer_of, shortest_path, Atlas,
    CostModel, Equivalence, Game, Goal, MoveSet, SwapMove, TieClass,
};

use crate::record::{self, GameRef, PathRecord};

#[derive(Parser, Debug)]
#[command(
    name = "twobytwo",
    version,
    about = "Atlas, classification and swap topology of the 2x2 ordinal games"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Output {
    #[default]
    Text,
    Records,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct OutputArg {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Output::Text)]
    pub format: Output,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Family census of the strict or complete set.
    Census {
        #[arg(long, default_value = "strict")]
        set: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Equilibria, dominance, family and names of one game.
    Classify {
        game: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Games one move away.
    Neighbors {
        game: String,
        /// Comma list of adjacent, nonadjacent, ties, or all.
        #[arg(long, default_value = "adjacent")]
        moves: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Apply one move such as `row:high34` or `column:tie-low`.
    Swap {
        game: String,
        #[arg(value_name = "MOVE")]
        mv: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Cheapest move sequence to a goal.
    Path {
        game: String,
        /// `family:NAME`, `subfamily:NAME`, `game:GAME` or `layer:N`.
        #[arg(long)]
        goal: String,
        #[arg(long, default_value = "adjacent")]
        moves: String,
        /// uniform or graded.
        #[arg(long, default_value = "uniform")]
        costs: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// List games, optionally restricted to one tie-class pair.
    Enumerate {
        /// `all`, `strict`, or `ROW/COLUMN` tie classes such as `low/strict`.
        #[arg(long, default_value = "all")]
        class: String,
        /// oriented, interchange or reflection.
        #[arg(long, default_value = "interchange")]
        equiv: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Coordinate and common names.
    Name {
        game: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Render the strict or complete chart.
    Chart {
        #[arg(long, default_value = "strict")]
        which: String,
        /// svg or dot.
        #[arg(long, default_value = "svg")]
        format: String,
        #[arg(short = 'o', long = "output")]
        output: Option<std::path::PathBuf>,
    },
    /// Start the read-only JSON service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

#[derive(Debug)]
pub enum Failure {
    /// Bad game, name, move or option value: exit 2.
    Input(String),
    /// A self-check failed: exit 3.
    Invariant(String),
    /// Output could not be written: exit 1.
    Io(std::io::Error),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Invariant(_) => 3,
            Failure::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(m) => write!(f, "error: {m}"),
            Failure::Invariant(m) => write!(f, "internal error: {m}"),
            Failure::Io(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Res = Result<(), Failure>;

fn input(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

pub fn main() -> i32 {
    let mut stdout = std::io::stdout().lock();
    let code = run(std::env::args_os(), &mut stdout);
    let _ = stdout.flush();
    code
}

/// Parses `argv` and runs it, writing results to `out` and diagnostics to
/// standard error. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("{f}");
            f.code()
        }
    }
}

fn atlas() -> Result<Atlas, Failure> {
    let a = Atlas::build(Equivalence::Interchange);
    record::self_check(&a).map_err(Failure::Invariant)?;
    Ok(a)
}

fn find(atlas: &Atlas, key: &str) -> Result<Game, Failure> {
    record::lookup(atlas, key)
        .ok_or_else(|| Failure::Input(format!("unknown game or name {key:?}")))
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Res {
    let line = serde_json::to_string(value).map_err(|e| Failure::Invariant(e.to_string()))?;
    writeln!(out, "{line}")?;
    Ok(())
}

/// `enc name [first common name]`
fn label(game: &Game) -> String {
    let mut s = format!("{game} {}", coordinate_name(game));
    if let Some(n) = common_names(game).first().and_then(|e| e.names.first()) {
        s.push_str(&format!(" [{n}]"));
    }
    s
}

/// Thousandths as a plain decimal.
fn units(cost: u64) -> String {
    let whole = cost / CostModel::UNIT;
    let frac = cost % CostModel::UNIT;
    if frac == 0 {
        whole.to_string()
    } else {
        format!("{whole}.{:03}", frac)
            .trim_end_matches('0')
            .to_string()
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Res {
    match command {
        Command::Census { set, out: o } => {
            let a = atlas()?;
            let table = match set.as_str() {
                "strict" => census(a.strict_games().iter()),
                "complete" | "all" => census(a.games().iter()),
                other => return Err(Failure::Input(format!("unknown set {other:?}"))),
            };
            match o.format {
                Output::Text => write!(out, "{}", table.render())?,
                Output::Records => {
                    for row in table.rows() {
                        json_line(out, row)?;
                    }
                }
            }
        }
        Command::Classify { game, out: o } => {
            let a = atlas()?;
            let g = find(&a, &game)?;
            match o.format {
                Output::Text => write_classification(out, &g)?,
                Output::Records => {
                    json_line(out, &record::game_record(&a, &g).expect("atlas game"))?
                }
            }
        }
        Command::Neighbors {
            game,
            moves,
            out: o,
        } => {
            let a = atlas()?;
            let g = find(&a, &game)?;
            let set: MoveSet = moves.parse().map_err(input)?;
            match o.format {
                Output::Text => {
                    for (mv, h) in twobytwo::neighbors(&g, set) {
                        writeln!(out, "{mv} -> {}", label(&h))?;
                    }
                }
                Output::Records => {
                    for r in record::neighbor_records(&a, &g, set) {
                        json_line(out, &r)?;
                    }
                }
            }
        }
        Command::Swap { game, mv, out: o } => {
            let a = atlas()?;
            let g = find(&a, &game)?;
            let m: SwapMove = mv.parse().map_err(input)?;
            let h = apply_swap(&g, m).map_err(input)?;
            match o.format {
                Output::Text => writeln!(out, "{}", label(&h))?,
                Output::Records => {
                    json_line(out, &record::game_record(&a, &h).expect("atlas game"))?
                }
            }
        }
        Command::Path {
            game,
            goal,
            moves,
            costs,
            out: o,
        } => {
            let a = atlas()?;
            let g = find(&a, &game)?;
            let goal: Goal = goal.parse().map_err(input)?;
            let set: MoveSet = moves.parse().map_err(input)?;
            let costs: CostModel = costs.parse().map_err(input)?;
            let p = shortest_path(&g, &goal, set, costs).map_err(input)?;
            if p.replay() != Ok(p.end()) {
                return Err(Failure::Invariant(format!("path from {g} does not replay")));
            }
            match o.format {
                Output::Text => {
                    write!(out, "{}", p.to_text())?;
                    writeln!(out, "steps {} cost {}", p.len(), units(p.cost))?;
                }
                Output::Records => json_line(out, &PathRecord::new(&a, &p, &goal, set, costs))?,
            }
        }
        Command::Enumerate {
            class,
            equiv,
            out: o,
        } => {
            let eq: Equivalence = equiv.parse().map_err(input)?;
            let filter = parse_class(&class)?;
            let a = Atlas::build(eq);
            if eq == Equivalence::Interchange {
                record::self_check(&a).map_err(Failure::Invariant)?;
            }
            for (id, g) in a.games().iter().enumerate() {
                let classes = g.tie_classes();
                if filter.is_some_and(|f| f != classes) {
                    continue;
                }
                match o.format {
                    Output::Text => writeln!(
                        out,
                        "{id}\t{g}\t{}/{}\t{}",
                        classes.0,
                        classes.1,
                        coordinate_name(g)
                    )?,
                    Output::Records => {
                        #[derive(Serialize)]
                        struct Row {
                            id: usize,
                            encoding: String,
                            tie_classes: [String; 2],
                            coordinate_name: String,
                        }
                        json_line(
                            out,
                            &Row {
                                id,
                                encoding: g.to_string(),
                                tie_classes: [classes.0.to_string(), classes.1.to_string()],
                                coordinate_name: coordinate_name(g).to_string(),
                            },
                        )?
                    }
                }
            }
        }
        Command::Name { game, out: o } => {
            let a = atlas()?;
            let g = find(&a, &game)?;
            let entries: Vec<CommonNameEntry> = common_names(&g);
            match o.format {
                Output::Text => {
                    writeln!(out, "{}\t{g}", coordinate_name(&g))?;
                    for e in &entries {
                        let mut line = e.names.join("; ");
                        if !e.sources.is_empty() {
                            line.push_str(&format!(" ({})", e.sources.join("; ")));
                        }
                        writeln!(out, "{line}")?;
                    }
                }
                Output::Records => {
                    #[derive(Serialize)]
                    struct NameRecord {
                        #[serde(flatten)]
                        game: GameRef,
                        entries: Vec<CommonNameEntry>,
                    }
                    json_line(
                        out,
                        &NameRecord {
                            game: GameRef::new(&a, &g),
                            entries,
                        },
                    )?
                }
            }
        }
        Command::Chart {
            which,
            format,
            output,
        } => {
            let which: Which = which.parse().map_err(input)?;
            let format: Format = format.parse().map_err(input)?;
            let a = atlas()?;
            let layout = match which {
                Which::Strict => layout_strict(&a),
                Which::Complete => layout_complete(&a),
            };
            let text = render(&layout, format);
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Serve { port } => {
            let service = crate::service::Service::build().map_err(Failure::Invariant)?;
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(crate::service::serve(service, port))?;
        }
    }
    Ok(())
}

fn parse_class(text: &str) -> Result<Option<(TieClass, TieClass)>, Failure> {
    match text {
        "all" | "complete" => Ok(None),
        "strict" => Ok(Some((TieClass::Strict, TieClass::Strict))),
        other => {
            let (r, c) = other
                .split_once('/')
                .ok_or_else(|| Failure::Input(format!("unknown class {other:?}")))?;
            Ok(Some((r.parse().map_err(input)?, c.parse().map_err(input)?)))
        }
    }
}

fn write_classification(out: &mut dyn Write, g: &Game) -> Res {
    let c = classify(g);
    writeln!(out, "game        {g}")?;
    writeln!(out, "name        {}", coordinate_name(g))?;
    for e in common_names(g) {
        writeln!(out, "common      {}", e.names.join("; "))?;
    }
    writeln!(out, "family      {}", c.family)?;
    writeln!(out, "subfamily   {}", c.subfamily)?;
    let ne: Vec<String> = c
        .nash_weak
        .iter()
        .map(|cell| {
            let (r, k) = g.payoff(cell);
            let tag = if c.nash_strict.contains(cell) {
                ""
            } else {
                " weak"
            };
            format!("{cell} ({r},{k}){tag}")
        })
        .collect();
    writeln!(
        out,
        "nash        {}",
        if ne.is_empty() {
            "none".to_string()
        } else {
            ne.join(", ")
        }
    )?;
    writeln!(
        out,
        "dominant    row {}, column {}",
        c.dominance.row, c.dominance.column
    )?;
    writeln!(
        out,
        "maximin     row {}, column {}",
        c.maximin.row, c.maximin.column
    )?;
    writeln!(out, "pareto      {}", c.pareto_optimal)?;
    writeln!(
        out,
        "inducement  row {}, column {}",
        c.inducement_sign.row, c.inducement_sign.column
    )?;
    if c.fixed_rank_sum {
        writeln!(out, "fixed sum   yes")?;
    }
    if let Some(m) = &c.mixed {
        writeln!(out, "mixed       {m}")?;
    }
    let (rc, cc) = g.tie_classes();
    writeln!(out, "classes     {rc}/{cc}")?;
    if let Ok(l) = layer_of(g) {
        writeln!(out, "layer       {l}")?;
    }
    Ok(())
}
