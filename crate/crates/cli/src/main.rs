mod commands;
mod input;
mod play;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use input::GraphInput;

#[derive(Parser, Debug)]
#[command(
    name = "burngame",
    version,
    about = "Exact solver and verification suite for the graph burning game"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    /// Game value, Burner starts
    Bg,
    /// Game value, Staller starts
    BgPrime,
    /// Burning number
    B,
    /// Cooling number (Staller-only game)
    Cl,
    /// Burner-only game value
    BurnerOnly,
    /// Game value relative to the already-burned set --burned
    Relative,
    /// Distance-k domination number (needs --k)
    Gamma,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Burner,
    Staller,
}

impl From<Side> for burngame::Player {
    fn from(s: Side) -> Self {
        match s {
            Side::Burner => burngame::Player::Burner,
            Side::Staller => burngame::Player::Staller,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Human {
    Burner,
    Staller,
    /// Engine against engine
    None,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one quantity of a graph
    Compute {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value = "bg")]
        quantity: Quantity,
        /// Burned vertices for `relative`, e.g. `0,3`
        #[arg(long, default_value = "")]
        burned: String,
        /// Who selects first for `relative`
        #[arg(long, value_enum, default_value = "burner")]
        starter: Side,
        /// Distance for `gamma`
        #[arg(long)]
        k: Option<usize>,
        /// Also print an optimal line of play (or a burning sequence for `b`)
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate graphs on n vertices as graph6 lines
    Corpus {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        /// Keep graphs whose complement is connected too
        #[arg(long)]
        both_connected: bool,
        /// One graph per isomorphism class
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification checks and write a report
    Verify(commands::VerifyArgs),
    /// Compare exact values with closed-form windows over a family
    Sweep {
        /// One of path-bg, path-bg', cycle-bg, cycle-bg', hypercube-bg, hypercube-bg'
        #[arg(long)]
        family: String,
        /// Parameter range, e.g. `1..22`
        #[arg(long, value_parser = input::parse_range)]
        n: std::ops::RangeInclusive<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Play the game in the terminal against the engine
    Play {
        #[command(flatten)]
        graph: GraphInput,
        /// The side you play
        #[arg(long, value_enum, default_value = "staller")]
        human: Human,
        #[arg(long, value_enum, default_value = "burner")]
        starter: Side,
        /// Use the heuristic engine even on small graphs
        #[arg(long)]
        heuristic: bool,
        /// Save the session to this file
        #[arg(long)]
        record: Option<PathBuf>,
        /// Replay a saved session and check the transcript matches
        #[arg(long, conflicts_with_all = ["record", "family", "graph6", "edge_list"])]
        replay: Option<PathBuf>,
    },
    /// Report how much worse the best spanning tree is than the graph itself
    ExploreTreeGap {
        /// Orders of the connected isomorphism classes to examine
        #[arg(long, value_parser = input::parse_range, default_value = "2..6")]
        n: std::ops::RangeInclusive<usize>,
        #[arg(long, value_enum, default_value = "burner")]
        starter: Side,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute {
            graph,
            quantity,
            burned,
            starter,
            k,
            trace,
            format,
        } => commands::compute(&graph, quantity, &burned, starter.into(), k, trace, format),
        Command::Corpus {
            n,
            connected,
            both_connected,
            dedup,
            out,
        } => commands::corpus(n, connected, both_connected, dedup, out.as_deref()),
        Command::Verify(args) => commands::verify(args),
        Command::Sweep { family, n, format } => commands::sweep(&family, n, format),
        Command::Play {
            graph,
            human,
            starter,
            heuristic,
            record,
            replay,
        } => commands::play(
            &graph,
            human,
            starter.into(),
            heuristic,
            record.as_deref(),
            replay.as_deref(),
        ),
        Command::ExploreTreeGap { n, starter, format } => commands::explore_tree_gap(n, starter.into(), format),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
