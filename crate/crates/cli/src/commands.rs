//! Command implementations: thin adapters over the library crates.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use burngame::classical::{burning_number, gamma_k};
use burngame::corpus::{enumerate, load_corpus, stream_to_file, CorpusSpec};
use burngame::engine::{GameSolver, PlayTrace, Player, SoloSolver};
use burngame::graph6::emit_graph6;
use burngame::VertexSet;
use burngame_verify::explore::tree_gap;
use burngame_verify::families::family_sweep;
use burngame_verify::{run_suite, select, GraphSource, Report, SuiteOptions};
use clap::Args;
use serde::Deserialize;
use serde_json::json;

use crate::input::{parse_range, parse_vertices, GraphInput};
use crate::play::{play as play_session, replay, Lines, PlaySetup};
use crate::{Format, Human, Quantity};

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn compute(
    graph: &GraphInput,
    quantity: Quantity,
    burned: &str,
    starter: Player,
    k: Option<usize>,
    trace: bool,
    format: Format,
) -> Result<ExitCode> {
    let g = graph.load()?;
    let b0 = VertexSet::from_vertices(parse_vertices(burned).map_err(anyhow::Error::msg)?);
    if let Some(v) = b0.iter().find(|&v| v >= g.order()) {
        bail!(
            "burned vertex {v} is out of range for a graph on {} vertices",
            g.order()
        );
    }
    let e = VertexSet::EMPTY;
    let game = |b0: VertexSet, p: Player| -> (usize, Option<PlayTrace>) {
        let mut solver = GameSolver::new(&g);
        if trace {
            let (v, t) = solver.principal_variation(b0, p);
            (v, Some(t))
        } else {
            (solver.value(b0, p), None)
        }
    };
    let solo = |p: Player| -> (usize, Option<PlayTrace>) {
        let mut solver = SoloSolver::new(&g, p);
        if trace {
            let (v, t) = solver.trace(e);
            (v, Some(t))
        } else {
            (solver.value(e), None)
        }
    };
    let mut sequence = None;
    let (value, play_trace) = match quantity {
        Quantity::Bg => game(e, Player::Burner),
        Quantity::BgPrime => game(e, Player::Staller),
        Quantity::Relative => game(b0, starter),
        Quantity::Cl => solo(Player::Staller),
        Quantity::BurnerOnly => solo(Player::Burner),
        Quantity::B => {
            let (v, seq) = burning_number(&g);
            if trace {
                sequence = Some(seq.0);
            }
            (v, None)
        }
        Quantity::Gamma => {
            let k = k.context("gamma needs --k")?;
            if k == 0 {
                bail!("--k must be at least 1");
            }
            (gamma_k(&g, k), None)
        }
    };
    let mut out = output(None)?;
    match format {
        Format::Json => {
            let mut v = json!({
                "graph6": emit_graph6(&g),
                "quantity": format!("{quantity:?}").to_lowercase(),
                "value": value,
            });
            if let Some(t) = &play_trace {
                v["trace"] = serde_json::to_value(burngame_verify::TraceRecord::new(&g, value, t))?;
            }
            if let Some(s) = &sequence {
                v["sequence"] = json!(s);
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        }
        Format::Text | Format::Csv => {
            writeln!(out, "{value}")?;
            if let Some(t) = &play_trace {
                write!(out, "{t}")?;
            }
            if let Some(s) = &sequence {
                let s: Vec<String> = s.iter().map(usize::to_string).collect();
                writeln!(out, "burning sequence: {}", s.join(" "))?;
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

pub fn corpus(n: usize, connected: bool, both_connected: bool, dedup: bool, out: Option<&Path>) -> Result<ExitCode> {
    let spec = CorpusSpec {
        n,
        connected_only: connected,
        both_connected,
        dedup,
    };
    spec.validate()?;
    let count = match out {
        Some(path) => stream_to_file(&spec, path)?,
        None => {
            let mut w = output(None)?;
            let mut count = 0;
            for g in enumerate(&spec)? {
                writeln!(w, "{}", emit_graph6(&g))?;
                count += 1;
            }
            w.flush()?;
            count
        }
    };
    eprintln!("{count} graphs ({})", spec.describe());
    Ok(ExitCode::SUCCESS)
}

#[derive(Args, Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields, rename_all = "kebab-case")]
pub struct VerifyArgs {
    /// `all`, `graph`, `families`, `products`, `examples`, or comma-separated check ids
    #[arg(long)]
    pub suite: Option<String>,
    /// Run per-graph checks on n = 1..=max-n
    #[arg(long, conflicts_with = "n")]
    pub max_n: Option<usize>,
    /// Orders to run per-graph checks on, e.g. `6..8`
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub both_connected: bool,
    /// One graph per isomorphism class (the default)
    #[arg(long, conflicts_with = "labeled")]
    pub dedup: bool,
    /// Every labeled graph instead of isomorphism classes
    #[arg(long)]
    pub labeled: bool,
    /// Run per-graph checks on the graphs of a graph6 file instead
    #[arg(long)]
    pub graph6_file: Option<PathBuf>,
    /// Worker threads (default: BURNGAME_JOBS, else all cores)
    #[arg(long, env = "BURNGAME_JOBS")]
    pub jobs: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Report file (default: stdout)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also run long-running parts (the edge-removal example's second half)
    #[arg(long)]
    pub include_long_running: bool,
    /// JSON file with any of these options (kebab-case keys); flags given on
    /// the command line take precedence
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

impl VerifyArgs {
    fn merged(self) -> Result<VerifyArgs> {
        let Some(path) = &self.config else {
            return Ok(self);
        };
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let file: VerifyArgs = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        let (n, max_n) = if self.n.is_some() || self.max_n.is_some() {
            (self.n, self.max_n)
        } else {
            (file.n, file.max_n)
        };
        Ok(VerifyArgs {
            suite: self.suite.or(file.suite),
            max_n,
            n,
            connected: self.connected || file.connected,
            both_connected: self.both_connected || file.both_connected,
            dedup: self.dedup || file.dedup,
            labeled: self.labeled || file.labeled,
            graph6_file: self.graph6_file.or(file.graph6_file),
            jobs: self.jobs.or(file.jobs),
            format: self.format.or(file.format),
            out: self.out.or(file.out),
            include_long_running: self.include_long_running || file.include_long_running,
            config: None,
        })
    }

    fn orders(&self) -> Result<RangeInclusive<usize>> {
        match (&self.n, self.max_n) {
            (Some(r), _) => parse_range(r).map_err(anyhow::Error::msg),
            (None, Some(m)) => Ok(1..=m),
            (None, None) => Ok(1..=6),
        }
    }

    fn source(&self) -> Result<GraphSource> {
        if let Some(path) = &self.graph6_file {
            return Ok(GraphSource::Explicit {
                label: path.display().to_string(),
                graphs: load_corpus(path)?,
            });
        }
        if self.dedup && self.labeled {
            bail!("--dedup and --labeled exclude each other");
        }
        let specs: Vec<CorpusSpec> = self
            .orders()?
            .map(|n| CorpusSpec {
                n,
                connected_only: self.connected,
                both_connected: self.both_connected,
                dedup: !self.labeled,
            })
            .collect();
        for spec in &specs {
            spec.validate()?;
        }
        Ok(GraphSource::Corpus(specs))
    }
}

fn write_report(report: &Report, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", report.to_json())?,
        Format::Csv => report.write_csv(&mut *out)?,
        Format::Text => {
            let mut per_check: std::collections::BTreeMap<&str, [usize; 4]> = Default::default();
            for r in &report.results {
                let row = per_check.entry(&r.check_id).or_default();
                match (r.status, r.exploratory) {
                    (burngame_verify::Status::Pass, _) => row[0] += 1,
                    (burngame_verify::Status::Fail, false) => row[1] += 1,
                    (burngame_verify::Status::Skip, _) => row[2] += 1,
                    (burngame_verify::Status::Fail, true) => row[3] += 1,
                }
            }
            for (id, [pass, fail, skip, flags]) in per_check {
                let verdict = if fail > 0 { "FAIL" } else { "ok" };
                write!(out, "{verdict:4} {id:24} pass {pass:6}  fail {fail:4}  skip {skip:6}")?;
                if flags > 0 {
                    write!(out, "  exploratory differences {flags}")?;
                }
                writeln!(out)?;
            }
            for f in report.failures() {
                writeln!(
                    out,
                    "failure: {} on {} ({}): {} [{:?} vs {:?}] params {}",
                    f.check_id,
                    f.graph6,
                    f.subject,
                    f.statement,
                    f.lhs,
                    f.rhs,
                    serde_json::to_string(&f.params)?
                )?;
            }
            for note in &report.notes {
                writeln!(out, "note: {note}")?;
            }
            let s = &report.summary;
            writeln!(
                out,
                "summary: {} pass, {} fail, {} skip, {} exploratory differences",
                s.pass, s.fail, s.skip, s.exploratory_flags
            )?;
        }
    }
    Ok(())
}

pub fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let args = args.merged()?;
    let suite = args.suite.clone().unwrap_or_else(|| "all".to_string());
    let checks = select(&suite)?;
    let source = args.source()?;
    if args.include_long_running {
        eprintln!("warning: --include-long-running enables the long-running parts of the example checks");
    }
    let options = SuiteOptions {
        jobs: args.jobs.unwrap_or(0),
        include_long_running: args.include_long_running,
    };
    let report = run_suite(&suite, &checks, &source, options)?;
    let mut out = output(args.out.as_deref())?;
    write_report(&report, args.format.unwrap_or(Format::Json), &mut out)?;
    out.flush()?;
    let s = &report.summary;
    eprintln!("{} pass, {} fail, {} skip", s.pass, s.fail, s.skip);
    Ok(if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn sweep(name: &str, n: RangeInclusive<usize>, format: Format) -> Result<ExitCode> {
    let table = family_sweep(name, n)?;
    let mut out = output(None)?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&table)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            for row in &table.rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(
                out,
                "{:14} {:>3} {:>5} {:>5} {:>8}",
                "family", "n", "lower", "upper", "computed"
            )?;
            for r in &table.rows {
                let c = r.computed.map_or("-".to_string(), |c| c.to_string());
                let flag = if r.within() == Some(false) { "  OUTSIDE" } else { "" };
                writeln!(
                    out,
                    "{:14} {:>3} {:>5} {:>5} {:>8}{flag}",
                    r.name, r.n, r.lower, r.upper, c
                )?;
            }
        }
    }
    out.flush()?;
    let ok = table.rows.iter().all(|r| r.within() != Some(false));
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

pub fn play(
    graph: &GraphInput,
    human: Human,
    starter: Player,
    heuristic: bool,
    record: Option<&Path>,
    replay_from: Option<&Path>,
) -> Result<ExitCode> {
    let stdout = io::stdout();
    if let Some(path) = replay_from {
        let session = replay(path, &mut stdout.lock())?;
        return Ok(if session.aborted {
            ExitCode::from(1)
        } else {
            ExitCode::SUCCESS
        });
    }
    let setup = PlaySetup {
        graph: graph.load()?,
        human: match human {
            Human::Burner => Some(Player::Burner),
            Human::Staller => Some(Player::Staller),
            Human::None => None,
        },
        starter,
        force_heuristic: heuristic,
    };
    let stdin = io::stdin();
    let session = play_session(&setup, &mut Lines(stdin.lock()), &mut stdout.lock(), &mut io::stderr())?;
    if let Some(path) = record {
        std::fs::write(path, serde_json::to_string_pretty(&session.record)?)
            .with_context(|| format!("writing {}", path.display()))?;
        eprintln!("recorded a {}-round session to {}", session.rounds, path.display());
    }
    Ok(if session.aborted {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

pub fn explore_tree_gap(n: RangeInclusive<usize>, starter: Player, format: Format) -> Result<ExitCode> {
    let mut graphs = vec![];
    for order in n {
        graphs.extend(enumerate(&CorpusSpec::connected_classes(order))?);
    }
    let report = tree_gap(&graphs, starter);
    let mut out = output(None)?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        Format::Text | Format::Csv => {
            writeln!(out, "starter: {}", report.starter)?;
            writeln!(
                out,
                "examined {} graphs, skipped {} (too many spanning trees)",
                report.examined, report.skipped
            )?;
            for (gap, count) in &report.distribution {
                writeln!(out, "gap {gap}: {count}")?;
            }
            let positive = report.extremal.iter().filter(|r| r.gap > 0);
            for r in positive.take(10) {
                writeln!(
                    out,
                    "largest gap {}: {} value {} best tree {}",
                    r.gap, r.graph6, r.value, r.best_tree_value
                )?;
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}
