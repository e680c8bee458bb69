//! Interactive play against the engine, with recordable and replayable sessions.

use std::io::{BufRead, Write};

use anyhow::{bail, Context, Result};
use burngame::engine::{spread, GameSolver, Player};
use burngame::graph6::{emit_graph6, parse_graph6};
use burngame::{Distance, DistanceMatrix, Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Largest graph the exact engine plays on.
pub const EXACT_PLAY_LIMIT: usize = 20;

/// The engine's move chooser.
pub enum Engine {
    Exact(GameSolver),
    Heuristic(DistanceMatrix),
}

impl Engine {
    pub fn for_graph(g: &Graph, force_heuristic: bool) -> Engine {
        if force_heuristic || g.order() > EXACT_PLAY_LIMIT {
            Engine::Heuristic(g.distances())
        } else {
            Engine::Exact(GameSolver::new(g))
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Engine::Exact(_))
    }

    /// Move for `p` on the post-spread burned set `s`.
    pub fn choose(&mut self, g: &Graph, s: VertexSet, p: Player) -> usize {
        match self {
            Engine::Exact(solver) => solver.optimal_selections(s, p).1[0],
            Engine::Heuristic(d) => heuristic_move(g, d, s, p),
        }
    }
}

fn dist(d: &DistanceMatrix, u: usize, v: usize, n: usize) -> usize {
    match d.get(u, v) {
        Distance::Finite(x) => x,
        Distance::Unreachable => n + 1,
    }
}

/// Largest distance from the burned set to an unburned vertex.
fn reach(g: &Graph, d: &DistanceMatrix, burned: VertexSet) -> usize {
    let n = g.order();
    (g.vertices() - burned)
        .iter()
        .map(|u| burned.iter().map(|b| dist(d, b, u, n)).min().unwrap_or(n + 1))
        .max()
        .unwrap_or(0)
}

/// Burner: greedy cover move, shrinking the farthest distance to fire, then
/// maximizing newly threatened vertices. Staller: keep the farthest
/// unburned vertex as far as possible, then threaten as few new vertices as
/// possible. Ties go to the lowest vertex.
fn heuristic_move(g: &Graph, d: &DistanceMatrix, s: VertexSet, p: Player) -> usize {
    let free = g.vertices() - s;
    let score = |v: usize| {
        let after = s.with(v);
        let newly = (g.closed_neighbors_of_set(VertexSet::singleton(v)) - s).len();
        (reach(g, d, after), newly)
    };
    let pick = match p {
        Player::Burner => free.iter().min_by_key(|&v| {
            let (r, newly) = score(v);
            (r, usize::MAX - newly)
        }),
        Player::Staller => free.iter().min_by_key(|&v| {
            let (r, newly) = score(v);
            (usize::MAX - r, newly)
        }),
    };
    pick.unwrap_or_else(|| unreachable!("called with an unburned vertex"))
}

/// Where the human's moves come from.
pub trait MoveSource {
    /// The next input line, or `None` at end of input.
    fn next_line(&mut self) -> Option<String>;
    /// Whether prompts make sense (interactive input).
    fn interactive(&self) -> bool;
}

pub struct Lines<R: BufRead>(pub R);

impl<R: BufRead> MoveSource for Lines<R> {
    fn next_line(&mut self) -> Option<String> {
        let mut line = String::new();
        match self.0.read_line(&mut line) {
            Ok(0) | Err(_) => None,
            Ok(_) => Some(line),
        }
    }

    fn interactive(&self) -> bool {
        true
    }
}

/// Recorded moves played back in order.
pub struct Recorded(pub std::vec::IntoIter<String>);

impl MoveSource for Recorded {
    fn next_line(&mut self) -> Option<String> {
        self.0.next()
    }

    fn interactive(&self) -> bool {
        false
    }
}

/// A saved session: the setup, every line the human entered, and the transcript.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionRecord {
    pub graph6: String,
    pub human: Option<String>,
    pub starter: String,
    pub heuristic: bool,
    pub inputs: Vec<String>,
    pub transcript: Vec<String>,
}

pub struct Session {
    pub rounds: usize,
    pub aborted: bool,
    pub record: SessionRecord,
}

pub struct PlaySetup {
    pub graph: Graph,
    pub human: Option<Player>,
    pub starter: Player,
    pub force_heuristic: bool,
}

/// Plays one game. Transcript lines go to `out`; prompts and rejections of
/// illegal input go to `prompt`.
pub fn play(
    setup: &PlaySetup,
    moves: &mut dyn MoveSource,
    out: &mut dyn Write,
    prompt: &mut dyn Write,
) -> Result<Session> {
    let g = &setup.graph;
    let all = g.vertices();
    let mut engine = Engine::for_graph(g, setup.force_heuristic);
    let mut record = SessionRecord {
        graph6: emit_graph6(g),
        human: setup.human.map(|p| p.name().to_string()),
        starter: setup.starter.name().to_string(),
        heuristic: !engine.is_exact(),
        inputs: vec![],
        transcript: vec![],
    };
    let mut emit = |record: &mut SessionRecord, line: String| -> Result<()> {
        writeln!(out, "{line}")?;
        record.transcript.push(line);
        Ok(())
    };
    if !engine.is_exact() {
        writeln!(
            prompt,
            "warning: heuristic engine (n = {} > {EXACT_PLAY_LIMIT} or forced); its moves are not optimal",
            g.order()
        )?;
        emit(&mut record, "engine: heuristic (not optimal)".to_string())?;
    } else {
        emit(&mut record, "engine: exact".to_string())?;
    }

    let mut burned = VertexSet::EMPTY;
    let mut player = setup.starter;
    let mut round = 0;
    let mut aborted = false;
    while burned != all {
        round += 1;
        let s = spread(g, burned);
        let delta = s - burned;
        if !delta.is_empty() {
            emit(&mut record, format!("round {round}: spread {delta}"))?;
        }
        burned = s;
        if burned == all {
            break;
        }
        let free = all - burned;
        let (v, how) = if free.len() == 1 {
            (free.first().unwrap_or_else(|| unreachable!()), " (forced)")
        } else if Some(player) == setup.human {
            let tag = if engine.is_exact() { "" } else { " [heuristic engine]" };
            match read_move(g, burned, player, round, tag, moves, prompt, &mut record.inputs)? {
                Some(v) => (v, ""),
                None => {
                    aborted = true;
                    emit(&mut record, format!("aborted in round {round}: end of input"))?;
                    break;
                }
            }
        } else {
            (engine.choose(g, burned, player), "")
        };
        emit(&mut record, format!("round {round}: {player} selects {v}{how}"))?;
        burned.insert(v);
        player = player.other();
    }
    if !aborted {
        emit(&mut record, format!("game over after {round} rounds"))?;
        if let Engine::Exact(solver) = &mut engine {
            let best = solver.value(VertexSet::EMPTY, setup.starter);
            emit(&mut record, format!("optimal value with best play: {best}"))?;
        }
    }
    Ok(Session {
        rounds: round,
        aborted,
        record,
    })
}

#[allow(clippy::too_many_arguments)]
fn read_move(
    g: &Graph,
    burned: VertexSet,
    player: Player,
    round: usize,
    tag: &str,
    moves: &mut dyn MoveSource,
    prompt: &mut dyn Write,
    inputs: &mut Vec<String>,
) -> Result<Option<usize>> {
    loop {
        if moves.interactive() {
            write!(
                prompt,
                "round {round}{tag}: {player}, select an unburned vertex {}: ",
                g.vertices() - burned
            )?;
            prompt.flush()?;
        }
        let Some(line) = moves.next_line() else {
            return Ok(None);
        };
        let line = line.trim().to_string();
        inputs.push(line.clone());
        match line.parse::<usize>() {
            Ok(v) if v < g.order() && !burned.contains(v) => return Ok(Some(v)),
            Ok(v) if v < g.order() => writeln!(prompt, "vertex {v} is already burned; try again")?,
            _ => writeln!(
                prompt,
                "{line:?} is not a vertex of this graph (0..{}); try again",
                g.order()
            )?,
        }
    }
}

pub fn load_record(path: &std::path::Path) -> Result<(PlaySetup, SessionRecord)> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let record: SessionRecord = serde_json::from_str(&text).context("parsing session record")?;
    let graph = parse_graph6(&record.graph6)?;
    let human = record
        .human
        .as_deref()
        .map(str::parse::<Player>)
        .transpose()
        .map_err(anyhow::Error::msg)?;
    let starter = record.starter.parse::<Player>().map_err(anyhow::Error::msg)?;
    let setup = PlaySetup {
        graph,
        human,
        starter,
        force_heuristic: record.heuristic,
    };
    Ok((setup, record))
}

/// Replays a record; fails if the regenerated transcript differs.
pub fn replay(path: &std::path::Path, out: &mut dyn Write) -> Result<Session> {
    let (setup, record) = load_record(path)?;
    let mut moves = Recorded(record.inputs.clone().into_iter());
    let session = play(&setup, &mut moves, out, &mut std::io::sink())?;
    if session.record.transcript != record.transcript {
        bail!("replayed transcript differs from the recorded one");
    }
    Ok(session)
}
