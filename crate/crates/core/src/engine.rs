//! The burning game: state transitions and exact solvers.
//!
//! A round is a spreading phase (every neighbor of a burned vertex burns)
//! followed by a selection phase (the player to move burns one unburned
//! vertex). The game ends in the first round after which every vertex burns,
//! possibly right after the spreading phase. A start set `b0` counts as
//! burned at the end of round 0.

use std::fmt;

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Burner,
    Staller,
}

impl Player {
    #[inline]
    pub fn other(self) -> Player {
        match self {
            Player::Burner => Player::Staller,
            Player::Staller => Player::Burner,
        }
    }

    #[inline]
    fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Player::Burner => "burner",
            Player::Staller => "staller",
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Player {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "burner" | "b" => Ok(Player::Burner),
            "staller" | "s" => Ok(Player::Staller),
            _ => Err(format!("unknown player `{s}`")),
        }
    }
}

/// The spreading phase: `b ∪ N(b)`.
#[inline]
pub fn spread(g: &Graph, b: VertexSet) -> VertexSet {
    g.closed_neighbors_of_set(b)
}

/// Who makes each selection in a game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schedule {
    /// The two players alternate, `starter` first.
    Alternating(Player),
    /// One player makes every selection.
    Solo(Player),
}

impl Schedule {
    /// Actor of the `k`-th selection (0-based).
    pub fn actor(self, k: usize) -> Player {
        match self {
            Schedule::Alternating(p) if k.is_multiple_of(2) => p,
            Schedule::Alternating(p) => p.other(),
            Schedule::Solo(p) => p,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Selection {
    pub player: Player,
    pub vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    /// Vertices that caught fire during the spreading phase.
    pub spread: VertexSet,
    /// `None` only in a final round that ended after spreading.
    pub selection: Option<Selection>,
}

/// A complete play of the game from a start set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlayTrace {
    pub initial: VertexSet,
    pub schedule: Schedule,
    pub rounds: Vec<Round>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("round {round}: recorded spread {recorded} differs from {actual}")]
    SpreadMismatch {
        round: usize,
        recorded: VertexSet,
        actual: VertexSet,
    },
    #[error("round {round}: selection missing although unburned vertices remain")]
    MissingSelection { round: usize },
    #[error("round {round}: selection recorded after the graph burned")]
    ExtraSelection { round: usize },
    #[error("round {round}: expected {expected} to move, trace says {found}")]
    WrongPlayer {
        round: usize,
        expected: Player,
        found: Player,
    },
    #[error("round {round}: vertex {vertex} is not an unburned vertex")]
    IllegalSelection { round: usize, vertex: usize },
    #[error("trace continues after round {round} although the graph burned")]
    TrailingRounds { round: usize },
    #[error("trace ends with unburned vertices {0}")]
    Incomplete(VertexSet),
}

impl PlayTrace {
    pub fn len(&self) -> usize {
        self.rounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rounds.is_empty()
    }

    pub fn ended_after_spread(&self) -> bool {
        self.rounds.last().is_some_and(|r| r.selection.is_none())
    }

    pub fn selections(&self) -> impl Iterator<Item = Selection> + '_ {
        self.rounds.iter().filter_map(|r| r.selection)
    }

    /// Re-runs the trace under the game rules and returns its length.
    pub fn replay(&self, g: &Graph) -> Result<usize, TraceError> {
        let all = g.vertices();
        let mut burned = self.initial;
        let mut picks = 0;
        if burned == all {
            return match self.rounds.is_empty() {
                true => Ok(0),
                false => Err(TraceError::TrailingRounds { round: 0 }),
            };
        }
        for (i, r) in self.rounds.iter().enumerate() {
            let round = i + 1;
            if burned == all {
                return Err(TraceError::TrailingRounds { round: i });
            }
            let s = spread(g, burned);
            if r.spread != s - burned {
                return Err(TraceError::SpreadMismatch {
                    round,
                    recorded: r.spread,
                    actual: s - burned,
                });
            }
            burned = s;
            match (r.selection, burned == all) {
                (None, true) => {}
                (Some(_), true) => return Err(TraceError::ExtraSelection { round }),
                (None, false) => return Err(TraceError::MissingSelection { round }),
                (Some(sel), false) => {
                    let expected = self.schedule.actor(picks);
                    if sel.player != expected {
                        return Err(TraceError::WrongPlayer {
                            round,
                            expected,
                            found: sel.player,
                        });
                    }
                    if sel.vertex >= g.order() || burned.contains(sel.vertex) {
                        return Err(TraceError::IllegalSelection {
                            round,
                            vertex: sel.vertex,
                        });
                    }
                    burned.insert(sel.vertex);
                    picks += 1;
                }
            }
        }
        if burned != all {
            return Err(TraceError::Incomplete(all - burned));
        }
        Ok(self.rounds.len())
    }
}

impl fmt::Display for PlayTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rounds.iter().enumerate() {
            write!(f, "round {}: spread {}", i + 1, r.spread)?;
            match r.selection {
                Some(s) => writeln!(f, ", {} selects {}", s.player, s.vertex)?,
                None => writeln!(f, ", game over")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("script exhausted: no scripted move for burner in round {round}")]
    ScriptExhausted { round: usize },
    #[error("script vertex {0} is out of range")]
    ScriptVertex(usize),
}

/// Exact minimax solver for one graph (owns a copy). The memo table maps a post-spread
/// burned set and the player about to select to the number of rounds left,
/// counting the current one.
pub struct GameSolver {
    g: Graph,
    all: VertexSet,
    memo: [FxHashMap<u64, u8>; 2],
}

impl GameSolver {
    pub fn new(g: &Graph) -> Self {
        GameSolver {
            g: g.clone(),
            all: g.vertices(),
            memo: [FxHashMap::default(), FxHashMap::default()],
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    /// Number of memoized states.
    pub fn memo_len(&self) -> usize {
        self.memo[0].len() + self.memo[1].len()
    }

    /// Optimal number of rounds from `b0` (burned at the end of round 0).
    pub fn value(&mut self, b0: VertexSet, starter: Player) -> usize {
        self.value_at_round_start(b0 & self.all, starter) as usize
    }

    /// As [`Self::value`], but the first round skips its spreading phase.
    pub fn selection_first_value(&mut self, b: VertexSet, starter: Player) -> usize {
        let b = b & self.all;
        if b == self.all {
            0
        } else {
            self.select(b, starter) as usize
        }
    }

    fn value_at_round_start(&mut self, b: VertexSet, p: Player) -> u8 {
        if b == self.all {
            return 0;
        }
        let s = spread(&self.g, b);
        if s == self.all {
            return 1;
        }
        self.select(s, p)
    }

    /// Rounds left when `p` is about to select on post-spread set `s != V`.
    fn select(&mut self, s: VertexSet, p: Player) -> u8 {
        if let Some(&v) = self.memo[p.index()].get(&s.bits()) {
            return v;
        }
        let free = self.all - s;
        let best = if free.len() == 1 {
            1
        } else {
            match p {
                Player::Burner => {
                    let mut best = u8::MAX;
                    for v in free {
                        let val = 1 + self.value_at_round_start(s.with(v), Player::Staller);
                        best = best.min(val);
                        // a child that is not fully burned needs at least one more round
                        if best <= 2 {
                            break;
                        }
                    }
                    best
                }
                Player::Staller => {
                    let cap = free.len() as u8;
                    let mut best = 0;
                    for v in free {
                        let val = 1 + self.value_at_round_start(s.with(v), Player::Burner);
                        best = best.max(val);
                        // every round burns at least one vertex
                        if best >= cap {
                            break;
                        }
                    }
                    best
                }
            }
        };
        self.memo[p.index()].insert(s.bits(), best);
        best
    }

    /// Optimal selections for `p` on post-spread set `s`, with the resulting
    /// number of rounds left (counting the current one).
    pub fn optimal_selections(&mut self, s: VertexSet, p: Player) -> (usize, Vec<usize>) {
        let free = self.all - s;
        if free.is_empty() {
            return (0, Vec::new());
        }
        let scored: Vec<(usize, u8)> = free
            .iter()
            .map(|v| (v, 1 + self.value_at_round_start(s.with(v), p.other())))
            .collect();
        let target = match p {
            Player::Burner => scored.iter().map(|x| x.1).min(),
            Player::Staller => scored.iter().map(|x| x.1).max(),
        }
        .unwrap_or(0);
        let moves = scored.iter().filter(|x| x.1 == target).map(|x| x.0).collect();
        (target as usize, moves)
    }

    /// Value plus an optimal line of play; ties go to the lowest vertex.
    pub fn principal_variation(&mut self, b0: VertexSet, starter: Player) -> (usize, PlayTrace) {
        let value = self.value(b0, starter);
        let mut trace = PlayTrace {
            initial: b0 & self.all,
            schedule: Schedule::Alternating(starter),
            rounds: Vec::new(),
        };
        let mut b = b0 & self.all;
        let mut p = starter;
        while b != self.all {
            let s = spread(&self.g, b);
            let delta = s - b;
            if s == self.all {
                trace.rounds.push(Round {
                    spread: delta,
                    selection: None,
                });
                break;
            }
            let (_, moves) = self.optimal_selections(s, p);
            let v = moves[0];
            trace.rounds.push(Round {
                spread: delta,
                selection: Some(Selection { player: p, vertex: v }),
            });
            b = s.with(v);
            p = p.other();
        }
        (value, trace)
    }
}

pub fn game_value(g: &Graph, b0: VertexSet, starter: Player) -> usize {
    GameSolver::new(g).value(b0, starter)
}

pub fn selection_first_value(g: &Graph, b: VertexSet, starter: Player) -> usize {
    GameSolver::new(g).selection_first_value(b, starter)
}

pub fn principal_variation(g: &Graph, b0: VertexSet, starter: Player) -> (usize, PlayTrace) {
    GameSolver::new(g).principal_variation(b0, starter)
}

/// The game with every selection made by `player`: pure minimization for
/// Burner, pure maximization for Staller.
pub struct SoloSolver<'g> {
    g: &'g Graph,
    all: VertexSet,
    player: Player,
    memo: FxHashMap<u64, u8>,
}

impl<'g> SoloSolver<'g> {
    pub fn new(g: &'g Graph, player: Player) -> Self {
        SoloSolver {
            g,
            all: g.vertices(),
            player,
            memo: FxHashMap::default(),
        }
    }

    pub fn value(&mut self, b0: VertexSet) -> usize {
        self.value_at_round_start(b0 & self.all) as usize
    }

    fn value_at_round_start(&mut self, b: VertexSet) -> u8 {
        if b == self.all {
            return 0;
        }
        let s = spread(self.g, b);
        if s == self.all {
            return 1;
        }
        self.select(s)
    }

    fn select(&mut self, s: VertexSet) -> u8 {
        if let Some(&v) = self.memo.get(&s.bits()) {
            return v;
        }
        let free = self.all - s;
        let mut best = match self.player {
            Player::Burner => u8::MAX,
            Player::Staller => 0,
        };
        for v in free {
            let val = 1 + self.value_at_round_start(s.with(v));
            best = match self.player {
                Player::Burner => best.min(val),
                Player::Staller => best.max(val),
            };
            let done = match self.player {
                Player::Burner => best <= 2 || free.len() == 1,
                Player::Staller => best as usize >= free.len(),
            };
            if done {
                break;
            }
        }
        self.memo.insert(s.bits(), best);
        best
    }

    /// An optimal solo play; ties go to the lowest vertex.
    pub fn trace(&mut self, b0: VertexSet) -> (usize, PlayTrace) {
        let value = self.value(b0);
        let mut trace = PlayTrace {
            initial: b0 & self.all,
            schedule: Schedule::Solo(self.player),
            rounds: Vec::new(),
        };
        let mut b = b0 & self.all;
        while b != self.all {
            let s = spread(self.g, b);
            if s == self.all {
                trace.rounds.push(Round {
                    spread: s - b,
                    selection: None,
                });
                break;
            }
            let rest = self.select(s);
            let v = (self.all - s)
                .iter()
                .find(|&v| 1 + self.value_at_round_start(s.with(v)) == rest)
                .unwrap_or_else(|| unreachable!("memo value has a witness move"));
            trace.rounds.push(Round {
                spread: s - b,
                selection: Some(Selection {
                    player: self.player,
                    vertex: v,
                }),
            });
            b = s.with(v);
        }
        (value, trace)
    }
}

/// Rounds needed when Burner makes every selection.
pub fn burner_only_value(g: &Graph, b0: VertexSet) -> usize {
    SoloSolver::new(g, Player::Burner).value(b0)
}

/// Rounds survived when Staller makes every selection; from the empty set
/// this is the cooling number.
pub fn staller_only_value(g: &Graph, b0: VertexSet) -> usize {
    SoloSolver::new(g, Player::Staller).value(b0)
}

/// Bounded-horizon feasibility: can Burner force the game to end within a
/// given number of rounds?
pub struct HorizonSolver<'g> {
    g: &'g Graph,
    all: VertexSet,
    /// `balls[v][k] = N_k[v]`, saturating at the eccentricity of `v`.
    balls: Vec<Vec<VertexSet>>,
    memo: FxHashMap<(u64, u8, u8), bool>,
}

impl<'g> HorizonSolver<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let balls = (0..g.order())
            .map(|v| {
                let mut layers = vec![VertexSet::singleton(v)];
                loop {
                    let last = *layers.last().unwrap_or(&VertexSet::EMPTY);
                    let next = g.closed_neighbors_of_set(last);
                    if next == last {
                        break;
                    }
                    layers.push(next);
                }
                layers
            })
            .collect();
        HorizonSolver {
            g,
            all: g.vertices(),
            balls,
            memo: FxHashMap::default(),
        }
    }

    fn ball(&self, v: usize, k: usize) -> VertexSet {
        let layers = &self.balls[v];
        layers[k.min(layers.len() - 1)]
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn can_finish_within(&mut self, b0: VertexSet, starter: Player, rounds: usize) -> bool {
        let r = rounds.min(self.g.order() + 1) as u8;
        self.win(b0 & self.all, starter, r)
    }

    fn win(&mut self, b: VertexSet, p: Player, r: u8) -> bool {
        if b == self.all {
            return true;
        }
        if r == 0 {
            return false;
        }
        if !b.is_empty() && self.g.closed_neighborhood(b, r as usize) == self.all {
            return true;
        }
        let s = spread(self.g, b);
        if s == self.all {
            return true;
        }
        let free = self.all - s;
        if r == 1 {
            return free.len() == 1;
        }
        let key = (s.bits(), p as u8, r);
        if let Some(&w) = self.memo.get(&key) {
            return w;
        }
        let w = if !self.coverable(s, r as usize) {
            false
        } else {
            match p {
                Player::Burner => free.iter().any(|v| self.win(s.with(v), Player::Staller, r - 1)),
                Player::Staller => free.iter().all(|v| self.win(s.with(v), Player::Burner, r - 1)),
            }
        };
        self.memo.insert(key, w);
        w
    }

    /// Necessary condition for finishing: after the spread, `r` selections of
    /// radii `r-1, ..., 0` must cover what `N_{r-1}[s]` misses. A greedy set
    /// of uncovered vertices pairwise farther apart than `2(r-1)` needs one
    /// selection each.
    fn coverable(&self, s: VertexSet, r: usize) -> bool {
        let reach = self.g.closed_neighborhood(s, r - 1);
        let uncovered = self.all - reach;
        let mut blocked = VertexSet::EMPTY;
        let mut packed = 0;
        for u in uncovered {
            if blocked.contains(u) {
                continue;
            }
            packed += 1;
            if packed > r {
                return false;
            }
            blocked |= self.ball(u, 2 * (r - 1));
        }
        true
    }
}

pub fn can_finish_within(g: &Graph, b0: VertexSet, starter: Player, rounds: usize) -> bool {
    HorizonSolver::new(g).can_finish_within(b0, starter, rounds)
}

/// Worst case over all Staller replies when Burner follows `script`.
///
/// A scripted vertex that is already burned is replaced by the lowest
/// unburned vertex. Running out of script in a Burner turn at or before
/// round `horizon` is an error; after it, Burner plays the lowest unburned
/// vertex.
pub fn verify_burner_script(
    g: &Graph,
    b0: VertexSet,
    starter: Player,
    script: &[usize],
    horizon: usize,
) -> Result<usize, EngineError> {
    if let Some(&v) = script.iter().find(|&&v| v >= g.order()) {
        return Err(EngineError::ScriptVertex(v));
    }
    let mut run = ScriptRun {
        g,
        all: g.vertices(),
        script,
        horizon,
        memo: FxHashMap::default(),
    };
    run.worst(b0 & g.vertices(), starter, 0, 1)
}

struct ScriptRun<'a> {
    g: &'a Graph,
    all: VertexSet,
    script: &'a [usize],
    horizon: usize,
    memo: FxHashMap<(u64, usize, u8), usize>,
}

impl ScriptRun<'_> {
    /// Total game length when round `t` starts from `b`, with `idx` script
    /// moves consumed.
    fn worst(&mut self, b: VertexSet, p: Player, idx: usize, t: usize) -> Result<usize, EngineError> {
        if b == self.all {
            return Ok(t - 1);
        }
        let s = spread(self.g, b);
        if s == self.all {
            return Ok(t);
        }
        let key = (s.bits(), idx, p as u8);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let free = self.all - s;
        let result = match p {
            Player::Burner => {
                let v = match self.script.get(idx) {
                    Some(&v) if free.contains(v) => v,
                    Some(_) => free.first().unwrap_or(0),
                    None if t <= self.horizon => return Err(EngineError::ScriptExhausted { round: t }),
                    None => free.first().unwrap_or(0),
                };
                self.worst(s.with(v), Player::Staller, idx + 1, t + 1)?
            }
            Player::Staller => {
                let mut worst = 0;
                for v in free {
                    worst = worst.max(self.worst(s.with(v), Player::Burner, idx, t + 1)?);
                }
                worst
            }
        };
        self.memo.insert(key, result);
        Ok(result)
    }
}
