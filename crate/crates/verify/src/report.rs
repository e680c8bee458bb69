//! Check results, witnesses and the suite report.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use burngame::engine::{PlayTrace, Player, Round, Schedule, Selection};
use burngame::graph6::emit_graph6;
use burngame::{Graph, VertexSet};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Le,
    Ge,
    Eq,
    /// Both sides are truth values (0/1) that must agree.
    Iff,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq | Relation::Iff => lhs == rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "==",
            Relation::Iff => "<=>",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

/// Serializable mirror of [`Player`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Burner,
    Staller,
}

impl From<Player> for Side {
    fn from(p: Player) -> Side {
        match p {
            Player::Burner => Side::Burner,
            Player::Staller => Side::Staller,
        }
    }
}

impl From<Side> for Player {
    fn from(s: Side) -> Player {
        match s {
            Side::Burner => Player::Burner,
            Side::Staller => Player::Staller,
        }
    }
}

/// One recorded round of a [`TraceRecord`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRecord {
    pub spread: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub player: Option<Side>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
}

/// A serializable play trace, tied to the graph it was played on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub graph6: String,
    pub initial: Vec<usize>,
    pub starter: Side,
    pub solo: bool,
    pub value: usize,
    pub rounds: Vec<RoundRecord>,
}

impl TraceRecord {
    pub fn new(g: &Graph, value: usize, trace: &PlayTrace) -> Self {
        let (starter, solo) = match trace.schedule {
            Schedule::Alternating(p) => (p, false),
            Schedule::Solo(p) => (p, true),
        };
        TraceRecord {
            graph6: emit_graph6(g),
            initial: trace.initial.to_vec(),
            starter: starter.into(),
            solo,
            value,
            rounds: trace
                .rounds
                .iter()
                .map(|r| RoundRecord {
                    spread: r.spread.to_vec(),
                    player: r.selection.map(|s| s.player.into()),
                    vertex: r.selection.map(|s| s.vertex),
                })
                .collect(),
        }
    }

    pub fn to_trace(&self) -> PlayTrace {
        PlayTrace {
            initial: VertexSet::from_vertices(self.initial.iter().copied()),
            schedule: if self.solo {
                Schedule::Solo(self.starter.into())
            } else {
                Schedule::Alternating(self.starter.into())
            },
            rounds: self
                .rounds
                .iter()
                .map(|r| Round {
                    spread: VertexSet::from_vertices(r.spread.iter().copied()),
                    selection: match (r.player, r.vertex) {
                        (Some(player), Some(vertex)) => Some(Selection {
                            player: player.into(),
                            vertex,
                        }),
                        _ => None,
                    },
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub values: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub traces: Vec<TraceRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    /// Graph6 of the graph the check was evaluated on.
    pub graph6: String,
    /// Human-readable subject: a family expression, product, or graph6.
    pub subject: String,
    pub params: BTreeMap<String, Value>,
    pub statement: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<Relation>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    pub exploratory: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail && !self.exploratory
    }

    /// Ordering key: check id, then canonical subject, then parameters.
    pub(crate) fn sort_key(&self) -> (String, String, String, String) {
        let canon = burngame::graph6::parse_graph6(&self.graph6)
            .ok()
            .and_then(|g| burngame::canon::canonical_form(&g).ok())
            .map(|b| String::from_utf8_lossy(&b).into_owned())
            .unwrap_or_else(|| self.graph6.clone());
        (
            self.check_id.clone(),
            format!("{:04}{canon}", self.graph6.len()),
            serde_json::to_string(&self.params).unwrap_or_default(),
            self.statement.clone(),
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    /// Exploratory checks that reported a difference (never a failure).
    pub exploratory_flags: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub suite: String,
    pub corpus: String,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(suite: &str, corpus: &str, mut results: Vec<CheckResult>, notes: Vec<String>) -> Self {
        results.sort_by_cached_key(CheckResult::sort_key);
        let mut summary = Summary::default();
        for r in &results {
            match (r.status, r.exploratory) {
                (Status::Skip, _) => summary.skip += 1,
                (Status::Fail, true) => summary.exploratory_flags += 1,
                (Status::Fail, false) => summary.fail += 1,
                (Status::Pass, _) => summary.pass += 1,
            }
        }
        Report {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            corpus: corpus.to_string(),
            results,
            summary,
            notes,
        }
    }

    pub fn ok(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.is_failure())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap_or_else(|e| unreachable!("report serializes: {e}"))
    }

    /// Per-check pass/fail/skip counts as CSV.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut per_check: BTreeMap<&str, [usize; 4]> = BTreeMap::new();
        for r in &self.results {
            let row = per_check.entry(&r.check_id).or_default();
            match (r.status, r.exploratory) {
                (Status::Pass, _) => row[0] += 1,
                (Status::Fail, false) => row[1] += 1,
                (Status::Skip, _) => row[2] += 1,
                (Status::Fail, true) => row[3] += 1,
            }
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["check_id", "pass", "fail", "skip", "exploratory_flags"])?;
        for (id, c) in per_check {
            w.write_record([
                id.to_string(),
                c[0].to_string(),
                c[1].to_string(),
                c[2].to_string(),
                c[3].to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Merges several reports, keeping the combined results sorted.
    pub fn merge(suite: &str, corpus: &str, parts: Vec<Report>) -> Report {
        let mut results = vec![];
        let mut notes = vec![];
        for p in parts {
            results.extend(p.results);
            notes.extend(p.notes);
        }
        Report::new(suite, corpus, results, notes)
    }
}
