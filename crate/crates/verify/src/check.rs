//! Executable statements: a check definition produces assertions, and each
//! assertion becomes a [`CheckResult`].

use std::collections::BTreeMap;

use serde_json::Value;

use crate::facts::Facts;
use crate::report::{CheckResult, Relation, Status, TraceRecord, Witness};

/// Where a check draws its subjects from.
#[derive(Clone, Copy)]
pub enum CheckKind {
    /// Evaluated on each graph of a corpus or explicit list.
    Graph {
        applies: fn(&Facts) -> bool,
        evaluate: fn(&Facts) -> Vec<Assertion>,
    },
    /// Closed-form bounds over a graph family (see `families`).
    Family,
    /// Inequalities over pairs of factor graphs (see `products`).
    Product,
    /// A worked example with fixed graphs (see `examples`).
    Example,
}

pub struct CheckDefinition {
    pub id: &'static str,
    /// Key in the coverage manifest of numbered results.
    pub covers: &'static str,
    pub citation: &'static str,
    pub kind: CheckKind,
    /// Exploratory checks report differences but never fail a suite.
    pub exploratory: bool,
}

impl CheckDefinition {
    pub fn is_graph_check(&self) -> bool {
        matches!(self.kind, CheckKind::Graph { .. })
    }
}

/// One evaluated inequality (or equivalence) with its context.
#[derive(Clone, Debug)]
pub struct Assertion {
    pub statement: String,
    pub lhs: i64,
    pub relation: Relation,
    pub rhs: i64,
    pub params: BTreeMap<String, Value>,
    /// Extra values recorded in the witness on failure.
    pub values: BTreeMap<String, i64>,
    /// Extra traces recorded in the witness on failure.
    pub traces: Vec<TraceRecord>,
}

impl Assertion {
    pub fn new(statement: impl Into<String>, lhs: usize, relation: Relation, rhs: usize) -> Self {
        Assertion::signed(statement, lhs as i64, relation, rhs as i64)
    }

    pub fn signed(statement: impl Into<String>, lhs: i64, relation: Relation, rhs: i64) -> Self {
        Assertion {
            statement: statement.into(),
            lhs,
            relation,
            rhs,
            params: BTreeMap::new(),
            values: BTreeMap::new(),
            traces: Vec::new(),
        }
    }

    pub fn iff(statement: impl Into<String>, lhs: bool, rhs: bool) -> Self {
        Assertion::signed(statement, lhs as i64, Relation::Iff, rhs as i64)
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn value(mut self, key: &str, value: i64) -> Self {
        self.values.insert(key.to_string(), value);
        self
    }

    pub fn trace(mut self, t: TraceRecord) -> Self {
        self.traces.push(t);
        self
    }

    pub fn holds(&self) -> bool {
        self.relation.holds(self.lhs, self.rhs)
    }
}

/// Turns assertions about a subject into results; failures carry a witness
/// with every value computed for the subject plus principal variations.
pub fn to_results(def: &CheckDefinition, facts: &Facts, subject: &str, assertions: Vec<Assertion>) -> Vec<CheckResult> {
    assertions
        .into_iter()
        .map(|a| {
            let holds = a.holds();
            let witness = (!holds).then(|| {
                let mut values = facts.snapshot();
                values.extend(a.values.clone());
                let mut traces = facts.traces();
                traces.extend(a.traces.clone());
                Witness { values, traces }
            });
            CheckResult {
                check_id: def.id.to_string(),
                graph6: facts.graph6().to_string(),
                subject: subject.to_string(),
                params: a.params,
                statement: a.statement,
                lhs: Some(a.lhs),
                rhs: Some(a.rhs),
                relation: Some(a.relation),
                status: if holds { Status::Pass } else { Status::Fail },
                holds: Some(holds),
                exploratory: def.exploratory,
                witness,
            }
        })
        .collect()
}

pub fn skipped(def: &CheckDefinition, facts: &Facts, subject: &str) -> CheckResult {
    CheckResult {
        check_id: def.id.to_string(),
        graph6: facts.graph6().to_string(),
        subject: subject.to_string(),
        params: BTreeMap::new(),
        statement: "not applicable".to_string(),
        lhs: None,
        rhs: None,
        relation: None,
        status: Status::Skip,
        holds: None,
        exploratory: def.exploratory,
        witness: None,
    }
}

/// Evaluates a per-graph check; inapplicable graphs give a single skip.
pub fn evaluate_check(def: &CheckDefinition, facts: &Facts) -> Vec<CheckResult> {
    match def.kind {
        CheckKind::Graph { applies, evaluate } => {
            let subject = facts.graph6().to_string();
            if applies(facts) {
                to_results(def, facts, &subject, evaluate(facts))
            } else {
                vec![skipped(def, facts, &subject)]
            }
        }
        _ => Vec::new(),
    }
}
