//! Suite selection and the parallel corpus runner.

use burngame::corpus::{enumerate, CorpusSpec};
use burngame::{CorpusError, Graph};
use rayon::prelude::*;
use thiserror::Error;

use crate::catalog::{find, CATALOG};
use crate::check::{evaluate_check, CheckDefinition, CheckKind};
use crate::examples::{check_example_2_8, check_example_5_2};
use crate::facts::Facts;
use crate::families::sweep_results;
use crate::products::{product_sweep, DEFAULT_FACTORS};
use crate::report::{CheckResult, Report};

#[derive(Debug, Error)]
pub enum RunError {
    #[error("unknown check or suite {0:?}")]
    UnknownCheck(String),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Graph(#[from] burngame::GraphError),
    #[error("thread pool: {0}")]
    Pool(String),
}

/// The graphs per-graph checks run on.
#[derive(Clone, Debug)]
pub enum GraphSource {
    Corpus(Vec<CorpusSpec>),
    Explicit { label: String, graphs: Vec<Graph> },
}

impl GraphSource {
    pub fn describe(&self) -> String {
        match self {
            GraphSource::Corpus(specs) => specs.iter().map(CorpusSpec::describe).collect::<Vec<_>>().join(";"),
            GraphSource::Explicit { label, graphs } => format!("{label} ({} graphs)", graphs.len()),
        }
    }

    pub fn graphs(&self) -> Result<Vec<Graph>, RunError> {
        match self {
            GraphSource::Corpus(specs) => {
                let mut out = vec![];
                for spec in specs {
                    out.extend(enumerate(spec)?);
                }
                Ok(out)
            }
            GraphSource::Explicit { graphs, .. } => Ok(graphs.clone()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    pub include_long_running: bool,
}

/// Resolves a selector: `all`, `graph`, `families`, `products`, `examples`,
/// or a comma-separated list of check ids.
pub fn select(selector: &str) -> Result<Vec<&'static CheckDefinition>, RunError> {
    let by_kind = |f: fn(&CheckKind) -> bool| CATALOG.iter().filter(|d| f(&d.kind)).collect::<Vec<_>>();
    Ok(match selector.trim() {
        "all" => CATALOG.iter().collect(),
        "graph" => by_kind(|k| matches!(k, CheckKind::Graph { .. })),
        "families" => by_kind(|k| matches!(k, CheckKind::Family)),
        "products" => by_kind(|k| matches!(k, CheckKind::Product)),
        "examples" => by_kind(|k| matches!(k, CheckKind::Example)),
        list => {
            let mut out = vec![];
            for id in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                out.push(find(id).ok_or_else(|| RunError::UnknownCheck(id.to_string()))?);
            }
            if out.is_empty() {
                return Err(RunError::UnknownCheck(list.to_string()));
            }
            out
        }
    })
}

/// Per-graph checks over a list of graphs, in parallel; every worker builds
/// its own engine state.
pub fn run_graph_checks(
    checks: &[&CheckDefinition],
    graphs: &[Graph],
    jobs: usize,
) -> Result<Vec<CheckResult>, RunError> {
    let graph_checks: Vec<&CheckDefinition> = checks.iter().copied().filter(|d| d.is_graph_check()).collect();
    if graph_checks.is_empty() {
        return Ok(vec![]);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| RunError::Pool(e.to_string()))?;
    Ok(pool.install(|| {
        graphs
            .par_iter()
            .flat_map_iter(|g| {
                let facts = Facts::new(g.clone());
                graph_checks
                    .iter()
                    .flat_map(|d| evaluate_check(d, &facts))
                    .collect::<Vec<_>>()
            })
            .collect()
    }))
}

/// Runs the selected checks: per-graph checks on `source`, and family,
/// product and example checks on their fixed subjects.
pub fn run_suite(
    suite: &str,
    checks: &[&CheckDefinition],
    source: &GraphSource,
    options: SuiteOptions,
) -> Result<Report, RunError> {
    let mut notes = vec![];
    let needs_graphs = checks.iter().any(|d| d.is_graph_check());
    let graphs = if needs_graphs { source.graphs()? } else { vec![] };
    let mut results = run_graph_checks(checks, &graphs, options.jobs)?;
    let product_ids: Vec<&str> = checks
        .iter()
        .filter(|d| matches!(d.kind, CheckKind::Product))
        .map(|d| d.id)
        .collect();
    if !product_ids.is_empty() {
        results.extend(product_sweep(DEFAULT_FACTORS, &product_ids)?);
    }
    for d in checks {
        match d.kind {
            CheckKind::Family => results.extend(sweep_results(d.id)),
            CheckKind::Example => {
                let out = match d.id {
                    "example-2.8" => check_example_2_8(options.include_long_running),
                    _ => check_example_5_2(),
                };
                results.extend(out.results);
                notes.extend(out.notes);
            }
            _ => {}
        }
    }
    let corpus = if needs_graphs {
        source.describe()
    } else {
        "fixed subjects".to_string()
    };
    Ok(Report::new(suite, &corpus, results, notes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors() {
        assert_eq!(select("all").unwrap().len(), CATALOG.len());
        assert_eq!(select("prop-2.1, prop-4.7").unwrap().len(), 2);
        assert!(matches!(select("prop-9.9"), Err(RunError::UnknownCheck(_))));
        assert!(select("examples")
            .unwrap()
            .iter()
            .all(|d| matches!(d.kind, CheckKind::Example)));
    }

    #[test]
    fn small_corpus_runs_clean() {
        let checks = select("graph").unwrap();
        let source = GraphSource::Corpus((1..=4).map(CorpusSpec::classes).collect());
        let report = run_suite(
            "graph",
            &checks,
            &source,
            SuiteOptions {
                jobs: 2,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(report.ok(), "{:?}", report.failures().collect::<Vec<_>>());
        assert!(report.summary.pass > 0 && report.summary.skip > 0);
    }
}
