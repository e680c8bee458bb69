//! The results under test as executable checks: a catalog of per-graph
//! checks, closed-form family bounds, product sweeps, the worked examples,
//! and a deterministic parallel runner producing JSON/CSV reports.

pub mod catalog;
pub mod check;
pub mod examples;
pub mod explore;
pub mod facts;
pub mod families;
pub mod products;
pub mod report;
pub mod runner;

pub use catalog::{find, CATALOG, COVERAGE_MANIFEST};
pub use check::{evaluate_check, Assertion, CheckDefinition, CheckKind};
pub use facts::Facts;
pub use report::{CheckResult, Relation, Report, Status, Summary, TraceRecord, Witness};
pub use runner::{run_suite, select, GraphSource, RunError, SuiteOptions};
