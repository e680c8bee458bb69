//! Graph inputs and small argument parsers shared by the commands.

use std::ops::RangeInclusive;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use burngame::generators::parse_graph_expr;
use burngame::graph6::parse_graph6;
use burngame::Graph;
use clap::Args;

#[derive(Args, Debug, Clone, Default)]
pub struct GraphInput {
    /// Graph expression, e.g. `path:9`, `hypercube:4`, `cartesian(path:3,cycle:4)`, `figure1`
    #[arg(long, group = "graph")]
    pub family: Option<String>,
    /// Graph in graph6 format
    #[arg(long, group = "graph")]
    pub graph6: Option<String>,
    /// Edge-list file: a header line `n m`, then one `u v` line per edge
    #[arg(long, group = "graph")]
    pub edge_list: Option<PathBuf>,
}

impl GraphInput {
    pub fn load(&self) -> Result<Graph> {
        if let Some(expr) = &self.family {
            return parse_graph_expr(expr).with_context(|| format!("parsing graph expression {expr:?}"));
        }
        if let Some(text) = &self.graph6 {
            return parse_graph6(text).with_context(|| format!("parsing graph6 {text:?}"));
        }
        if let Some(path) = &self.edge_list {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            return Graph::parse_edge_list(&text).with_context(|| format!("parsing edge list {}", path.display()));
        }
        bail!("no graph given: use --family, --graph6 or --edge-list")
    }
}

/// Parses `6`, `6..8` or `6..=8` (both inclusive).
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid number {t:?} in range {s:?}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

/// Parses a vertex list such as `0,3,5` (empty string: no vertices).
pub fn parse_vertices(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("invalid vertex {t:?}")))
        .collect()
}
