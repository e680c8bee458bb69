//! Exhaustive small-graph corpora: labeled enumeration and isomorphism classes.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::canon::{canonical_form, canonical_graph};
use crate::error::{CorpusError, GraphError};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::vertex_set::VertexSet;

pub const MAX_LABELED_N: usize = 7;
pub const MAX_DEDUP_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct CorpusSpec {
    pub n: usize,
    pub connected_only: bool,
    /// Both the graph and its complement connected.
    pub both_connected: bool,
    /// One representative per isomorphism class instead of every labeled graph.
    pub dedup: bool,
}

impl CorpusSpec {
    pub fn classes(n: usize) -> Self {
        CorpusSpec {
            n,
            dedup: true,
            ..Default::default()
        }
    }

    pub fn connected_classes(n: usize) -> Self {
        CorpusSpec {
            n,
            connected_only: true,
            dedup: true,
            ..Default::default()
        }
    }

    pub fn both_connected_classes(n: usize) -> Self {
        CorpusSpec {
            n,
            both_connected: true,
            dedup: true,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<(), CorpusError> {
        if self.n == 0 {
            return Err(CorpusError::Cap("n must be at least 1".into()));
        }
        if self.dedup {
            if self.n > MAX_DEDUP_N {
                return Err(CorpusError::Cap(format!(
                    "isomorphism classes available for n <= {MAX_DEDUP_N}"
                )));
            }
            if self.n == MAX_DEDUP_N && !self.both_connected {
                return Err(CorpusError::Cap("n = 8 requires the both-connected filter".into()));
            }
        } else if self.n > MAX_LABELED_N {
            return Err(CorpusError::Cap(format!(
                "labeled enumeration available for n <= {MAX_LABELED_N}"
            )));
        }
        Ok(())
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        if self.connected_only && !g.is_connected() {
            return false;
        }
        if self.both_connected && !(g.is_connected() && g.complement().is_connected()) {
            return false;
        }
        true
    }

    pub fn describe(&self) -> String {
        let mut s = format!("n={}", self.n);
        if self.connected_only {
            s.push_str(",connected");
        }
        if self.both_connected {
            s.push_str(",both-connected");
        }
        s.push_str(if self.dedup { ",classes" } else { ",labeled" });
        s
    }
}

/// Stream of graphs produced by [`enumerate`].
pub enum CorpusIter {
    Labeled(LabeledGraphs),
    Classes(std::vec::IntoIter<Graph>),
}

impl Iterator for CorpusIter {
    type Item = Graph;
    fn next(&mut self) -> Option<Graph> {
        match self {
            CorpusIter::Labeled(it) => it.next(),
            CorpusIter::Classes(it) => it.next(),
        }
    }
}

/// Yields the graphs described by `spec`. Labeled corpora come in edge-mask
/// order; class corpora in canonical-form order.
pub fn enumerate(spec: &CorpusSpec) -> Result<CorpusIter, CorpusError> {
    spec.validate()?;
    if spec.dedup {
        let classes = isomorphism_classes(spec.n)
            .into_iter()
            .filter(|g| spec.accepts(g))
            .collect::<Vec<_>>();
        Ok(CorpusIter::Classes(classes.into_iter()))
    } else {
        Ok(CorpusIter::Labeled(LabeledGraphs::new(*spec)))
    }
}

/// Every labeled graph on `n` vertices, indexed by its upper-triangle edge mask
/// (graph6 bit order).
pub struct LabeledGraphs {
    spec: CorpusSpec,
    pairs: Vec<(usize, usize)>,
    mask: u64,
    end: u64,
}

impl LabeledGraphs {
    fn new(spec: CorpusSpec) -> Self {
        let n = spec.n;
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        LabeledGraphs {
            spec,
            end: 1u64 << pairs.len(),
            pairs,
            mask: 0,
        }
    }

    fn build(&self, mask: u64) -> Graph {
        let mut rows = vec![VertexSet::EMPTY; self.spec.n];
        for (k, &(i, j)) in self.pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
        Graph::from_rows_unchecked(rows)
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;
    fn next(&mut self) -> Option<Graph> {
        while self.mask < self.end {
            let g = self.build(self.mask);
            self.mask += 1;
            if self.spec.accepts(&g) {
                return Some(g);
            }
        }
        None
    }
}

/// Canonical representatives of all isomorphism classes on `n` vertices, in
/// canonical-form order.
///
/// Built by vertex extension: every graph on `n` vertices is a class
/// representative on `n - 1` vertices plus one vertex with some neighbor set.
pub fn isomorphism_classes(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_DEDUP_N).contains(&n), "classes available for 1..=8");
    let mut level = vec![Graph::new(1, &[]).unwrap_or_else(|e| unreachable!("{e}"))];
    for m in 2..=n {
        let mut seen: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for base in &level {
            for nb in 0u64..1 << (m - 1) {
                let mut rows = base.rows().to_vec();
                rows.push(VertexSet(nb));
                for v in VertexSet(nb).iter() {
                    rows[v].insert(m - 1);
                }
                let g = Graph::from_rows_unchecked(rows);
                if let Entry::Vacant(e) = seen.entry(canonical_key(&g)) {
                    e.insert(g);
                }
            }
        }
        let all: Vec<Graph> = seen.into_values().map(|g| canonical_graph(&g).unwrap_or(g)).collect();
        level = all;
    }
    level
}

fn canonical_key(g: &Graph) -> Vec<u8> {
    canonical_form(g).unwrap_or_else(|_| emit_graph6(g).into_bytes())
}

/// Non-isomorphic trees on `n` vertices (`n <= 10`), in canonical-form order.
pub fn trees(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > crate::canon::CANONICAL_CAP {
        return Err(GraphError::CanonicalCap {
            n,
            cap: crate::canon::CANONICAL_CAP,
        });
    }
    let mut level = vec![Graph::new(1, &[])?];
    for m in 2..=n {
        let mut seen: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for t in &level {
            for v in 0..m - 1 {
                let mut rows = t.rows().to_vec();
                rows.push(VertexSet::singleton(v));
                rows[v].insert(m - 1);
                let g = Graph::from_rows_unchecked(rows);
                let key = canonical_form(&g)?;
                if let Entry::Vacant(e) = seen.entry(key) {
                    e.insert(canonical_graph(&g)?);
                }
            }
        }
        level = seen.into_values().collect();
    }
    Ok(level)
}

/// Writes the corpus as graph6 lines; returns the number of graphs written.
pub fn stream_to_file(spec: &CorpusSpec, path: &Path) -> Result<usize, CorpusError> {
    let mut out = BufWriter::new(File::create(path)?);
    let mut count = 0;
    for g in enumerate(spec)? {
        writeln!(out, "{}", emit_graph6(&g))?;
        count += 1;
    }
    out.flush()?;
    Ok(count)
}

/// Reads graph6 lines; blank lines are skipped. Errors name the 1-based line.
pub fn load_corpus(path: &Path) -> Result<Vec<Graph>, CorpusError> {
    read_corpus(BufReader::new(File::open(path)?))
}

pub fn read_corpus<R: BufRead>(reader: R) -> Result<Vec<Graph>, CorpusError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|source| CorpusError::Line { line: i + 1, source })?;
        out.push(g);
    }
    Ok(out)
}
