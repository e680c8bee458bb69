//! Tree-reduction gap exploration: how much larger can the best spanning
//! tree's game value be than the graph's own? Reported, never judged.

use std::collections::BTreeMap;

use burngame::engine::{game_value, Player};
use burngame::graph6::emit_graph6;
use burngame::spanning::{kirchhoff_count, spanning_trees};
use burngame::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::catalog::{cache_key, SPANNING_TREE_LIMIT};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapRecord {
    pub graph6: String,
    pub value: usize,
    pub best_tree_value: usize,
    pub gap: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub starter: String,
    pub examined: usize,
    /// Connected graphs skipped because they have too many spanning trees.
    pub skipped: usize,
    /// gap -> number of graphs.
    pub distribution: BTreeMap<usize, usize>,
    /// Graphs attaining the largest gap seen.
    pub extremal: Vec<GapRecord>,
}

/// `min_T b_g(T) - b_g(G)` over connected `graphs` (Burner or Staller start).
pub fn tree_gap(graphs: &[Graph], starter: Player) -> GapReport {
    let mut report = GapReport {
        starter: starter.name().to_string(),
        ..Default::default()
    };
    let mut tree_values: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    let mut max_gap = 0;
    for g in graphs.iter().filter(|g| g.is_connected()) {
        if kirchhoff_count(g).is_none_or(|c| c > SPANNING_TREE_LIMIT as u128) {
            report.skipped += 1;
            continue;
        }
        let trees = spanning_trees(g, SPANNING_TREE_LIMIT).unwrap_or_default();
        let best = trees
            .iter()
            .map(|t| {
                *tree_values
                    .entry(cache_key(t))
                    .or_insert_with(|| game_value(t, VertexSet::EMPTY, starter))
            })
            .min()
            .unwrap_or(0);
        let value = game_value(g, VertexSet::EMPTY, starter);
        let gap = best.saturating_sub(value);
        report.examined += 1;
        *report.distribution.entry(gap).or_default() += 1;
        let record = GapRecord {
            graph6: emit_graph6(g),
            value,
            best_tree_value: best,
            gap,
        };
        if gap > max_gap {
            max_gap = gap;
            report.extremal = vec![record];
        } else if gap == max_gap {
            report.extremal.push(record);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use burngame::generators::figure2_graph;

    #[test]
    fn trees_have_gap_zero() {
        let trees = burngame::corpus::trees(6).unwrap();
        let r = tree_gap(&trees, Player::Burner);
        assert_eq!(r.examined, trees.len());
        assert_eq!(r.distribution.keys().copied().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn figure2_has_positive_gap() {
        let r = tree_gap(&[figure2_graph().0], Player::Burner);
        assert_eq!(r.extremal[0].value, 3);
        assert!(r.extremal[0].gap >= 1);
    }
}
