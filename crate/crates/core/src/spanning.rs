//! Spanning-tree counting (matrix-tree theorem) and enumeration.

use crate::error::GraphError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Number of spanning trees via the Kirchhoff determinant (fraction-free
/// Bareiss elimination). `None` if the value overflows `i128`.
pub fn kirchhoff_count(g: &Graph) -> Option<u128> {
    let n = g.order();
    if n == 1 {
        return Some(1);
    }
    let m = n - 1;
    let mut a: Vec<Vec<i128>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        g.degree(i) as i128
                    } else if g.has_edge(i, j) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..m {
        if a[k][k] == 0 {
            let swap = (k + 1..m).find(|&r| a[r][k] != 0);
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let num = a[i][j]
                    .checked_mul(a[k][k])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = num / prev;
            }
        }
        prev = a[k][k];
    }
    let det = sign * a[m - 1][m - 1];
    u128::try_from(det).ok()
}

/// Every spanning tree of a connected graph, each exactly once.
///
/// Refuses to start when the Kirchhoff count exceeds `limit`.
pub fn spanning_trees(g: &Graph, limit: u64) -> Result<Vec<Graph>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    match kirchhoff_count(g) {
        Some(c) if c <= limit as u128 => {}
        Some(c) => {
            return Err(GraphError::TreeLimitExceeded {
                count: c.to_string(),
                limit,
            })
        }
        None => {
            return Err(GraphError::TreeLimitExceeded {
                count: "overflow".into(),
                limit,
            })
        }
    }
    let edges = g.edges();
    let mut out = Vec::new();
    let mut state = Enum {
        n: g.order(),
        edges: &edges,
        chosen: Vec::with_capacity(g.order()),
        out: &mut out,
    };
    let parent: Vec<usize> = (0..g.order()).collect();
    state.rec(0, parent, edges.iter().map(|_| true).collect());
    Ok(out)
}

struct Enum<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    chosen: Vec<usize>,
    out: &'a mut Vec<Graph>,
}

fn find(parent: &[usize], mut v: usize) -> usize {
    while parent[v] != v {
        v = parent[v];
    }
    v
}

impl Enum<'_> {
    /// Branch on edge `i`: include it (if it joins two components) or
    /// exclude it (if the remaining edges can still span).
    fn rec(&mut self, i: usize, parent: Vec<usize>, available: Vec<bool>) {
        if self.chosen.len() + 1 == self.n {
            let e: Vec<_> = self.chosen.iter().map(|&k| self.edges[k]).collect();
            if let Ok(t) = Graph::new(self.n, &e) {
                self.out.push(t);
            }
            return;
        }
        if i == self.edges.len() {
            return;
        }
        let (u, v) = self.edges[i];
        let (ru, rv) = (find(&parent, u), find(&parent, v));
        if ru != rv {
            let mut p = parent.clone();
            p[ru] = rv;
            self.chosen.push(i);
            self.rec(i + 1, p, available.clone());
            self.chosen.pop();
        }
        let mut avail = available;
        avail[i] = false;
        if self.spans(&avail) {
            self.rec(i + 1, parent, avail);
        }
    }

    fn spans(&self, avail: &[bool]) -> bool {
        let mut rows = vec![VertexSet::EMPTY; self.n];
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            if avail[k] {
                rows[u].insert(v);
                rows[v].insert(u);
            }
        }
        Graph::from_rows_unchecked(rows).is_connected()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut e = vec![];
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn cycle_and_complete_counts() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(kirchhoff_count(&c4), Some(4));
        assert_eq!(spanning_trees(&c4, 100).unwrap().len(), 4);
        // Cayley: n^(n-2)
        for n in 2..=6usize {
            let k = complete(n);
            let expect = n.pow(n as u32 - 2);
            assert_eq!(kirchhoff_count(&k), Some(expect as u128));
            assert_eq!(spanning_trees(&k, 10_000).unwrap().len(), expect);
        }
    }

    #[test]
    fn tree_is_its_own_spanning_tree() {
        let t = Graph::new(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(spanning_trees(&t, 10).unwrap(), vec![t]);
    }

    #[test]
    fn errors() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(spanning_trees(&g, 10), Err(GraphError::Disconnected));
        assert!(matches!(
            spanning_trees(&complete(5), 124),
            Err(GraphError::TreeLimitExceeded { .. })
        ));
    }

    #[test]
    fn trees_are_distinct_and_spanning() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (0, 4)]).unwrap();
        let trees = spanning_trees(&g, 1000).unwrap();
        assert_eq!(trees.len() as u128, kirchhoff_count(&g).unwrap());
        let mut edge_sets: Vec<_> = trees.iter().map(|t| t.edges()).collect();
        edge_sets.sort();
        edge_sets.dedup();
        assert_eq!(edge_sets.len(), trees.len());
        for t in &trees {
            assert!(t.is_tree());
            assert!(t.edges().iter().all(|&(u, v)| g.has_edge(u, v)));
        }
    }
}
