//! Canonical labeling for small graphs by pruned permutation search.
//!
//! Vertices are first split into cells by iterated degree refinement. Only
//! permutations that place cells in refinement order are tried, and a branch
//! is abandoned as soon as its partial adjacency code exceeds the best found.

use crate::error::GraphError;
use crate::graph::Graph;
use crate::graph6::emit_graph6;

pub const CANONICAL_CAP: usize = 10;

/// Canonical byte string: graph6 of the canonically relabeled graph.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, GraphError> {
    Ok(emit_graph6(&canonical_graph(g)?).into_bytes())
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph, GraphError> {
    let perm = canonical_permutation(g)?;
    Ok(g.permuted(&perm))
}

/// `perm[i]` is the vertex placed at canonical position `i`.
pub fn canonical_permutation(g: &Graph) -> Result<Vec<usize>, GraphError> {
    let n = g.order();
    if n > CANONICAL_CAP {
        return Err(GraphError::CanonicalCap { n, cap: CANONICAL_CAP });
    }
    let colors = refine(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colors[v], v));
    let cell_of_position: Vec<usize> = order.iter().map(|&v| colors[v]).collect();

    let mut search = Search {
        g,
        colors: &colors,
        cell_of_position: &cell_of_position,
        perm: Vec::with_capacity(n),
        used: 0,
        code: Vec::with_capacity(n * n / 2),
        best_code: None,
        best_perm: Vec::new(),
    };
    search.run();
    Ok(search.best_perm)
}

/// Iterated degree refinement. Returns a color per vertex; colors are
/// isomorphism-invariant and numbered by sorted signature.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = count_distinct(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| sorted.binary_search(s).unwrap_or(0)).collect();
        let next_classes = sorted.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_distinct(xs: &[usize]) -> usize {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    g: &'a Graph,
    colors: &'a [usize],
    cell_of_position: &'a [usize],
    perm: Vec<usize>,
    used: u64,
    code: Vec<bool>,
    best_code: Option<Vec<bool>>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self) {
        let n = self.g.order();
        let pos = self.perm.len();
        if pos == n {
            self.best_code = Some(self.code.clone());
            self.best_perm = self.perm.clone();
            return;
        }
        let cell = self.cell_of_position[pos];
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.colors[v] != cell {
                continue;
            }
            let mark = self.code.len();
            // row `pos` of the lower triangle; larger codes put edges early
            for &u in &self.perm {
                self.code.push(!self.g.has_edge(v, u));
            }
            let keep = match &self.best_code {
                None => true,
                Some(best) => self.code[..] <= best[..self.code.len()],
            };
            if keep {
                self.perm.push(v);
                self.used |= 1 << v;
                self.run();
                self.used &= !(1 << v);
                self.perm.pop();
            }
            self.code.truncate(mark);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for v in 0..n {
                if !cur.contains(&v) {
                    cur.push(v);
                    rec(cur, n, out);
                    cur.pop();
                }
            }
        }
        let mut out = vec![];
        rec(&mut vec![], n, &mut out);
        out
    }

    fn labeled_graphs(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len())
            .map(|mask| {
                let e: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                Graph::new(n, &e).unwrap()
            })
            .collect()
    }

    /// Oracle: the minimum graph6 string over every relabeling.
    fn brute_canonical(g: &Graph) -> String {
        all_perms(g.order())
            .iter()
            .map(|p| emit_graph6(&g.permuted(p)))
            .min()
            .unwrap()
    }

    #[test]
    fn relabeling_invariance_p3() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let c = canonical_form(&p3).unwrap();
        for p in all_perms(3) {
            assert_eq!(canonical_form(&p3.permuted(&p)).unwrap(), c);
        }
    }

    #[test]
    fn p4_differs_from_claw() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let claw = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&claw).unwrap());
    }

    #[test]
    fn class_counts_match_permutation_oracle() {
        use std::collections::HashSet;
        for n in 1..=5 {
            let graphs = labeled_graphs(n);
            let fast: HashSet<Vec<u8>> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
            let slow: HashSet<String> = graphs.iter().map(brute_canonical).collect();
            assert_eq!(fast.len(), slow.len(), "n={n}");
            // equal canonical forms exactly when the oracle agrees
            for g in &graphs {
                for h in graphs.iter().step_by(7) {
                    assert_eq!(
                        canonical_form(g).unwrap() == canonical_form(h).unwrap(),
                        brute_canonical(g) == brute_canonical(h)
                    );
                }
            }
        }
        let four: HashSet<Vec<u8>> = labeled_graphs(4).iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(four.len(), 11);
        let conn: HashSet<Vec<u8>> = labeled_graphs(4)
            .iter()
            .filter(|g| g.is_connected())
            .map(|g| canonical_form(g).unwrap())
            .collect();
        assert_eq!(conn.len(), 6);
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(brute_canonical(&c5), brute_canonical(&c5.complement()));
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&c5.complement()).unwrap());
    }

    #[test]
    fn cap_enforced() {
        let g = Graph::empty(11).unwrap();
        assert!(matches!(canonical_form(&g), Err(GraphError::CanonicalCap { .. })));
        assert!(canonical_form(&Graph::empty(10).unwrap()).is_ok());
    }
}
