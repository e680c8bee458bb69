//! Immutable simple undirected graphs on at most 64 vertices.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;
use crate::vertex_set::VertexSet;

pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph whose adjacency rows are [`VertexSet`]s.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::InvalidOrder(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, &[])
    }

    /// Builds a graph from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::InvalidOrder(n));
        }
        let all = VertexSet::full(n);
        for (v, row) in rows.iter().enumerate() {
            if !row.is_subset(all) {
                let bad = (*row - all).first().unwrap_or(0);
                return Err(GraphError::VertexOutOfRange { vertex: bad, n });
            }
            if row.contains(v) {
                return Err(GraphError::Loop(v));
            }
            for u in row.iter() {
                if !rows[u].contains(v) {
                    return Err(GraphError::EdgeAbsent(u, v));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<VertexSet>) -> Self {
        Graph {
            n: rows.len(),
            adj: rows,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Unordered vertex pairs that are not edges.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Vertices adjacent to all others.
    pub fn universal_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) + 1 == self.n).collect()
    }

    /// `N[s] = s ∪ N(s)`.
    #[inline]
    pub fn closed_neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        let mut out = s;
        for v in s.iter() {
            out |= self.adj[v];
        }
        out
    }

    /// `N_k[s]`: every vertex within distance `k` of some vertex of `s`.
    pub fn closed_neighborhood(&self, s: VertexSet, k: usize) -> VertexSet {
        let mut cur = s;
        let mut frontier = s;
        for _ in 0..k {
            if frontier.is_empty() {
                break;
            }
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            frontier = next - cur;
            cur |= next;
        }
        cur
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let rows = (0..self.n)
            .map(|v| all - self.adj[v] - VertexSet::singleton(v))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// `G²`: vertices at distance one or two become adjacent.
    pub fn square(&self) -> Graph {
        let rows = (0..self.n)
            .map(|v| self.closed_neighborhood(VertexSet::singleton(v), 2) - VertexSet::singleton(v))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// `G^k` for `k >= 1`.
    pub fn power(&self, k: usize) -> Graph {
        let rows = (0..self.n)
            .map(|v| self.closed_neighborhood(VertexSet::singleton(v), k) - VertexSet::singleton(v))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(GraphError::EdgeAbsent(u, v));
        }
        let mut rows = self.adj.clone();
        rows[u].remove(v);
        rows[v].remove(u);
        Ok(Graph::from_rows_unchecked(rows))
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let mut rows = self.adj.clone();
        rows[u].insert(v);
        rows[v].insert(u);
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Subgraph induced by `s`; the new vertex `i` is the `i`-th smallest member of `s`.
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let rows = map
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|u| pos[u]).collect())
            .collect();
        (Graph::from_rows_unchecked(rows), map)
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut inv = vec![0usize; self.n];
        for (i, &v) in perm.iter().enumerate() {
            inv[v] = i;
        }
        let rows = perm
            .iter()
            .map(|&v| self.adj[v].iter().map(|u| inv[u]).collect())
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// Single-source BFS distances; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for u in self.adj[v].iter() {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn distances(&self) -> DistanceMatrix {
        let mut entries = Vec::with_capacity(self.n * self.n);
        for v in 0..self.n {
            entries.extend(self.bfs(v).into_iter().map(Distance::from));
        }
        DistanceMatrix { n: self.n, entries }
    }

    pub fn distance(&self, u: usize, v: usize) -> Distance {
        self.bfs(u)[v].into()
    }

    pub fn eccentricity(&self, v: usize) -> Distance {
        self.bfs(v)
            .into_iter()
            .map(Distance::from)
            .max()
            .unwrap_or(Distance::Finite(0))
    }

    pub fn radius(&self) -> Distance {
        (0..self.n)
            .map(|v| self.eccentricity(v))
            .min()
            .unwrap_or(Distance::Finite(0))
    }

    pub fn diameter(&self) -> Distance {
        (0..self.n)
            .map(|v| self.eccentricity(v))
            .max()
            .unwrap_or(Distance::Finite(0))
    }

    /// Largest finite distance between two vertices of a common component.
    pub fn max_component_diameter(&self) -> usize {
        (0..self.n)
            .flat_map(|v| self.bfs(v).into_iter().flatten())
            .max()
            .unwrap_or(0)
    }

    pub fn component_of(&self, v: usize) -> VertexSet {
        self.closed_neighborhood(VertexSet::singleton(v), self.n)
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in 0..self.n {
            if !seen.contains(v) {
                let c = self.component_of(v);
                seen |= c;
                out.push(c);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.n
    }

    /// Two-coloring of a bipartite graph as `(side of vertex 0's class, other side)`
    /// per component; `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = vec![None::<bool>; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap_or(false);
                for u in self.adj[v].iter() {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            queue.push_back(u);
                        }
                        Some(su) if su == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let a: VertexSet = (0..self.n).filter(|&v| side[v] == Some(false)).collect();
        Some((a, self.vertices() - a))
    }

    /// Edge-list text: `n m` then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| GraphError::EdgeList("missing header line".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines.by_ref().take(m) {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(GraphError::EdgeList(format!(
                "header declares {m} edges, found {}",
                edges.len()
            )));
        }
        if lines.next().is_some() {
            return Err(GraphError::EdgeList("trailing lines after edge list".into()));
        }
        Graph::new(n, &edges)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(GraphError::EdgeList(format!("expected two integers, got `{line}`"))),
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A graph distance; disconnected pairs are [`Distance::Unreachable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl From<Option<usize>> for Distance {
    fn from(d: Option<usize>) -> Self {
        d.map_or(Distance::Unreachable, Distance::Finite)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => write!(f, "unreachable"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.entries[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(0, &[]), Err(GraphError::InvalidOrder(0)));
        assert_eq!(Graph::new(65, &[]), Err(GraphError::InvalidOrder(65)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::Loop(1)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn k1_basics() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.max_degree(), 0);
        assert!(g.is_connected());
        assert_eq!(g.radius(), Distance::Finite(0));
        assert_eq!(g.square(), g);
    }

    #[test]
    fn complement_and_square() {
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.complement(), Graph::empty(4).unwrap());
        let p4 = path(4);
        assert_eq!(p4.complement().complement(), p4);
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(path(3).square(), k3);
    }

    #[test]
    fn square_of_p5_matches_bfs() {
        let p5 = path(5);
        let sq = p5.square();
        for u in 0..5 {
            let d = p5.bfs(u);
            for v in 0..5 {
                let expect = u != v && d[v].is_some_and(|d| d <= 2);
                assert_eq!(sq.has_edge(u, v), expect, "{u} {v}");
            }
        }
    }

    #[test]
    fn remove_edge_cases() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = c4.remove_edge(0, 1).unwrap();
        assert_eq!(p.edges(), vec![(0, 3), (1, 2), (2, 3)]);
        assert!(p.is_connected());
        let k2 = path(2);
        let e = k2.remove_edge(0, 1).unwrap();
        assert_eq!(e.size(), 0);
        assert!(!e.is_connected());
        assert_eq!(k2.remove_edge(0, 0), Err(GraphError::EdgeAbsent(0, 0)));
        assert_eq!(e.remove_edge(0, 1), Err(GraphError::EdgeAbsent(0, 1)));
    }

    #[test]
    fn distances_and_metrics() {
        let p5 = path(5);
        let d = p5.distances();
        assert_eq!(d.get(0, 4), Distance::Finite(4));
        assert_eq!(p5.radius(), Distance::Finite(2));
        assert_eq!(p5.diameter(), Distance::Finite(4));
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(g.distances().get(0, 2), Distance::Unreachable);
        assert_eq!(g.diameter(), Distance::Unreachable);
        let star = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(star.eccentricity(0), Distance::Finite(1));
        assert_eq!(star.max_degree(), 5);
    }

    #[test]
    fn neighborhoods() {
        let p5 = path(5);
        assert_eq!(
            p5.closed_neighborhood(VertexSet::singleton(2), 1).to_vec(),
            vec![1, 2, 3]
        );
        assert_eq!(p5.closed_neighborhood(VertexSet::EMPTY, 3), VertexSet::EMPTY);
        assert_eq!(
            p5.closed_neighborhood(VertexSet::singleton(0), 0),
            VertexSet::singleton(0)
        );
    }

    #[test]
    fn components_and_connectivity() {
        let three_k2 = Graph::new(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let comps = three_k2.components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 2));
        assert!(path(4).is_connected());
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(!star.complement().is_connected());
        let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(c6.min_degree(), 2);
    }

    #[test]
    fn edge_list_roundtrip_and_errors() {
        let g = path(4);
        let text = g.to_edge_list();
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 x\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }

    #[test]
    fn induced_and_permuted() {
        let p5 = path(5);
        let (h, map) = p5.induced(VertexSet::from_vertices([1, 2, 4]));
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(h.edges(), vec![(0, 1)]);
        let q = p5.permuted(&[4, 3, 2, 1, 0]);
        assert_eq!(q, p5);
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(c5.bipartition().is_none());
        let (a, b) = path(4).bipartition().unwrap();
        assert_eq!(a.to_vec(), vec![0, 2]);
        assert_eq!(b.to_vec(), vec![1, 3]);
    }
}
