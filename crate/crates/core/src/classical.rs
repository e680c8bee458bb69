//! Non-game parameters: the burning number, distance-k domination and the
//! bipartite-square construction on trees.

use rustc_hash::FxHashSet;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Sources `x_1..x_k` of a burning process; `x_i` burns everything within
/// distance `k - i` by the end of round `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurningSequence(pub Vec<usize>);

impl BurningSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `∪ N_{k-i}[x_i]`.
    pub fn covered(&self, g: &Graph) -> VertexSet {
        let k = self.0.len();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &x)| g.closed_neighborhood(VertexSet::singleton(x), k - 1 - i))
            .fold(VertexSet::EMPTY, |a, b| a | b)
    }

    pub fn certifies(&self, g: &Graph) -> bool {
        self.covered(g) == g.vertices()
    }
}

/// `balls[v][r] = N_r[v]`, saturating once the ball stops growing.
struct Balls(Vec<Vec<VertexSet>>);

impl Balls {
    fn new(g: &Graph) -> Self {
        Balls(
            (0..g.order())
                .map(|v| {
                    let mut layers = vec![VertexSet::singleton(v)];
                    loop {
                        let last = layers[layers.len() - 1];
                        let next = g.closed_neighbors_of_set(last);
                        if next == last {
                            break;
                        }
                        layers.push(next);
                    }
                    layers
                })
                .collect(),
        )
    }

    #[inline]
    fn get(&self, v: usize, r: usize) -> VertexSet {
        let layers = &self.0[v];
        layers[r.min(layers.len() - 1)]
    }

    /// Number of candidate centers able to cover `u` with some radius in `radii`.
    fn options(&self, u: usize, radii: u64) -> usize {
        VertexSet(radii).iter().map(|r| self.get(u, r).len()).sum()
    }

    /// Greedy set of members of `s` pairwise farther apart than `2r`; each
    /// needs its own ball of radius at most `r`.
    fn packing(&self, s: VertexSet, r: usize) -> usize {
        let mut blocked = VertexSet::EMPTY;
        let mut count = 0;
        for u in s {
            if !blocked.contains(u) {
                count += 1;
                blocked |= self.get(u, 2 * r);
            }
        }
        count
    }
}

/// Exact burning number with a certifying sequence.
pub fn burning_number(g: &Graph) -> (usize, BurningSequence) {
    if g.order() == 0 {
        return (0, BurningSequence(vec![]));
    }
    let balls = Balls::new(g);
    for k in 1..=g.order() {
        let mut search = CoverSearch {
            balls: &balls,
            failed: FxHashSet::default(),
            centers: vec![usize::MAX; k],
        };
        if search.cover(g.vertices(), (1u64 << k) - 1) {
            let seq: Vec<usize> = (0..k).map(|i| search.centers[k - 1 - i]).collect();
            return (k, BurningSequence(seq));
        }
    }
    unreachable!("k = n always admits a cover")
}

struct CoverSearch<'a> {
    balls: &'a Balls,
    failed: FxHashSet<(u64, u64)>,
    /// `centers[r]` is the center of the radius-`r` ball.
    centers: Vec<usize>,
}

impl CoverSearch<'_> {
    /// Can balls with the radii in mask `radii` (each used once) cover `uncovered`?
    fn cover(&mut self, uncovered: VertexSet, radii: u64) -> bool {
        if uncovered.is_empty() {
            // unused radii are free: any center works
            for r in VertexSet(radii) {
                self.centers[r] = 0;
            }
            return true;
        }
        if radii == 0 {
            return false;
        }
        let key = (uncovered.bits(), radii);
        if self.failed.contains(&key) {
            return false;
        }
        let max_r = 63 - radii.leading_zeros() as usize;
        if self.balls.packing(uncovered, max_r) > radii.count_ones() as usize {
            self.failed.insert(key);
            return false;
        }
        // the uncovered vertex with the fewest ways to be covered
        let u = uncovered
            .iter()
            .min_by_key(|&u| self.balls.options(u, radii))
            .unwrap_or(0);
        for r in VertexSet(radii).iter().rev() {
            for x in self.balls.get(u, r) {
                self.centers[r] = x;
                if self.cover(uncovered - self.balls.get(x, r), radii & !(1 << r)) {
                    return true;
                }
            }
        }
        self.failed.insert(key);
        false
    }
}

/// Distance-`k` domination number; on a disconnected graph the sum over
/// components.
pub fn gamma_k(g: &Graph, k: usize) -> usize {
    assert!(k >= 1, "distance domination needs k >= 1");
    let balls = Balls::new(g);
    g.components()
        .into_iter()
        .map(|comp| {
            (1..=comp.len())
                .find(|&size| {
                    let mut search = DomSearch {
                        balls: &balls,
                        k,
                        failed: FxHashSet::default(),
                    };
                    search.dominate(comp, size)
                })
                .unwrap_or(comp.len())
        })
        .sum()
}

struct DomSearch<'a> {
    balls: &'a Balls,
    k: usize,
    failed: FxHashSet<(u64, usize)>,
}

impl DomSearch<'_> {
    fn dominate(&mut self, uncovered: VertexSet, budget: usize) -> bool {
        if uncovered.is_empty() {
            return true;
        }
        if budget == 0 || self.balls.packing(uncovered, self.k) > budget {
            return false;
        }
        if self.failed.contains(&(uncovered.bits(), budget)) {
            return false;
        }
        let u = uncovered
            .iter()
            .min_by_key(|&u| self.balls.get(u, self.k).len())
            .unwrap_or(0);
        for x in self.balls.get(u, self.k) {
            if self.dominate(uncovered - self.balls.get(x, self.k), budget - 1) {
                return true;
            }
        }
        self.failed.insert((uncovered.bits(), budget));
        false
    }
}

/// The pair `(H, X)` for a tree `t`: `X` is the smaller partite set (ties go
/// to the side containing vertex 0) and `H` is the subgraph of `t²` induced
/// by `X`. The returned map sends `H`-vertex `i` to its `t`-vertex.
pub fn bipartite_square_pair(t: &Graph) -> Result<(Graph, VertexSet, Vec<usize>), GraphError> {
    if !t.is_tree() {
        return Err(GraphError::NotATree);
    }
    let (a, b) = t.bipartition().ok_or(GraphError::NotATree)?;
    // a single vertex has an empty second side; keep the vertex
    let x = if !b.is_empty() && b.len() < a.len() { b } else { a };
    let (h, map) = t.square().induced(x);
    Ok((h, x, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{family, Family};

    fn g(f: Family) -> Graph {
        family(f).unwrap()
    }

    /// Oracle: try every sequence of length k.
    fn naive_burning_number(g: &Graph) -> usize {
        let n = g.order();
        (1..=n)
            .find(|&k| {
                let mut idx = vec![0usize; k];
                loop {
                    if BurningSequence(idx.clone()).certifies(g) {
                        return true;
                    }
                    let mut i = 0;
                    while i < k {
                        idx[i] += 1;
                        if idx[i] < n {
                            break;
                        }
                        idx[i] = 0;
                        i += 1;
                    }
                    if i == k {
                        return false;
                    }
                }
            })
            .unwrap()
    }

    fn naive_gamma(g: &Graph, k: usize) -> usize {
        (0u64..1 << g.order())
            .filter(|&m| g.closed_neighborhood(VertexSet(m), k) == g.vertices())
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn named_burning_numbers() {
        assert_eq!(burning_number(&g(Family::Path(9))).0, 3);
        assert_eq!(burning_number(&g(Family::Path(10))).0, 4);
        assert_eq!(burning_number(&g(Family::Path(4))).0, 2);
        assert_eq!(burning_number(&g(Family::Path(1))).0, 1);
        assert_eq!(burning_number(&g(Family::Empty(3))).0, 3);
        for n in 1..=30 {
            let p = g(Family::Path(n));
            let (b, seq) = burning_number(&p);
            assert_eq!(b, (1..).find(|k| k * k >= n).unwrap(), "P_{n}");
            assert!(seq.certifies(&p));
        }
    }

    #[test]
    fn burning_number_matches_oracle() {
        use crate::corpus::isomorphism_classes;
        for n in 1..=6 {
            for h in isomorphism_classes(n) {
                let (b, seq) = burning_number(&h);
                assert!(seq.certifies(&h));
                assert_eq!(b, seq.len());
                assert_eq!(b, naive_burning_number(&h), "{}", crate::graph6::emit_graph6(&h));
            }
        }
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_k(&g(Family::Path(3)), 1), 1);
        assert_eq!(gamma_k(&g(Family::Path(5)), 2), 1);
        assert_eq!(gamma_k(&g(Family::Cycle(6)), 1), 2);
        assert_eq!(gamma_k(&g(Family::Empty(4)), 3), 4);
        use crate::corpus::isomorphism_classes;
        for n in 1..=6 {
            for h in isomorphism_classes(n) {
                for k in 1..=3 {
                    assert_eq!(gamma_k(&h, k), naive_gamma(&h, k));
                }
            }
        }
    }

    #[test]
    fn bipartite_square() {
        let (h, x, _) = bipartite_square_pair(&g(Family::Path(4))).unwrap();
        assert_eq!(x, VertexSet::from_vertices([0, 2]));
        assert_eq!(h.edges(), vec![(0, 1)]);
        // the smaller side of a star is its center
        let (h, x, map) = bipartite_square_pair(&g(Family::Star(3))).unwrap();
        assert_eq!(x, VertexSet::singleton(0));
        assert_eq!(map, vec![0]);
        assert_eq!(h.order(), 1);
        // equal sides: the one holding vertex 0
        let (_, x, _) = bipartite_square_pair(&g(Family::Path(2))).unwrap();
        assert_eq!(
            bipartite_square_pair(&g(Family::Path(1))).unwrap().1,
            VertexSet::singleton(0)
        );
        assert_eq!(x, VertexSet::singleton(0));
        assert_eq!(
            bipartite_square_pair(&g(Family::Cycle(4))).unwrap_err(),
            GraphError::NotATree
        );
    }
}
