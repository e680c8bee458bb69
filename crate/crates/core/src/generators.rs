//! Graph families, products, and the two named example graphs.

use std::fmt;
use std::str::FromStr;

use crate::error::GraphError;
use crate::graph::{Graph, MAX_VERTICES};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,n}`; the center is vertex 0.
    Star(usize),
    Empty(usize),
    Hypercube(usize),
}

impl Family {
    pub fn order(self) -> Option<usize> {
        match self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) | Family::Empty(n) => Some(n),
            Family::Star(n) => n.checked_add(1),
            Family::Hypercube(d) => (d < 7).then(|| 1usize << d),
        }
    }

    fn validate(self) -> Result<usize, GraphError> {
        let bad = || GraphError::InvalidFamily(self.to_string());
        let ok = match self {
            Family::Path(n) | Family::Complete(n) | Family::Empty(n) => n >= 1,
            Family::Cycle(n) => n >= 3,
            Family::Star(n) => n >= 1,
            Family::Hypercube(d) => d >= 1,
        };
        if !ok {
            return Err(bad());
        }
        match self.order() {
            Some(order) if order <= MAX_VERTICES => Ok(order),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, n) = match *self {
            Family::Path(n) => ("path", n),
            Family::Cycle(n) => ("cycle", n),
            Family::Complete(n) => ("complete", n),
            Family::Star(n) => ("star", n),
            Family::Empty(n) => ("empty", n),
            Family::Hypercube(n) => ("hypercube", n),
        };
        write!(f, "{name}:{n}")
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        let bad = || GraphError::InvalidFamily(s.to_string());
        let (name, param) = s.trim().split_once(':').ok_or_else(bad)?;
        let n: usize = param.trim().parse().map_err(|_| bad())?;
        let fam = match name.trim() {
            "path" => Family::Path(n),
            "cycle" => Family::Cycle(n),
            "complete" => Family::Complete(n),
            "star" => Family::Star(n),
            "empty" => Family::Empty(n),
            "hypercube" => Family::Hypercube(n),
            _ => return Err(bad()),
        };
        fam.validate()?;
        Ok(fam)
    }
}

pub fn family(spec: Family) -> Result<Graph, GraphError> {
    let n = spec.validate()?;
    let mut edges = Vec::new();
    match spec {
        Family::Path(_) => edges.extend((1..n).map(|i| (i - 1, i))),
        Family::Cycle(_) => {
            edges.extend((1..n).map(|i| (i - 1, i)));
            edges.push((n - 1, 0));
        }
        Family::Complete(_) => {
            for i in 0..n {
                edges.extend((i + 1..n).map(|j| (i, j)));
            }
        }
        Family::Star(_) => edges.extend((1..n).map(|i| (0, i))),
        Family::Empty(_) => {}
        Family::Hypercube(d) => {
            for v in 0..n {
                for b in 0..d {
                    let u = v ^ (1 << b);
                    if u > v {
                        edges.push((v, u));
                    }
                }
            }
        }
    }
    Graph::new(n, &edges)
}

fn product_order(what: &'static str, a: usize, b: usize) -> Result<usize, GraphError> {
    let order = a * b;
    if order > MAX_VERTICES {
        return Err(GraphError::TooLarge { what, order });
    }
    Ok(order)
}

/// Builds a product on `V(G) × V(H)` with `(u, v) ↦ u·|H| + v`.
fn product(
    what: &'static str,
    g: &Graph,
    h: &Graph,
    adjacent: impl Fn(usize, usize, usize, usize) -> bool,
) -> Result<Graph, GraphError> {
    let (m, k) = (g.order(), h.order());
    let order = product_order(what, m, k)?;
    let mut rows = vec![VertexSet::EMPTY; order];
    for a in 0..order {
        for b in a + 1..order {
            let (u, v) = (a / k, a % k);
            let (x, y) = (b / k, b % k);
            if adjacent(u, v, x, y) {
                rows[a].insert(b);
                rows[b].insert(a);
            }
        }
    }
    Graph::from_rows(rows)
}

/// `G □ H`
pub fn cartesian(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    product("cartesian product", g, h, |u, v, x, y| {
        (u == x && h.has_edge(v, y)) || (g.has_edge(u, x) && v == y)
    })
}

/// `G ⊠ H`
pub fn strong(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    product("strong product", g, h, |u, v, x, y| {
        (u == x && h.has_edge(v, y)) || (g.has_edge(u, x) && v == y) || (g.has_edge(u, x) && h.has_edge(v, y))
    })
}

/// `G[H]`
pub fn lexicographic(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    product("lexicographic product", g, h, |u, v, x, y| {
        g.has_edge(u, x) || (u == x && h.has_edge(v, y))
    })
}

/// `G ∘ H`: vertices of `G` first, then copy `i` of `H` joined to vertex `i`.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (m, k) = (g.order(), h.order());
    let order = m * (1 + k);
    if order > MAX_VERTICES {
        return Err(GraphError::TooLarge {
            what: "corona product",
            order,
        });
    }
    let mut edges = g.edges();
    for i in 0..m {
        let base = m + i * k;
        edges.extend(h.edges().into_iter().map(|(a, b)| (base + a, base + b)));
        edges.extend((0..k).map(|a| (i, base + a)));
    }
    Graph::new(order, &edges)
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let order = g.order() + h.order();
    if order > MAX_VERTICES {
        return Err(GraphError::TooLarge {
            what: "disjoint union",
            order,
        });
    }
    let off = g.order();
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(a, b)| (a + off, b + off)));
    Graph::new(order, &edges)
}

/// Named anchor vertices of the edge-removal example graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Figure1Labels {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub x: usize,
    pub y: usize,
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Path of `len` new vertices hanging off `from`; returns the far end.
    fn arm(&mut self, from: usize, len: usize) -> usize {
        let mut prev = from;
        for _ in 0..len {
            let next = self.vertex();
            self.edges.push((prev, next));
            prev = next;
        }
        prev
    }
}

/// The 52-vertex graph whose edge `vw` has a removal gap of two.
///
/// Hub `u` carries six pendant paths of length 4 and is adjacent to `v`;
/// `v` reaches `w` directly and through the detour `v_1 v_2 v_3`; `w` and
/// `x` each carry four pendant paths of length 2 and are joined by a path of
/// length 3; a final path of length 3 runs from `x` to `y`.
pub fn figure1_graph() -> (Graph, Figure1Labels) {
    let mut b = Builder {
        n: 0,
        edges: Vec::new(),
    };
    let u = b.vertex();
    for _ in 0..6 {
        b.arm(u, 4);
    }
    let v = b.arm(u, 1);
    let detour_end = b.arm(v, 3);
    let w = b.arm(detour_end, 1);
    b.edges.push((v, w));
    for _ in 0..4 {
        b.arm(w, 2);
    }
    let x = b.arm(w, 3);
    for _ in 0..4 {
        b.arm(x, 2);
    }
    let y = b.arm(x, 3);
    let g = Graph::new(b.n, &b.edges).unwrap_or_else(|e| unreachable!("figure1: {e}"));
    (g, Figure1Labels { u, v, w, x, y })
}

/// The 11-vertex graph with game value 3 whose spanning trees all have value at least 4.
///
/// Returns the graph and the hub `v`. Vertex order: `v, u1, u2, u3, w1, w2,
/// x1, x2, y1, y2, z`.
pub fn figure2_graph() -> (Graph, usize) {
    const V: usize = 0;
    const U: [usize; 3] = [1, 2, 3];
    const W1: usize = 4;
    const W2: usize = 5;
    const X1: usize = 6;
    const X2: usize = 7;
    const Y1: usize = 8;
    const Y2: usize = 9;
    const Z: usize = 10;
    let mut edges: Vec<(usize, usize)> = U.iter().map(|&u| (V, u)).collect();
    edges.extend([(V, W1), (V, W2)]);
    edges.extend([(W1, X1), (X1, Y1), (Y1, Z)]);
    edges.extend([(W2, X2), (X2, Y2), (Y2, Z)]);
    edges.extend([(X1, Y2), (Y2, Y1), (Y1, X2)]);
    let g = Graph::new(11, &edges).unwrap_or_else(|e| unreachable!("figure2: {e}"));
    (g, V)
}

/// Parses graph expressions such as `path:9`, `hypercube:4`,
/// `cartesian(path:3,cycle:4)`, `corona(complete:2,complete:1)`,
/// `union(path:3,empty:4)`, `complement(star:4)`, `figure1`.
pub fn parse_graph_expr(s: &str) -> Result<Graph, GraphError> {
    let mut p = ExprParser { src: s, pos: 0 };
    let g = p.expr()?;
    p.skip_ws();
    if p.pos != s.len() {
        return Err(GraphError::InvalidFamily(s.to_string()));
    }
    Ok(g)
}

struct ExprParser<'a> {
    src: &'a str,
    pos: usize,
}

impl ExprParser<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn err(&self) -> GraphError {
        GraphError::InvalidFamily(self.src.to_string())
    }

    fn eat(&mut self, c: char) -> Result<(), GraphError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err())
        }
    }

    fn token(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == ':' || c == '_' || c == '-'))
            .unwrap_or(rest.len());
        self.pos += len;
        &self.src[start..start + len]
    }

    fn expr(&mut self) -> Result<Graph, GraphError> {
        let tok = self.token().to_string();
        match tok.as_str() {
            "figure1" => return Ok(figure1_graph().0),
            "figure2" => return Ok(figure2_graph().0),
            "" => return Err(self.err()),
            _ => {}
        }
        if tok.contains(':') {
            return family(tok.parse()?);
        }
        self.eat('(')?;
        let a = self.expr()?;
        let unary = |f: fn(&Graph) -> Graph, p: &mut Self| -> Result<Graph, GraphError> {
            p.eat(')')?;
            Ok(f(&a))
        };
        match tok.as_str() {
            "complement" => return unary(Graph::complement, self),
            "square" => return unary(Graph::square, self),
            _ => {}
        }
        self.eat(',')?;
        let b = self.expr()?;
        self.eat(')')?;
        match tok.as_str() {
            "cartesian" => cartesian(&a, &b),
            "strong" => strong(&a, &b),
            "lexicographic" => lexicographic(&a, &b),
            "corona" => corona(&a, &b),
            "union" => disjoint_union(&a, &b),
            _ => Err(self.err()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Distance;

    fn f(s: &str) -> Graph {
        parse_graph_expr(s).unwrap()
    }

    #[test]
    fn families() {
        assert_eq!(f("path:1"), Graph::new(1, &[]).unwrap());
        assert_eq!(
            f("hypercube:2"),
            Graph::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
        );
        let star = f("star:3");
        assert_eq!(star.order(), 4);
        assert_eq!(star.degree(0), 3);
        assert!("cycle:2".parse::<Family>().is_err());
        assert!("hypercube:7".parse::<Family>().is_err());
        assert!("path:0".parse::<Family>().is_err());
        assert!("wheel:5".parse::<Family>().is_err());
    }

    #[test]
    fn small_products() {
        let c4 = f("cycle:4");
        let k4 = f("complete:4");
        let cart = f("cartesian(complete:2,complete:2)");
        assert_eq!(
            crate::canon::canonical_form(&cart).unwrap(),
            crate::canon::canonical_form(&c4).unwrap()
        );
        assert_eq!(f("strong(complete:2,complete:2)"), k4);
        let lex = f("lexicographic(complete:2,empty:2)");
        assert_eq!(
            crate::canon::canonical_form(&lex).unwrap(),
            crate::canon::canonical_form(&c4).unwrap()
        );
    }

    #[test]
    fn corona_and_union() {
        assert_eq!(f("corona(complete:1,complete:2)"), f("complete:3"));
        let p4 = f("corona(complete:2,complete:1)");
        assert_eq!(p4.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        assert_eq!(f("corona(path:3,path:2)").order(), 9);
        let u = f("union(complete:2,complete:1)");
        assert_eq!((u.order(), u.size()), (3, 1));
        let three = f("union(complete:2,union(complete:2,complete:2))");
        assert_eq!(three.components().len(), 3);
    }

    #[test]
    fn size_overflow() {
        assert!(matches!(
            parse_graph_expr("cartesian(path:9,path:8)"),
            Err(GraphError::TooLarge { .. })
        ));
        assert!(matches!(
            parse_graph_expr("corona(path:8,path:8)"),
            Err(GraphError::TooLarge { .. })
        ));
    }

    #[test]
    fn hypercube_is_iterated_cartesian() {
        for d in 2..=6 {
            let q = family(Family::Hypercube(d)).unwrap();
            let prev = family(Family::Hypercube(d - 1)).unwrap();
            assert_eq!(cartesian(&prev, &f("complete:2")).unwrap(), q);
            assert!((0..q.order()).all(|v| q.degree(v) == d));
        }
    }

    #[test]
    fn product_inclusions() {
        let factors = ["complete:2", "path:3", "path:4", "cycle:3", "cycle:4", "star:3"];
        for a in factors {
            for b in factors {
                let (g, h) = (f(a), f(b));
                if g.order() * h.order() > 20 {
                    continue;
                }
                let c = cartesian(&g, &h).unwrap();
                let s = strong(&g, &h).unwrap();
                let l = lexicographic(&g, &h).unwrap();
                assert!(c.edges().iter().all(|&(u, v)| s.has_edge(u, v)));
                assert!(s.edges().iter().all(|&(u, v)| l.has_edge(u, v)));
            }
        }
    }

    #[test]
    fn figure1_shape() {
        let (g, l) = figure1_graph();
        assert_eq!(g.order(), 52);
        assert!(g.is_connected());
        assert_eq!(g.degree(l.u), 7);
        assert_eq!(g.distance(l.u, l.y), Distance::Finite(8));
        let cut = g.remove_edge(l.v, l.w).unwrap();
        assert!(cut.is_connected());
        // the scripted cover: within 4 of u, 2 of x, or 0 of y
        let cover = g.closed_neighborhood(VertexSet::singleton(l.u), 4)
            | g.closed_neighborhood(VertexSet::singleton(l.x), 2)
            | VertexSet::singleton(l.y);
        assert_eq!(cover, g.vertices());
    }

    #[test]
    fn figure2_shape() {
        let (g, v) = figure2_graph();
        assert_eq!(g.order(), 11);
        assert_eq!(g.degree(v), 5);
        assert_eq!(g.max_degree(), 5);
        assert!(g.max_degree() + 3 <= g.order());
        let n1 = g.closed_neighborhood(VertexSet::singleton(v), 1);
        let n2 = g.closed_neighborhood(VertexSet::singleton(v), 2);
        let far = g.vertices() - n2;
        assert_eq!(far.to_vec(), vec![8, 9, 10]);
        for y in (g.vertices() - n1).iter() {
            let left = far - g.closed_neighbors_of_set(VertexSet::singleton(y));
            assert!(left.len() <= 1, "vertex {y}");
        }
    }

    #[test]
    fn expression_errors() {
        assert!(parse_graph_expr("cartesian(path:3)").is_err());
        assert!(parse_graph_expr("path:3 extra").is_err());
        assert!(parse_graph_expr("frobnicate(path:3,path:3)").is_err());
        assert!(parse_graph_expr("").is_err());
    }
}
