//! The catalog: one definition per verified result.

use burngame::canon::canonical_form;
use burngame::classical::{bipartite_square_pair, burning_number};
use burngame::engine::{principal_variation, Player};
use burngame::spanning::{kirchhoff_count, spanning_trees};
use burngame::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use crate::check::{Assertion, CheckDefinition, CheckKind};
use crate::facts::Facts;
use crate::report::{Relation, TraceRecord};

use Relation::{Eq, Ge, Le};

const B: Player = Player::Burner;
const S: Player = Player::Staller;

/// Spanning-tree enumeration limit for the tree-reduction check.
pub const SPANNING_TREE_LIMIT: u64 = 50_000;

/// Numbered results that must each be covered by some registered check.
pub const COVERAGE_MANIFEST: &[&str] = &[
    "2.1",
    "2.2",
    "2.3",
    "2.4",
    "2.6",
    "2.7",
    "2.9",
    "2.10",
    "2.11",
    "2.12",
    "4.1",
    "4.2",
    "4.3",
    "4.4",
    "4.5",
    "4.6",
    "4.7",
    "cor-4.x",
    "cor-4.y",
    "5.1",
    "5.2",
    "5.3",
    "cycles",
    "5.5-inner",
    "6.1",
    "6.2",
    "6.3",
    "6.4",
    "ex-2.8",
];

macro_rules! graph_check {
    ($id:expr, $covers:expr, $citation:expr, $applies:expr, $evaluate:expr) => {
        CheckDefinition {
            id: $id,
            covers: $covers,
            citation: $citation,
            kind: CheckKind::Graph {
                applies: $applies,
                evaluate: $evaluate,
            },
            exploratory: false,
        }
    };
}

pub static CATALOG: &[CheckDefinition] = &[
    graph_check!(
        "prop-2.1",
        "2.1",
        "b(G) <= b_g(G) <= min{CL(G), 2b(G^2)-1} and b(G) <= b_g'(G) <= min{CL(G), 2b(G^2)}; CL read as the Staller-only game value",
        connected,
        prop_2_1
    ),
    graph_check!(
        "prop-2.2",
        "2.2",
        "b_g(G) <= rad(G)+1 and b_g'(G) <= min{rad(G)+2, diam(G)+1}",
        connected,
        prop_2_2
    ),
    graph_check!(
        "prop-2.3",
        "2.3",
        "If Delta(G) <= n-2 then b_g(G) <= n-Delta(G); if Delta(G) <= n-3 then b_g'(G) <= n-Delta(G)",
        |f| f.g.max_degree() + 2 <= f.n(),
        prop_2_3
    ),
    graph_check!(
        "thm-2.4",
        "2.4",
        "Continuation Principle: A subset of B implies b_g(G|B) <= b_g(G|A); exhaustive over pairs for n <= 4, 200 seeded pairs otherwise",
        |_| true,
        thm_2_4
    ),
    graph_check!(
        "prop-2.6",
        "2.6",
        "|b_g(G) - b_g'(G)| <= 1",
        connected,
        prop_2_6
    ),
    graph_check!(
        "thm-2.7",
        "2.7",
        "b_g(G) <= b_g(G-e) <= b_g(G)+2 and b_g'(G) <= b_g'(G-e) <= b_g'(G)+2 for every edge e",
        |f| connected(f) && f.g.size() > 0,
        thm_2_7
    ),
    graph_check!(
        "prop-2.9",
        "2.9",
        "b_g=1 iff G=K_1; b_g'=1 iff G=K_1; b_g=2 iff G!=K_1 and Delta(G) >= |V(G)|-2; b_g'=2 iff G!=K_1 and delta(G) >= |V(G)|-2 (iff complete minus a matching)",
        connected,
        prop_2_9
    ),
    graph_check!(
        "prop-2.10",
        "2.10",
        "b_g(G)=3 iff Delta(G) <= |V(G)|-3 and some v has every vertex outside N[v] adjacent to all but at most one vertex outside N_2[v]",
        connected,
        prop_2_10
    ),
    graph_check!(
        "prop-2.11",
        "2.11",
        "If G has diameter at most 2, then b(G) = b_g(G)",
        |f| connected(f) && diam(f) <= 2,
        prop_2_11
    ),
    graph_check!(
        "lemma-2.12",
        "2.12",
        "If H is a spanning subgraph of G, then b_g(G) <= b_g(H) and b_g'(G) <= b_g'(H); all spanning supergraphs for n <= 4, every single added edge plus 50 seeded edge sets otherwise",
        |f| !f.g.non_edges().is_empty(),
        lemma_2_12
    ),
    graph_check!(
        "prop-4.1",
        "4.1",
        "4 <= b_g(G) + b_g(complement G) <= n+2 for n >= 2",
        at_least_2,
        prop_4_1
    ),
    graph_check!(
        "lemma-4.2",
        "4.2",
        "If G is not connected and all components have order at least 3, then b_g(G) <= (n+1)/2 and b_g'(G) <= n/2+1",
        |f| !connected(f) && f.g.components().iter().all(|c| c.len() >= 3),
        lemma_4_2
    ),
    graph_check!(
        "prop-4.3",
        "4.3",
        "4 <= b_g(G) * b_g(complement G) <= 2n for n >= 2",
        at_least_2,
        prop_4_3
    ),
    graph_check!(
        "prop-4.4",
        "4.4",
        "b_g(G) <= min_k {2 gamma_k(G) + k - 1} and b_g'(G) <= min_k {2 gamma_k(G) + k}, k from 1 to the largest component diameter",
        |_| true,
        prop_4_4
    ),
    graph_check!(
        "prop-4.5",
        "4.5",
        "b_g(G) <= min_k {gamma_k(G) + 3k} and b_g'(G) <= min_k {gamma_k(G) + 3k + 1}, k from 1 to diam(G)",
        connected,
        prop_4_5
    ),
    graph_check!(
        "cor-4.x",
        "cor-4.x",
        "If G and its complement are connected on n >= 3 vertices, then b_g(G) * b_g(complement G) <= n+18",
        both_connected_3,
        cor_4_x
    ),
    graph_check!(
        "prop-4.6",
        "4.6",
        "4 <= b_g'(G) + b_g'(complement G) <= n+2 for n >= 2",
        at_least_2,
        prop_4_6
    ),
    graph_check!(
        "prop-4.7",
        "4.7",
        "8 <= b_g'(G) * b_g'(complement G) <= 3n-6 for n >= 6",
        |f| f.n() >= 6,
        prop_4_7
    ),
    graph_check!(
        "cor-4.y",
        "cor-4.y",
        "If G and its complement are connected on n >= 3 vertices, then b_g'(G) * b_g'(complement G) <= n+21",
        both_connected_3,
        cor_4_y
    ),
    graph_check!(
        "thm-5.1",
        "5.1",
        "Tree reduction: b(G) = min{b(T) : T a spanning tree of G}",
        |f| connected(f) && kirchhoff_count(&f.g).is_some_and(|c| c <= SPANNING_TREE_LIMIT as u128),
        thm_5_1
    ),
    graph_check!(
        "lemma-5.5-inner",
        "5.5-inner",
        "For a tree T with partite set X and H = T^2[X]: b(T^2) <= b(H) + 1",
        |f| f.g.is_tree(),
        lemma_5_5_inner
    ),
    CheckDefinition {
        id: "burner-only-vs-b",
        covers: "burner-only",
        citation: "Burner-only game versus the burning number (the two 'can slightly differ (in the last round)'); exploratory",
        kind: CheckKind::Graph {
            applies: |_| true,
            evaluate: burner_only_vs_b,
        },
        exploratory: true,
    },
    CheckDefinition {
        id: "thm-5.3",
        covers: "5.3",
        citation: "ceil(sqrt(2n+1)-1) <= b_g(P_n) <= ceil(sqrt(2n+1/4)-1/2) and ceil(sqrt(2n+2)-1) <= b_g'(P_n) <= ceil(sqrt(2n+1/4)-1/2)",
        kind: CheckKind::Family,
        exploratory: false,
    },
    CheckDefinition {
        id: "thm-cycles",
        covers: "cycles",
        citation: "ceil(sqrt(2n+1)-1) <= b_g(C_n) <= ceil(sqrt(2n+1/4)-1/2) and ceil(sqrt(2n+7)-2) <= b_g'(C_n) <= ceil(sqrt(2n+17/4)-3/2)",
        kind: CheckKind::Family,
        exploratory: false,
    },
    CheckDefinition {
        id: "thm-6.2",
        covers: "6.2",
        citation: "b_g(Q_n) = 2 for n in {1,2}, else ceil((n+1)/2)+1; b_g'(Q_n) = ceil(n/2)+1",
        kind: CheckKind::Family,
        exploratory: false,
    },
    CheckDefinition {
        id: "prop-6.1",
        covers: "6.1",
        citation: "max{b_g(G),b_g(H)} <= b_g(G strong H) <= b_g(G cartesian H), and the same for b_g'",
        kind: CheckKind::Product,
        exploratory: false,
    },
    CheckDefinition {
        id: "prop-6.3",
        covers: "6.3",
        citation: "For connected G, H: 2b(G^2)-1 <= b_g(G corona H) <= 2b(G^2), and the same for b_g'",
        kind: CheckKind::Product,
        exploratory: false,
    },
    CheckDefinition {
        id: "prop-6.4",
        covers: "6.4",
        citation: "For connected G, H where H has a universal vertex: b_g(G) <= b_g(G[H]) <= b_g(G)+1, and the same for b_g'",
        kind: CheckKind::Product,
        exploratory: false,
    },
    CheckDefinition {
        id: "prop-6.4-no-universal",
        covers: "6.4-no-universal",
        citation: "For connected G, H where H has no universal vertex: 2b(G^2) <= b_g(G[H]) <= 2b(G^2)+1; exploratory, known to fail (see README)",
        kind: CheckKind::Product,
        exploratory: true,
    },
    CheckDefinition {
        id: "example-2.8",
        covers: "ex-2.8",
        citation: "Figure 1: Burner's script u, x, y finishes by round 5 against any Staller; after deleting vw the graph cannot be burned by the end of round 6",
        kind: CheckKind::Example,
        exploratory: false,
    },
    CheckDefinition {
        id: "example-5.2",
        covers: "5.2",
        citation: "Figure 2: b_g(G) = 3 while b_g(T) >= 4 for every spanning tree T",
        kind: CheckKind::Example,
        exploratory: false,
    },
];

pub fn find(id: &str) -> Option<&'static CheckDefinition> {
    CATALOG.iter().find(|d| d.id == id)
}

pub fn graph_checks() -> impl Iterator<Item = &'static CheckDefinition> {
    CATALOG.iter().filter(|d| d.is_graph_check())
}

fn connected(f: &Facts) -> bool {
    f.g.is_connected()
}

fn at_least_2(f: &Facts) -> bool {
    f.n() >= 2
}

fn both_connected_3(f: &Facts) -> bool {
    f.n() >= 3 && f.g.is_connected() && f.g.complement().is_connected()
}

fn rad(f: &Facts) -> usize {
    f.g.radius().finite().unwrap_or(usize::MAX)
}

fn diam(f: &Facts) -> usize {
    f.g.diameter().finite().unwrap_or(usize::MAX)
}

fn starters() -> [(Player, &'static str); 2] {
    [(B, "b_g"), (S, "b_g'")]
}

/// Isomorphism-invariant cache key when canonical forms are available,
/// otherwise the labeled graph6 (no sharing, still correct).
pub fn cache_key(g: &Graph) -> Vec<u8> {
    canonical_form(g).unwrap_or_else(|_| burngame::graph6::emit_graph6(g).into_bytes())
}

/// A fixed per-graph seed so sampled checks are reproducible.
fn seed_for(f: &Facts) -> u64 {
    f.graph6().bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x100_0000_01b3)
    })
}

fn trace_of(g: &Graph, b0: VertexSet, p: Player) -> TraceRecord {
    let (value, trace) = principal_variation(g, b0, p);
    TraceRecord::new(g, value, &trace)
}

fn prop_2_1(f: &Facts) -> Vec<Assertion> {
    let (b, cl, bsq) = (f.b(), f.cl(), f.b_square());
    vec![
        Assertion::new("b(G) <= b_g(G)", b, Le, f.bg()),
        Assertion::new("b_g(G) <= CL(G)", f.bg(), Le, cl),
        Assertion::new("b_g(G) <= 2b(G^2)-1", f.bg(), Le, 2 * bsq - 1),
        Assertion::new("b(G) <= b_g'(G)", b, Le, f.bg_prime()),
        Assertion::new("b_g'(G) <= CL(G)", f.bg_prime(), Le, cl),
        Assertion::new("b_g'(G) <= 2b(G^2)", f.bg_prime(), Le, 2 * bsq),
    ]
}

fn prop_2_2(f: &Facts) -> Vec<Assertion> {
    vec![
        Assertion::new("b_g(G) <= rad(G)+1", f.bg(), Le, rad(f) + 1),
        Assertion::new("b_g'(G) <= rad(G)+2", f.bg_prime(), Le, rad(f) + 2),
        Assertion::new("b_g'(G) <= diam(G)+1", f.bg_prime(), Le, diam(f) + 1),
    ]
}

fn prop_2_3(f: &Facts) -> Vec<Assertion> {
    let (n, d) = (f.n(), f.g.max_degree());
    let mut out = vec![Assertion::new("b_g(G) <= n-Delta(G)", f.bg(), Le, n - d)];
    if d + 3 <= n {
        out.push(Assertion::new("b_g'(G) <= n-Delta(G)", f.bg_prime(), Le, n - d));
    }
    out
}

fn thm_2_4(f: &Facts) -> Vec<Assertion> {
    let n = f.n();
    let full = f.g.vertices().bits();
    let pairs: Vec<(VertexSet, VertexSet)> = if n <= 4 {
        let mut v = vec![];
        for b in 0..=full {
            // every subset a of b
            let mut a = b;
            loop {
                v.push((VertexSet(a), VertexSet(b)));
                if a == 0 {
                    break;
                }
                a = (a - 1) & b;
            }
        }
        v
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed_for(f));
        (0..200)
            .map(|_| {
                let b = rng.gen::<u64>() & full;
                (VertexSet(b & rng.gen::<u64>()), VertexSet(b))
            })
            .collect()
    };
    let mut violations = 0usize;
    let mut first = None;
    for &(a, b) in &pairs {
        let (va, vb) = (f.relative(a, B), f.relative(b, B));
        if vb > va {
            violations += 1;
            first.get_or_insert((a, b, va, vb));
        }
    }
    let mut out = Assertion::new("violating pairs A subset B with b_g(G|B) > b_g(G|A)", violations, Eq, 0)
        .param("pairs", pairs.len())
        .param("mode", if n <= 4 { "exhaustive" } else { "sampled" });
    if let Some((a, b, va, vb)) = first {
        out = out
            .value("A", a.bits() as i64)
            .value("B", b.bits() as i64)
            .value("bg_given_A", va as i64)
            .value("bg_given_B", vb as i64)
            .trace(trace_of(&f.g, a, B))
            .trace(trace_of(&f.g, b, B));
    }
    vec![out]
}

fn prop_2_6(f: &Facts) -> Vec<Assertion> {
    vec![Assertion::new(
        "|b_g(G) - b_g'(G)| <= 1",
        f.bg().abs_diff(f.bg_prime()),
        Le,
        1,
    )]
}

fn thm_2_7(f: &Facts) -> Vec<Assertion> {
    let mut out = vec![];
    for (u, v) in f.g.edges() {
        let minus = Facts::new(f.g.remove_edge(u, v).unwrap_or_else(|e| unreachable!("{e}")));
        for (p, name) in starters() {
            let (before, after) = (f.game(p), minus.game(p));
            let edge = serde_json::json!([u, v]);
            let gap = after as i64 - before as i64;
            let witness = |a: Assertion| {
                a.value("minus_e", after as i64)
                    .trace(trace_of(&minus.g, VertexSet::EMPTY, p))
            };
            out.push(witness(
                Assertion::new(format!("{name}(G) <= {name}(G-e)"), before, Le, after)
                    .param("edge", edge.clone())
                    .param("gap", gap),
            ));
            out.push(witness(
                Assertion::new(format!("{name}(G-e) <= {name}(G)+2"), after, Le, before + 2)
                    .param("edge", edge)
                    .param("gap", gap),
            ));
        }
    }
    out
}

fn prop_2_9(f: &Facts) -> Vec<Assertion> {
    let n = f.n();
    let k1 = n == 1;
    let complement_is_matching = f.g.complement().max_degree() <= 1;
    vec![
        Assertion::iff("b_g(G)=1 <=> G=K_1", f.bg() == 1, k1).param("part", 1),
        Assertion::iff("b_g'(G)=1 <=> G=K_1", f.bg_prime() == 1, k1).param("part", 2),
        Assertion::iff(
            "b_g(G)=2 <=> G!=K_1 and Delta(G) >= n-2",
            f.bg() == 2,
            !k1 && f.g.max_degree() + 2 >= n,
        )
        .param("part", 3),
        Assertion::iff(
            "b_g'(G)=2 <=> G!=K_1 and delta(G) >= n-2",
            f.bg_prime() == 2,
            !k1 && f.g.min_degree() + 2 >= n,
        )
        .param("part", 4),
        Assertion::iff(
            "b_g'(G)=2 <=> G!=K_1 and G is complete minus a matching",
            f.bg_prime() == 2,
            !k1 && complement_is_matching,
        )
        .param("part", 4),
    ]
}

/// Some `v` such that every `y` outside `N[v]` leaves at most one vertex
/// outside `N_2[v] ∪ N[y]`.
pub fn third_round_hub(g: &Graph) -> Option<usize> {
    let all = g.vertices();
    (0..g.order()).find(|&v| {
        let s = VertexSet::singleton(v);
        let far = all - g.closed_neighborhood(s, 2);
        (all - g.closed_neighborhood(s, 1))
            .iter()
            .all(|y| (far - g.closed_neighborhood(VertexSet::singleton(y), 1)).len() <= 1)
    })
}

fn prop_2_10(f: &Facts) -> Vec<Assertion> {
    let n = f.n();
    let hub = third_round_hub(&f.g);
    let condition = f.g.max_degree() + 3 <= n && hub.is_some();
    let mut a = Assertion::iff(
        "b_g(G)=3 <=> Delta <= n-3 and a hub vertex v exists",
        f.bg() == 3,
        condition,
    );
    if let Some(v) = hub {
        a = a.param("v", v);
    }
    vec![a]
}

fn prop_2_11(f: &Facts) -> Vec<Assertion> {
    vec![Assertion::new("b(G) = b_g(G)", f.b(), Eq, f.bg())]
}

fn lemma_2_12(f: &Facts) -> Vec<Assertion> {
    let non_edges = f.g.non_edges();
    let m = non_edges.len();
    let masks: Vec<u64> = if f.n() <= 4 {
        (1..1u64 << m).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed_for(f) ^ 0x2_12);
        let mut v: Vec<u64> = (0..m).map(|i| 1u64 << i).collect();
        let full = if m >= 64 { u64::MAX } else { (1u64 << m) - 1 };
        v.extend((0..50).map(|_| (rng.gen::<u64>() & full).max(1)));
        v
    };
    let mut violations = 0usize;
    let mut first = None;
    for &mask in &masks {
        let mut g = f.g.clone();
        for (i, &(u, v)) in non_edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g = g.add_edge(u, v).unwrap_or_else(|e| unreachable!("{e}"));
            }
        }
        let sup = Facts::new(g);
        for (p, _) in starters() {
            if sup.game(p) > f.game(p) {
                violations += 1;
                first.get_or_insert((sup.g.clone(), p, sup.game(p)));
            }
        }
    }
    let mut out = Assertion::new("spanning supergraphs with a larger game value", violations, Eq, 0)
        .param("supergraphs", masks.len())
        .param("mode", if f.n() <= 4 { "exhaustive" } else { "sampled" });
    if let Some((g, p, value)) = first {
        out = out
            .value("supergraph_value", value as i64)
            .trace(trace_of(&g, VertexSet::EMPTY, p));
    }
    vec![out]
}

fn prop_4_1(f: &Facts) -> Vec<Assertion> {
    let sum = f.bg() + f.complement().bg();
    vec![
        Assertion::new("b_g(G)+b_g(co-G) >= 4", sum, Ge, 4),
        Assertion::new("b_g(G)+b_g(co-G) <= n+2", sum, Le, f.n() + 2),
    ]
}

fn lemma_4_2(f: &Facts) -> Vec<Assertion> {
    let n = f.n();
    vec![
        Assertion::new("2 b_g(G) <= n+1", 2 * f.bg(), Le, n + 1),
        Assertion::new("2 b_g'(G) <= n+2", 2 * f.bg_prime(), Le, n + 2),
    ]
}

fn prop_4_3(f: &Facts) -> Vec<Assertion> {
    let product = f.bg() * f.complement().bg();
    vec![
        Assertion::new("b_g(G) b_g(co-G) >= 4", product, Ge, 4),
        Assertion::new("b_g(G) b_g(co-G) <= 2n", product, Le, 2 * f.n()),
    ]
}

/// `(min bound, argmin k)` of `bound(gamma_k, k)` over k = 1..=max(1, kmax).
fn min_over_k(f: &Facts, kmax: usize, bound: impl Fn(usize, usize) -> usize) -> (usize, usize) {
    (1..=kmax.max(1))
        .map(|k| (bound(f.gamma(k), k), k))
        .min()
        .unwrap_or((usize::MAX, 0))
}

fn prop_4_4(f: &Facts) -> Vec<Assertion> {
    let kmax = f.g.max_component_diameter();
    let (lo, k1) = min_over_k(f, kmax, |g, k| 2 * g + k - 1);
    let (hi, k2) = min_over_k(f, kmax, |g, k| 2 * g + k);
    vec![
        Assertion::new("b_g(G) <= min_k 2 gamma_k + k - 1", f.bg(), Le, lo).param("k", k1),
        Assertion::new("b_g'(G) <= min_k 2 gamma_k + k", f.bg_prime(), Le, hi).param("k", k2),
    ]
}

fn prop_4_5(f: &Facts) -> Vec<Assertion> {
    let kmax = diam(f);
    let (lo, k1) = min_over_k(f, kmax, |g, k| g + 3 * k);
    let (hi, k2) = min_over_k(f, kmax, |g, k| g + 3 * k + 1);
    vec![
        Assertion::new("b_g(G) <= min_k gamma_k + 3k", f.bg(), Le, lo).param("k", k1),
        Assertion::new("b_g'(G) <= min_k gamma_k + 3k + 1", f.bg_prime(), Le, hi).param("k", k2),
    ]
}

fn cor_4_x(f: &Facts) -> Vec<Assertion> {
    let product = f.bg() * f.complement().bg();
    vec![Assertion::new("b_g(G) b_g(co-G) <= n+18", product, Le, f.n() + 18)]
}

fn prop_4_6(f: &Facts) -> Vec<Assertion> {
    let sum = f.bg_prime() + f.complement().bg_prime();
    vec![
        Assertion::new("b_g'(G)+b_g'(co-G) >= 4", sum, Ge, 4),
        Assertion::new("b_g'(G)+b_g'(co-G) <= n+2", sum, Le, f.n() + 2),
    ]
}

fn prop_4_7(f: &Facts) -> Vec<Assertion> {
    let product = f.bg_prime() * f.complement().bg_prime();
    vec![
        Assertion::new("b_g'(G) b_g'(co-G) >= 8", product, Ge, 8),
        Assertion::new("b_g'(G) b_g'(co-G) <= 3n-6", product, Le, 3 * f.n() - 6),
    ]
}

fn cor_4_y(f: &Facts) -> Vec<Assertion> {
    let product = f.bg_prime() * f.complement().bg_prime();
    vec![Assertion::new("b_g'(G) b_g'(co-G) <= n+21", product, Le, f.n() + 21)]
}

fn thm_5_1(f: &Facts) -> Vec<Assertion> {
    let trees = spanning_trees(&f.g, SPANNING_TREE_LIMIT).unwrap_or_default();
    let mut by_class: FxHashMap<Vec<u8>, usize> = FxHashMap::default();
    let best = trees
        .iter()
        .map(|t| *by_class.entry(cache_key(t)).or_insert_with(|| burning_number(t).0))
        .min()
        .unwrap_or(usize::MAX);
    vec![Assertion::new("b(G) = min over spanning trees of b(T)", f.b(), Eq, best).param("spanning_trees", trees.len())]
}

fn lemma_5_5_inner(f: &Facts) -> Vec<Assertion> {
    let (h, x, _) = bipartite_square_pair(&f.g).unwrap_or_else(|e| unreachable!("{e}"));
    let b_sq = f.b_square();
    let mut out = vec![Assertion::new("b(T^2) <= b(H)+1", b_sq, Le, burning_number(&h).0 + 1)
        .param("side", "smaller")
        .param("x", x.to_vec())];
    let other = f.g.vertices() - x;
    if !other.is_empty() {
        let (h2, _) = f.g.square().induced(other);
        out.push(
            Assertion::new("b(T^2) <= b(H)+1", b_sq, Le, burning_number(&h2).0 + 1)
                .param("side", "larger")
                .param("x", other.to_vec()),
        );
    }
    out
}

fn burner_only_vs_b(f: &Facts) -> Vec<Assertion> {
    vec![Assertion::new(
        "Burner-only game value = b(G)",
        f.burner_only(),
        Eq,
        f.b(),
    )]
}
