use burngame::corpus::{isomorphism_classes, CorpusSpec};
use burngame::generators::{family, Family};
use burngame::graph6::{emit_graph6, parse_graph6};
use burngame::spanning::{kirchhoff_count, spanning_trees};
use burngame::{Distance, Graph, VertexSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn labeled(n: usize) -> impl Iterator<Item = Graph> {
    burngame::corpus::enumerate(&CorpusSpec {
        n,
        ..Default::default()
    })
    .unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = vec![];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

#[test]
fn graph6_roundtrip_exhaustive_small() {
    let mut total = 0;
    for n in 1..=6 {
        for g in labeled(n) {
            assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
            total += 1;
        }
    }
    // 1 + 2 + 8 + 64 + 1024 + 32768
    assert_eq!(total, 33867);
}

#[test]
fn graph6_roundtrip_random_large() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a7e);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=64);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn kirchhoff_matches_enumeration() {
    for n in 1..=6 {
        for g in isomorphism_classes(n).into_iter().filter(Graph::is_connected) {
            let count = kirchhoff_count(&g).unwrap();
            let trees = spanning_trees(&g, 10_000).unwrap();
            assert_eq!(trees.len() as u128, count, "{}", emit_graph6(&g));
        }
    }
}

#[test]
fn metric_invariants_on_classes() {
    for n in 1..=6 {
        for g in isomorphism_classes(n) {
            let d = g.distances();
            for u in 0..n {
                assert_eq!(d.get(u, u), Distance::Finite(0));
                let ecc = d.row(u).iter().filter_map(|x| x.finite()).max().unwrap();
                if g.is_connected() {
                    assert_eq!(g.eccentricity(u), Distance::Finite(ecc));
                }
                for v in 0..n {
                    assert_eq!(d.get(u, v), d.get(v, u));
                    for w in 0..n {
                        if let (Some(a), Some(b)) = (d.get(u, v).finite(), d.get(v, w).finite()) {
                            assert!(d.get(u, w).finite().unwrap() <= a + b);
                        }
                    }
                }
            }
            if g.is_connected() {
                let (r, diam) = (g.radius().finite().unwrap(), g.diameter().finite().unwrap());
                assert!(r <= diam && diam <= 2 * r);
            }
            assert_eq!(g.complement().complement(), g);
            let sq = g.square();
            assert!(g.edges().iter().all(|&(u, v)| sq.has_edge(u, v)));
            for (u, v) in sq.edges() {
                let dist = d.get(u, v).finite().unwrap();
                assert!((1..=2).contains(&dist));
            }
        }
    }
}

#[test]
fn named_metrics() {
    let p5 = family(Family::Path(5)).unwrap();
    assert_eq!(p5.distance(0, 4), Distance::Finite(4));
    assert_eq!(p5.radius(), Distance::Finite(2));
    assert_eq!(p5.diameter(), Distance::Finite(4));
    let q3 = family(Family::Hypercube(3)).unwrap();
    assert_eq!(q3.distance(0, 7), Distance::Finite(3));
    assert_eq!(
        q3.closed_neighborhood(VertexSet::singleton(0), 2),
        q3.vertices() - VertexSet::singleton(7)
    );
    let split = Graph::new(3, &[(0, 1)]).unwrap();
    assert_eq!(split.distance(0, 2), Distance::Unreachable);
    let star = family(Family::Star(4)).unwrap();
    assert!(!star.complement().is_connected());
    assert_eq!(star.eccentricity(0), Distance::Finite(1));
    assert_eq!(family(Family::Cycle(6)).unwrap().min_degree(), 2);
    assert_eq!(family(Family::Path(1)).unwrap().max_degree(), 0);
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = vec![];
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn closed_neighborhood_composes(g in arb_graph(), mask in any::<u64>(), k in 0usize..6) {
        let s = VertexSet(mask) & g.vertices();
        let step = g.closed_neighborhood(g.closed_neighborhood(s, k), 1);
        prop_assert_eq!(g.closed_neighborhood(s, k + 1), step);
        prop_assert_eq!(g.closed_neighborhood(s, 0), s);
        prop_assert_eq!(g.closed_neighborhood(VertexSet::EMPTY, k), VertexSet::EMPTY);
    }

    #[test]
    fn edge_list_roundtrip(g in arb_graph()) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }
}
