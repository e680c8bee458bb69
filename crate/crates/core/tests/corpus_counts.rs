use std::collections::BTreeSet;

use burngame::canon::canonical_form;
use burngame::corpus::{enumerate, isomorphism_classes, load_corpus, stream_to_file, trees, CorpusSpec};
use burngame::graph6::emit_graph6;
use burngame::Graph;

/// Non-isomorphic graphs on n = 1..7 vertices, all and connected. Frozen from
/// the labeled-enumeration oracle below (run up to n = 6 here; n = 7 was run
/// once and recorded).
const ALL: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];
const CONNECTED: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];

/// Oracle: dedup every labeled graph by its minimum graph6 string over all
/// vertex permutations.
fn permutation_oracle(n: usize, connected: bool) -> usize {
    let perms = permutations(n);
    let spec = CorpusSpec {
        n,
        connected_only: connected,
        ..Default::default()
    };
    let classes: BTreeSet<String> = enumerate(&spec)
        .unwrap()
        .map(|g| perms.iter().map(|p| emit_graph6(&g.permuted(p))).min().unwrap())
        .collect();
    classes.len()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn oracle_agrees_with_frozen_counts() {
    for n in 1..=5 {
        assert_eq!(permutation_oracle(n, false), ALL[n - 1], "n={n}");
        assert_eq!(permutation_oracle(n, true), CONNECTED[n - 1], "n={n}");
    }
}

#[test]
fn class_counts_match_fixtures() {
    for n in 1..=7 {
        assert_eq!(enumerate(&CorpusSpec::classes(n)).unwrap().count(), ALL[n - 1], "n={n}");
        assert_eq!(
            enumerate(&CorpusSpec::connected_classes(n)).unwrap().count(),
            CONNECTED[n - 1],
            "n={n}"
        );
    }
}

#[test]
fn labeled_dedup_gives_same_class_set() {
    // dedup of the labeled stream by canonical form equals the extension-built classes
    for n in 1..=6 {
        let spec = CorpusSpec {
            n,
            ..Default::default()
        };
        let from_labeled: BTreeSet<Vec<u8>> = enumerate(&spec).unwrap().map(|g| canonical_form(&g).unwrap()).collect();
        let classes: BTreeSet<Vec<u8>> = isomorphism_classes(n)
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        assert_eq!(from_labeled, classes, "n={n}");
    }
}

#[test]
fn filters_commute_with_dedup() {
    for n in 2..=6 {
        let filtered_labeled: BTreeSet<Vec<u8>> = enumerate(&CorpusSpec {
            n,
            both_connected: true,
            ..Default::default()
        })
        .unwrap()
        .map(|g| canonical_form(&g).unwrap())
        .collect();
        let dedup_filtered: BTreeSet<Vec<u8>> = enumerate(&CorpusSpec::both_connected_classes(n))
            .unwrap()
            .map(|g| canonical_form(&g).unwrap())
            .collect();
        assert_eq!(filtered_labeled, dedup_filtered);
        for g in enumerate(&CorpusSpec::both_connected_classes(n)).unwrap() {
            assert!(g.is_connected() && g.complement().is_connected());
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let a: Vec<Graph> = enumerate(&CorpusSpec::classes(6)).unwrap().collect();
    let b: Vec<Graph> = enumerate(&CorpusSpec::classes(6)).unwrap().collect();
    assert_eq!(a, b);
    let forms: Vec<Vec<u8>> = a.iter().map(|g| canonical_form(g).unwrap()).collect();
    let mut sorted = forms.clone();
    sorted.sort();
    assert_eq!(forms, sorted);
    // representatives are canonical
    for g in &a {
        assert_eq!(emit_graph6(g).into_bytes(), canonical_form(g).unwrap());
    }
}

#[test]
fn file_roundtrip() {
    let dir = std::env::temp_dir().join(format!("burngame-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.g6");
    let spec = CorpusSpec::connected_classes(5);
    assert_eq!(stream_to_file(&spec, &path).unwrap(), 21);
    let loaded = load_corpus(&path).unwrap();
    assert_eq!(loaded, enumerate(&spec).unwrap().collect::<Vec<_>>());
    let one = dir.join("k1.g6");
    stream_to_file(&CorpusSpec::classes(1), &one).unwrap();
    assert_eq!(std::fs::read_to_string(&one).unwrap(), "@\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

/// Oracle: every labeled tree from its Prüfer sequence, deduplicated.
fn prufer_tree_classes(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let mut seq = vec![0usize; n - 2];
    let mut forms = BTreeSet::new();
    loop {
        let mut degree = vec![1usize; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = vec![];
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        forms.insert(canonical_form(&Graph::new(n, &edges).unwrap()).unwrap());
        let mut i = 0;
        while i < seq.len() {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            break;
        }
    }
    forms.len()
}

#[test]
fn tree_counts_match_prufer_oracle() {
    for n in 1..=7 {
        assert_eq!(trees(n).unwrap().len(), prufer_tree_classes(n), "n={n}");
    }
    assert_eq!(trees(9).unwrap().len(), 47);
}
