use bel::corpus;
use bel::graph::net_graph;
use bel::{Graph, Labeling};
use itertools::Itertools;

/// Transitive orientability by trying all `2^m` orientations.
fn comparability_oracle(g: &Graph) -> bool {
    let edges = g.edges();
    let n = g.n();
    (0..1u64 << edges.len()).any(|choice| {
        let mut arc = vec![vec![false; n + 1]; n + 1];
        for (k, &(u, v)) in edges.iter().enumerate() {
            if choice >> k & 1 == 1 {
                arc[u][v] = true;
            } else {
                arc[v][u] = true;
            }
        }
        (1..=n).all(|a| (1..=n).all(|b| !arc[a][b] || (1..=n).all(|c| !arc[b][c] || arc[a][c])))
    })
}

/// The weak-closedness condition under the identity labeling, read off the
/// definition.
fn weakly_closed_as_labeled(g: &Graph) -> bool {
    let n = g.n();
    (1..=n).all(|i| (i + 1..=n).all(|j| (j + 1..=n).all(|k| !g.has_edge(i, k) || g.has_edge(i, j) || g.has_edge(j, k))))
}

fn closed_as_labeled(g: &Graph) -> bool {
    let edges = g.edges();
    edges.iter().all(|&(i, j)| {
        edges.iter().all(|&(k, l)| (i != k || j == l || g.has_edge(j, l)) && (j != l || i == k || g.has_edge(i, k)))
    })
}

fn some_labeling(g: &Graph, accept: impl Fn(&Graph) -> bool) -> bool {
    (1..=g.n()).permutations(g.n()).any(|p| accept(&g.relabel(&Labeling::new(p).unwrap()).unwrap()))
}

fn classes(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| corpus::isomorphism_classes(n, false)).collect()
}

#[test]
fn comparability_matches_brute_force() {
    let mut graphs = classes(6);
    graphs.push(Graph::cycle(5).unwrap());
    graphs.push(Graph::cycle(7).unwrap());
    graphs.push(net_graph().complement());
    for g in &graphs {
        assert_eq!(g.is_comparability(), comparability_oracle(g), "{:?}", g.edges());
    }
    assert!(!Graph::cycle(5).unwrap().is_comparability());
    assert!(Graph::cycle(6).unwrap().is_comparability());
}

#[test]
fn transitive_orientations_are_transitive() {
    for g in classes(6) {
        let Some(arcs) = g.transitive_orientation() else { continue };
        assert_eq!(arcs.len(), g.edge_count());
        for &(a, b) in &arcs {
            assert!(g.has_edge(a, b));
            for &(c, d) in &arcs {
                if b == c {
                    assert!(arcs.contains(&(a, d)), "{:?} not transitive", g.edges());
                }
            }
        }
    }
}

#[test]
fn weakly_closed_matches_brute_force() {
    for g in classes(6) {
        let expected = some_labeling(&g, weakly_closed_as_labeled);
        assert_eq!(g.is_weakly_closed(), expected, "{:?}", g.edges());
        if let Some(sigma) = g.find_weakly_closed_labeling().unwrap() {
            assert!(weakly_closed_as_labeled(&g.relabel(&sigma).unwrap()));
        }
    }
}

#[test]
fn weakly_closed_iff_complement_is_comparability() {
    for g in (1..=5).flat_map(corpus::all_labeled) {
        assert_eq!(
            some_labeling(&g, weakly_closed_as_labeled),
            comparability_oracle(&g.complement()),
            "{:?}",
            g.edges()
        );
    }
}

#[test]
fn closed_matches_brute_force_and_implies_weakly_closed() {
    for g in classes(6) {
        let closed = some_labeling(&g, closed_as_labeled);
        assert_eq!(g.is_closed().unwrap(), closed, "{:?}", g.edges());
        if closed {
            assert!(g.is_weakly_closed());
        }
    }
    for g in corpus::random_connected(7, 200, corpus::SAMPLE_SEED) {
        if g.is_closed().unwrap() {
            assert!(g.is_weakly_closed(), "{:?}", g.edges());
        }
    }
}

#[test]
fn weak_closedness_falls_back_beyond_the_search_cap() {
    let path = Graph::path(10).unwrap();
    assert!(path.find_weakly_closed_labeling().is_err());
    assert!(path.is_weakly_closed());
    let big_net = net_graph().disjoint_union(&Graph::path(4).unwrap()).unwrap();
    assert!(!big_net.is_weakly_closed());
    assert_eq!(net_graph().is_weakly_closed_capped(3), net_graph().is_weakly_closed());
}

#[test]
fn whiskers_and_trivial_joins() {
    for g in classes(5) {
        assert_eq!(g.clique_join((1, 2), 2).ok(), g.has_edge(1, 2).then(|| g.clone()));
        for v in 1..=g.n() {
            let h = g.add_whisker(v).unwrap();
            assert_eq!((h.n(), h.edge_count()), (g.n() + 1, g.edge_count() + 1));
            assert_eq!(h.neighbors(g.n() + 1).collect::<Vec<_>>(), vec![v]);
        }
    }
}

#[test]
fn blocks_partition_edges() {
    for g in classes(6) {
        let blocks = g.blocks();
        let mut covered = Vec::new();
        for b in &blocks {
            for (u, v) in b.iter().tuple_combinations() {
                if g.has_edge(*u, *v) {
                    covered.push((*u.min(v), *u.max(v)));
                }
            }
        }
        covered.sort_unstable();
        let before = covered.len();
        covered.dedup();
        assert_eq!(before, covered.len(), "edge in two blocks: {:?}", g.edges());
        assert_eq!(covered, g.edges());
        for c in g.cutpoints() {
            assert!(blocks.iter().filter(|b| b.contains(&c)).count() >= 2);
            let rest: Vec<usize> = (1..=g.n()).filter(|&v| v != c).collect();
            let before = g.connected_components().len();
            assert!(g.induced(&rest).unwrap().connected_components().len() > before);
        }
    }
}
