use std::collections::BTreeMap;

use bel::corpus::{self, canonical_code};
use bel::graph::net_graph;
use bel::Graph;

/// Every way of adding at most `budget` whiskers to vertices in `anchors`.
fn with_whiskers(g: &Graph, anchors: &[usize], budget: usize, out: &mut Vec<Graph>) {
    let Some((&first, rest)) = anchors.split_first() else {
        out.push(g.clone());
        return;
    };
    let mut h = g.clone();
    for used in 0..=budget {
        if used > 0 {
            h = h.add_whisker(first).unwrap();
        }
        with_whiskers(&h, rest, budget - used, out);
    }
}

/// Every graph built as: a path `P`, clique joins `K_t` (`t ≥ 3`) on
/// distinct edges of `P`, then whiskers on vertices of `P` and on the new
/// clique vertices. A caterpillar's legs are whiskers on `P`.
fn constructions(max_n: usize) -> BTreeMap<(usize, u64), Graph> {
    let mut found = BTreeMap::new();
    for k in 1..=max_n {
        let path = Graph::path(k).unwrap();
        let edges: Vec<(usize, usize)> = (1..k).map(|v| (v, v + 1)).collect();
        let mut joined = vec![path];
        for &e in &edges {
            let mut next = Vec::new();
            for g in &joined {
                next.push(g.clone());
                for t in 3..=max_n - g.n() + 2 {
                    next.push(g.clique_join(e, t).unwrap());
                }
            }
            joined = next;
        }
        for g in joined {
            let anchors: Vec<usize> = (1..=g.n()).collect();
            let mut all = Vec::new();
            with_whiskers(&g, &anchors, max_n - g.n(), &mut all);
            for h in all {
                found.insert((h.n(), canonical_code(&h)), h);
            }
        }
    }
    found
}

fn is_constructible(found: &BTreeMap<(usize, u64), Graph>, g: &Graph) -> bool {
    found.contains_key(&(g.n(), canonical_code(g)))
}

#[test]
fn recognizer_matches_construction() {
    let found = constructions(7);
    let mut positives = 0;
    for n in 1..=6 {
        for g in corpus::isomorphism_classes(n, true) {
            let expected = is_constructible(&found, &g);
            assert_eq!(g.is_generalized_caterpillar(), expected, "{:?}", g.edges());
            positives += usize::from(expected);
        }
    }
    assert!(positives > 20);
    for g in corpus::random_connected(7, 400, corpus::SAMPLE_SEED ^ 7) {
        assert_eq!(g.is_generalized_caterpillar(), is_constructible(&found, &g), "{:?}", g.edges());
    }
}

#[test]
fn every_construction_is_recognized() {
    for k in 1..=5 {
        let path = Graph::path(k).unwrap();
        let mut graphs = vec![path.clone()];
        if k >= 2 {
            graphs.push(path.clique_join((1, 2), 4).unwrap());
        }
        if k >= 3 {
            graphs.push(path.clique_join((1, 2), 3).unwrap().clique_join((2, 3), 3).unwrap());
        }
        for g in graphs {
            let mut all = Vec::new();
            let anchors: Vec<usize> = (1..=g.n()).collect();
            with_whiskers(&g, &anchors, 8usize.saturating_sub(g.n()), &mut all);
            for h in all {
                assert!(h.is_generalized_caterpillar(), "{:?}", h.edges());
            }
        }
    }
}

#[test]
fn witnesses_replay_to_the_input() {
    for g in constructions(7).values() {
        let w = g.generalized_caterpillar().unwrap();
        assert_eq!(&w.replay().unwrap(), g);
        let p = w.central_path.vertices();
        for j in &w.joins {
            assert!(j.size >= 3);
            assert!(p.windows(2).any(|e| (e[0], e[1]) == j.edge || (e[1], e[0]) == j.edge));
        }
        let mut used: Vec<(usize, usize)> = w.joins.iter().map(|j| j.edge).collect();
        used.sort_unstable();
        let before = used.len();
        used.dedup();
        assert_eq!(used.len(), before);
    }
}

#[test]
fn net_free_exactly_when_weakly_closed() {
    let found = constructions(7);
    let mut checked = 0;
    for n in 1..=7 {
        let graphs: Vec<Graph> = if n <= 6 {
            corpus::isomorphism_classes(n, true)
        } else {
            corpus::random_connected(7, 400, corpus::SAMPLE_SEED ^ 7)
        };
        for g in graphs.into_iter().filter(|g| is_constructible(&found, g)) {
            assert_eq!(g.is_net_free(), g.is_weakly_closed(), "{:?}", g.edges());
            if g.is_net_free() {
                let sigma = g.gencat_labeling().unwrap();
                assert!(g.is_weakly_closed_with_labeling(&sigma).unwrap(), "{:?}", g.edges());
            } else {
                assert!(g.gencat_labeling().is_err());
            }
            checked += 1;
        }
    }
    assert!(checked > 30);
}

#[test]
fn caterpillar_labelings_are_weakly_closed() {
    let mut trees = Vec::new();
    for k in 1..=8 {
        let interior: Vec<usize> = (2..k).collect();
        with_whiskers(&Graph::path(k).unwrap(), &interior, 8 - k, &mut trees);
    }
    for g in trees {
        assert!(g.is_caterpillar());
        let sigma = g.caterpillar_labeling().unwrap();
        assert!(g.is_weakly_closed_with_labeling(&sigma).unwrap(), "{:?}", g.edges());
        assert!(g.gb_max_degree(&sigma).unwrap() <= 3);
    }
}

#[test]
fn the_net() {
    let net = net_graph();
    assert!(net.is_generalized_caterpillar());
    assert!(!net.is_net_free());
    assert!(!net.is_weakly_closed());
    assert!(net.is_block_graph());
    let ([a, b, c], pendants) = net.find_induced_net().unwrap();
    assert!(net.is_clique(&[a, b, c]));
    for (&corner, &leaf) in [a, b, c].iter().zip(&pendants) {
        assert_eq!(net.neighbors(leaf).collect::<Vec<_>>(), vec![corner]);
    }
}

#[test]
fn spiders_are_not_generalized_caterpillars() {
    // Three legs of length two: a tree that is not a caterpillar.
    let spider = Graph::from_edges(7, &[(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)]).unwrap();
    assert!(!spider.is_caterpillar());
    assert!(!spider.is_generalized_caterpillar());
    // A triangle joined on the first edge of a path.
    let g = Graph::from_edges(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]).unwrap();
    assert!(g.is_generalized_caterpillar());
}
