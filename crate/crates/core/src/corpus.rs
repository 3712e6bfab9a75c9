//! Deterministic graph corpora: exhaustive enumeration, isomorphism classes
//! and fixed-seed random samples.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{bit, Graph};

/// Seed of the random connected samples used by the suite.
pub const SAMPLE_SEED: u64 = 0x6a5d_2f13;

/// Pairs `(u, v)`, `u < v`, in the order used to encode edge sets as bits.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect()
}

fn from_code(n: usize, pairs: &[(usize, usize)], code: u64) -> Graph {
    let mut adj = vec![0u64; n];
    for (k, &(u, v)) in pairs.iter().enumerate() {
        if code >> k & 1 == 1 {
            adj[u - 1] |= bit(v);
            adj[v - 1] |= bit(u);
        }
    }
    Graph::from_adjacency(adj)
}

/// Every graph on `1..=n` (all `2^(n choose 2)` edge sets, in code order).
pub fn all_labeled(n: usize) -> Vec<Graph> {
    let p = pairs(n);
    assert!(p.len() < 32, "exhaustive enumeration is for small n");
    (0..1u64 << p.len()).map(|code| from_code(n, &p, code)).collect()
}

pub fn all_connected_labeled(n: usize) -> Vec<Graph> {
    all_labeled(n).into_iter().filter(Graph::is_connected).collect()
}

/// Canonical edge code: the least code over all relabelings that list
/// vertices by nondecreasing degree.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let p = pairs(n);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_degree: Vec<usize> = (1..=n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    for (_, group) in &by_degree.iter().chunk_by(|&&v| g.degree(v)) {
        classes.push(group.copied().collect());
    }
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    canonical_search(g, &p, &classes, 0, &mut order, &mut best);
    best
}

fn canonical_search(
    g: &Graph,
    p: &[(usize, usize)],
    classes: &[Vec<usize>],
    k: usize,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    if k == classes.len() {
        // order[l - 1] is the vertex receiving label l.
        let mut code = 0u64;
        for (b, &(u, v)) in p.iter().enumerate() {
            if g.has_edge(order[u - 1], order[v - 1]) {
                code |= 1 << b;
            }
        }
        *best = (*best).min(code);
        return;
    }
    let len = classes[k].len();
    for perm in classes[k].iter().copied().permutations(len) {
        let base = order.len();
        order.extend(perm);
        canonical_search(g, p, classes, k + 1, order, best);
        order.truncate(base);
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

/// One representative per isomorphism class of graphs on `n` vertices, each
/// in canonical labeling, ordered by edge count and then code.
pub fn isomorphism_classes(n: usize, connected_only: bool) -> Vec<Graph> {
    let p = pairs(n);
    let mut codes: BTreeSet<(usize, u64)> = BTreeSet::new();
    for g in all_labeled(n) {
        if connected_only && !g.is_connected() {
            continue;
        }
        let code = canonical_code(&g);
        codes.insert((g.edge_count(), code));
    }
    codes.into_iter().map(|(_, code)| from_code(n, &p, code)).collect()
}

/// `count` distinct connected graphs on `n` vertices drawn with edge
/// probability one half from a ChaCha stream seeded with `seed`.
pub fn random_connected(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let p = pairs(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let code: u64 = rng.gen::<u64>() & ((1u64 << p.len()) - 1);
        let g = from_code(n, &p, code);
        if g.is_connected() && seen.insert(code) {
            out.push(g);
        }
    }
    out
}

/// Caterpillar trees on `1..=max_n` vertices, one per isomorphism class.
pub fn caterpillars(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| isomorphism_classes(n, true)).filter(Graph::is_caterpillar).collect()
}

/// Net-free generalized caterpillars on at most `max_n` vertices that use at
/// least one clique join, one per isomorphism class.
pub fn net_free_generalized_caterpillars(max_n: usize) -> Vec<Graph> {
    (3..=max_n)
        .flat_map(|n| isomorphism_classes(n, true))
        .filter(|g| !g.is_tree() && g.is_generalized_caterpillar() && g.is_net_free())
        .collect()
}

/// Generalized caterpillars on at most `max_n` vertices, one per
/// isomorphism class.
pub fn generalized_caterpillars(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| isomorphism_classes(n, true)).filter(Graph::is_generalized_caterpillar).collect()
}
