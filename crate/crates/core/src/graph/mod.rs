//! Simple graphs on `1..=n`, labelings and structural decompositions.
//!
//! Vertices are 1-based everywhere in the public API. Internally adjacency is
//! kept as one `u64` bitmask per vertex, which caps graphs at 64 vertices;
//! every algebraic computation in this crate is far below that.

mod classes;
mod io;

pub use classes::*;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on the vertex set `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges())
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

/// Iterate the 1-based vertices in a bitmask.
pub(crate) fn mask_vertices(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize + 1;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::SizeCap { what: "graph", n, cap: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 1..=n {
            g.adj[u - 1] = full_mask(n) & !bit(u);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::from_edges(n, &edges)
    }

    /// The star `K_{1,leaves}` with center 1.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (2..=leaves + 1).map(|j| (1, j)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    /// Build from adjacency bitmasks (bit `v-1` of `adj[u-1]` means `{u, v}`).
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        for (i, &row) in adj.iter().enumerate() {
            debug_assert_eq!(row & bit(i + 1), 0);
            debug_assert_eq!(row & !full_mask(n), 0);
        }
        Graph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        let fresh = self.adj[u - 1] & bit(v) == 0;
        self.adj[u - 1] |= bit(v);
        self.adj[v - 1] |= bit(u);
        Ok(fresh)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u - 1] & bit(v) != 0
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            for v in mask_vertices(self.adj[u - 1] >> u << u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        mask_vertices(self.adj[v - 1])
    }

    pub(crate) fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub(crate) fn all_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Connected components of the subgraph induced on `within`, as masks
    /// ordered by their least vertex.
    pub(crate) fn component_masks(&self, within: u64) -> Vec<u64> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in mask_vertices(frontier) {
                    next |= self.adj[v - 1];
                }
                next &= within & !comp;
                comp |= next;
                frontier = next;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    /// Partition of the vertex set into maximal connected sets.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.component_masks(self.all_mask()).into_iter().map(|m| mask_vertices(m).collect()).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks(self.all_mask()).len() == 1
    }

    /// Vertices whose removal increases the number of connected components.
    pub fn cutpoints(&self) -> BTreeSet<usize> {
        let all = self.all_mask();
        let base = self.component_masks(all).len();
        (1..=self.n).filter(|&v| self.component_masks(all & !bit(v)).len() > base).collect()
    }

    /// Blocks: maximal connected subgraphs without cutpoints. Bridges give
    /// two-vertex blocks and isolated vertices singleton blocks. Sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        struct State<'a> {
            g: &'a Graph,
            disc: Vec<usize>,
            low: Vec<usize>,
            time: usize,
            stack: Vec<(usize, usize)>,
            out: Vec<Vec<usize>>,
        }
        fn visit(s: &mut State<'_>, u: usize, parent: usize) {
            s.time += 1;
            s.disc[u] = s.time;
            s.low[u] = s.time;
            for v in s.g.neighbors(u) {
                if s.disc[v] == 0 {
                    s.stack.push((u, v));
                    visit(s, v, u);
                    s.low[u] = s.low[u].min(s.low[v]);
                    if s.low[v] >= s.disc[u] {
                        let mut block = BTreeSet::new();
                        while let Some((a, b)) = s.stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        s.out.push(block.into_iter().collect());
                    }
                } else if v != parent && s.disc[v] < s.disc[u] {
                    s.stack.push((u, v));
                    s.low[u] = s.low[u].min(s.disc[v]);
                }
            }
        }
        let mut s = State {
            g: self,
            disc: vec![0; self.n + 1],
            low: vec![0; self.n + 1],
            time: 0,
            stack: Vec::new(),
            out: Vec::new(),
        };
        for v in 1..=self.n {
            if s.disc[v] == 0 {
                if self.degree(v) == 0 {
                    s.disc[v] = usize::MAX;
                    s.out.push(vec![v]);
                } else {
                    visit(&mut s, v, 0);
                }
            }
        }
        let mut out = s.out;
        out.sort();
        out
    }

    /// True iff every block induces a complete graph.
    pub fn is_block_graph(&self) -> bool {
        self.blocks().iter().all(|b| self.is_clique(b))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        let mask: u64 = vertices.iter().map(|&v| bit(v)).sum();
        vertices.iter().all(|&v| (self.adj[v - 1] | bit(v)) & mask == mask)
    }

    /// `T_G`: the vertices adjacent to every other vertex.
    pub fn dominating_set_t(&self) -> BTreeSet<usize> {
        (1..=self.n).filter(|&v| self.degree(v) == self.n - 1).collect()
    }

    /// Combinatorial test for `J_G` having exactly two associated primes:
    /// `T_G` is nonempty and the graph induced on the remaining vertices is
    /// disconnected and a disjoint union of complete graphs.
    pub fn ass_count_is_two(&self) -> Result<bool> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let t: u64 = self.dominating_set_t().iter().map(|&v| bit(v)).sum();
        if t == 0 {
            return Ok(false);
        }
        let rest = self.all_mask() & !t;
        let comps = self.component_masks(rest);
        if comps.len() < 2 {
            return Ok(false);
        }
        Ok(comps.iter().all(|&c| mask_vertices(c).all(|v| (self.adj[v - 1] | bit(v)) & c == c)))
    }

    /// Graph on `n + 1` vertices with a new pendant vertex `n + 1` at `v`.
    pub fn add_whisker(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::SizeCap { what: "graph", n: self.n + 1, cap: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.push(bit(v));
        adj[v - 1] |= bit(self.n + 1);
        Ok(Graph::from_adjacency(adj))
    }

    /// `G ⊔_e K_t`: adds `t - 2` new vertices which together with the ends of
    /// `e` span a complete graph.
    pub fn clique_join(&self, e: (usize, usize), t: usize) -> Result<Graph> {
        let (a, b) = e;
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if !self.has_edge(a, b) {
            return Err(Error::EdgeAbsent(a.min(b), a.max(b)));
        }
        if t < 2 {
            return Err(Error::CliqueTooSmall(t));
        }
        let m = self.n + t - 2;
        if m > MAX_VERTICES {
            return Err(Error::SizeCap { what: "graph", n: m, cap: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        let fresh: u64 = (self.n + 1..=m).map(bit).sum();
        let clique = fresh | bit(a) | bit(b);
        adj[a - 1] |= fresh;
        adj[b - 1] |= fresh;
        for v in self.n + 1..=m {
            adj.push(clique & !bit(v));
        }
        Ok(Graph::from_adjacency(adj))
    }

    pub fn complement(&self) -> Graph {
        let all = self.all_mask();
        let adj = (1..=self.n).map(|v| all & !self.adj[v - 1] & !bit(v)).collect();
        Graph::from_adjacency(adj)
    }

    /// Induced subgraph on `vertices`, renumbered `1..=k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            self.check_vertex(u)?;
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i + 1, j + 1)?;
                }
            }
        }
        Ok(g)
    }

    /// Relabel vertex `v` as `sigma(v)`.
    pub fn relabel(&self, sigma: &Labeling) -> Result<Graph> {
        if sigma.len() != self.n {
            return Err(Error::InvalidLabeling(format!(
                "labeling has {} entries for {} vertices",
                sigma.len(),
                self.n
            )));
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            let (a, b) = (sigma.label(u), sigma.label(v));
            adj[a - 1] |= bit(b);
            adj[b - 1] |= bit(a);
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(self.n + other.n, &edges)
    }
}

/// A bijection `V(G) -> {1, ..., n}`; `label(v)` is the new name of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<usize>,
}

impl Labeling {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for &l in &labels {
            if l == 0 || l > n {
                return Err(Error::InvalidLabeling(format!("label {l} out of range 1..={n}")));
            }
            if seen[l] {
                return Err(Error::InvalidLabeling(format!("label {l} used twice")));
            }
            seen[l] = true;
        }
        Ok(Labeling { labels })
    }

    pub fn identity(n: usize) -> Self {
        Labeling { labels: (1..=n).collect() }
    }

    /// Labeling that gives the `k`-th vertex of `order` the label `k`.
    pub fn from_order(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let mut labels = vec![0; n];
        for (k, &v) in order.iter().enumerate() {
            if v == 0 || v > n || labels[v - 1] != 0 {
                return Err(Error::InvalidLabeling(format!("bad vertex order {order:?}")));
            }
            labels[v - 1] = k + 1;
        }
        Ok(Labeling { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn inverse(&self) -> Labeling {
        let mut inv = vec![0; self.labels.len()];
        for (i, &l) in self.labels.iter().enumerate() {
            inv[l - 1] = i + 1;
        }
        Labeling { labels: inv }
    }
}

/// A path given by its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPath {
    vertices: Vec<usize>,
}

impl VertexPath {
    /// Checks distinctness and adjacency of consecutive vertices in `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let mut seen = 0u64;
        for &v in &vertices {
            g.check_vertex(v)?;
            if seen & bit(v) != 0 {
                return Err(Error::InvalidPath(format!("vertex {v} repeats")));
            }
            seen |= bit(v);
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::InvalidPath(format!("{} and {} are not adjacent", w[0], w[1])));
            }
        }
        if vertices.is_empty() {
            return Err(Error::InvalidPath("empty".into()));
        }
        Ok(VertexPath { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net() -> Graph {
        net_graph()
    }

    #[test]
    fn components() {
        assert_eq!(Graph::path(3).unwrap().connected_components(), vec![vec![1, 2, 3]]);
        assert_eq!(Graph::empty(3).unwrap().connected_components(), vec![vec![1], vec![2], vec![3]]);
        let star = Graph::star(3).unwrap();
        let rest = star.component_masks(star.all_mask() & !bit(1));
        let rest: Vec<Vec<usize>> = rest.into_iter().map(|m| mask_vertices(m).collect()).collect();
        assert_eq!(rest, vec![vec![2], vec![3], vec![4]]);
    }

    #[test]
    fn cutpoints_match_brute_force() {
        assert_eq!(Graph::path(3).unwrap().cutpoints(), BTreeSet::from([2]));
        assert!(Graph::complete(3).unwrap().cutpoints().is_empty());
        let g = net();
        let brute: BTreeSet<usize> = (1..=6)
            .filter(|&v| {
                let keep: Vec<usize> = (1..=6).filter(|&u| u != v).collect();
                g.induced(&keep).unwrap().connected_components().len() > 1
            })
            .collect();
        assert_eq!(brute, BTreeSet::from([1, 2, 3]));
        assert_eq!(g.cutpoints(), brute);
    }

    #[test]
    fn blocks_of_small_graphs() {
        let g = net();
        assert_eq!(g.blocks(), vec![vec![1, 2, 3], vec![1, 4], vec![2, 5], vec![3, 6]]);
        assert!(g.is_block_graph());
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.blocks(), vec![vec![1, 2, 3, 4]]);
        assert!(!c4.is_block_graph());
        let tree = Graph::from_edges(5, &[(1, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        assert_eq!(tree.blocks().len(), 4);
        assert!(tree.is_block_graph());
        assert_eq!(Graph::empty(2).unwrap().blocks(), vec![vec![1], vec![2]]);
    }

    #[test]
    fn dominating_vertices() {
        assert_eq!(Graph::star(3).unwrap().dominating_set_t(), BTreeSet::from([1]));
        assert_eq!(Graph::complete(3).unwrap().dominating_set_t(), BTreeSet::from([1, 2, 3]));
        assert_eq!(Graph::path(3).unwrap().dominating_set_t(), BTreeSet::from([2]));
    }

    #[test]
    fn two_associated_primes() {
        assert!(Graph::path(3).unwrap().ass_count_is_two().unwrap());
        assert!(!Graph::complete(3).unwrap().ass_count_is_two().unwrap());
        assert!(Graph::star(3).unwrap().ass_count_is_two().unwrap());
        assert_eq!(Graph::empty(2).unwrap().ass_count_is_two(), Err(Error::Disconnected));
    }

    #[test]
    fn whiskers_and_clique_joins() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.add_whisker(1).unwrap(), Graph::from_edges(3, &[(1, 2), (1, 3)]).unwrap());
        let paw = Graph::complete(3).unwrap().add_whisker(1).unwrap();
        assert_eq!(paw.edge_count(), 4);
        let mut g = Graph::complete(3).unwrap();
        for v in 1..=3 {
            g = g.add_whisker(v).unwrap();
        }
        assert_eq!(g, net());
        assert!(k2.add_whisker(3).is_err());

        assert_eq!(k2.clique_join((1, 2), 3).unwrap(), Graph::complete(3).unwrap());
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.clique_join((1, 2), 2).unwrap(), p3);
        let joined = p3.clique_join((1, 2), 4).unwrap();
        assert_eq!(joined.n(), 5);
        assert!(joined.is_clique(&[1, 2, 4, 5]));
        assert!(!joined.has_edge(3, 4) && !joined.has_edge(3, 5));
        assert_eq!(p3.clique_join((1, 3), 3), Err(Error::EdgeAbsent(1, 3)));
        assert_eq!(p3.clique_join((1, 2), 1), Err(Error::CliqueTooSmall(1)));
    }

    #[test]
    fn labelings_validate() {
        assert!(Labeling::new(vec![2, 1, 3]).is_ok());
        assert!(Labeling::new(vec![1, 1, 3]).is_err());
        assert!(Labeling::new(vec![1, 4, 3]).is_err());
        let s = Labeling::from_order(&[3, 1, 2]).unwrap();
        assert_eq!(s.labels(), &[2, 3, 1]);
        assert_eq!(s.inverse().labels(), &[3, 1, 2]);
    }

    #[test]
    fn vertex_paths_validate() {
        let g = Graph::path(4).unwrap();
        assert!(VertexPath::new(&g, vec![1, 2, 3]).is_ok());
        assert!(VertexPath::new(&g, vec![1, 3]).is_err());
        assert!(VertexPath::new(&g, vec![1, 2, 1]).is_err());
    }
}
