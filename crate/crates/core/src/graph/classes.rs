//! Graph-class recognizers and the labelings they certify.

use itertools::Itertools;

use super::{bit, mask_vertices, Graph, Labeling, VertexPath};
use crate::error::{Error, Result};

/// Largest `n` for which existential labeling searches enumerate all `n!`
/// labelings.
pub const LABELING_SEARCH_CAP: usize = 8;

impl Graph {
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n()
    }

    /// Trees whose non-leaf vertices lie on a single path.
    pub fn is_caterpillar(&self) -> bool {
        if !self.is_tree() {
            return false;
        }
        let spine: u64 = (1..=self.n()).filter(|&v| self.degree(v) >= 2).map(bit).sum();
        if spine == 0 {
            return true;
        }
        // The spine of a tree is connected; it is a path iff no spine vertex
        // has three spine neighbours.
        mask_vertices(spine).all(|v| (self.neighbor_mask(v) & spine).count_ones() <= 2)
    }

    /// The lexicographically least longest path of a caterpillar.
    pub fn central_path(&self) -> Result<VertexPath> {
        if !self.is_caterpillar() {
            return Err(Error::NotCaterpillar);
        }
        let mut best: Vec<usize> = vec![1];
        for start in 1..=self.n() {
            let mut stack = vec![vec![start]];
            while let Some(path) = stack.pop() {
                let last = *path.last().unwrap();
                let prev = if path.len() >= 2 { path[path.len() - 2] } else { 0 };
                if path.len() > best.len() || (path.len() == best.len() && path < best) {
                    best = path.clone();
                }
                for w in self.neighbors(last).filter(|&w| w != prev) {
                    let mut next = path.clone();
                    next.push(w);
                    stack.push(next);
                }
            }
        }
        VertexPath::new(self, best)
    }

    /// Labeling that walks the central path from its first vertex, giving
    /// each path vertex the next label and then its whiskers.
    pub fn caterpillar_labeling(&self) -> Result<Labeling> {
        let path = self.central_path()?;
        let on_path: u64 = path.vertices().iter().map(|&v| bit(v)).sum();
        let mut order = Vec::with_capacity(self.n());
        for &p in path.vertices() {
            order.push(p);
            order.extend(mask_vertices(self.neighbor_mask(p) & !on_path));
        }
        Labeling::from_order(&order)
    }

    /// Attempt to read the graph as a generalized caterpillar whose central
    /// path is exactly `path`.
    fn gen_caterpillar_along(&self, path: &[usize]) -> Option<GenCatWitness> {
        let k = path.len();
        let on_path: u64 = path.iter().map(|&v| bit(v)).sum();
        let mut position = vec![usize::MAX; self.n() + 1];
        for (i, &p) in path.iter().enumerate() {
            position[p] = i;
        }
        // role[v]: leaf of path vertex i, clique vertex on path edge (i, i+1),
        // or whisker hanging off a clique vertex.
        #[derive(Clone, Copy, PartialEq)]
        enum Role {
            Path,
            Leaf(usize),
            Clique(usize),
            CliqueWhisker(usize),
        }
        let mut role = vec![Role::Path; self.n() + 1];
        for v in 1..=self.n() {
            if on_path & bit(v) != 0 {
                continue;
            }
            let touching: Vec<usize> =
                mask_vertices(self.neighbor_mask(v) & on_path).map(|p| position[p]).sorted().collect();
            role[v] = match touching.as_slice() {
                [i] if self.degree(v) == 1 => Role::Leaf(*i),
                [i, j] if j - i == 1 => Role::Clique(*i),
                [] if self.degree(v) == 1 => Role::CliqueWhisker(self.neighbors(v).next()?),
                _ => return None,
            };
        }
        for v in 1..=self.n() {
            if let Role::CliqueWhisker(anchor) = role[v] {
                if !matches!(role[anchor], Role::Clique(_)) {
                    return None;
                }
            }
        }
        for (u, v) in self.edges() {
            let ok = match (role[u], role[v]) {
                (Role::Path, Role::Path) => position[u].abs_diff(position[v]) == 1,
                (Role::Path, Role::Leaf(i)) => position[u] == i,
                (Role::Leaf(i), Role::Path) => position[v] == i,
                (Role::Path, Role::Clique(i)) => position[u] == i || position[u] == i + 1,
                (Role::Clique(i), Role::Path) => position[v] == i || position[v] == i + 1,
                (Role::Clique(i), Role::Clique(j)) => i == j,
                (Role::Clique(_), Role::CliqueWhisker(a)) => a == u,
                (Role::CliqueWhisker(a), Role::Clique(_)) => a == v,
                _ => false,
            };
            if !ok {
                return None;
            }
        }
        let mut cliques: Vec<Vec<usize>> = vec![Vec::new(); k.saturating_sub(1)];
        for v in 1..=self.n() {
            if let Role::Clique(i) = role[v] {
                cliques[i].push(v);
            }
        }
        if cliques.iter().any(|c| !self.is_clique(c)) {
            return None;
        }

        let interior = |i: usize| i > 0 && i + 1 < k;
        let mut base_vertices = path.to_vec();
        let mut whiskers = Vec::new();
        for (i, &p) in path.iter().enumerate() {
            for v in 1..=self.n() {
                if role[v] == Role::Leaf(i) {
                    if interior(i) {
                        base_vertices.push(v);
                    } else {
                        whiskers.push((p, v));
                    }
                }
            }
        }
        let base = self.induced(&base_vertices).ok()?;
        let mut joins = Vec::new();
        for (i, clique) in cliques.iter().enumerate() {
            if clique.is_empty() {
                continue;
            }
            joins.push(CliqueJoin {
                edge: (path[i], path[i + 1]),
                size: clique.len() + 2,
                new_vertices: clique.clone(),
            });
            for &z in clique {
                for v in 1..=self.n() {
                    if role[v] == Role::CliqueWhisker(z) {
                        whiskers.push((z, v));
                    }
                }
            }
        }
        Some(GenCatWitness {
            base_vertices,
            base,
            central_path: VertexPath::new(self, path.to_vec()).ok()?,
            joins,
            whiskers,
        })
    }

    /// A decomposition as caterpillar + clique joins on distinct central-path
    /// edges + whiskers, with the longest (then lexicographically least)
    /// central path; `None` if no decomposition exists.
    pub fn generalized_caterpillar(&self) -> Option<GenCatWitness> {
        if !self.is_connected() || !self.is_block_graph() {
            return None;
        }
        // Central paths are induced, and induced paths in a block graph are
        // the unique shortest paths between their ends.
        let mut candidates: Vec<Vec<usize>> = (1..=self.n()).map(|v| vec![v]).collect();
        for u in 1..=self.n() {
            let parents = self.bfs_parents(u);
            for v in 1..=self.n() {
                if v == u {
                    continue;
                }
                let mut path = vec![v];
                let mut cur = v;
                while cur != u {
                    cur = parents[cur];
                    path.push(cur);
                }
                path.reverse();
                candidates.push(path);
            }
        }
        candidates.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        candidates.iter().find_map(|p| self.gen_caterpillar_along(p))
    }

    pub fn is_generalized_caterpillar(&self) -> bool {
        self.generalized_caterpillar().is_some()
    }

    fn bfs_parents(&self, root: usize) -> Vec<usize> {
        let mut parent = vec![0; self.n() + 1];
        let mut seen = bit(root);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if seen & bit(w) == 0 {
                    seen |= bit(w);
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// Labeling of a net-free generalized caterpillar: walk the central path,
    /// labeling each path vertex, then its whiskers, then the clique joined on
    /// the next path edge (each clique vertex followed by its whiskers).
    pub fn gencat_labeling(&self) -> Result<Labeling> {
        let witness = self.generalized_caterpillar().ok_or(Error::NotGeneralizedCaterpillar)?;
        if !self.is_net_free() {
            return Err(Error::NotNetFree);
        }
        let path = witness.central_path.vertices();
        let on_path: u64 = path.iter().map(|&v| bit(v)).sum();
        let mut order = Vec::with_capacity(self.n());
        for (i, &p) in path.iter().enumerate() {
            order.push(p);
            for v in mask_vertices(self.neighbor_mask(p) & !on_path) {
                if self.degree(v) == 1 {
                    order.push(v);
                }
            }
            if let Some(next) = path.get(i + 1) {
                if let Some(join) = witness.joins.iter().find(|j| j.edge == (p, *next)) {
                    for &z in &join.new_vertices {
                        order.push(z);
                        order.extend(witness.whiskers.iter().filter(|w| w.0 == z).map(|w| w.1));
                    }
                }
            }
        }
        Labeling::from_order(&order)
    }

    /// No six vertices induce a net.
    pub fn is_net_free(&self) -> bool {
        self.find_induced_net().is_none()
    }

    /// Six vertices inducing a net, as (triangle, pendants) with the pendant
    /// `k` attached to triangle vertex `k`.
    pub fn find_induced_net(&self) -> Option<([usize; 3], [usize; 3])> {
        if self.n() < 6 {
            return None;
        }
        for subset in (1..=self.n()).combinations(6) {
            let mask: u64 = subset.iter().map(|&v| bit(v)).sum();
            let deg = |v: usize| (self.neighbor_mask(v) & mask).count_ones();
            let tri: Vec<usize> = subset.iter().copied().filter(|&v| deg(v) == 3).collect();
            let pend: Vec<usize> = subset.iter().copied().filter(|&v| deg(v) == 1).collect();
            if tri.len() != 3 || pend.len() != 3 || !self.is_clique(&tri) {
                continue;
            }
            let mut anchors = [0usize; 3];
            let mut ok = true;
            for (k, &t) in tri.iter().enumerate() {
                match pend.iter().find(|&&p| self.has_edge(p, t)) {
                    Some(&p) => anchors[k] = p,
                    None => ok = false,
                }
            }
            if ok && anchors.iter().all_unique() {
                return Some(([tri[0], tri[1], tri[2]], anchors));
            }
        }
        None
    }

    /// Closedness of the graph under the labeling `sigma`: for edges `{i, j}`
    /// and `{k, l}` with `i < j`, `k < l`, `{j, l}` is an edge when `i = k`
    /// and `{i, k}` is an edge when `j = l`.
    pub fn is_closed_with_labeling(&self, sigma: &Labeling) -> Result<bool> {
        let h = self.relabel(sigma)?;
        let edges = h.edges();
        for &(i, j) in &edges {
            for &(k, l) in &edges {
                if i == k && j != l && !h.has_edge(j, l) {
                    return Ok(false);
                }
                if j == l && i != k && !h.has_edge(i, k) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn find_closed_labeling(&self) -> Result<Option<Labeling>> {
        self.find_closed_labeling_capped(LABELING_SEARCH_CAP)
    }

    pub fn find_closed_labeling_capped(&self, cap: usize) -> Result<Option<Labeling>> {
        search_labelings(self, "closed-labeling search", cap, |s| self.is_closed_with_labeling(s).unwrap_or(false))
    }

    pub fn is_closed(&self) -> Result<bool> {
        Ok(self.find_closed_labeling()?.is_some())
    }

    pub fn is_closed_capped(&self, cap: usize) -> Result<bool> {
        Ok(self.find_closed_labeling_capped(cap)?.is_some())
    }

    /// For all `i < j < k` with `{i, k}` an edge, `{i, j}` or `{j, k}` is an
    /// edge, after relabeling by `sigma`.
    pub fn is_weakly_closed_with_labeling(&self, sigma: &Labeling) -> Result<bool> {
        let h = self.relabel(sigma)?;
        for (i, k) in h.edges() {
            let between = if k - i > 1 { ((1u64 << (k - 1)) - 1) & !((1u64 << i) - 1) } else { 0 };
            if between & !(h.neighbor_mask(i) | h.neighbor_mask(k)) != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn find_weakly_closed_labeling(&self) -> Result<Option<Labeling>> {
        self.find_weakly_closed_labeling_capped(LABELING_SEARCH_CAP)
    }

    pub fn find_weakly_closed_labeling_capped(&self, cap: usize) -> Result<Option<Labeling>> {
        search_labelings(self, "weakly-closed labeling search", cap, |s| {
            self.is_weakly_closed_with_labeling(s).unwrap_or(false)
        })
    }

    /// Exhaustive over labelings up to the search cap, otherwise decided by
    /// transitive orientability of the complement.
    pub fn is_weakly_closed(&self) -> bool {
        self.is_weakly_closed_capped(LABELING_SEARCH_CAP)
    }

    pub fn is_weakly_closed_capped(&self, cap: usize) -> bool {
        match self.find_weakly_closed_labeling_capped(cap) {
            Ok(found) => found.is_some(),
            Err(_) => self.complement().is_comparability(),
        }
    }

    pub fn is_comparability(&self) -> bool {
        self.transitive_orientation().is_some()
    }

    /// A transitive orientation as a list of arcs `(from, to)`, found by
    /// backtracking over edge orientations with forced-orientation
    /// propagation.
    pub fn transitive_orientation(&self) -> Option<Vec<(usize, usize)>> {
        let n = self.n();
        // dir[u][v] = 1 means u -> v, -1 means v -> u, 0 unoriented.
        let state = vec![vec![0i8; n + 1]; n + 1];
        let solved = orient_search(self, state)?;
        let mut arcs = Vec::new();
        for (u, v) in self.edges() {
            if solved[u][v] == 1 {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
        Some(arcs)
    }

    /// Maximum total degree over the reduced Gröbner basis of `J_G` after
    /// relabeling by `sigma`.
    pub fn gb_max_degree(&self, sigma: &Labeling) -> Result<usize> {
        let h = self.relabel(sigma)?;
        Ok(crate::bei::combinatorial_gb_max_degree(&h))
    }

    /// Least `gb_max_degree` over all labelings (the `m` of m-closedness),
    /// with a labeling attaining it.
    pub fn min_gb_max_degree(&self) -> Result<(usize, Labeling)> {
        self.min_gb_max_degree_capped(MIN_DEGREE_SEARCH_CAP)
    }

    pub fn min_gb_max_degree_capped(&self, cap: usize) -> Result<(usize, Labeling)> {
        if self.n() > cap {
            return Err(Error::SizeCap { what: "m-closed search", n: self.n(), cap });
        }
        let mut best: Option<(usize, Labeling)> = None;
        for perm in (1..=self.n()).permutations(self.n()) {
            let sigma = Labeling::new(perm)?;
            let d = self.gb_max_degree(&sigma)?;
            if best.as_ref().is_none_or(|b| d < b.0) {
                best = Some((d, sigma));
            }
        }
        Ok(best.expect("at least one labeling"))
    }
}

/// Cap for the exhaustive m-closed minimum.
pub const MIN_DEGREE_SEARCH_CAP: usize = 7;

fn search_labelings(
    g: &Graph,
    what: &'static str,
    cap: usize,
    mut accept: impl FnMut(&Labeling) -> bool,
) -> Result<Option<Labeling>> {
    if g.n() > cap {
        return Err(Error::SizeCap { what, n: g.n(), cap });
    }
    for perm in (1..=g.n()).permutations(g.n()) {
        let sigma = Labeling::new(perm)?;
        if accept(&sigma) {
            return Ok(Some(sigma));
        }
    }
    Ok(None)
}

fn set_arc(g: &Graph, dir: &mut [Vec<i8>], from: usize, to: usize) -> bool {
    let mut queue = vec![(from, to)];
    while let Some((a, b)) = queue.pop() {
        match dir[a][b] {
            1 => continue,
            -1 => return false,
            _ => {}
        }
        dir[a][b] = 1;
        dir[b][a] = -1;
        for c in 1..=g.n() {
            if c == a || c == b {
                continue;
            }
            let ac = g.has_edge(a, c);
            let bc = g.has_edge(b, c);
            // a -> b with b - c but no a - c: both arcs must enter b.
            if bc && !ac {
                queue.push((c, b));
            }
            // c - a but no c - b: both arcs must leave a.
            if ac && !bc {
                queue.push((a, c));
            }
            // Transitivity.
            if bc && dir[b][c] == 1 {
                if !ac {
                    return false;
                }
                queue.push((a, c));
            }
            if ac && dir[c][a] == 1 {
                if !bc {
                    return false;
                }
                queue.push((c, b));
            }
        }
    }
    true
}

fn orient_search(g: &Graph, dir: Vec<Vec<i8>>) -> Option<Vec<Vec<i8>>> {
    let next = g.edges().into_iter().find(|&(u, v)| dir[u][v] == 0);
    let Some((u, v)) = next else {
        return Some(dir);
    };
    for (a, b) in [(u, v), (v, u)] {
        let mut trial = dir.clone();
        if set_arc(g, &mut trial, a, b) {
            if let Some(done) = orient_search(g, trial) {
                return Some(done);
            }
        }
    }
    None
}

/// The net: triangle `{1, 2, 3}` with pendant vertices 4, 5, 6 attached to
/// 1, 2, 3 respectively.
pub fn net_graph() -> Graph {
    Graph::from_edges(6, &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)]).expect("net is a valid graph")
}

/// `K_t` glued onto a central-path edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueJoin {
    pub edge: (usize, usize),
    pub size: usize,
    pub new_vertices: Vec<usize>,
}

/// A generalized-caterpillar decomposition, with all vertices named as in
/// the recognized graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenCatWitness {
    /// `base` vertex `k` is graph vertex `base_vertices[k - 1]`.
    pub base_vertices: Vec<usize>,
    /// The caterpillar tree the construction starts from.
    pub base: Graph,
    pub central_path: VertexPath,
    pub joins: Vec<CliqueJoin>,
    /// `(anchor, leaf)` pairs, added after all joins.
    pub whiskers: Vec<(usize, usize)>,
}

impl GenCatWitness {
    /// Rebuild the graph through `clique_join` and `add_whisker`, naming the
    /// added vertices as recorded.
    pub fn replay(&self) -> Result<Graph> {
        let path = self.central_path.vertices();
        let mut seen_edges = Vec::new();
        for join in &self.joins {
            let on_path = path.windows(2).any(|w| (w[0], w[1]) == join.edge || (w[1], w[0]) == join.edge);
            if !on_path || seen_edges.contains(&join.edge) {
                return Err(Error::NotGeneralizedCaterpillar);
            }
            seen_edges.push(join.edge);
        }
        if !self.base.is_caterpillar() {
            return Err(Error::NotGeneralizedCaterpillar);
        }
        let mut names = self.base_vertices.clone();
        let local = |names: &[usize], v: usize| -> Result<usize> {
            names.iter().position(|&w| w == v).map(|p| p + 1).ok_or(Error::NotGeneralizedCaterpillar)
        };
        let mut g = self.base.clone();
        for join in &self.joins {
            if join.new_vertices.len() + 2 != join.size {
                return Err(Error::NotGeneralizedCaterpillar);
            }
            let e = (local(&names, join.edge.0)?, local(&names, join.edge.1)?);
            g = g.clique_join(e, join.size)?;
            names.extend(&join.new_vertices);
        }
        for &(anchor, leaf) in &self.whiskers {
            g = g.add_whisker(local(&names, anchor)?)?;
            names.push(leaf);
        }
        g.relabel(&Labeling::new(names)?)
    }
}
