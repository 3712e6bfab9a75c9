//! Binomial edge ideals, admissible paths and the combinatorial Gröbner basis.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::{Graph, Labeling};
use crate::ideal::Ideal;
use crate::poly::{Coeff, FieldKind, Monomial, Polynomial, Ring};

/// Interior sequences longer than this are checked for condition 2 by a
/// quadratic chain search instead of subset enumeration.
const SUBSET_CHECK_LIMIT: usize = 20;

/// A path `i, i_1, …, i_r, j` (with `i < j`) satisfying both admissibility
/// conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePath {
    pub i: usize,
    pub j: usize,
    pub interior: Vec<usize>,
}

impl AdmissiblePath {
    /// Vertex sequence including both endpoints.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.interior.len() + 2);
        v.push(self.i);
        v.extend_from_slice(&self.interior);
        v.push(self.j);
        v
    }

    /// `u_π` as a monomial of `ring`.
    pub fn u_pi(&self, ring: &Ring) -> Monomial {
        let mut exps = vec![0u16; ring.nvars()];
        for &v in &self.interior {
            if v > self.j {
                exps[ring.x(v)] += 1;
            } else if v < self.i {
                exps[ring.y(v)] += 1;
            }
        }
        Monomial::from_exponents(&exps)
    }

    /// Degree of `u_π f_ij`.
    pub fn degree(&self) -> usize {
        self.interior.len() + 2
    }
}

/// `J_G` with one generator `x_i y_j - x_j y_i` per edge `i < j`.
pub fn binomial_edge_ideal<C: Coeff>(g: &Graph, field: FieldKind) -> Ideal<C> {
    let ring = Arc::new(Ring::new(g.n(), field));
    let gens = g.edges().into_iter().map(|(i, j)| ring.minor(i, j)).collect();
    Ideal::new(ring, gens).expect("generators built in the ring")
}

/// Whether some proper subsequence of `seq` (keeping both ends) is a path.
pub fn has_shortcut(g: &Graph, seq: &[usize]) -> bool {
    let r = seq.len();
    if r <= 2 {
        return false;
    }
    let interior = r - 2;
    if interior <= SUBSET_CHECK_LIMIT {
        let full = (1u32 << interior) - 1;
        (0..full).any(|keep| {
            let mut prev = seq[0];
            for (k, &v) in seq[1..r - 1].iter().enumerate() {
                if keep & (1 << k) != 0 {
                    if !g.has_edge(prev, v) {
                        return false;
                    }
                    prev = v;
                }
            }
            g.has_edge(prev, seq[r - 1])
        })
    } else {
        // reach[q]: a chain seq[0] → seq[q]; skipped[q]: such a chain omitting a vertex.
        let mut reach = vec![false; r];
        let mut skipped = vec![false; r];
        reach[0] = true;
        for q in 1..r {
            for p in 0..q {
                if reach[p] && g.has_edge(seq[p], seq[q]) {
                    reach[q] = true;
                    skipped[q] |= skipped[p] || p + 1 < q;
                }
            }
        }
        skipped[r - 1]
    }
}

fn paths_between(g: &Graph, i: usize, j: usize) -> Vec<AdmissiblePath> {
    let mut out = Vec::new();
    let mut stack = vec![i];
    let mut used = vec![false; g.n() + 1];
    used[i] = true;
    extend(g, i, j, &mut stack, &mut used, &mut out);
    out
}

fn extend(g: &Graph, i: usize, j: usize, stack: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<AdmissiblePath>) {
    let last = *stack.last().expect("path starts at i");
    for v in g.neighbors(last) {
        if v == j {
            stack.push(j);
            if !has_shortcut(g, stack) {
                out.push(AdmissiblePath { i, j, interior: stack[1..stack.len() - 1].to_vec() });
            }
            stack.pop();
            continue;
        }
        if used[v] || (v > i && v < j) {
            continue;
        }
        // Any completion through v keeps the shortcut to v or to j.
        let prev = &stack[..stack.len() - 1];
        if prev.iter().any(|&u| g.has_edge(u, v)) || g.has_edge(last, j) {
            continue;
        }
        used[v] = true;
        stack.push(v);
        extend(g, i, j, stack, used, out);
        stack.pop();
        used[v] = false;
    }
}

/// All admissible paths, ordered by endpoints and then interior.
pub fn admissible_paths(g: &Graph) -> Vec<AdmissiblePath> {
    let n = g.n();
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let mut paths: Vec<AdmissiblePath> = pairs.par_iter().flat_map_iter(|&(i, j)| paths_between(g, i, j)).collect();
    paths.sort_by(|a, b| (a.i, a.j, &a.interior).cmp(&(b.i, b.j, &b.interior)));
    paths
}

/// `{u_π f_ij}` over all admissible paths: monic, deduplicated and sorted by
/// decreasing leading monomial.
pub fn groebner_combinatorial<C: Coeff>(g: &Graph, field: FieldKind) -> Vec<Polynomial<C>> {
    let ring = Ring::new(g.n(), field);
    let one = ring.coeff::<C>(1);
    let mut out: Vec<Polynomial<C>> =
        admissible_paths(g).iter().map(|p| ring.minor::<C>(p.i, p.j).mul_term(&p.u_pi(&ring), &one)).collect();
    let ord = ring.order();
    out.sort_by(|a, b| ord.cmp(b.lm(), a.lm()).then_with(|| a.len().cmp(&b.len())));
    out.dedup();
    out
}

/// Minimal monomial generators of the lex initial ideal, sorted decreasing.
pub fn initial_monomials(g: &Graph) -> Vec<Monomial> {
    let ring = Ring::new(g.n(), FieldKind::Rational);
    let mut lms: Vec<Monomial> = admissible_paths(g)
        .iter()
        .map(|p| {
            let mut exps = p.u_pi(&ring).exponents().to_vec();
            exps[ring.x(p.i)] += 1;
            exps[ring.y(p.j)] += 1;
            Monomial::from_exponents(&exps)
        })
        .collect();
    let ord = ring.order();
    lms.sort_by(|a, b| ord.cmp(b, a));
    lms.dedup();
    let minimal: Vec<Monomial> = lms.iter().filter(|m| !lms.iter().any(|d| d != *m && d.divides(m))).cloned().collect();
    minimal
}

/// `in_<(J_G)` as a monomial ideal.
pub fn initial_ideal<C: Coeff>(g: &Graph, field: FieldKind) -> Ideal<C> {
    let ring = Arc::new(Ring::new(g.n(), field));
    let one = ring.coeff::<C>(1);
    let gens = initial_monomials(g).into_iter().map(|m| Polynomial::from_monomial(m, one.clone())).collect();
    Ideal::new(ring, gens).expect("generators built in the ring")
}

/// Maximum degree of the reduced Gröbner basis of `J_G` in the given labeling.
pub fn combinatorial_gb_max_degree(g: &Graph) -> usize {
    admissible_paths(g).iter().map(AdmissiblePath::degree).max().unwrap_or(0)
}

/// Same as [`combinatorial_gb_max_degree`] after relabeling by `sigma`.
pub fn gb_max_degree(g: &Graph, sigma: &Labeling) -> Result<usize> {
    g.gb_max_degree(sigma)
}
