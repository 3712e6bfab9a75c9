//! The facet complex `Δ(I)` of a squarefree monomial ideal and special odd
//! cycles in it.

use crate::bei::initial_monomials;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::Ideal;
use crate::poly::{Coeff, FieldKind, Monomial, Ring};

/// A simplicial complex given by its facets over named vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    names: Vec<String>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Faces contained in other faces are dropped; facets are sorted.
    pub fn new(names: Vec<String>, faces: Vec<Vec<usize>>) -> Result<Self> {
        let mut faces: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        for f in &faces {
            if let Some(&v) = f.iter().find(|&&v| v >= names.len()) {
                return Err(Error::VertexOutOfRange { vertex: v, n: names.len() });
            }
        }
        faces.sort();
        faces.dedup();
        let facets = faces.iter().filter(|f| !faces.iter().any(|g| g != *f && is_subset(f, g))).cloned().collect();
        Ok(SimplicialComplex { names, facets })
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn render_facet(&self, f: usize) -> Vec<String> {
        self.facets[f].iter().map(|&v| self.names[v].clone()).collect()
    }

    fn contains(&self, f: usize, v: usize) -> bool {
        self.facets[f].binary_search(&v).is_ok()
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// `Δ` of the monomial ideal generated by `monomials`: one facet per minimal
/// generator, its support.
pub fn delta_of_monomials(ring: &Ring, monomials: &[Monomial]) -> Result<SimplicialComplex> {
    if monomials.iter().any(|m| !m.is_squarefree() || m.nvars() != ring.nvars()) {
        return Err(Error::NotSquarefreeMonomial);
    }
    let minimal: Vec<&Monomial> =
        monomials.iter().filter(|m| !monomials.iter().any(|d| d != *m && d.divides(m))).collect();
    let names = (0..ring.nvars()).map(|i| ring.var_name(i)).collect();
    let mut faces: Vec<Vec<usize>> = minimal.iter().map(|m| m.support().collect()).collect();
    faces.dedup();
    SimplicialComplex::new(names, faces)
}

pub fn delta_of<C: Coeff>(ideal: &Ideal<C>) -> Result<SimplicialComplex> {
    let mut monomials = Vec::with_capacity(ideal.generators().len());
    for g in ideal.generators() {
        if !g.is_monomial() {
            return Err(Error::NotSquarefreeMonomial);
        }
        monomials.push(g.lm().clone());
    }
    delta_of_monomials(ideal.ring(), &monomials)
}

/// Alternating cycle `v_1, F_1, v_2, …, v_s, F_s, v_1` with vertex and facet
/// indices into a [`SimplicialComplex`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialCycle {
    pub vertices: Vec<usize>,
    pub facets: Vec<usize>,
}

impl SpecialCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks every defining condition of a special cycle against `delta`.
    pub fn validate(&self, delta: &SimplicialComplex) -> bool {
        let s = self.vertices.len();
        if s < 2 || self.facets.len() != s {
            return false;
        }
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        let mut fs = self.facets.clone();
        fs.sort_unstable();
        fs.dedup();
        if vs.len() != s || fs.len() != s || fs.iter().any(|&f| f >= delta.facets.len()) {
            return false;
        }
        (0..s).all(|i| {
            let f = self.facets[i];
            delta.contains(f, self.vertices[i]) && delta.contains(f, self.vertices[(i + 1) % s])
        }) && self.facets.iter().all(|&f| self.vertices.iter().filter(|&&v| delta.contains(f, v)).count() <= 2)
    }

    /// Rotation starting at the least vertex, with the smaller of the two
    /// traversal directions.
    pub fn canonical(&self) -> SpecialCycle {
        let s = self.vertices.len();
        let start = (0..s).min_by_key(|&i| self.vertices[i]).unwrap_or(0);
        let forward = SpecialCycle {
            vertices: (0..s).map(|k| self.vertices[(start + k) % s]).collect(),
            facets: (0..s).map(|k| self.facets[(start + k) % s]).collect(),
        };
        let backward = SpecialCycle {
            vertices: (0..s).map(|k| self.vertices[(start + s - k) % s]).collect(),
            facets: (0..s).map(|k| self.facets[(start + 2 * s - k - 1) % s]).collect(),
        };
        if forward.key() <= backward.key() {
            forward
        } else {
            backward
        }
    }

    fn key(&self) -> Vec<usize> {
        self.vertices.iter().zip(&self.facets).flat_map(|(&v, &f)| [v, f]).collect()
    }
}

struct Search<'a> {
    delta: &'a SimplicialComplex,
    vertices: Vec<usize>,
    facets: Vec<usize>,
    odd_only: bool,
    first_only: bool,
    found: Vec<SpecialCycle>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.first_only && !self.found.is_empty()
    }

    /// `vertices` has one more entry than `facets`; choose the next facet.
    fn step(&mut self) {
        let k = self.vertices.len();
        let last = self.vertices[k - 1];
        let start = self.vertices[0];
        for f in 0..self.delta.facets.len() {
            if self.done() {
                return;
            }
            if !self.delta.contains(f, last) || self.facets.contains(&f) {
                continue;
            }
            let on_cycle: Vec<usize> = self.vertices.iter().copied().filter(|&v| self.delta.contains(f, v)).collect();
            if on_cycle.len() > 2 {
                continue;
            }
            if on_cycle.len() == 2 {
                // f holds the start and the last vertex, so it can only close.
                if on_cycle[0] == start && k >= 2 && (!self.odd_only || (k >= 3 && k % 2 == 1)) {
                    self.facets.push(f);
                    let cycle = SpecialCycle { vertices: self.vertices.clone(), facets: self.facets.clone() };
                    if cycle == cycle.canonical() {
                        self.found.push(cycle);
                    }
                    self.facets.pop();
                }
                continue;
            }
            self.facets.push(f);
            for &v in &self.delta.facets[f] {
                if self.done() {
                    break;
                }
                if v <= start || self.vertices.contains(&v) {
                    continue;
                }
                if self.facets[..self.facets.len() - 1].iter().any(|&g| self.delta.contains(g, v)) {
                    continue;
                }
                self.vertices.push(v);
                self.step();
                self.vertices.pop();
            }
            self.facets.pop();
        }
    }
}

fn search(delta: &SimplicialComplex, odd_only: bool, first_only: bool) -> Vec<SpecialCycle> {
    let mut s = Search { delta, vertices: Vec::new(), facets: Vec::new(), odd_only, first_only, found: Vec::new() };
    for v in 0..delta.names.len() {
        if s.done() {
            break;
        }
        s.vertices.push(v);
        s.step();
        s.vertices.pop();
    }
    s.found
}

/// A special cycle of odd length `s ≥ 3`, if any.
pub fn find_special_odd_cycle(delta: &SimplicialComplex) -> Option<SpecialCycle> {
    search(delta, true, true).into_iter().next()
}

/// Every special cycle (length `s ≥ 2`), each reported once in canonical form.
pub fn all_special_cycles(delta: &SimplicialComplex) -> Vec<SpecialCycle> {
    search(delta, false, false)
}

/// `Δ(in_<(J_G))`.
pub fn initial_complex(g: &Graph) -> Result<SimplicialComplex> {
    let ring = Ring::new(g.n(), FieldKind::Rational);
    delta_of_monomials(&ring, &initial_monomials(g))
}

/// True when `Δ(in_<(J_G))` has no special odd cycle, which certifies
/// `J_G^(t) = J_G^t` for all `t`; false certifies nothing.
pub fn equality_criterion_via_cycles(g: &Graph) -> bool {
    find_special_odd_cycle(&initial_complex(g).expect("initial ideals are squarefree")).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bei::initial_ideal;
    use crate::graph::net_graph;
    use crate::poly::Rational;

    fn named(faces: Vec<Vec<usize>>, n: usize) -> SimplicialComplex {
        SimplicialComplex::new((0..n).map(|i| format!("v{i}")).collect(), faces).unwrap()
    }

    fn rendered(d: &SimplicialComplex) -> Vec<Vec<String>> {
        (0..d.facets().len()).map(|f| d.render_facet(f)).collect()
    }

    #[test]
    fn complexes_of_initial_ideals() {
        let p3 = Graph::path(3).unwrap();
        let d = delta_of(&initial_ideal::<Rational>(&p3, FieldKind::Rational)).unwrap();
        assert_eq!(rendered(&d), vec![vec!["x1", "y2"], vec!["x2", "y3"]]);
        let star = Graph::star(3).unwrap();
        let d = initial_complex(&star).unwrap();
        let mut facets = rendered(&d);
        facets.sort();
        assert_eq!(
            facets,
            vec![
                vec!["x1", "y2"],
                vec!["x1", "y3"],
                vec!["x1", "y4"],
                vec!["x2", "y1", "y3"],
                vec!["x2", "y1", "y4"],
                vec!["x3", "y1", "y4"],
            ]
        );
    }

    #[test]
    fn rejects_non_squarefree() {
        let r = std::sync::Arc::new(Ring::new(1, FieldKind::Rational));
        let x: crate::poly::Polynomial<Rational> = r.var(r.x(1));
        let sq = Ideal::new(r.clone(), vec![x.mul(&x, &r)]).unwrap();
        assert_eq!(delta_of(&sq), Err(Error::NotSquarefreeMonomial));
        let single = Ideal::new(r.clone(), vec![x]).unwrap();
        assert_eq!(rendered(&delta_of(&single).unwrap()), vec![vec!["x1"]]);
    }

    #[test]
    fn triangle_has_odd_cycle() {
        let d = named(vec![vec![0, 1], vec![1, 2], vec![0, 2]], 3);
        let c = find_special_odd_cycle(&d).unwrap();
        assert_eq!(c.vertices, vec![0, 1, 2]);
        assert!(c.validate(&d));
        assert_eq!(all_special_cycles(&d).len(), 1);
        assert!(find_special_odd_cycle(&named(vec![vec![0, 1, 2]], 3)).is_none());
        let filled = named(vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![0, 1, 2]], 3);
        assert!(find_special_odd_cycle(&filled).is_none());
    }

    #[test]
    fn criterion_on_small_graphs() {
        assert!(equality_criterion_via_cycles(&Graph::complete(2).unwrap()));
        for t in 1..=5 {
            assert!(equality_criterion_via_cycles(&Graph::star(t).unwrap()));
        }
        assert!(!equality_criterion_via_cycles(&net_graph()));
    }
}
