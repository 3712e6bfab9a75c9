//! Prime components `P_U(G)`, minimal primes, symbolic powers and the
//! ordinary-versus-symbolic equality verdict.

use std::sync::Arc;

use rayon::prelude::*;

use crate::bei::binomial_edge_ideal;
use crate::error::{Error, Result};
use crate::graph::{bit, mask_vertices, Graph};
use crate::ideal::Ideal;
use crate::poly::{Coeff, FieldKind, Polynomial, Ring};

/// Default bound on `n` for the `2^n` enumeration of vertex subsets.
pub const PRIME_ENUMERATION_CAP: usize = 8;

/// Up to this many vertices the cutpoint criterion is checked against
/// containment filtering on every call.
pub const CROSS_CHECK_MAX_N: usize = 5;

/// `P_U(G) = (x_i, y_i : i ∈ U) + J_{K(G_1)} + … + J_{K(G_c)}`, where the
/// `G_k` are the components of `G` restricted to `[n] ∖ U`.
#[derive(Clone, Debug)]
pub struct PrimeComponent<C: Coeff> {
    pub u: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub ideal: Ideal<C>,
}

impl<C: Coeff> PrimeComponent<C> {
    /// `c(U)`, the number of components of the restricted graph.
    pub fn component_count(&self) -> usize {
        self.components.len()
    }
}

fn subset_mask(g: &Graph, u: &[usize]) -> Result<u64> {
    let mut mask = 0;
    for &v in u {
        if v < 1 || v > g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        mask |= bit(v);
    }
    Ok(mask)
}

fn component_of_mask<C: Coeff>(g: &Graph, ring: &Arc<Ring>, mask: u64) -> PrimeComponent<C> {
    let rest = g.all_mask() & !mask;
    let comps = g.component_masks(rest);
    let mut gens: Vec<Polynomial<C>> = Vec::new();
    for v in mask_vertices(mask) {
        gens.push(ring.var(ring.x(v)));
        gens.push(ring.var(ring.y(v)));
    }
    let components: Vec<Vec<usize>> = comps.iter().map(|&c| mask_vertices(c).collect()).collect();
    for comp in &components {
        for (k, &a) in comp.iter().enumerate() {
            for &b in &comp[k + 1..] {
                gens.push(ring.minor(a, b));
            }
        }
    }
    PrimeComponent {
        u: mask_vertices(mask).collect(),
        components,
        ideal: Ideal::new(ring.clone(), gens).expect("generators built in the ring"),
    }
}

pub fn prime_component<C: Coeff>(g: &Graph, u: &[usize], field: FieldKind) -> Result<PrimeComponent<C>> {
    let mask = subset_mask(g, u)?;
    let ring = Arc::new(Ring::new(g.n(), field));
    Ok(component_of_mask(g, &ring, mask))
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::SizeCap { what: "minimal primes", n: g.n(), cap });
    }
    Ok(())
}

fn components_count(g: &Graph, mask: u64) -> usize {
    g.component_masks(g.all_mask() & !mask).len()
}

/// Subsets `U` (as sorted vertex lists) with each `i ∈ U` a cut point of the
/// graph restricted to `([n] ∖ U) ∪ {i}`, i.e. `c(U ∖ {i}) < c(U)`.
pub fn cutpoint_prime_sets(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    check_cap(g, cap)?;
    let mut out: Vec<u64> = (0..1u64 << g.n())
        .filter(|&mask| {
            let c = components_count(g, mask);
            mask_vertices(mask).all(|i| components_count(g, mask & !bit(i)) < c)
        })
        .collect();
    out.sort_by_key(|&m| (m.count_ones(), mask_vertices(m).collect::<Vec<_>>()));
    Ok(out.into_iter().map(|m| mask_vertices(m).collect()).collect())
}

/// Subsets `U` whose `P_U` is inclusion-minimal among all `P_V`, decided by
/// Gröbner-basis membership.
pub fn containment_prime_sets(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    check_cap(g, cap)?;
    let ring = Arc::new(Ring::new(g.n(), FieldKind::Rational));
    let all: Vec<PrimeComponent<crate::poly::Rational>> =
        (0..1u64 << g.n()).into_par_iter().map(|m| component_of_mask(g, &ring, m)).collect();
    all.par_iter().for_each(|p| {
        p.ideal.gb();
    });
    let minimal: Vec<bool> = (0..all.len())
        .into_par_iter()
        .map(|k| {
            !all.iter().enumerate().any(|(l, other)| {
                l != k
                    && all[k].ideal.contains(&other.ideal).expect("same ring")
                    && !other.ideal.contains(&all[k].ideal).expect("same ring")
            })
        })
        .collect();
    let mut out: Vec<Vec<usize>> =
        all.iter().zip(minimal).filter(|(_, keep)| *keep).map(|(p, _)| p.u.clone()).collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out)
}

/// Minimal primes of `J_G`, ordered by `|U|` and then lexicographically.
///
/// Uses the cutpoint criterion; for `n ≤ CROSS_CHECK_MAX_N` the result is
/// also recomputed by containment filtering and any disagreement is an error.
pub fn minimal_primes<C: Coeff>(g: &Graph, cap: usize, field: FieldKind) -> Result<Vec<PrimeComponent<C>>> {
    let sets = cutpoint_prime_sets(g, cap)?;
    if g.n() <= CROSS_CHECK_MAX_N {
        let truth = containment_prime_sets(g, cap)?;
        if truth != sets {
            return Err(Error::CrossCheck(format!("cutpoint criterion gave {sets:?}, containment gave {truth:?}")));
        }
    }
    let ring = Arc::new(Ring::new(g.n(), field));
    sets.iter().map(|u| Ok(component_of_mask(g, &ring, subset_mask(g, u)?))).collect()
}

/// Intersection of a nonempty list, split in halves that run in parallel.
pub fn intersect_all<C: Coeff>(mut ideals: Vec<Ideal<C>>) -> Result<Ideal<C>> {
    match ideals.len() {
        0 => unreachable!("every graph has a minimal prime"),
        1 => Ok(ideals.pop().expect("one ideal")),
        len => {
            let right = ideals.split_off(len / 2);
            let (a, b) = rayon::join(|| intersect_all(ideals), || intersect_all(right));
            a?.intersect(&b?)
        }
    }
}

/// `J_G^(t) = ∩_{P ∈ Min(J_G)} P^t`.
pub fn symbolic_power<C: Coeff>(g: &Graph, t: usize, cap: usize, field: FieldKind) -> Result<Ideal<C>> {
    let primes = minimal_primes::<C>(g, cap, field)?;
    symbolic_power_from(&primes, t)
}

pub fn symbolic_power_from<C: Coeff>(primes: &[PrimeComponent<C>], t: usize) -> Result<Ideal<C>> {
    if t < 1 {
        return Err(Error::InvalidExponent(t));
    }
    let powers: Vec<Ideal<C>> = primes.par_iter().map(|p| p.ideal.power(t)).collect::<Result<Vec<_>>>()?;
    intersect_all(powers)
}

/// Outcome of comparing `J_G^t` with `J_G^(t)`.
#[derive(Clone, Debug)]
pub struct EqualityVerdict<C: Coeff> {
    pub graph: Graph,
    pub t: usize,
    pub equal: bool,
    /// `J_G^t ⊆ J_G^(t)`; always expected to hold.
    pub ordinary_in_symbolic: bool,
    /// First reduced Gröbner basis element of `J_G^(t)` outside `J_G^t`.
    pub witness: Option<Polynomial<C>>,
    pub minimal_primes: Vec<PrimeComponent<C>>,
    pub ordinary: Ideal<C>,
    pub symbolic: Ideal<C>,
}

impl<C: Coeff> EqualityVerdict<C> {
    pub fn ring(&self) -> &Arc<Ring> {
        self.ordinary.ring()
    }

    pub fn render_witness(&self) -> Option<String> {
        self.witness.as_ref().map(|w| w.render(self.ring()))
    }
}

pub fn equality_verdict<C: Coeff>(g: &Graph, t: usize, cap: usize, field: FieldKind) -> Result<EqualityVerdict<C>> {
    if t < 1 {
        return Err(Error::InvalidExponent(t));
    }
    let primes = minimal_primes::<C>(g, cap, field)?;
    let j = binomial_edge_ideal::<C>(g, field);
    let (ordinary, symbolic) = rayon::join(|| j.power(t), || symbolic_power_from(&primes, t));
    let (ordinary, symbolic) = (ordinary?, symbolic?);
    ordinary.gb();
    let mut witness = None;
    for f in symbolic.gb() {
        if !ordinary.member(f)? {
            witness = Some(f.clone());
            break;
        }
    }
    let ordinary_in_symbolic = symbolic.contains(&ordinary)?;
    let equal = ordinary.equal(&symbolic)?;
    debug_assert_eq!(equal, witness.is_none() && ordinary_in_symbolic);
    Ok(EqualityVerdict {
        graph: g.clone(),
        t,
        equal,
        ordinary_in_symbolic,
        witness,
        minimal_primes: primes,
        ordinary,
        symbolic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::net_graph;
    use crate::poly::Rational;

    const Q: FieldKind = FieldKind::Rational;

    fn sets(g: &Graph) -> Vec<Vec<usize>> {
        minimal_primes::<Rational>(g, PRIME_ENUMERATION_CAP, Q).unwrap().into_iter().map(|p| p.u).collect()
    }

    #[test]
    fn components() {
        let p3 = Graph::path(3).unwrap();
        let p = prime_component::<Rational>(&p3, &[2], Q).unwrap();
        assert_eq!(p.ideal.render_gb(), vec!["x2", "y2"]);
        assert_eq!(p.component_count(), 2);
        let c4 = Graph::cycle(4).unwrap();
        let p = prime_component::<Rational>(&c4, &[], Q).unwrap();
        let k4 = binomial_edge_ideal::<Rational>(&Graph::complete(4).unwrap(), Q);
        assert!(p.ideal.equal(&k4).unwrap());
        let all = prime_component::<Rational>(&p3, &[1, 2, 3], Q).unwrap();
        assert_eq!(all.ideal.gb().len(), 6);
        assert!(prime_component::<Rational>(&p3, &[4], Q).is_err());
    }

    #[test]
    fn minimal_prime_sets() {
        assert_eq!(sets(&Graph::path(3).unwrap()), vec![vec![], vec![2]]);
        assert_eq!(sets(&Graph::complete(4).unwrap()), vec![Vec::<usize>::new()]);
        assert_eq!(sets(&Graph::star(3).unwrap()), vec![vec![], vec![1]]);
        let net = net_graph();
        assert_eq!(sets(&net).len(), 7);
        let big = Graph::path(9).unwrap();
        assert!(matches!(minimal_primes::<Rational>(&big, PRIME_ENUMERATION_CAP, Q), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn symbolic_powers() {
        let k3 = Graph::complete(3).unwrap();
        let j = binomial_edge_ideal::<Rational>(&k3, Q);
        let s = symbolic_power::<Rational>(&k3, 2, 8, Q).unwrap();
        assert!(s.equal(&j.power(2).unwrap()).unwrap());
        let p3 = Graph::path(3).unwrap();
        let j = binomial_edge_ideal::<Rational>(&p3, Q);
        assert!(symbolic_power::<Rational>(&p3, 1, 8, Q).unwrap().equal(&j).unwrap());
        let s = symbolic_power::<Rational>(&p3, 2, 8, Q).unwrap();
        assert!(s.equal(&j.power(2).unwrap()).unwrap());
        assert!(symbolic_power::<Rational>(&p3, 0, 8, Q).is_err());
    }

    #[test]
    fn verdicts() {
        let v = equality_verdict::<Rational>(&Graph::path(4).unwrap(), 2, 8, Q).unwrap();
        assert!(v.equal && v.ordinary_in_symbolic && v.witness.is_none());
        let v = equality_verdict::<Rational>(&Graph::complete(4).unwrap(), 3, 8, Q).unwrap();
        assert!(v.equal);
    }
}
