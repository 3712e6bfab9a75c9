//! Multivariate division and Buchberger's algorithm.

use super::{Coeff, Monomial, Polynomial, Ring, TermOrder};

/// Full reduction of `f` modulo the leading terms of `divisors`.
///
/// Deterministic: the leftmost (largest) reducible term is always reduced
/// first, by the first divisor in list order whose leading monomial divides
/// it.
fn reduce<C: Coeff>(f: Polynomial<C>, divisors: &[&Polynomial<C>], ord: TermOrder) -> Polynomial<C> {
    let mut remainder: Vec<(Monomial, C)> = Vec::new();
    let mut work = f.into_terms();
    let mut start = 0;
    while start < work.len() {
        let (m, c) = &work[start];
        let hit = divisors.iter().find_map(|g| g.lm().divide_into(m).map(|q| (q, *g)));
        match hit {
            Some((q, g)) => {
                let factor = if g.lc().is_one() { c.clone() } else { c.mul(&g.lc().inv()) };
                let rest = Polynomial::from_sorted_unchecked(work.split_off(start + 1));
                let tail = Polynomial::from_sorted_unchecked(g.terms()[1..].to_vec());
                work = rest.sub_mul_term(&factor, &q, &tail, ord).into_terms();
                start = 0;
            }
            None => {
                remainder.push(work[start].clone());
                start += 1;
            }
        }
    }
    Polynomial::from_sorted_unchecked(remainder)
}

/// Remainder of `f` on division by `basis`: no term of the result is
/// divisible by a leading monomial of `basis`. Zero elements of `basis` are
/// ignored.
pub fn normal_form<C: Coeff>(f: &Polynomial<C>, basis: &[Polynomial<C>], ring: &Ring) -> Polynomial<C> {
    let divisors: Vec<&Polynomial<C>> = basis.iter().filter(|g| !g.is_zero()).collect();
    reduce(f.clone(), &divisors, ring.order())
}

fn s_polynomial<C: Coeff>(f: &Polynomial<C>, g: &Polynomial<C>, ord: TermOrder) -> Polynomial<C> {
    let lcm = f.lm().lcm(g.lm());
    let mf = f.lm().divide_into(&lcm).expect("lcm is a multiple");
    let mg = g.lm().divide_into(&lcm).expect("lcm is a multiple");
    let ff = f.mul_term(&mf, &g.lc().clone());
    ff.sub_mul_term(f.lc(), &mg, g, ord)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine<C> {
    ord: TermOrder,
    polys: Vec<Polynomial<C>>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<C: Coeff> Engine<C> {
    fn reduce(&self, f: Polynomial<C>) -> Polynomial<C> {
        let divisors: Vec<&Polynomial<C>> = self.active.iter().map(|&k| &self.polys[k]).collect();
        reduce(f, &divisors, self.ord)
    }

    /// Insert a new monic basis element, updating the pair set with the
    /// Gebauer–Möller criteria (which subsume the coprime-leading-term
    /// criterion).
    fn insert(&mut self, h: Polynomial<C>, sugar: u32) {
        let k = self.polys.len();
        let lm_h = h.lm().clone();
        let candidates: Vec<Pair> = self
            .active
            .iter()
            .map(|&i| {
                let lcm = self.polys[i].lm().lcm(&lm_h);
                let s = (self.sugar[i] + lcm.degree() - self.polys[i].lm().degree())
                    .max(sugar + lcm.degree() - lm_h.degree());
                Pair { i, j: k, lcm, sugar: s }
            })
            .collect();

        let coprime = |p: &Pair| self.polys[p.i].lm().gcd_is_one(&lm_h);
        let mut kept: Vec<Pair> = Vec::new();
        let mut rest: Vec<Pair> = candidates;
        while !rest.is_empty() {
            let p = rest.remove(0);
            let dominated = rest.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime(&p) || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !coprime(p));

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm) && polys[p.i].lm().lcm(&lm_h) != p.lcm && polys[p.j].lm().lcm(&lm_h) != p.lcm)
        });
        self.pairs.extend(kept);
        self.active.retain(|&i| !lm_h.divides(polys[i].lm()));
        self.active.push(k);
        self.polys.push(h);
        self.sugar.push(sugar);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let ord = self.ord;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar.cmp(&b.sugar).then_with(|| ord.cmp(&a.lcm, &b.lcm)).then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(idx, _)| idx)?;
        Some(self.pairs.swap_remove(best))
    }
}

/// The reduced Gröbner basis of the ideal generated by `gens` under the
/// ring's term order: monic, pairwise fully reduced, sorted by decreasing
/// leading monomial. The zero ideal gives an empty list.
///
/// Pairs are processed smallest sugar degree first (for homogeneous input
/// this is the degree of the lcm), ties broken by the term order.
pub fn buchberger<C: Coeff>(gens: &[Polynomial<C>], ring: &Ring) -> Vec<Polynomial<C>> {
    let mut engine =
        Engine { ord: ring.order(), polys: Vec::new(), sugar: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut inputs: Vec<&Polynomial<C>> = gens.iter().filter(|g| !g.is_zero()).collect();
    inputs.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| ring.order().cmp(a.lm(), b.lm())));
    for g in inputs {
        let h = engine.reduce(g.clone());
        if !h.is_zero() {
            engine.insert(h.monic(), g.total_degree());
        }
    }
    while let Some(pair) = engine.next_pair() {
        let s = s_polynomial(&engine.polys[pair.i], &engine.polys[pair.j], engine.ord);
        let h = engine.reduce(s);
        if !h.is_zero() {
            engine.insert(h.monic(), pair.sugar.max(h.total_degree()));
        }
    }
    let Engine { polys, active, ord, .. } = engine;
    let basis: Vec<&Polynomial<C>> = active.iter().map(|&k| &polys[k]).collect();
    let mut out: Vec<Polynomial<C>> = basis
        .iter()
        .enumerate()
        .map(|(idx, g)| {
            let others: Vec<&Polynomial<C>> =
                basis.iter().enumerate().filter(|(o, _)| *o != idx).map(|(_, p)| *p).collect();
            let lead = Polynomial::from_sorted_unchecked(vec![g.terms()[0].clone()]);
            let tail = Polynomial::from_sorted_unchecked(g.terms()[1..].to_vec());
            let tail = reduce(tail, &others, ord);
            let mut terms = lead.into_terms();
            terms.extend(tail.into_terms());
            Polynomial::from_sorted_unchecked(terms).monic()
        })
        .collect();
    out.sort_by(|a, b| ord.cmp(b.lm(), a.lm()));
    out
}

/// True iff every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis<C: Coeff>(basis: &[Polynomial<C>], ring: &Ring) -> bool {
    let b: Vec<&Polynomial<C>> = basis.iter().filter(|g| !g.is_zero()).collect();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let s = s_polynomial(b[i], b[j], ring.order());
            if !reduce(s, &b, ring.order()).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Autoreduction: repeatedly reduce each generator modulo the others until
/// no term of any generator is divisible by another's leading monomial.
/// Generates the same ideal; the result is monic and sorted but in general
/// not a Gröbner basis.
pub fn interreduce<C: Coeff>(gens: &[Polynomial<C>], ring: &Ring) -> Vec<Polynomial<C>> {
    let ord = ring.order();
    let mut cur: Vec<Polynomial<C>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    cur.sort_by(|a, b| ord.cmp(b.lm(), a.lm()));
    cur.dedup();
    loop {
        let mut changed = false;
        let mut idx = 0;
        while idx < cur.len() {
            let others: Vec<&Polynomial<C>> =
                cur.iter().enumerate().filter(|(o, _)| *o != idx).map(|(_, p)| p).collect();
            let r = reduce(cur[idx].clone(), &others, ord);
            if r != cur[idx] {
                changed = true;
                if r.is_zero() {
                    cur.remove(idx);
                    continue;
                }
                cur[idx] = r.monic();
            }
            idx += 1;
        }
        if !changed {
            break;
        }
    }
    cur.sort_by(|a, b| ord.cmp(b.lm(), a.lm()));
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{FieldKind, Fp, Rational};

    type P = Polynomial<Rational>;

    fn ring(n: usize) -> Ring {
        Ring::new(n, FieldKind::Rational)
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(3);
        let f12: P = r.minor(1, 2);
        assert!(normal_form(&f12, std::slice::from_ref(&f12), &r).is_zero());
        let x1y2 = P::from_monomial(f12.lm().clone(), Rational::new(1, 1));
        assert_eq!(normal_form(&x1y2, std::slice::from_ref(&f12), &r).render(&r), "x2*y1");
        let x3: P = r.var(r.x(3));
        assert_eq!(normal_form(&x3, &[f12], &r), x3);
    }

    #[test]
    fn path_generators_are_already_a_basis() {
        let r = ring(3);
        let gens: Vec<P> = vec![r.minor(1, 2), r.minor(2, 3)];
        assert_eq!(buchberger(&gens, &r), gens);
    }

    #[test]
    fn star_basis() {
        let r = ring(4);
        let gens: Vec<P> = vec![r.minor(1, 2), r.minor(1, 3), r.minor(1, 4)];
        let gb = buchberger(&gens, &r);
        let y1: P = r.var(r.y(1));
        let expected: Vec<P> = vec![
            r.minor(1, 2),
            r.minor(1, 3),
            r.minor(1, 4),
            y1.mul(&r.minor(2, 3), &r),
            y1.mul(&r.minor(2, 4), &r),
            y1.mul(&r.minor(3, 4), &r),
        ];
        assert_eq!(gb, expected);
        assert!(is_groebner_basis(&gb, &r));
        assert!(!is_groebner_basis(&gens, &r));
    }

    #[test]
    fn single_generator_made_monic() {
        let r = ring(2);
        let f: P = r.minor(1, 2).scale(&Rational::new(3, 1));
        assert_eq!(buchberger(&[f], &r), vec![r.minor(1, 2)]);
        assert!(buchberger::<Rational>(&[], &r).is_empty());
    }

    #[test]
    fn prime_field_agrees_on_star() {
        let r = Ring::new(4, FieldKind::Prime(32003));
        let gens: Vec<Polynomial<Fp>> = vec![r.minor(1, 2), r.minor(1, 3), r.minor(1, 4)];
        let gb = buchberger(&gens, &r);
        assert_eq!(gb.len(), 6);
        assert_eq!(gb[5].render(&r), "x3*y1*y4 - x4*y1*y3");
    }

    #[test]
    fn reduced_basis_is_idempotent() {
        let r = ring(4);
        let gens: Vec<P> = vec![r.minor(1, 3), r.minor(2, 3), r.minor(3, 4), r.minor(1, 2)];
        let gb = buchberger(&gens, &r);
        assert_eq!(buchberger(&gb, &r), gb);
    }

    #[test]
    fn interreduce_keeps_ideal() {
        let r = ring(2);
        let f: P = r.minor(1, 2);
        let x1: P = r.var(r.x(1));
        let g = f.add(&f.mul(&x1, &r), &r);
        let out = interreduce(&[f.clone(), g, f.clone()], &r);
        assert_eq!(buchberger(&out, &r), buchberger(&[f.clone(), f.mul(&x1, &r)], &r));
    }
}
