use std::cmp::Ordering;

use super::field::split_sign;
use super::{Coeff, Monomial, Ring, TermOrder};
use crate::error::{Error, Result};

/// Sparse polynomial with terms sorted strictly decreasing under the ring's
/// term order. Zero coefficients never appear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<C> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn from_monomial(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Sorts, merges equal monomials and drops zero coefficients.
    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, C)>) -> Self {
        Self::from_terms_ord(ring.order(), terms)
    }

    pub(crate) fn from_terms_ord(ord: TermOrder, mut terms: Vec<(Monomial, C)>) -> Self {
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = last.1.add(&c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        out.retain(|t| !t.1.is_zero());
        Polynomial { terms: out }
    }

    /// Wraps terms the caller guarantees are already canonical.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, C)>) -> Self {
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Result<(&C, &Monomial)> {
        self.terms.first().map(|(m, c)| (c, m)).ok_or(Error::ZeroPolynomial)
    }

    /// Leading monomial; panics on zero.
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &C {
        &self.terms[0].1
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_monic(&self) -> bool {
        self.terms.first().is_none_or(|t| t.1.is_one())
    }

    pub fn neg(&self) -> Self {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, d)| (m.clone(), d.mul(c))).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => Polynomial::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Multiply by the term `c * m`. Term orders are multiplicative, so the
    /// result stays sorted.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(n, d)| (n.mul(m), d.mul(c))).collect() }
    }

    pub fn add(&self, other: &Self, ring: &Ring) -> Self {
        merge(ring.order(), &self.terms, None, &other.terms)
    }

    pub fn sub(&self, other: &Self, ring: &Ring) -> Self {
        merge(ring.order(), &self.terms, Some(&C::from_i64(-1, ring.field())), &other.terms)
    }

    pub fn mul(&self, other: &Self, ring: &Ring) -> Self {
        let mut acc = Vec::with_capacity(self.len() * other.len());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                acc.push((m.mul(n), c.mul(d)));
            }
        }
        Polynomial::from_terms(ring, acc)
    }

    /// `self - c * m * g`.
    pub fn sub_mul_term(&self, c: &C, m: &Monomial, g: &Self, ord: TermOrder) -> Self {
        let shifted: Vec<(Monomial, C)> = g.terms.iter().map(|(n, d)| (n.mul(m), d.clone())).collect();
        merge(ord, &self.terms, Some(&c.neg()), &shifted)
    }

    /// Lift into `ring.with_elimination(extra)`.
    pub fn lift(&self, extra: usize) -> Self {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.lift(extra), c.clone())).collect() }
    }

    /// Drop the first `count` variables; `None` if the polynomial uses them.
    pub fn project(&self, count: usize, target: &Ring) -> Option<Self> {
        let terms: Option<Vec<_>> = self.terms.iter().map(|(m, c)| m.project(count).map(|m| (m, c.clone()))).collect();
        Some(Polynomial::from_terms(target, terms?))
    }

    /// Rename variables by the roster permutation `perm`.
    pub fn permute_vars(&self, perm: &[usize], ring: &Ring) -> Self {
        Polynomial::from_terms(ring, self.terms.iter().map(|(m, c)| (m.permute(perm), c.clone())).collect())
    }

    /// Human-readable form such as `x1*y2 - x2*y1`, terms in decreasing order.
    pub fn render(&self, ring: &Ring) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (negative, mag) = split_sign(c);
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    out.push_str(&mag);
                    out.push('*');
                }
                out.push_str(&ring.render_monomial(m));
            }
        }
        out
    }
}

/// `a + factor * b` (factor defaults to 1) by a linear merge of sorted terms.
fn merge<C: Coeff>(ord: TermOrder, a: &[(Monomial, C)], factor: Option<&C>, b: &[(Monomial, C)]) -> Polynomial<C> {
    let scale = |c: &C| match factor {
        Some(f) => c.mul(f),
        None => c.clone(),
    };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ord.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), scale(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = a[i].1.add(&scale(&b[j].1));
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), scale(c))));
    Polynomial { terms: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{FieldKind, Rational};

    #[test]
    fn arithmetic_and_rendering() {
        let r = Ring::new(3, FieldKind::Rational);
        let f12: Polynomial<Rational> = r.minor(1, 2);
        assert_eq!(f12.render(&r), "x1*y2 - x2*y1");
        assert_eq!(f12.sub(&f12, &r), Polynomial::zero());
        let sq = f12.mul(&f12, &r);
        assert_eq!(sq.render(&r), "x1^2*y2^2 - 2*x1*x2*y1*y2 + x2^2*y1^2");
        let y1: Polynomial<Rational> = r.var(r.y(1));
        let g = y1.mul(&r.minor(2, 3), &r);
        assert_eq!(g.leading_term().unwrap().1, &Monomial::from_exponents(&[0, 1, 0, 1, 0, 1]));
        let five: Polynomial<Rational> = r.constant(5);
        assert_eq!(five.leading_term().unwrap(), (&Rational::new(5, 1), &r.one_monomial()));
        assert_eq!(five.render(&r), "5");
        assert!(Polynomial::<Rational>::zero().leading_term().is_err());
        let half = f12.scale(&Rational::new(-1, 2));
        assert_eq!(half.render(&r), "-1/2*x1*y2 + 1/2*x2*y1");
        assert_eq!(half.monic(), f12);
    }

    #[test]
    fn sub_mul_term_cancels_lead() {
        let r = Ring::new(2, FieldKind::Rational);
        let f: Polynomial<Rational> = r.minor(1, 2);
        let x1: Polynomial<Rational> = r.var(r.x(1));
        let g = f.mul(&x1, &r);
        let m = Monomial::variable(4, 0);
        let h = g.sub_mul_term(&Rational::new(1, 1), &m, &f, r.order());
        assert!(h.is_zero());
    }
}
