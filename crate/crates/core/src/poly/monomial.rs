use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

type Exps = SmallVec<[u16; 24]>;

/// Exponent vector over a ring's variable roster, with its support bitmask
/// and total degree cached for fast divisibility tests.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    mask: u64,
    degree: u32,
}

fn support_mask(exps: &[u16]) -> u64 {
    exps.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), mask: 0, degree: 0 }
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
            mask: support_mask(exps),
            degree: exps.iter().map(|&e| e as u32).sum(),
        }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = 1;
        m.mask = 1u64 << (index % 64);
        m.degree = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.exps[index]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Exps =
            self.exps.iter().zip(&other.exps).map(|(a, b)| a.checked_add(*b).expect("exponent overflow")).collect();
        Monomial { exps, mask: self.mask | other.mask, degree: self.degree + other.degree }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Some(Monomial { mask: support_mask(&exps), degree: other.degree - self.degree, exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, mask: self.mask | other.mask, degree }
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        if self.nvars() <= 64 {
            self.mask & other.mask == 0
        } else {
            self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
        }
    }

    /// Prepend `extra` zero exponents (lifting into a ring with more
    /// elimination variables at the front).
    pub(crate) fn lift(&self, extra: usize) -> Monomial {
        let mut exps: Exps = SmallVec::from_elem(0, extra);
        exps.extend_from_slice(&self.exps);
        Monomial::from_exponents(&exps)
    }

    /// Drop the first `count` exponents; `None` if any of them is nonzero.
    pub(crate) fn project(&self, count: usize) -> Option<Monomial> {
        if self.exps[..count].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Monomial::from_exponents(&self.exps[count..]))
    }

    /// Rename variables: exponent of variable `i` moves to `perm[i]`.
    pub(crate) fn permute(&self, perm: &[usize]) -> Monomial {
        let mut exps: Exps = SmallVec::from_elem(0, self.exps.len());
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] = e;
        }
        Monomial::from_exponents(&exps)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Monomial orders on a variable roster indexed from 0 (index 0 is the
/// largest variable).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Pure lexicographic order in roster order; with the roster
    /// `x_1, …, x_n, y_1, …, y_n` this is `x_1 > … > x_n > y_1 > … > y_n`.
    Lex,
    /// The first `block` variables are compared first (degree, then lex)
    /// and dominate; remaining variables are compared lexicographically.
    BlockElimination { block: usize },
}

impl TermOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::RingMismatch);
        }
        if let TermOrder::BlockElimination { block } = *self {
            if block > a.nvars() {
                return Err(Error::RingMismatch);
            }
        }
        Ok(self.cmp(a, b))
    }

    #[inline]
    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            TermOrder::Lex => a.exps.as_slice().cmp(b.exps.as_slice()),
            TermOrder::BlockElimination { block } => {
                let (ah, at) = a.exps.split_at(block);
                let (bh, bt) = b.exps.split_at(block);
                let da: u32 = ah.iter().map(|&e| e as u32).sum();
                let db: u32 = bh.iter().map(|&e| e as u32).sum();
                da.cmp(&db).then_with(|| ah.cmp(bh)).then_with(|| at.cmp(bt))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 0, 2]);
        let b = m(&[1, 1, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.divide_into(&b), Some(m(&[0, 1, 1])));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 2]));
        assert!(m(&[1, 0, 0]).gcd_is_one(&m(&[0, 2, 1])));
        assert!(!a.gcd_is_one(&b));
        assert_eq!(a.lift(1).project(1), Some(a.clone()));
        assert_eq!(m(&[1, 0]).project(1), None);
    }

    #[test]
    fn lex_and_block_orders() {
        let lex = TermOrder::Lex;
        assert_eq!(lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(lex.cmp(&m(&[0, 1, 1]), &m(&[0, 1, 0])), Ordering::Greater);
        let block = TermOrder::BlockElimination { block: 1 };
        assert_eq!(block.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(block.cmp(&m(&[0, 0, 1]), &m(&[0, 1, 0])), Ordering::Less);
        let block2 = TermOrder::BlockElimination { block: 2 };
        assert_eq!(block2.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 0])), Ordering::Greater);
        assert!(lex.compare(&m(&[1]), &m(&[1, 0])).is_err());
    }
}
