//! Ideals with a lazily computed, write-once reduced Gröbner basis.

use std::fmt;
use std::sync::{Arc, OnceLock};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::poly::{buchberger, interreduce, normal_form, Coeff, Polynomial, Ring, TermOrder};

pub struct Ideal<C: Coeff> {
    ring: Arc<Ring>,
    gens: Vec<Polynomial<C>>,
    gb: OnceLock<Vec<Polynomial<C>>>,
}

impl<C: Coeff> Clone for Ideal<C> {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(basis) = self.gb.get() {
            let _ = gb.set(basis.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), gb }
    }
}

impl<C: Coeff> fmt::Debug for Ideal<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.render(&self.ring)).collect();
        write!(f, "Ideal({})", gens.join(", "))
    }
}

fn check_poly<C: Coeff>(ring: &Ring, f: &Polynomial<C>) -> Result<()> {
    if f.terms().iter().any(|(m, _)| m.nvars() != ring.nvars()) {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

impl<C: Coeff> Ideal<C> {
    /// Ideal generated by `gens`; zero generators are dropped.
    pub fn new(ring: Arc<Ring>, gens: Vec<Polynomial<C>>) -> Result<Self> {
        for g in &gens {
            check_poly(&ring, g)?;
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring, gens, gb: OnceLock::new() })
    }

    pub fn zero(ring: Arc<Ring>) -> Self {
        Ideal { ring, gens: Vec::new(), gb: OnceLock::new() }
    }

    /// An ideal whose generators are already its reduced Gröbner basis.
    fn with_basis(ring: Arc<Ring>, basis: Vec<Polynomial<C>>) -> Self {
        let gb = OnceLock::new();
        let _ = gb.set(basis.clone());
        Ideal { ring, gens: basis, gb }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.gens
    }

    /// Reduced Gröbner basis under the ring's order, computed on first use.
    pub fn gb(&self) -> &[Polynomial<C>] {
        self.gb.get_or_init(|| buchberger(&self.gens, &self.ring))
    }

    pub fn has_cached_gb(&self) -> bool {
        self.gb.get().is_some()
    }

    fn same_ring(&self, other: &Ideal<C>) -> Result<()> {
        if self.ring == other.ring || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    pub fn member(&self, f: &Polynomial<C>) -> Result<bool> {
        check_poly(&self.ring, f)?;
        Ok(normal_form(f, self.gb(), &self.ring).is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal<C>) -> Result<bool> {
        self.same_ring(other)?;
        for g in &other.gens {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals, decided by comparing reduced Gröbner bases.
    pub fn equal(&self, other: &Ideal<C>) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gb() == other.gb())
    }

    pub fn sum(&self, other: &Ideal<C>) -> Result<Ideal<C>> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn product(&self, other: &Ideal<C>) -> Result<Ideal<C>> {
        self.same_ring(other)?;
        let mut gens: Vec<Polynomial<C>> = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(g, &self.ring).monic());
            }
        }
        Ideal::new(self.ring.clone(), dedup(gens, self.ring.order()))
    }

    /// `I^t`: all products of `t` generators, deduplicated and
    /// interreduced.
    pub fn power(&self, t: usize) -> Result<Ideal<C>> {
        if t < 1 {
            return Err(Error::InvalidExponent(t));
        }
        if t == 1 {
            return Ok(self.clone());
        }
        let base: Vec<Polynomial<C>> = dedup(self.gens.iter().map(|g| g.monic()).collect(), self.ring.order());
        let mut gens = Vec::new();
        for combo in base.iter().combinations_with_replacement(t) {
            let mut p = combo[0].clone();
            for f in &combo[1..] {
                p = p.mul(f, &self.ring);
            }
            gens.push(p.monic());
        }
        let gens = dedup(gens, self.ring.order());
        let gens = interreduce(&gens, &self.ring);
        Ideal::new(self.ring.clone(), gens)
    }

    /// `I ∩ J` as the elimination of `w` from `w·I + (1 − w)·J`.
    pub fn intersect(&self, other: &Ideal<C>) -> Result<Ideal<C>> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        let ext = Arc::new(self.ring.with_elimination(1));
        let w: Polynomial<C> = ext.var(ext.w(1));
        let one_minus_w = ext.constant(1).sub(&w, &ext);
        let left = self.gb.get().map(|b| b.as_slice()).unwrap_or(&self.gens);
        let right = other.gb.get().map(|b| b.as_slice()).unwrap_or(&other.gens);
        let mut gens = Vec::with_capacity(left.len() + right.len());
        for f in left {
            gens.push(f.lift(1).mul(&w, &ext));
        }
        for g in right {
            gens.push(g.lift(1).mul(&one_minus_w, &ext));
        }
        Ideal::new(ext, gens)?.eliminate_block(1, &self.ring)
    }

    /// Eliminate every elimination variable of the ring, returning an ideal of
    /// the base ring `k[x, y]`.
    pub fn eliminate(&self) -> Result<Ideal<C>> {
        let elim = self.ring.elim();
        if elim == 0 {
            return Ok(self.clone());
        }
        self.eliminate_block(elim, &self.ring.base())
    }

    fn eliminate_block(&self, count: usize, target: &Ring) -> Result<Ideal<C>> {
        let target = Arc::new(target.clone());
        let kept: Vec<Polynomial<C>> = self.gb().iter().filter_map(|g| g.project(count, &target)).collect();
        let restricted_is_target_order = match self.ring.order() {
            TermOrder::BlockElimination { block } => block == count && target.order() == TermOrder::Lex,
            TermOrder::Lex => target.order() == TermOrder::Lex,
        };
        if restricted_is_target_order {
            Ok(Ideal::with_basis(target, kept))
        } else {
            Ideal::new(target, kept)
        }
    }

    pub fn render_generators(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.render(&self.ring)).collect()
    }

    pub fn render_gb(&self) -> Vec<String> {
        self.gb().iter().map(|g| g.render(&self.ring)).collect()
    }
}

fn dedup<C: Coeff>(mut gens: Vec<Polynomial<C>>, ord: TermOrder) -> Vec<Polynomial<C>> {
    gens.retain(|g| !g.is_zero());
    gens.sort_by(|a, b| {
        ord.cmp(b.lm(), a.lm()).then_with(|| a.len().cmp(&b.len())).then_with(|| {
            for (s, t) in a.terms().iter().zip(b.terms()) {
                let c = ord.cmp(&t.0, &s.0);
                if c.is_ne() {
                    return c;
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    gens.dedup();
    gens
}
