use std::fmt::Write as _;

use super::{Coeff, FieldKind, Monomial, Polynomial, TermOrder};

/// Variable roster and term order of `k[w_1, …, w_e, x_1, …, x_n, y_1, …, y_n]`.
///
/// Elimination variables `w` come first and are only present in rings
/// created by [`Ring::with_elimination`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    n: usize,
    elim: usize,
    field: FieldKind,
    order: TermOrder,
}

impl Ring {
    /// `k[x_1..x_n, y_1..y_n]` with the lex order `x_1 > … > x_n > y_1 > … > y_n`.
    pub fn new(n: usize, field: FieldKind) -> Self {
        Ring { n, elim: 0, field, order: TermOrder::Lex }
    }

    /// Same ring with `extra` more elimination variables in front and a
    /// block order eliminating all of them.
    pub fn with_elimination(&self, extra: usize) -> Self {
        let elim = self.elim + extra;
        let order = if elim == 0 { TermOrder::Lex } else { TermOrder::BlockElimination { block: elim } };
        Ring { n: self.n, elim, field: self.field, order }
    }

    /// The ring with all elimination variables dropped.
    pub fn base(&self) -> Self {
        Ring::new(self.n, self.field)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elim(&self) -> usize {
        self.elim
    }

    pub fn nvars(&self) -> usize {
        self.elim + 2 * self.n
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    /// Roster index of `x_i` (1-based `i`).
    pub fn x(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.n, "x_{i} not in ring with n = {}", self.n);
        self.elim + i - 1
    }

    pub fn y(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.n, "y_{i} not in ring with n = {}", self.n);
        self.elim + self.n + i - 1
    }

    pub fn w(&self, k: usize) -> usize {
        assert!(k >= 1 && k <= self.elim);
        k - 1
    }

    /// Graph vertex a variable belongs to, if it is an `x` or `y`.
    pub fn vertex_of(&self, index: usize) -> Option<usize> {
        if index < self.elim {
            None
        } else {
            Some((index - self.elim) % self.n + 1)
        }
    }

    pub fn var_name(&self, index: usize) -> String {
        if index < self.elim {
            format!("w{}", index + 1)
        } else if index < self.elim + self.n {
            format!("x{}", index - self.elim + 1)
        } else {
            format!("y{}", index - self.elim - self.n + 1)
        }
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let mut out = String::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&self.var_name(i));
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var<C: Coeff>(&self, index: usize) -> Polynomial<C> {
        Polynomial::from_monomial(Monomial::variable(self.nvars(), index), C::from_i64(1, self.field))
    }

    pub fn constant<C: Coeff>(&self, c: i64) -> Polynomial<C> {
        Polynomial::from_monomial(self.one_monomial(), C::from_i64(c, self.field))
    }

    pub fn coeff<C: Coeff>(&self, c: i64) -> C {
        C::from_i64(c, self.field)
    }

    /// `[i, j] = x_i y_j - x_j y_i`.
    pub fn minor<C: Coeff>(&self, i: usize, j: usize) -> Polynomial<C> {
        let mut a = Monomial::one(self.nvars());
        let mut exps = a.exponents().to_vec();
        exps[self.x(i)] += 1;
        exps[self.y(j)] += 1;
        a = Monomial::from_exponents(&exps);
        let mut exps = vec![0u16; self.nvars()];
        exps[self.x(j)] += 1;
        exps[self.y(i)] += 1;
        let b = Monomial::from_exponents(&exps);
        Polynomial::from_terms(self, vec![(a, C::from_i64(1, self.field)), (b, C::from_i64(-1, self.field))])
    }
}
