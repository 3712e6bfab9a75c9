//! Exact multivariate polynomials over `Q` or `F_p`, term orders, division
//! and Buchberger's algorithm.

mod field;
mod groebner;
mod monomial;
mod polynomial;
mod ring;

pub use field::{Coeff, FieldKind, Fp, Rational, DEFAULT_PRIME};
pub use groebner::{buchberger, interreduce, is_groebner_basis, normal_form};
pub use monomial::{Monomial, TermOrder};
pub use polynomial::Polynomial;
pub use ring::Ring;
