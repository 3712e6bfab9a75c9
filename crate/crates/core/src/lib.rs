//! Exact toolkit for binomial edge ideals.
//!
//! The crate builds the binomial edge ideal `J_G` of a simple graph, computes
//! Gröbner bases (both by Buchberger's algorithm and combinatorially from
//! admissible paths), ordinary and symbolic powers, and decides whether the
//! two coincide. Alongside the algebra it carries the graph-class recognizers
//! that predict the answer: caterpillars, generalized caterpillars, closed,
//! weakly closed and net-free graphs, and special odd cycles of the facet
//! complex of the initial ideal.

pub mod bei;
pub mod commands;
pub mod complex;
pub mod corpus;
pub mod decomp;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod poly;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
pub use graph::{Graph, Labeling, VertexPath};
pub use ideal::Ideal;
pub use poly::{Coeff, FieldKind, Fp, Monomial, Polynomial, Rational, Ring, TermOrder};
