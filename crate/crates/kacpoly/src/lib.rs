//! Exact computation of Kac polynomials of quivers, and the combinatorial
//! structure of their dependence on the edge multiplicities.
//!
//! The core pipeline builds the partition generating series of a quiver over
//! factored-denominator fractions, takes its formal logarithm, and applies
//! Moebius inversion to obtain `A(alpha, q)`, the polynomial counting
//! absolutely indecomposable representations over a field with `q` elements.
//! Everything runs in exact rational arithmetic; polynomiality and
//! integrality are checked at the end of the computation rather than
//! assumed.
//!
//! Around the kernel sit the structural results the crate can test
//! numerically:
//!
//! - [`graphs`]: connected multigraph counts by class profile, through the
//!   exponential formula and by brute force;
//! - [`leading`]: the top-degree part of `g -> d^s/dq^s A(q)|_(q=1)` as a
//!   polynomial in the multiplicities, from a closed combinatorial formula
//!   and from an interpolation fit of sampled values;
//! - [`mahler`]: the finite expansion of `A` in q-binomials of the
//!   multiplicities, with coefficient extraction by q-differences;
//! - [`qcomb`]: Gaussian binomials and the derivative laws used above;
//! - [`verify`]: every published value the crate reproduces, wired into
//!   pass/fail suites.
//!
//! Polynomials in the single variable `q` are dense ([`QPoly`]); the alias
//! [`BPoly`] is the same representation read as a polynomial in an integer
//! grid argument.  Multivariate polynomials over the edge variables are
//! sparse ([`MPoly`]).  Both are containers over exact [`num_rational`]
//! coefficients.

pub mod error;
pub mod graphs;
pub mod hua;
pub mod interp;
pub mod leading;
pub mod mahler;
pub mod mpoly;
pub mod multi;
pub mod partition;
pub mod poly;
pub mod qcomb;
pub mod quiver;
pub mod ratfunc;
pub mod ring;
pub mod series;
pub mod verify;

/// Dense univariate polynomial in `q` with exact rational coefficients.
pub type QPoly = poly::Poly<num_rational::BigRational>;

/// Dense univariate polynomial in an integer grid argument (a dimension or
/// multiplicity variable); structurally identical to [`QPoly`].
pub type BPoly = poly::Poly<num_rational::BigRational>;

pub use error::{Error, Result};
pub use hua::{expected_degree, hua_h, hua_series, kac_derivative_at_one, kac_polynomial};
pub use mpoly::MPoly;
pub use partition::Partition;
pub use poly::Poly;
pub use quiver::{DimVector, EdgeVector, Quiver};
pub use ratfunc::RatFunc;
pub use series::TruncSeries;
pub use verify::{run_suite, CheckResult, Size, Suite};
