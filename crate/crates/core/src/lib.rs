//! Exact symbolic computation with formal iterated logarithms and
//! exponentials.
//!
//! The crate provides the algebra of monomials in the level variables
//! `l_n(x)` with its derivation, truncated translation series
//! `e^{y d/dx}`, four constructions each of the Stirling numbers of both
//! kinds together with their tableau interpretation, two closed-form
//! expansion methods for `l_N(x+y)^r`, and checkers that compare all of these
//! against brute-force repeated differentiation.

pub mod algebra;
pub mod combinat;
pub mod error;
pub mod expansions;
pub mod identities;
pub mod scalar;
pub mod series;
pub mod stirling;

pub use algebra::{AlgebraElement, Monomial};
pub use error::{Error, Result};
pub use scalar::{AffineExponent, ParamPoly, Rational};
pub use series::TranslationSeries;
pub use stirling::StirlingKind;
