//! Exact computational toolkit for equal-rank subalgebra equivalence of
//! complex semisimple Lie algebras.
//!
//! Everything here works over the rationals; there is no floating point
//! anywhere in the crate. The main layers are:
//!
//! - [`rootsys`]: simple types, root systems, weight lattices and Weyl orbits.
//! - [`chars`]: formal characters (weight multisets) and their algebra.
//! - [`metric`]: the inner product a faithful character induces on the
//!   weight space, plus angle / length / projection geometry.
//! - [`dioph`]: the small Diophantine classifications that drive the
//!   geometry arguments.
//! - [`equiv`]: reduction to type A, the class invariant, canonical forms
//!   and the determinant square-class check.
//! - [`embed`]: equal-rank root-subsystem embeddings and character
//!   restriction along them.
//! - [`oracle`]: brute-force engines used to cross-check all of the above.

pub mod chars;
pub mod dioph;
pub mod embed;
pub mod equiv;
mod error;
pub mod linalg;
pub mod metric;
pub mod oracle;
pub mod rootsys;

pub use error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::Ratio<i128>;

/// Shorthand for an integral [`Rational`].
pub fn q(n: i128) -> Rational {
    Rational::from_integer(n)
}

/// Shorthand for `num / den`.
pub fn qq(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

pub mod prelude {
    pub use crate::chars::FormalCharacter;
    pub use crate::embed::EqualRankEmbedding;
    pub use crate::equiv::EquivClassInvariant;
    pub use crate::metric::{AngleClass, CharacterMetric};
    pub use crate::rootsys::{Family, RootSystem, SemisimpleAlgebra, SimpleType, Weight};
    pub use crate::{q, qq, Error, Rational, Result};
}
