//! Exact arithmetic kernel.
//!
//! Everything downstream (symbols, the identity corpus, specialized checks)
//! reduces to a small set of exact primitives implemented here:
//!
//! - [`Rat`]: a small exact rational on `i64` with overflow-checked arithmetic,
//!   used for tensor coefficients where values stay tiny.
//! - [`Poly`]: sparse multivariate polynomials over Z (graded-lex ordered),
//!   with exact division and multivariate GCD.
//! - [`RationalFunction`]: normalized quotients `c * num/den` with `num`, `den`
//!   coprime, primitive and positive-leading; the constant `c` carries sign and
//!   content so that group words can drop it.
//! - [`FactorBasis`] / [`GroupWord`]: a gcd-free (pairwise coprime) basis and
//!   exponent vectors over it, which is what makes symbol-slot equality and
//!   cancellation decidable without irreducible factorization.
//! - integer factorization helpers for prime-basis specialized checks.

pub mod basis;
pub mod error;
pub mod gcd;
pub mod intfactor;
pub mod poly;
pub mod rat;
pub mod ratfun;

pub use basis::{gcd_free_basis, BasisBuilder, FactorBasis, GroupWord};
pub use error::KernelError;
pub use poly::{Mono, Poly, Vars};
pub use rat::Rat;
pub use ratfun::RationalFunction;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
