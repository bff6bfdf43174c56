//! Symbols of iterated integrals and multiple polylogarithms.
//!
//! A symbol is stored fully expanded: a weight-n tensor sum is a map from
//! n-tuples of factor-basis indices to rational coefficients, i.e. coordinates
//! over elementary tensors of basis elements. Composite slots (group words)
//! are expanded multilinearly on entry, so equality of tensor sums is map
//! equality and the zero test is emptiness.
//!
//! The Goncharov recursion is implemented once, generically over a slot
//! domain: the symbolic domain codes slot entries as group words over a frozen
//! gcd-free basis, the specialized domain evaluates letters at a rational
//! point and codes entries as words over integer primes. The two paths are
//! property-tested against each other.

pub mod atom;
pub mod project;
pub mod props;
pub mod rank;
pub mod symbol;
pub mod tensor;

pub use atom::{AtomKind, MplAtom};
pub use project::{delta22_antisymmetrize, delta22_patterns, rho_patterns, rho_project};
pub use rank::tensor_rank;
pub use symbol::{
    symbol_mpl_values,
    mpl_letters, symbol_iterated, symbol_mpl, Letter, PrimeDomain, SlotDomain, SymbolError,
    SymbolicDomain,
};
pub use tensor::{concat, rebase, shuffle, TensorKey, TensorSum};
