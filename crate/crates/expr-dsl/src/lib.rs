//! The identity DSL.
//!
//! Identities are written as signed sums of `I`/`Li` atoms over rational
//! expressions in named points, with the notational machinery the corpus
//! needs: cross ratios `cr(a,b,c,d)`, the point shorthand
//! `pts(k1,..,kd)[p1,..,p_{3+d}]`, cyclic sums `cyc4`, the split `spl`,
//! five-term insertions `V0`, signed permutation orbits `orbit(symN, ...)`,
//! shuffle-product atoms `prod(...)`, concatenation atoms `tens(...)`, and
//! the appendix macros `t1..t6`, `u`, `f1..f9`.
//!
//! Templates are grounded by binding points to rational functions (or ∞,
//! admitted inside cross ratios and splits only). Grounding is generic over
//! the value field, so the same template streams symbolic atoms, exact
//! rational specializations, and complex numeric values.

pub mod ast;
pub mod builtins;
pub mod eval;
pub mod field;
pub mod parser;
pub mod printer;

pub use ast::{
    ArgExpr, Cost, Expect, Expr, Factor, GroundAtom, GroundFactor, GroupSpec, IdentityExpr, Level,
    Term, Template,
};
pub use eval::{expand, for_each_value_term, Bindings, ValueAtom, ValueFactor};
pub use field::{cross_ratio, cross_ratio_rf, DslError, Field, PointVal};
pub use parser::{parse_file, parse_identity};
pub use printer::print_template;
