//! Multiprecision numeric evaluation: classical polylogarithms with analytic
//! continuation, single-valued polylogarithms, nested MPL series, and
//! iterated integrals by Taylor continuation along deformed paths.

pub mod checks;
pub mod complex;
pub mod constants;
pub mod field;
pub mod ieval;
pub mod li;
pub mod mpl;
pub mod real;

pub use complex::C;
pub use ieval::{eval_iterated, PathSide};
pub use li::{sv, CutSide, NumCtx, NumError};
pub use mpl::eval_mpl_series;
pub use real::R;
