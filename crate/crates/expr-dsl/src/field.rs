//! Value fields templates can be grounded over, and the projective cross ratio.

use exact_kernel::{BigRational, Rat, RationalFunction, Vars};
use num_traits::Zero;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DslError {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unbound point `{0}`")]
    UnboundPoint(String),
    #[error("degenerate cross ratio (value 0, 1 or ∞)")]
    DegenerateCrossRatio,
    #[error("∞ used outside cross ratios and splits")]
    InfinityOutsideCrossRatio,
    #[error("division by zero while grounding an argument")]
    DivisionByZero,
    #[error("unknown macro `{0}`")]
    UnknownMacro(String),
    #[error("macro `{0}` expects {1} arguments")]
    MacroArity(String, usize),
    #[error("formal argument sums (V0, spl) are only allowed as direct atom arguments")]
    FormalSumMisplaced,
    #[error("kernel error: {0}")]
    Kernel(#[from] exact_kernel::KernelError),
}

/// Field operations needed to ground an identity expression.
pub trait Field: Clone {
    fn from_rat(&self, r: Rat) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Result<Self, DslError>;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
}

impl Field for RationalFunction {
    fn from_rat(&self, r: Rat) -> Self {
        RationalFunction::constant(self.vars(), r.to_big())
    }
    fn add(&self, o: &Self) -> Self {
        RationalFunction::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RationalFunction::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RationalFunction::mul(self, o)
    }
    fn div(&self, o: &Self) -> Result<Self, DslError> {
        RationalFunction::div(self, o).map_err(|_| DslError::DivisionByZero)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RationalFunction::is_one(self)
    }
}

impl Field for BigRational {
    fn from_rat(&self, r: Rat) -> Self {
        r.to_big()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Result<Self, DslError> {
        if Zero::is_zero(o) {
            return Err(DslError::DivisionByZero);
        }
        Ok(self / o)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
    }
}

/// A point value: finite field element or the projective point at infinity.
#[derive(Debug, Clone, PartialEq)]
pub enum PointVal<F> {
    Fin(F),
    Inf,
}

impl<F> PointVal<F> {
    pub fn finite(&self) -> Result<&F, DslError> {
        match self {
            PointVal::Fin(v) => Ok(v),
            PointVal::Inf => Err(DslError::InfinityOutsideCrossRatio),
        }
    }
}

/// Cross ratio `(a-c)(b-d) / ((a-d)(b-c))` with at most one argument at ∞
/// (factors containing ∞ drop out). Degeneration to 0, 1 or ∞ is an error.
pub fn cross_ratio<F: Field>(p: &[PointVal<F>; 4]) -> Result<F, DslError> {
    let inf_count = p.iter().filter(|v| matches!(v, PointVal::Inf)).count();
    if inf_count > 1 {
        return Err(DslError::DegenerateCrossRatio);
    }
    let one = match p.iter().find_map(|v| match v {
        PointVal::Fin(f) => Some(f),
        PointVal::Inf => None,
    }) {
        Some(f) => f.from_rat(Rat::ONE),
        None => return Err(DslError::DegenerateCrossRatio),
    };
    let diff = |i: usize, j: usize| -> Option<F> {
        match (&p[i], &p[j]) {
            (PointVal::Fin(a), PointVal::Fin(b)) => Some(a.sub(b)),
            _ => None, // a factor containing ∞ is dropped
        }
    };
    let mut num = one.clone();
    let mut den = one;
    for (i, j, into_num) in [(0usize, 2usize, true), (1, 3, true), (0, 3, false), (1, 2, false)] {
        if let Some(d) = diff(i, j) {
            if into_num {
                num = num.mul(&d);
            } else {
                den = den.mul(&d);
            }
        }
    }
    if den.is_zero() || num.is_zero() {
        return Err(DslError::DegenerateCrossRatio);
    }
    let v = num.div(&den)?;
    if v.is_one() {
        return Err(DslError::DegenerateCrossRatio);
    }
    Ok(v)
}

/// Convenience: cross ratio of four rational functions over `vars`.
pub fn cross_ratio_rf(
    vars: &Arc<Vars>,
    pts: &[PointVal<RationalFunction>; 4],
) -> Result<RationalFunction, DslError> {
    let _ = vars;
    cross_ratio(pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn numeric_cross_ratio() {
        // cr(0,1,2,3) = 4/3
        let p = [
            PointVal::Fin(q(0, 1)),
            PointVal::Fin(q(1, 1)),
            PointVal::Fin(q(2, 1)),
            PointVal::Fin(q(3, 1)),
        ];
        assert_eq!(cross_ratio(&p).unwrap(), q(4, 3));
    }

    #[test]
    fn infinity_drops_factors() {
        // cr(0, 1, x, ∞) = -x/(1-x): at x=5 gives -5/-4 = 5/4
        let p = [
            PointVal::Fin(q(0, 1)),
            PointVal::Fin(q(1, 1)),
            PointVal::Fin(q(5, 1)),
            PointVal::Inf,
        ];
        assert_eq!(cross_ratio(&p).unwrap(), q(5, 4));
    }

    #[test]
    fn symbolic_cross_ratio_with_infinity() {
        let vars = Vars::new(vec!["x"]);
        let x = RationalFunction::var(&vars, 0);
        let zero = RationalFunction::int(&vars, 0);
        let one = RationalFunction::int(&vars, 1);
        let p = [
            PointVal::Fin(zero),
            PointVal::Fin(one.clone()),
            PointVal::Fin(x.clone()),
            PointVal::Inf,
        ];
        // cr(0,1,x,∞) = (0-x)/(1-x) = -x/(1-x)
        let v = cross_ratio(&p).unwrap();
        let expect = x.neg().div(&one.sub(&x)).unwrap();
        assert_eq!(v, expect);
    }

    #[test]
    fn degenerate_pairs_rejected() {
        let p = [
            PointVal::Fin(q(2, 1)),
            PointVal::Fin(q(1, 1)),
            PointVal::Fin(q(2, 1)),
            PointVal::Fin(q(3, 1)),
        ];
        assert_eq!(cross_ratio(&p), Err(DslError::DegenerateCrossRatio));
    }
}
