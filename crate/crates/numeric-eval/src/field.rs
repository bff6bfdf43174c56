//! Grounding identity templates over complex values.

use crate::complex::C;
use crate::real::R;
use expr_dsl::{DslError, Field};
use num_bigint::BigInt;

impl Field for C {
    fn from_rat(&self, r: exact_kernel::Rat) -> Self {
        C::real(R::from_ratio(&BigInt::from(r.numer()), &BigInt::from(r.denom()), self.bits()))
    }
    fn add(&self, o: &Self) -> Self {
        C::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        C::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        C::mul(self, o)
    }
    fn div(&self, o: &Self) -> Result<Self, DslError> {
        if o.is_zero() {
            return Err(DslError::DivisionByZero);
        }
        Ok(C::div(self, o))
    }
    fn neg(&self) -> Self {
        C::neg(self)
    }
    fn is_zero(&self) -> bool {
        C::is_zero(self)
    }
    fn is_one(&self) -> bool {
        *self == C::from_i64(1, self.bits())
    }
}

/// Evaluate a rational function at a complex point (one value per variable).
pub fn rf_eval_c(f: &exact_kernel::RationalFunction, point: &[C]) -> Result<C, DslError> {
    let bits = point[0].bits();
    let eval_poly = |p: &exact_kernel::Poly| -> C {
        let mut acc = C::zero(bits);
        for (m, c) in &p.terms {
            let mut t = C::real(R::from_ratio(c, &BigInt::from(1), bits));
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    };
    let num = eval_poly(&f.num);
    let den = eval_poly(&f.den);
    if den.is_zero() {
        return Err(DslError::DivisionByZero);
    }
    let c = C::real(R::from_ratio(f.c.numer(), f.c.denom(), bits));
    Ok(c.mul(&num).div(&den))
}
