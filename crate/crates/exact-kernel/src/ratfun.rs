//! Normalized rational functions `c * num / den`.
//!
//! `num` and `den` are coprime primitive integer polynomials with positive
//! leading coefficient; the rational scalar `c` carries sign and content.
//! Keeping the constant separate is what lets group words (symbol slots) drop
//! it for free: two functions equal up to a nonzero rational constant share
//! `num` and `den`.

use crate::gcd::poly_gcd;
use crate::poly::{Poly, Vars};
use crate::KernelError;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    /// Rational constant; zero iff the function is zero.
    pub c: BigRational,
    /// Primitive, positive-leading; the 1 polynomial when the function is constant.
    pub num: Poly,
    /// Primitive, positive-leading, never zero.
    pub den: Poly,
}

impl RationalFunction {
    pub fn normalize(num: Poly, den: Poly) -> Result<RationalFunction, KernelError> {
        if den.is_zero() {
            return Err(KernelError::ZeroDenominator);
        }
        let vars = num.vars.clone();
        if num.is_zero() {
            return Ok(RationalFunction {
                c: BigRational::zero(),
                num: Poly::one(&vars),
                den: Poly::one(&vars),
            });
        }
        let g = poly_gcd(&num, &den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let (cn, num) = num.primitive_positive();
        let (cd, den) = den.primitive_positive();
        Ok(RationalFunction { c: BigRational::new(cn, cd), num, den })
    }

    pub fn from_poly(p: Poly) -> RationalFunction {
        let vars = p.vars.clone();
        if p.is_zero() {
            return RationalFunction {
                c: BigRational::zero(),
                num: Poly::one(&vars),
                den: Poly::one(&vars),
            };
        }
        let (c, pp) = p.primitive_positive();
        RationalFunction { c: BigRational::from_integer(c), num: pp, den: Poly::one(&vars) }
    }

    pub fn constant(vars: &Arc<Vars>, c: BigRational) -> RationalFunction {
        if c.is_zero() {
            return RationalFunction {
                c,
                num: Poly::one(vars),
                den: Poly::one(vars),
            };
        }
        RationalFunction { c, num: Poly::one(vars), den: Poly::one(vars) }
    }

    pub fn int(vars: &Arc<Vars>, n: i64) -> RationalFunction {
        RationalFunction::constant(vars, BigRational::from_integer(n.into()))
    }

    pub fn var(vars: &Arc<Vars>, i: usize) -> RationalFunction {
        RationalFunction::from_poly(Poly::var(vars, i))
    }

    pub fn var_named(vars: &Arc<Vars>, name: &str) -> RationalFunction {
        let i = vars.index_of(name).expect("variable name in context");
        RationalFunction::var(vars, i)
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.num.vars
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.c.is_one()
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction { c: -self.c.clone(), num: self.num.clone(), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<RationalFunction, KernelError> {
        if self.is_zero() {
            return Err(KernelError::ZeroDenominator);
        }
        let c = self.c.recip();
        if self.num.leading().map(|(_, k)| k.is_negative()).unwrap_or(false) {
            unreachable!("numerator is positive-leading by invariant");
        }
        Ok(RationalFunction { c, num: self.den.clone(), den: self.num.clone() })
    }

    pub fn mul(&self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::constant(self.vars(), BigRational::zero());
        }
        // Cross-cancel before multiplying to keep polynomials small.
        let g1 = poly_gcd(&self.num, &o.den);
        let g2 = poly_gcd(&o.num, &self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = o.den.exact_div(&g1).unwrap();
        let n2 = o.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let (cn, num) = num.primitive_positive();
        let (cd, den) = den.primitive_positive();
        RationalFunction {
            c: &self.c * &o.c * BigRational::new(cn, cd),
            num,
            den,
        }
    }

    pub fn div(&self, o: &RationalFunction) -> Result<RationalFunction, KernelError> {
        Ok(self.mul(&o.recip()?))
    }

    pub fn add(&self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        // c1 n1/d1 + c2 n2/d2 = (p1 q2 n1 d2 + p2 q1 n2 d1) / (q1 q2 d1 d2)
        let (p1, q1) = (self.c.numer(), self.c.denom());
        let (p2, q2) = (o.c.numer(), o.c.denom());
        let a = self.num.mul(&o.den).mul_scalar(&(p1 * q2));
        let b = o.num.mul(&self.den).mul_scalar(&(p2 * q1));
        let num = a.add(&b);
        let den = self.den.mul(&o.den).mul_scalar(&(q1 * q2));
        RationalFunction::normalize(num, den).expect("denominator nonzero")
    }

    pub fn sub(&self, o: &RationalFunction) -> RationalFunction {
        self.add(&o.neg())
    }

    pub fn pow(&self, e: i32) -> Result<RationalFunction, KernelError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = RationalFunction::int(self.vars(), 1);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point (one value per context variable).
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational, KernelError> {
        let dv = self.den.eval(point);
        if dv.is_zero() {
            return Err(KernelError::PoleAtPoint);
        }
        Ok(&self.c * self.num.eval(point) / dv)
    }

    /// `1 - self`, a recurring companion in symbol computations.
    pub fn one_minus(&self) -> RationalFunction {
        RationalFunction::int(self.vars(), 1).sub(self)
    }

    /// A canonical total order (used for deterministic atom merging).
    pub fn cmp_canonical(&self, o: &RationalFunction) -> std::cmp::Ordering {
        (self.num.terms.len(), self.num.total_degree())
            .cmp(&(o.num.terms.len(), o.num.total_degree()))
            .then_with(|| format!("{}", self).cmp(&format!("{}", o)))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut head = String::new();
        if !self.c.is_one() {
            if self.c.denom().is_one() {
                head = format!("{}", self.c.numer());
            } else {
                head = format!("({}/{})", self.c.numer(), self.c.denom());
            }
        }
        let mut body = String::new();
        if !self.num.is_one() {
            if self.num.terms.len() > 1 {
                body = format!("({})", self.num);
            } else {
                body = format!("{}", self.num);
            }
        }
        if !self.den.is_one() {
            if body.is_empty() {
                body = "1".to_string();
            }
            if self.den.terms.len() > 1 {
                body = format!("{}/({})", body, self.den);
            } else {
                body = format!("{}/{}", body, self.den);
            }
        }
        match (head.is_empty(), body.is_empty()) {
            (true, true) => write!(f, "1"),
            (true, false) => write!(f, "{}", body),
            (false, true) => write!(f, "{}", head),
            (false, false) => write!(f, "{}*{}", head, body),
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ctx() -> Arc<Vars> {
        Vars::new(vec!["x", "y"])
    }

    #[test]
    fn normalize_cancels() {
        let v = ctx();
        let x = Poly::var(&v, 0);
        // (x^2 - x) / x -> (x - 1)/1
        let f = RationalFunction::normalize(x.mul(&x).sub(&x), x.clone()).unwrap();
        assert!(f.den.is_one());
        assert_eq!(format!("{}", f.num), "x - 1");
        assert!(f.c.is_one());
    }

    #[test]
    fn constant_ratio() {
        let v = ctx();
        let x = Poly::var(&v, 0);
        let y = Poly::var(&v, 1);
        // (x - y)/(y - x) -> -1
        let f = RationalFunction::normalize(x.sub(&y), y.sub(&x)).unwrap();
        assert!(f.is_constant());
        assert_eq!(f.c, BigRational::from_integer((-1).into()));
    }

    #[test]
    fn shared_factor() {
        let v = ctx();
        let one = Poly::one(&v);
        let x = Poly::var(&v, 0);
        let y = Poly::var(&v, 1);
        let omx = one.sub(&x);
        let omxy = one.sub(&x.mul(&y));
        // ((1-x)(1-xy)) / (1-xy) -> (1-x)/1, stored positive-leading as (x-1) with c=-1
        let f = RationalFunction::normalize(omx.mul(&omxy), omxy.clone()).unwrap();
        let g = RationalFunction::from_poly(omx);
        assert_eq!(f, g);
    }

    #[test]
    fn proportional_inputs_normalize_identically() {
        let v = ctx();
        let x = Poly::var(&v, 0);
        let y = Poly::var(&v, 1);
        let r = x.mul(&y).add(&Poly::one(&v));
        let p = x.sub(&Poly::one(&v));
        let q = y.clone();
        let f1 = RationalFunction::normalize(p.clone(), q.clone()).unwrap();
        let f2 = RationalFunction::normalize(p.mul(&r), q.mul(&r)).unwrap();
        assert_eq!(f1, f2);
    }

    #[test]
    fn evaluation_and_poles() {
        let v = ctx();
        let x = Poly::var(&v, 0);
        let one = Poly::one(&v);
        // x/(1-x) at 1/2 -> 1
        let f = RationalFunction::normalize(x.clone(), one.sub(&x)).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        let p = vec![half, BigRational::zero()];
        assert_eq!(f.eval(&p).unwrap(), BigRational::one());
        let at_pole = vec![BigRational::one(), BigRational::zero()];
        assert_eq!(f.eval(&at_pole), Err(KernelError::PoleAtPoint));
    }

    #[test]
    fn idempotent_normalization() {
        let v = ctx();
        let x = Poly::var(&v, 0);
        let y = Poly::var(&v, 1);
        let f = RationalFunction::normalize(x.mul(&y).sub(&y), x.sub(&Poly::one(&v))).unwrap();
        let g = RationalFunction::normalize(
            f.num.mul_scalar(&BigInt::from(1)),
            f.den.clone(),
        )
        .unwrap();
        assert_eq!(f.num, g.num);
        assert_eq!(f.den, g.den);
    }
}
