//! Complex numbers over the fixed-point reals.

use crate::real::{atan2, ln, R};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
pub struct C {
    pub re: R,
    pub im: R,
}

impl C {
    pub fn zero(bits: u32) -> C {
        C { re: R::zero(bits), im: R::zero(bits) }
    }

    pub fn from_i64(n: i64, bits: u32) -> C {
        C { re: R::from_i64(n, bits), im: R::zero(bits) }
    }

    pub fn real(r: R) -> C {
        let bits = r.bits;
        C { re: r, im: R::zero(bits) }
    }

    pub fn new(re: R, im: R) -> C {
        C { re, im }
    }

    pub fn bits(&self) -> u32 {
        self.re.bits
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &C) -> C {
        C { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &C) -> C {
        C { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> C {
        C { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &C) -> C {
        C {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn mul_i64(&self, k: i64) -> C {
        C { re: self.re.mul_i64(k), im: self.im.mul_i64(k) }
    }

    pub fn div_u64(&self, k: u64) -> C {
        C { re: self.re.div_u64(k), im: self.im.div_u64(k) }
    }

    pub fn abs2(&self) -> R {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> R {
        self.abs2().sqrt()
    }

    pub fn div(&self, o: &C) -> C {
        let d = o.abs2();
        assert!(!d.is_zero(), "complex division by zero");
        let num = self.mul(&o.conj());
        C { re: num.re.div(&d), im: num.im.div(&d) }
    }

    pub fn mul_ratio(&self, num: &BigInt, den: &BigInt) -> C {
        let scale = |r: &R| -> R { R { m: (&r.m * num) / den, bits: r.bits } };
        C { re: scale(&self.re), im: scale(&self.im) }
    }

    pub fn conj(&self) -> C {
        C { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn recip(&self) -> C {
        C::from_i64(1, self.bits()).div(self)
    }

    /// Principal logarithm: ln|z| + i arg(z), cut along the negative reals.
    pub fn ln(&self) -> C {
        assert!(!self.is_zero(), "log of zero");
        let half_ln_abs2 = ln(&self.abs2()).shr(1);
        C { re: half_ln_abs2, im: atan2(&self.im, &self.re) }
    }

    /// Truncated-magnitude estimate: log2 |z| (for convergence control).
    pub fn mag2(&self) -> i64 {
        self.re.mag2().max(self.im.mag2())
    }

    pub fn to_f64s(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn from_f64(x: f64, bits: u32) -> C {
        // exact dyadic conversion through the bit pattern
        let scaled = x * 2f64.powi(40);
        let m = BigInt::from(scaled.round() as i128) << (bits - 40);
        C { re: R { m, bits }, im: R::zero(bits) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: u32 = 192;

    #[test]
    fn field_ops() {
        let a = C::new(R::from_i64(3, B), R::from_i64(4, B));
        let b = C::new(R::from_i64(1, B), R::from_i64(-2, B));
        let p = a.mul(&b);
        assert!((p.re.to_f64() - 11.0).abs() < 1e-12);
        assert!((p.im.to_f64() - -2.0).abs() < 1e-12);
        let q = p.div(&b);
        assert!((q.re.to_f64() - 3.0).abs() < 1e-12);
        assert!((q.im.to_f64() - 4.0).abs() < 1e-12);
        assert!((a.abs().to_f64() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn principal_log() {
        let z = C::new(R::from_i64(-1, B), R::zero(B));
        let l = z.ln();
        assert!(l.re.to_f64().abs() < 1e-12);
        assert!((l.im.to_f64() - std::f64::consts::PI).abs() < 1e-12);
    }
}
