//! Fixed-point multiprecision reals: value = mantissa / 2^bits.
//!
//! No crate on the mirror provides arbitrary-precision floats, so this is a
//! deliberately small fixed-point layer over `BigInt`: exact add/sub, mul and
//! div with truncation, integer square root, and the handful of
//! transcendental functions the polylogarithm evaluators need (ln, atan2, pi,
//! ln 2). Working precision carries ~64 guard bits over the target tolerance.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R {
    pub m: BigInt,
    pub bits: u32,
}

impl R {
    pub fn zero(bits: u32) -> R {
        R { m: BigInt::zero(), bits }
    }

    pub fn from_i64(n: i64, bits: u32) -> R {
        R { m: BigInt::from(n) << bits, bits }
    }

    pub fn from_ratio(n: &BigInt, d: &BigInt, bits: u32) -> R {
        assert!(!d.is_zero());
        R { m: (n << bits) / d, bits }
    }

    pub fn from_big_rational(q: &num_rational::BigRational, bits: u32) -> R {
        R::from_ratio(q.numer(), q.denom(), bits)
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn add(&self, o: &R) -> R {
        debug_assert_eq!(self.bits, o.bits);
        R { m: &self.m + &o.m, bits: self.bits }
    }

    pub fn sub(&self, o: &R) -> R {
        debug_assert_eq!(self.bits, o.bits);
        R { m: &self.m - &o.m, bits: self.bits }
    }

    pub fn neg(&self) -> R {
        R { m: -&self.m, bits: self.bits }
    }

    pub fn mul(&self, o: &R) -> R {
        debug_assert_eq!(self.bits, o.bits);
        R { m: (&self.m * &o.m) >> self.bits, bits: self.bits }
    }

    pub fn div(&self, o: &R) -> R {
        debug_assert_eq!(self.bits, o.bits);
        assert!(!o.m.is_zero(), "division by numeric zero");
        R { m: (&self.m << self.bits) / &o.m, bits: self.bits }
    }

    pub fn mul_i64(&self, k: i64) -> R {
        R { m: &self.m * k, bits: self.bits }
    }

    pub fn div_u64(&self, k: u64) -> R {
        R { m: &self.m / k, bits: self.bits }
    }

    pub fn shr(&self, k: u32) -> R {
        R { m: &self.m >> k, bits: self.bits }
    }

    pub fn abs(&self) -> R {
        R { m: self.m.abs(), bits: self.bits }
    }

    pub fn cmp_abs(&self, o: &R) -> Ordering {
        self.m.abs().cmp(&o.m.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.m.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        // mantissa may exceed f64 range; scale via bit length
        let bl = self.m.bits() as i64;
        if bl <= 1000 {
            self.m.to_f64().unwrap_or(0.0) / 2f64.powi(self.bits as i32)
        } else {
            f64::INFINITY * if self.m.is_negative() { -1.0 } else { 1.0 }
        }
    }

    /// log2 of the magnitude, roughly (for step-size control).
    pub fn mag2(&self) -> i64 {
        if self.m.is_zero() {
            return i64::MIN / 2;
        }
        self.m.bits() as i64 - self.bits as i64
    }

    /// Truncated integer square root of a non-negative value.
    pub fn sqrt(&self) -> R {
        assert!(!self.m.is_negative(), "sqrt of negative real");
        R { m: (&self.m << self.bits).sqrt(), bits: self.bits }
    }
}

/// atanh power series; requires |x| well below 1 (callers reduce first).
fn atanh_series(x: &R) -> R {
    let x2 = x.mul(x);
    let mut term = x.clone();
    let mut acc = R::zero(x.bits);
    let mut k = 0u64;
    loop {
        let add = term.div_u64(2 * k + 1);
        if add.m.is_zero() {
            break;
        }
        acc = acc.add(&add);
        term = term.mul(&x2);
        k += 1;
        if k > 4 * x.bits as u64 {
            break;
        }
    }
    acc
}

/// atan power series; requires |x| <= ~1/4.
fn atan_series(x: &R) -> R {
    let x2 = x.mul(x);
    let mut term = x.clone();
    let mut acc = R::zero(x.bits);
    let mut k = 0u64;
    loop {
        let add = term.div_u64(2 * k + 1);
        if add.m.is_zero() {
            break;
        }
        if k % 2 == 0 {
            acc = acc.add(&add);
        } else {
            acc = acc.sub(&add);
        }
        term = term.mul(&x2);
        k += 1;
        if k > 4 * x.bits as u64 {
            break;
        }
    }
    acc
}

fn cache(bits: u32, which: &str, make: impl FnOnce() -> R) -> R {
    static CACHE: OnceLock<Mutex<HashMap<(u32, String), R>>> = OnceLock::new();
    let c = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (bits, which.to_string());
    if let Some(v) = c.lock().unwrap().get(&key) {
        return v.clone();
    }
    let v = make();
    c.lock().unwrap().insert(key, v.clone());
    v
}

pub fn ln2(bits: u32) -> R {
    cache(bits, "ln2", || {
        // ln 2 = 2 atanh(1/3)
        let third = R::from_ratio(&BigInt::from(1), &BigInt::from(3), bits + 32);
        let mut v = atanh_series(&third).mul_i64(2);
        v.m >>= 32;
        v.bits = bits;
        v
    })
}

pub fn pi(bits: u32) -> R {
    cache(bits, "pi", || {
        // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
        let wb = bits + 32;
        let a = atan_series(&R::from_ratio(&BigInt::from(1), &BigInt::from(5), wb));
        let b = atan_series(&R::from_ratio(&BigInt::from(1), &BigInt::from(239), wb));
        let mut v = a.mul_i64(16).sub(&b.mul_i64(4));
        v.m >>= 32;
        v.bits = bits;
        v
    })
}

/// Natural log of a positive real.
pub fn ln(x: &R) -> R {
    assert!(x.m.is_positive(), "ln of non-positive real");
    let bits = x.bits;
    // Normalize x = y * 2^e with y in [1, 2).
    let e = x.m.bits() as i64 - 1 - bits as i64;
    let y = if e >= 0 { x.shr(e as u32) } else { R { m: &x.m << ((-e) as u32), bits } };
    // ln y = 2 atanh((y-1)/(y+1)), argument < 1/3.
    let one = R::from_i64(1, bits);
    let t = y.sub(&one).div(&y.add(&one));
    let lny = atanh_series(&t).mul_i64(2);
    lny.add(&ln2(bits).mul_i64(e))
}

/// Principal atan for any real.
pub fn atan(x: &R) -> R {
    let bits = x.bits;
    let one = R::from_i64(1, bits);
    if x.m.is_zero() {
        return R::zero(bits);
    }
    if x.is_negative() {
        return atan(&x.neg()).neg();
    }
    if x.cmp_abs(&one) == Ordering::Greater {
        // atan(x) = pi/2 - atan(1/x)
        return pi(bits).shr(1).sub(&atan(&one.div(x)));
    }
    // Halve until small: atan(t) = 2 atan(t / (1 + sqrt(1 + t^2))).
    let mut t = x.clone();
    let mut doublings = 0u32;
    let threshold = R::from_ratio(&BigInt::from(1), &BigInt::from(8), bits);
    while t.cmp_abs(&threshold) == Ordering::Greater {
        let s = one.add(&t.mul(&t)).sqrt().add(&one);
        t = t.div(&s);
        doublings += 1;
        if doublings > 64 {
            break;
        }
    }
    let mut v = atan_series(&t);
    v.m <<= doublings;
    v
}

/// Principal atan2 in (-pi, pi].
pub fn atan2(y: &R, x: &R) -> R {
    let bits = y.bits;
    if x.m.is_positive() {
        return atan(&y.div(x));
    }
    if x.m.is_zero() {
        let half_pi = pi(bits).shr(1);
        if y.m.is_positive() {
            return half_pi;
        }
        if y.m.is_negative() {
            return half_pi.neg();
        }
        panic!("atan2(0, 0)");
    }
    // x < 0
    if y.m.is_negative() {
        atan(&y.div(x)).sub(&pi(bits))
    } else {
        atan(&y.div(x)).add(&pi(bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: u32 = 192;

    fn close(a: &R, b: f64, tol: f64) {
        assert!((a.to_f64() - b).abs() < tol, "{} vs {}", a.to_f64(), b);
    }

    #[test]
    fn constants() {
        close(&pi(B), std::f64::consts::PI, 1e-14);
        close(&ln2(B), std::f64::consts::LN_2, 1e-14);
    }

    #[test]
    fn ln_and_atan() {
        let x = R::from_ratio(&BigInt::from(7), &BigInt::from(2), B);
        close(&ln(&x), 3.5f64.ln(), 1e-14);
        let small = R::from_ratio(&BigInt::from(1), &BigInt::from(100), B);
        close(&ln(&small), 0.01f64.ln(), 1e-14);
        let t = R::from_ratio(&BigInt::from(-13), &BigInt::from(5), B);
        close(&atan(&t), (-2.6f64).atan(), 1e-14);
    }

    #[test]
    fn atan2_quadrants() {
        let one = R::from_i64(1, B);
        let mone = one.neg();
        close(&atan2(&one, &one), std::f64::consts::FRAC_PI_4, 1e-14);
        close(&atan2(&one, &mone), 3.0 * std::f64::consts::FRAC_PI_4, 1e-14);
        close(&atan2(&mone, &mone), -3.0 * std::f64::consts::FRAC_PI_4, 1e-14);
        close(&atan2(&mone, &one), -std::f64::consts::FRAC_PI_4, 1e-14);
    }

    #[test]
    fn sqrt_matches() {
        let x = R::from_i64(2, B);
        close(&x.sqrt(), std::f64::consts::SQRT_2, 1e-14);
    }

    #[test]
    fn high_precision_pi_digits() {
        // pi to 50+ digits: check mantissa against a known prefix
        let p = pi(320);
        let s = format!("{}", &p.m * BigInt::from(10).pow(55) >> 320u32);
        assert!(s.starts_with("31415926535897932384626433832795028841971693993751"));
    }
}
