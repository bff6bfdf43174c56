//! Small exact rationals on `i64` with overflow-checked arithmetic.
//!
//! Tensor coefficients in every corpus computation are tiny (sums of small
//! integers, divided by small factorials), so a machine-word rational is both
//! exact and fast. Overflow aborts loudly instead of silently wrapping; the
//! rank computation, which can genuinely grow coefficients, uses `BigRational`
//! instead.

use num_integer::Integer;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

/// Exact rational `n/d` with `d > 0` and `gcd(|n|, d) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Rat {
    n: i64,
    d: i64,
}

#[inline]
fn overflow() -> ! {
    panic!("Rat overflow: coefficient left the i64 range; this indicates a runaway computation")
}

impl Rat {
    pub const ZERO: Rat = Rat { n: 0, d: 1 };
    pub const ONE: Rat = Rat { n: 1, d: 1 };

    pub fn new(n: i64, d: i64) -> Rat {
        assert!(d != 0, "Rat with zero denominator");
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            n = n.checked_neg().unwrap_or_else(|| overflow());
            d = d.checked_neg().unwrap_or_else(|| overflow());
        }
        Rat { n, d }
    }

    pub fn int(n: i64) -> Rat {
        Rat { n, d: 1 }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.n == 0
    }

    pub fn numer(&self) -> i64 {
        self.n
    }

    pub fn denom(&self) -> i64 {
        self.d
    }

    pub fn abs(&self) -> Rat {
        Rat { n: self.n.abs(), d: self.d }
    }

    pub fn recip(&self) -> Rat {
        assert!(self.n != 0, "Rat::recip of zero");
        Rat::new(self.d, self.n)
    }

    pub fn to_big(&self) -> num_rational::BigRational {
        num_rational::BigRational::new(self.n.into(), self.d.into())
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, o: Rat) -> Rat {
        let g = self.d.gcd(&o.d);
        let (da, db) = (self.d / g, o.d / g);
        let n = self
            .n
            .checked_mul(db)
            .and_then(|a| o.n.checked_mul(da).and_then(|b| a.checked_add(b)))
            .unwrap_or_else(|| overflow());
        let d = self.d.checked_mul(db).unwrap_or_else(|| overflow());
        Rat::new(n, d)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, o: Rat) -> Rat {
        self + (-o)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, o: Rat) -> Rat {
        // Cross-reduce first to keep intermediates small.
        let g1 = self.n.gcd(&o.d);
        let g2 = o.n.gcd(&self.d);
        let n = (self.n / g1).checked_mul(o.n / g2).unwrap_or_else(|| overflow());
        let d = (self.d / g2).checked_mul(o.d / g1).unwrap_or_else(|| overflow());
        Rat::new(n, d)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, o: Rat) -> Rat {
        self * o.recip()
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat { n: self.n.checked_neg().unwrap_or_else(|| overflow()), d: self.d }
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, o: Rat) {
        *self = *self + o;
    }
}

impl SubAssign for Rat {
    fn sub_assign(&mut self, o: Rat) {
        *self = *self - o;
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::int(n)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 1 {
            write!(f, "{}", self.n)
        } else {
            write!(f, "{}/{}", self.n, self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Rat::new(1, 2);
        let b = Rat::new(-2, 6);
        assert_eq!(a + b, Rat::new(1, 6));
        assert_eq!(a * b, Rat::new(-1, 6));
        assert_eq!(a - a, Rat::ZERO);
        assert_eq!((a / b), Rat::new(-3, 2));
        assert_eq!(Rat::new(4, -8), Rat::new(-1, 2));
    }

    #[test]
    #[should_panic]
    fn overflow_is_loud() {
        let big = Rat::int(i64::MAX / 2 + 1);
        let _ = big + big;
    }
}
