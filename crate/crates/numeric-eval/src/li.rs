//! Classical polylogarithms on the principal branch, cut along [1, ∞).
//!
//! Three regimes: direct series for |z| <= 0.55, inversion for |z| >= 1.9,
//! and the Bernoulli/log expansion in between. Arguments exactly on the cut
//! are nudged to the configured side; all branch information then flows
//! through the principal complex logarithm.

use crate::complex::C;
use crate::constants::{bernoulli, harmonic, zeta_int};
use crate::real::{pi, R};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumError {
    #[error("argument on a branch point")]
    OnBranchPoint,
    #[error("argument outside the series convergence domain")]
    OutOfConvergenceDomain,
    #[error("argument at a singular point")]
    OnSingularPoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutSide {
    Above,
    Below,
}

#[derive(Debug, Clone, Copy)]
pub struct NumCtx {
    pub bits: u32,
    pub cut: CutSide,
}

impl NumCtx {
    pub fn new(bits: u32) -> NumCtx {
        NumCtx { bits, cut: CutSide::Above }
    }

    pub fn with_cut(bits: u32, cut: CutSide) -> NumCtx {
        NumCtx { bits, cut }
    }

    fn nudge_onto_side(&self, z: &C) -> C {
        // Real arguments beyond the cut point get an explicit tiny imaginary
        // part so every subsequent log picks the configured branch.
        if z.im.is_zero() && z.re.m > (num_bigint::BigInt::from(1) << z.re.bits) {
            let mut eps = R::zero(self.bits);
            eps.m = num_bigint::BigInt::from(1) << 12;
            let eps = match self.cut {
                CutSide::Above => eps,
                CutSide::Below => eps.neg(),
            };
            return C::new(z.re.clone(), eps);
        }
        z.clone()
    }

    /// Li_n(z) for n = 1..=4 on the principal branch.
    pub fn li(&self, n: u32, z: &C) -> Result<C, NumError> {
        assert!((1..=4).contains(&n));
        let one = C::from_i64(1, self.bits);
        if z.is_zero() {
            return Ok(C::zero(self.bits));
        }
        if *z == one {
            if n == 1 {
                return Err(NumError::OnBranchPoint);
            }
            // zeta(n) boundary value
            return Ok(C::real(zeta_int(n as i64, self.bits)));
        }
        let z = self.nudge_onto_side(z);
        if n == 1 {
            return Ok(one.sub(&z).ln().neg());
        }
        let a2 = z.abs2().to_f64();
        if a2 <= 0.3025 {
            // |z| <= 0.55
            Ok(self.li_series(n, &z))
        } else if a2 >= 3.61 {
            // |z| >= 1.9
            self.li_inversion(n, &z)
        } else {
            Ok(self.li_log_expansion(n, &z))
        }
    }

    fn li_series(&self, n: u32, z: &C) -> C {
        let mut acc = C::zero(self.bits);
        let mut pow = z.clone();
        let stop = -((self.bits as i64) + 8);
        let mut k = 1u64;
        loop {
            let kn = (k as u128).pow(n);
            let term = if kn <= u64::MAX as u128 {
                pow.div_u64(kn as u64)
            } else {
                pow.div_u64(k).div_u64((k * k) as u64).div_u64(k)
            };
            acc = acc.add(&term);
            if term.mag2() < stop {
                break;
            }
            pow = pow.mul(z);
            k += 1;
            assert!(k < 100_000, "series did not converge");
        }
        acc
    }

    fn li_inversion(&self, n: u32, z: &C) -> Result<C, NumError> {
        let inner = self.li_series(n, &z.recip());
        let l = z.neg().ln(); // ln(-z), principal
        let l2 = l.mul(&l);
        let pi2 = {
            let p = pi(self.bits);
            p.mul(&p)
        };
        Ok(match n {
            2 => {
                // Li2(z) = -Li2(1/z) - pi^2/6 - ln(-z)^2/2
                let c = C::real(pi2.div_u64(6));
                inner.neg().sub(&c).sub(&l2.div_u64(2))
            }
            3 => {
                // Li3(z) = Li3(1/z) - pi^2/6 ln(-z) - ln(-z)^3/6
                let t = l.mul_real(&pi2.div_u64(6));
                inner.sub(&t).sub(&l2.mul(&l).div_u64(6))
            }
            4 => {
                // Li4(z) = -Li4(1/z) - 7 pi^4/360 - pi^2/12 ln(-z)^2 - ln(-z)^4/24
                let pi4 = pi2.mul(&pi2);
                let c = C::real(pi4.mul_i64(7).div_u64(360));
                let t = l2.mul_real(&pi2.div_u64(12));
                inner.neg().sub(&c).sub(&t).sub(&l2.mul(&l2).div_u64(24))
            }
            _ => unreachable!(),
        })
    }

    fn li_log_expansion(&self, n: u32, z: &C) -> C {
        // Li_n(z) = sum_{k>=0, k != n-1} zeta(n-k) mu^k / k!
        //           + mu^(n-1)/(n-1)! (H_{n-1} - ln(-mu)),   mu = ln z
        //
        // The head (k <= n) uses the zeta values directly. In the tail the
        // zeta values at negative integers grow factorially while mu^k/k!
        // shrinks, so each full term is advanced by the exact rational ratio
        // of consecutive nonzero terms instead — fixed-point truncation never
        // meets a tiny-times-huge product that way.
        let mu = z.ln();
        let mut acc = C::zero(self.bits);
        let mut pow = C::from_i64(1, self.bits); // mu^k / k!
        for k in 0..=n as i64 {
            if k == n as i64 - 1 {
                let h = harmonic(n as usize - 1);
                let hr = R::from_big_rational(&h, self.bits);
                let corr = C::real(hr).sub(&mu.neg().ln());
                acc = acc.add(&pow.mul(&corr));
            } else {
                let zv = zeta_int(n as i64 - k, self.bits);
                if !zv.is_zero() {
                    acc = acc.add(&pow.mul_real(&zv));
                }
            }
            pow = pow.mul(&mu).div_u64(k as u64 + 1);
        }
        // Tail: k = n+1, n+3, ... (zeta at even negatives vanishes).
        // zeta(-m) = (-1)^m B_{m+1}/(m+1); the k -> k+2 ratio is exact.
        let zeta_neg = |m: i64| -> BigRational {
            let b = bernoulli(m as usize + 1);
            let mut v = b[m as usize + 1].clone()
                / BigRational::from_integer(num_bigint::BigInt::from(m + 1));
            if m % 2 == 1 {
                v = -v;
            }
            v
        };
        let mu2 = mu.mul(&mu);
        let mut k = n as i64 + 1;
        // pow currently holds mu^(n+1)/(n+1)!
        let z1 = zeta_neg(1); // zeta(-1)
        let mut term = pow.mul_real(&R::from_big_rational(&z1, self.bits));
        let mut zprev = z1;
        let stop = -((self.bits as i64) + 10);
        loop {
            acc = acc.add(&term);
            if term.mag2() < stop {
                break;
            }
            let m = k - n as i64; // current zeta argument is -m
            let znext = zeta_neg(m + 2);
            let ratio = &znext / &zprev;
            term = term
                .mul(&mu2)
                .mul_ratio(ratio.numer(), ratio.denom())
                .div_u64((k as u64 + 1) * (k as u64 + 2));
            zprev = znext;
            k += 2;
            assert!(k < 40_000, "log expansion did not converge");
        }
        acc
    }
}

impl C {
    pub fn mul_real(&self, r: &R) -> C {
        C::new(self.re.mul(r), self.im.mul(r))
    }
}

/// Single-valued polylogarithm P_m(z): the real (m odd) or imaginary
/// (m even) part of sum_{k=0}^{m-1} 2^k B_k/k! log^k|z| Li_{m-k}(z).
pub fn sv(ctx: &NumCtx, m: u32, z: &C) -> Result<R, NumError> {
    let one = C::from_i64(1, ctx.bits);
    if z.is_zero() || *z == one {
        return Err(NumError::OnSingularPoint);
    }
    let log_abs = crate::real::ln(&z.abs2()).shr(1);
    let bern = bernoulli(m as usize - 1);
    let mut acc = C::zero(ctx.bits);
    let mut logpow = R::from_i64(1, ctx.bits);
    let mut fact = BigRational::from_integer(1.into());
    for k in 0..m {
        if k > 0 {
            logpow = logpow.mul(&log_abs);
            fact *= BigRational::from_integer((k as i64).into());
        }
        let bk = &bern[k as usize];
        if bk.is_zero() {
            continue;
        }
        let coeff = bk * BigRational::from_integer(num_bigint::BigInt::from(1) << k) / fact.clone();
        let li = ctx.li(m - k, z)?;
        acc = acc.add(&li.mul_real(&logpow).mul_real(&R::from_big_rational(&coeff, ctx.bits)));
    }
    Ok(if m % 2 == 1 { acc.re } else { acc.im })
}
