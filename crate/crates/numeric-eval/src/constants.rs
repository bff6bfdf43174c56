//! Bernoulli numbers, zeta values and harmonic numbers.

use crate::real::{pi, R};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Bernoulli numbers B_0..B_n (B_1 = -1/2), exact.
pub fn bernoulli(n: usize) -> Vec<BigRational> {
    static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let mut tab = cache.lock().unwrap();
    while tab.len() <= n {
        let m = tab.len();
        if m == 0 {
            tab.push(BigRational::one());
            continue;
        }
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one(); // C(m+1, 0)
        for (j, b) in tab.iter().enumerate().take(m) {
            acc += BigRational::from_integer(binom.clone()) * b;
            // C(m+1, j+1) = C(m+1, j) * (m+1-j)/(j+1)
            binom = binom * BigInt::from(m as i64 + 1 - j as i64) / BigInt::from(j as i64 + 1);
        }
        let bm = -acc / BigRational::from_integer(binom);
        tab.push(bm);
    }
    tab[..=n].to_vec()
}

/// zeta(3) by the alternating central-binomial series, exact partial sums.
pub fn zeta3(bits: u32) -> R {
    fn key_cache(bits: u32, make: impl FnOnce() -> R) -> R {
        static CACHE: OnceLock<Mutex<HashMap<u32, R>>> = OnceLock::new();
        let c = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(v) = c.lock().unwrap().get(&bits) {
            return v.clone();
        }
        let v = make();
        c.lock().unwrap().insert(bits, v.clone());
        v
    }
    key_cache(bits, || {
        // zeta(3) = 5/2 sum_{k>=1} (-1)^(k-1) / (k^3 C(2k,k))
        let terms = (bits as usize) / 2 + 16;
        let mut acc = BigRational::zero();
        let mut central = BigInt::from(2); // C(2,1)
        for k in 1..=terms {
            let kk = BigInt::from(k as i64);
            let denom = &kk * &kk * &kk * &central;
            let term = BigRational::new(BigInt::one(), denom);
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
            // C(2(k+1), k+1) = C(2k,k) * (2k+1)(2k+2)/((k+1)^2)
            let k1 = BigInt::from(k as i64 + 1);
            central = central * BigInt::from(2 * k as i64 + 1) * BigInt::from(2 * k as i64 + 2)
                / (&k1 * &k1);
        }
        acc *= BigRational::new(BigInt::from(5), BigInt::from(2));
        R::from_big_rational(&acc, bits)
    })
}

/// zeta(s) for the integers the log-series expansion needs: s <= 4, s != 1.
pub fn zeta_int(s: i64, bits: u32) -> R {
    match s {
        4 => {
            // pi^4 / 90
            let p = pi(bits);
            let p2 = p.mul(&p);
            p2.mul(&p2).div_u64(90)
        }
        3 => zeta3(bits),
        2 => {
            let p = pi(bits);
            p.mul(&p).div_u64(6)
        }
        s if s <= 0 => {
            // zeta(-n) = (-1)^n B_{n+1} / (n+1)
            let n = (-s) as usize;
            let b = bernoulli(n + 1);
            let mut v = b[n + 1].clone() / BigRational::from_integer(BigInt::from(n as i64 + 1));
            if n % 2 == 1 {
                v = -v;
            }
            R::from_big_rational(&v, bits)
        }
        _ => panic!("zeta_int({}) not needed", s),
    }
}

/// Harmonic number H_n as an exact rational.
pub fn harmonic(n: usize) -> BigRational {
    let mut acc = BigRational::zero();
    for k in 1..=n {
        acc += BigRational::new(BigInt::one(), BigInt::from(k as i64));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli(8);
        assert_eq!(b[0], BigRational::one());
        assert_eq!(b[1], BigRational::new((-1).into(), 2.into()));
        assert_eq!(b[2], BigRational::new(1.into(), 6.into()));
        assert!(b[3].is_zero());
        assert_eq!(b[4], BigRational::new((-1).into(), 30.into()));
        assert_eq!(b[8], BigRational::new((-1).into(), 30.into()));
    }

    #[test]
    fn zeta_values() {
        assert!((zeta3(192).to_f64() - 1.2020569031595942854).abs() < 1e-14);
        assert!((zeta_int(2, 192).to_f64() - 1.6449340668482264).abs() < 1e-14);
        assert!((zeta_int(4, 192).to_f64() - 1.0823232337111382).abs() < 1e-14);
        assert!((zeta_int(0, 192).to_f64() + 0.5).abs() < 1e-14);
        assert!((zeta_int(-1, 192).to_f64() + 1.0 / 12.0).abs() < 1e-14);
        assert!(zeta_int(-2, 192).to_f64().abs() < 1e-14);
        assert!((zeta_int(-3, 192).to_f64() - 1.0 / 120.0).abs() < 1e-14);
    }
}
