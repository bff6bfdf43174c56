//! Integer factorization for prime-basis specialized checks.
//!
//! Specialized verification substitutes small rationals into an identity and
//! factors every slot value into primes; values stay well inside u128, so
//! Miller-Rabin plus Pollard rho is plenty.

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    // Schoolbook double-and-add; values here are < 2^96 in practice.
    let mut result = 0u128;
    let mut a = a % m;
    let mut b = b;
    while b > 0 {
        if b & 1 == 1 {
            result = result.wrapping_add(a) % m;
        }
        a = a.wrapping_add(a) % m;
        b >>= 1;
    }
    result
}

fn powmod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    // These witnesses are deterministic for n < 3.3e24.
    'witness: for &a in &[2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u128) -> u128 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u128;
    loop {
        let mut x = 2u128;
        let mut y = 2u128;
        let mut d = 1u128;
        let f = |v: u128| (mulmod(v, v, n) + c) % n;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            let diff = if x > y { x - y } else { y - x };
            d = gcd_u128(diff, n);
        }
        if d != n && d != 0 {
            return d;
        }
        c += 1;
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Prime factorization of a positive integer, sorted, as (prime, exponent).
pub fn factor(n: u128) -> SmallVec<[(u128, u32); 8]> {
    let mut out: FxHashMap<u128, u32> = FxHashMap::default();
    let mut stack = vec![n];
    while let Some(mut m) = stack.pop() {
        if m == 1 {
            continue;
        }
        // Strip small primes first.
        for &p in &[2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            while m % p == 0 {
                *out.entry(p).or_insert(0) += 1;
                m /= p;
            }
        }
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    let mut v: SmallVec<[(u128, u32); 8]> = out.into_iter().collect();
    v.sort_by_key(|&(p, _)| p);
    v
}

/// Interns primes as dense indices, for use as a tensor slot alphabet.
#[derive(Debug, Default)]
pub struct PrimeTable {
    map: FxHashMap<u128, u32>,
    pub primes: Vec<u128>,
}

impl PrimeTable {
    pub fn new() -> PrimeTable {
        PrimeTable::default()
    }

    pub fn intern(&mut self, p: u128) -> u32 {
        if let Some(&i) = self.map.get(&p) {
            return i;
        }
        let i = self.primes.len() as u32;
        self.primes.push(p);
        self.map.insert(p, i);
        i
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_small() {
        assert_eq!(factor(1).len(), 0);
        assert_eq!(factor(12).to_vec(), vec![(2, 2), (3, 1)]);
        assert_eq!(factor(97).to_vec(), vec![(97, 1)]);
    }

    #[test]
    fn factor_large_semiprime() {
        let p = 1_000_000_007u128;
        let q = 998_244_353u128;
        let f = factor(p * q);
        assert_eq!(f.to_vec(), vec![(q, 1), (p, 1)]);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007u128 * 3));
        assert!(is_prime((1u128 << 61) - 1));
    }
}
