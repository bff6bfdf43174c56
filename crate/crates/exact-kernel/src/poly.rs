//! Sparse multivariate polynomials over Z.
//!
//! Terms are kept sorted in descending graded-lexicographic order, so the
//! leading term is `terms[0]` and equality is structural. Rational content is
//! handled one level up in [`crate::RationalFunction`]; polynomials here carry
//! integer coefficients, which is what the subresultant-free primitive PRS gcd
//! wants anyway.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Ordered list of variable names, shared by all polynomials of one context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vars(pub Vec<String>);

impl Vars {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Arc<Vars> {
        Arc::new(Vars(names.into_iter().map(Into::into).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }
}

/// Exponent vector; length always equals the number of context variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub SmallVec<[u16; 8]>);

impl Mono {
    pub fn constant(n: usize) -> Mono {
        Mono(smallvec::smallvec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Mono {
        let mut m = Mono::constant(n);
        m.0[i] = 1;
        m
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(&a, &b)| a + b).collect())
    }

    /// Componentwise division; `None` if any exponent would go negative.
    pub fn div(&self, o: &Mono) -> Option<Mono> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(&o.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Mono(out))
    }

    /// Graded-lexicographic order: total degree first, then lex on exponents.
    pub fn grlex(&self, o: &Mono) -> Ordering {
        match self.total_degree().cmp(&o.total_degree()) {
            Ordering::Equal => self.0.cmp(&o.0),
            ord => ord,
        }
    }
}

/// Sparse multivariate polynomial over Z with graded-lex ordered terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    pub vars: Arc<Vars>,
    /// Sorted descending by grlex; no zero coefficients.
    pub terms: Vec<(Mono, BigInt)>,
}

impl Poly {
    pub fn zero(vars: &Arc<Vars>) -> Poly {
        Poly { vars: vars.clone(), terms: Vec::new() }
    }

    pub fn constant(vars: &Arc<Vars>, c: BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(vars);
        }
        Poly { vars: vars.clone(), terms: vec![(Mono::constant(vars.len()), c)] }
    }

    pub fn one(vars: &Arc<Vars>) -> Poly {
        Poly::constant(vars, BigInt::one())
    }

    pub fn var(vars: &Arc<Vars>, i: usize) -> Poly {
        Poly { vars: vars.clone(), terms: vec![(Mono::var(vars.len(), i), BigInt::one())] }
    }

    pub fn var_named(vars: &Arc<Vars>, name: &str) -> Option<Poly> {
        vars.index_of(name).map(|i| Poly::var(vars, i))
    }

    pub fn from_terms(vars: &Arc<Vars>, terms: Vec<(Mono, BigInt)>) -> Poly {
        let mut map: FxHashMap<Mono, BigInt> = FxHashMap::default();
        for (m, c) in terms {
            let e = map.entry(m).or_insert_with(BigInt::zero);
            *e += c;
        }
        Poly::from_map(vars, map)
    }

    fn from_map(vars: &Arc<Vars>, map: FxHashMap<Mono, BigInt>) -> Poly {
        let mut terms: Vec<(Mono, BigInt)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.grlex(&a.0));
        Poly { vars: vars.clone(), terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_constant())
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    pub fn neg(&self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        debug_assert_eq!(self.vars, o.vars);
        // Merge two sorted term lists.
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            match self.terms[i].0.grlex(&o.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(o.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &o.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        Poly { vars: self.vars.clone(), terms: out }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        debug_assert_eq!(self.vars, o.vars);
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.vars);
        }
        let mut map: FxHashMap<Mono, BigInt> =
            FxHashMap::with_capacity_and_hasher(self.terms.len() * o.terms.len(), Default::default());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.mul(mb);
                let e = map.entry(m).or_insert_with(BigInt::zero);
                *e += ca * cb;
            }
        }
        Poly::from_map(&self.vars, map)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(mm, k)| (mm.mul(m), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one(&self.vars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        debug_assert_eq!(self.vars, d.vars);
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero(&self.vars));
        }
        let (dm, dc) = &d.terms[0];
        let mut rem = self.clone();
        let mut q: Vec<(Mono, BigInt)> = Vec::new();
        while !rem.is_zero() {
            let (rm, rc) = &rem.terms[0];
            let m = rm.div(dm)?;
            let (coeff, r) = num_integer::Integer::div_rem(rc, dc);
            if !r.is_zero() {
                return None;
            }
            q.push((m.clone(), coeff.clone()));
            rem = rem.sub(&d.mul_mono(&m, &coeff));
        }
        q.sort_by(|a, b| b.0.grlex(&a.0));
        Some(Poly { vars: self.vars.clone(), terms: q })
    }

    /// Whether `d` divides `self` exactly.
    pub fn divisible_by(&self, d: &Poly) -> bool {
        self.exact_div(d).is_some()
    }

    /// Gcd of the integer coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient; returns the applied
    /// scalar `s` such that `self = s * result`.
    pub fn primitive_positive(&self) -> (BigInt, Poly) {
        if self.is_zero() {
            return (BigInt::one(), self.clone());
        }
        let mut c = self.content();
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        let p = Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), num_integer::Integer::div_floor(k, &c)))
                .collect(),
        };
        (c, p)
    }

    /// Degree in one variable.
    pub fn degree_in(&self, v: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.0[v]).max().unwrap_or(0)
    }

    /// Leading coefficient with respect to one variable, as a polynomial in
    /// the remaining variables (the exponent of `v` is zeroed).
    pub fn leading_coeff_in(&self, v: usize) -> Poly {
        let d = self.degree_in(v);
        let terms: Vec<(Mono, BigInt)> = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[v] == d)
            .map(|(m, c)| {
                let mut mm = m.clone();
                mm.0[v] = 0;
                (mm, c.clone())
            })
            .collect();
        Poly::from_terms(&self.vars, terms)
    }

    /// Coefficient of `v^k` as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: usize, k: u16) -> Poly {
        let terms: Vec<(Mono, BigInt)> = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[v] == k)
            .map(|(m, c)| {
                let mut mm = m.clone();
                mm.0[v] = 0;
                (mm, c.clone())
            })
            .collect();
        Poly::from_terms(&self.vars, terms)
    }

    /// Multiply by `v^k`.
    pub fn shift_var(&self, v: usize, k: u16) -> Poly {
        let mut m = Mono::constant(self.vars.len());
        m.0[v] = k;
        self.mul_mono(&m, &BigInt::one())
    }

    /// Partial derivative with respect to variable `v`.
    pub fn derivative(&self, v: usize) -> Poly {
        let terms: Vec<(Mono, BigInt)> = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[v] > 0)
            .map(|(m, c)| {
                let mut mm = m.clone();
                let e = mm.0[v];
                mm.0[v] = e - 1;
                (mm, c * BigInt::from(e))
            })
            .collect();
        Poly::from_terms(&self.vars, terms)
    }

    /// Variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        let n = self.vars.len();
        let mut seen = vec![false; n];
        for (m, _) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        (0..n).filter(|&i| seen[i]).collect()
    }

    /// Evaluate at a full rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitute integer values for all variables except `keep`, producing
    /// univariate integer coefficients (dense, ascending in degree).
    pub fn eval_except(&self, keep: usize, vals: &[i64]) -> Vec<BigInt> {
        let d = self.degree_in(keep) as usize;
        let mut out = vec![BigInt::zero(); d + 1];
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if i != keep {
                    for _ in 0..e {
                        t *= vals[i];
                    }
                }
            }
            out[m.0[keep] as usize] += t;
        }
        while out.len() > 1 && out.last().unwrap().is_zero() {
            out.pop();
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut printed = false;
            if !abs.is_one() || m.is_constant() {
                write!(f, "{}", abs)?;
                printed = true;
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    if printed {
                        write!(f, "*")?;
                    }
                    write!(f, "{}", self.vars.name(v))?;
                    if e > 1 {
                        write!(f, "^{}", e)?;
                    }
                    printed = true;
                }
            }
        }
        Ok(())
    }
}
