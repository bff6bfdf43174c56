//! Multivariate polynomial gcd.
//!
//! Strategy: strip monomial content, certify coprimality cheaply when possible
//! (univariate image at a deterministic evaluation point whose leading
//! coefficients survive), and otherwise run a primitive PRS in the variable of
//! smallest degree with recursive content extraction. Inputs in this project
//! are small (degree <= ~12, <= 8 variables), so the primitive PRS is entirely
//! adequate; what matters is that the coprime case, which dominates gcd-free
//! basis construction, exits early.

use crate::poly::{Mono, Poly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Primitive-normalized gcd. `gcd(0, q)` is the primitive part of `q`.
pub fn poly_gcd(p: &Poly, q: &Poly) -> Poly {
    debug_assert_eq!(p.vars, q.vars);
    if p.is_zero() {
        return q.primitive_positive().1;
    }
    if q.is_zero() {
        return p.primitive_positive().1;
    }
    let (_, a) = p.primitive_positive();
    let (_, b) = q.primitive_positive();
    if a == b {
        return a;
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(&p.vars);
    }

    // Common monomial factor.
    let ma = monomial_content(&a);
    let mb = monomial_content(&b);
    let mg = Mono(ma.0.iter().zip(&mb.0).map(|(&x, &y)| x.min(y)).collect());
    let a = strip_monomial(&a, &ma);
    let b = strip_monomial(&b, &mb);

    let sup_a = a.support();
    let sup_b = b.support();
    let common: Vec<usize> = sup_a.iter().copied().filter(|v| sup_b.contains(v)).collect();

    let core = if common.is_empty() {
        Poly::one(&p.vars)
    } else {
        // Main variable: smallest combined degree keeps the PRS shallow.
        let main = *common
            .iter()
            .min_by_key(|&&v| a.degree_in(v).max(b.degree_in(v)))
            .unwrap();
        // The gcd splits as gcd of contents times gcd of primitive parts with
        // respect to the main variable; the coprimality certificate only sees
        // the latter.
        let cont_a = content_in(&a, main);
        let cont_b = content_in(&b, main);
        let g_cont = poly_gcd(&cont_a, &cont_b);
        let pa = a.exact_div(&cont_a).expect("content divides");
        let pb = b.exact_div(&cont_b).expect("content divides");
        if pa.is_constant() || pb.is_constant() || certified_coprime(&pa, &pb, main) {
            g_cont
        } else {
            g_cont.mul(&gcd_prs(&pa, &pb, main))
        }
    };

    let g = core.mul_mono(&mg, &BigInt::one());
    g.primitive_positive().1
}

fn monomial_content(p: &Poly) -> Mono {
    let n = p.vars.len();
    let mut m = Mono(smallvec::smallvec![u16::MAX; n]);
    for (mono, _) in &p.terms {
        for i in 0..n {
            m.0[i] = m.0[i].min(mono.0[i]);
        }
    }
    m
}

fn strip_monomial(p: &Poly, m: &Mono) -> Poly {
    Poly {
        vars: p.vars.clone(),
        terms: p.terms.iter().map(|(mm, c)| (mm.div(m).unwrap(), c.clone())).collect(),
    }
}

/// Certified coprimality test: substitute deterministic integers for all
/// variables but `main`. If neither leading coefficient (in `main`) vanishes
/// at the point, the univariate gcd of the images bounds the true gcd degree
/// from above, so a constant image gcd certifies a constant gcd.
fn certified_coprime(a: &Poly, b: &Poly, main: usize) -> bool {
    let n = a.vars.len();
    let lca = a.leading_coeff_in(main);
    let lcb = b.leading_coeff_in(main);
    // A few deterministic points; small odd numbers avoid most accidental zeros.
    for salt in 0..4i64 {
        let vals: Vec<i64> = (0..n).map(|i| 3 + 2 * (i as i64) + 7 * salt).collect();
        if lc_vanishes(&lca, main, &vals) || lc_vanishes(&lcb, main, &vals) {
            continue;
        }
        let ua = a.eval_except(main, &vals);
        let ub = b.eval_except(main, &vals);
        if univariate_gcd_degree(ua, ub) == 0 {
            return true;
        }
        // A non-constant image gcd is inconclusive only once; a second
        // independent point with non-constant image almost surely means a
        // genuine common factor, so fall through to the PRS.
        return false;
    }
    false
}

fn lc_vanishes(lc: &Poly, main: usize, vals: &[i64]) -> bool {
    lc.eval_except(main, vals).iter().all(|c| c.is_zero())
}

/// Degree of the gcd of two dense univariate integer polynomials.
fn univariate_gcd_degree(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> usize {
    fn deg(v: &[BigInt]) -> usize {
        v.len() - 1
    }
    fn normalize(v: &mut Vec<BigInt>) {
        while v.len() > 1 && v.last().unwrap().is_zero() {
            v.pop();
        }
    }
    fn is_zero(v: &[BigInt]) -> bool {
        v.iter().all(|c| c.is_zero())
    }
    fn primitive(v: &mut [BigInt]) {
        let mut g = BigInt::zero();
        for c in v.iter() {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
        if g.is_zero() || g.is_one() {
            return;
        }
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    normalize(&mut a);
    normalize(&mut b);
    if is_zero(&a) {
        return if is_zero(&b) { 0 } else { deg(&b) };
    }
    if is_zero(&b) {
        return deg(&a);
    }
    loop {
        if deg(&a) < deg(&b) {
            std::mem::swap(&mut a, &mut b);
        }
        // Pseudo-remainder of a by b.
        let lb = b.last().unwrap().clone();
        while !is_zero(&a) && deg(&a) >= deg(&b) {
            let shift = deg(&a) - deg(&b);
            let la = a.last().unwrap().clone();
            for c in a.iter_mut() {
                *c = &*c * &lb;
            }
            for (i, bc) in b.iter().enumerate() {
                a[i + shift] -= &la * bc;
            }
            normalize(&mut a);
            if is_zero(&a) {
                break;
            }
        }
        if is_zero(&a) {
            return deg(&b);
        }
        primitive(&mut a);
        if deg(&a) == 0 {
            return 0;
        }
        std::mem::swap(&mut a, &mut b);
    }
}

/// Primitive PRS gcd in the variable `main`; inputs must be primitive with
/// respect to `main`.
fn gcd_prs(a: &Poly, b: &Poly, main: usize) -> Poly {
    let mut f = a.clone();
    let mut g = b.clone();
    if f.degree_in(main) < g.degree_in(main) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = pseudo_rem(&f, &g, main);
        if r.is_zero() {
            break;
        }
        let r = r.exact_div(&content_in(&r, main)).expect("content divides");
        let (_, r) = r.primitive_positive();
        if r.degree_in(main) == 0 {
            // Coprime in the main variable.
            return Poly::one(&a.vars);
        }
        f = g;
        g = r;
    }
    let g = g.exact_div(&content_in(&g, main)).expect("content divides");
    g.primitive_positive().1
}

/// Gcd of the coefficients of `p` viewed as univariate in `main`.
fn content_in(p: &Poly, main: usize) -> Poly {
    let d = p.degree_in(main);
    let mut g = Poly::zero(&p.vars);
    for k in 0..=d {
        let c = p.coeff_of(main, k);
        if !c.is_zero() {
            g = poly_gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        Poly::one(&p.vars)
    } else {
        g
    }
}

/// Pseudo-remainder of `a` by `b` in variable `main`.
fn pseudo_rem(a: &Poly, b: &Poly, main: usize) -> Poly {
    let db = b.degree_in(main);
    let lb = b.leading_coeff_in(main);
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(main);
        if dr < db {
            break;
        }
        let lr = r.leading_coeff_in(main);
        // r := lb * r - lr * v^(dr-db) * b
        let t = b.mul(&lr).shift_var(main, dr - db);
        r = r.mul(&lb).sub(&t);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Vars;
    use std::sync::Arc;

    fn ctx3() -> Arc<Vars> {
        Vars::new(vec!["x", "y", "z"])
    }

    fn pv(v: &Arc<Vars>, i: usize) -> Poly {
        Poly::var(v, i)
    }

    #[test]
    fn gcd_univariate_split() {
        let v = ctx3();
        let x = pv(&v, 0);
        // gcd(x^2 - x, x^3) = x
        let p = x.mul(&x).sub(&x);
        let q = x.mul(&x).mul(&x);
        assert_eq!(poly_gcd(&p, &q), x);
    }

    #[test]
    fn gcd_extracts_common_factor() {
        let v = ctx3();
        let (x, y) = (pv(&v, 0), pv(&v, 1));
        // gcd(x*y - y, x - 1) = x - 1
        let p = x.mul(&y).sub(&y);
        let q = x.sub(&Poly::one(&v));
        assert_eq!(poly_gcd(&p, &q), q);
    }

    #[test]
    fn gcd_coprime_dense() {
        let v = ctx3();
        let (x, y, z) = (pv(&v, 0), pv(&v, 1), pv(&v, 2));
        let one = Poly::one(&v);
        // gcd(1 - y - z + xyz, (1-x)(1-y)) = 1
        let p = one.sub(&y).sub(&z).add(&x.mul(&y).mul(&z));
        let q = one.sub(&x).mul(&one.sub(&y));
        assert!(poly_gcd(&p, &q).is_one());
    }

    #[test]
    fn gcd_multiple_of_product() {
        let v = ctx3();
        let (x, y) = (pv(&v, 0), pv(&v, 1));
        let one = Poly::one(&v);
        // gcd(p*r, q*r) = r * gcd(p, q) with p = x+1, q = x-1, r = x*y - 1
        let r = x.mul(&y).sub(&one);
        let p = x.add(&one).mul(&r);
        let q = x.sub(&one).mul(&r);
        assert_eq!(poly_gcd(&p, &q), r.primitive_positive().1);
    }

    #[test]
    fn gcd_of_zero() {
        let v = ctx3();
        let x = pv(&v, 0);
        let z = Poly::zero(&v);
        let p = x.mul_scalar(&num_bigint::BigInt::from(-4));
        assert_eq!(poly_gcd(&z, &p), x);
    }
}
