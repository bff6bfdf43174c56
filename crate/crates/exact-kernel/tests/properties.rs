//! Randomized invariants for the exact kernel.

use exact_kernel::gcd::poly_gcd;
use exact_kernel::{gcd_free_basis, BigRational, Poly, RationalFunction, Vars};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

fn random_poly(rng: &mut ChaCha8Rng, vars: &Arc<Vars>, max_deg: u16, terms: usize) -> Poly {
    loop {
        let mut t = Vec::new();
        for _ in 0..terms {
            let mono = exact_kernel::Mono(
                (0..vars.len()).map(|_| rng.gen_range(0..=max_deg)).collect(),
            );
            let c = num_bigint::BigInt::from(rng.gen_range(-4i64..=4));
            t.push((mono, c));
        }
        let p = Poly::from_terms(vars, t);
        if !p.is_zero() {
            return p;
        }
    }
}

#[test]
fn gcd_respects_common_factor() {
    let vars = Vars::new(vec!["x", "y"]);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..40 {
        let p = random_poly(&mut rng, &vars, 2, 3);
        let q = random_poly(&mut rng, &vars, 2, 3);
        let r = random_poly(&mut rng, &vars, 2, 2);
        let g1 = poly_gcd(&p.mul(&r), &q.mul(&r));
        let g2 = poly_gcd(&p, &q).mul(&r).primitive_positive().1;
        // g1 = r * gcd(p, q) up to constant; both sides are primitive positive.
        assert!(g1.divisible_by(&g2) && g2.divisible_by(&g1), "p={} q={} r={}", p, q, r);
    }
}

#[test]
fn basis_reconstruction_roundtrip() {
    let vars = Vars::new(vec!["x", "y", "z"]);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..25 {
        let gens: Vec<Poly> = (0..3).map(|_| random_poly(&mut rng, &vars, 1, 2)).collect();
        let basis = match gcd_free_basis(&vars, &gens) {
            Ok(b) => b,
            Err(_) => continue,
        };
        if basis.is_empty() {
            continue;
        }
        // Random words over the basis factor back to themselves.
        let mut num = Poly::one(&vars);
        let mut den = Poly::one(&vars);
        let mut expected: Vec<(u32, i32)> = Vec::new();
        for (i, b) in basis.elements.iter().enumerate() {
            let e = rng.gen_range(-2i32..=2);
            if e > 0 {
                num = num.mul(&b.pow(e as u32));
            } else if e < 0 {
                den = den.mul(&b.pow((-e) as u32));
            }
            if e != 0 {
                expected.push((i as u32, e));
            }
        }
        let f = RationalFunction::normalize(num, den).unwrap();
        let w = basis.factor(&f).unwrap();
        assert_eq!(w.exps.to_vec(), expected);
    }
}

#[test]
fn specialize_is_ring_homomorphism() {
    let vars = Vars::new(vec!["x", "y"]);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let f = RationalFunction::normalize(
            random_poly(&mut rng, &vars, 2, 3),
            random_poly(&mut rng, &vars, 2, 2),
        )
        .unwrap();
        let g = RationalFunction::normalize(
            random_poly(&mut rng, &vars, 2, 3),
            random_poly(&mut rng, &vars, 2, 2),
        )
        .unwrap();
        let pt: Vec<BigRational> = (0..2)
            .map(|_| BigRational::new(rng.gen_range(1i64..12).into(), rng.gen_range(1i64..7).into()))
            .collect();
        let (fv, gv) = match (f.eval(&pt), g.eval(&pt)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue,
        };
        let prod = f.mul(&g);
        match prod.eval(&pt) {
            Ok(pv) => assert_eq!(pv, &fv * &gv),
            Err(_) => {} // cancellation can remove a pole; nothing to check then
        }
        let sum = f.add(&g);
        if let Ok(sv) = sum.eval(&pt) {
            assert_eq!(sv, &fv + &gv);
        }
    }
}

#[test]
fn normalization_idempotent() {
    let vars = Vars::new(vec!["x", "y"]);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let f = RationalFunction::normalize(
            random_poly(&mut rng, &vars, 2, 3),
            random_poly(&mut rng, &vars, 2, 2),
        )
        .unwrap();
        let again = RationalFunction::normalize(f.num.clone(), f.den.clone()).unwrap();
        assert_eq!(again.num, f.num);
        assert_eq!(again.den, f.den);
        assert!(again.c.is_one() || f.num.is_one());
    }
}
