//! Randomized property suites, callable from tests and the acceptance run.

use crate::project::{delta22_antisymmetrize, rho_project};
use crate::symbol::{symbol_mpl, symbol_mpl_values, PrimeDomain, SymbolicDomain};
use crate::tensor::{shuffle, TensorSum};
use crate::{AtomKind, MplAtom};
use exact_kernel::{gcd_free_basis, BigRational, Poly, Rat, RationalFunction, Vars};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallvec::SmallVec;

fn random_tensor(rng: &mut ChaCha8Rng, weight: usize, terms: usize) -> TensorSum {
    let mut t = TensorSum::zero(weight, None);
    for _ in 0..terms {
        let key: SmallVec<[u32; 4]> = (0..weight).map(|_| rng.gen_range(0..12u32)).collect();
        t.insert(key, Rat::int(rng.gen_range(-4i64..=4)));
    }
    t
}

/// ρ of a shuffle of nonempty tensors vanishes.
pub fn rho_kills_random_shuffles(cases: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let splits = [(1usize, 1usize), (1, 2), (1, 3), (2, 2)];
    for i in 0..cases {
        let (wa, wb) = splits[i % splits.len()];
        let a = random_tensor(&mut rng, wa, 1 + i % 3);
        let b = random_tensor(&mut rng, wb, 1 + (i / 2) % 3);
        let s = shuffle(&a, &b);
        assert!(
            rho_project(&s).is_zero(),
            "rho failed to kill a ({},{}) shuffle",
            wa,
            wb
        );
    }
}

/// delta22 of weight-4 shuffle products vanishes.
pub fn delta22_kills_random_products(cases: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let splits = [(1usize, 3usize), (2, 2)];
    for i in 0..cases {
        let (wa, wb) = splits[i % splits.len()];
        let a = random_tensor(&mut rng, wa, 1 + i % 3);
        let b = random_tensor(&mut rng, wb, 1 + (i / 3) % 3);
        let s = shuffle(&a, &b);
        assert!(
            delta22_antisymmetrize(&s).unwrap().is_zero(),
            "delta22 failed to kill a ({},{}) product",
            wa,
            wb
        );
    }
}

fn random_ratfun(rng: &mut ChaCha8Rng, vars: &std::sync::Arc<Vars>) -> RationalFunction {
    let x = RationalFunction::var(vars, 0);
    let y = RationalFunction::var(vars, 1);
    let one = RationalFunction::int(vars, 1);
    let omx = one.sub(&x);
    let omy = one.sub(&y);
    let omxy = one.sub(&x.mul(&y));
    let basis = [x, y, omx, omy, omxy];
    loop {
        let mut f = RationalFunction::int(vars, if rng.gen_bool(0.5) { 1 } else { -1 });
        for b in &basis {
            let e = rng.gen_range(-1i32..=1);
            if e != 0 {
                f = f.mul(&b.pow(e).expect("nonzero"));
            }
        }
        if !f.is_constant() {
            return f;
        }
    }
}

/// delta22 of a tetralogarithm symbol vanishes (slots three and four agree).
pub fn delta22_kills_random_li4(cases: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = Vars::new(vec!["x", "y"]);
    for _ in 0..cases {
        let f = random_ratfun(&mut rng, &vars);
        let atom = MplAtom::li(vec![4], vec![f]);
        let polys: Vec<Poly> = crate::symbol::slot_polynomials(&atom).unwrap();
        let basis = gcd_free_basis(&vars, &polys).unwrap();
        let mut dom = SymbolicDomain::new(basis);
        let s = symbol_mpl(&mut dom, &atom).unwrap();
        assert!(delta22_antisymmetrize(&s).unwrap().is_zero());
    }
}

/// Specializing the variables commutes with taking the symbol: the symbolic
/// tensor pushed through a rational point equals the prime-alphabet tensor of
/// the specialized atom.
pub fn specialization_commutes(cases: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = Vars::new(vec!["x", "y"]);
    let mut done = 0;
    let mut attempts = 0;
    while done < cases {
        attempts += 1;
        assert!(attempts < cases * 20, "too many degenerate samples");
        let depth = 1 + rng.gen_range(0..2usize);
        let (kind, indices) = if depth == 1 {
            (AtomKind::Li, vec![4u32])
        } else if rng.gen_bool(0.5) {
            (AtomKind::I, vec![rng.gen_range(1..=3u32), 1])
        } else {
            (AtomKind::Li, vec![2, 1])
        };
        let indices = if indices.iter().map(|&k| k as usize).sum::<usize>() > 4 {
            vec![2, 2]
        } else {
            indices
        };
        let args: Vec<RationalFunction> =
            (0..indices.len()).map(|_| random_ratfun(&mut rng, &vars)).collect();
        let atom = MplAtom::new(kind, indices.clone(), args.clone());
        let pt: Vec<BigRational> = (0..2)
            .map(|_| BigRational::new(rng.gen_range(2i64..40).into(), rng.gen_range(1i64..7).into()))
            .collect();
        let vals: Vec<BigRational> = match args.iter().map(|a| a.eval(&pt)).collect() {
            Ok(v) => v,
            Err(_) => continue,
        };
        let polys = match crate::symbol::slot_polynomials(&atom) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let basis = gcd_free_basis(&vars, &polys).unwrap();
        let mut dom = SymbolicDomain::new(basis.clone());
        let symbolic = match symbol_mpl(&mut dom, &atom) {
            Ok(s) => s,
            Err(_) => continue,
        };
        let mut pdom = PrimeDomain::new();
        let direct = match symbol_mpl_values(&mut pdom, kind, &indices, &vals) {
            Ok(s) => s,
            Err(_) => continue,
        };
        // map the symbolic tensor through the point
        let mut words: Vec<SmallVec<[(u32, i32); 4]>> = Vec::with_capacity(basis.len());
        let mut degenerate = false;
        for p in &basis.elements {
            let v = p.eval(&pt);
            if num_traits::Zero::is_zero(&v) {
                degenerate = true;
                break;
            }
            match pdom.word_of(&v) {
                Ok(w) => words.push(w),
                Err(_) => {
                    degenerate = true;
                    break;
                }
            }
        }
        if degenerate {
            continue;
        }
        let mut mapped = TensorSum::zero(symbolic.weight, None);
        for (k, &c) in &symbolic.terms {
            let mut stack: Vec<(SmallVec<[u32; 4]>, Rat)> = vec![(SmallVec::new(), c)];
            for &slot in k.iter() {
                let w = &words[slot as usize];
                let mut next = Vec::with_capacity(stack.len() * w.len());
                for (key, coeff) in &stack {
                    for &(idx, e) in w.iter() {
                        let mut kk = key.clone();
                        kk.push(idx);
                        next.push((kk, *coeff * Rat::int(e as i64)));
                    }
                }
                stack = next;
            }
            for (key, coeff) in stack {
                mapped.insert(key, coeff);
            }
        }
        assert_eq!(mapped, direct, "specialization does not commute for {}", atom);
        done += 1;
    }
}
