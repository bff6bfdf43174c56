//! Projectors: the shuffle-killing ρ and the order-8 δ₂,₂ antisymmetrization.

use crate::symbol::SymbolError;
use crate::tensor::{TensorKey, TensorSum};
use exact_kernel::Rat;
use smallvec::SmallVec;

/// Signed slot permutations of ρ at a given weight:
/// `ρ(a) = a`, `ρ(a1⊗...⊗an) = ρ(a1⊗...⊗a_{n-1})⊗an − ρ(a2⊗...⊗an)⊗a1`.
pub fn rho_patterns(weight: usize) -> Vec<(Vec<u8>, i64)> {
    assert!(weight >= 1);
    if weight == 1 {
        return vec![(vec![0], 1)];
    }
    let prev = rho_patterns(weight - 1);
    let mut out = Vec::with_capacity(prev.len() * 2);
    for (p, s) in &prev {
        // ρ(a1..a_{n-1}) ⊗ an: indices 0..n-2 permuted by p, then n-1.
        let mut q: Vec<u8> = p.clone();
        q.push(weight as u8 - 1);
        out.push((q, *s));
        // ρ(a2..an) ⊗ a1: p acts on indices 1..n-1, then 0 appended, sign flipped.
        let mut r: Vec<u8> = p.iter().map(|&i| i + 1).collect();
        r.push(0);
        out.push((r, -s));
    }
    out
}

/// Signed slot permutations of the order-8 group generated by swapping slots
/// (1 2), slots (3 4), and the block swap (1 2)(3 4) -> (3 4)(1 2), each with
/// sign -1.
pub fn delta22_patterns() -> Vec<(Vec<u8>, i64)> {
    let generators: Vec<(Vec<u8>, i64)> = vec![
        (vec![1, 0, 2, 3], -1),
        (vec![0, 1, 3, 2], -1),
        (vec![2, 3, 0, 1], -1),
    ];
    let mut elems: Vec<(Vec<u8>, i64)> = vec![(vec![0, 1, 2, 3], 1)];
    loop {
        let mut added = false;
        let snapshot = elems.clone();
        for (p, s) in &snapshot {
            for (g, t) in &generators {
                // compose: (p ∘ g)[i] = p[g[i]]
                let q: Vec<u8> = g.iter().map(|&i| p[i as usize]).collect();
                let sign = s * t;
                match elems.iter().find(|(e, _)| *e == q) {
                    Some((_, existing)) => {
                        assert_eq!(*existing, sign, "sign character inconsistent");
                    }
                    None => {
                        elems.push((q, sign));
                        added = true;
                    }
                }
            }
        }
        if !added {
            break;
        }
    }
    assert_eq!(elems.len(), 8, "antisymmetrization group has order 8");
    elems.sort();
    elems
}

fn apply_patterns(t: &TensorSum, patterns: &[(Vec<u8>, i64)]) -> TensorSum {
    let mut out = TensorSum::zero(t.weight, t.basis.clone());
    for (k, &c) in &t.terms {
        for (p, s) in patterns {
            let key: TensorKey = p.iter().map(|&i| k[i as usize]).collect::<SmallVec<_>>();
            out.insert(key, c * Rat::int(*s));
        }
    }
    out
}

/// ρ projector; vanishes exactly on Q-spans of shuffle products, which is the
/// operational test for equality modulo products.
pub fn rho_project(t: &TensorSum) -> TensorSum {
    if t.weight == 0 || t.is_zero() {
        return TensorSum::zero(t.weight, t.basis.clone());
    }
    apply_patterns(t, &rho_patterns(t.weight))
}

/// Order-8 signed antisymmetrization on weight-4 tensors; kills shuffle
/// products and depth-1 symbols, the operational test for equality modulo
/// products and lower depth.
pub fn delta22_antisymmetrize(t: &TensorSum) -> Result<TensorSum, SymbolError> {
    if t.weight != 4 {
        return Err(SymbolError::WrongWeight { expected: 4, got: t.weight });
    }
    Ok(apply_patterns(t, &delta22_patterns()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::shuffle;

    fn single(weight: usize, key: &[u32]) -> TensorSum {
        let mut t = TensorSum::zero(weight, None);
        t.insert(key.iter().copied().collect(), Rat::ONE);
        t
    }

    #[test]
    fn rho_weight2_antisymmetrizes() {
        // ρ(a⊗b) = a⊗b − b⊗a
        let t = single(2, &[0, 1]);
        let r = rho_project(&t);
        assert_eq!(r.terms[&TensorKey::from_slice(&[0, 1])], Rat::ONE);
        assert_eq!(r.terms[&TensorKey::from_slice(&[1, 0])], Rat::int(-1));
    }

    #[test]
    fn rho_kills_shuffles() {
        for (wa, wb) in [(1usize, 1usize), (1, 2), (1, 3), (2, 2)] {
            let a = single(wa, &(0..wa as u32).collect::<Vec<_>>());
            let b = single(wb, &(10..10 + wb as u32).collect::<Vec<_>>());
            let s = shuffle(&a, &b);
            assert!(rho_project(&s).is_zero(), "weights ({},{})", wa, wb);
        }
    }

    #[test]
    fn delta22_group_has_order_8() {
        let pats = delta22_patterns();
        assert_eq!(pats.len(), 8);
        assert_eq!(pats.iter().map(|(_, s)| s).sum::<i64>(), 0);
    }

    #[test]
    fn delta22_kills_li4_shape() {
        // Any tensor with equal slots 3 and 4 dies under the (3 4) swap.
        let t = single(4, &[0, 1, 2, 2]);
        assert!(delta22_antisymmetrize(&t).unwrap().is_zero());
    }

    #[test]
    fn delta22_kills_shuffles() {
        let a = single(2, &[0, 1]);
        let b = single(2, &[2, 3]);
        let s = shuffle(&a, &b);
        assert!(delta22_antisymmetrize(&s).unwrap().is_zero());
        let c = single(1, &[4]);
        let d = single(3, &[5, 6, 7]);
        assert!(delta22_antisymmetrize(&shuffle(&c, &d)).unwrap().is_zero());
    }

    #[test]
    fn delta22_sign_equivariance() {
        let t = single(4, &[0, 1, 2, 3]);
        let d = delta22_antisymmetrize(&t).unwrap();
        for (p, s) in delta22_patterns() {
            let mut moved = TensorSum::zero(4, None);
            for (k, &c) in &t.terms {
                let key: TensorKey = p.iter().map(|&i| k[i as usize]).collect();
                moved.insert(key, c);
            }
            let dm = delta22_antisymmetrize(&moved).unwrap();
            let mut expect = d.clone();
            expect.scale(Rat::int(s));
            assert_eq!(dm, expect);
        }
    }

    #[test]
    fn wrong_weight_rejected() {
        let t = single(3, &[0, 1, 2]);
        assert!(matches!(
            delta22_antisymmetrize(&t),
            Err(SymbolError::WrongWeight { expected: 4, got: 3 })
        ));
    }
}
