//! Truncated nested series for multiple polylogarithms, with a certified
//! geometric tail bound.

use crate::complex::C;
use crate::li::NumError;

/// Li_{a1,..,ad}(z1,..,zd) = sum_{m1 > .. > md > 0} prod z_i^{m_i} / m_i^{a_i}.
///
/// Convergence requires every prefix product |z1 .. zk| <= 1 - eps; the
/// truncation order is chosen so the geometric tail bound drops below
/// 2^-(bits + 8).
pub fn eval_mpl_series(indices: &[u32], args: &[C], eps: f64) -> Result<C, NumError> {
    assert_eq!(indices.len(), args.len());
    assert!(!args.is_empty());
    let bits = args[0].bits();
    let d = args.len();

    // Prefix-product magnitudes.
    let mut prefix = C::from_i64(1, bits);
    let mut rmax: f64 = 0.0;
    for z in args {
        prefix = prefix.mul(z);
        let a = prefix.abs2().to_f64().sqrt();
        rmax = rmax.max(a);
    }
    if !(rmax <= 1.0 - eps) {
        return Err(NumError::OutOfConvergenceDomain);
    }

    // Tail of the nested sum after cutting every index at N is bounded by
    // N^d r^N / (1-r)^d  (each free index contributes a geometric factor).
    let target = -((bits as f64) + 8.0) * std::f64::consts::LN_2;
    let mut n_cut = 32usize;
    loop {
        let log_tail = (d as f64) * (n_cut as f64).ln() + (n_cut as f64) * rmax.ln()
            - (d as f64) * (1.0 - rmax).ln();
        if log_tail < target || n_cut > 1_000_000 {
            break;
        }
        n_cut = n_cut * 3 / 2;
    }

    // Nested partial sums, updated incrementally in k:
    //   T_j(k) = sum_{m_j < k} z_j^{m_j}/m_j^{a_j} * T_{j+1}(m_j),  T_{d+1} = 1.
    let mut partial: Vec<C> = vec![C::zero(bits); d + 1];
    partial[d] = C::from_i64(1, bits); // T_{d+1}
    let mut powers: Vec<C> = args.to_vec(); // z_j^k
    let mut result = C::zero(bits);
    for k in 1..=n_cut as u64 {
        // Outermost contribution: m_1 = k with T_2(k).
        let t2 = if d == 1 { C::from_i64(1, bits) } else { partial[1].clone() };
        let term = powers[0].div_u64(pow_u(k, indices[0]));
        result = result.add(&term.mul(&t2));
        // Update the inner partial sums (ascending j keeps old T_{j+1}).
        for j in 1..d {
            let inner = if j + 1 < d { partial[j + 1].clone() } else { partial[d].clone() };
            let tj = powers[j].div_u64(pow_u(k, indices[j]));
            partial[j] = partial[j].add(&tj.mul(&inner));
        }
        for (j, p) in powers.iter_mut().enumerate() {
            *p = p.mul(&args[j]);
        }
    }
    Ok(result)
}

fn pow_u(k: u64, a: u32) -> u64 {
    let mut acc = 1u64;
    for _ in 0..a {
        acc = acc.saturating_mul(k);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::li::NumCtx;
    use crate::real::R;
    use num_bigint::BigInt;

    const B: u32 = 224;

    fn cq(n: i64, d: i64) -> C {
        C::real(R::from_ratio(&BigInt::from(n), &BigInt::from(d), B))
    }

    #[test]
    fn depth_one_matches_li() {
        let ctx = NumCtx::new(B);
        let z = cq(2, 5);
        let a = eval_mpl_series(&[3], &[z.clone()], 0.05).unwrap();
        let b = ctx.li(3, &z).unwrap();
        assert!(a.sub(&b).mag2() < -(B as i64) + 24);
    }

    #[test]
    fn li1_closed_form_at_half() {
        let v = eval_mpl_series(&[1], &[cq(1, 2)], 0.05).unwrap();
        assert!((v.re.to_f64() - std::f64::consts::LN_2).abs() < 1e-20);
    }

    #[test]
    fn stuffle_relation_numerically() {
        // Li11(x,y) + Li11(y,x) + Li2(xy) = Li1(x) Li1(y) at (0.3, 0.2)
        let ctx = NumCtx::new(B);
        let x = cq(3, 10);
        let y = cq(1, 5);
        let a = eval_mpl_series(&[1, 1], &[x.clone(), y.clone()], 0.05).unwrap();
        let b = eval_mpl_series(&[1, 1], &[y.clone(), x.clone()], 0.05).unwrap();
        let c = ctx.li(2, &x.mul(&y)).unwrap();
        let rhs = ctx.li(1, &x).unwrap().mul(&ctx.li(1, &y).unwrap());
        let residual = a.add(&b).add(&c).sub(&rhs);
        assert!(residual.mag2() < -(B as i64) + 32, "residual {:?}", residual.to_f64s());
    }

    #[test]
    fn divergent_domain_rejected() {
        let r = eval_mpl_series(&[1, 1], &[cq(3, 2), cq(1, 2)], 0.05);
        assert_eq!(r, Err(NumError::OutOfConvergenceDomain));
    }
}
