//! Iterated integrals I(0; a1..an; 1) by Taylor-series continuation along a
//! piecewise-linear path.
//!
//! The chain F_0 = 1, F_k' (t) = F_{k-1}(t)/(t - a_k) is propagated as
//! truncated Taylor series from center to center; each step stays within half
//! the distance to the nearest letter, so the series converge geometrically.
//! Letters inside (0,1) force a detour below or above the real axis — the two
//! choices are the two branches of the integral.

use crate::complex::C;
use crate::real::R;
use num_bigint::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathSide {
    Direct,
    Below,
    Above,
}

/// Evaluate I(0; letters; 1). The first letter must differ from 0 and the
/// last from 1 (otherwise the integral diverges).
pub fn eval_iterated(letters: &[C], side: PathSide, bits: u32) -> C {
    let n = letters.len();
    assert!(n >= 1);
    assert!(!letters[0].is_zero(), "divergent: first letter = base point");
    assert!(*letters.last().unwrap() != C::from_i64(1, bits), "divergent: last letter = endpoint");

    let terms = (bits as usize) + 24;

    // Waypoints: direct unless a letter sits on (0, 1).
    let zero = C::from_i64(0, bits);
    let one = C::from_i64(1, bits);
    let needs_detour = letters.iter().any(|a| {
        a.im.is_zero() && a.re.m.sign() != num_bigint::Sign::Minus && a.re.m < one.re.m && !a.is_zero()
    });
    let mut waypoints = vec![zero.clone()];
    if needs_detour || side != PathSide::Direct {
        let h = match side {
            PathSide::Below => R::from_ratio(&BigInt::from(-1), &BigInt::from(2), bits),
            _ => R::from_ratio(&BigInt::from(1), &BigInt::from(2), bits),
        };
        waypoints.push(C::new(R::from_ratio(&BigInt::from(3), &BigInt::from(10), bits), h.clone()));
        waypoints.push(C::new(R::from_ratio(&BigInt::from(7), &BigInt::from(10), bits), h));
    }
    waypoints.push(one);

    // Taylor coefficients of F_0..F_n at the current center.
    let mut center = waypoints[0].clone();
    let mut series: Vec<Vec<C>> = Vec::with_capacity(n + 1);
    series.push(unit_series(terms, bits));
    for k in 1..=n {
        let prev = series[k - 1].clone();
        let b0 = C::zero(bits); // F_k(0) = 0
        series.push(antiderivative_over_linear(&prev, &b0, &center, &letters[k - 1], terms));
    }

    for target in waypoints.iter().skip(1) {
        loop {
            let to_go = target.sub(&center);
            if to_go.is_zero() {
                break;
            }
            // Radius: distance to the nearest pole (letters, and 0 for the
            // inner integrands). A pole exactly at the center is removable
            // there — the delta = 0 recurrence handles it — so it does not
            // constrain the radius.
            let mut r2_min: Option<R> = None;
            let mut consider = |p: &C| {
                let d2 = center.sub(p).abs2();
                if d2.is_zero() {
                    return;
                }
                r2_min = Some(match &r2_min {
                    None => d2,
                    Some(cur) => {
                        if d2.cmp_abs(cur) == std::cmp::Ordering::Less {
                            d2
                        } else {
                            cur.clone()
                        }
                    }
                });
            };
            for a in letters {
                consider(a);
            }
            consider(&C::from_i64(0, bits));
            let radius = r2_min.expect("at least one pole away from the center").sqrt();

            let dist = to_go.abs();
            let step_len = if dist.cmp_abs(&radius.shr(1)) == std::cmp::Ordering::Less {
                dist.clone()
            } else {
                radius.shr(1)
            };
            let scale = step_len.div(&dist);
            let h = C::new(to_go.re.mul(&scale), to_go.im.mul(&scale));
            let next = center.add(&h);

            // Evaluate all series at offset h, then rebuild at the new center.
            let values: Vec<C> = series.iter().map(|s| horner(s, &h)).collect();
            let mut new_series: Vec<Vec<C>> = Vec::with_capacity(n + 1);
            new_series.push(unit_series(terms, bits));
            for k in 1..=n {
                let prev = new_series[k - 1].clone();
                new_series.push(antiderivative_over_linear(
                    &prev,
                    &values[k],
                    &next,
                    &letters[k - 1],
                    terms,
                ));
            }
            series = new_series;
            center = next;
        }
    }
    // Value of F_n at the final center (= 1).
    series[n][0].clone()
}

fn unit_series(terms: usize, bits: u32) -> Vec<C> {
    let mut v = vec![C::zero(bits); terms];
    v[0] = C::from_i64(1, bits);
    v
}

fn horner(series: &[C], u: &C) -> C {
    let bits = u.bits();
    let mut acc = C::zero(bits);
    for c in series.iter().rev() {
        acc = acc.mul(u).add(c);
    }
    acc
}

/// Taylor coefficients of F with F'(u) = A(u)/(u + delta), F(0) = b0, where
/// A is the series of the previous function at the same center and
/// delta = center - letter. For delta = 0, A must vanish at 0.
fn antiderivative_over_linear(
    a: &[C],
    b0: &C,
    center: &C,
    letter: &C,
    terms: usize,
) -> Vec<C> {
    let bits = center.bits();
    let delta = center.sub(letter);
    let mut b = vec![C::zero(bits); terms];
    b[0] = b0.clone();
    if delta.is_zero() {
        // u F' = A: j B_j = A_j (A must vanish at the center)
        assert!(
            a[0].mag2() < -(bits as i64) + 8,
            "expansion at a pole with nonvanishing inner value"
        );
        for j in 1..terms {
            b[j] = a[j].div_u64(j as u64);
        }
        return b;
    }
    // (u + delta) F' = A: B_{j+1} = (A_j - j B_j) / (delta (j+1))
    for j in 0..terms - 1 {
        let num = a[j].sub(&b[j].mul_i64(j as i64));
        b[j + 1] = num.div(&delta).div_u64(j as u64 + 1);
    }
    b
}
