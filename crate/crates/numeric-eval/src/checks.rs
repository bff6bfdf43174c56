//! Numeric verification suites.

use crate::complex::C;
use crate::field::rf_eval_c;
use crate::ieval::{eval_iterated, PathSide};
use crate::li::{sv, CutSide, NumCtx};
use crate::real::{pi, R};
use expr_dsl::{for_each_value_term, Bindings, DslError, PointVal, ValueAtom};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn digits_to_bits(digits: u32) -> u32 {
    (digits as f64 * 3.33).ceil() as u32 + 64
}

fn rq(n: i64, d: i64, bits: u32) -> R {
    R::from_ratio(&BigInt::from(n), &BigInt::from(d), bits)
}

fn cq(n: i64, d: i64, bits: u32) -> C {
    C::real(rq(n, d, bits))
}

/// Branch and slice-sign conventions for the explicit depth-2 identity,
/// calibrated once (see the ignored `calibrate_x333` test) and frozen.
#[derive(Debug, Clone, Copy)]
pub struct X333Combo {
    pub path: PathSide,
    pub cut: CutSide,
    pub s1: i64,
    pub s2: i64,
    pub s3: i64,
}

pub const X333_FROZEN: X333Combo =
    X333Combo { path: PathSide::Below, cut: CutSide::Above, s1: 1, s2: 1, s3: 1 };

fn x333_total(x: (i64, i64), y: (i64, i64), bits: u32, combo: X333Combo) -> C {
    let ctx = NumCtx::with_cut(bits, combo.cut);
    let zero = C::zero(bits);
    let xe = cq(x.0, x.1, bits);
    let ye = cq(y.0, y.1, bits);
    let one = C::from_i64(1, bits);

    // I31(x, y): word (x, 0, 0, y); poles inside (0,1) -> deformed path.
    let i31_xy = eval_iterated(
        &[xe.clone(), zero.clone(), zero.clone(), ye.clone()],
        combo.path,
        bits,
    );
    // I31(1/x, 1/y): poles beyond 1 -> direct path.
    let i31_inv = eval_iterated(
        &[xe.recip(), zero.clone(), zero.clone(), ye.recip()],
        PathSide::Direct,
        bits,
    );

    let li = |n: u32, z: &C| ctx.li(n, z).expect("argument admissible");
    let x_over_y = xe.div(&ye);
    let ln_x = xe.ln();
    let ln_y = ye.ln();
    let ln_omy = one.sub(&ye).ln();
    let ln_xoy = x_over_y.ln();

    // E: the combination whose full symbol vanishes (the mechanically solved
    // product completion; see the exact-symbol corpus entry).
    let _ = &ln_xoy;
    let mut e = i31_xy.sub(&i31_inv);
    e = e.sub(&li(4, &xe)).add(&li(4, &ye)).sub(&li(4, &x_over_y).mul_i64(3));
    // + lnx Li3(x/y) - lny Li3(x/y) - lnx Li3(y)
    e = e.add(&ln_x.mul(&li(3, &x_over_y)));
    e = e.sub(&ln_y.mul(&li(3, &x_over_y)));
    e = e.sub(&ln_x.mul(&li(3, &ye)));
    // + 1/2 Li2(1-y) ln^2 x + Li2(y) ln^2 x
    let ln_x2 = ln_x.mul(&ln_x);
    e = e.add(&li(2, &one.sub(&ye)).mul(&ln_x2).div_u64(2));
    e = e.add(&li(2, &ye).mul(&ln_x2));
    // + 1/6 ln^3 x ln(1-y) + 1/2 ln^2 x ln(1-y) ln y
    e = e.add(&ln_x2.mul(&ln_x).mul(&ln_omy).div_u64(6));
    e = e.add(&ln_x2.mul(&ln_omy).mul(&ln_y).div_u64(2));
    // - 1/6 ln^3 x ln y + 1/4 ln^2 x ln^2 y - 1/6 ln x ln^3 y + 1/24 ln^4 y
    let ln_y2 = ln_y.mul(&ln_y);
    e = e.sub(&ln_x2.mul(&ln_x).mul(&ln_y).div_u64(6));
    e = e.add(&ln_x2.mul(&ln_y2).div_u64(4));
    e = e.sub(&ln_x.mul(&ln_y2).mul(&ln_y).div_u64(6));
    e = e.add(&ln_y2.mul(&ln_y2).div_u64(24));

    // i*pi slice: i pi (ln^3 x/6 - ln^2 x ln(1-y)/2 - ln x Li2(y) + Li3(y)).
    let sigma1 = ln_x2
        .mul(&ln_x)
        .div_u64(6)
        .sub(&ln_x2.mul(&ln_omy).div_u64(2))
        .sub(&ln_x.mul(&li(2, &ye)))
        .add(&li(3, &ye));
    let ipi = C::new(R::zero(bits), pi(bits));
    let sigma1 = ipi.mul(&sigma1);

    // pi^2 slice for this completion (re-derived; it differs from the printed
    // one only in the ln^2 x coefficient, 1/4 instead of 5/12):
    // pi^2 (1/4 ln^2 x - 1/3 ln x ln y - 1/3 ln x ln(1-y) + 1/6 ln^2 y - 1/3 Li2(y)).
    let mut sigma2 = ln_x2.mul_i64(3);
    sigma2 = sigma2.sub(&ln_x.mul(&ln_y).mul_i64(4));
    sigma2 = sigma2.sub(&ln_x.mul(&ln_omy).mul_i64(4));
    sigma2 = sigma2.add(&ln_y.mul(&ln_y).mul_i64(2));
    sigma2 = sigma2.sub(&li(2, &ye).mul_i64(4));
    let pi2 = pi(bits).mul(&pi(bits));
    let sigma2 = sigma2.mul_real(&pi2.div_u64(12));

    // constant 4 pi^4 / 45
    let c0 = C::real(pi2.mul(&pi2).mul_i64(4).div_u64(45));

    e.add(&sigma1.mul_i64(combo.s1))
        .add(&sigma2.mul_i64(combo.s2))
        .add(&c0.mul_i64(combo.s3))
}

/// |residual| of the fully explicit identity at rational 0 < y < x < 1.
pub fn x333_residual(x: (i64, i64), y: (i64, i64), bits: u32, combo: X333Combo) -> R {
    x333_total(x, y, bits, combo).abs()
}

/// Residual with the frozen imaginary-slice applied but no pi^2 slice, plus
/// the weight-2 basis values at the point (for slice re-derivation).
pub fn x333_residual_parts(x: (i64, i64), y: (i64, i64), bits: u32) -> (R, Vec<R>) {
    let ctx = NumCtx::with_cut(bits, CutSide::Above);
    let xe = cq(x.0, x.1, bits);
    let ye = cq(y.0, y.1, bits);
    let one = C::from_i64(1, bits);
    let combo = X333Combo { path: PathSide::Below, cut: CutSide::Above, s1: 1, s2: 0, s3: 0 };
    let d = x333_residual_signed(x, y, bits, combo);
    let p2 = pi(bits).mul(&pi(bits));
    let ln_x = crate::real::ln(&xe.abs());
    let ln_y = crate::real::ln(&ye.abs());
    let ln_omy = crate::real::ln(&one.sub(&ye).abs());
    let li2y = ctx.li(2, &ye).unwrap().re;
    let li2x = ctx.li(2, &xe).unwrap().re;
    let basis = vec![
        p2.mul(&ln_x).mul(&ln_x),
        p2.mul(&ln_x).mul(&ln_y),
        p2.mul(&ln_y).mul(&ln_y),
        p2.mul(&ln_x).mul(&ln_omy),
        p2.mul(&ln_y).mul(&ln_omy),
        p2.mul(&ln_omy).mul(&ln_omy),
        p2.mul(&li2y),
        p2.mul(&li2x),
        p2.mul(&p2),
    ];
    (d, basis)
}

/// Signed residual (not absolute value) for slice solving.
fn x333_residual_signed(x: (i64, i64), y: (i64, i64), bits: u32, combo: X333Combo) -> R {
    // identical assembly to x333_residual but returns the real part
    let v = x333_total(x, y, bits, combo);
    v.re
}

/// The identity with the constant dropped: must be ~ 4 pi^4/45.
pub fn x333_residual_without_constant(x: (i64, i64), y: (i64, i64), bits: u32) -> R {
    let mut combo = X333_FROZEN;
    combo.s3 = 0;
    x333_residual(x, y, bits, combo)
}

pub fn check_x333(digits: u32, tol: f64) -> Result<String, String> {
    let bits = digits_to_bits(digits).max(320);
    let points = [((7i64, 10i64), (3i64, 10i64)), ((61, 100), (17, 100))];
    let mut worst: f64 = 0.0;
    for (x, y) in points {
        let r = x333_residual(x, y, bits, X333_FROZEN).to_f64();
        worst = worst.max(r);
        if !(r < tol) {
            return Err(format!("residual {:.3e} at x={}/{} y={}/{}", r, x.0, x.1, y.0, y.1));
        }
    }
    // Dropping the constant leaves ~ 4 pi^4/45.
    let approx = x333_residual_without_constant((7, 10), (3, 10), bits).to_f64();
    let c = 4.0 * std::f64::consts::PI.powi(4) / 45.0;
    if (approx - c).abs() > 1e-6 {
        return Err(format!("without constant residual {} != 4pi^4/45 {}", approx, c));
    }
    Ok(format!("two points pass, worst residual {:.3e}; constant slice = 4pi^4/45", worst))
}

/// Single-valued dilogarithm five-term relation at many random complex points.
pub fn check_p2_five_term(digits: u32, tol: f64, npoints: u32, seed: u64) -> Result<String, String> {
    let bits = digits_to_bits(digits).max(224);
    let ctx = NumCtx::new(bits);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0xf1e7));
    let one = C::from_i64(1, bits);
    let mut worst: f64 = 0.0;
    let mut done = 0;
    let mut attempts = 0;
    while done < npoints {
        attempts += 1;
        if attempts > npoints * 4 {
            return Err("resampling budget exhausted".into());
        }
        let x = C::new(
            rq(rng.gen_range(-700..700), 1000, bits),
            rq(rng.gen_range(-700..700), 1000, bits),
        );
        let y = C::new(
            rq(rng.gen_range(-700..700), 1000, bits),
            rq(rng.gen_range(-700..700), 1000, bits),
        );
        let omxy = one.sub(&x.mul(&y));
        if x.is_zero() || y.is_zero() || omxy.abs2().to_f64() < 1e-3 {
            continue;
        }
        let args = [
            x.clone(),
            y.clone(),
            one.sub(&x).div(&omxy),
            omxy.clone(),
            one.sub(&y).div(&omxy),
        ];
        if args.iter().any(|a| a.is_zero() || *a == one) {
            continue;
        }
        let mut total = R::zero(bits);
        for a in &args {
            total = total.add(&sv(&ctx, 2, a).map_err(|e| format!("{}", e))?);
        }
        let r = total.to_f64().abs();
        worst = worst.max(r);
        if !(r < tol) {
            return Err(format!("five-term residual {:.3e} at point {}", r, done));
        }
        done += 1;
    }
    Ok(format!("{} points pass, worst residual {:.3e}", npoints, worst))
}

fn random_complex_point(rng: &mut ChaCha8Rng, bits: u32) -> C {
    C::new(
        rq(rng.gen_range(-300..300), 160, bits),
        rq(rng.gen_range(-300..300), 160, bits),
    )
}

/// The four-variable single-valued equation: sum of c * P4(argument) over the
/// merged term list vanishes.
pub fn check_cor13(digits: u32, tol: f64, npoints: u32, seed: u64) -> Result<String, String> {
    let bits = digits_to_bits(digits).max(192);
    let ctx = NumCtx::new(bits);
    let terms = corpus::gen::s4::terms_931();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0xc013));
    let mut worst: f64 = 0.0;
    let mut done = 0;
    let mut attempts = 0;
    'points: while done < npoints {
        attempts += 1;
        if attempts > npoints * 6 {
            return Err("resampling budget exhausted".into());
        }
        let pt: Vec<C> = (0..4).map(|_| random_complex_point(&mut rng, bits)).collect();
        let mut total = R::zero(bits);
        for (c, f) in &terms {
            let v = match rf_eval_c(f, &pt) {
                Ok(v) => v,
                Err(_) => continue 'points,
            };
            if v.is_zero() || v == C::from_i64(1, bits) {
                continue 'points;
            }
            let p4 = match sv(&ctx, 4, &v) {
                Ok(p) => p,
                Err(_) => continue 'points,
            };
            let scaled = p4.mul_i64(c.numer()).div_u64(c.denom() as u64);
            total = total.add(&scaled);
        }
        let r = total.to_f64().abs();
        worst = worst.max(r);
        if !(r < tol) {
            return Err(format!("residual {:.3e} at point {}", r, done));
        }
        done += 1;
    }
    Ok(format!("{} complex points pass, worst residual {:.3e}", npoints, worst))
}

/// Evaluate an orbit-family template as sum of c * P4(value); returns the
/// absolute residual at one random point.
fn orbit_family_residual(
    template: &expr_dsl::Template,
    bits: u32,
    rng: &mut ChaCha8Rng,
) -> Result<f64, String> {
    let ctx = NumCtx::new(bits);
    let one = C::from_i64(1, bits);
    'retry: for _ in 0..12 {
        let mut b = Bindings::new(C::zero(bits));
        for v in &template.vars {
            b.bind(v, PointVal::Fin(random_complex_point(rng, bits)));
        }
        let mut total = R::zero(bits);
        let res = for_each_value_term(&template.expr, &b, &mut |c, va| {
            let q = match &va {
                ValueAtom::Mpl { indices, args, .. } if indices.as_slice() == [4] => &args[0],
                _ => {
                    return Err(DslError::Parse {
                        line: 0,
                        col: 0,
                        msg: "orbit family must be Li4-only".into(),
                    })
                }
            };
            if q.is_zero() || *q == one {
                return Err(DslError::DegenerateCrossRatio);
            }
            let p4 = sv(&ctx, 4, q).map_err(|_| DslError::DegenerateCrossRatio)?;
            total = total.add(&p4.mul_i64(c.numer()).div_u64(c.denom() as u64));
            Ok(())
        });
        match res {
            Ok(()) => return Ok(total.to_f64().abs()),
            Err(DslError::DegenerateCrossRatio) | Err(DslError::DivisionByZero) => {
                continue 'retry
            }
            Err(e) => return Err(format!("{}", e)),
        }
    }
    Err("resampling budget exhausted".into())
}

pub fn check_mainthm(digits: u32, tol: f64, seed: u64) -> Result<String, String> {
    let bits = digits_to_bits(digits.min(30)).max(128);
    let t = corpus::gen::orbits::mainthm_template();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x3a17));
    let r = orbit_family_residual(&t, bits, &mut rng)?;
    if r < tol {
        Ok(format!("antisymmetry residual {:.3e}", r))
    } else {
        Err(format!("antisymmetry residual {:.3e} exceeds {:.1e}", r, tol))
    }
}

pub fn check_sigma9(digits: u32, tol: f64, seed: u64) -> Result<String, String> {
    let bits = digits_to_bits(digits.min(30)).max(128);
    let t = corpus::gen::orbits::sigma9_template();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x0919));
    let r = orbit_family_residual(&t, bits, &mut rng)?;
    if r < tol {
        Ok(format!("nine-orbit residual {:.3e}", r))
    } else {
        Err(format!("nine-orbit residual {:.3e} exceeds {:.1e}", r, tol))
    }
}

/// Numeric refinement property: doubling precision does not increase the
/// reported residual beyond the coarse tolerance.
pub fn x333_monotone_refinement() -> Result<(f64, f64), String> {
    let coarse = x333_residual((7, 10), (3, 10), 256, X333_FROZEN).to_f64();
    let fine = x333_residual((7, 10), (3, 10), 512, X333_FROZEN).to_f64();
    if fine <= coarse + 1e-30 {
        Ok((coarse, fine))
    } else {
        Err(format!("refinement increased residual: {} -> {}", coarse, fine))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// One-time calibration sweep for the branch and slice-sign conventions.
    /// Run with: cargo test -p numeric-eval calibrate_x333 -- --ignored --nocapture
    #[test]
    #[ignore]
    fn calibrate_x333() {
        let bits = 320;
        for path in [PathSide::Below, PathSide::Above] {
            for cut in [CutSide::Above, CutSide::Below] {
                for s1 in [1i64, -1] {
                    for s2 in [1i64, -1] {
                        for s3 in [1i64, -1] {
                            let combo = X333Combo { path, cut, s1, s2, s3 };
                            let r = x333_residual((7, 10), (3, 10), bits, combo);
                            println!(
                                "path={:?} cut={:?} s1={} s2={} s3={} -> {:.3e}",
                                path,
                                cut,
                                s1,
                                s2,
                                s3,
                                r.to_f64()
                            );
                        }
                    }
                }
            }
        }
        panic!("calibration sweep (expected to be ignored in normal runs)");
    }

    #[test]
    fn x333_passes_at_both_points() {
        let out = check_x333(50, 1e-30);
        assert!(out.is_ok(), "{:?}", out);
    }

    #[test]
    fn p2_five_term_quick() {
        let out = check_p2_five_term(40, 1e-30, 10, 7);
        assert!(out.is_ok(), "{:?}", out);
    }

    #[test]
    fn monotone_refinement_holds() {
        let (c, f) = x333_monotone_refinement().unwrap();
        assert!(f <= c);
    }
}
