//! Specialized (prime-basis) verification: substitute random distinct
//! rationals, factor every slot value into integer primes, and test tensor
//! vanishing over the prime alphabet.
//!
//! Small entries build the full specialized tensor, which also yields failure
//! witnesses. Orbit families (hundreds of thousands to millions of Li4 terms)
//! instead stream a Schwartz-Zippel fingerprint: each slot position gets an
//! independent random field vector indexed by primes, and the projected tensor
//! is evaluated as a multilinear form; a nonzero tensor evaluates to zero with
//! probability at most 4/p per draw.

use crate::report::{CheckReport, Verdict, Witness};
use corpus::gen::orbits::ORBIT_COEFFS;
use exact_kernel::{BigRational, Rat};
use expr_dsl::{
    for_each_value_term, Bindings, DslError, GroupSpec, Level, PointVal, Template, Term, ValueAtom,
    ValueFactor,
};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symbol_engine::{
    concat, delta22_antisymmetrize, delta22_patterns, rho_patterns, rho_project, shuffle,
    symbol_mpl_values, PrimeDomain, SymbolError, TensorSum,
};

const FIELD_P: u128 = (1u128 << 61) - 1;

fn mulp(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % FIELD_P) as u64
}

fn addp(a: u64, b: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % FIELD_P) as u64
}

fn powp(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulp(acc, b);
        }
        b = mulp(b, b);
        e >>= 1;
    }
    acc
}

fn invp(a: u64) -> u64 {
    powp(a, (FIELD_P - 2) as u64)
}

fn rat_to_field(c: Rat) -> u64 {
    let n = c.numer();
    let d = c.denom() as u64;
    let nf = if n >= 0 {
        (n as u64) % (FIELD_P as u64)
    } else {
        (FIELD_P as u64) - (((-n) as u64) % (FIELD_P as u64))
    };
    mulp(nf, invp(d % (FIELD_P as u64)))
}

/// Sample distinct small integers for the template variables.
fn sample_point(vars: &[String], rng: &mut ChaCha8Rng) -> Bindings<BigRational> {
    let mut pool: Vec<i64> = (2..=97).collect();
    pool.shuffle(rng);
    let mut b = Bindings::new(BigRational::zero());
    for (i, v) in vars.iter().enumerate() {
        b.bind(v, PointVal::Fin(BigRational::from_integer(pool[i].into())));
    }
    b
}

fn is_orbit_heavy(t: &Template) -> bool {
    t.expr.terms.iter().any(|(_, term)| {
        matches!(term, Term::Orbit { group: GroupSpec::Sym(n), .. } if *n >= 5)
    }) || t.expr.terms.len() > 600
}

enum TrialOutcome {
    Zero,
    NonZero { residual_terms: usize, witnesses: Vec<Witness> },
    Degenerate,
}

/// Full specialized tensor for a small template.
fn trial_full(
    t: &Template,
    level: Level,
    b: &Bindings<BigRational>,
) -> Result<TrialOutcome, String> {
    let mut dom = PrimeDomain::new();
    let mut total = TensorSum::zero(0, None);
    let mut weight_set = false;
    let result = for_each_value_term(&t.expr, b, &mut |c, va| {
        let s = match value_atom_symbol(&mut dom, &va) {
            Ok(s) => s,
            Err(SymbolError::DegenerateSpecialization) | Err(SymbolError::Divergent) => {
                return Err(DslError::DegenerateCrossRatio)
            }
            Err(SymbolError::FactorOverflow) => return Err(DslError::DegenerateCrossRatio),
            Err(e) => return Err(DslError::Parse { line: 0, col: 0, msg: format!("{}", e) }),
        };
        if !weight_set {
            total = TensorSum::zero(s.weight, None);
            weight_set = true;
        }
        total.add_scaled(&s, c);
        Ok(())
    });
    match result {
        Ok(()) => {}
        Err(DslError::DegenerateCrossRatio) | Err(DslError::DivisionByZero) => {
            return Ok(TrialOutcome::Degenerate)
        }
        Err(e) => return Err(format!("{}", e)),
    }
    let residual = match level {
        Level::Exact => total,
        Level::ModProducts => rho_project(&total),
        Level::Delta22 => delta22_antisymmetrize(&total).map_err(|e| format!("{}", e))?,
        Level::Numeric => return Err("numeric level in specialized route".into()),
    };
    if residual.is_zero() {
        Ok(TrialOutcome::Zero)
    } else {
        let witnesses = residual
            .witnesses(10)
            .into_iter()
            .map(|(key, c)| Witness {
                coeff: format!("{}", c),
                slots: key.iter().map(|&i| format!("{}", dom.table.primes[i as usize])).collect(),
            })
            .collect();
        Ok(TrialOutcome::NonZero { residual_terms: residual.term_count(), witnesses })
    }
}

fn value_atom_symbol(
    dom: &mut PrimeDomain,
    va: &ValueAtom<BigRational>,
) -> Result<TensorSum, SymbolError> {
    match va {
        ValueAtom::Mpl { kind, indices, args } => symbol_mpl_values(dom, *kind, indices, args),
        ValueAtom::Prod(fs) => {
            let mut acc = TensorSum::unit(None);
            for f in fs {
                acc = shuffle(&acc, &value_factor_symbol(dom, f)?);
            }
            Ok(acc)
        }
        ValueAtom::Tens(fs) => {
            let mut acc = TensorSum::unit(None);
            for f in fs {
                acc = concat(&acc, &value_factor_symbol(dom, f)?);
            }
            Ok(acc)
        }
    }
}

fn value_factor_symbol(
    dom: &mut PrimeDomain,
    f: &ValueFactor<BigRational>,
) -> Result<TensorSum, SymbolError> {
    match f {
        ValueFactor::Mpl { kind, indices, args } => symbol_mpl_values(dom, *kind, indices, args),
        ValueFactor::Log(v) => {
            let w = dom.word_of(v)?;
            let mut t = TensorSum::zero(1, None);
            for (idx, e) in w {
                t.insert(smallvec::smallvec![idx], Rat::int(e as i64));
            }
            Ok(t)
        }
    }
}

/// Streaming fingerprint for Li4-only orbit families.
///
/// Every atom contributes `coeff * (1-q) ⊗ q ⊗ q ⊗ q` after the Li -> I
/// conversion sign; the projector patterns are applied per atom against
/// position-indexed random vectors.
fn trial_fingerprint(
    t: &Template,
    level: Level,
    b: &Bindings<BigRational>,
    seed: u64,
    draws: usize,
) -> Result<TrialOutcome, String> {
    let patterns: Vec<(Vec<u8>, i64)> = match level {
        Level::ModProducts => rho_patterns(4),
        Level::Delta22 => delta22_patterns(),
        _ => return Err("fingerprint route needs a projector level".into()),
    };
    let mut dom = PrimeDomain::new();
    // r[draw][pos][prime]
    let mut rvecs: Vec<[Vec<u64>; 4]> = (0..draws)
        .map(|_| [Vec::new(), Vec::new(), Vec::new(), Vec::new()])
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5a5a_1234);
    let mut acc = vec![0u64; draws];

    let mut ensure_rvals = |rvecs: &mut Vec<[Vec<u64>; 4]>, rng: &mut ChaCha8Rng, n: usize| {
        for dv in rvecs.iter_mut() {
            for pos in dv.iter_mut() {
                while pos.len() < n {
                    pos.push(rng.gen_range(1..(FIELD_P as u64)));
                }
            }
        }
    };

    let word_val = |w: &[(u32, i32)], r: &[u64]| -> u64 {
        let mut acc = 0u64;
        for &(idx, e) in w {
            let mag = mulp(r[idx as usize], (e.unsigned_abs() as u64) % (FIELD_P as u64));
            if e >= 0 {
                acc = addp(acc, mag);
            } else {
                acc = addp(acc, (FIELD_P as u64) - mag);
            }
        }
        acc
    };

    let one = BigRational::one();
    let result = for_each_value_term(&t.expr, b, &mut |c, va| {
        let (q, conv_sign) = match &va {
            ValueAtom::Mpl { kind, indices, args }
                if indices.as_slice() == [4] && args.len() == 1 =>
            {
                let sign = match kind {
                    symbol_engine::AtomKind::Li => -1i64,
                    symbol_engine::AtomKind::I => {
                        return Err(DslError::Parse {
                            line: 0,
                            col: 0,
                            msg: "fingerprint route expects Li4 atoms".into(),
                        })
                    }
                };
                (args[0].clone(), sign)
            }
            _ => {
                return Err(DslError::Parse {
                    line: 0,
                    col: 0,
                    msg: "fingerprint route expects Li4 atoms".into(),
                })
            }
        };
        // S(Li4(q)) = -(1-q) ⊗ q ⊗ q ⊗ q; conv_sign carries the (-1)^d.
        if q.is_zero() || q == one {
            return Err(DslError::DegenerateCrossRatio);
        }
        let omq = &one - &q;
        let wq = dom.word_of(&q).map_err(|_| DslError::DegenerateCrossRatio)?;
        let womq = dom.word_of(&omq).map_err(|_| DslError::DegenerateCrossRatio)?;
        ensure_rvals(&mut rvecs, &mut rng, dom.table.len());
        let coeff = mulp(
            rat_to_field(c),
            if conv_sign < 0 { (FIELD_P as u64) - 1 } else { 1 },
        );
        for (d, rv) in rvecs.iter().enumerate() {
            // slot value matrix: m[pos][0] = (1-q) at pos, m[pos][1] = q at pos
            let mut m = [[0u64; 2]; 4];
            for pos in 0..4 {
                m[pos][0] = word_val(&womq, &rv[pos]);
                m[pos][1] = word_val(&wq, &rv[pos]);
            }
            let mut contrib = 0u64;
            for (perm, sgn) in &patterns {
                let mut prod = coeff;
                for (pos, &slot) in perm.iter().enumerate() {
                    let col = if slot == 0 { 0 } else { 1 };
                    prod = mulp(prod, m[pos][col]);
                }
                if *sgn >= 0 {
                    contrib = addp(contrib, prod);
                } else {
                    contrib = addp(contrib, (FIELD_P as u64) - prod);
                }
            }
            acc[d] = addp(acc[d], contrib);
        }
        Ok(())
    });
    match result {
        Ok(()) => {}
        Err(DslError::DegenerateCrossRatio) | Err(DslError::DivisionByZero) => {
            return Ok(TrialOutcome::Degenerate)
        }
        Err(e) => return Err(format!("{}", e)),
    }
    if acc.iter().all(|&v| v == 0) {
        Ok(TrialOutcome::Zero)
    } else {
        Ok(TrialOutcome::NonZero {
            residual_terms: acc.iter().filter(|&&v| v != 0).count(),
            witnesses: vec![Witness {
                coeff: format!("{:?}", acc),
                slots: vec!["fingerprint".to_string()],
            }],
        })
    }
}

/// Run `trials` independent specialized trials; all must vanish.
pub fn run_specialized(
    t: &Template,
    level: Level,
    trials: u32,
    seed: u64,
    mut report: CheckReport,
) -> CheckReport {
    let heavy = is_orbit_heavy(t);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(seed_of(&t.name)));
    let mut passes = 0u32;
    let mut attempts = 0u32;
    while passes < trials {
        attempts += 1;
        if attempts > trials + 25 {
            report.verdict = Verdict::Error;
            report.note = Some("resample budget exhausted".to_string());
            return report;
        }
        let b = sample_point(&t.vars, &mut rng);
        let outcome = if heavy {
            trial_fingerprint(t, level, &b, seed.wrapping_add(passes as u64), 2)
        } else {
            trial_full(t, level, &b)
        };
        match outcome {
            Ok(TrialOutcome::Zero) => passes += 1,
            Ok(TrialOutcome::Degenerate) => continue,
            Ok(TrialOutcome::NonZero { residual_terms, witnesses }) => {
                report.verdict = Verdict::Fail;
                report.residual_terms = residual_terms;
                report.witnesses = witnesses;
                report.note = Some(format!("failed at trial {}", passes + 1));
                return report;
            }
            Err(e) => {
                report.verdict = Verdict::Error;
                report.note = Some(e);
                return report;
            }
        }
    }
    report.verdict = Verdict::ProxyPass;
    report.note = Some(format!(
        "{} specialized trials vanish ({})",
        trials,
        if heavy { "fingerprint" } else { "full prime tensor" }
    ));
    report
}

fn seed_of(name: &str) -> u64 {
    name.bytes().fold(0u64, |a, b| a.wrapping_mul(131).wrapping_add(b as u64))
}

/// Nullspace certificate for the nine-orbit family: per-orbit fingerprints
/// over many draws determine the unique (up to scale) vanishing combination;
/// it must be proportional to the published coefficients.
pub fn sigma9_nullspace(seed: u64) -> Result<String, String> {
    let t = corpus::gen::orbits::sigma9_template();
    // Build per-orbit sub-templates by masking coefficients.
    let orbit_term = match &t.expr.terms[0].1 {
        Term::Orbit { group, signed, points, body } => {
            (group.clone(), *signed, points.clone(), body.clone())
        }
        _ => return Err("unexpected sigma9 template shape".into()),
    };
    let draws = 12usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x519a));
    let b = sample_point(&t.vars, &mut rng);
    // fingerprints[j][draw]
    let mut fingerprints: Vec<Vec<u64>> = Vec::with_capacity(9);
    for j in 0..9 {
        let mut body = (*orbit_term.3).clone();
        body.terms = vec![body.terms[j].clone()];
        // strip the published coefficient: fingerprint the bare orbit
        body.terms[0].0 = Rat::ONE;
        let sub = Template {
            name: format!("sigma9.orbit{}", j + 1),
            vars: t.vars.clone(),
            level: Level::ModProducts,
            expect: t.expect,
            cost: t.cost,
            tags: vec![],
            tolerance: None,
            expr: expr_dsl::Expr {
                terms: vec![(
                    Rat::ONE,
                    Term::Orbit {
                        group: orbit_term.0.clone(),
                        signed: orbit_term.1,
                        points: orbit_term.2.clone(),
                        body: Box::new(body),
                    },
                )],
            },
        };
        let fp = orbit_fingerprint(&sub, &b, seed, draws)?;
        fingerprints.push(fp);
    }
    // Solve for the nullspace of the draws x 9 matrix over F_p.
    let mut rows: Vec<Vec<u64>> = (0..draws)
        .map(|d| (0..9).map(|j| fingerprints[j][d]).collect())
        .collect();
    // Gaussian elimination; track pivot columns.
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for col in 0..9 {
        if let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != 0) {
            rows.swap(r, p);
            let inv = invp(rows[r][col]);
            for c in col..9 {
                rows[r][c] = mulp(rows[r][c], inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][col] != 0 {
                    let f = rows[i][col];
                    for c in col..9 {
                        let sub = mulp(f, rows[r][c]);
                        rows[i][c] = addp(rows[i][c], (FIELD_P as u64) - sub);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
    }
    let free: Vec<usize> = (0..9).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return Err(format!("nullspace dimension {} (expected 1)", free.len()));
    }
    // Back-substitute the single free column = 1.
    let fc = free[0];
    let mut sol = vec![0u64; 9];
    sol[fc] = 1;
    for (ri, &pc) in pivots.iter().enumerate() {
        // row: x_pc + sum coeff*x_free = 0
        let v = rows[ri][fc];
        sol[pc] = if v == 0 { 0 } else { (FIELD_P as u64) - v };
    }
    // Compare with the published coefficients up to one scalar.
    let c_pub: Vec<u64> = ORBIT_COEFFS.iter().map(|&c| rat_to_field(Rat::int(c))).collect();
    let k = (0..9).find(|&j| sol[j] != 0 && c_pub[j] != 0).ok_or("zero solution")?;
    let scale = mulp(c_pub[k], invp(sol[k]));
    let matches = (0..9).all(|j| mulp(sol[j], scale) == c_pub[j]);
    if matches {
        Ok("slot assignment p1..p5 | cr(p6,p7,p8,p9); nullspace is 1-dimensional and proportional to (-1,-2,2,4,4,8,2,3,-6)".to_string())
    } else {
        Err("nullspace not proportional to the published coefficients".to_string())
    }
}

fn orbit_fingerprint(
    t: &Template,
    b: &Bindings<BigRational>,
    seed: u64,
    draws: usize,
) -> Result<Vec<u64>, String> {
    // Like trial_fingerprint but returns the raw accumulators.
    let patterns = rho_patterns(4);
    let mut dom = PrimeDomain::new();
    let mut rvecs: Vec<[Vec<u64>; 4]> = (0..draws)
        .map(|_| [Vec::new(), Vec::new(), Vec::new(), Vec::new()])
        .collect();
    // One shared r-stream per seed so different orbits see the same vectors.
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x771f);
    let mut acc = vec![0u64; draws];
    let one = BigRational::one();
    let mut ensure = |rvecs: &mut Vec<[Vec<u64>; 4]>, rng: &mut ChaCha8Rng, n: usize| {
        for dv in rvecs.iter_mut() {
            for pos in dv.iter_mut() {
                while pos.len() < n {
                    pos.push(rng.gen_range(1..(FIELD_P as u64)));
                }
            }
        }
    };
    let word_val = |w: &[(u32, i32)], r: &[u64]| -> u64 {
        let mut acc = 0u64;
        for &(idx, e) in w {
            let mag = mulp(r[idx as usize], e.unsigned_abs() as u64);
            if e >= 0 {
                acc = addp(acc, mag);
            } else {
                acc = addp(acc, (FIELD_P as u64) - mag);
            }
        }
        acc
    };
    let res = for_each_value_term(&t.expr, b, &mut |c, va| {
        let q = match &va {
            ValueAtom::Mpl { indices, args, .. } if indices.as_slice() == [4] => args[0].clone(),
            _ => {
                return Err(DslError::Parse { line: 0, col: 0, msg: "Li4 only".into() })
            }
        };
        if q.is_zero() || q == one {
            return Err(DslError::DegenerateCrossRatio);
        }
        let omq = &one - &q;
        let wq = dom.word_of(&q).map_err(|_| DslError::DegenerateCrossRatio)?;
        let womq = dom.word_of(&omq).map_err(|_| DslError::DegenerateCrossRatio)?;
        ensure(&mut rvecs, &mut rng, dom.table.len());
        let coeff = mulp(rat_to_field(c), (FIELD_P as u64) - 1); // Li -> I sign at depth 1
        for (d, rv) in rvecs.iter().enumerate() {
            let mut m = [[0u64; 2]; 4];
            for pos in 0..4 {
                m[pos][0] = word_val(&womq, &rv[pos]);
                m[pos][1] = word_val(&wq, &rv[pos]);
            }
            let mut contrib = 0u64;
            for (perm, sgn) in &patterns {
                let mut prod = coeff;
                for (pos, &slot) in perm.iter().enumerate() {
                    let col = if slot == 0 { 0 } else { 1 };
                    prod = mulp(prod, m[pos][col]);
                }
                if *sgn >= 0 {
                    contrib = addp(contrib, prod);
                } else {
                    contrib = addp(contrib, (FIELD_P as u64) - prod);
                }
            }
            acc[d] = addp(acc[d], contrib);
        }
        Ok(())
    });
    match res {
        Ok(()) => Ok(acc),
        Err(e) => Err(format!("{}", e)),
    }
}

/// Exposed for tests: one full-tensor specialized trial of a template.
pub fn specialized_zero_once(t: &Template, level: Level, seed: u64) -> Result<bool, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..25 {
        let b = sample_point(&t.vars, &mut rng);
        match trial_full(t, level, &b) {
            Ok(TrialOutcome::Zero) => return Ok(true),
            Ok(TrialOutcome::NonZero { .. }) => return Ok(false),
            Ok(TrialOutcome::Degenerate) => continue,
            Err(e) => return Err(e),
        }
    }
    Err("resample budget exhausted".into())
}
