//! Grounding templates over a value field.
//!
//! The same walk serves three consumers: symbolic grounding (values are
//! rational functions, producing an [`IdentityExpr`]), exact specialization
//! (values are rationals) and numeric evaluation (values are complex). Orbit
//! terms are streamed, never materialized: a Σ9 orbit visits its 362880
//! permutations through the callback.

use crate::ast::*;
use crate::builtins::{expand_macro, v0_args};
use crate::field::{cross_ratio, DslError, Field, PointVal};
use exact_kernel::{Rat, RationalFunction, Vars};
use rustc_hash::FxHashMap;
use symbol_engine::{AtomKind, MplAtom};
use std::sync::Arc;

/// Point bindings plus a seed value used to construct constants of `F`.
#[derive(Debug, Clone)]
pub struct Bindings<F> {
    pub map: FxHashMap<String, PointVal<F>>,
    pub seed: F,
}

impl<F: Field> Bindings<F> {
    pub fn new(seed: F) -> Bindings<F> {
        Bindings { map: FxHashMap::default(), seed }
    }

    pub fn bind(&mut self, name: &str, v: PointVal<F>) {
        self.map.insert(name.to_string(), v);
    }

    fn get(&self, name: &str) -> Result<&PointVal<F>, DslError> {
        self.map.get(name).ok_or_else(|| DslError::UnboundPoint(name.to_string()))
    }
}

enum ArgValue<F> {
    Single(PointVal<F>),
    Formal(Vec<(Rat, F)>),
}

fn eval_point<F: Field>(e: &ArgExpr, b: &Bindings<F>) -> Result<PointVal<F>, DslError> {
    match eval_arg(e, b)? {
        ArgValue::Single(v) => Ok(v),
        ArgValue::Formal(_) => Err(DslError::FormalSumMisplaced),
    }
}

fn eval_finite<F: Field>(e: &ArgExpr, b: &Bindings<F>) -> Result<F, DslError> {
    Ok(eval_point(e, b)?.finite()?.clone())
}

fn eval_arg<F: Field>(e: &ArgExpr, b: &Bindings<F>) -> Result<ArgValue<F>, DslError> {
    use ArgValue::*;
    Ok(match e {
        ArgExpr::Num(r) => Single(PointVal::Fin(b.seed.from_rat(*r))),
        ArgExpr::Point(name) => Single(b.get(name)?.clone()),
        ArgExpr::Inf => Single(PointVal::Inf),
        ArgExpr::Add(x, y) => Single(PointVal::Fin(eval_finite(x, b)?.add(&eval_finite(y, b)?))),
        ArgExpr::Sub(x, y) => Single(PointVal::Fin(eval_finite(x, b)?.sub(&eval_finite(y, b)?))),
        ArgExpr::Mul(x, y) => Single(PointVal::Fin(eval_finite(x, b)?.mul(&eval_finite(y, b)?))),
        ArgExpr::Div(x, y) => {
            Single(PointVal::Fin(eval_finite(x, b)?.div(&eval_finite(y, b)?)?))
        }
        ArgExpr::Neg(x) => Single(PointVal::Fin(eval_finite(x, b)?.neg())),
        ArgExpr::Pow(x, k) => {
            let v = eval_finite(x, b)?;
            let one = b.seed.from_rat(Rat::ONE);
            let base = if *k < 0 { one.div(&v)? } else { v };
            let mut acc = b.seed.from_rat(Rat::ONE);
            for _ in 0..k.unsigned_abs() {
                acc = acc.mul(&base);
            }
            Single(PointVal::Fin(acc))
        }
        ArgExpr::Cr(pts) => {
            let p = [
                eval_point(&pts[0], b)?,
                eval_point(&pts[1], b)?,
                eval_point(&pts[2], b)?,
                eval_point(&pts[3], b)?,
            ];
            Single(PointVal::Fin(cross_ratio(&p)?))
        }
        ArgExpr::Call(name, args) => eval_arg(&expand_macro(name, args)?, b)?,
        ArgExpr::V0(x, y) => {
            let mut out = Vec::with_capacity(5);
            for a in v0_args(x, y) {
                out.push((Rat::ONE, eval_finite(&a, b)?));
            }
            Formal(out)
        }
        ArgExpr::SplCr(point, quad) => {
            let e_val = eval_point(point, b)?;
            let mut out = Vec::with_capacity(4);
            for i in 0..4 {
                let mut p = [
                    eval_point(&quad[0], b)?,
                    eval_point(&quad[1], b)?,
                    eval_point(&quad[2], b)?,
                    eval_point(&quad[3], b)?,
                ];
                p[i] = e_val.clone();
                out.push((Rat::ONE, cross_ratio(&p)?));
            }
            Formal(out)
        }
    })
}

/// Ground atom over a value field.
#[derive(Debug, Clone)]
pub enum ValueFactor<F> {
    Mpl { kind: AtomKind, indices: Vec<u32>, args: Vec<F> },
    Log(F),
}

#[derive(Debug, Clone)]
pub enum ValueAtom<F> {
    Mpl { kind: AtomKind, indices: Vec<u32>, args: Vec<F> },
    Prod(Vec<ValueFactor<F>>),
    Tens(Vec<ValueFactor<F>>),
}

fn atom_options<F: Field>(
    args: &[ArgExpr],
    b: &Bindings<F>,
) -> Result<Vec<(Rat, Vec<F>)>, DslError> {
    let mut options: Vec<(Rat, Vec<F>)> = vec![(Rat::ONE, Vec::new())];
    for a in args {
        match eval_arg(a, b)? {
            ArgValue::Single(v) => {
                let f = v.finite()?.clone();
                for (_, vs) in options.iter_mut() {
                    vs.push(f.clone());
                }
            }
            ArgValue::Formal(items) => {
                let mut next = Vec::with_capacity(options.len() * items.len());
                for (c, vs) in &options {
                    for (ci, fi) in &items {
                        let mut vv = vs.clone();
                        vv.push(fi.clone());
                        next.push((*c * *ci, vv));
                    }
                }
                options = next;
            }
        }
    }
    Ok(options)
}

fn eval_factor<F: Field>(f: &Factor, b: &Bindings<F>) -> Result<ValueFactor<F>, DslError> {
    Ok(match f {
        Factor::Atom { kind, indices, args } => {
            let opts = atom_options(args, b)?;
            if opts.len() != 1 {
                return Err(DslError::FormalSumMisplaced);
            }
            ValueFactor::Mpl { kind: *kind, indices: indices.clone(), args: opts[0].1.clone() }
        }
        Factor::Log(a) => ValueFactor::Log(eval_finite(a, b)?),
    })
}

fn pts_atom<F: Field>(
    indices: &[u32],
    points: &[PointVal<F>],
) -> Result<ValueAtom<F>, DslError> {
    let d = indices.len();
    assert_eq!(points.len(), 3 + d, "point shorthand needs 3 + depth points");
    let mut args = Vec::with_capacity(d);
    for i in 0..d {
        let p = [
            points[0].clone(),
            points[1].clone(),
            points[2].clone(),
            points[3 + i].clone(),
        ];
        args.push(cross_ratio(&p)?);
    }
    Ok(ValueAtom::Mpl { kind: AtomKind::I, indices: indices.to_vec(), args })
}

/// All permutations of `0..n` with signs, in a deterministic order.
pub fn for_each_perm(n: usize, f: &mut impl FnMut(&[usize], i64) -> Result<(), DslError>) -> Result<(), DslError> {
    fn go(
        k: usize,
        arr: &mut Vec<usize>,
        sign: &mut i64,
        f: &mut impl FnMut(&[usize], i64) -> Result<(), DslError>,
    ) -> Result<(), DslError> {
        if k == 1 {
            return f(arr, *sign);
        }
        for i in 0..k - 1 {
            go(k - 1, arr, sign, f)?;
            if k % 2 == 0 {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
            *sign = -*sign;
        }
        go(k - 1, arr, sign, f)
    }
    let mut arr: Vec<usize> = (0..n).collect();
    let mut sign = 1i64;
    go(n, &mut arr, &mut sign, f)
}

/// Stream the grounded terms of an expression: calls `f(coeff, atom)` once
/// per fully expanded term.
pub fn for_each_value_term<F: Field>(
    expr: &Expr,
    b: &Bindings<F>,
    f: &mut impl FnMut(Rat, ValueAtom<F>) -> Result<(), DslError>,
) -> Result<(), DslError> {
    for (coeff, term) in &expr.terms {
        emit_term(*coeff, term, b, f)?;
    }
    Ok(())
}

fn emit_term<F: Field>(
    coeff: Rat,
    term: &Term,
    b: &Bindings<F>,
    f: &mut impl FnMut(Rat, ValueAtom<F>) -> Result<(), DslError>,
) -> Result<(), DslError> {
    match term {
        Term::Atom { kind, indices, args } => {
            for (c, vs) in atom_options(args, b)? {
                f(coeff * c, ValueAtom::Mpl { kind: *kind, indices: indices.clone(), args: vs })?;
            }
        }
        Term::Pts { indices, points } => {
            let pv: Vec<PointVal<F>> =
                points.iter().map(|p| eval_point(p, b)).collect::<Result<_, _>>()?;
            f(coeff, pts_atom(indices, &pv)?)?;
        }
        Term::Cyc4 { indices, pre, cycled, post } => {
            let pre_v: Vec<PointVal<F>> =
                pre.iter().map(|p| eval_point(p, b)).collect::<Result<_, _>>()?;
            let cyc_v: Vec<PointVal<F>> =
                cycled.iter().map(|p| eval_point(p, b)).collect::<Result<_, _>>()?;
            let post_v: Vec<PointVal<F>> =
                post.iter().map(|p| eval_point(p, b)).collect::<Result<_, _>>()?;
            let n = cyc_v.len();
            for r in 0..n {
                let mut pts = pre_v.clone();
                for i in 0..n {
                    pts.push(cyc_v[(r + i) % n].clone());
                }
                pts.extend(post_v.iter().cloned());
                f(coeff, pts_atom(indices, &pts)?)?;
            }
        }
        Term::Prod(fs) => {
            let vfs: Vec<ValueFactor<F>> =
                fs.iter().map(|x| eval_factor(x, b)).collect::<Result<_, _>>()?;
            f(coeff, ValueAtom::Prod(vfs))?;
        }
        Term::Tens(fs) => {
            let vfs: Vec<ValueFactor<F>> =
                fs.iter().map(|x| eval_factor(x, b)).collect::<Result<_, _>>()?;
            f(coeff, ValueAtom::Tens(vfs))?;
        }
        Term::Orbit { group, signed, points, body } => {
            let vals: Vec<PointVal<F>> = points
                .iter()
                .map(|p| b.get(p).cloned())
                .collect::<Result<_, _>>()?;
            match group {
                GroupSpec::Sym(n) => {
                    assert_eq!(*n, points.len(), "orbit group size mismatch");
                    let mut local = b.clone();
                    for_each_perm(*n, &mut |perm, sign| {
                        for (i, name) in points.iter().enumerate() {
                            local.map.insert(name.clone(), vals[perm[i]].clone());
                        }
                        let s = if *signed { Rat::int(sign) } else { Rat::ONE };
                        for (c, t) in &body.terms {
                            emit_term(coeff * s * *c, t, &local, f)?;
                        }
                        Ok(())
                    })?;
                }
                GroupSpec::Cyc(n) => {
                    assert_eq!(*n, points.len(), "orbit group size mismatch");
                    let mut local = b.clone();
                    for r in 0..*n {
                        for (i, name) in points.iter().enumerate() {
                            local.map.insert(name.clone(), vals[(r + i) % n].clone());
                        }
                        for (c, t) in &body.terms {
                            emit_term(coeff * *c, t, &local, f)?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn to_mpl(kind: AtomKind, indices: Vec<u32>, args: Vec<RationalFunction>) -> Result<MplAtom, DslError> {
    if args.iter().any(|a| a.is_zero()) {
        return Err(DslError::DegenerateCrossRatio);
    }
    Ok(MplAtom::new(kind, indices, args))
}

fn ground_factor(vf: ValueFactor<RationalFunction>) -> Result<GroundFactor, DslError> {
    Ok(match vf {
        ValueFactor::Mpl { kind, indices, args } => GroundFactor::Mpl(to_mpl(kind, indices, args)?),
        ValueFactor::Log(f) => {
            if f.is_zero() {
                return Err(DslError::DegenerateCrossRatio);
            }
            GroundFactor::Log(f)
        }
    })
}

/// Ground a template into an identity expression over rational functions.
/// `bindings` maps every template variable to a point value over `vars`;
/// identity bindings (each variable to itself) are used when `None`.
pub fn expand(
    t: &Template,
    vars: &Arc<Vars>,
    bindings: Option<&Bindings<RationalFunction>>,
) -> Result<IdentityExpr, DslError> {
    let default_b;
    let b = match bindings {
        Some(b) => b,
        None => {
            let seed = RationalFunction::int(vars, 0);
            let mut bb = Bindings::new(seed);
            for v in &t.vars {
                let idx = vars
                    .index_of(v)
                    .ok_or_else(|| DslError::UnboundPoint(v.clone()))?;
                bb.bind(v, PointVal::Fin(RationalFunction::var(vars, idx)));
            }
            default_b = bb;
            &default_b
        }
    };
    let mut terms: Vec<(Rat, GroundAtom)> = Vec::new();
    for_each_value_term(&t.expr, b, &mut |c, va| {
        let ga = match va {
            ValueAtom::Mpl { kind, indices, args } => GroundAtom::Mpl(to_mpl(kind, indices, args)?),
            ValueAtom::Prod(fs) => {
                GroundAtom::Prod(fs.into_iter().map(ground_factor).collect::<Result<_, _>>()?)
            }
            ValueAtom::Tens(fs) => {
                GroundAtom::Tens(fs.into_iter().map(ground_factor).collect::<Result<_, _>>()?)
            }
        };
        terms.push((c, ga));
        Ok(())
    })?;
    Ok(IdentityExpr { name: t.name.clone(), vars: vars.clone(), level: t.level, terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heap_permutations_have_correct_signs() {
        let mut count = 0;
        let mut id_sign = 0i64;
        for_each_perm(4, &mut |perm, sign| {
            count += 1;
            // recompute parity by inversion counting
            let mut inv = 0;
            for i in 0..perm.len() {
                for j in (i + 1)..perm.len() {
                    if perm[i] > perm[j] {
                        inv += 1;
                    }
                }
            }
            let expect = if inv % 2 == 0 { 1 } else { -1 };
            assert_eq!(sign, expect, "perm {:?}", perm);
            if perm == [0, 1, 2, 3] {
                id_sign = sign;
            }
            Ok(())
        })
        .unwrap();
        assert_eq!(count, 24);
        assert_eq!(id_sign, 1);
    }
}
