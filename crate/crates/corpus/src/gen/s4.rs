//! The 122-term expression in six variables, its three-variable
//! specialization, and the induced four-variable combination.

use crate::util::{arg, pt, rf_to_arg};
use exact_kernel::{BigRational, Rat, RationalFunction, Vars};
use expr_dsl::{expand, ArgExpr, Bindings, Cost, Expect, Expr, GroundAtom, Level, PointVal,
    Template, Term};
use symbol_engine::AtomKind;
use std::sync::Arc;

/// (coefficient, macro name, points) for the t-macro part of the expression.
/// Transcribed line by line; `verify_tilde_counts` checks the block counts.
pub const TILDE_T_TERMS: &[(i64, &str, [char; 6])] = &[
    // t6 block (15 terms)
    (-1, "t6", ['a', 'b', 'c', 'd', 'e', 'f']),
    (1, "t6", ['a', 'c', 'b', 'd', 'e', 'f']),
    (1, "t6", ['a', 'c', 'b', 'e', 'd', 'f']),
    (-1, "t6", ['a', 'c', 'b', 'f', 'd', 'e']),
    (-1, "t6", ['a', 'e', 'b', 'f', 'c', 'd']),
    (1, "t6", ['a', 'f', 'b', 'e', 'c', 'd']),
    (1, "t6", ['b', 'c', 'a', 'd', 'e', 'f']),
    (-1, "t6", ['b', 'd', 'a', 'e', 'c', 'f']),
    (1, "t6", ['b', 'd', 'a', 'f', 'c', 'e']),
    (1, "t6", ['c', 'e', 'a', 'd', 'b', 'f']),
    (-1, "t6", ['c', 'f', 'a', 'd', 'b', 'e']),
    (-1, "t6", ['d', 'e', 'a', 'b', 'c', 'f']),
    (1, "t6", ['d', 'e', 'a', 'f', 'b', 'c']),
    (-1, "t6", ['d', 'f', 'a', 'b', 'c', 'e']),
    (-1, "t6", ['d', 'f', 'a', 'e', 'b', 'c']),
    // t1 block (34 terms)
    (6, "t1", ['a', 'b', 'c', 'd', 'e', 'f']),
    (6, "t1", ['a', 'b', 'c', 'd', 'f', 'e']),
    (-2, "t1", ['a', 'b', 'c', 'e', 'd', 'f']),
    (2, "t1", ['a', 'b', 'c', 'f', 'd', 'e']),
    (2, "t1", ['a', 'b', 'd', 'c', 'e', 'f']),
    (2, "t1", ['a', 'b', 'd', 'c', 'f', 'e']),
    (2, "t1", ['a', 'b', 'e', 'c', 'f', 'd']),
    (2, "t1", ['a', 'b', 'e', 'd', 'f', 'c']),
    (-4, "t1", ['a', 'c', 'b', 'd', 'e', 'f']),
    (-4, "t1", ['a', 'c', 'b', 'e', 'd', 'f']),
    (-4, "t1", ['a', 'c', 'b', 'e', 'f', 'd']),
    (-4, "t1", ['a', 'c', 'b', 'f', 'd', 'e']),
    (4, "t1", ['a', 'c', 'b', 'f', 'e', 'd']),
    (-2, "t1", ['a', 'c', 'd', 'b', 'e', 'f']),
    (-4, "t1", ['a', 'c', 'd', 'b', 'f', 'e']),
    (-4, "t1", ['a', 'c', 'd', 'e', 'f', 'b']),
    (4, "t1", ['a', 'c', 'd', 'f', 'e', 'b']),
    (-4, "t1", ['a', 'c', 'e', 'b', 'f', 'd']),
    (2, "t1", ['a', 'e', 'b', 'c', 'f', 'd']),
    (2, "t1", ['a', 'e', 'b', 'd', 'f', 'c']),
    (6, "t1", ['a', 'e', 'b', 'f', 'c', 'd']),
    (4, "t1", ['a', 'e', 'b', 'f', 'd', 'c']),
    (-2, "t1", ['a', 'e', 'c', 'b', 'd', 'f']),
    (-6, "t1", ['a', 'e', 'c', 'd', 'f', 'b']),
    (2, "t1", ['a', 'e', 'c', 'f', 'd', 'b']),
    (-2, "t1", ['a', 'e', 'd', 'c', 'f', 'b']),
    (-2, "t1", ['a', 'f', 'b', 'c', 'e', 'd']),
    (2, "t1", ['a', 'f', 'b', 'd', 'e', 'c']),
    (-6, "t1", ['a', 'f', 'b', 'e', 'c', 'd']),
    (-2, "t1", ['a', 'f', 'b', 'e', 'd', 'c']),
    (2, "t1", ['a', 'f', 'c', 'b', 'd', 'e']),
    (6, "t1", ['a', 'f', 'c', 'd', 'e', 'b']),
    (2, "t1", ['a', 'f', 'c', 'e', 'd', 'b']),
    (2, "t1", ['a', 'f', 'd', 'c', 'e', 'b']),
    // t2 block (23 terms)
    (1, "t2", ['a', 'b', 'c', 'd', 'e', 'f']),
    (1, "t2", ['a', 'b', 'c', 'd', 'f', 'e']),
    (2, "t2", ['a', 'c', 'b', 'd', 'f', 'e']),
    (1, "t2", ['a', 'e', 'b', 'c', 'f', 'd']),
    (-5, "t2", ['a', 'e', 'b', 'd', 'f', 'c']),
    (-1, "t2", ['a', 'f', 'b', 'c', 'e', 'd']),
    (1, "t2", ['a', 'f', 'b', 'd', 'e', 'c']),
    (1, "t2", ['b', 'c', 'a', 'd', 'e', 'f']),
    (1, "t2", ['b', 'c', 'a', 'd', 'f', 'e']),
    (1, "t2", ['b', 'd', 'a', 'c', 'e', 'f']),
    (-1, "t2", ['b', 'd', 'a', 'c', 'f', 'e']),
    (6, "t2", ['b', 'e', 'a', 'd', 'f', 'c']),
    (2, "t2", ['b', 'f', 'a', 'd', 'e', 'c']),
    (-1, "t2", ['c', 'e', 'a', 'b', 'd', 'f']),
    (-1, "t2", ['c', 'e', 'a', 'd', 'f', 'b']),
    (1, "t2", ['c', 'f', 'a', 'b', 'd', 'e']),
    (1, "t2", ['c', 'f', 'a', 'd', 'e', 'b']),
    (-1, "t2", ['d', 'e', 'a', 'b', 'c', 'f']),
    (1, "t2", ['d', 'e', 'a', 'c', 'f', 'b']),
    (-1, "t2", ['d', 'f', 'a', 'b', 'c', 'e']),
    (2, "t2", ['d', 'f', 'a', 'b', 'e', 'c']),
    (-1, "t2", ['d', 'f', 'a', 'c', 'e', 'b']),
    (2, "t2", ['e', 'f', 'a', 'b', 'd', 'c']),
    // t3 block (4 terms)
    (-12, "t3", ['a', 'e', 'c', 'd', 'f', 'b']),
    (4, "t3", ['a', 'e', 'f', 'b', 'c', 'd']),
    (8, "t3", ['b', 'e', 'a', 'f', 'd', 'c']),
    (-8, "t3", ['b', 'e', 'd', 'c', 'a', 'f']),
    // t4 block (2 terms)
    (2, "t4", ['a', 'e', 'c', 'd', 'f', 'b']),
    (-2, "t4", ['b', 'e', 'a', 'f', 'd', 'c']),
    // t5 block (2 terms)
    (2, "t5", ['a', 'e', 'c', 'd', 'f', 'b']),
    (-6, "t5", ['b', 'e', 'a', 'f', 'd', 'c']),
];

/// (coefficient, negate inside the bracket, two cross ratios) for the four
/// explicit product-of-cross-ratio arguments.
pub const TILDE_PROD_TERMS: &[(i64, bool, [char; 4], [char; 4])] = &[
    (8, false, ['a', 'b', 'f', 'e'], ['a', 'd', 'e', 'b']),
    (-6, false, ['a', 'e', 'b', 'd'], ['a', 'e', 'b', 'f']),
    (-2, false, ['a', 'b', 'f', 'd'], ['e', 'b', 'f', 'd']),
    (8, true, ['a', 'e', 'b', 'd'], ['b', 'e', 'd', 'f']),
];

/// (coefficient, points) for the plain cross-ratio arguments.
pub const TILDE_U_TERMS: &[(i64, [char; 4])] = &[
    (-2, ['a', 'b', 'c', 'd']),
    (4, ['a', 'b', 'c', 'e']),
    (-4, ['a', 'b', 'c', 'f']),
    (8, ['a', 'b', 'd', 'e']),
    (-8, ['a', 'b', 'd', 'f']),
    (14, ['a', 'b', 'e', 'f']),
    (2, ['a', 'c', 'd', 'b']),
    (-2, ['a', 'c', 'd', 'e']),
    (2, ['a', 'c', 'd', 'f']),
    (-2, ['a', 'c', 'e', 'b']),
    (-2, ['a', 'c', 'e', 'f']),
    (2, ['a', 'c', 'f', 'b']),
    (-2, ['a', 'd', 'b', 'c']),
    (-6, ['a', 'd', 'e', 'b']),
    (2, ['a', 'd', 'e', 'c']),
    (-2, ['a', 'd', 'e', 'f']),
    (2, ['a', 'd', 'f', 'b']),
    (2, ['a', 'd', 'f', 'c']),
    (-4, ['a', 'e', 'b', 'd']),
    (2, ['a', 'e', 'c', 'd']),
    (6, ['a', 'e', 'f', 'b']),
    (8, ['a', 'e', 'f', 'c']),
    (2, ['a', 'e', 'f', 'd']),
    (-10, ['a', 'f', 'b', 'e']),
    (-2, ['a', 'f', 'c', 'd']),
    (-4, ['b', 'c', 'd', 'e']),
    (4, ['b', 'c', 'd', 'f']),
    (2, ['b', 'c', 'e', 'f']),
    (8, ['b', 'd', 'e', 'c']),
    (2, ['b', 'd', 'e', 'f']),
    (-6, ['b', 'e', 'c', 'd']),
    (-2, ['b', 'e', 'f', 'c']),
    (-6, ['b', 'e', 'f', 'd']),
    (-2, ['b', 'f', 'c', 'd']),
    (-2, ['b', 'f', 'd', 'e']),
    (-2, ['b', 'f', 'c', 'e']),
    (-2, ['c', 'd', 'e', 'f']),
    (4, ['c', 'e', 'f', 'd']),
];

fn li4(a: ArgExpr) -> Term {
    Term::Atom { kind: AtomKind::Li, indices: vec![4], args: vec![a] }
}

/// The 122-argument expression in six variables, one `Li(4)` term per
/// argument.
pub fn s4_tilde_template() -> Template {
    let mut terms: Vec<(Rat, Term)> = Vec::with_capacity(122);
    for (c, mac, pts_c) in TILDE_T_TERMS {
        let args: Vec<ArgExpr> = pts_c.iter().map(|&ch| pt(ch)).collect();
        terms.push((Rat::int(*c), li4(ArgExpr::Call(mac.to_string(), args))));
    }
    for (c, negate, p1, p2) in TILDE_PROD_TERMS {
        let cr1 = arg::cr(pt(p1[0]), pt(p1[1]), pt(p1[2]), pt(p1[3]));
        let cr2 = arg::cr(pt(p2[0]), pt(p2[1]), pt(p2[2]), pt(p2[3]));
        let mut prod = arg::mul(cr1, cr2);
        if *negate {
            prod = ArgExpr::Neg(Box::new(prod));
        }
        terms.push((Rat::int(*c), li4(prod)));
    }
    for (c, pts_c) in TILDE_U_TERMS {
        let args: Vec<ArgExpr> = pts_c.iter().map(|&ch| pt(ch)).collect();
        terms.push((Rat::int(*c), li4(ArgExpr::Call("u".to_string(), args))));
    }
    Template {
        name: "gen.s4-tilde".to_string(),
        vars: vec!["a", "b", "c", "d", "e", "f"].into_iter().map(String::from).collect(),
        level: Level::ModProducts,
        expect: Expect::Pass,
        cost: Cost::Heavy,
        tags: vec!["s4tilde".to_string()],
        tolerance: None,
        expr: Expr { terms },
    }
}

/// Bindings of the six points onto three variables:
/// a=0, b=1, c=x, d=1/y, e=∞, f=z.
pub fn tilde_bindings(vars: &Arc<Vars>) -> Bindings<RationalFunction> {
    let x = RationalFunction::var_named(vars, "x");
    let y = RationalFunction::var_named(vars, "y");
    let z = RationalFunction::var_named(vars, "z");
    let mut b = Bindings::new(RationalFunction::int(vars, 0));
    b.bind("a", PointVal::Fin(RationalFunction::int(vars, 0)));
    b.bind("b", PointVal::Fin(RationalFunction::int(vars, 1)));
    b.bind("c", PointVal::Fin(x));
    b.bind("d", PointVal::Fin(y.recip().expect("y nonzero")));
    b.bind("e", PointVal::Inf);
    b.bind("f", PointVal::Fin(z));
    b
}

/// The specialized 122-term combination over x, y, z, in display form:
/// arguments with negative coefficient are inverted, so every coefficient is
/// positive. Terms are sorted by (coefficient, argument).
pub fn s4_terms() -> Vec<(Rat, RationalFunction)> {
    let tilde = s4_tilde_template();
    let vars = Vars::new(vec!["x", "y", "z"]);
    let b = tilde_bindings(&vars);
    let ie = expand(&tilde, &vars, Some(&b)).expect("specialization is non-degenerate");
    let mut out: Vec<(Rat, RationalFunction)> = Vec::with_capacity(122);
    for (c, atom) in ie.terms {
        let f = match atom {
            GroundAtom::Mpl(m) => m.args[0].clone(),
            _ => unreachable!("s4-tilde has only Li4 atoms"),
        };
        if c.numer() < 0 {
            out.push((-c, f.recip().expect("argument nonzero")));
        } else {
            out.push((c, f));
        }
    }
    out.sort_by(|x, y| {
        x.0.cmp(&y.0).then_with(|| x.1.cmp_canonical(&y.1))
    });
    out
}

/// The specialized combination as a template over x, y, z.
pub fn s4_template() -> Template {
    let terms: Vec<(Rat, Term)> =
        s4_terms().into_iter().map(|(c, f)| (c, li4(rf_to_arg(&f)))).collect();
    Template {
        name: "gen.s4".to_string(),
        vars: vec!["x".to_string(), "y".to_string(), "z".to_string()],
        level: Level::ModProducts,
        expect: Expect::Pass,
        cost: Cost::Heavy,
        tags: vec!["s4".to_string()],
        tolerance: None,
        expr: Expr { terms },
    }
}

/// The main check: Li4 applied to the 122-term combination minus
/// I_{3,1}(V0(x,y), z) vanishes modulo products.
pub fn thm12_template() -> Template {
    let mut t = s4_template();
    t.name = "thm12.s4-122".to_string();
    t.tags = vec!["thm12".to_string(), "gonconj".to_string(), "heavy".to_string()];
    t.expr.terms.push((
        Rat::int(-1),
        Term::Atom {
            kind: AtomKind::I,
            indices: vec![3, 1],
            args: vec![
                ArgExpr::V0(Box::new(pt('x')), Box::new(pt('y'))),
                pt('z'),
            ],
        },
    ));
    t
}

/// Arguments of V0(u, v) as rational functions.
fn v0_rfs(u: &RationalFunction, v: &RationalFunction) -> [RationalFunction; 5] {
    let one = RationalFunction::int(u.vars(), 1);
    let omu = one.sub(u);
    let omv = one.sub(v);
    let omuv = one.sub(&u.mul(v));
    [
        u.clone(),
        v.clone(),
        omu.div(&omuv).expect("generic"),
        omuv.clone(),
        omv.div(&omuv).expect("generic"),
    ]
}

/// The four-variable combination S4(x,y,V0(z,w)) + S4(z,w,V0(x,y)), as a
/// merged list of Li4 arguments with coefficients (inverse arguments are kept
/// distinct; the projector handles the signs).
pub fn terms_931() -> Vec<(Rat, RationalFunction)> {
    let base = s4_terms();
    let vars = Vars::new(vec!["x", "y", "z", "w"]);
    let x = RationalFunction::var(&vars, 0);
    let y = RationalFunction::var(&vars, 1);
    let z = RationalFunction::var(&vars, 2);
    let w = RationalFunction::var(&vars, 3);

    // Substitute (x, y, z) -> values in the 3-variable arguments.
    let subst = |f: &RationalFunction, vals: &[RationalFunction; 3]| -> RationalFunction {
        let eval_poly = |p: &exact_kernel::Poly| -> RationalFunction {
            let mut acc = RationalFunction::int(&vars, 0);
            for (m, c) in &p.terms {
                let mut t = RationalFunction::constant(
                    &vars,
                    BigRational::from_integer(c.clone()),
                );
                for (vi, &e) in m.0.iter().enumerate() {
                    for _ in 0..e {
                        t = t.mul(&vals[vi]);
                    }
                }
                acc = acc.add(&t);
            }
            acc
        };
        let num = eval_poly(&f.num);
        let den = eval_poly(&f.den);
        let c = RationalFunction::constant(&vars, f.c.clone());
        c.mul(&num).div(&den).expect("generic substitution")
    };

    let mut out: Vec<(Rat, RationalFunction)> = Vec::new();
    for zi in v0_rfs(&z, &w) {
        let vals = [x.clone(), y.clone(), zi];
        for (c, f) in &base {
            out.push((*c, subst(f, &vals)));
        }
    }
    for xi in v0_rfs(&x, &y) {
        let vals = [z.clone(), w.clone(), xi];
        for (c, f) in &base {
            out.push((*c, subst(f, &vals)));
        }
    }
    // Merge equal arguments.
    out.sort_by(|a, b| a.1.cmp_canonical(&b.1));
    let mut merged: Vec<(Rat, RationalFunction)> = Vec::new();
    for (c, f) in out {
        match merged.last_mut() {
            Some((cc, ff)) if *ff == f => *cc += c,
            _ => merged.push((c, f)),
        }
    }
    merged.retain(|(c, _)| !c.is_zero());
    merged
}

/// Count the terms with `f` and `1/f` identified: inverting an argument
/// flips the sign of its coefficient (modulo products), so a class whose net
/// coefficient cancels is not a term of the equation.
pub fn count_up_to_inverses(terms: &[(Rat, RationalFunction)]) -> usize {
    let mut net: rustc_hash::FxHashMap<String, Rat> = rustc_hash::FxHashMap::default();
    for (c, f) in terms {
        let a = format!("{}", f);
        let b = format!("{}", f.recip().expect("nonzero"));
        let (key, signed) = if a <= b { (a, *c) } else { (b, -*c) };
        *net.entry(key).or_insert(Rat::ZERO) += signed;
    }
    net.values().filter(|c| !c.is_zero()).count()
}

/// The four-variable functional equation as a template (for the heavy exact
/// check and for numeric evaluation).
pub fn cor13_template() -> Template {
    let terms: Vec<(Rat, Term)> =
        terms_931().into_iter().map(|(c, f)| (c, li4(rf_to_arg(&f)))).collect();
    Template {
        name: "cor13.equation".to_string(),
        vars: vec!["x", "y", "z", "w"].into_iter().map(String::from).collect(),
        level: Level::ModProducts,
        expect: Expect::Pass,
        cost: Cost::Heavy,
        tags: vec!["cor13".to_string()],
        tolerance: None,
        expr: Expr { terms },
    }
}
