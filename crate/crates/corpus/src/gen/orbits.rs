//! The two large orbit families: the Σ5×Σ5×Z/2-antisymmetric equation in
//! 5+5 points, and the Σ9-antisymmetric equation in nine points.

use crate::util::{arg, ptn};
use exact_kernel::Rat;
use expr_dsl::{ArgExpr, Cost, Expect, Expr, GroupSpec, Level, Template, Term};
use symbol_engine::AtomKind;

/// Orbit coefficients c_1..c_9.
pub const ORBIT_COEFFS: [i64; 9] = [-1, -2, 2, 4, 4, 8, 2, 3, -6];

fn li4(a: ArgExpr) -> Term {
    Term::Atom { kind: AtomKind::Li, indices: vec![4], args: vec![a] }
}

/// Sum over j of c_j * Li4(f_j(p1..p5, g)).
fn orbit_body(p: [&str; 5], g: ArgExpr) -> Vec<(Rat, Term)> {
    (0..9)
        .map(|j| {
            let mut args: Vec<ArgExpr> = p.iter().map(|s| ptn(s)).collect();
            args.push(g.clone());
            (
                Rat::int(ORBIT_COEFFS[j]),
                li4(ArgExpr::Call(format!("f{}", j + 1), args)),
            )
        })
        .collect()
}

/// F(A,B) + F(B,A) where F is the doubly antisymmetrized nine-orbit sum;
/// the result must vanish (the equation is antisymmetric under A <-> B).
pub fn mainthm_template() -> Template {
    let a_names: Vec<String> = (1..=5).map(|i| format!("A{}", i)).collect();
    let b_names: Vec<String> = (1..=5).map(|i| format!("B{}", i)).collect();
    let cr_b = arg::cr(ptn("B1"), ptn("B2"), ptn("B3"), ptn("B4"));
    let cr_a = arg::cr(ptn("A1"), ptn("A2"), ptn("A3"), ptn("A4"));
    let body_ab = orbit_body(["A1", "A2", "A3", "A4", "A5"], cr_b);
    let body_ba = orbit_body(["B1", "B2", "B3", "B4", "B5"], cr_a);
    let mut both = body_ab;
    both.extend(body_ba);
    let inner = Term::Orbit {
        group: GroupSpec::Sym(5),
        signed: true,
        points: b_names,
        body: Box::new(Expr { terms: both }),
    };
    let outer = Term::Orbit {
        group: GroupSpec::Sym(5),
        signed: true,
        points: a_names,
        body: Box::new(Expr { terms: vec![(Rat::ONE, inner)] }),
    };
    Template {
        name: "mainthm.antisym".to_string(),
        vars: (1..=5)
            .map(|i| format!("A{}", i))
            .chain((1..=5).map(|i| format!("B{}", i)))
            .collect(),
        level: Level::ModProducts,
        expect: Expect::Pass,
        cost: Cost::Heavy,
        tags: vec!["mainthm".to_string(), "orbit".to_string()],
        tolerance: None,
        expr: Expr { terms: vec![(Rat::ONE, outer)] },
    }
}

/// The Σ9-antisymmetric equation: same representatives and coefficients,
/// with the extra slot replaced by a cross ratio of the remaining four
/// points. The slot assignment (p1..p5 | cr(p6,p7,p8,p9)) is the resolved
/// one; the specialized checker records the nullspace certificate.
pub fn sigma9_template() -> Template {
    let names: Vec<String> = (1..=9).map(|i| format!("p{}", i)).collect();
    let g = arg::cr(ptn("p6"), ptn("p7"), ptn("p8"), ptn("p9"));
    let body = orbit_body(["p1", "p2", "p3", "p4", "p5"], g);
    let orbit = Term::Orbit {
        group: GroupSpec::Sym(9),
        signed: true,
        points: names.clone(),
        body: Box::new(Expr { terms: body }),
    };
    Template {
        name: "sigma9.equation".to_string(),
        vars: names,
        level: Level::ModProducts,
        expect: Expect::Pass,
        cost: Cost::Heavy,
        tags: vec!["sigma9".to_string(), "orbit".to_string()],
        tolerance: None,
        expr: Expr { terms: vec![(Rat::ONE, orbit)] },
    }
}
