//! Round-trip, expansion and five-term checks for the DSL.

use exact_kernel::{gcd_free_basis, BigRational, Rat, RationalFunction, Vars};
use expr_dsl::{expand, parse_file, parse_identity, print_template, Bindings, GroundAtom, PointVal};
use symbol_engine::{rho_project, symbol_mpl, SymbolicDomain};

#[test]
fn parse_print_roundtrip() {
    let src = r#"
# covers every construct once
identity demo.roundtrip {
  vars: x, y, a, b, c, d, e;
  level: mod-products;
  expect: proxy-pass;
  cost: heavy;
  tags: demo, depth2;
  tolerance: 1e-30;
  expr: 2*I(3,1)[x, y] - Li(4)[x/(1-y)^2] + 1/2*prod(Li(2)[x], log[1-x*y])
      + tens(Li(3)[x], log[y]) + pts(3,1)[a, b, c, d, e]
      + cyc4(2,2; e; a, b, c, d; ) - 3*Li(2)[cr(a, b, c, inf)]
      + Li(4)[t2(a, b, c, d, e, x)] + Li(3)[spl(inf; x*y, y, x, 1)]
      + I(3,1)[V0(x, y), cr(a, b, c, d)]
      + orbit(sym 3, signed; a, b, c; pts(2,1,1)[a, b, c, d, e, x]);
}
"#;
    let t = parse_identity(src).unwrap();
    let printed = print_template(&t);
    let t2 = parse_identity(&printed).unwrap();
    assert_eq!(t, t2, "printer output:\n{}", printed);
}

#[test]
fn five_term_relation_mod_products() {
    let src = r#"
identity w2.fiveterm {
  vars: x, y;
  level: mod-products;
  expr: Li(2)[V0(x, y)];
}
"#;
    let t = parse_identity(src).unwrap();
    let vars = Vars::new(vec!["x", "y"]);
    let ie = expand(&t, &vars, None).unwrap();
    let atoms = ie.to_atoms();
    assert_eq!(atoms.len(), 5);
    // rho of the symbol sum vanishes
    let mut polys = Vec::new();
    for (_, a) in &atoms {
        if let GroundAtom::Mpl(m) = a {
            polys.extend(symbol_engine::symbol::slot_polynomials(m).unwrap());
        }
    }
    let basis = gcd_free_basis(&vars, &polys).unwrap();
    let mut dom = SymbolicDomain::new(basis);
    let mut total = symbol_engine::TensorSum::zero(2, Some(dom.basis.clone()));
    for (c, a) in &atoms {
        if let GroundAtom::Mpl(m) = a {
            let s = symbol_mpl(&mut dom, m).unwrap();
            total.add_scaled(&s, *c);
        }
    }
    assert!(!total.is_zero());
    assert!(rho_project(&total).is_zero(), "five-term relation fails mod products");
}

#[test]
fn appendix_five_term_specializes_to_v0() {
    // V0(cr(b,c,d,e), cr(a,c,e,d)) with e=inf, a=0, b=1, c=x, d=1/y gives the
    // five arguments of V0(x, y).
    let src = r#"
identity check.myargs {
  vars: a, b, c, d, e;
  level: exact;
  expr: Li(2)[V0(cr(b, c, d, e), cr(a, c, e, d))];
}
"#;
    let t = parse_identity(src).unwrap();
    let vars = Vars::new(vec!["x", "y"]);
    let x = RationalFunction::var(&vars, 0);
    let y = RationalFunction::var(&vars, 1);
    let mut b = Bindings::new(RationalFunction::int(&vars, 0));
    b.bind("a", PointVal::Fin(RationalFunction::int(&vars, 0)));
    b.bind("b", PointVal::Fin(RationalFunction::int(&vars, 1)));
    b.bind("c", PointVal::Fin(x.clone()));
    b.bind("d", PointVal::Fin(y.recip().unwrap()));
    b.bind("e", PointVal::Inf);
    let ie = expand(&t, &vars, Some(&b)).unwrap();
    let got: Vec<RationalFunction> = ie
        .terms
        .iter()
        .map(|(_, a)| match a {
            GroundAtom::Mpl(m) => m.args[0].clone(),
            _ => unreachable!(),
        })
        .collect();

    let one = RationalFunction::int(&vars, 1);
    let omx = one.sub(&x);
    let omy = one.sub(&y);
    let omxy = one.sub(&x.mul(&y));
    let expect = [
        x.clone(),
        y.clone(),
        omx.div(&omxy).unwrap(),
        omxy.clone(),
        omy.div(&omxy).unwrap(),
    ];
    assert_eq!(got.len(), 5);
    for e in &expect {
        assert!(got.contains(e), "missing argument {} in {:?}", e, got);
    }
}

#[test]
fn expansion_is_equivariant_under_relabeling() {
    // Relabeling bound points permutes atoms without changing the multiset of
    // normalized arguments.
    let src = r#"
identity check.equivariance {
  vars: a, b, c, d, e;
  level: delta22;
  expr: cyc4(3,1; ; a, b, c, d; e);
}
"#;
    let t = parse_identity(src).unwrap();
    let vars = Vars::new(vec!["a", "b", "c", "d", "e"]);
    let ie1 = expand(&t, &vars, None).unwrap();
    // bind with a rotated assignment
    let mut b = Bindings::new(RationalFunction::int(&vars, 0));
    let names = ["a", "b", "c", "d", "e"];
    for (i, n) in names.iter().enumerate() {
        let j = (i + 2) % 4; // rotate the first four
        let idx = if i < 4 { j } else { 4 };
        b.bind(n, PointVal::Fin(RationalFunction::var(&vars, idx)));
    }
    let ie2 = expand(&t, &vars, Some(&b)).unwrap();
    let mut args1: Vec<String> = ie1
        .terms
        .iter()
        .flat_map(|(_, a)| match a {
            GroundAtom::Mpl(m) => m.args.iter().map(|f| format!("{}", f)).collect::<Vec<_>>(),
            _ => vec![],
        })
        .collect();
    let mut args2: Vec<String> = ie2
        .terms
        .iter()
        .flat_map(|(_, a)| match a {
            GroundAtom::Mpl(m) => m.args.iter().map(|f| format!("{}", f)).collect::<Vec<_>>(),
            _ => vec![],
        })
        .collect();
    args1.sort();
    args2.sort();
    assert_eq!(args1, args2);
}

#[test]
fn orbit_expansion_counts_and_signs() {
    let src = r#"
identity check.orbit {
  vars: a, b, c;
  level: exact;
  expr: orbit(sym 3, signed; a, b, c; Li(1,1)[a, b]);
}
"#;
    let t = parse_identity(src).unwrap();
    let vars = Vars::new(vec!["a", "b", "c"]);
    let ie = expand(&t, &vars, None).unwrap();
    assert_eq!(ie.terms.len(), 6);
    // Each (a,b) ordered pair from 3 points appears once, with sign.
    let merged = ie.to_atoms();
    assert_eq!(merged.len(), 6);
    let total: Rat = ie.terms.iter().map(|(c, _)| *c).fold(Rat::ZERO, |a, b| a + b);
    assert_eq!(total, Rat::ZERO);
}

#[test]
fn specialized_grounding_matches_symbolic_evaluation() {
    // Grounding over BigRational equals evaluating the symbolic grounding.
    let src = r#"
identity check.spec {
  vars: x, y;
  level: exact;
  expr: I(2,2)[cr(0, 1, x, y), x*y - 2] + Li(4)[t1(0, 1, x, y, 2, 3)];
}
"#;
    let t = parse_identity(src).unwrap();
    let vars = Vars::new(vec!["x", "y"]);
    let ie = expand(&t, &vars, None).unwrap();

    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let pt = vec![q(7, 2), q(5, 3)];
    let mut vb = Bindings::new(BigRational::from_integer(0.into()));
    vb.bind("x", PointVal::Fin(pt[0].clone()));
    vb.bind("y", PointVal::Fin(pt[1].clone()));
    let mut collected: Vec<(Rat, Vec<BigRational>)> = Vec::new();
    expr_dsl::for_each_value_term(&t.expr, &vb, &mut |c, va| {
        if let expr_dsl::ValueAtom::Mpl { args, .. } = va {
            collected.push((c, args));
        }
        Ok(())
    })
    .unwrap();
    assert_eq!(collected.len(), ie.terms.len());
    for ((c, vals), (cs, atom)) in collected.iter().zip(ie.terms.iter()) {
        assert_eq!(c, cs);
        if let GroundAtom::Mpl(m) = atom {
            for (v, a) in vals.iter().zip(m.args.iter()) {
                assert_eq!(*v, a.eval(&pt).unwrap());
            }
        }
    }
}

#[test]
fn parse_errors_have_positions() {
    let src = "identity bad {\n  vars: x;\n  level: exact;\n  expr: Li(2)[x] ?;\n}\n";
    match parse_file(src) {
        Err(expr_dsl::DslError::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("expected parse error, got {:?}", other),
    }
}
