//! Corpus structure tests: counts, displayed-term presence, round-trips and
//! coverage completeness.

use corpus::gen::s4::{count_up_to_inverses, s4_terms, s4_tilde_template, terms_931};
use corpus::{entries, required_ids, Check};
use exact_kernel::{Rat, RationalFunction, Vars};
use expr_dsl::{expand, parse_identity, print_template, ArgExpr, GroundAtom, Term};

#[test]
fn every_required_id_exists() {
    let got = entries().unwrap();
    let ids: Vec<&str> = got.iter().map(|e| e.id.as_str()).collect();
    for want in required_ids() {
        assert!(ids.contains(&want), "missing corpus id {}", want);
    }
}

#[test]
fn all_entries_roundtrip_through_printer() {
    for e in entries().unwrap() {
        let templates: Vec<&expr_dsl::Template> = match &e.check {
            Check::Symbolic(t) => vec![t],
            Check::Delta22Reduce { lhs, rhs } => vec![lhs, rhs],
            Check::SpecializedOnly { template, .. } => vec![template],
            _ => vec![],
        };
        for t in templates {
            let printed = print_template(t);
            let back = parse_identity(&printed).expect(&format!("{} reparses", e.id));
            assert_eq!(*t, back, "round-trip mismatch for {}", e.id);
        }
    }
}

#[test]
fn s4_tilde_has_122_terms_with_displayed_entries() {
    let t = s4_tilde_template();
    assert_eq!(t.expr.terms.len(), 122);
    // contains -t6(a,b,c,d,e,f) and +6 t1(a,b,c,d,e,f)
    let find = |mac: &str, pts: [char; 6]| -> Rat {
        for (c, term) in &t.expr.terms {
            if let Term::Atom { args, .. } = term {
                if let ArgExpr::Call(name, call_args) = &args[0] {
                    if name == mac {
                        let want: Vec<ArgExpr> =
                            pts.iter().map(|&ch| ArgExpr::Point(ch.to_string())).collect();
                        if call_args == &want {
                            return *c;
                        }
                    }
                }
            }
        }
        Rat::ZERO
    };
    assert_eq!(find("t6", ['a', 'b', 'c', 'd', 'e', 'f']), Rat::int(-1));
    assert_eq!(find("t1", ['a', 'b', 'c', 'd', 'e', 'f']), Rat::int(6));
    // contains +14 u(a,b,e,f)
    let u_coeff = t
        .expr
        .terms
        .iter()
        .find_map(|(c, term)| match term {
            Term::Atom { args, .. } => match &args[0] {
                ArgExpr::Call(name, call_args) if name == "u" => {
                    let want: Vec<ArgExpr> =
                        ['a', 'b', 'e', 'f'].iter().map(|&ch| ArgExpr::Point(ch.to_string())).collect();
                    (call_args == &want).then_some(*c)
                }
                _ => None,
            },
            _ => None,
        })
        .unwrap();
    assert_eq!(u_coeff, Rat::int(14));
    // contains +8 [cr(a,b,f,e) cr(a,d,e,b)] (a product argument)
    let has_prod = t.expr.terms.iter().any(|(c, term)| {
        *c == Rat::int(8)
            && matches!(term, Term::Atom { args, .. }
                if matches!(&args[0], ArgExpr::Mul(l, _)
                    if matches!(&**l, ArgExpr::Cr(p)
                        if p[0] == ArgExpr::Point("a".into()) && p[1] == ArgExpr::Point("b".into())
                            && p[2] == ArgExpr::Point("f".into()) && p[3] == ArgExpr::Point("e".into()))))
    });
    assert!(has_prod);
}

#[test]
fn s4_specialization_has_122_positive_terms() {
    let terms = s4_terms();
    assert_eq!(terms.len(), 122);
    assert!(terms.iter().all(|(c, _)| c.numer() > 0));
    // All arguments distinct after the invert-on-negative normalization.
    let mut keys: Vec<String> = terms.iter().map(|(_, f)| format!("{}", f)).collect();
    keys.sort();
    keys.dedup();
    assert_eq!(keys.len(), 122);

    let vars = Vars::new(vec!["x", "y", "z"]);
    let x = RationalFunction::var(&vars, 0);
    let y = RationalFunction::var(&vars, 1);
    let z = RationalFunction::var(&vars, 2);
    let one = RationalFunction::int(&vars, 1);
    // first displayed argument x(xy-1)z(yz-1)/((x-1)(z-1)) with coefficient 1
    let first = x
        .mul(&x.mul(&y).sub(&one))
        .mul(&z)
        .mul(&y.mul(&z).sub(&one))
        .div(&x.sub(&one).mul(&z.sub(&one)))
        .unwrap();
    assert!(
        terms.iter().any(|(c, f)| *c == Rat::ONE && *f == first),
        "missing the leading displayed argument"
    );
    // +5 [z/(xy)]
    let five = z.div(&x.mul(&y)).unwrap();
    assert!(terms.iter().any(|(c, f)| *c == Rat::int(5) && *f == five));
    // +14 [(z-1)/z]
    let fourteen = z.sub(&one).div(&z).unwrap();
    assert!(terms.iter().any(|(c, f)| *c == Rat::int(14) && *f == fourteen));
}

#[test]
fn equation_931_count_and_typical_term() {
    let terms = terms_931();
    assert_eq!(count_up_to_inverses(&terms), 931, "merged argument count up to inverses");

    // The typical complicated term appears (up to inversion).
    let vars = Vars::new(vec!["x", "y", "z", "w"]);
    let x = RationalFunction::var(&vars, 0);
    let y = RationalFunction::var(&vars, 1);
    let z = RationalFunction::var(&vars, 2);
    let w = RationalFunction::var(&vars, 3);
    let one = RationalFunction::int(&vars, 1);
    let num = one
        .sub(&w)
        .mul(&one.sub(&x.mul(&y)))
        .mul(&one.sub(&y).sub(&z).add(&x.mul(&y).mul(&z)));
    let den = w
        .mul(&one.sub(&x))
        .mul(&one.sub(&y))
        .mul(&y)
        .mul(&one.sub(&w.mul(&z)));
    let typical = num.div(&den).unwrap().neg();
    let inv = typical.recip().unwrap();
    assert!(
        terms.iter().any(|(_, f)| *f == typical || *f == inv),
        "typical complicated argument missing"
    );

    // Symmetric under swapping (x,y) <-> (z,w) as a multiset of arguments.
    let mut keys: Vec<String> = terms.iter().map(|(c, f)| format!("{}|{}", c, f)).collect();
    keys.sort();
    let swap = |f: &RationalFunction| -> RationalFunction {
        // substitute (x,y,z,w) -> (z,w,x,y) by re-evaluating polynomials
        let vals = [z.clone(), w.clone(), x.clone(), y.clone()];
        let eval_poly = |p: &exact_kernel::Poly| -> RationalFunction {
            let mut acc = RationalFunction::int(&vars, 0);
            for (m, c) in &p.terms {
                let mut t = RationalFunction::constant(
                    &vars,
                    num_rational::BigRational::from_integer(c.clone()),
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
        let c = RationalFunction::constant(&vars, f.c.clone());
        c.mul(&eval_poly(&f.num)).div(&eval_poly(&f.den)).unwrap()
    };
    let mut swapped: Vec<String> =
        terms.iter().map(|(c, f)| format!("{}|{}", c, swap(f))).collect();
    swapped.sort();
    assert_eq!(keys, swapped);
}

#[test]
fn five_term_insertion_in_atom_position() {
    // V0(x,y) inside I(3,1)[., z] expands to five atoms I(3,1)[x_i, z].
    let src = r#"
identity check.v0-insert {
  vars: x, y, z;
  level: mod-products;
  expr: I(3,1)[V0(x, y), z];
}
"#;
    let t = parse_identity(src).unwrap();
    let vars = Vars::new(vec!["x", "y", "z"]);
    let ie = expand(&t, &vars, None).unwrap();
    assert_eq!(ie.terms.len(), 5);
    let z = RationalFunction::var(&vars, 2);
    for (c, atom) in &ie.terms {
        assert_eq!(*c, Rat::ONE);
        match atom {
            GroundAtom::Mpl(m) => {
                assert_eq!(m.indices, vec![3, 1]);
                assert_eq!(m.args[1], z);
            }
            _ => panic!("expected MPL atom"),
        }
    }
}
