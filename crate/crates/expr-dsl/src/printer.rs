//! Canonical printer; `parse(print(t)) == t` on every template.

use crate::ast::*;
use exact_kernel::Rat;
use symbol_engine::AtomKind;
use std::fmt::Write;

fn rat_str(r: Rat) -> String {
    if r.denom() == 1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn arg_str(a: &ArgExpr) -> String {
    prec_str(a, 0)
}

/// Precedence: 0 add, 1 mul, 2 pow/primary.
fn prec_str(a: &ArgExpr, prec: u8) -> String {
    let (s, p) = match a {
        ArgExpr::Num(r) => {
            let neg = r.numer() < 0;
            (rat_str(*r), if neg { 0 } else { 2 })
        }
        ArgExpr::Point(n) => (n.clone(), 2),
        ArgExpr::Inf => ("inf".to_string(), 2),
        ArgExpr::Add(x, y) => (format!("{} + {}", prec_str(x, 0), prec_str(y, 1)), 0),
        ArgExpr::Sub(x, y) => (format!("{} - {}", prec_str(x, 0), prec_str(y, 1)), 0),
        ArgExpr::Mul(x, y) => (format!("{}*{}", prec_str(x, 1), prec_str(y, 2)), 1),
        ArgExpr::Div(x, y) => (format!("{}/{}", prec_str(x, 1), prec_str(y, 2)), 1),
        ArgExpr::Neg(x) => (format!("-{}", prec_str(x, 2)), 1),
        ArgExpr::Pow(x, e) => (format!("{}^{}", prec_str(x, 2), e), 2),
        ArgExpr::Cr(p) => (
            format!("cr({}, {}, {}, {})", arg_str(&p[0]), arg_str(&p[1]), arg_str(&p[2]), arg_str(&p[3])),
            2,
        ),
        ArgExpr::Call(name, args) => {
            let inner: Vec<String> = args.iter().map(arg_str).collect();
            (format!("{}({})", name, inner.join(", ")), 2)
        }
        ArgExpr::V0(x, y) => (format!("V0({}, {})", arg_str(x), arg_str(y)), 2),
        ArgExpr::SplCr(e, quad) => (
            format!(
                "spl({}; {}, {}, {}, {})",
                arg_str(e),
                arg_str(&quad[0]),
                arg_str(&quad[1]),
                arg_str(&quad[2]),
                arg_str(&quad[3])
            ),
            2,
        ),
    };
    if p < prec {
        format!("({})", s)
    } else {
        s
    }
}

fn indices_str(k: &[u32]) -> String {
    k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn args_str(args: &[ArgExpr]) -> String {
    args.iter().map(arg_str).collect::<Vec<_>>().join(", ")
}

fn kind_str(k: AtomKind) -> &'static str {
    match k {
        AtomKind::I => "I",
        AtomKind::Li => "Li",
    }
}

fn factor_str(f: &Factor) -> String {
    match f {
        Factor::Atom { kind, indices, args } => {
            format!("{}({})[{}]", kind_str(*kind), indices_str(indices), args_str(args))
        }
        Factor::Log(a) => format!("log[{}]", arg_str(a)),
    }
}

fn term_str(t: &Term) -> String {
    match t {
        Term::Atom { kind, indices, args } => {
            format!("{}({})[{}]", kind_str(*kind), indices_str(indices), args_str(args))
        }
        Term::Pts { indices, points } => {
            format!("pts({})[{}]", indices_str(indices), args_str(points))
        }
        Term::Cyc4 { indices, pre, cycled, post } => {
            format!(
                "cyc4({}; {}; {}; {})",
                indices_str(indices),
                args_str(pre),
                args_str(cycled),
                args_str(post)
            )
        }
        Term::Prod(fs) => {
            format!("prod({})", fs.iter().map(factor_str).collect::<Vec<_>>().join(", "))
        }
        Term::Tens(fs) => {
            format!("tens({})", fs.iter().map(factor_str).collect::<Vec<_>>().join(", "))
        }
        Term::Orbit { group, signed, points, body } => {
            let g = match group {
                GroupSpec::Sym(n) => format!("sym {}", n),
                GroupSpec::Cyc(n) => format!("cyc {}", n),
            };
            format!(
                "orbit({}, {}; {}; {})",
                g,
                if *signed { "signed" } else { "plain" },
                points.join(", "),
                expr_str(body)
            )
        }
    }
}

fn expr_str(e: &Expr) -> String {
    let mut s = String::new();
    for (i, (c, t)) in e.terms.iter().enumerate() {
        let mag = c.abs();
        let neg = c.numer() < 0;
        if i == 0 {
            if neg {
                s.push_str("- ");
            }
        } else if neg {
            s.push_str(" - ");
        } else {
            s.push_str(" + ");
        }
        if mag != Rat::ONE {
            write!(s, "{}*", rat_str(mag)).unwrap();
        }
        s.push_str(&term_str(t));
    }
    s
}

/// Canonical one-block form.
pub fn print_template(t: &Template) -> String {
    let mut s = String::new();
    writeln!(s, "identity {} {{", t.name).unwrap();
    writeln!(s, "  vars: {};", t.vars.join(", ")).unwrap();
    writeln!(s, "  level: {};", t.level.as_str()).unwrap();
    writeln!(s, "  expect: {};", t.expect.as_str()).unwrap();
    writeln!(s, "  cost: {};", t.cost.as_str()).unwrap();
    if !t.tags.is_empty() {
        writeln!(s, "  tags: {};", t.tags.join(", ")).unwrap();
    }
    if let Some(tol) = t.tolerance {
        writeln!(s, "  tolerance: {:e};", tol).unwrap();
    }
    writeln!(s, "  expr: {};", expr_str(&t.expr)).unwrap();
    writeln!(s, "}}").unwrap();
    s
}
