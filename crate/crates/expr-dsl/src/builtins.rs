//! Built-in argument macros: the appendix cross-ratio products `t1..t6` and
//! `u`, and the nine orbit representatives `f1..f9`.

use crate::ast::ArgExpr;
use crate::field::DslError;

fn cr4(a: &ArgExpr, b: &ArgExpr, c: &ArgExpr, d: &ArgExpr) -> ArgExpr {
    ArgExpr::Cr(Box::new([a.clone(), b.clone(), c.clone(), d.clone()]))
}

fn div(a: ArgExpr, b: ArgExpr) -> ArgExpr {
    ArgExpr::Div(Box::new(a), Box::new(b))
}

fn mul(a: ArgExpr, b: ArgExpr) -> ArgExpr {
    ArgExpr::Mul(Box::new(a), Box::new(b))
}

fn sub(a: ArgExpr, b: ArgExpr) -> ArgExpr {
    ArgExpr::Sub(Box::new(a), Box::new(b))
}

fn one() -> ArgExpr {
    ArgExpr::Num(exact_kernel::Rat::ONE)
}

/// Expand a named macro call into a plain argument expression.
///
/// `t1..t6` are the appendix products of cross ratios in six points; `u` is a
/// single cross ratio; `f1..f9` are the orbit representatives in five points
/// and one extra slot `g` (passed as the sixth argument).
pub fn expand_macro(name: &str, args: &[ArgExpr]) -> Result<ArgExpr, DslError> {
    let need = |n: usize| -> Result<(), DslError> {
        if args.len() != n {
            Err(DslError::MacroArity(name.to_string(), n))
        } else {
            Ok(())
        }
    };
    let v = |i: usize| args[i].clone();
    match name {
        "u" => {
            need(4)?;
            Ok(cr4(&v(0), &v(1), &v(2), &v(3)))
        }
        "t1" => {
            need(6)?;
            // cr(v1,v3,v2,v4) / cr(v1,v5,v2,v6)
            Ok(div(cr4(&v(0), &v(2), &v(1), &v(3)), cr4(&v(0), &v(4), &v(1), &v(5))))
        }
        "t2" => {
            need(6)?;
            // cr(v1,v2,v3,v4) / cr(v1,v2,v5,v6)
            Ok(div(cr4(&v(0), &v(1), &v(2), &v(3)), cr4(&v(0), &v(1), &v(4), &v(5))))
        }
        "t3" => {
            need(6)?;
            // cr(v1,v3,v2,v4) / cr(v1,v2,v5,v6)
            Ok(div(cr4(&v(0), &v(2), &v(1), &v(3)), cr4(&v(0), &v(1), &v(4), &v(5))))
        }
        "t4" => {
            need(6)?;
            // [cr(v1,v3,v2,v4)/cr(v1,v2,v5,v6)] * [cr(v1,v2,v3,v4)/cr(v1,v5,v2,v6)]
            Ok(mul(
                div(cr4(&v(0), &v(2), &v(1), &v(3)), cr4(&v(0), &v(1), &v(4), &v(5))),
                div(cr4(&v(0), &v(1), &v(2), &v(3)), cr4(&v(0), &v(4), &v(1), &v(5))),
            ))
        }
        "t5" => {
            need(6)?;
            // [cr(v1,v2,v3,v4)/cr(v1,v3,v2,v4)] * [cr(v1,v2,v5,v6)/cr(v1,v5,v2,v6)]
            Ok(mul(
                div(cr4(&v(0), &v(1), &v(2), &v(3)), cr4(&v(0), &v(2), &v(1), &v(3))),
                div(cr4(&v(0), &v(1), &v(4), &v(5)), cr4(&v(0), &v(4), &v(1), &v(5))),
            ))
        }
        "t6" => {
            need(6)?;
            // [cr(v1,v3,v2,v4)/cr(v1,v6,v2,v5)] * [cr(v1,v4,v2,v3)/cr(v1,v5,v2,v6)]
            Ok(mul(
                div(cr4(&v(0), &v(2), &v(1), &v(3)), cr4(&v(0), &v(5), &v(1), &v(4))),
                div(cr4(&v(0), &v(3), &v(1), &v(2)), cr4(&v(0), &v(4), &v(1), &v(5))),
            ))
        }
        // f_j(a,b,c,d,e,g): orbit representatives, with pqrs := cr(p,q,r,s).
        "f1" | "f2" | "f3" | "f4" | "f5" | "f6" | "f7" | "f8" | "f9" => {
            need(6)?;
            let (a, b, c, d, e, g) = (v(0), v(1), v(2), v(3), v(4), v(5));
            let eabc = cr4(&e, &a, &b, &c);
            let eabd = cr4(&e, &a, &b, &d);
            let ecbd = cr4(&e, &c, &b, &d);
            let cade = cr4(&c, &a, &d, &e);
            let cabe = cr4(&c, &a, &b, &e);
            let eacd = cr4(&e, &a, &c, &d);
            let abdc = cr4(&a, &b, &d, &c);
            let ebad = cr4(&e, &b, &a, &d);
            let edac = cr4(&e, &d, &a, &c);
            let cabd = cr4(&c, &a, &b, &d);
            let edbc = cr4(&e, &d, &b, &c);
            let dabc = cr4(&d, &a, &b, &c);
            let omg = sub(one(), g.clone());
            Ok(match name {
                "f1" => {
                    // -g (eabc - g) ecbd eabd / (eabd - g)^2
                    let num = mul(
                        mul(ArgExpr::Neg(Box::new(g.clone())), sub(eabc.clone(), g.clone())),
                        mul(ecbd, eabd.clone()),
                    );
                    div(num, ArgExpr::Pow(Box::new(sub(eabd, g)), 2))
                }
                "f2" => {
                    // g^2/(1-g) * cade*cabe/(eabd - g)
                    let lead = div(ArgExpr::Pow(Box::new(g.clone()), 2), omg);
                    mul(lead, div(mul(cade, cabe), sub(eabd, g)))
                }
                "f3" => {
                    // (eabc - g)/(1-g) * eacd/(eabd - g)
                    mul(div(sub(eabc, g.clone()), omg), div(eacd, sub(eabd, g)))
                }
                "f4" => div(mul(abdc, ebad), omg),
                "f5" => {
                    // (eabc - g)/(1 - g/eabd)
                    div(sub(eabc, g.clone()), sub(one(), div(g, eabd)))
                }
                "f6" => div(sub(eabc, g), mul(edac, omg)),
                "f7" => {
                    // (1 - g/cabd)/(1 - g/eabc)
                    div(sub(one(), div(g.clone(), cabd)), sub(one(), div(g, eabc)))
                }
                "f8" => {
                    // (eabc - g)/(g(1-g)) * edbc/eabd
                    mul(div(sub(eabc, g.clone()), mul(g, omg)), div(edbc, eabd))
                }
                "f9" => {
                    // (1 - g/eabc)/(1-g) * dabc
                    mul(div(sub(one(), div(g, eabc)), omg), dabc)
                }
                _ => unreachable!(),
            })
        }
        _ => Err(DslError::UnknownMacro(name.to_string())),
    }
}

/// The five formal arguments of V0(x, y).
pub fn v0_args(x: &ArgExpr, y: &ArgExpr) -> [ArgExpr; 5] {
    let omx = sub(one(), x.clone());
    let omy = sub(one(), y.clone());
    let omxy = sub(one(), mul(x.clone(), y.clone()));
    [
        x.clone(),
        y.clone(),
        div(omx, omxy.clone()),
        omxy.clone(),
        div(omy, omxy),
    ]
}
