//! Small construction helpers shared by the generators.

use exact_kernel::{Poly, Rat, RationalFunction};
use expr_dsl::ArgExpr;
use num_traits::{Signed, ToPrimitive};

pub fn pt(c: char) -> ArgExpr {
    ArgExpr::Point(c.to_string())
}

pub fn ptn(name: &str) -> ArgExpr {
    ArgExpr::Point(name.to_string())
}

pub mod arg {
    use super::*;

    pub fn cr(a: ArgExpr, b: ArgExpr, c: ArgExpr, d: ArgExpr) -> ArgExpr {
        ArgExpr::Cr(Box::new([a, b, c, d]))
    }

    pub fn mul(a: ArgExpr, b: ArgExpr) -> ArgExpr {
        ArgExpr::Mul(Box::new(a), Box::new(b))
    }

    pub fn div(a: ArgExpr, b: ArgExpr) -> ArgExpr {
        ArgExpr::Div(Box::new(a), Box::new(b))
    }

    pub fn add(a: ArgExpr, b: ArgExpr) -> ArgExpr {
        ArgExpr::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: ArgExpr, b: ArgExpr) -> ArgExpr {
        ArgExpr::Sub(Box::new(a), Box::new(b))
    }

    pub fn num(n: i64) -> ArgExpr {
        ArgExpr::Num(Rat::int(n))
    }
}

fn mono_to_arg(p: &Poly, term: usize) -> Option<ArgExpr> {
    let (m, _) = &p.terms[term];
    let mut acc: Option<ArgExpr> = None;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let base = ArgExpr::Point(p.vars.name(i).to_string());
        let f = if e == 1 { base } else { ArgExpr::Pow(Box::new(base), e as i32) };
        acc = Some(match acc {
            None => f,
            Some(prev) => arg::mul(prev, f),
        });
    }
    acc
}

fn poly_to_arg(p: &Poly) -> ArgExpr {
    if p.is_zero() {
        return arg::num(0);
    }
    let mut acc: Option<ArgExpr> = None;
    for i in 0..p.terms.len() {
        let coeff = &p.terms[i].1;
        let c_abs = coeff.abs().to_i64().expect("polynomial coefficient fits i64");
        let mono = mono_to_arg(p, i);
        let piece = match (c_abs, mono) {
            (1, Some(m)) => m,
            (_, Some(m)) => arg::mul(arg::num(c_abs), m),
            (_, None) => arg::num(c_abs),
        };
        acc = Some(match acc {
            None => {
                if coeff.is_negative() {
                    ArgExpr::Neg(Box::new(piece))
                } else {
                    piece
                }
            }
            Some(prev) => {
                if coeff.is_negative() {
                    arg::sub(prev, piece)
                } else {
                    arg::add(prev, piece)
                }
            }
        });
    }
    acc.unwrap()
}

/// Render a rational function as an explicit argument expression
/// (`c * num / den`), for generator-emitted identity files.
pub fn rf_to_arg(f: &RationalFunction) -> ArgExpr {
    if f.is_zero() {
        return arg::num(0);
    }
    let num_i64 = f.c.numer().to_i64().expect("constant fits i64");
    let den_i64 = f.c.denom().to_i64().expect("constant fits i64");
    let c = Rat::new(num_i64, den_i64);
    let mut expr = poly_to_arg(&f.num);
    if !c.abs().is_one() || f.num.is_one() {
        if f.num.is_one() {
            expr = ArgExpr::Num(c.abs());
        } else {
            expr = arg::mul(ArgExpr::Num(c.abs()), expr);
        }
    }
    if !f.den.is_one() {
        expr = arg::div(expr, poly_to_arg(&f.den));
    }
    if c.numer() < 0 {
        expr = ArgExpr::Neg(Box::new(expr));
    }
    expr
}

trait RatIsOne {
    fn is_one(&self) -> bool;
}

impl RatIsOne for Rat {
    fn is_one(&self) -> bool {
        *self == Rat::ONE
    }
}
