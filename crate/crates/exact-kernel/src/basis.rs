//! Gcd-free bases and multiplicative group words.
//!
//! A [`FactorBasis`] is an ordered list of pairwise-coprime, primitive,
//! positive-leading, non-constant polynomials over which every input of a
//! check factors exactly (up to a rational constant). A [`GroupWord`] is a
//! sparse integer exponent vector over such a basis; it represents a rational
//! function modulo nonzero rational constants, which is exactly the coefficient
//! group symbols live in. No irreducibility is claimed or needed: pairwise
//! coprimality already makes the word of a function unique, so tensor
//! cancellation is decidable.

use crate::gcd::poly_gcd;
use crate::poly::{Poly, Vars};
use crate::ratfun::RationalFunction;
use crate::KernelError;
use smallvec::SmallVec;
use std::fmt;
use std::sync::Arc;

/// Ordered pairwise-coprime basis, frozen after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorBasis {
    pub vars: Arc<Vars>,
    pub elements: Vec<Poly>,
}

impl FactorBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: u32) -> &Poly {
        &self.elements[i as usize]
    }

    /// Factor a nonzero polynomial into basis exponents; the leftover must be
    /// constant or the polynomial does not factor over this basis.
    pub fn factor_poly(&self, p: &Poly) -> Result<SmallVec<[(u32, i32); 4]>, KernelError> {
        if p.is_zero() {
            return Err(KernelError::ZeroInput);
        }
        let mut rem = p.primitive_positive().1;
        let mut out: SmallVec<[(u32, i32); 4]> = SmallVec::new();
        if rem.is_constant() {
            return Ok(out);
        }
        for (i, b) in self.elements.iter().enumerate() {
            let mut e = 0i32;
            while let Some(q) = rem.exact_div(b) {
                rem = q;
                e += 1;
                if rem.is_constant() {
                    break;
                }
            }
            if e > 0 {
                out.push((i as u32, e));
            }
            if rem.is_constant() {
                break;
            }
        }
        if !rem.is_constant() {
            return Err(KernelError::NotFactorable);
        }
        Ok(out)
    }

    /// Factor a rational function into a group word (constants dropped).
    pub fn factor(&self, f: &RationalFunction) -> Result<GroupWord, KernelError> {
        if f.is_zero() {
            return Err(KernelError::ZeroInput);
        }
        let mut exps: SmallVec<[(u32, i32); 4]> = self.factor_poly(&f.num)?;
        for (i, e) in self.factor_poly(&f.den)? {
            match exps.iter_mut().find(|(j, _)| *j == i) {
                Some((_, ee)) => *ee -= e,
                None => exps.push((i, -e)),
            }
        }
        exps.retain(|(_, e)| *e != 0);
        exps.sort_by_key(|(i, _)| *i);
        Ok(GroupWord { exps })
    }

    /// Reconstruct the rational function (up to constant) named by a word.
    pub fn reconstruct(&self, w: &GroupWord) -> RationalFunction {
        let mut num = Poly::one(&self.vars);
        let mut den = Poly::one(&self.vars);
        for &(i, e) in &w.exps {
            let b = self.element(i);
            if e > 0 {
                num = num.mul(&b.pow(e as u32));
            } else {
                den = den.mul(&b.pow((-e) as u32));
            }
        }
        RationalFunction::normalize(num, den).expect("basis elements are nonzero")
    }
}

/// Incremental builder with coprime refinement.
#[derive(Debug, Clone, Default)]
pub struct BasisBuilder {
    elements: Vec<Poly>,
}

impl BasisBuilder {
    pub fn new() -> BasisBuilder {
        BasisBuilder { elements: Vec::new() }
    }

    /// Insert one polynomial, splitting existing elements as needed so the
    /// list stays pairwise coprime. Inputs are first split along repeated
    /// factors (gcd with partial derivatives), so powers like `x*(1-y)^2`
    /// contribute `x` and `1-y` rather than one opaque element; exponent
    /// structure in slots stays visible that way. Deterministic for a fixed
    /// insertion order.
    pub fn insert(&mut self, p: &Poly) -> Result<(), KernelError> {
        if p.is_zero() {
            return Err(KernelError::ZeroInput);
        }
        let mut todo: Vec<Poly> = squarefree_split(&p.primitive_positive().1);
        'next: while let Some(f) = todo.pop() {
            if f.is_constant() {
                continue;
            }
            for i in 0..self.elements.len() {
                let g = poly_gcd(&f, &self.elements[i]);
                if g.is_constant() {
                    continue;
                }
                let b = self.elements.remove(i);
                let b_rest = b.exact_div(&g).expect("gcd divides");
                let f_rest = f.exact_div(&g).expect("gcd divides");
                if !b_rest.is_constant() {
                    todo.push(b_rest.primitive_positive().1);
                }
                todo.push(g);
                if !f_rest.is_constant() {
                    todo.push(f_rest.primitive_positive().1);
                }
                continue 'next;
            }
            self.elements.push(f);
        }
        Ok(())
    }

    /// Insert numerator and denominator of a rational function.
    pub fn insert_ratfun(&mut self, f: &RationalFunction) -> Result<(), KernelError> {
        if f.is_zero() {
            return Err(KernelError::ZeroInput);
        }
        if !f.num.is_constant() {
            self.insert(&f.num)?;
        }
        if !f.den.is_constant() {
            self.insert(&f.den)?;
        }
        Ok(())
    }

    pub fn freeze(self, vars: &Arc<Vars>) -> Arc<FactorBasis> {
        Arc::new(FactorBasis { vars: vars.clone(), elements: self.elements })
    }
}

/// Split a primitive polynomial into factors without repeated content:
/// `g = gcd(p, dp/dx_1, ..., dp/dx_n)` separates the repeated part, which is
/// split recursively. Returns non-constant primitive factors whose product is
/// `p` up to a constant.
fn squarefree_split(p: &Poly) -> Vec<Poly> {
    if p.is_constant() {
        return vec![];
    }
    let mut g = Poly::zero(&p.vars);
    for v in p.support() {
        g = poly_gcd(&g, &p.derivative(v));
        if g.is_one() {
            break;
        }
    }
    let g = poly_gcd(&g, p);
    if g.is_constant() {
        return vec![p.clone()];
    }
    let rest = p.exact_div(&g).expect("gcd divides");
    let mut out = squarefree_split(&g.primitive_positive().1);
    if !rest.is_constant() {
        out.push(rest.primitive_positive().1);
    }
    out
}

/// Build a gcd-free basis from a list of nonzero polynomials.
pub fn gcd_free_basis(vars: &Arc<Vars>, inputs: &[Poly]) -> Result<Arc<FactorBasis>, KernelError> {
    let mut b = BasisBuilder::new();
    for p in inputs {
        b.insert(p)?;
    }
    Ok(b.freeze(vars))
}

/// Sparse exponent vector over a factor basis; the group law is exponent
/// addition and the identity is the empty word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupWord {
    /// Sorted by basis index; no zero exponents.
    pub exps: SmallVec<[(u32, i32); 4]>,
}

impl GroupWord {
    pub fn identity() -> GroupWord {
        GroupWord::default()
    }

    pub fn is_identity(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, o: &GroupWord) -> GroupWord {
        let mut out: SmallVec<[(u32, i32); 4]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < o.exps.len() {
            let (ia, ea) = self.exps[i];
            let (ib, eb) = o.exps[j];
            match ia.cmp(&ib) {
                std::cmp::Ordering::Less => {
                    out.push((ia, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((ib, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    if ea + eb != 0 {
                        out.push((ia, ea + eb));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&o.exps[j..]);
        GroupWord { exps: out }
    }

    pub fn inv(&self) -> GroupWord {
        GroupWord { exps: self.exps.iter().map(|&(i, e)| (i, -e)).collect() }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (k, (i, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "b{}^{}", i, e)?;
        }
        Ok(())
    }
}
