//! Expanded tensor sums and the shuffle product.

use exact_kernel::{FactorBasis, Rat};
use rustc_hash::FxHashMap;
use smallvec::SmallVec;
use std::fmt;
use std::sync::Arc;

/// Tuple of basis indices naming an elementary tensor.
pub type TensorKey = SmallVec<[u32; 4]>;

/// Q-linear combination of elementary weight-`weight` tensors.
///
/// `basis` names the slot alphabet when the sum was produced symbolically;
/// prime-alphabet sums from specialized checks carry `None`.
#[derive(Clone, Debug)]
pub struct TensorSum {
    pub weight: usize,
    pub basis: Option<Arc<FactorBasis>>,
    pub terms: FxHashMap<TensorKey, Rat>,
}

impl TensorSum {
    pub fn zero(weight: usize, basis: Option<Arc<FactorBasis>>) -> TensorSum {
        TensorSum { weight, basis, terms: FxHashMap::default() }
    }

    /// The empty tensor (weight 0, coefficient 1): unit of the shuffle algebra.
    pub fn unit(basis: Option<Arc<FactorBasis>>) -> TensorSum {
        let mut t = TensorSum::zero(0, basis);
        t.terms.insert(SmallVec::new(), Rat::ONE);
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn insert(&mut self, key: TensorKey, c: Rat) {
        debug_assert_eq!(key.len(), self.weight);
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(key) {
            Entry::Occupied(mut e) => {
                let v = *e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &TensorSum, s: Rat) {
        debug_assert_eq!(self.weight, o.weight);
        if s.is_zero() {
            return;
        }
        for (k, &c) in &o.terms {
            self.insert(k.clone(), c * s);
        }
    }

    pub fn scale(&mut self, s: Rat) {
        if s.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v = *v * s;
        }
    }

    pub fn neg(&self) -> TensorSum {
        let mut t = self.clone();
        t.scale(Rat::int(-1));
        t
    }

    pub fn sub(&self, o: &TensorSum) -> TensorSum {
        let mut t = self.clone();
        t.add_scaled(o, Rat::int(-1));
        t
    }

    pub fn add(&self, o: &TensorSum) -> TensorSum {
        let mut t = self.clone();
        t.add_scaled(o, Rat::ONE);
        t
    }

    /// Largest-coefficient terms, for failure witnesses. Deterministic order.
    pub fn witnesses(&self, n: usize) -> Vec<(TensorKey, Rat)> {
        let mut v: Vec<(TensorKey, Rat)> = self.terms.iter().map(|(k, &c)| (k.clone(), c)).collect();
        v.sort_by(|a, b| b.1.abs().cmp(&a.1.abs()).then_with(|| a.0.cmp(&b.0)));
        v.truncate(n);
        v
    }

    /// Extend every term by one slot drawn from a group-word expansion.
    /// `word` is the factor list of the new slot; an empty word contributes
    /// nothing (constant slots kill their term).
    pub fn extend_by_word(&self, word: &[(u32, i32)], sign: i64, out: &mut TensorSum) {
        debug_assert_eq!(out.weight, self.weight + 1);
        for (k, &c) in &self.terms {
            for &(idx, e) in word {
                let mut key = k.clone();
                key.push(idx);
                out.insert(key, c * Rat::int(sign * e as i64));
            }
        }
    }
}

impl PartialEq for TensorSum {
    fn eq(&self, o: &TensorSum) -> bool {
        self.weight == o.weight && self.terms == o.terms
    }
}

impl Eq for TensorSum {}

impl fmt::Display for TensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&TensorKey> = self.terms.keys().collect();
        keys.sort();
        for (i, k) in keys.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*(", self.terms[*k])?;
            for (j, idx) in k.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                match &self.basis {
                    Some(b) => write!(f, "{}", b.element(*idx))?,
                    None => write!(f, "p{}", idx)?,
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Re-express a symbolic tensor sum over another basis. Every slot element of
/// the old basis must factor over the new one.
pub fn rebase(
    t: &TensorSum,
    new_basis: &Arc<FactorBasis>,
) -> Result<TensorSum, exact_kernel::KernelError> {
    let old = t.basis.as_ref().expect("rebase needs a symbolic tensor sum");
    if Arc::ptr_eq(old, new_basis) {
        return Ok(t.clone());
    }
    // Word of each old element over the new basis.
    let mut words: Vec<Vec<(u32, i32)>> = Vec::with_capacity(old.len());
    for e in &old.elements {
        words.push(new_basis.factor_poly(e)?.to_vec());
    }
    let mut out = TensorSum::zero(t.weight, Some(new_basis.clone()));
    for (k, &c) in &t.terms {
        // Multilinear expansion of the product of slot words.
        let mut stack: Vec<(TensorKey, Rat)> = vec![(SmallVec::new(), c)];
        for &slot in k.iter() {
            let w = &words[slot as usize];
            let mut next = Vec::with_capacity(stack.len() * w.len());
            for (key, coeff) in &stack {
                for &(idx, e) in w {
                    let mut kk = key.clone();
                    kk.push(idx);
                    next.push((kk, *coeff * Rat::int(e as i64)));
                }
            }
            stack = next;
        }
        for (key, coeff) in stack {
            out.insert(key, coeff);
        }
    }
    Ok(out)
}

/// Interleaving patterns: all ways to place `a` marked slots among `a + b`.
fn interleavings(a: usize, b: usize) -> Vec<Vec<bool>> {
    fn go(a: usize, b: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if a == 0 && b == 0 {
            out.push(cur.clone());
            return;
        }
        if a > 0 {
            cur.push(true);
            go(a - 1, b, cur, out);
            cur.pop();
        }
        if b > 0 {
            cur.push(false);
            go(a, b - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(a, b, &mut Vec::new(), &mut out);
    out
}

/// Shuffle product: bilinear extension of slot-word shuffles; weights add.
pub fn shuffle(u: &TensorSum, v: &TensorSum) -> TensorSum {
    let basis = u.basis.clone().or_else(|| v.basis.clone());
    let mut out = TensorSum::zero(u.weight + v.weight, basis);
    if u.is_zero() || v.is_zero() {
        return out;
    }
    let patterns = interleavings(u.weight, v.weight);
    for (ku, &cu) in &u.terms {
        for (kv, &cv) in &v.terms {
            let c = cu * cv;
            for pat in &patterns {
                let mut key: TensorKey = SmallVec::with_capacity(u.weight + v.weight);
                let (mut i, mut j) = (0, 0);
                for &from_u in pat {
                    if from_u {
                        key.push(ku[i]);
                        i += 1;
                    } else {
                        key.push(kv[j]);
                        j += 1;
                    }
                }
                out.insert(key, c);
            }
        }
    }
    out
}

/// Concatenation product (tensor product of symbols); weights add.
pub fn concat(u: &TensorSum, v: &TensorSum) -> TensorSum {
    let basis = u.basis.clone().or_else(|| v.basis.clone());
    let mut out = TensorSum::zero(u.weight + v.weight, basis);
    for (ku, &cu) in &u.terms {
        for (kv, &cv) in &v.terms {
            let mut key = ku.clone();
            key.extend_from_slice(kv);
            out.insert(key, cu * cv);
        }
    }
    out
}
