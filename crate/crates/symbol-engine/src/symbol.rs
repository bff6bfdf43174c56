//! The symbol recursion for iterated integrals, generic over the slot domain.
//!
//! `S(I(a0; a1..an; a_{n+1})) = sum_i S(I(a0; ..âi..; a_{n+1})) ⊗ [(ai − ai+1)/(ai − ai−1)]`
//! with each ratio expanded multilinearly as the difference of two single-entry
//! slots, entries that are identically zero absent (their dlog form does not
//! exist), constant entries killing their term, and `S(I(a;;b)) = 1`. The
//! only genuine divergence is a word whose first letter equals the base point
//! or whose last letter equals the endpoint; that raises [`SymbolError::Divergent`].

use crate::atom::{AtomKind, MplAtom};
use crate::tensor::TensorSum;
use exact_kernel::intfactor::{factor, PrimeTable};
use exact_kernel::{BigRational, FactorBasis, KernelError, Rat, RationalFunction};
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use smallvec::SmallVec;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("divergent iterated integral: word boundary letter equals an endpoint")]
    Divergent,
    #[error("slot entry does not factor over the frozen basis")]
    NotFactorable,
    #[error("specialized letter value overflows the machine factorization range")]
    FactorOverflow,
    #[error("degenerate specialization: an argument or slot entry vanishes")]
    DegenerateSpecialization,
    #[error("tensor weight mismatch: expected {expected}, got {got}")]
    WrongWeight { expected: usize, got: usize },
    #[error("kernel error: {0}")]
    Kernel(#[from] KernelError),
}

/// A word over the slot alphabet: (index, exponent) pairs.
pub type Word = SmallVec<[(u32, i32); 4]>;

/// Letters of an iterated-integral word; ∞ is admitted projectively (slot
/// factors containing it are dropped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Letter<T> {
    Val(T),
    Inf,
}

/// Field-like values the MPL word construction needs.
pub trait FieldValue: Clone + PartialEq {
    fn zero_of(&self) -> Self;
    fn one_of(&self) -> Self;
    fn is_zero_val(&self) -> bool;
    fn mul_val(&self, o: &Self) -> Self;
    fn recip_val(&self) -> Self;
}

impl FieldValue for RationalFunction {
    fn zero_of(&self) -> Self {
        RationalFunction::constant(self.vars(), BigRational::zero())
    }
    fn one_of(&self) -> Self {
        RationalFunction::int(self.vars(), 1)
    }
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
    fn mul_val(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn recip_val(&self) -> Self {
        self.recip().expect("reciprocal of nonzero value")
    }
}

impl FieldValue for BigRational {
    fn zero_of(&self) -> Self {
        BigRational::zero()
    }
    fn one_of(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
    fn mul_val(&self, o: &Self) -> Self {
        self * o
    }
    fn recip_val(&self) -> Self {
        self.recip()
    }
}

/// Where slot entries get coded into words.
pub trait SlotDomain {
    type Value: FieldValue;

    /// Word of `a - b`. Identically-zero differences and differences
    /// involving ∞ return the empty word (the piece is absent); constant
    /// nonzero differences also return the empty word (they kill the term,
    /// since constants are modded out of the coefficient group).
    fn diff_word(&mut self, a: &Letter<Self::Value>, b: &Letter<Self::Value>)
        -> Result<Word, SymbolError>;

    fn basis(&self) -> Option<Arc<FactorBasis>>;
}

/// Symbolic domain: slot entries are rational functions factored over a
/// frozen gcd-free basis.
pub struct SymbolicDomain {
    pub basis: Arc<FactorBasis>,
    cache: FxHashMap<RationalFunction, Word>,
}

impl SymbolicDomain {
    pub fn new(basis: Arc<FactorBasis>) -> SymbolicDomain {
        SymbolicDomain { basis, cache: FxHashMap::default() }
    }

    pub fn word_of(&mut self, f: &RationalFunction) -> Result<Word, SymbolError> {
        if f.is_zero() {
            return Err(SymbolError::DegenerateSpecialization);
        }
        if let Some(w) = self.cache.get(f) {
            return Ok(w.clone());
        }
        let w = self
            .basis
            .factor(f)
            .map_err(|_| SymbolError::NotFactorable)?
            .exps;
        self.cache.insert(f.clone(), w.clone());
        Ok(w)
    }

    /// Expanded elementary tensor of explicit slot functions (multilinear in
    /// each slot); handy for transcribing displayed tensors.
    pub fn tensor_of(
        &mut self,
        coeff: Rat,
        slots: &[RationalFunction],
    ) -> Result<TensorSum, SymbolError> {
        let mut acc = TensorSum::unit(Some(self.basis.clone()));
        acc.scale(coeff);
        for s in slots {
            let w = self.word_of(s)?;
            let mut next = TensorSum::zero(acc.weight + 1, Some(self.basis.clone()));
            acc.extend_by_word(&w, 1, &mut next);
            acc = next;
        }
        Ok(acc)
    }

    /// Symbol of `log f`: the single-slot tensor of the word of `f`.
    pub fn log_tensor(&mut self, f: &RationalFunction) -> Result<TensorSum, SymbolError> {
        self.tensor_of(Rat::ONE, std::slice::from_ref(f))
    }
}

impl SlotDomain for SymbolicDomain {
    type Value = RationalFunction;

    fn diff_word(
        &mut self,
        a: &Letter<RationalFunction>,
        b: &Letter<RationalFunction>,
    ) -> Result<Word, SymbolError> {
        let (a, b) = match (a, b) {
            (Letter::Inf, _) | (_, Letter::Inf) => return Ok(Word::new()),
            (Letter::Val(a), Letter::Val(b)) => (a, b),
        };
        let d = a.sub(b);
        if d.is_zero() || d.is_constant() {
            return Ok(Word::new());
        }
        self.word_of(&d)
    }

    fn basis(&self) -> Option<Arc<FactorBasis>> {
        Some(self.basis.clone())
    }
}

/// Specialized domain: letters are exact rationals, slots are coded as words
/// over integer primes (sign dropped — constants are modded out).
pub struct PrimeDomain {
    pub table: PrimeTable,
    cache: FxHashMap<BigRational, Word>,
}

impl PrimeDomain {
    pub fn new() -> PrimeDomain {
        PrimeDomain { table: PrimeTable::new(), cache: FxHashMap::default() }
    }

    pub fn word_of(&mut self, v: &BigRational) -> Result<Word, SymbolError> {
        if v.is_zero() {
            return Err(SymbolError::DegenerateSpecialization);
        }
        if let Some(w) = self.cache.get(v) {
            return Ok(w.clone());
        }
        let mut exps: FxHashMap<u32, i32> = FxHashMap::default();
        let num = v.numer().abs();
        let den = v.denom().abs();
        for (value, sign) in [(num, 1i32), (den, -1i32)] {
            let u: u128 = value
                .try_into()
                .map_err(|_| SymbolError::FactorOverflow)?;
            for (p, e) in factor(u) {
                let idx = self.table.intern(p);
                *exps.entry(idx).or_insert(0) += sign * e as i32;
            }
        }
        let mut w: Word = exps.into_iter().filter(|&(_, e)| e != 0).collect();
        w.sort_by_key(|&(i, _)| i);
        self.cache.insert(v.clone(), w.clone());
        Ok(w)
    }
}

impl Default for PrimeDomain {
    fn default() -> Self {
        Self::new()
    }
}

impl SlotDomain for PrimeDomain {
    type Value = BigRational;

    fn diff_word(
        &mut self,
        a: &Letter<BigRational>,
        b: &Letter<BigRational>,
    ) -> Result<Word, SymbolError> {
        let (a, b) = match (a, b) {
            (Letter::Inf, _) | (_, Letter::Inf) => return Ok(Word::new()),
            (Letter::Val(a), Letter::Val(b)) => (a, b),
        };
        let d = a - b;
        if d.is_zero() {
            return Ok(Word::new());
        }
        self.word_of(&d)
    }

    fn basis(&self) -> Option<Arc<FactorBasis>> {
        None
    }
}

fn letters_equal<T: PartialEq>(a: &Letter<T>, b: &Letter<T>) -> bool {
    match (a, b) {
        (Letter::Inf, Letter::Inf) => true,
        (Letter::Val(x), Letter::Val(y)) => x == y,
        _ => false,
    }
}

/// Symbol of `I(a0; word; a_end)` as a fully expanded tensor sum.
pub fn symbol_iterated<D: SlotDomain>(
    dom: &mut D,
    a0: &Letter<D::Value>,
    word: &[Letter<D::Value>],
    a_end: &Letter<D::Value>,
) -> Result<TensorSum, SymbolError> {
    let n = word.len();
    assert!(n >= 1 && n <= 16, "word length out of range");
    if letters_equal(&word[0], a0) || letters_equal(&word[n - 1], a_end) {
        return Err(SymbolError::Divergent);
    }
    let basis = dom.basis();
    let full: usize = (1 << n) - 1;
    let mut memo: Vec<Option<TensorSum>> = vec![None; full + 1];
    memo[0] = Some(TensorSum::unit(basis.clone()));

    let mut masks: Vec<usize> = (1..=full).collect();
    masks.sort_by_key(|m| m.count_ones());

    for mask in masks {
        let k = mask.count_ones() as usize;
        let mut sum = TensorSum::zero(k, basis.clone());
        let positions: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        for (pi, &i) in positions.iter().enumerate() {
            let sub = mask & !(1 << i);
            let left = if pi == 0 { a0 } else { &word[positions[pi - 1]] };
            let right = if pi + 1 == positions.len() { a_end } else { &word[positions[pi + 1]] };
            let w_plus = dom.diff_word(&word[i], right)?;
            let w_minus = dom.diff_word(&word[i], left)?;
            let base = memo[sub].as_ref().expect("smaller mask computed first");
            base.extend_by_word(&w_plus, 1, &mut sum);
            base.extend_by_word(&w_minus, -1, &mut sum);
        }
        memo[mask] = Some(sum);
    }
    Ok(memo[full].take().expect("full mask computed"))
}

/// Builds the iterated-integral word of an MPL atom: the letter list and the
/// overall sign.
///
/// For `I_{k1..kd}(x1..xd)` the word is `x1, 0^{k1-1}, ..., xd, 0^{kd-1}`
/// (first argument in word order), which is the convention that reproduces
/// the nine-term `I_{3,1}` symbol; the conventions test pins it against the
/// reversed alternative. `Li_{n1..nd}(z1..zd)` maps to `(-1)^d I_{n1..nd}`
/// with arguments `u_i = 1/(z_i ... z_d)`; the `Li_{1,1}` reduction to
/// dilogarithms pins that assignment against both front-product variants.
pub fn mpl_letters<T: FieldValue>(
    kind: AtomKind,
    indices: &[u32],
    args: &[T],
) -> Result<(Vec<T>, Rat), SymbolError> {
    mpl_letters_with(kind, indices, args, WordOrder::ArgsInOrder, LiArgs::TailProducts)
}

/// Word order for the I-atom letter list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordOrder {
    /// `x1, 0^{k1-1}, x2, 0^{k2-1}, ...`
    ArgsInOrder,
    /// The reverse of the above letter list (last argument first).
    Reversed,
}

/// Assignment of Li arguments to I arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiArgs {
    /// `u_i = 1/(z_i ... z_d)` (tail products).
    TailProducts,
    /// `u_i = 1/(z_1 ... z_{d+1-i})` (front products, reversed assignment).
    FrontReversed,
    /// `u_i = 1/(z_1 ... z_i)` (front products in order).
    FrontInOrder,
}

pub fn mpl_letters_with<T: FieldValue>(
    kind: AtomKind,
    indices: &[u32],
    args: &[T],
    order: WordOrder,
    li_args: LiArgs,
) -> Result<(Vec<T>, Rat), SymbolError> {
    assert_eq!(indices.len(), args.len());
    let d = args.len();
    if args.iter().any(|a| a.is_zero_val()) {
        return Err(SymbolError::DegenerateSpecialization);
    }
    let (iargs, sign): (Vec<T>, Rat) = match kind {
        AtomKind::I => (args.to_vec(), Rat::ONE),
        AtomKind::Li => {
            // Partial products of the z's from the front: pre[i] = z1...z_{i+1}.
            let mut pre: Vec<T> = Vec::with_capacity(d);
            let mut acc = args[0].one_of();
            for z in args {
                acc = acc.mul_val(z);
                pre.push(acc.clone());
            }
            let u: Vec<T> = (0..d)
                .map(|i| match li_args {
                    LiArgs::TailProducts => {
                        // 1/(z_i...z_d) = pre[i-1] / pre[d-1] inverted
                        let tail = if i == 0 {
                            pre[d - 1].clone()
                        } else {
                            pre[d - 1].mul_val(&pre[i - 1].recip_val())
                        };
                        tail.recip_val()
                    }
                    LiArgs::FrontReversed => pre[d - 1 - i].recip_val(),
                    LiArgs::FrontInOrder => pre[i].recip_val(),
                })
                .collect();
            let sign = if d % 2 == 0 { Rat::ONE } else { Rat::int(-1) };
            (u, sign)
        }
    };
    let mut letters: Vec<T> = Vec::with_capacity(indices.iter().map(|&k| k as usize).sum());
    let zero = args[0].zero_of();
    for (i, &k) in indices.iter().enumerate() {
        letters.push(iargs[i].clone());
        for _ in 1..k {
            letters.push(zero.clone());
        }
    }
    if order == WordOrder::Reversed {
        letters.reverse();
    }
    Ok((letters, sign))
}

/// Symbol of an MPL atom over the symbolic domain.
pub fn symbol_mpl(dom: &mut SymbolicDomain, atom: &MplAtom) -> Result<TensorSum, SymbolError> {
    let (letters, sign) = mpl_letters(atom.kind, &atom.indices, &atom.args)?;
    let vars = atom.args[0].vars();
    let zero = Letter::Val(RationalFunction::constant(vars, BigRational::zero()));
    let one = Letter::Val(RationalFunction::int(vars, 1));
    let word: Vec<Letter<RationalFunction>> = letters.into_iter().map(Letter::Val).collect();
    let mut t = symbol_iterated(dom, &zero, &word, &one)?;
    t.scale(sign);
    Ok(t)
}

/// Symbol of an MPL atom over the specialized (prime) domain, with exact
/// rational argument values.
pub fn symbol_mpl_values(
    dom: &mut PrimeDomain,
    kind: AtomKind,
    indices: &[u32],
    values: &[BigRational],
) -> Result<TensorSum, SymbolError> {
    let (letters, sign) = mpl_letters(kind, indices, values)?;
    let zero = Letter::Val(BigRational::zero());
    let one = Letter::Val(BigRational::one());
    let word: Vec<Letter<BigRational>> = letters.into_iter().map(Letter::Val).collect();
    let mut t = symbol_iterated(dom, &zero, &word, &one)?;
    t.scale(sign);
    Ok(t)
}

/// Polynomials that can occur in slot entries of an atom's symbol: numerators
/// and denominators of all pairwise differences of `{letters} ∪ {0, 1}`.
/// A superset is harmless; the checker feeds these to the basis builder
/// before any symbol is computed.
pub fn slot_polynomials(atom: &MplAtom) -> Result<Vec<exact_kernel::Poly>, SymbolError> {
    let (letters, _) = mpl_letters(atom.kind, &atom.indices, &atom.args)?;
    let vars = atom.args[0].vars();
    let mut pts = letters;
    pts.push(RationalFunction::constant(vars, BigRational::zero()));
    pts.push(RationalFunction::int(vars, 1));
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let d = pts[i].sub(&pts[j]);
            if d.is_zero() || d.is_constant() {
                continue;
            }
            if !d.num.is_constant() {
                out.push(d.num.clone());
            }
            if !d.den.is_constant() {
                out.push(d.den.clone());
            }
        }
    }
    Ok(out)
}
