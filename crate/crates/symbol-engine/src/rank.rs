//! Exact rank of a family of tensor sums over Q.

use crate::tensor::{TensorKey, TensorSum};
use num_rational::BigRational;
use num_traits::Zero;
use rustc_hash::FxHashMap;

/// Rank over Q of the span of `family`, by sparse Gaussian elimination on the
/// elementary-tensor coordinates. Coefficients are lifted to `BigRational`;
/// elimination order is deterministic.
pub fn tensor_rank(family: &[TensorSum]) -> usize {
    if family.is_empty() {
        return 0;
    }
    let weight = family[0].weight;
    assert!(family.iter().all(|t| t.weight == weight), "mixed weights in rank computation");

    // Stable column indexing.
    let mut keys: Vec<TensorKey> = {
        let mut set: Vec<TensorKey> = family
            .iter()
            .flat_map(|t| t.terms.keys().cloned())
            .collect();
        set.sort();
        set.dedup();
        set
    };
    let col: FxHashMap<TensorKey, usize> =
        keys.drain(..).enumerate().map(|(i, k)| (k, i)).collect();

    // Rows as sparse sorted vectors.
    let mut rows: Vec<Vec<(usize, BigRational)>> = family
        .iter()
        .map(|t| {
            let mut r: Vec<(usize, BigRational)> =
                t.terms.iter().map(|(k, c)| (col[k], c.to_big())).collect();
            r.sort_by_key(|&(i, _)| i);
            r
        })
        .filter(|r| !r.is_empty())
        .collect();

    let mut pivots: Vec<(usize, Vec<(usize, BigRational)>)> = Vec::new();
    let mut rank = 0;
    while let Some(mut row) = rows.pop() {
        loop {
            if row.is_empty() {
                break;
            }
            let lead = row[0].0;
            match pivots.iter().find(|(p, _)| *p == lead) {
                None => {
                    rank += 1;
                    pivots.push((lead, row));
                    break;
                }
                Some((_, prow)) => {
                    // row -= (row.lead / prow.lead) * prow
                    let factor = &row[0].1 / &prow[0].1;
                    let mut merged: Vec<(usize, BigRational)> = Vec::new();
                    let (mut i, mut j) = (0usize, 0usize);
                    while i < row.len() && j < prow.len() {
                        match row[i].0.cmp(&prow[j].0) {
                            std::cmp::Ordering::Less => {
                                merged.push(row[i].clone());
                                i += 1;
                            }
                            std::cmp::Ordering::Greater => {
                                merged.push((prow[j].0, -(&factor * &prow[j].1)));
                                j += 1;
                            }
                            std::cmp::Ordering::Equal => {
                                let v = &row[i].1 - &factor * &prow[j].1;
                                if !v.is_zero() {
                                    merged.push((row[i].0, v));
                                }
                                i += 1;
                                j += 1;
                            }
                        }
                    }
                    merged.extend(row[i..].iter().cloned());
                    for (c, v) in &prow[j..] {
                        merged.push((*c, -(&factor * v)));
                    }
                    row = merged;
                }
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_kernel::Rat;
    use smallvec::SmallVec;

    fn t(keys: &[(&[u32], i64)]) -> TensorSum {
        let mut s = TensorSum::zero(keys[0].0.len(), None);
        for (k, c) in keys {
            s.insert(SmallVec::from_slice(k), Rat::int(*c));
        }
        s
    }

    #[test]
    fn empty_family() {
        assert_eq!(tensor_rank(&[]), 0);
    }

    #[test]
    fn scalar_multiples() {
        let a = t(&[(&[0, 1], 1), (&[1, 0], 3)]);
        let mut b = a.clone();
        b.scale(Rat::int(2));
        assert_eq!(tensor_rank(&[a, b]), 1);
    }

    #[test]
    fn independent_rows() {
        let a = t(&[(&[0, 1], 1)]);
        let b = t(&[(&[1, 0], 1)]);
        let c = t(&[(&[0, 1], 1), (&[1, 0], 1)]);
        assert_eq!(tensor_rank(&[a, b, c]), 2);
    }
}
