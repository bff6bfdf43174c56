use exact_kernel::BigRational;
use expr_dsl::{cross_ratio, PointVal};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symbol_engine::{rho_patterns, symbol_mpl_values, AtomKind, PrimeDomain};

const P: u128 = (1u128 << 61) - 1;
fn mulp(a: u64, b: u64) -> u64 { ((a as u128 * b as u128) % P) as u64 }
fn addp(a: u64, b: u64) -> u64 { ((a as u128 + b as u128) % P) as u64 }
fn powp(mut b: u64, mut e: u64) -> u64 { let mut r = 1; while e > 0 { if e & 1 == 1 { r = mulp(r, b); } b = mulp(b, b); e >>= 1; } r }
fn invp(a: u64) -> u64 { powp(a, (P - 2) as u64) }

/// fingerprints of the rho-projected symbol of a pts-atom (7 points, 1111) or (4 points, 4)
fn fingerprints(
    dom: &mut PrimeDomain,
    rv: &mut Vec<[Vec<u64>; 4]>,
    rng: &mut ChaCha8Rng,
    draws: usize,
    indices: &[u32],
    points: &[BigRational],
) -> Vec<u64> {
    let d = indices.len();
    let mut args = Vec::with_capacity(d);
    for k in 0..d {
        let quad = [
            PointVal::Fin(points[0].clone()),
            PointVal::Fin(points[1].clone()),
            PointVal::Fin(points[2].clone()),
            PointVal::Fin(points[3 + k].clone()),
        ];
        args.push(cross_ratio(&quad).unwrap());
    }
    let t = symbol_mpl_values(dom, AtomKind::I, indices, &args).unwrap();
    while rv.len() < draws {
        rv.push([Vec::new(), Vec::new(), Vec::new(), Vec::new()]);
    }
    for dv in rv.iter_mut() {
        for pos in dv.iter_mut() {
            while pos.len() < dom.table.len() {
                pos.push(rng.gen_range(1..(P as u64)));
            }
        }
    }
    let pats = rho_patterns(4);
    let mut out = vec![0u64; draws];
    for (k, c) in &t.terms {
        let cf = {
            let n = c.numer();
            let nf = if n >= 0 { n as u64 % P as u64 } else { P as u64 - ((-n) as u64 % P as u64) };
            mulp(nf, invp(c.denom() as u64 % P as u64))
        };
        for (dr, dv) in rv.iter().enumerate().take(draws) {
            let mut acc = 0u64;
            for (perm, sgn) in &pats {
                let mut prod = cf;
                for (pos, &slot) in perm.iter().enumerate() {
                    prod = mulp(prod, dv[pos][k[slot as usize] as usize]);
                }
                if *sgn >= 0 { acc = addp(acc, prod); } else { acc = addp(acc, P as u64 - prod); }
            }
            out[dr] = addp(out[dr], acc);
        }
    }
    out
}

#[test]
#[ignore]
fn probe() {
    let draws = 1400usize;
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let vals: Vec<BigRational> = {
        let mut pool: Vec<i64> = (2..60).collect();
        use rand::seq::SliceRandom;
        pool.shuffle(&mut rng);
        pool[..7].iter().map(|&v| BigRational::from_integer(v.into())).collect()
    };
    // assignment: a1,a2,a3 = vals[0..3], b1,b2,b3 = vals[3..6], c = vals[6]
    let av = |i: usize| vals[i % 3].clone();
    let bv = |j: usize| vals[3 + j % 3].clone();
    let cv = vals[6].clone();

    // Full space: choose 3 of 7 positions for the a-triple (placed in cyclic
    // order, forward or reversed), one of the remaining 4 for c, b-triple in
    // the rest (cyclic order, forward or reversed).
    let mut shapes: Vec<(String, Vec<usize>)> = Vec::new();
    for amask in 0..(1u32 << 7) {
        if amask.count_ones() != 3 { continue; }
        let apos: Vec<usize> = (0..7).filter(|&i| amask & (1 << i) != 0).collect();
        let rest: Vec<usize> = (0..7).filter(|&i| amask & (1 << i) == 0).collect();
        for (ci, &cpos) in rest.iter().enumerate() {
            let bpos: Vec<usize> = rest.iter().enumerate().filter(|(k, _)| *k != ci).map(|(_, &p)| p).collect();
            for arev in [false, true] {
                for brev in [false, true] {
                    let mut v = vec![0usize; 7];
                    for (k, &p) in apos.iter().enumerate() {
                        v[p] = if arev { 2 - k } else { k };
                    }
                    for (k, &p) in bpos.iter().enumerate() {
                        v[p] = 3 + if brev { 2 - k } else { k };
                    }
                    v[cpos] = 6;
                    shapes.push((format!("P[{:?}]", v), v));
                }
            }
        }
    }
    let mut dom = PrimeDomain::new();
    let mut rv: Vec<[Vec<u64>; 4]> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let mut cols: Vec<Vec<u64>> = Vec::new();
    for (name, shape) in &shapes {
        for i in 0..3usize {
            for j in 0..3usize {
                let pts: Vec<BigRational> = shape
                    .iter()
                    .map(|&code| match code {
                        0..=2 => av(i + code),
                        3..=5 => bv(j + code - 3),
                        _ => cv.clone(),
                    })
                    .collect();
                // skip degenerate point lists (repeated points)
                let mut sorted: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != 7 {
                    continue;
                }
                names.push(format!("{}(i={},j={})", name, i, j));
                cols.push(fingerprints(&mut dom, &mut rv, &mut rng, draws, &[1, 1, 1, 1], &pts));
            }
        }
    }
    // Li4 candidates: all 24 orderings of {c, a_i, b_j, b_{j+1}}
    let perms4: Vec<Vec<usize>> = {
        let mut out = Vec::new();
        let mut idx = [0usize, 1, 2, 3];
        fn heap(k: usize, arr: &mut [usize; 4], out: &mut Vec<Vec<usize>>) {
            if k == 1 { out.push(arr.to_vec()); return; }
            for i in 0..k {
                heap(k - 1, arr, out);
                if k % 2 == 0 { arr.swap(i, k - 1); } else { arr.swap(0, k - 1); }
            }
        }
        heap(4, &mut idx, &mut out);
        out.truncate(24);
        out
    };
    for i in 0..3usize {
        for j in 0..3usize {
            let base = [cv.clone(), av(i), bv(j), bv(j + 1)];
            for (pi, perm) in perms4.iter().enumerate() {
                let pts: Vec<BigRational> = perm.iter().map(|&k| base[k].clone()).collect();
                names.push(format!("L{}(i={},j={})", pi, i, j));
                cols.push(fingerprints(&mut dom, &mut rv, &mut rng, draws, &[4], &pts));
            }
        }
    }
    println!("candidates: {}", cols.len());
    // nullspace of the draws x n matrix
    let n = cols.len();
    let mut rows: Vec<Vec<u64>> = (0..draws).map(|d| (0..n).map(|c| cols[c][d]).collect()).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..n {
        if let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) {
            rows.swap(r, p);
            let inv = invp(rows[r][c]);
            for v in rows[r].iter_mut() { *v = mulp(*v, inv); }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    let pr = rows[r].clone();
                    for (v, pv) in rows[i].iter_mut().zip(pr.iter()) {
                        *v = addp(*v, P as u64 - mulp(f, *pv));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
    }
    println!("rank {} nullity {}", pivots.len(), n - pivots.len());
    let one = BigRational::one();
    let _ = one;
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut found = 0;
    for &fc in &free {
        let mut sol = vec![0u64; n];
        sol[fc] = 1;
        for (ri, &pc) in pivots.iter().enumerate() {
            if rows[ri][fc] != 0 {
                sol[pc] = P as u64 - rows[ri][fc];
            }
        }
        let psup: Vec<usize> = (0..n).filter(|&i| sol[i] != 0 && names[i].starts_with("P[")).collect();
        let lsup: Vec<usize> = (0..n).filter(|&i| sol[i] != 0 && names[i].starts_with('L')).collect();
        // want: ~18 P terms with unit coefficients, few distinct shapes, L's with +-2
        let distinct: std::collections::BTreeSet<&str> =
            psup.iter().map(|&i| names[i].split(']').next().unwrap()).collect();
        let units = psup.iter().all(|&i| sol[i] == 1 || sol[i] == P as u64 - 1);
        if !psup.is_empty() && !lsup.is_empty() && distinct.len() <= 3 && psup.len() <= 21 && units {
            found += 1;
            if found <= 4 {
                println!("-- candidate null vector ({} P-terms, {} L-terms):", psup.len(), lsup.len());
                for i in psup.iter().chain(lsup.iter()) {
                    let v = sol[*i];
                    let disp = if v > (P as u64) / 2 { format!("-{}", P as u64 - v) } else { format!("{}", v) };
                    println!("   {} = {}", names[*i], disp);
                }
            }
        }
    }
    println!("total filtered null vectors: {}", found);
    let _ = rows;
    panic!("done");
}
