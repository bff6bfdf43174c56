use cli::engine::{atom_symbol, build_domain};
use exact_kernel::{Rat, Vars};
use expr_dsl::GroundAtom;
use symbol_engine::{rho_patterns, TensorSum};

/// (rho_3 ⊗ id): apply the weight-3 projector to the first three slots.
fn rho3_x_id(t: &TensorSum) -> TensorSum {
    let pats = rho_patterns(3);
    let mut out = TensorSum::zero(4, t.basis.clone());
    for (k, &c) in &t.terms {
        for (p, s) in &pats {
            let key: symbol_engine::TensorKey = p
                .iter()
                .map(|&i| k[i as usize])
                .chain(std::iter::once(k[3]))
                .collect();
            out.insert(key, c * Rat::int(*s));
        }
    }
    out
}

#[test]
#[ignore]
fn solve_kappa2() {
    use exact_kernel::RationalFunction;
    use num_rational::BigRational;
    use num_traits::Zero;
    use symbol_engine::MplAtom;
    let t = corpus::gen::misc::kappa2_template();
    let vars = Vars::new(t.vars.clone());
    let ie = expr_dsl::expand(&t, &vars, None).unwrap();
    let entry_atoms: Vec<GroundAtom> = ie.to_atoms().into_iter().map(|(_, a)| a).collect();
    let x = RationalFunction::var(&vars, 0);
    let z = RationalFunction::var(&vars, 1);
    let one = RationalFunction::int(&vars, 1);
    let omx = one.sub(&x);
    let omz = one.sub(&z);
    let mut cands: Vec<(String, GroundAtom)> = Vec::new();
    let pows = [-1i32, 0, 1];
    for &a in &pows { for &b in &pows { for &c in &pows { for &d in &pows {
        if a == 0 && b == 0 && c == 0 && d == 0 { continue; }
        let f = x.pow(a).unwrap().mul(&omx.pow(b).unwrap()).mul(&z.pow(c).unwrap()).mul(&omz.pow(d).unwrap());
        if f.is_constant() { continue; }
        for sgn in [1i64, -1] {
            let g = if sgn == 1 { f.clone() } else { f.neg() };
            cands.push((format!("[{}]", g), GroundAtom::Mpl(MplAtom::li(vec![4], vec![g]))));
        }
    }}}}
    // also the composite printed arg x(1-z)^2/((1-x)^2 z) and inverses
    let comp = x.mul(&omz).mul(&omz).div(&omx.mul(&omx).mul(&z)).unwrap();
    cands.push(("[x(1-z)^2/((1-x)^2z)]".into(), GroundAtom::Mpl(MplAtom::li(vec![4], vec![comp.clone()]))));
    cands.push(("[-x(1-z)^2/((1-x)^2z)]".into(), GroundAtom::Mpl(MplAtom::li(vec![4], vec![comp.neg()]))));
    let mut dom = build_domain(&vars, cands.iter().map(|(_, a)| a).chain(entry_atoms.iter())).unwrap();
    let mut total = TensorSum::zero(4, Some(dom.basis.clone()));
    for (c, a) in ie.to_atoms() {
        total.add_scaled(&atom_symbol(&mut dom, &a).unwrap(), c);
    }
    let resid = rho3_x_id(&total);
    println!("kappa2 residual: {}", resid.term_count());
    let sys: Vec<TensorSum> = cands.iter().map(|(_, a)| rho3_x_id(&atom_symbol(&mut dom, a).unwrap())).collect();
    use std::collections::BTreeSet;
    let mut keys: BTreeSet<Vec<u32>> = BTreeSet::new();
    for t in sys.iter().chain(std::iter::once(&resid)) {
        for k in t.terms.keys() { keys.insert(k.to_vec()); }
    }
    let keys: Vec<Vec<u32>> = keys.into_iter().collect();
    let n = sys.len();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for k in &keys {
        let mut row: Vec<BigRational> = Vec::with_capacity(n + 1);
        for t in &sys {
            row.push(t.terms.get(k.as_slice()).map(|c| c.to_big()).unwrap_or_else(BigRational::zero));
        }
        row.push(resid.terms.get(k.as_slice()).map(|c| c.to_big()).unwrap_or_else(BigRational::zero));
        rows.push(row);
    }
    let mut r = 0usize;
    let mut pivots = Vec::new();
    for c in 0..n {
        if let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) {
            rows.swap(r, p);
            let inv = rows[r][c].clone();
            for v in rows[r].iter_mut() { *v = &*v / &inv; }
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let f = rows[i][c].clone();
                    let pr = rows[r].clone();
                    for (v, pv) in rows[i].iter_mut().zip(pr.iter()) { *v = &*v - &f * pv; }
                }
            }
            pivots.push(c);
            r += 1;
        }
    }
    let consistent = rows.iter().all(|row| !(row[..n].iter().all(|v| v.is_zero()) && !row[n].is_zero()));
    println!("consistent: {}", consistent);
    if consistent {
        for (ri, &c) in pivots.iter().enumerate() {
            if !rows[ri][n].is_zero() {
                println!("  {} = {}", cands[c].0, rows[ri][n]);
            }
        }
    }
    panic!("done");
}

#[test]
#[ignore]
fn probe() {
    for (name, t) in [
        ("kappa1", corpus::gen::misc::kappa1_template()),
        ("kappa2", corpus::gen::misc::kappa2_template()),
    ] {
        let vars = Vars::new(t.vars.clone());
        let ie = expr_dsl::expand(&t, &vars, None).unwrap();
        let atoms: Vec<GroundAtom> = ie.to_atoms().into_iter().map(|(_, a)| a).collect();
        let mut dom = build_domain(&vars, atoms.iter()).unwrap();
        let mut total = TensorSum::zero(4, Some(dom.basis.clone()));
        for (c, a) in ie.to_atoms() {
            total.add_scaled(&atom_symbol(&mut dom, &a).unwrap(), c);
        }
        let r = rho3_x_id(&total);
        println!("{}: (rho3 x id) residual = {}", name, r.term_count());
    }
    panic!("probe");
}
