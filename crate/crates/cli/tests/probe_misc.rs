use cli::engine::{atom_symbol, build_domain};
use corpus::{entries, Check};
use exact_kernel::{RationalFunction, Vars};
use expr_dsl::GroundAtom;
use num_rational::BigRational;
use num_traits::Zero;
use symbol_engine::{rho_project, MplAtom, TensorSum};

fn solve_over(
    id: &str,
    project: impl Fn(&TensorSum) -> TensorSum,
    cands: impl Fn(&Vars, &std::sync::Arc<Vars>) -> Vec<(String, GroundAtom)>,
) {
    let es = entries().unwrap();
    let e = es.iter().find(|e| e.id == id).unwrap();
    let t = match &e.check { Check::Symbolic(t) => t, _ => panic!() };
    let vars = Vars::new(t.vars.clone());
    let ie = expr_dsl::expand(t, &vars, None).unwrap();
    let entry_atoms: Vec<GroundAtom> = ie.to_atoms().into_iter().map(|(_, a)| a).collect();
    let cands = cands(&vars, &vars);
    let mut dom = build_domain(&vars, cands.iter().map(|(_, a)| a).chain(entry_atoms.iter())).unwrap();
    let mut total = TensorSum::zero(4, Some(dom.basis.clone()));
    for (c, a) in ie.to_atoms() {
        total.add_scaled(&atom_symbol(&mut dom, &a).unwrap(), c);
    }
    let resid = project(&total);
    println!("{}: residual {}", id, resid.term_count());
    let sys: Vec<TensorSum> = cands.iter().map(|(_, a)| project(&atom_symbol(&mut dom, a).unwrap())).collect();
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
    println!("  consistent: {}", consistent);
    if consistent {
        for (ri, &c) in pivots.iter().enumerate() {
            if !rows[ri][n].is_zero() {
                println!("  {} = {}", cands[c].0, rows[ri][n]);
            }
        }
    }
}

#[test]
#[ignore]
fn probe_prop6() {
    solve_over("prop6.xi20", rho_project, |_, vars| {
        let x = RationalFunction::var(vars, 0);
        let y = RationalFunction::var(vars, 1);
        let one = RationalFunction::int(vars, 1);
        let omx = one.sub(&x);
        let omy = one.sub(&y);
        let xmy = x.sub(&y);
        let mut out = Vec::new();
        let pows = [-1i32, 0, 1];
        // monomials in x, y, 1-x, 1-y, x-y with small exponents
        for &a in &pows { for &b in &pows { for &c in &pows { for &d in &pows { for &e in &[-1i32, 0, 1, 2] {
            if [a,b,c,d,e].iter().all(|&v| v == 0) { continue; }
            let f = x.pow(a).unwrap().mul(&omx.pow(b).unwrap()).mul(&y.pow(c).unwrap()).mul(&omy.pow(d).unwrap()).mul(&xmy.pow(e).unwrap());
            if f.is_constant() { continue; }
            for sgn in [1i64, -1] {
                let g = if sgn == 1 { f.clone() } else { f.neg() };
                out.push((format!("[{}]", g), GroundAtom::Mpl(MplAtom::li(vec![4], vec![g]))));
            }
        }}}}}
        // depth-2 candidates for the xi part
        let d2: Vec<(&str, RationalFunction)> = vec![
            ("x", x.clone()),
            ("y", y.clone()),
            ("y/x", y.div(&x).unwrap()),
            ("x/y", x.div(&y).unwrap()),
        ];
        for (na, a) in &d2 {
            for (nb, b) in &d2 {
                if a == b { continue; }
                out.push((
                    format!("I31({},{})", na, nb),
                    GroundAtom::Mpl(MplAtom::iint(vec![3, 1], vec![a.clone(), b.clone()])),
                ));
                out.push((
                    format!("I22({},{})", na, nb),
                    GroundAtom::Mpl(MplAtom::iint(vec![2, 2], vec![a.clone(), b.clone()])),
                ));
            }
        }
        out
    });
    panic!("done");
}
