use cli::engine::{atom_symbol, build_domain};
use exact_kernel::{Rat, Vars};
use expr_dsl::{expand, ArgExpr, Expr, GroundAtom, Level, Template, Term};
use num_rational::BigRational;
use num_traits::Zero;
use symbol_engine::{rho_project, TensorSum};

fn pts(indices: Vec<u32>, points: Vec<String>) -> Term {
    Term::Pts { indices, points: points.into_iter().map(ArgExpr::Point).collect() }
}

fn template_of(terms: Vec<(Rat, Term)>) -> Template {
    Template {
        name: "probe".into(),
        vars: vec!["a1", "a2", "a3", "b1", "b2", "b3", "c"].into_iter().map(String::from).collect(),
        level: Level::ModProducts,
        expect: expr_dsl::Expect::Pass,
        cost: expr_dsl::Cost::Cheap,
        tags: vec![],
        tolerance: None,
        expr: Expr { terms },
    }
}

#[test]
#[ignore]
fn probe() {
    let a = |i: usize| format!("a{}", (i % 3) + 1);
    let b = |j: usize| format!("b{}", (j % 3) + 1);
    let c = "c".to_string();
    // candidate families
    let mut cands: Vec<(String, Term)> = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            cands.push((
                format!("F1(i={},j={})", i, j),
                pts(vec![1, 1, 1, 1], vec![a(i), b(j), b(j + 1), b(j + 2), a(i + 1), c.clone(), a(i + 2)]),
            ));
            cands.push((
                format!("F2(i={},j={})", i, j),
                pts(vec![1, 1, 1, 1], vec![b(j), b(j + 1), b(j + 2), a(i), c.clone(), a(i + 1), a(i + 2)]),
            ));
            cands.push((
                format!("F3(i={},j={})", i, j),
                pts(vec![1, 1, 1, 1], vec![c.clone(), b(j), b(j + 1), a(i), b(j + 2), a(i + 1), a(i + 2)]),
            ));
        }
    }
    // Li4 candidates join the system with free coefficients.
    for i in 0..3 {
        for j in 0..3 {
            cands.push((format!("L1(i={},j={})", i, j), pts(vec![4], vec![c.clone(), a(i), b(j), b(j + 1)])));
            cands.push((format!("L2(i={},j={})", i, j), pts(vec![4], vec![c.clone(), b(j), b(j + 1), a(i)])));
            cands.push((format!("L3(i={},j={})", i, j), pts(vec![4], vec![c.clone(), b(j + 1), a(i), b(j)])));
        }
    }
    let rhs_terms: Vec<(Rat, Term)> = Vec::new();
    let vars = Vars::new(vec!["a1", "a2", "a3", "b1", "b2", "b3", "c"]);
    let all_t = template_of(
        cands.iter().map(|(_, t)| (Rat::ONE, t.clone())).chain(rhs_terms.iter().cloned()).collect(),
    );
    let ie_all = expand(&all_t, &vars, None).unwrap();
    let ground: Vec<GroundAtom> = ie_all.terms.iter().map(|(_, a)| a.clone()).collect();
    let mut dom = build_domain(&vars, ground.iter()).unwrap();

    let sym_of = |dom: &mut symbol_engine::SymbolicDomain, term: &Term, coeff: Rat| -> TensorSum {
        let t = template_of(vec![(coeff, term.clone())]);
        let ie = expand(&t, &vars, None).unwrap();
        let mut out = TensorSum::zero(4, Some(dom.basis.clone()));
        for (cc, a) in ie.to_atoms() {
            out.add_scaled(&atom_symbol(dom, &a).unwrap(), cc);
        }
        out
    };
    let _ = rhs_terms;
    let target = TensorSum::zero(4, Some(dom.basis.clone()));
    let sys: Vec<TensorSum> = cands
        .iter()
        .map(|(_, term)| rho_project(&sym_of(&mut dom, term, Rat::ONE)))
        .collect();

    use std::collections::BTreeSet;
    let mut keys: BTreeSet<Vec<u32>> = BTreeSet::new();
    for t in sys.iter().chain(std::iter::once(&target)) {
        for k in t.terms.keys() { keys.insert(k.to_vec()); }
    }
    let keys: Vec<Vec<u32>> = keys.into_iter().collect();
    let n = sys.len();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for k in &keys {
        let mut row = Vec::with_capacity(n + 1);
        for t in &sys {
            row.push(t.terms.get(k.as_slice()).map(|x| x.to_big()).unwrap_or_else(BigRational::zero));
        }
        row.push(target.terms.get(k.as_slice()).map(|x| x.to_big()).unwrap_or_else(BigRational::zero));
        rows.push(row);
    }
    let mut r = 0usize;
    let mut pivots = Vec::new();
    for cc in 0..n {
        if let Some(p) = (r..rows.len()).find(|&i| !rows[i][cc].is_zero()) {
            rows.swap(r, p);
            let inv = rows[r][cc].clone();
            for v in rows[r].iter_mut() { *v = &*v / &inv; }
            for i in 0..rows.len() {
                if i != r && !rows[i][cc].is_zero() {
                    let f = rows[i][cc].clone();
                    let pr = rows[r].clone();
                    for (v, pv) in rows[i].iter_mut().zip(pr.iter()) { *v = &*v - &f * pv; }
                }
            }
            pivots.push(cc);
            r += 1;
        }
    }
    // nullspace: free columns parameterize solutions
    let free: Vec<usize> = (0..n).filter(|ci| !pivots.contains(ci)).collect();
    println!("rank {} nullity {}", pivots.len(), free.len());
    for &fc in &free {
        let mut sol = vec![BigRational::zero(); n];
        sol[fc] = BigRational::from_integer(1.into());
        for (ri, &pc) in pivots.iter().enumerate() {
            let v = rows[ri][fc].clone();
            if !v.is_zero() {
                sol[pc] = -v;
            }
        }
        // print only null vectors that involve F's
        let f_count = (0..n).filter(|&i| !sol[i].is_zero() && cands[i].0.starts_with('F')).count();
        if f_count > 0 {
            println!("-- null vector (free col {}):", cands[fc].0);
            for i in 0..n {
                if !sol[i].is_zero() {
                    println!("   {} = {}", cands[i].0, sol[i]);
                }
            }
        }
    }
    panic!("done");
}
