//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Heavy criteria that genuinely need minutes to hours (the exact 122-term
//! check over three variables, the four-variable equation, the orbit
//! families) run in `#[ignore]`d tests; `cargo test -p cli --test acceptance
//! -- --ignored` runs them all. Each ignored criterion still has a
//! non-ignored companion that runs its fast route (specialized trials,
//! generator counts, numeric spot checks) so a default build exercises every
//! criterion's machinery.

use cli::engine::{meets_expectation, run_entry, EngineOpts};
use cli::report::Verdict;
use corpus::{entries, CorpusEntry};

fn entry(id: &str) -> CorpusEntry {
    entries()
        .unwrap()
        .into_iter()
        .find(|e| e.id == id)
        .unwrap_or_else(|| panic!("corpus entry {} missing", id))
}

fn run(id: &str) -> cli::report::CheckReport {
    let e = entry(id);
    let opts = EngineOpts::default();
    let r = run_entry(&e, &opts);
    let ok = meets_expectation(e.expect, r.verdict);
    println!(
        "ACCEPTANCE {:<28} {:<12} {}{}",
        id,
        r.verdict.as_str(),
        if ok { "PASS" } else { "FAIL" },
        r.note.as_ref().map(|n| format!("  [{}]", n)).unwrap_or_default()
    );
    assert!(ok, "{} failed: verdict {:?} note {:?}", id, r.verdict, r.note);
    r
}

fn run_within(id: &str, seconds: u64) -> cli::report::CheckReport {
    let start = std::time::Instant::now();
    let r = run(id);
    let elapsed = start.elapsed().as_secs();
    assert!(
        elapsed <= seconds,
        "{} took {}s, budget {}s",
        id,
        elapsed,
        seconds
    );
    r
}

// Criterion 1: the computed I_{3,1} symbol equals the nine-term expression
// exactly under exactly one word convention, in under a second.
#[test]
fn criterion_01_convention_calibration() {
    run_within("eq1.i31-nineterm", 1);
    // The "exactly one convention" half lives in the symbol-engine
    // conventions test, which asserts the reversed word fails.
}

// Criterion 2: the antisymmetrization of the symbol is the displayed
// alternating tensor (and the symmetrized combination dies).
#[test]
fn criterion_02_delta_reduction() {
    run_within("prop2.delta-reduced", 1);
    run_within("cor3.i31-antisym", 1);
}

// Criterion 3: the six two-term symmetries at the delta level and the
// refined two-term equation with its Li4 terms mod products.
#[test]
fn criterion_03_two_term_symmetries() {
    let start = std::time::Instant::now();
    for id in ["thm4.s1", "thm4.s2", "thm4.s3", "thm4.s4", "thm4.s5", "thm4.s6"] {
        run(id);
    }
    run("thm4.refined-li4");
    assert!(start.elapsed().as_secs() < 5);
}

// Criterion 4: the fully explicit combination has exact symbol zero and
// numeric residual below 1e-30 at two admissible points, constant 4*pi^4/45.
#[test]
fn criterion_04_numeric_identity() {
    let start = std::time::Instant::now();
    run("x333.symbol");
    run("x333.numeric");
    assert!(start.elapsed().as_secs() < 30);
}

// Criterion 5: the 120-permutation families have delta22-projected rank 6,
// spanned by the listed six permutations.
#[test]
fn criterion_05_rank_six() {
    let start = std::time::Instant::now();
    run("rank.i31");
    run("rank.i22");
    run("rank.i13");
    assert!(start.elapsed().as_secs() < 60);
}

// Criterion 6: exact relations between I31 and I22, the six three-term
// inter-conversions, and the twenty-term reduction.
#[test]
fn criterion_06_depth2_relations() {
    let start = std::time::Instant::now();
    for id in [
        "i31.via-i22",
        "i31.via-i22.sym",
        "i31.via-i22.antisym",
        "conv3.i22-via-i31",
        "conv3.i13-via-i31",
        "conv3.i31-via-i22",
        "conv3.i13-via-i22",
        "conv3.i31-via-i13",
        "conv3.i22-via-i13",
        "prop6.xi20",
    ] {
        run(id);
    }
    assert!(start.elapsed().as_secs() < 60);
}

// Criterion 7: depth-3 symmetry and the 36-term reduction at the delta level.
#[test]
fn criterion_07_depth3() {
    let start = std::time::Instant::now();
    run("thm7.swap-ef");
    run("thm7.cyc3");
    run("thm8.i211-via-i31");
    assert!(start.elapsed().as_secs() < 300);
}

// Criterion 8: the depth-4 relations mod products.
#[test]
fn criterion_08_depth4() {
    let start = std::time::Instant::now();
    for id in [
        "thm9.swap23",
        "thm9.rev-last4",
        "thm9.shuffle4",
        "thm9.cyc4-last",
        "thm9.sym-eg",
        "thm10.18term",
        "thm11.antisym-li4",
    ] {
        run(id);
    }
    assert!(start.elapsed().as_secs() < 600);
}

// Criterion 9: the 122-term combination solves the depth-2 reduction,
// exactly over Q(x,y,z). Heavy.
#[test]
#[ignore = "heavy: exact check over Q(x,y,z); run with -- --ignored"]
fn criterion_09_s4_exact() {
    run_within("thm12.s4-122", 1800);
}

// Criterion 9 fast companion: generator self-checks.
#[test]
fn criterion_09_s4_counts() {
    run("s4tilde.count122");
    run("s4.count122");
}

// Criterion 10: the four-variable equation; count, displayed argument,
// specialized trials and numeric evaluation (the allowed fallback route).
#[test]
fn criterion_10_cor13_fallback() {
    run("cor13.count931");
    run("cor13.specialized");
    run("cor13.numeric");
}

// Criterion 10, exact route over Q(x,y,z,w). Heavy.
#[test]
#[ignore = "heavy: exact check over Q(x,y,z,w); run with -- --ignored"]
fn criterion_10_cor13_exact() {
    run("cor13.rho");
}

// Criterion 11: the orbit families, specialized and numeric.
#[test]
fn criterion_11_orbit_families_specialized() {
    run("mainthm.specialized");
    run("sigma9.specialized");
}

#[test]
#[ignore = "heavy: hundreds of thousands to millions of P4 evaluations"]
fn criterion_11_orbit_families_numeric() {
    let start = std::time::Instant::now();
    run("mainthm.numeric");
    run("sigma9.numeric");
    assert!(start.elapsed().as_secs() < 7200);
}

// Criterion 12: both kappa combinations close against their Li4 sides in the
// B3 ⊗ F^x component; the sign/order calibration is unique.
#[test]
fn criterion_12_kappa() {
    let start = std::time::Instant::now();
    run("kappa.family1");
    run("kappa.family2");
    // Uniqueness of the realization convention: flipping the tensor order or
    // the kappa sign must fail.
    let e = entry("kappa.family1");
    if let corpus::Check::KappaRealization(t) = &e.check {
        for (flip_order, flip_sign) in [(true, false), (false, true), (true, true)] {
            let mut tt = t.clone();
            for (c, term) in tt.expr.terms.iter_mut() {
                if let expr_dsl::Term::Tens(fs) = term {
                    if flip_order {
                        fs.reverse();
                    }
                    if flip_sign {
                        *c = -*c;
                    }
                }
            }
            let e2 = CorpusEntry {
                id: "kappa.variant".into(),
                tags: vec![],
                cost: expr_dsl::Cost::Cheap,
                expect: expr_dsl::Expect::Pass,
                check: corpus::Check::KappaRealization(tt),
            };
            let r = run_entry(&e2, &EngineOpts::default());
            assert_eq!(r.verdict, Verdict::Fail, "variant unexpectedly passes");
        }
    } else {
        panic!("kappa entry has wrong check kind");
    }
    println!("ACCEPTANCE kappa.calibration        unique       PASS");
    assert!(start.elapsed().as_secs() < 120);
}

// Criterion 13: the property suites that run on every build.
#[test]
fn criterion_13_property_suites() {
    // rho kills 200 random shuffles; delta22 kills 200 random products and
    // 200 random Li4 symbols; specialization commutes on random atoms.
    symbol_engine::props::rho_kills_random_shuffles(200, 0xfeed);
    symbol_engine::props::delta22_kills_random_products(200, 0xbeef);
    symbol_engine::props::delta22_kills_random_li4(200, 0xcafe);
    symbol_engine::props::specialization_commutes(50, 0xd00d);
    println!("ACCEPTANCE property.projectors       all          PASS");
    // stuffle and the double-log reduction exact; five-term mod products.
    run("w2.stuffle");
    run("w2.li11-reduction");
    run("w2.fiveterm");
    // numeric five-term for the single-valued dilogarithm at 100 points.
    run("p2.fiveterm.numeric");
}
