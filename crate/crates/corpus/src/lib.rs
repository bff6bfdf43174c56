//! The identity corpus: every checked statement as data, with generators for
//! the large derived objects.
//!
//! Cheap identities ship as DSL files under `data/`; the directory can be
//! overridden with the `MPL_DATA_DIR` environment variable (embedded copies
//! are the fallback). Large entries (the 122-term combination, the
//! four-variable equation, the orbit families) are produced by generators
//! that emit the same template format.

pub mod gen;
pub mod util;

use expr_dsl::{parse_file, Cost, Expect, Level, Template};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("dsl error in {file}: {err}")]
    Dsl { file: String, err: expr_dsl::DslError },
    #[error("duplicate corpus id `{0}`")]
    DuplicateId(String),
}

/// How an entry is verified.
#[derive(Debug, Clone)]
pub enum Check {
    /// Symbolic check of the template at its declared level.
    Symbolic(Template),
    /// delta22(S(lhs)) must equal S(rhs) where rhs is a displayed tensor.
    Delta22Reduce { lhs: Template, rhs: Template },
    /// Too many variables for closed-form polynomials: specialized
    /// prime-basis trials only (at the template's declared level).
    SpecializedOnly { template: Template, trials: u32 },
    /// The kappa-realization check: equality in B3(F)⊗F^x, i.e. the
    /// (rho_3 ⊗ id)-image of the realized difference vanishes (the first
    /// three slots are a weight-3 symbol modulo products, the group slot is
    /// exact).
    KappaRealization(Template),
    /// Rank of the delta22-projected Σ5 orbit of the point shorthand.
    RankFamily { indices: Vec<u32>, expected_rank: usize, basis_perms: Vec<[char; 5]> },
    /// Generator self-checks (term counts and displayed-argument presence).
    CountS4Tilde,
    CountS4,
    Count931,
    /// Numeric suites, dispatched by name in the verifier.
    Numeric { which: NumericCheck, tolerance: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumericCheck {
    /// The fully explicit depth-2 identity with its pi-slices and constant.
    X333,
    /// The four-variable single-valued equation at random complex points.
    Cor13,
    /// Antisymmetry of the Σ5×Σ5×Z/2 family under A <-> B.
    MainThm,
    /// The Σ9 family.
    Sigma9,
    /// Single-valued dilogarithm five-term relation at many points.
    P2FiveTerm,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub tags: Vec<String>,
    pub cost: Cost,
    pub expect: Expect,
    pub check: Check,
}

impl CorpusEntry {
    pub fn level(&self) -> Level {
        match &self.check {
            Check::Symbolic(t) => t.level,
            Check::Delta22Reduce { .. } => Level::Delta22,
            Check::SpecializedOnly { template, .. } => template.level,
            Check::KappaRealization(t) => t.level,
            Check::RankFamily { .. } => Level::Delta22,
            Check::CountS4Tilde | Check::CountS4 | Check::Count931 => Level::Exact,
            Check::Numeric { .. } => Level::Numeric,
        }
    }

    pub fn matches_filter(&self, filter: &str) -> bool {
        if filter.is_empty() || filter == "all" {
            return true;
        }
        filter.split(',').any(|f| {
            let f = f.trim();
            self.id.contains(f) || self.tags.iter().any(|t| t == f)
        })
    }
}

/// Embedded data files (name, contents).
pub const DATA_FILES: &[(&str, &str)] = &[
    ("weight2.id", include_str!("../data/weight2.id")),
    ("trivial.id", include_str!("../data/trivial.id")),
    ("weight3.id", include_str!("../data/weight3.id")),
    ("li4-onevar.id", include_str!("../data/li4-onevar.id")),
    ("depth2.id", include_str!("../data/depth2.id")),
    ("thm5.id", include_str!("../data/thm5.id")),
    ("sec335.id", include_str!("../data/sec335.id")),
    ("depth3.id", include_str!("../data/depth3.id")),
    ("depth4.id", include_str!("../data/depth4.id")),
];

fn load_file_templates() -> Result<Vec<Template>, CorpusError> {
    let mut out = Vec::new();
    let dir = std::env::var("MPL_DATA_DIR").ok();
    for (name, embedded) in DATA_FILES {
        let src = match &dir {
            Some(d) => {
                let path = std::path::Path::new(d).join(name);
                match std::fs::read_to_string(&path) {
                    Ok(s) => s,
                    Err(_) => embedded.to_string(),
                }
            }
            None => embedded.to_string(),
        };
        let templates = parse_file(&src)
            .map_err(|err| CorpusError::Dsl { file: name.to_string(), err })?;
        out.extend(templates);
    }
    Ok(out)
}

fn entry_from_template(t: Template) -> CorpusEntry {
    CorpusEntry {
        id: t.name.clone(),
        tags: t.tags.clone(),
        cost: t.cost,
        expect: t.expect,
        check: Check::Symbolic(t),
    }
}

/// The full corpus in deterministic order.
pub fn entries() -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut out: Vec<CorpusEntry> = Vec::new();
    for t in load_file_templates()? {
        out.push(entry_from_template(t));
    }

    // Prop 2: the symbol antisymmetrizes to the displayed tensor.
    out.push(CorpusEntry {
        id: "prop2.delta-reduced".to_string(),
        tags: vec!["prop2".to_string(), "depth2".to_string()],
        cost: Cost::Cheap,
        expect: Expect::Pass,
        check: Check::Delta22Reduce {
            lhs: gen::misc::prop2_lhs_template(),
            rhs: gen::misc::prop2_rhs_template(),
        },
    });

    // Rank of the 120-element permutation families.
    let rank_basis: Vec<[char; 5]> = vec![
        ['a', 'c', 'e', 'd', 'b'],
        ['a', 'd', 'c', 'e', 'b'],
        ['b', 'd', 'a', 'e', 'c'],
        ['b', 'e', 'd', 'a', 'c'],
        ['c', 'b', 'e', 'd', 'a'],
        ['c', 'e', 'd', 'b', 'a'],
    ];
    for (id, indices) in [
        ("rank.i31", vec![3u32, 1]),
        ("rank.i22", vec![2, 2]),
        ("rank.i13", vec![1, 3]),
    ] {
        out.push(CorpusEntry {
            id: id.to_string(),
            tags: vec!["prop5".to_string(), "rank".to_string()],
            cost: Cost::Cheap,
            expect: Expect::Pass,
            check: Check::RankFamily {
                indices,
                expected_rank: 6,
                basis_perms: rank_basis.clone(),
            },
        });
    }

    // Depth-3/4 machine-built identities.
    out.push(entry_from_template(gen::misc::thm8_template()));
    out.push(entry_from_template(gen::misc::thm10_template()));
    out.push(entry_from_template(gen::misc::thm11_template()));

    // Kappa pairs, checked in the B3 ⊗ F^x component.
    for t in [gen::misc::kappa1_template(), gen::misc::kappa2_template()] {
        out.push(CorpusEntry {
            id: t.name.clone(),
            tags: t.tags.clone(),
            cost: t.cost,
            expect: t.expect,
            check: Check::KappaRealization(t),
        });
    }

    // Generator count checks.
    for (id, check) in [
        ("s4tilde.count122", Check::CountS4Tilde),
        ("s4.count122", Check::CountS4),
        ("cor13.count931", Check::Count931),
    ] {
        out.push(CorpusEntry {
            id: id.to_string(),
            tags: vec!["generator".to_string(), "count".to_string()],
            cost: if id == "cor13.count931" { Cost::Heavy } else { Cost::Cheap },
            expect: Expect::Pass,
            check,
        });
    }

    // The solution of the depth-2 conjecture, exact over Q(x,y,z).
    out.push(entry_from_template(gen::s4::thm12_template()));

    // The four-variable equation, exact over Q(x,y,z,w); heavy.
    {
        let mut t = gen::s4::cor13_template();
        t.name = "cor13.rho".to_string();
        t.tags = vec!["cor13".to_string()];
        out.push(entry_from_template(t));
    }

    // Specialized routes for the many-variable families.
    out.push(CorpusEntry {
        id: "cor13.specialized".to_string(),
        tags: vec!["cor13".to_string(), "specialized".to_string()],
        cost: Cost::Heavy,
        expect: Expect::ProxyPass,
        check: Check::SpecializedOnly { template: gen::s4::cor13_template(), trials: 3 },
    });
    out.push(CorpusEntry {
        id: "mainthm.specialized".to_string(),
        tags: vec!["mainthm".to_string(), "specialized".to_string()],
        cost: Cost::Heavy,
        expect: Expect::ProxyPass,
        check: Check::SpecializedOnly { template: gen::orbits::mainthm_template(), trials: 3 },
    });
    out.push(CorpusEntry {
        id: "sigma9.specialized".to_string(),
        tags: vec!["sigma9".to_string(), "specialized".to_string()],
        cost: Cost::Heavy,
        expect: Expect::ProxyPass,
        check: Check::SpecializedOnly { template: gen::orbits::sigma9_template(), trials: 3 },
    });
    // The six-variable source expression, specialized trials.
    out.push(CorpusEntry {
        id: "s4tilde.6var-specialized".to_string(),
        tags: vec!["s4tilde".to_string(), "specialized".to_string()],
        cost: Cost::Heavy,
        expect: Expect::ProxyPass,
        check: Check::SpecializedOnly { template: s4tilde_check_template(), trials: 3 },
    });

    // Numeric suites.
    for (id, which, tol, cost) in [
        ("x333.numeric", NumericCheck::X333, 1e-30, Cost::Cheap),
        ("cor13.numeric", NumericCheck::Cor13, 1e-25, Cost::Heavy),
        ("mainthm.numeric", NumericCheck::MainThm, 1e-20, Cost::Heavy),
        ("sigma9.numeric", NumericCheck::Sigma9, 1e-20, Cost::Heavy),
        ("p2.fiveterm.numeric", NumericCheck::P2FiveTerm, 1e-30, Cost::Cheap),
    ] {
        out.push(CorpusEntry {
            id: id.to_string(),
            tags: vec!["numeric".to_string()],
            cost,
            expect: Expect::Pass,
            check: Check::Numeric { which, tolerance: tol },
        });
    }

    // Uniqueness of ids.
    let mut seen = std::collections::HashSet::new();
    for e in &out {
        if !seen.insert(e.id.clone()) {
            return Err(CorpusError::DuplicateId(e.id.clone()));
        }
    }
    Ok(out)
}

/// The six-variable check: Li4 of the 122-term expression minus
/// sum_i I_{3,1}(g, x_i) over the five-term arguments, with g = cr(e,a,b,f).
fn s4tilde_check_template() -> Template {
    use exact_kernel::Rat;
    use expr_dsl::{ArgExpr, Term};
    use symbol_engine::AtomKind;
    let mut t = gen::s4::s4_tilde_template();
    t.name = "s4tilde.6var".to_string();
    let cr = |p: [char; 4]| {
        ArgExpr::Cr(Box::new([
            util::pt(p[0]),
            util::pt(p[1]),
            util::pt(p[2]),
            util::pt(p[3]),
        ]))
    };
    // The five-term arguments from the appendix and g = cr(e,a,b,f).
    let five = [
        cr(['b', 'c', 'd', 'e']),
        cr(['a', 'c', 'e', 'd']),
        cr(['a', 'c', 'd', 'b']),
        cr(['e', 'a', 'd', 'b']),
        cr(['e', 'a', 'b', 'c']),
    ];
    let g = cr(['e', 'a', 'b', 'f']);
    for xi in five {
        t.expr.terms.push((
            Rat::int(-1),
            Term::Atom { kind: AtomKind::I, indices: vec![3, 1], args: vec![xi, g.clone()] },
        ));
    }
    t
}

/// Every id the coverage table must contain.
pub fn required_ids() -> Vec<&'static str> {
    vec![
        "w2.fiveterm",
        "w2.li11-reduction",
        "w2.stuffle",
        "w2.i11-conversion",
        "triv.inversion-li4",
        "triv.distribution-li4",
        "w3.li21-via-li3",
        "w3.li111-via-li3",
        "w3.phi-independence",
        "w3.li111-via-phi",
        "li4.nineterm-onevar",
        "eq1.i31-nineterm",
        "prop2.delta-reduced",
        "cor3.i31-antisym",
        "thm4.s1",
        "thm4.s2",
        "thm4.s3",
        "thm4.s4",
        "thm4.s5",
        "thm4.s6",
        "thm4.refined-li4",
        "x333.symbol",
        "x333.numeric",
        "thm5.i31-sym23",
        "thm5.i31-sym12",
        "thm5.i31-antisym45",
        "thm5.i22-sym12",
        "thm5.i22-antisym34",
        "thm5.i22-both",
        "thm5.i13-sym24",
        "thm5.i13-antisym35",
        "thm5.i13-both",
        "thm5.i22-pairswap-li4",
        "thm5.i22-cyc",
        "thm5.i31-cyc",
        "rank.i31",
        "rank.i22",
        "rank.i13",
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
        "thm7.swap-ef",
        "thm7.cyc3",
        "thm8.i211-via-i31",
        "thm9.swap23",
        "thm9.rev-last4",
        "thm9.shuffle4",
        "thm9.cyc4-last",
        "thm9.sym-eg",
        "thm10.18term",
        "thm11.antisym-li4",
        "thm12.s4-122",
        "s4tilde.count122",
        "s4.count122",
        "s4tilde.6var-specialized",
        "cor13.count931",
        "cor13.rho",
        "cor13.specialized",
        "cor13.numeric",
        "mainthm.specialized",
        "mainthm.numeric",
        "sigma9.specialized",
        "sigma9.numeric",
        "kappa.family1",
        "kappa.family2",
        "p2.fiveterm.numeric",
    ]
}

/// Deterministic filtered listing.
pub fn list_identities(filter: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    Ok(entries()?.into_iter().filter(|e| e.matches_filter(filter)).collect())
}
