//! Template and ground-expression types.

use exact_kernel::{Rat, RationalFunction};
use symbol_engine::{AtomKind, MplAtom};
use std::fmt;

/// Check level an identity is declared at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    /// Symbol vanishes on the nose.
    Exact,
    /// Symbol vanishes modulo shuffle products (rho projector).
    ModProducts,
    /// Symbol vanishes modulo products and lower depth (delta_{2,2}).
    Delta22,
    /// Checked by floating-point evaluation only.
    Numeric,
}

impl Level {
    pub fn as_str(&self) -> &'static str {
        match self {
            Level::Exact => "exact",
            Level::ModProducts => "mod-products",
            Level::Delta22 => "delta22",
            Level::Numeric => "numeric",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Expect {
    Pass,
    ProxyPass,
    Fail,
}

impl Expect {
    pub fn as_str(&self) -> &'static str {
        match self {
            Expect::Pass => "pass",
            Expect::ProxyPass => "proxy-pass",
            Expect::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cost {
    Cheap,
    Heavy,
}

impl Cost {
    pub fn as_str(&self) -> &'static str {
        match self {
            Cost::Cheap => "cheap",
            Cost::Heavy => "heavy",
        }
    }
}

/// Permutation groups available to `orbit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSpec {
    /// Full symmetric group on the listed points.
    Sym(usize),
    /// Cyclic rotations of the listed points.
    Cyc(usize),
}

/// Rational expression over named points.
#[derive(Debug, Clone, PartialEq)]
pub enum ArgExpr {
    Num(Rat),
    Point(String),
    Inf,
    Add(Box<ArgExpr>, Box<ArgExpr>),
    Sub(Box<ArgExpr>, Box<ArgExpr>),
    Mul(Box<ArgExpr>, Box<ArgExpr>),
    Div(Box<ArgExpr>, Box<ArgExpr>),
    Neg(Box<ArgExpr>),
    Pow(Box<ArgExpr>, i32),
    /// Cross ratio (a-c)(b-d) / ((a-d)(b-c)); ∞ admitted projectively.
    Cr(Box<[ArgExpr; 4]>),
    /// Named macro call (t1..t6, u, f1..f9) expanded during evaluation.
    Call(String, Vec<ArgExpr>),
    /// Five-term argument list V0(x, y): a formal sum of five unit terms.
    V0(Box<ArgExpr>, Box<ArgExpr>),
    /// spl(e; a, b, c, d): formal sum of the four cross ratios obtained by
    /// substituting e for each entry in turn.
    SplCr(Box<ArgExpr>, Box<[ArgExpr; 4]>),
}

/// One term of a template expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Term {
    /// `I(k..)[args]` or `Li(k..)[args]`.
    Atom { kind: AtomKind, indices: Vec<u32>, args: Vec<ArgExpr> },
    /// Point shorthand `(p1 .. p_{3+d})_{k1..kd}`.
    Pts { indices: Vec<u32>, points: Vec<ArgExpr> },
    /// Cyclic sum of the point shorthand over the `cycled` block.
    Cyc4 { indices: Vec<u32>, pre: Vec<ArgExpr>, cycled: Vec<ArgExpr>, post: Vec<ArgExpr> },
    /// Shuffle product of factor symbols.
    Prod(Vec<Factor>),
    /// Concatenation of factor symbols.
    Tens(Vec<Factor>),
    /// Signed or plain orbit over permutations of the listed points.
    Orbit { group: GroupSpec, signed: bool, points: Vec<String>, body: Box<Expr> },
}

/// A factor inside `prod(...)` or `tens(...)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Factor {
    Atom { kind: AtomKind, indices: Vec<u32>, args: Vec<ArgExpr> },
    Log(ArgExpr),
}

/// Signed sum of terms.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Expr {
    pub terms: Vec<(Rat, Term)>,
}

/// A parsed identity template with its metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct Template {
    pub name: String,
    pub vars: Vec<String>,
    pub level: Level,
    pub expect: Expect,
    pub cost: Cost,
    pub tags: Vec<String>,
    pub tolerance: Option<f64>,
    pub expr: Expr,
}

/// Ground factor of a product/concatenation atom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroundFactor {
    Mpl(MplAtom),
    Log(RationalFunction),
}

impl GroundFactor {
    pub fn weight(&self) -> usize {
        match self {
            GroundFactor::Mpl(a) => a.weight(),
            GroundFactor::Log(_) => 1,
        }
    }
}

/// Fully grounded atom of an identity expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroundAtom {
    Mpl(MplAtom),
    Prod(Vec<GroundFactor>),
    Tens(Vec<GroundFactor>),
}

impl GroundAtom {
    pub fn weight(&self) -> usize {
        match self {
            GroundAtom::Mpl(a) => a.weight(),
            GroundAtom::Prod(fs) | GroundAtom::Tens(fs) => fs.iter().map(|f| f.weight()).sum(),
        }
    }

    /// Deterministic merge key: indices first, then normalized arguments.
    pub fn sort_key(&self) -> String {
        format!("{}", self)
    }
}

impl fmt::Display for GroundFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundFactor::Mpl(a) => write!(f, "{}", a),
            GroundFactor::Log(g) => write!(f, "log[{}]", g),
        }
    }
}

impl fmt::Display for GroundAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundAtom::Mpl(a) => write!(f, "{}", a),
            GroundAtom::Prod(fs) => {
                write!(f, "prod(")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", x)?;
                }
                write!(f, ")")
            }
            GroundAtom::Tens(fs) => {
                write!(f, "tens(")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", x)?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A grounded identity: a Q-linear combination of ground atoms sharing one
/// weight, plus the declared check level.
#[derive(Debug, Clone)]
pub struct IdentityExpr {
    pub name: String,
    pub vars: std::sync::Arc<exact_kernel::Vars>,
    pub level: Level,
    pub terms: Vec<(Rat, GroundAtom)>,
}

impl IdentityExpr {
    /// Deduplicated atom list with coefficients merged; zero coefficients
    /// dropped. Arguments are already in rational normal form.
    pub fn to_atoms(&self) -> Vec<(Rat, GroundAtom)> {
        let mut sorted: Vec<(Rat, GroundAtom)> = self.terms.clone();
        sorted.sort_by(|a, b| a.1.sort_key().cmp(&b.1.sort_key()));
        let mut out: Vec<(Rat, GroundAtom)> = Vec::new();
        for (c, a) in sorted {
            match out.last_mut() {
                Some((cc, aa)) if *aa == a => {
                    *cc += c;
                }
                _ => out.push((c, a)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        out
    }

    pub fn weight(&self) -> Option<usize> {
        self.terms.first().map(|(_, a)| a.weight())
    }
}
