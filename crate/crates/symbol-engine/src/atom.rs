//! MPL atoms: `I` and `Li` heads applied to rational-function arguments.

use exact_kernel::RationalFunction;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AtomKind {
    I,
    Li,
}

/// `I_{k1..kd}(x1..xd)` or `Li_{k1..kd}(z1..zd)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MplAtom {
    pub kind: AtomKind,
    pub indices: Vec<u32>,
    pub args: Vec<RationalFunction>,
}

impl MplAtom {
    pub fn new(kind: AtomKind, indices: Vec<u32>, args: Vec<RationalFunction>) -> MplAtom {
        assert_eq!(indices.len(), args.len(), "index/argument length mismatch");
        assert!(!indices.is_empty(), "empty MPL atom");
        assert!(indices.iter().all(|&k| k >= 1));
        assert!(args.iter().all(|a| !a.is_zero()), "MPL argument is identically zero");
        MplAtom { kind, indices, args }
    }

    pub fn li(indices: Vec<u32>, args: Vec<RationalFunction>) -> MplAtom {
        MplAtom::new(AtomKind::Li, indices, args)
    }

    pub fn iint(indices: Vec<u32>, args: Vec<RationalFunction>) -> MplAtom {
        MplAtom::new(AtomKind::I, indices, args)
    }

    pub fn weight(&self) -> usize {
        self.indices.iter().map(|&k| k as usize).sum()
    }

    pub fn depth(&self) -> usize {
        self.indices.len()
    }
}

impl fmt::Display for MplAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AtomKind::I => write!(f, "I(")?,
            AtomKind::Li => write!(f, "Li(")?,
        }
        for (i, k) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", k)?;
        }
        write!(f, ")[")?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", a)?;
        }
        write!(f, "]")
    }
}
