use std::fmt;

use serde::Serialize;

use crate::roots::CartanType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Levi,
    PiSystemI,
    PiSystemII,
    ReducibleBlock,
    IrreducibleNonsimple,
    IrreducibleSimple,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Levi => "levi",
            Source::PiSystemI => "pi-system-I",
            Source::PiSystemII => "pi-system-II",
            Source::ReducibleBlock => "reducible-block",
            Source::IrreducibleNonsimple => "irreducible-nonsimple",
            Source::IrreducibleSimple => "irreducible-simple",
        })
    }
}

/// Complex reductive subalgebra up to isomorphism: abelian center plus
/// canonical simple factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SubalgebraDescriptor {
    pub factors: Vec<CartanType>,
    pub center: usize,
    pub dim: usize,
    pub source: Source,
}

impl SubalgebraDescriptor {
    pub fn new(center: usize, factors: Vec<CartanType>, source: Source) -> SubalgebraDescriptor {
        let mut factors: Vec<CartanType> = factors.iter().flat_map(|t| t.canonical()).collect();
        factors.sort();
        let dim = center + factors.iter().map(|t| t.algebra_dim()).sum::<usize>();
        SubalgebraDescriptor {
            factors,
            center,
            dim,
            source,
        }
    }

    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|t| t.rank).sum()
    }

    /// Same isomorphism type, ignoring provenance.
    pub fn same_type(&self, other: &SubalgebraDescriptor) -> bool {
        self.factors == other.factors && self.center == other.center
    }

    /// Compact label such as `T1 x A1 x B2`.
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        if self.center > 0 {
            parts.push(format!("T{}", self.center));
        }
        parts.extend(self.factors.iter().map(|t| t.to_string()));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" x ")
        }
    }
}

impl fmt::Display for SubalgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {}, {})", self.label(), self.dim, self.source)
    }
}
