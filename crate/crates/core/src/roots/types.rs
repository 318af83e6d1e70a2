use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// A Cartan type such as `B4`. `C2`, `D2` and `D3` are accepted as aliases
/// of B2, A1xA1 and A3; the root system keeps the requested realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<CartanType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C | Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidArgument(format!(
                "no Cartan type {}{}",
                family.letter(),
                rank
            )))
        }
    }

    pub const fn a(rank: usize) -> CartanType {
        CartanType {
            family: Family::A,
            rank,
        }
    }
    pub const fn b(rank: usize) -> CartanType {
        CartanType {
            family: Family::B,
            rank,
        }
    }
    pub const fn c(rank: usize) -> CartanType {
        CartanType {
            family: Family::C,
            rank,
        }
    }
    pub const fn d(rank: usize) -> CartanType {
        CartanType {
            family: Family::D,
            rank,
        }
    }
    pub const fn e(rank: usize) -> CartanType {
        CartanType {
            family: Family::E,
            rank,
        }
    }
    pub const F4: CartanType = CartanType {
        family: Family::F,
        rank: 4,
    };
    pub const G2: CartanType = CartanType {
        family: Family::G,
        rank: 2,
    };

    /// Dimension of the complex simple Lie algebra (sum over components for D2).
    pub fn algebra_dim(&self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 2),
            Family::B | Family::C => r * (2 * r + 1),
            Family::D => r * (2 * r - 1),
            Family::E => match r {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Canonical simple components: C2 -> B2, D2 -> A1 A1, D3 -> A3.
    pub fn canonical(&self) -> Vec<CartanType> {
        match (self.family, self.rank) {
            (Family::C, 2) => vec![CartanType::b(2)],
            (Family::D, 2) => vec![CartanType::a(1), CartanType::a(1)],
            (Family::D, 3) => vec![CartanType::a(3)],
            _ => vec![*self],
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<CartanType> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::Parse(format!("bad Cartan type {s:?}"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad Cartan type {s:?}")))?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Label of a simple factor as it appears in tables, where small ranks
/// (B1, C1, D1, D2, ...) may occur. Normalizes to canonical types plus a
/// center contribution.
pub fn normalize_label(family: Family, rank: usize) -> (usize, Vec<CartanType>) {
    match (family, rank) {
        (_, 0) => (0, vec![]),
        (Family::D, 1) => (1, vec![]),
        (Family::A | Family::B | Family::C, 1) => (0, vec![CartanType::a(1)]),
        (Family::C, 2) => (0, vec![CartanType::b(2)]),
        (Family::D, 2) => (0, vec![CartanType::a(1), CartanType::a(1)]),
        (Family::D, 3) => (0, vec![CartanType::a(3)]),
        _ => (0, vec![CartanType { family, rank }]),
    }
}

/// Complex so(m) as (center, simple factors).
pub fn so_factors(m: usize) -> (usize, Vec<CartanType>) {
    if m < 2 {
        return (0, vec![]);
    }
    if m % 2 == 1 {
        normalize_label(Family::B, (m - 1) / 2)
    } else {
        normalize_label(Family::D, m / 2)
    }
}

/// Complex sp(2k) as simple factors.
pub fn sp_factors(k: usize) -> Vec<CartanType> {
    normalize_label(Family::C, k).1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in [
            "A1", "B7", "C3", "D4", "E6", "E8", "F4", "G2", "C2", "D2", "D3",
        ] {
            assert_eq!(s.parse::<CartanType>().unwrap().to_string(), s);
        }
        for s in ["B1", "E5", "F3", "G3", "A0", "x4", "D"] {
            assert!(s.parse::<CartanType>().is_err(), "{s}");
        }
    }

    #[test]
    fn dimensions_of_so_and_sp() {
        for m in 2..20usize {
            let (c, f) = so_factors(m);
            assert_eq!(
                c + f.iter().map(|t| t.algebra_dim()).sum::<usize>(),
                m * (m - 1) / 2
            );
        }
        for k in 1..9usize {
            assert_eq!(
                sp_factors(k).iter().map(|t| t.algebra_dim()).sum::<usize>(),
                k * (2 * k + 1)
            );
        }
    }
}
