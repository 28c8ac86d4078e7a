//! Classical Weyl group types.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            _ => Err(Error::parse("Weyl family", s, "expected one of A, B, D")),
        }
    }
}

/// A Weyl group of classical type.
///
/// `n` is the number of letters for type A (the group `A_{n-1}`) and the
/// rank for types B and D. Simple modules of the generic Hecke algebra are
/// labelled by objects of total size `n` in every family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylType {
    family: Family,
    n: usize,
}

impl WeylType {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let reason = match family {
            Family::A if n < 1 => Some("type A needs n >= 1"),
            Family::B if n < 2 => Some("type B needs n >= 2"),
            Family::D if n < 2 => Some("type D needs n >= 2"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidWeylType { family, n, reason }),
            None => Ok(Self { family, n }),
        }
    }

    /// The group with the given Coxeter rank, e.g. `A_2` is `S_3`.
    pub fn from_coxeter_rank(family: Family, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidWeylType {
                family,
                n: rank,
                reason: "Coxeter rank must be positive",
            });
        }
        match family {
            Family::A => Self::new(family, rank + 1),
            _ => Self::new(family, rank),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of simple reflections.
    pub fn coxeter_rank(&self) -> usize {
        match self.family {
            Family::A => self.n - 1,
            _ => self.n,
        }
    }

    /// `D_2 = A_1 x A_1` and `D_3 = A_3` fall outside the irreducible range.
    pub fn is_degenerate(&self) -> bool {
        self.family == Family::D && self.n < 4
    }

    pub fn order(&self) -> u128 {
        let fact: u128 = (1..=self.n as u128).product();
        match self.family {
            Family::A => fact,
            Family::B => fact << self.n,
            Family::D => fact << (self.n - 1),
        }
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.coxeter_rank())
    }
}

/// Parses Coxeter notation such as `A2`, `B3`, `D4`.
impl FromStr for WeylType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s
            .char_indices()
            .nth(1)
            .map(|(i, _)| i)
            .ok_or_else(|| Error::parse("Weyl group", s, "expected e.g. `A2`"))?;
        let family: Family = s[..split].parse()?;
        let rank: usize = s[split..]
            .parse()
            .map_err(|e| Error::parse("Weyl group", s, format!("{e}")))?;
        WeylType::from_coxeter_rank(family, rank)
    }
}
