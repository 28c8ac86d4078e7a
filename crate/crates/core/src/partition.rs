//! Integer partitions.
//!
//! A [`Partition`] is stored as its weakly decreasing sequence of positive
//! parts with no trailing zeros, so derived equality and hashing coincide
//! with equality of partitions. Reads past the last part go through
//! [`Partition::part_at`], which extends by zero.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from an arbitrary sequence of parts. Zero parts are
    /// dropped; the remaining parts must already be weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::parse(
                "partition",
                &format!("{parts:?}"),
                "parts must be weakly decreasing",
            ));
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// The `i`-th part (1-based), zero past the last part.
    ///
    /// # Panics
    ///
    /// Panics if `i == 0`.
    pub fn part_at(&self, i: usize) -> u32 {
        assert!(i >= 1, "partition rows are indexed from 1");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// True iff no part value occurs `e` or more times.
    pub fn is_e_regular(&self, e: u32) -> Result<bool> {
        check_e(e)?;
        Ok(self
            .parts
            .chunk_by(|a, b| a == b)
            .all(|run| run.len() < e as usize))
    }

    /// The conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let width = self.part_at(1) as usize;
        let parts = (1..=width)
            .map(|col| self.parts.iter().filter(|&&p| p as usize >= col).count() as u32)
            .collect();
        Partition::from_parts_unchecked(parts)
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn weighted_size(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i * p as usize)
            .sum()
    }
}

pub(crate) fn check_e(e: u32) -> Result<()> {
    if e < 2 {
        Err(Error::InvalidE(e))
    } else {
        Ok(())
    }
}

/// Every partition of `n`, in lexicographically decreasing order of part
/// sequences: `(n)` first, `(1^n)` last.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(n, n, &mut stack, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_parts_unchecked(stack.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        stack.push(part as u32);
        fill(remaining - part, part, stack, out);
        stack.pop();
    }
}

pub fn part_at(lambda: &Partition, i: usize) -> u32 {
    lambda.part_at(i)
}

pub fn is_e_regular(lambda: &Partition, e: u32) -> Result<bool> {
    lambda.is_e_regular(e)
}

/// Number of `e`-regular partitions of `n`.
pub fn count_e_regular(n: usize, e: u32) -> Result<usize> {
    check_e(e)?;
    let mut count = 0;
    for lambda in enumerate_partitions(n) {
        if lambda.is_e_regular(e)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of partitions of `n` with no part divisible by `e`.
pub fn count_parts_not_divisible(n: usize, e: u32) -> Result<usize> {
    check_e(e)?;
    Ok(enumerate_partitions(n)
        .iter()
        .filter(|lambda| lambda.parts.iter().all(|&p| p % e != 0))
        .count())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| Error::parse("partition", s, "expected `[p1,p2,...]`"))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.parse::<u32>() {
                    Ok(0) => Err(Error::parse("partition", s, "parts must be positive")),
                    Ok(p) => Ok(p),
                    Err(e) => Err(Error::parse("partition", s, format!("{tok:?}: {e}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
            .map_err(|_| Error::parse("partition", s, "parts must be weakly decreasing"))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}
