//! d-partitions, their diagrams and residues, and FLOTW membership.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{check_e, enumerate_partitions, Partition};

/// An ordered tuple `(λ^(0), ..., λ^(d-1))` of partitions, `d >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    /// # Panics
    ///
    /// Panics if `components` is empty.
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(
            !components.is_empty(),
            "a multipartition has at least one component"
        );
        Self { components }
    }

    pub fn empty(d: usize) -> Self {
        Self::new(vec![Partition::empty(); d])
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, c: usize) -> &Partition {
        &self.components[c]
    }

    pub fn d(&self) -> usize {
        self.components.len()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Partition::rank).sum()
    }

    pub fn contains(&self, node: Node) -> bool {
        node.a >= 1
            && node.b >= 1
            && node.c < self.d()
            && node.b <= self.components[node.c].part_at(node.a) as usize
    }

    /// All nodes of the diagram, component by component, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.components.iter().enumerate().flat_map(|(c, lambda)| {
            lambda
                .parts()
                .iter()
                .enumerate()
                .flat_map(move |(row, &len)| {
                    (1..=len as usize).map(move |b| Node { a: row + 1, b, c })
                })
        })
    }
}

/// A box `(a, b, c)`: row `a`, column `b`, component `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Node {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        Self { a, b, c }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Residue(pub u32);

/// The datum `{e; v_0, ..., v_{d-1}}` with `0 <= v_0 <= ... <= v_{d-1} < e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightSet {
    e: u32,
    weights: Vec<u32>,
}

impl WeightSet {
    pub fn new(e: u32, weights: Vec<u32>) -> Result<Self> {
        check_e(e)?;
        if weights.is_empty() {
            return Err(Error::InvalidWeights(
                "at least one weight is required".into(),
            ));
        }
        if weights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidWeights(format!(
                "weights {weights:?} are not weakly increasing"
            )));
        }
        if let Some(&last) = weights.last() {
            if last >= e {
                return Err(Error::InvalidWeights(format!(
                    "weight {last} is not below e = {e}"
                )));
            }
        }
        Ok(Self { e, weights })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn d(&self) -> usize {
        self.weights.len()
    }

    fn check_dimension(&self, mp: &MultiPartition) -> Result<()> {
        if mp.d() != self.d() {
            Err(Error::DimensionMismatch {
                expected: self.d(),
                found: mp.d(),
            })
        } else {
            Ok(())
        }
    }
}

/// Every d-partition of rank `n`. Compositions `(n_0, ..., n_{d-1})` of `n`
/// are visited in lexicographically decreasing order; within a composition
/// the first component varies slowest, each in partition order.
pub fn enumerate_multipartitions(d: usize, n: usize) -> Vec<MultiPartition> {
    assert!(d >= 1, "d must be positive");
    let by_size: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();
    let mut out = Vec::new();
    let mut sizes = Vec::with_capacity(d);
    compositions(n, d, &mut sizes, &mut |sizes| {
        let mut current = Vec::with_capacity(d);
        product(sizes, &by_size, &mut current, &mut out);
    });
    out
}

fn compositions(
    remaining: usize,
    slots: usize,
    acc: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if slots == 1 {
        acc.push(remaining);
        f(acc);
        acc.pop();
        return;
    }
    for first in (0..=remaining).rev() {
        acc.push(first);
        compositions(remaining - first, slots - 1, acc, f);
        acc.pop();
    }
}

fn product(
    sizes: &[usize],
    by_size: &[Vec<Partition>],
    current: &mut Vec<Partition>,
    out: &mut Vec<MultiPartition>,
) {
    let Some((&first, rest)) = sizes.split_first() else {
        out.push(MultiPartition::new(current.clone()));
        return;
    };
    for lambda in &by_size[first] {
        current.push(lambda.clone());
        product(rest, by_size, current, out);
        current.pop();
    }
}

/// `(b - a + v_c) mod e`, always in `0..e`.
pub fn residue(node: Node, ws: &WeightSet) -> Result<Residue> {
    let v = *ws.weights.get(node.c).ok_or(Error::ComponentOutOfRange {
        index: node.c,
        d: ws.d(),
    })?;
    let raw = node.b as i64 - node.a as i64 + v as i64;
    Ok(Residue(raw.rem_euclid(ws.e as i64) as u32))
}

/// Residues of the last nodes of all rows of length exactly `k`, taken over
/// every component.
pub fn right_end_residues(
    mp: &MultiPartition,
    ws: &WeightSet,
    k: usize,
) -> Result<BTreeSet<Residue>> {
    ws.check_dimension(mp)?;
    let mut out = BTreeSet::new();
    for (c, lambda) in mp.components.iter().enumerate() {
        for (row, &len) in lambda.parts().iter().enumerate() {
            if len as usize == k {
                out.insert(residue(Node::new(row + 1, k, c), ws)?);
            }
        }
    }
    Ok(out)
}

/// The first FLOTW condition found to fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum FlotwViolation {
    /// `λ^(j)_i < λ^(j+1)_{i+shift}`, where `j = d-1` denotes the wrap-around
    /// inequality against `λ^(0)`.
    Inequality { j: usize, i: usize, shift: usize },
    /// The right ends of the length-`k` rows carry every residue mod `e`.
    ResidueSaturated { k: usize },
}

impl fmt::Display for FlotwViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FlotwViolation::Inequality { j, i, shift } => {
                write!(
                    f,
                    "row inequality fails for component {j} at row {i} (shift {shift})"
                )
            }
            FlotwViolation::ResidueSaturated { k } => {
                write!(
                    f,
                    "residues at the right ends of length-{k} rows cover all of Z/eZ"
                )
            }
        }
    }
}

/// Checks both FLOTW conditions, reporting the first violation.
///
/// Inequalities are checked before residues; within each, in increasing
/// `j`, then `i` (resp. `k`).
pub fn check_flotw(mp: &MultiPartition, ws: &WeightSet) -> Result<Option<FlotwViolation>> {
    ws.check_dimension(mp)?;
    let d = mp.d();
    let v = &ws.weights;
    let e = ws.e as usize;
    // beyond the longest column both sides of every inequality vanish
    let rows = mp.components.iter().map(Partition::len).max().unwrap_or(0);

    let mut pairs: Vec<(usize, usize, usize)> = (0..d - 1)
        .map(|j| (j, j + 1, (v[j + 1] - v[j]) as usize))
        .collect();
    pairs.push((d - 1, 0, e + v[0] as usize - v[d - 1] as usize));
    for (j, next, shift) in pairs {
        for i in 1..=rows {
            if mp.components[j].part_at(i) < mp.components[next].part_at(i + shift) {
                return Ok(Some(FlotwViolation::Inequality { j, i, shift }));
            }
        }
    }

    let lengths: BTreeSet<usize> = mp
        .components
        .iter()
        .flat_map(|l| l.parts().iter().map(|&p| p as usize))
        .collect();
    for k in lengths {
        if right_end_residues(mp, ws, k)?.len() == e {
            return Ok(Some(FlotwViolation::ResidueSaturated { k }));
        }
    }
    Ok(None)
}

pub fn is_flotw(mp: &MultiPartition, ws: &WeightSet) -> Result<bool> {
    check_flotw(mp, ws).map(|v| v.is_none())
}

/// FLOTW d-partitions of rank `n`, in the order of
/// [`enumerate_multipartitions`].
pub fn enumerate_flotw(ws: &WeightSet, n: usize) -> Vec<MultiPartition> {
    enumerate_multipartitions(ws.d(), n)
        .into_par_iter()
        .filter(|mp| matches!(check_flotw(mp, ws), Ok(None)))
        .collect()
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, lambda) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{lambda}")?;
        }
        Ok(())
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let components = s
            .split('|')
            .map(str::parse)
            .collect::<Result<Vec<Partition>>>()
            .map_err(|e| match e {
                Error::Parse { reason, .. } => Error::parse("multipartition", s, reason),
                other => other,
            })?;
        Ok(MultiPartition::new(components))
    }
}

impl fmt::Display for WeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{};", self.e)?;
        for (i, v) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for WeightSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| Error::parse("weight set", s, "expected `{e;v0,...}`"))?;
        let (e, weights) = inner
            .split_once(';')
            .ok_or_else(|| Error::parse("weight set", s, "missing `;`"))?;
        let num = |tok: &str| {
            tok.trim()
                .parse::<u32>()
                .map_err(|err| Error::parse("weight set", s, format!("{:?}: {err}", tok.trim())))
        };
        let e = num(e)?;
        let weights = weights.split(',').map(num).collect::<Result<Vec<_>>>()?;
        WeightSet::new(e, weights)
    }
}
