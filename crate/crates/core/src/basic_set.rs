//! Canonical basic sets for types `A_{n-1}`, `B_n` and `D_n`.
//!
//! Simple modules of the split semisimple algebra `H_K` are labelled by
//! partitions (type A), ordered bipartitions (type B), and for type D by
//! unordered pairs `{λ, μ}` with `λ ≠ μ` together with split labels
//! `(λ, ±)`. The canonical basic set at an `e`-th root of unity is the
//! subset of those labels selected by FLOTW conditions on suitable weight
//! sets.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cyclo::{check_characteristic, is_good_prime};
use crate::error::{Error, Result};
use crate::multipartition::{enumerate_multipartitions, is_flotw, MultiPartition, WeightSet};
use crate::partition::{check_e, enumerate_partitions, Partition};
use crate::weyl::{Family, WeylType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Total order on partitions used for canonical output: larger rank first,
/// then lexicographically decreasing parts. This is the order in which
/// partitions appear in [`enumerate_multipartitions`].
fn canonical_cmp(a: &Partition, b: &Partition) -> Ordering {
    b.rank()
        .cmp(&a.rank())
        .then_with(|| b.parts().cmp(a.parts()))
}

/// An unordered pair of distinct partitions, stored with the canonically
/// earlier partition first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnorderedPair {
    first: Partition,
    second: Partition,
}

impl UnorderedPair {
    /// `None` if `a == b`.
    pub fn new(a: Partition, b: Partition) -> Option<Self> {
        match canonical_cmp(&a, &b) {
            Ordering::Less => Some(Self {
                first: a,
                second: b,
            }),
            Ordering::Greater => Some(Self {
                first: b,
                second: a,
            }),
            Ordering::Equal => None,
        }
    }

    pub fn first(&self) -> &Partition {
        &self.first
    }

    pub fn second(&self) -> &Partition {
        &self.second
    }

    pub fn rank(&self) -> usize {
        self.first.rank() + self.second.rank()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasicSetLabel {
    TypeA(Partition),
    /// Ordered bipartition `(λ^(0), λ^(1))`.
    TypeB(Partition, Partition),
    /// `V^[λ,μ]` with `λ ≠ μ`.
    TypeDPair(UnorderedPair),
    /// One of the two constituents `V^[λ,±]` of a diagonal restriction.
    TypeDSplit(Partition, Sign),
}

impl BasicSetLabel {
    /// Size of the labelled module's index: `n` for types A, B and D.
    pub fn rank(&self) -> usize {
        match self {
            BasicSetLabel::TypeA(l) => l.rank(),
            BasicSetLabel::TypeB(l, m) => l.rank() + m.rank(),
            BasicSetLabel::TypeDPair(pair) => pair.rank(),
            BasicSetLabel::TypeDSplit(l, _) => 2 * l.rank(),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            BasicSetLabel::TypeA(_) => Family::A,
            BasicSetLabel::TypeB(..) => Family::B,
            BasicSetLabel::TypeDPair(_) | BasicSetLabel::TypeDSplit(..) => Family::D,
        }
    }

    /// True iff the label names a simple `H_K`-module for `w`.
    pub fn is_valid_for(&self, w: WeylType) -> bool {
        self.family() == w.family() && self.rank() == w.n()
    }
}

impl fmt::Display for BasicSetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasicSetLabel::TypeA(l) => write!(f, "{l}"),
            BasicSetLabel::TypeB(l, m) => write!(f, "{l}|{m}"),
            BasicSetLabel::TypeDPair(p) => write!(f, "{{{},{}}}", p.first, p.second),
            BasicSetLabel::TypeDSplit(l, s) => write!(f, "({l},{s})"),
        }
    }
}

impl FromStr for BasicSetLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = |reason: &str| Error::parse("basic set label", s, reason);
        if let Some(inner) = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let (a, b) = split_after_bracket(inner).ok_or_else(|| bad("expected `{[..],[..]}`"))?;
            return UnorderedPair::new(a.parse()?, b.parse()?)
                .map(BasicSetLabel::TypeDPair)
                .ok_or_else(|| bad("pair components must differ"));
        }
        if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (l, sign) = split_after_bracket(inner).ok_or_else(|| bad("expected `([..],±)`"))?;
            let sign = match sign.trim() {
                "+" => Sign::Plus,
                "-" => Sign::Minus,
                _ => return Err(bad("sign must be + or -")),
            };
            return Ok(BasicSetLabel::TypeDSplit(l.parse()?, sign));
        }
        let mp: MultiPartition = t.parse()?;
        match mp.components() {
            [l] => Ok(BasicSetLabel::TypeA(l.clone())),
            [l, m] => Ok(BasicSetLabel::TypeB(l.clone(), m.clone())),
            _ => Err(bad("expected one or two components")),
        }
    }
}

/// Splits `"[..] , rest"` after the first closing bracket.
fn split_after_bracket(s: &str) -> Option<(&str, &str)> {
    let close = s.find(']')?;
    let (head, tail) = s.split_at(close + 1);
    Some((head, tail.trim_start().strip_prefix(',')?))
}

/// Specialization parameter: generic (split semisimple) or `u` a primitive
/// `e`-th root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parameter {
    Semisimple,
    RootOfUnity(u32),
}

/// Which orderings of a type-D pair lie in the FLOTW set (even `e` only).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairOrientation {
    /// Only `(first, second)`.
    Forward,
    /// Only `(second, first)`.
    Reverse,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DEntry {
    pub label: BasicSetLabel,
    pub orientation: Option<PairOrientation>,
}

fn bipartition(l: &Partition, m: &Partition) -> MultiPartition {
    MultiPartition::new(vec![l.clone(), m.clone()])
}

/// Membership in `Λ¹_{e;0}`, via the general FLOTW test.
fn in_lambda_e0(l: &Partition, e: u32) -> Result<bool> {
    is_flotw(
        &MultiPartition::new(vec![l.clone()]),
        &WeightSet::new(e, vec![0])?,
    )
}

/// Every simple `H_K`-module label for `w`, in canonical order.
pub fn irr_labels(w: WeylType) -> Vec<BasicSetLabel> {
    let n = w.n();
    match w.family() {
        Family::A => enumerate_partitions(n)
            .into_iter()
            .map(BasicSetLabel::TypeA)
            .collect(),
        Family::B => enumerate_multipartitions(2, n)
            .into_iter()
            .map(|mp| BasicSetLabel::TypeB(mp.component(0).clone(), mp.component(1).clone()))
            .collect(),
        Family::D => type_d_labels(n, |_, _| Ok(Some(PairOrientation::Both)))
            .expect("infallible selector")
            .into_iter()
            .map(|entry| entry.label)
            .collect(),
    }
}

/// `|Irr H_K|`, by enumeration.
pub fn irr_count(w: WeylType) -> usize {
    irr_labels(w).len()
}

/// `e`-regular partitions of `n`, i.e. `Λ¹_{e;0}` in rank `n`.
pub fn basic_set_a(n: usize, e: u32) -> Result<Vec<BasicSetLabel>> {
    check_e(e)?;
    enumerate_partitions(n)
        .into_iter()
        .filter_map(|l| match in_lambda_e0(&l, e) {
            Ok(true) => Some(Ok(BasicSetLabel::TypeA(l))),
            Ok(false) => None,
            Err(err) => Some(Err(err)),
        })
        .collect()
}

/// Odd `e`: both components in `Λ¹_{e;0}`. Even `e`: the bipartition lies
/// in `Λ¹_{e;1,e/2}`.
pub fn basic_set_b(n: usize, e: u32) -> Result<Vec<BasicSetLabel>> {
    check_e(e)?;
    let even_weights = WeightSet::new(e, vec![1, e / 2])?;
    let mut out = Vec::new();
    for mp in enumerate_multipartitions(2, n) {
        let (l, m) = (mp.component(0), mp.component(1));
        let keep = if e % 2 == 1 {
            in_lambda_e0(l, e)? && in_lambda_e0(m, e)?
        } else {
            is_flotw(&mp, &even_weights)?
        };
        if keep {
            out.push(BasicSetLabel::TypeB(l.clone(), m.clone()));
        }
    }
    Ok(out)
}

/// Type D labels with the orientation diagnostic for pairs.
///
/// Odd `e`: pairs and diagonals with both components in `Λ¹_{e;0}`. Even
/// `e`: a pair is kept when at least one ordering lies in `Λ¹_{e;0,e/2}`,
/// a diagonal `(λ, λ)` when it lies there itself.
pub fn basic_set_d_detailed(n: usize, e: u32) -> Result<Vec<DEntry>> {
    check_e(e)?;
    if e % 2 == 1 {
        type_d_labels(n, |l, m| {
            Ok((in_lambda_e0(l, e)? && in_lambda_e0(m, e)?).then_some(PairOrientation::Both))
        })
        .map(|entries| {
            entries
                .into_iter()
                .map(|entry| DEntry {
                    orientation: None,
                    ..entry
                })
                .collect()
        })
    } else {
        let weights = WeightSet::new(e, vec![0, e / 2])?;
        type_d_labels(n, |l, m| {
            let forward = is_flotw(&bipartition(l, m), &weights)?;
            let reverse = l != m && is_flotw(&bipartition(m, l), &weights)?;
            Ok(match (forward, reverse) {
                (true, true) => Some(PairOrientation::Both),
                (true, false) => Some(PairOrientation::Forward),
                (false, true) => Some(PairOrientation::Reverse),
                (false, false) => None,
            })
        })
    }
}

pub fn basic_set_d(n: usize, e: u32) -> Result<Vec<BasicSetLabel>> {
    Ok(basic_set_d_detailed(n, e)?
        .into_iter()
        .map(|entry| entry.label)
        .collect())
}

/// Walks ordered bipartitions of `n` in canonical order, emitting each
/// unordered pair once (at its canonical ordering) and each diagonal as a
/// `+`/`-` pair. `select(λ, μ)` decides membership.
fn type_d_labels(
    n: usize,
    mut select: impl FnMut(&Partition, &Partition) -> Result<Option<PairOrientation>>,
) -> Result<Vec<DEntry>> {
    let mut out = Vec::new();
    for mp in enumerate_multipartitions(2, n) {
        let (l, m) = (mp.component(0), mp.component(1));
        if l == m {
            if select(l, m)?.is_some() {
                for sign in [Sign::Plus, Sign::Minus] {
                    out.push(DEntry {
                        label: BasicSetLabel::TypeDSplit(l.clone(), sign),
                        orientation: None,
                    });
                }
            }
            continue;
        }
        if canonical_cmp(l, m) == Ordering::Greater {
            continue;
        }
        if let Some(orientation) = select(l, m)? {
            let pair = UnorderedPair::new(l.clone(), m.clone()).expect("distinct components");
            out.push(DEntry {
                label: BasicSetLabel::TypeDPair(pair),
                orientation: Some(orientation),
            });
        }
    }
    Ok(out)
}

pub fn basic_set(w: WeylType, param: Parameter) -> Result<Vec<BasicSetLabel>> {
    match param {
        Parameter::Semisimple => Ok(irr_labels(w)),
        Parameter::RootOfUnity(e) => match w.family() {
            Family::A => basic_set_a(w.n(), e),
            Family::B => basic_set_b(w.n(), e),
            Family::D => basic_set_d(w.n(), e),
        },
    }
}

/// The basic set in characteristic `p` (0 or a prime). For `p` good the
/// answer coincides with characteristic 0; bad primes are rejected.
pub fn basic_set_char_p(w: WeylType, e: u32, p: u64) -> Result<Vec<BasicSetLabel>> {
    check_characteristic(p)?;
    if p != 0 && !is_good_prime(w, p) {
        return Err(Error::BadCharacteristic {
            family: w.family(),
            p,
        });
    }
    basic_set(w, Parameter::RootOfUnity(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{count_e_regular, Partition};
    use proptest::prelude::*;

    fn strings(labels: &[BasicSetLabel]) -> Vec<String> {
        labels.iter().map(ToString::to_string).collect()
    }

    fn weyl(f: Family, n: usize) -> WeylType {
        WeylType::new(f, n).unwrap()
    }

    #[test]
    fn irr_counts() {
        assert_eq!(irr_count(weyl(Family::A, 4)), 5);
        assert_eq!(irr_count(weyl(Family::B, 2)), 5);
        // D2 = A1 x A1: pairs {[2],[]}, {[1,1],[]} and ([1],±)
        assert_eq!(irr_count(weyl(Family::D, 2)), 4);
        // D3 = A3 has p(4) simple modules
        assert_eq!(irr_count(weyl(Family::D, 3)), 5);
        // D4: 9 unordered non-diagonal pairs + 2 * p(2)
        assert_eq!(irr_count(weyl(Family::D, 4)), 13);
    }

    #[test]
    fn type_a_examples() {
        assert_eq!(strings(&basic_set_a(3, 2).unwrap()), ["[3]", "[2,1]"]);
        assert_eq!(strings(&basic_set_a(1, 5).unwrap()), ["[1]"]);
        for n in 1..=10 {
            assert_eq!(
                basic_set_a(n, n as u32 + 1).unwrap().len(),
                enumerate_partitions(n).len()
            );
        }
    }

    #[test]
    fn type_b_examples() {
        assert_eq!(strings(&basic_set_b(1, 3).unwrap()), ["[1]|[]", "[]|[1]"]);
        assert_eq!(strings(&basic_set_b(2, 2).unwrap()), ["[2]|[]", "[1]|[1]"]);
    }

    #[test]
    fn type_b_odd_count_is_a_convolution() {
        for e in [3, 5, 7] {
            for n in 0..=9 {
                let expected: usize = (0..=n)
                    .map(|a| count_e_regular(a, e).unwrap() * count_e_regular(n - a, e).unwrap())
                    .sum();
                assert_eq!(basic_set_b(n, e).unwrap().len(), expected, "n={n} e={e}");
            }
        }
    }

    #[test]
    fn type_d_examples() {
        assert_eq!(
            strings(&basic_set_d(2, 3).unwrap()),
            ["{[2],[]}", "{[1,1],[]}", "([1],+)", "([1],-)"]
        );
        assert_eq!(
            strings(&basic_set_d(3, 2).unwrap()),
            ["{[3],[]}", "{[2],[1]}"]
        );
        for e in 2..=5 {
            assert!(basic_set_d(3, e)
                .unwrap()
                .iter()
                .all(|l| matches!(l, BasicSetLabel::TypeDPair(_))));
        }
    }

    #[test]
    fn d3_matches_a3() {
        // D3 ≅ A3: the basic set sizes agree with e-regular partitions of 4
        for e in 2..=6 {
            assert_eq!(
                basic_set_d(3, e).unwrap().len(),
                count_e_regular(4, e).unwrap(),
                "e={e}"
            );
        }
    }

    #[test]
    fn frozen_counts() {
        // (n, e) -> (|B|, |D|) from an independent brute-force enumeration
        let table = [
            (4, [(2, 4, 3), (3, 16, 11), (4, 13, 9), (5, 20, 13)]),
            (6, [(2, 9, 6), (3, 44, 25), (4, 36, 23), (5, 61, 35)]),
        ];
        for (n, row) in table {
            for (e, b, d) in row {
                assert_eq!(basic_set_b(n, e).unwrap().len(), b, "B n={n} e={e}");
                assert_eq!(basic_set_d(n, e).unwrap().len(), d, "D n={n} e={e}");
            }
        }
    }

    #[test]
    fn semisimple_dispatch() {
        assert_eq!(
            basic_set(weyl(Family::A, 4), Parameter::Semisimple)
                .unwrap()
                .len(),
            5
        );
        assert_eq!(
            basic_set(weyl(Family::B, 2), Parameter::Semisimple)
                .unwrap()
                .len(),
            5
        );
        assert_eq!(
            basic_set(weyl(Family::A, 3), Parameter::RootOfUnity(2))
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn characteristic_p() {
        let a5 = weyl(Family::A, 5);
        assert_eq!(
            basic_set_char_p(a5, 3, 7).unwrap(),
            basic_set_char_p(a5, 3, 0).unwrap()
        );
        assert_eq!(
            basic_set_char_p(a5, 3, 2).unwrap(),
            basic_set_char_p(a5, 3, 0).unwrap()
        );
        assert_eq!(
            basic_set_char_p(weyl(Family::B, 3), 2, 2),
            Err(Error::BadCharacteristic {
                family: Family::B,
                p: 2
            })
        );
        let d4 = weyl(Family::D, 4);
        assert_eq!(
            basic_set_char_p(d4, 3, 3).unwrap(),
            basic_set_char_p(d4, 3, 0).unwrap()
        );
        assert!(basic_set_char_p(d4, 3, 2).is_err());
        assert_eq!(basic_set_char_p(d4, 3, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn even_e_orientation_is_recorded() {
        for entry in basic_set_d_detailed(6, 4).unwrap() {
            match entry.label {
                BasicSetLabel::TypeDPair(_) => assert!(entry.orientation.is_some()),
                _ => assert!(entry.orientation.is_none()),
            }
        }
    }

    #[test]
    fn label_rendering() {
        let l = |s: &str| s.parse::<Partition>().unwrap();
        let pair = BasicSetLabel::TypeDPair(UnorderedPair::new(l("[2]"), l("[3,1]")).unwrap());
        assert_eq!(pair.to_string(), "{[3,1],[2]}");
        assert_eq!("{[2], [3,1]}".parse::<BasicSetLabel>().unwrap(), pair);
        assert_eq!(
            BasicSetLabel::TypeDSplit(l("[2,1]"), Sign::Minus).to_string(),
            "([2,1],-)"
        );
        assert_eq!(
            "([2,1],+)".parse::<BasicSetLabel>().unwrap().to_string(),
            "([2,1],+)"
        );
        assert_eq!(
            "[3,1]|[2]".parse::<BasicSetLabel>().unwrap().family(),
            Family::B
        );
        assert_eq!(
            "[3,1]".parse::<BasicSetLabel>().unwrap().family(),
            Family::A
        );
        assert!("{[1],[1]}".parse::<BasicSetLabel>().is_err());
        assert!("([1],*)".parse::<BasicSetLabel>().is_err());
        assert!("[1]|[]|[]".parse::<BasicSetLabel>().is_err());
    }

    proptest! {
        #[test]
        fn labels_are_valid_simple_modules(n in 2usize..9, e in 2u32..7, family in 0..3usize) {
            let family = [Family::A, Family::B, Family::D][family];
            let w = weyl(family, n);
            let all = irr_labels(w);
            let basic = basic_set(w, Parameter::RootOfUnity(e)).unwrap();
            prop_assert!(basic.len() <= all.len());
            for label in &basic {
                prop_assert!(label.is_valid_for(w));
                prop_assert!(all.contains(label));
            }
        }

        #[test]
        fn split_labels_come_in_pairs(n in 2usize..10, e in 2u32..6) {
            let labels = basic_set_d(n, e).unwrap();
            let distinct: std::collections::HashSet<_> = labels.iter().collect();
            prop_assert_eq!(distinct.len(), labels.len());
            for label in &labels {
                if let BasicSetLabel::TypeDSplit(l, _) = label {
                    prop_assert_eq!(2 * l.rank(), n);
                    prop_assert!(labels.contains(&BasicSetLabel::TypeDSplit(l.clone(), Sign::Plus)));
                    prop_assert!(labels.contains(&BasicSetLabel::TypeDSplit(l.clone(), Sign::Minus)));
                }
            }
        }
    }
}
