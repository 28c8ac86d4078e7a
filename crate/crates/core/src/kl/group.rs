//! Small Weyl groups of types A, B, D, realized as (signed) permutation
//! groups.
//!
//! Generators are numbered `s1, s2, ...`:
//!
//! - `A_r` (on `r+1` letters): `s_i` swaps `i` and `i+1`.
//! - `B_n`: `s1` negates the first coordinate; `s_{i+1}` swaps `i`, `i+1`.
//! - `D_n`: `s1` sends `(x1, x2)` to `(-x2, -x1)`; `s_{i+1}` swaps `i`, `i+1`.
//!
//! Elements are identified by their lexicographically least reduced word in
//! this numbering and indexed in increasing (length, word) order, so the
//! identity is element 0 and the longest element is last.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::weyl::{Family, WeylType};

pub const DEFAULT_MAX_ORDER: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(pub u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A reduced word, as 0-based generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm(pub Vec<u8>);

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for &s in &self.0 {
            write!(f, "s{}", s + 1)?;
        }
        Ok(())
    }
}

/// `perm[k]` is the signed image of `k + 1`.
type SignedPerm = Vec<i8>;

fn compose(f: &[i8], g: &[i8]) -> SignedPerm {
    g.iter()
        .map(|&x| {
            let image = f[x.unsigned_abs() as usize - 1];
            if x < 0 {
                -image
            } else {
                image
            }
        })
        .collect()
}

fn generators(w: WeylType) -> Vec<SignedPerm> {
    let letters = w.n();
    let identity: SignedPerm = (1..=letters as i8).collect();
    let swap = |i: usize| {
        let mut p = identity.clone();
        p.swap(i - 1, i);
        p
    };
    match w.family() {
        Family::A => (1..letters).map(swap).collect(),
        Family::B => {
            let mut flip = identity.clone();
            flip[0] = -1;
            std::iter::once(flip)
                .chain((1..letters).map(swap))
                .collect()
        }
        Family::D => {
            let mut flip = identity.clone();
            flip[0] = -2;
            flip[1] = -1;
            std::iter::once(flip)
                .chain((1..letters).map(swap))
                .collect()
        }
    }
}

/// Row-major square bit matrix.
#[derive(Debug, Clone)]
struct BitMatrix {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        Self {
            words_per_row,
            bits: vec![0; words_per_row * n],
        }
    }

    fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.words_per_row + col / 64] >> (col % 64) & 1 == 1
    }

    fn set(&mut self, row: usize, col: usize) {
        self.bits[row * self.words_per_row + col / 64] |= 1 << (col % 64);
    }
}

#[derive(Debug, Clone)]
pub struct CoxeterGroup {
    weyl: WeylType,
    rank: usize,
    perms: Vec<SignedPerm>,
    lookup: HashMap<SignedPerm, ElementId>,
    words: Vec<NormalForm>,
    lengths: Vec<usize>,
    /// `left[s][w] = s w`
    left: Vec<Vec<ElementId>>,
    /// `right[s][w] = w s`
    right: Vec<Vec<ElementId>>,
    /// row `w` holds every `x <= w`
    bruhat: BitMatrix,
}

/// Builds the group of type `w`, refusing groups of order above `max_order`.
pub fn build_group(w: WeylType, max_order: usize) -> Result<CoxeterGroup> {
    CoxeterGroup::new(w, max_order)
}

impl CoxeterGroup {
    pub fn new(w: WeylType, max_order: usize) -> Result<Self> {
        let order = w.order();
        if order > max_order as u128 {
            return Err(Error::GroupTooLarge { order, max_order });
        }
        let gens = generators(w);
        let rank = gens.len();

        // breadth-first search on the right Cayley graph gives lengths
        let identity: SignedPerm = (1..=w.n() as i8).collect();
        let mut perms = vec![identity.clone()];
        let mut lengths = vec![0usize];
        let mut lookup = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let next = compose(&perms[i], g);
                if !lookup.contains_key(&next) {
                    lookup.insert(next.clone(), perms.len());
                    queue.push_back(perms.len());
                    lengths.push(lengths[i] + 1);
                    perms.push(next);
                }
            }
        }
        debug_assert_eq!(perms.len() as u128, order);

        let left_of = |s: usize, i: usize| lookup[&compose(&gens[s], &perms[i])];

        // lex-least reduced word: smallest left descent, then recurse
        let mut by_length: Vec<usize> = (0..perms.len()).collect();
        by_length.sort_by_key(|&i| lengths[i]);
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); perms.len()];
        for &i in &by_length[1..] {
            let s = (0..rank)
                .find(|&s| lengths[left_of(s, i)] < lengths[i])
                .expect("non-identity elements have a left descent");
            let mut word = vec![s as u8];
            word.extend_from_slice(&words[left_of(s, i)]);
            words[i] = word;
        }

        let mut order_idx: Vec<usize> = (0..perms.len()).collect();
        order_idx.sort_by(|&a, &b| (lengths[a], &words[a]).cmp(&(lengths[b], &words[b])));
        let perms: Vec<SignedPerm> = order_idx.iter().map(|&i| perms[i].clone()).collect();
        let lengths: Vec<usize> = order_idx.iter().map(|&i| lengths[i]).collect();
        let words: Vec<NormalForm> = order_idx
            .iter()
            .map(|&i| NormalForm(words[i].clone()))
            .collect();
        let lookup: HashMap<SignedPerm, ElementId> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), ElementId(i as u32)))
            .collect();

        let table = |f: &dyn Fn(&SignedPerm, &SignedPerm) -> SignedPerm| -> Vec<Vec<ElementId>> {
            gens.iter()
                .map(|g| perms.iter().map(|p| lookup[&f(g, p)]).collect())
                .collect()
        };
        let left = table(&|g, p| compose(g, p));
        let right = table(&|g, p| compose(p, g));

        let mut group = Self {
            weyl: w,
            rank,
            perms,
            lookup,
            words,
            lengths,
            left,
            right,
            bruhat: BitMatrix::new(0),
        };
        group.bruhat = group.compute_bruhat();
        Ok(group)
    }

    /// For `s` a left descent of `w`: `x <= w` iff `min(x, sx) <= sw`.
    fn compute_bruhat(&self) -> BitMatrix {
        let n = self.order();
        let mut m = BitMatrix::new(n);
        m.set(0, 0);
        for w in 1..n {
            let s = self.words[w].0[0] as usize;
            let sw = self.left[s][w].index();
            for x in 0..n {
                let sx = self.left[s][x].index();
                let lower = if self.lengths[sx] < self.lengths[x] {
                    sx
                } else {
                    x
                };
                if m.get(sw, lower) {
                    m.set(w, x);
                }
            }
        }
        m
    }

    pub fn weyl_type(&self) -> WeylType {
        self.weyl
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    /// Number of simple reflections.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = ElementId> + ExactSizeIterator {
        (0..self.order() as u32).map(ElementId)
    }

    pub fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    pub fn longest(&self) -> ElementId {
        ElementId(self.order() as u32 - 1)
    }

    pub fn generator(&self, s: usize) -> ElementId {
        self.left[s][0]
    }

    pub fn length(&self, w: ElementId) -> usize {
        self.lengths[w.index()]
    }

    pub fn word(&self, w: ElementId) -> &NormalForm {
        &self.words[w.index()]
    }

    pub fn find_word(&self, word: &[u8]) -> Option<ElementId> {
        word.iter().rev().try_fold(ElementId::IDENTITY, |acc, &s| {
            ((s as usize) < self.rank).then(|| self.left_mul(s as usize, acc))
        })
    }

    pub fn left_mul(&self, s: usize, w: ElementId) -> ElementId {
        self.left[s][w.index()]
    }

    pub fn right_mul(&self, w: ElementId, s: usize) -> ElementId {
        self.right[s][w.index()]
    }

    pub fn multiply(&self, x: ElementId, y: ElementId) -> ElementId {
        self.lookup[&compose(&self.perms[x.index()], &self.perms[y.index()])]
    }

    pub fn inverse(&self, w: ElementId) -> ElementId {
        let p = &self.perms[w.index()];
        let mut inv = vec![0i8; p.len()];
        for (k, &image) in p.iter().enumerate() {
            let sign = image.signum();
            inv[image.unsigned_abs() as usize - 1] = sign * (k as i8 + 1);
        }
        self.lookup[&inv]
    }

    pub fn is_left_descent(&self, s: usize, w: ElementId) -> bool {
        self.length(self.left_mul(s, w)) < self.length(w)
    }

    /// Bruhat order `x <= w`.
    pub fn bruhat_le(&self, x: ElementId, w: ElementId) -> bool {
        self.bruhat.get(w.index(), x.index())
    }

    /// One-line notation (images of `1..n`) for type A elements.
    pub fn permutation(&self, w: ElementId) -> Option<Vec<usize>> {
        (self.weyl.family() == Family::A)
            .then(|| self.perms[w.index()].iter().map(|&x| x as usize).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(f: Family, n: usize) -> CoxeterGroup {
        build_group(WeylType::new(f, n).unwrap(), DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn small_groups() {
        let a1 = group(Family::A, 2);
        assert_eq!(a1.order(), 2);
        assert_eq!(
            a1.elements().map(|w| a1.length(w)).collect::<Vec<_>>(),
            [0, 1]
        );
        let a2 = group(Family::A, 3);
        assert_eq!(a2.order(), 6);
        assert_eq!(a2.length(a2.longest()), 3);
        let b2 = group(Family::B, 2);
        assert_eq!(b2.order(), 8);
        assert_eq!(b2.length(b2.longest()), 4);
        assert_eq!(
            group(Family::D, 4).length(group(Family::D, 4).longest()),
            12
        );
        assert_eq!(group(Family::B, 3).length(group(Family::B, 3).longest()), 9);
    }

    #[test]
    fn order_guard() {
        let a9 = WeylType::from_coxeter_rank(Family::A, 9).unwrap();
        assert!(matches!(
            build_group(a9, DEFAULT_MAX_ORDER),
            Err(Error::GroupTooLarge { .. })
        ));
        assert!(build_group(WeylType::new(Family::B, 3).unwrap(), 47).is_err());
    }

    #[test]
    fn normal_forms() {
        let a2 = group(Family::A, 3);
        let words: Vec<String> = a2.elements().map(|w| a2.word(w).to_string()).collect();
        assert_eq!(words, ["e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"]);
        for w in a2.elements() {
            assert_eq!(a2.find_word(&a2.word(w).0), Some(w));
            assert_eq!(a2.word(w).0.len(), a2.length(w));
        }
    }

    /// Lengths from inversion counts of signed permutations.
    #[test]
    fn lengths_match_inversion_counts() {
        for (f, n) in [(Family::A, 4), (Family::B, 3), (Family::D, 4)] {
            let g = group(f, n);
            for w in g.elements() {
                let p = &g.perms[w.index()];
                let mut inv = 0;
                for i in 0..p.len() {
                    for j in i + 1..p.len() {
                        let (a, b) = (p[i] as i32, p[j] as i32);
                        inv += usize::from(a > b);
                        if f != Family::A {
                            inv += usize::from(-a > b);
                        }
                    }
                    if f == Family::B && p[i] < 0 {
                        inv += 1;
                    }
                }
                assert_eq!(g.length(w), inv, "{f}{n} {}", g.word(w));
            }
        }
    }

    #[test]
    fn group_axioms() {
        let g = group(Family::B, 3);
        for x in g.elements() {
            assert_eq!(g.multiply(x, g.inverse(x)), g.identity());
            assert_eq!(g.length(g.inverse(x)), g.length(x));
            for s in 0..g.rank() {
                assert_eq!(g.left_mul(s, x), g.multiply(g.generator(s), x));
                assert_eq!(g.right_mul(x, s), g.multiply(x, g.generator(s)));
                assert_eq!(g.left_mul(s, g.left_mul(s, x)), x);
            }
        }
    }

    /// Subword property: `x <= w` iff some subword of a reduced word of `w`
    /// multiplies to `x`.
    #[test]
    fn bruhat_matches_subword_property() {
        for (f, n) in [(Family::A, 4), (Family::B, 3), (Family::D, 3)] {
            let g = group(f, n);
            for w in g.elements() {
                let word = &g.word(w).0;
                let mut below = vec![false; g.order()];
                for mask in 0u32..(1 << word.len()) {
                    let sub: Vec<u8> = word
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &s)| s)
                        .collect();
                    below[g.find_word(&sub).unwrap().index()] = true;
                }
                for x in g.elements() {
                    assert_eq!(
                        g.bruhat_le(x, w),
                        below[x.index()],
                        "{} <= {}",
                        g.word(x),
                        g.word(w)
                    );
                }
            }
        }
    }

    #[test]
    fn degenerate_d_types() {
        // D2 = A1 x A1
        let d2 = group(Family::D, 2);
        assert_eq!(d2.order(), 4);
        assert_eq!(
            d2.multiply(d2.generator(0), d2.generator(1)),
            d2.multiply(d2.generator(1), d2.generator(0))
        );
        assert_eq!(group(Family::D, 3).order(), 24);
    }
}
