//! The generic Iwahori-Hecke algebra over `Z[v, v^-1]` in its standard basis
//! `{T_w}`, with `u = v^2` and
//!
//! ```text
//! T_s T_w = T_{sw}                   if l(sw) > l(w)
//! T_s T_w = u T_{sw} + (u - 1) T_w   if l(sw) < l(w)
//! ```

use std::collections::BTreeMap;

use super::group::{CoxeterGroup, ElementId};
use super::laurent::LaurentPoly;

/// An element of the Hecke algebra in `T`-basis coordinates. Zero
/// coordinates are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HeckeElement {
    coords: BTreeMap<ElementId, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `T_w`.
    pub fn basis(w: ElementId) -> Self {
        Self::monomial(w, LaurentPoly::one())
    }

    pub fn monomial(w: ElementId, coeff: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(w, &coeff, 1);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, w: ElementId) -> LaurentPoly {
        self.coords.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (ElementId, &LaurentPoly)> {
        self.coords.iter().map(|(&w, c)| (w, c))
    }

    pub fn support_len(&self) -> usize {
        self.coords.len()
    }

    /// `self += sign * coeff * T_w`.
    pub fn add_term(&mut self, w: ElementId, coeff: &LaurentPoly, sign: i64) {
        let entry = self.coords.entry(w).or_default();
        entry.add_shifted(coeff, 0, sign);
        if entry.is_zero() {
            self.coords.remove(&w);
        }
    }

    /// `self += sign * factor * other`.
    pub fn add_scaled(&mut self, other: &HeckeElement, factor: &LaurentPoly, sign: i64) {
        for (w, c) in other.terms() {
            let entry = self.coords.entry(w).or_default();
            entry.add_product(c, factor, sign);
            if entry.is_zero() {
                self.coords.remove(&w);
            }
        }
    }

    pub(crate) fn from_dense(dense: &Dense) -> Self {
        Self {
            coords: dense
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (ElementId(i as u32), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn to_dense(&self, order: usize) -> Dense {
        let mut dense = vec![LaurentPoly::zero(); order];
        for (w, c) in self.terms() {
            dense[w.index()] = c.clone();
        }
        dense
    }
}

/// Coordinates indexed by element; used in the hot loops.
pub(crate) type Dense = Vec<LaurentPoly>;

/// `T_s * x`.
pub(crate) fn left_generator(group: &CoxeterGroup, s: usize, x: &Dense) -> Dense {
    let mut out = vec![LaurentPoly::zero(); x.len()];
    for (i, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let w = ElementId(i as u32);
        let sw = group.left_mul(s, w).index();
        if group.length(ElementId(sw as u32)) > group.length(w) {
            out[sw].add_shifted(c, 0, 1);
        } else {
            out[sw].add_shifted(c, 2, 1);
            out[i].add_shifted(c, 2, 1);
            out[i].add_shifted(c, 0, -1);
        }
    }
    out
}

/// `x * T_s`.
pub(crate) fn right_generator(group: &CoxeterGroup, x: &Dense, s: usize) -> Dense {
    let mut out = vec![LaurentPoly::zero(); x.len()];
    for (i, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let w = ElementId(i as u32);
        let ws = group.right_mul(w, s).index();
        if group.length(ElementId(ws as u32)) > group.length(w) {
            out[ws].add_shifted(c, 0, 1);
        } else {
            out[ws].add_shifted(c, 2, 1);
            out[i].add_shifted(c, 2, 1);
            out[i].add_shifted(c, 0, -1);
        }
    }
    out
}

/// `T_w * y`, applying the generators of the normal form of `w` right to
/// left.
pub(crate) fn left_basis(group: &CoxeterGroup, w: ElementId, y: &Dense) -> Dense {
    group
        .word(w)
        .0
        .iter()
        .rev()
        .fold(y.clone(), |acc, &s| left_generator(group, s as usize, &acc))
}

/// Exact product of two Hecke algebra elements in the `T`-basis.
pub fn t_multiply(group: &CoxeterGroup, x: &HeckeElement, y: &HeckeElement) -> HeckeElement {
    let y_dense = y.to_dense(group.order());
    let mut out = vec![LaurentPoly::zero(); group.order()];
    for (w, c) in x.terms() {
        let tw_y = left_basis(group, w, &y_dense);
        for (dst, term) in out.iter_mut().zip(&tw_y) {
            dst.add_product(c, term, 1);
        }
    }
    HeckeElement::from_dense(&out)
}

/// Specializes `v -> 1`, giving an element of the integral group ring as a
/// map from group element to integer multiplicity.
pub fn specialize_at_one(x: &HeckeElement) -> BTreeMap<ElementId, i64> {
    x.terms()
        .map(|(w, c)| (w, c.eval_at_one()))
        .filter(|&(_, c)| c != 0)
        .collect()
}
