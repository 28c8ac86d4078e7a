//! Kazhdan-Lusztig basis, structure constants `h_{x,y,z}` and Lusztig's
//! a-function.
//!
//! Normalization: `C_s = v^-1 (T_s + T_e)`, so that `C_s C_s = (v + v^-1) C_s`.
//! In general `C_w = v^{-l(w)} Σ_{y <= w} P_{y,w}(u) T_y` with `P_{w,w} = 1`.

use std::fmt::Write as _;

use rayon::prelude::*;

use super::group::{CoxeterGroup, ElementId};
use super::hecke::{left_generator, right_generator, Dense, HeckeElement};
use super::laurent::LaurentPoly;

/// `C_w` for every `w`, sparse in the `T`-basis (supported on the Bruhat
/// interval below `w`).
#[derive(Debug, Clone)]
pub struct KlBasis {
    order: usize,
    elements: Vec<Vec<(ElementId, LaurentPoly)>>,
}

impl KlBasis {
    pub fn element(&self, w: ElementId) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (y, c) in &self.elements[w.index()] {
            out.add_term(*y, c, 1);
        }
        out
    }

    /// The `T_y` coordinate of `C_w`.
    pub fn coefficient(&self, y: ElementId, w: ElementId) -> LaurentPoly {
        self.elements[w.index()]
            .binary_search_by_key(&y, |(e, _)| *e)
            .map(|i| self.elements[w.index()][i].1.clone())
            .unwrap_or_default()
    }

    /// `P_{y,w}` as a polynomial in `u`, returned as `(power of u, coeff)`.
    pub fn kl_polynomial(
        &self,
        group: &CoxeterGroup,
        y: ElementId,
        w: ElementId,
    ) -> Vec<(i32, i64)> {
        let lw = group.length(w) as i32;
        self.coefficient(y, w)
            .shift(lw)
            .terms()
            .map(|(e, c)| {
                debug_assert!(e % 2 == 0);
                (e / 2, c)
            })
            .collect()
    }

    /// Leading coefficient `μ(y, w)`: the coefficient of `v^{-l(y)-1}` in the
    /// `T_y` coordinate of `C_w`.
    pub fn mu(&self, group: &CoxeterGroup, y: ElementId, w: ElementId) -> i64 {
        self.coefficient(y, w).coeff(-(group.length(y) as i32) - 1)
    }

    fn sparse(&self, w: ElementId) -> &[(ElementId, LaurentPoly)] {
        &self.elements[w.index()]
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

fn to_sparse(dense: Dense) -> Vec<(ElementId, LaurentPoly)> {
    dense
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (ElementId(i as u32), c))
        .collect()
}

/// Builds `C_w` by induction on length: for `s` a left descent of `w`,
///
/// `C_w = C_s C_{sw} - Σ μ(z, sw) C_z`
///
/// summed over `z < sw` with `sz < z`.
pub fn kl_basis(group: &CoxeterGroup) -> KlBasis {
    let n = group.order();
    let mut elements: Vec<Vec<(ElementId, LaurentPoly)>> = vec![Vec::new(); n];
    elements[0] = vec![(ElementId::IDENTITY, LaurentPoly::one())];

    for w in group.elements().skip(1) {
        let s = group.word(w).0[0] as usize;
        let prev = group.left_mul(s, w);
        let mut prev_dense = vec![LaurentPoly::zero(); n];
        for (y, c) in &elements[prev.index()] {
            prev_dense[y.index()] = c.clone();
        }
        // C_s C_prev = v^-1 (T_s C_prev + C_prev)
        let mut next = left_generator(group, s, &prev_dense);
        for (dst, c) in next.iter_mut().zip(&prev_dense) {
            dst.add_shifted(c, 0, 1);
        }
        for c in next.iter_mut() {
            *c = c.shift(-1);
        }
        for (z, c) in &elements[prev.index()] {
            if *z == prev || !group.is_left_descent(s, *z) {
                continue;
            }
            let mu = c.coeff(-(group.length(*z) as i32) - 1);
            if mu != 0 {
                for (y, cz) in &elements[z.index()] {
                    next[y.index()].add_shifted(cz, 0, -mu);
                }
            }
        }
        elements[w.index()] = to_sparse(next);
    }
    KlBasis { order: n, elements }
}

/// Structure constants of the KL basis and the a-function.
#[derive(Debug, Clone)]
pub struct KlTable {
    order: usize,
    basis: KlBasis,
    /// `h[x * order + y]` lists the nonzero `h_{x,y,z}` by increasing `z`.
    h: Vec<Vec<(ElementId, LaurentPoly)>>,
    a_values: Vec<u32>,
}

/// Computes every `h_{x,y,z}` by multiplying KL basis elements in the
/// `T`-basis and back-substituting along the unitriangular change of basis,
/// then derives `a(z)` from the pole orders.
pub fn structure_constants(group: &CoxeterGroup) -> KlTable {
    structure_constants_with_basis(group, kl_basis(group))
}

pub fn structure_constants_with_basis(group: &CoxeterGroup, basis: KlBasis) -> KlTable {
    let n = group.order();
    let rows: Vec<Vec<Vec<(ElementId, LaurentPoly)>>> = group
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|x| products_with(group, &basis, x))
        .collect();
    let h: Vec<_> = rows.into_iter().flatten().collect();

    let mut a_values = vec![0u32; n];
    for entries in &h {
        for (z, poly) in entries {
            if let Some(low) = poly.min_exponent() {
                let a = &mut a_values[z.index()];
                *a = (*a).max((-low).max(0) as u32);
            }
        }
    }
    KlTable {
        order: n,
        basis,
        h,
        a_values,
    }
}

/// `h_{x,y,·}` for all `y`.
fn products_with(
    group: &CoxeterGroup,
    basis: &KlBasis,
    x: ElementId,
) -> Vec<Vec<(ElementId, LaurentPoly)>> {
    let n = group.order();
    // c_x_t[w] = C_x T_w, built along the normal form of w
    let mut c_x_t: Vec<Dense> = Vec::with_capacity(n);
    let mut start = vec![LaurentPoly::zero(); n];
    for (y, c) in basis.sparse(x) {
        start[y.index()] = c.clone();
    }
    c_x_t.push(start);
    for w in group.elements().skip(1) {
        let word = &group.word(w).0;
        let last = *word.last().unwrap() as usize;
        let prefix = group.right_mul(w, last);
        let next = right_generator(group, &c_x_t[prefix.index()], last);
        c_x_t.push(next);
    }

    group
        .elements()
        .map(|y| {
            let mut product = vec![LaurentPoly::zero(); n];
            for (w, coeff) in basis.sparse(y) {
                for (dst, term) in product.iter_mut().zip(&c_x_t[w.index()]) {
                    dst.add_product(coeff, term, 1);
                }
            }
            back_substitute(group, basis, product)
        })
        .collect()
}

/// Rewrites a `T`-basis vector in the KL basis. Processing `z` by
/// decreasing length, the coordinate at `z` is `v^{-l(z)} h_z` because
/// every longer coordinate has already been cleared.
///
/// # Panics
///
/// Panics if a nonzero residual remains, which would mean the basis is not
/// unitriangular.
fn back_substitute(
    group: &CoxeterGroup,
    basis: &KlBasis,
    mut v: Dense,
) -> Vec<(ElementId, LaurentPoly)> {
    let mut out = Vec::new();
    for z in group.elements().rev() {
        if v[z.index()].is_zero() {
            continue;
        }
        let h = v[z.index()].shift(group.length(z) as i32);
        for (y, c) in basis.sparse(z) {
            v[y.index()].add_product(&h, c, -1);
        }
        out.push((z, h));
    }
    assert!(
        v.iter().all(LaurentPoly::is_zero),
        "nonzero residual after back-substitution"
    );
    out.reverse();
    out
}

impl KlTable {
    pub fn basis(&self) -> &KlBasis {
        &self.basis
    }

    pub fn h(&self, x: ElementId, y: ElementId, z: ElementId) -> LaurentPoly {
        let entries = &self.h[x.index() * self.order + y.index()];
        entries
            .binary_search_by_key(&z, |(e, _)| *e)
            .map(|i| entries[i].1.clone())
            .unwrap_or_default()
    }

    /// Nonzero `h_{x,y,z}` for fixed `x, y`, by increasing `z`.
    pub fn product_terms(&self, x: ElementId, y: ElementId) -> &[(ElementId, LaurentPoly)] {
        &self.h[x.index() * self.order + y.index()]
    }

    /// Least `a >= 0` with `v^a h_{x,y,z}` in `Z[v]` for all `x, y`.
    pub fn a_value(&self, z: ElementId) -> u32 {
        self.a_values[z.index()]
    }

    pub fn a_values(&self) -> &[u32] {
        &self.a_values
    }

    /// One line per element: `word → a`.
    pub fn a_value_dump(&self, group: &CoxeterGroup) -> String {
        let mut out = String::new();
        for z in group.elements() {
            writeln!(out, "{} → {}", group.word(z), self.a_value(z)).unwrap();
        }
        out
    }

    /// One line per nonzero `h_{x,y,z}`: `x y z exp:coeff ...`, ordered by
    /// `x`, then `y`, then `z`.
    pub fn h_dump(&self, group: &CoxeterGroup) -> String {
        let mut out = String::new();
        for x in group.elements() {
            for y in group.elements() {
                for (z, poly) in self.product_terms(x, y) {
                    writeln!(
                        out,
                        "{} {} {} {}",
                        group.word(x),
                        group.word(y),
                        group.word(*z),
                        poly.to_sparse_string()
                    )
                    .unwrap();
                }
            }
        }
        out
    }
}

pub fn a_value(table: &KlTable, z: ElementId) -> u32 {
    table.a_value(z)
}
