//! Robinson-Schensted insertion for permutations, used as an independent
//! check on a-values in type A.

use crate::partition::Partition;

/// Shape of the insertion tableau of `perm` (one-line notation, any
/// distinct values), by row insertion.
pub fn rsk_shape(perm: &[usize]) -> Partition {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in perm {
        let mut carry = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            match row.iter().position(|&y| y > carry) {
                Some(i) => carry = std::mem::replace(&mut row[i], carry),
                None => {
                    row.push(carry);
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            rows.push(vec![carry]);
        }
    }
    Partition::new(rows.iter().map(|r| r.len() as u32).collect::<Vec<_>>())
        .expect("insertion tableau rows are weakly decreasing")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RskAValues {
    pub shape: Partition,
    /// `n(λ)` for the RSK shape `λ`.
    pub n_shape: usize,
    /// `n(λ')` for the conjugate shape.
    pub n_conjugate: usize,
}

/// Both candidate a-values attached to the two-sided cell of `perm`.
/// Across the full table `a(w) = n(λ)` where `λ` is the RSK shape of `w`.
pub fn rsk_cell_avalue_type_a(perm: &[usize]) -> RskAValues {
    let shape = rsk_shape(perm);
    RskAValues {
        n_shape: shape.weighted_size(),
        n_conjugate: shape.conjugate().weighted_size(),
        shape,
    }
}
