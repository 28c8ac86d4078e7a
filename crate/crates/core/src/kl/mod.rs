//! Small-rank Weyl groups, Hecke algebra arithmetic, the Kazhdan-Lusztig
//! basis and Lusztig's a-function.

pub mod basis;
pub mod group;
pub mod hecke;
pub mod laurent;
pub mod rsk;

pub use basis::{a_value, kl_basis, structure_constants, KlBasis, KlTable};
pub use group::{build_group, CoxeterGroup, ElementId, NormalForm, DEFAULT_MAX_ORDER};
pub use hecke::{specialize_at_one, t_multiply, HeckeElement};
pub use laurent::LaurentPoly;
pub use rsk::{rsk_cell_avalue_type_a, rsk_shape, RskAValues};
