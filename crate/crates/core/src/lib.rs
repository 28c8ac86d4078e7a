//! Canonical basic sets of Iwahori-Hecke algebras of classical Weyl groups.
//!
//! - [`partition`] and [`multipartition`]: partitions, d-partitions, residues
//!   and FLOTW membership.
//! - [`basic_set`]: the canonical basic sets of types A, B and D at an
//!   `e`-th root of unity, in characteristic 0 or a good prime.
//! - [`kl`]: Hecke algebra arithmetic, Kazhdan-Lusztig structure constants
//!   and a-values for small groups.
//! - [`cyclo`]: the parameter `e`, cyclotomic identities and good primes.

pub mod basic_set;
pub mod cyclo;
pub mod error;
pub mod kl;
pub mod multipartition;
pub mod partition;
pub mod weyl;

pub use basic_set::{
    basic_set, basic_set_a, basic_set_b, basic_set_char_p, basic_set_d, basic_set_d_detailed,
    irr_count, irr_labels, BasicSetLabel, DEntry, PairOrientation, Parameter, Sign, UnorderedPair,
};
pub use cyclo::{
    check_phi_identity, compute_e, cyclotomic, is_good_prime, IntPoly, SpecializationSpec,
};
pub use error::{Error, Result};
pub use multipartition::{
    check_flotw, enumerate_flotw, enumerate_multipartitions, is_flotw, residue, right_end_residues,
    FlotwViolation, MultiPartition, Node, Residue, WeightSet,
};
pub use partition::{
    count_e_regular, count_parts_not_divisible, enumerate_partitions, is_e_regular, part_at,
    Partition,
};
pub use weyl::{Family, WeylType};
