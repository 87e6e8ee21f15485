//! Partitions and symmetric functions in the monomial, elementary and
//! complete homogeneous bases.

mod convert;
mod mono;
mod partition;
mod specialize;
mod symfn;

pub use convert::{divide_by_e1, e1_valuation, e_in_m, is_integral, times_e1_power, to_basis};
pub use mono::{mono_mul, monomial_product};
pub use partition::{partitions_of, Partition};
pub use specialize::{
    specialize, specialize_ev2, specialize_ex, specialize_exbar, SpecValue, Specialization,
};
pub use symfn::{Basis, SymFn};
