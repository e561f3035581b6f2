//! Exact-arithmetic invariants of polynomial functors on free groups.
//!
//! The library computes, over the rationals:
//!
//! * partition and Young-tableau combinatorics ([`partition`]);
//! * symmetric functions in the Schur and power-sum bases, symmetric-group
//!   characters, Littlewood-Richardson products and plethysm ([`symfunc`]);
//! * the decomposition of the Lie modules into simples ([`lie`]);
//! * composition factors of the injective polynomial functors on free
//!   groups, bigraded by arity ([`beta`]);
//! * outer subobjects and coaction cokernels of those injectives, with
//!   extension dimensions in the full and outer categories ([`outer`]);
//! * graded dimension tables for the homology of wedges of circles with
//!   functorial coefficients and the derived-tensor dimensions of the
//!   associated filtration ([`hochschild`]).
//!
//! All arithmetic is exact; integer outputs are asserted integral before
//! they are returned. The `grfunc` binary in this crate exposes every
//! operation as a subcommand; the `examples/` directory has one runnable
//! example per capability.

pub mod beta;
pub mod cli;
pub mod error;
pub mod hochschild;
pub mod lie;
pub mod outer;
pub mod partition;
pub mod symfunc;

pub use beta::{beta_class, psi_pcoalg_class, BigradedClass, GrothendieckClass, WeightSequence};
pub use error::{Error, Result};
pub use hochschild::{hh_dual_numbers, hh_inj_fin, hh_inj_gamma, tor_gamma_dim, HHTable};
pub use lie::{lie_module, lie_module_oracle, LieClass};
pub use outer::{adbar_euler, ext1_dim, ext1_out_dim, is_outer_beta, omega_beta, OuterReport};
pub use partition::{partitions_of, Partition, StandardTableau};
pub use symfunc::{
    lr_coefficient, mn_character, plethysm, power_to_schur, schur_product, schur_to_power,
    ClassFunction, PowerVector, SchurVector,
};
