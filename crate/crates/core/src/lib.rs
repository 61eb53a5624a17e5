//! Finite groups as dense multiplication tables, their subgroup lattices,
//! and the Chermak-Delgado measure `m_G(H) = |H| |C_G(H)|`.
//!
//! Elements are always indices `0..order` with the identity pinned at `0`.
//! Groups come from explicit tables, from presentations (coset enumeration),
//! or from the family constructors in [`constructors`].

pub mod analysis;
pub mod arith;
pub mod bits;
pub mod cd;
pub mod classify;
pub mod constructors;
mod error;
pub mod group;
pub mod lattice;
pub mod presentation;
pub mod properties;
pub mod theorems;

pub use analysis::Analysis;
pub use bits::ElemSet;
pub use cd::{cd_measure, cd_result, cd_subgroup, CdResult};
pub use classify::ClassificationReport;
pub use error::{Error, Result};
pub use group::{Group, Series, Subgroup, DEFAULT_ORDER_CAP};
pub use lattice::{enumerate_subgroups, generated_subgroup, SubgroupLattice};
pub use presentation::{enumerate, parse_presentation, Presentation};
