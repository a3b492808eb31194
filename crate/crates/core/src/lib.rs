// SPDX-License-Identifier: MIT
//! Combinatorics and exact linear algebra for Grassmannian cluster categories.
//!
//! Rank-1 modules are encoded by cyclic k-subsets, filtered modules by
//! profiles. The [`roots`] module maps profiles into the root system of the
//! Kac–Moody diagram attached to `(k, n)`, and [`oracle`] realizes modules as
//! lattice chains over a truncated polynomial ring for Hom/Ext computations.

pub mod artube;
pub mod configs;
pub mod enumeration;
pub mod error;
pub mod oracle;
pub mod profiles;
pub mod roots;
pub mod subsets;

pub use error::{Error, Result};
pub use profiles::Profile;
pub use subsets::KSubset;
