// SPDX-License-Identifier: MIT
//! Exact module computations over a truncated power series ring.

pub mod fp;
pub mod matrices;
pub mod module;
pub mod series;

pub use fp::Field;
pub use matrices::TruncatedModule;
pub use module::{Module, Presentation};
pub use series::PolyMat;

/// The two primes used for cross-checks.
pub const PRIMES: [u64; 2] = [32003, 65537];

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 2024;

/// Oracle parameters shared by the profile-level algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Config {
    pub prime: u64,
    pub seed: u64,
    pub iso_trials: usize,
    pub indec_trials: usize,
    /// Largest syzygy rank that profile recovery will attempt.
    pub max_rank: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { prime: PRIMES[0], seed: DEFAULT_SEED, iso_trials: 50, indec_trials: 20, max_rank: 3 }
    }
}
