// SPDX-License-Identifier: MIT
//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("mismatched parameters: {0}")]
    Mismatch(String),
    #[error("degenerate collapse")]
    DegenerateCollapse,
    #[error("label not common to all rows: {0}")]
    LabelNotCommon(usize),
    #[error("label present in some row: {0}")]
    LabelPresent(usize),
    #[error("not in ℤⁿ(k): coordinate sum {sum} not divisible by {k}")]
    NotInLattice { sum: i64, k: usize },
    #[error("zero vector has no root type")]
    ZeroVector,
    #[error("no configuration for rank < 2")]
    RankTooSmall,
    #[error("profile recovery failed: {0}")]
    RecoveryFailed(String),
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("subset has the wrong shape: {0}")]
    Shape(String),
    #[error("the splitting rule holds if and only if n ≥ 7 (got n = {0})")]
    SplitNeedsSeven(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
