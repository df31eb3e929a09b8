use thiserror::Error;

use crate::roots::RootReport;

/// Errors produced by the exact and numeric layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree vector undefined for empty partition")]
    EmptyPartition,

    #[error("not a partition: parts must be positive and weakly decreasing")]
    NotAPartition,

    #[error("character arguments of unequal weight: |lambda| = {lambda}, |mu| = {mu}")]
    WeightMismatch { lambda: usize, mu: usize },

    #[error("oracle restricted to small n: n = {0} exceeds 7")]
    OracleTooLarge(usize),

    #[error("k exceeds floor(n/q): q = {q}, k = {k}, n = {n}")]
    KOutOfRange { q: usize, k: usize, n: usize },

    #[error("Vandermonde division failed for lambda = {lambda}")]
    VandermondeDivision { lambda: String },

    #[error("inexact coefficient division at {context}")]
    InexactCoefficient { context: String },

    #[error("polynomial is not stride-{stride} symmetric: nonzero coefficient at power {power}")]
    StrideViolation { stride: usize, power: usize },

    #[error("root finder did not converge after {iterations} iterations")]
    RootsDidNotConverge {
        iterations: usize,
        /// Best approximations available when the iteration cap was hit.
        partial: Box<RootReport>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
