use thiserror::Error;

/// Errors raised by matrix validation and the word problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("matrix has rank 0; a Coxeter system needs at least one generator")]
    EmptyMatrix,
    #[error("rank {rank} exceeds the configured maximum {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("diagonal entry ({index}, {index}) must be 1")]
    DiagonalNotOne { index: usize },
    #[error("entry ({row}, {col}) differs from entry ({col}, {row})")]
    NotSymmetric { row: usize, col: usize },
    #[error("off-diagonal entry ({row}, {col}) must be at least 2 or infinity")]
    OffDiagonalTooSmall { row: usize, col: usize },
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("search exceeded the cap of {cap} entries")]
    CapExceeded { cap: usize },
    #[error("generator subset is not spherical")]
    NotSpherical,
}

pub type Result<T, E = CoxeterError> = std::result::Result<T, E>;
