// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors surfaced by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("empty point set")]
    Empty,

    #[error("input is not full-dimensional: hull dimension {hull_dim} in ambient dimension {ambient_dim}")]
    NotFullDimensional { hull_dim: usize, ambient_dim: usize },

    #[error("inequality system is unbounded")]
    Unbounded,

    #[error("inequality system is infeasible")]
    Infeasible,

    #[error("polytope has no {0} representation")]
    MissingRepresentation(&'static str),

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("origin is not an interior point; translate the polytope to its vertex barycenter first")]
    OriginNotInterior,

    #[error("rounded regular {n}-gon at {digits} digits is not in strictly convex position; increase the precision")]
    NotConvex { n: usize, digits: u32 },

    #[error("affine map does not send the source polytope into the target")]
    NotContained,

    #[error("hom dimension {dim} exceeds the limit {limit}")]
    TooLarge { dim: usize, limit: usize },

    #[error("epsilon {first} and epsilon {second} induce different partitions ({first_clusters} vs {second_clusters} clusters)")]
    UnstablePartition {
        first: String,
        second: String,
        first_clusters: usize,
        second_clusters: usize,
    },

    #[error("no nonvanishing certificate found after {0} attempts")]
    CertificateExhausted(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
