//! Sparse exact linear algebra over any [`Scalar`](crate::scalars::Scalar) field.

mod matrix;
mod subspace;
mod vector;

use core::fmt;

pub use matrix::{annihilation_check, KernelImageRank, Matrix};
pub use subspace::{quotient_data, subspace_sum, QuotientData, Subspace};
pub use vector::SparseVec;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LinalgError {
    AmbientMismatch { expected: usize, found: usize },
    EmptySum,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AmbientMismatch { expected, found } => {
                write!(f, "subspaces live in different ambient spaces ({expected} vs {found})")
            }
            Self::EmptySum => f.write_str("sum of an empty list of subspaces"),
        }
    }
}

impl core::error::Error for LinalgError {}
