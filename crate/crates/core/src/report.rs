//! Verification reports shared by every checker.

use alloc::string::String;
use alloc::vec::Vec;

use crate::linalg::{Matrix, SparseVec};
use crate::scalars::Scalar;

/// A basis vector on which the two sides of a matrix identity disagree,
/// together with the two image columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness<F> {
    pub relation: String,
    pub witness_basis_index: usize,
    pub lhs: SparseVec<F>,
    pub rhs: SparseVec<F>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check<F> {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness<F>>,
    /// Free-form detail for checks that are not matrix identities.
    pub detail: Option<String>,
}

/// Outcome of a verification suite: every check that ran, in order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Report<F> {
    pub suite: String,
    pub checks: Vec<Check<F>>,
}

impl<F: Scalar> Report<F> {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check<F>> + '_ {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn find(&self, name: &str) -> Option<&Check<F>> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Records the matrix identity `lhs == rhs`.
    pub fn check_eq(&mut self, name: impl Into<String>, lhs: &Matrix<F>, rhs: &Matrix<F>) -> bool {
        let name = name.into();
        let witness = lhs.first_differing_column(rhs).map(|j| Witness {
            relation: name.clone(),
            witness_basis_index: j,
            lhs: lhs.column(j),
            rhs: rhs.column(j),
        });
        let passed = witness.is_none();
        self.checks.push(Check { name, passed, witness, detail: None });
        passed
    }

    /// Records `m == 0`.
    pub fn check_zero(&mut self, name: impl Into<String>, m: &Matrix<F>) -> bool {
        self.check_eq(name, m, &Matrix::zeros(m.nrows(), m.ncols()))
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) -> bool {
        self.checks.push(Check { name: name.into(), passed, witness: None, detail });
        passed
    }

    pub fn extend(&mut self, other: Report<F>) {
        self.checks.extend(other.checks);
    }
}
