use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::subspace::{Echelon, Subspace};
use super::vector::SparseVec;
use crate::scalars::Scalar;

/// Sparse matrix over an exact field, stored by rows.
///
/// Acts on column vectors: entry `(a, b)` is the coefficient of output basis
/// vector `a` in the image of input basis vector `b`. Indices are 0-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<F> {
    cols: usize,
    rows: Vec<SparseVec<F>>,
}

/// Result of exact Gaussian elimination on a matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KernelImageRank<F> {
    pub kernel: Subspace<F>,
    pub image: Subspace<F>,
    pub rank: usize,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { cols, rows: vec![SparseVec::zero(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, F::one())
    }

    pub fn scalar(n: usize, c: F) -> Self {
        Self::diagonal((0..n).map(|_| c.clone()))
    }

    pub fn diagonal<I: IntoIterator<Item = F>>(diag: I) -> Self {
        let rows: Vec<_> = diag
            .into_iter()
            .enumerate()
            .map(|(i, c)| SparseVec::from_entries([(i, c)]))
            .collect();
        Self { cols: rows.len(), rows }
    }

    /// The matrix unit `E_{ij}` of size `n` (0-based `i`, `j`).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        Self::from_entries(n, n, [(i, j, F::one())])
    }

    /// Builds a matrix from `(row, col, value)` triples, summing duplicates.
    pub fn from_entries<I: IntoIterator<Item = (usize, usize, F)>>(rows: usize, cols: usize, entries: I) -> Self {
        let mut buckets: Vec<Vec<(usize, F)>> = vec![Vec::new(); rows];
        for (i, j, c) in entries {
            assert!(i < rows && j < cols, "entry ({i}, {j}) outside {rows}x{cols}");
            buckets[i].push((j, c));
        }
        Self { cols, rows: buckets.into_iter().map(SparseVec::from_entries).collect() }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec<F>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.entries().last().is_none_or(|(j, _)| *j < cols)));
        Self { cols, rows }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVec<F>]) -> Self {
        Self::from_rows(columns.len(), columns.to_vec()).transpose_with_rows(rows)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec<F> {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&F> {
        self.rows[i].get(j)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_zero)
    }

    /// Nonzero entries sorted by `(row, col)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, c)| (i, j, c)))
    }

    /// True if no entry lies off the diagonal.
    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(i, j, _)| i == j)
    }

    pub fn diagonal_entry(&self, i: usize) -> F {
        self.get(i, i).cloned().unwrap_or_else(F::zero)
    }

    pub fn transpose(&self) -> Self {
        self.transpose_with_rows(self.cols)
    }

    fn transpose_with_rows(&self, new_rows: usize) -> Self {
        let mut cols: Vec<Vec<(usize, F)>> = vec![Vec::new(); new_rows];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter() {
                cols[j].push((i, c.clone()));
            }
        }
        Self {
            cols: self.rows.len(),
            rows: cols.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        }
    }

    /// Column `j` as a sparse vector.
    pub fn column(&self, j: usize) -> SparseVec<F> {
        SparseVec::from_sorted_unchecked(
            self.rows
                .iter()
                .enumerate()
                .filter_map(|(i, r)| r.get(j).map(|c| (i, c.clone())))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        self.axpy(&F::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.axpy(&(-F::one()), other)
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &F, other: &Self) -> Self {
        assert_eq!((self.nrows(), self.cols), (other.nrows(), other.cols), "shape mismatch");
        Self {
            cols: self.cols,
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.axpy(c, b)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Self { cols: self.cols, rows: self.rows.iter().map(|r| r.scale(c)).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-F::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.nrows(), "inner dimensions differ");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, F> = BTreeMap::new();
                for (k, a) in row.iter() {
                    for (j, b) in other.rows[k].iter() {
                        let t = a.clone() * b;
                        match acc.get_mut(&j) {
                            Some(x) => *x = x.clone() + t,
                            None => {
                                acc.insert(j, t);
                            }
                        }
                    }
                }
                SparseVec::from_sorted_unchecked(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            })
            .collect();
        Self { cols: other.cols, rows }
    }

    pub fn mul_vec(&self, v: &SparseVec<F>) -> SparseVec<F> {
        SparseVec::from_sorted_unchecked(
            self.rows
                .iter()
                .enumerate()
                .map(|(i, r)| (i, r.dot(v)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        )
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Kronecker product; `v_i ⊗ w_k` sits at index `i·dim(w) + k`.
    pub fn kron(&self, other: &Self) -> Self {
        let (br, bc) = (other.nrows(), other.cols);
        let mut rows = Vec::with_capacity(self.nrows() * br);
        for arow in &self.rows {
            for brow in &other.rows {
                let mut entries = Vec::with_capacity(arow.nnz() * brow.nnz());
                for (j, a) in arow.iter() {
                    for (l, b) in brow.iter() {
                        entries.push((j * bc + l, a.clone() * b));
                    }
                }
                rows.push(SparseVec::from_sorted_unchecked(entries));
            }
        }
        Self { cols: self.cols * bc, rows }
    }

    /// `self ⊗ self ⊗ … ⊗ self` (`k` factors; the 1×1 identity for `k = 0`).
    pub fn kron_power(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(1), |acc, _| acc.kron(self))
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        (0..e).fold(Self::identity(self.cols), |acc, _| acc.mul(self))
    }

    pub fn try_map<G: Scalar, E>(&self, mut f: impl FnMut(&F) -> Result<G, E>) -> Result<Matrix<G>, E> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.try_map(&mut f))
            .collect::<Result<Vec<_>, E>>()?;
        Ok(Matrix { cols: self.cols, rows })
    }

    pub fn map<G: Scalar>(&self, mut f: impl FnMut(&F) -> G) -> Matrix<G> {
        self.try_map(|c| Ok::<_, core::convert::Infallible>(f(c))).unwrap()
    }

    /// Index of the first column on which two equally shaped matrices differ.
    pub fn first_differing_column(&self, other: &Self) -> Option<usize> {
        assert_eq!((self.nrows(), self.cols), (other.nrows(), other.cols), "shape mismatch");
        self.rows
            .iter()
            .zip(&other.rows)
            .filter(|(a, b)| a != b)
            .filter_map(|(a, b)| {
                // smallest column index where the rows disagree
                let mut ia = a.iter().peekable();
                let mut ib = b.iter().peekable();
                loop {
                    match (ia.peek(), ib.peek()) {
                        (Some((i, x)), Some((j, y))) if i == j => {
                            if x != y {
                                return Some(*i);
                            }
                            ia.next();
                            ib.next();
                        }
                        (Some((i, _)), Some((j, _))) => return Some(*i.min(j)),
                        (Some((i, _)), None) => return Some(*i),
                        (None, Some((j, _))) => return Some(*j),
                        (None, None) => return None,
                    }
                }
            })
            .min()
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new();
        for row in &self.rows {
            ech.insert(row.clone());
        }
        ech.rank()
    }

    /// Null space `{x : A x = 0}`.
    pub fn kernel(&self) -> Subspace<F> {
        let mut ech = Echelon::new();
        for row in &self.rows {
            ech.insert(row.clone());
        }
        ech.reduce_fully();
        // x_f = 1 on a free column, x_p = -R[p][f] on each pivot column p
        let mut kernel_vecs: BTreeMap<usize, Vec<(usize, F)>> = (0..self.cols)
            .filter(|j| !ech.is_pivot(*j))
            .map(|f| (f, vec![(f, F::one())]))
            .collect();
        for (p, row) in ech.rows() {
            for (f, c) in row.iter().skip(1) {
                kernel_vecs
                    .get_mut(&f)
                    .expect("fully reduced row touches only free columns")
                    .push((p, -c.clone()));
            }
        }
        Subspace::span(self.cols, kernel_vecs.into_values().map(SparseVec::from_entries))
    }

    /// Column space.
    pub fn image(&self) -> Subspace<F> {
        Subspace::span(self.nrows(), self.transpose().rows)
    }

    /// Kernel, column space and rank by exact Gaussian elimination.
    pub fn kernel_image_rank(&self) -> KernelImageRank<F> {
        let kernel = self.kernel();
        let image = self.image();
        let rank = image.dim();
        debug_assert_eq!(rank + kernel.dim(), self.cols);
        KernelImageRank { kernel, image, rank }
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.cols;
        let mut ech = Echelon::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut entries = row.entries().to_vec();
            entries.push((n + i, F::one()));
            ech.insert(SparseVec::from_sorted_unchecked(entries));
        }
        ech.reduce_fully();
        if ech.rank() != n || !(0..n).all(|j| ech.is_pivot(j)) {
            return None;
        }
        let rows = ech
            .into_basis()
            .into_iter()
            .map(|r| SparseVec::from_sorted_unchecked(r.into_entries().into_iter().skip(1).map(|(j, c)| (j - n, c)).collect()))
            .collect();
        Some(Self { cols: n, rows })
    }

    /// True iff `∏ (self − c·I)` over `factors` is the zero matrix.
    pub fn annihilated_by(&self, factors: &[F]) -> bool {
        assert!(self.is_square(), "annihilation check needs a square matrix");
        let n = self.cols;
        let prod = factors.iter().fold(Matrix::identity(n), |acc, c| {
            acc.mul(&self.axpy(&(-c.clone()), &Matrix::identity(n)))
        });
        prod.is_zero()
    }
}

/// Interprets `factors` as the polynomial `∏ (t − c)` and tests whether it
/// annihilates `a`.
pub fn annihilation_check<F: Scalar>(a: &Matrix<F>, factors: &[F]) -> bool {
    a.annihilated_by(factors)
}
