use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::matrix::Matrix;
use super::vector::SparseVec;
use super::LinalgError;
use crate::scalars::Scalar;

/// Incremental row echelon form keyed by pivot column.
///
/// Every stored row has its pivot (first nonzero coordinate) equal to 1.
/// After [`Echelon::reduce_fully`] no row has a nonzero entry in another
/// row's pivot column.
#[derive(Clone, Debug)]
pub(crate) struct Echelon<F> {
    rows: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Scalar> Echelon<F> {
    pub(crate) fn new() -> Self {
        Self { rows: BTreeMap::new() }
    }

    /// Reduces `v` against the stored rows and keeps the remainder if nonzero.
    /// Returns the new pivot, if any.
    pub(crate) fn insert(&mut self, v: SparseVec<F>) -> Option<usize> {
        let rem = self.reduce_leading(v);
        let (lead, c) = rem.leading()?;
        let inv = c.inv().expect("leading entry is nonzero");
        let row = rem.scale(&inv);
        self.rows.insert(lead, row);
        Some(lead)
    }

    /// Eliminates leading coordinates until the leading one is not a pivot.
    fn reduce_leading(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        while let Some((lead, c)) = v.leading() {
            match self.rows.get(&lead) {
                Some(row) => {
                    let c = -c.clone();
                    v = v.axpy(&c, row);
                }
                None => break,
            }
        }
        v
    }

    pub(crate) fn reduce_fully(&mut self) {
        let pivots: Vec<usize> = self.rows.keys().rev().copied().collect();
        for p in pivots {
            let row = &self.rows[&p];
            let hits: Vec<(usize, F)> = row
                .iter()
                .skip(1)
                .filter(|(t, _)| self.rows.contains_key(t))
                .map(|(t, c)| (t, c.clone()))
                .collect();
            if hits.is_empty() {
                continue;
            }
            // rows with larger pivots are already reduced, so one pass suffices
            let mut v = row.clone();
            for (t, c) in hits {
                v = v.axpy(&(-c), &self.rows[&t]);
            }
            self.rows.insert(p, v);
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn is_pivot(&self, j: usize) -> bool {
        self.rows.contains_key(&j)
    }

    pub(crate) fn rows(&self) -> impl Iterator<Item = (usize, &SparseVec<F>)> + '_ {
        self.rows.iter().map(|(p, r)| (*p, r))
    }

    pub(crate) fn into_basis(self) -> Vec<SparseVec<F>> {
        self.rows.into_values().collect()
    }
}

/// A subspace of `F^ambient_dim`, held as a reduced row echelon basis.
///
/// Pivots (first nonzero coordinates) are strictly increasing, each pivot
/// entry is 1, and every basis vector vanishes on the other pivots. The basis
/// is therefore canonical and `==` is equality of subspaces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<F> {
    ambient_dim: usize,
    basis: Vec<SparseVec<F>>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: (0..ambient_dim).map(SparseVec::unit).collect() }
    }

    /// The span of arbitrary vectors.
    pub fn span<I: IntoIterator<Item = SparseVec<F>>>(ambient_dim: usize, vectors: I) -> Self {
        let mut ech = Echelon::new();
        for v in vectors {
            debug_assert!(v.entries().last().is_none_or(|(i, _)| *i < ambient_dim));
            ech.insert(v);
        }
        ech.reduce_fully();
        Self { ambient_dim, basis: ech.into_basis() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.basis.iter().map(|b| b.leading().unwrap().0)
    }

    /// Subtracts the basis components on pivot coordinates; the remainder is
    /// zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = v.clone();
        for b in &self.basis {
            let p = b.leading().unwrap().0;
            if let Some(c) = out.get(p) {
                let c = -c.clone();
                out = out.axpy(&c, b);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    /// The span of the union of the parts.
    pub fn sum(parts: &[Self]) -> Result<Self, LinalgError> {
        let Some(first) = parts.first() else {
            return Err(LinalgError::EmptySum);
        };
        let ambient = first.ambient_dim;
        if let Some(bad) = parts.iter().find(|p| p.ambient_dim != ambient) {
            return Err(LinalgError::AmbientMismatch { expected: ambient, found: bad.ambient_dim });
        }
        Ok(Self::span(ambient, parts.iter().flat_map(|p| p.basis.iter().cloned())))
    }

    /// The basis vectors as the columns of an `ambient_dim × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }
}

/// See [`Subspace::sum`].
pub fn subspace_sum<F: Scalar>(parts: &[Subspace<F>]) -> Result<Subspace<F>, LinalgError> {
    Subspace::sum(parts)
}

/// Coset data for `F^ambient / sub`.
///
/// Representatives are the coordinates that are not pivots of `sub`; the
/// projection sends every ambient basis vector to its coset expanded in the
/// representatives.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientData<F> {
    ambient_dim: usize,
    sub: Subspace<F>,
    rep_indices: Vec<usize>,
    /// `rep_position[t]` is the index of coordinate `t` among the
    /// representatives, or `None` if `t` is a pivot.
    rep_position: Vec<Option<usize>>,
    /// `pivot_row[t]` is the basis row of `sub` with pivot `t`.
    pivot_row: Vec<Option<usize>>,
}

impl<F: Scalar> QuotientData<F> {
    pub fn new(sub: Subspace<F>) -> Self {
        let ambient_dim = sub.ambient_dim();
        let mut pivot_row = vec![None; ambient_dim];
        for (k, p) in sub.pivots().enumerate() {
            pivot_row[p] = Some(k);
        }
        let mut rep_position = vec![None; ambient_dim];
        let mut rep_indices = Vec::new();
        for t in 0..ambient_dim {
            if pivot_row[t].is_none() {
                rep_position[t] = Some(rep_indices.len());
                rep_indices.push(t);
            }
        }
        Self { ambient_dim, sub, rep_indices, rep_position, pivot_row }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn sub(&self) -> &Subspace<F> {
        &self.sub
    }

    pub fn rep_indices(&self) -> &[usize] {
        &self.rep_indices
    }

    pub fn dim(&self) -> usize {
        self.rep_indices.len()
    }

    /// Position of ambient coordinate `t` among the representatives.
    pub fn rep_position(&self, t: usize) -> Option<usize> {
        self.rep_position[t]
    }

    /// Coset of `v` in representative coordinates.
    pub fn project(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut terms = Vec::new();
        for (t, c) in v.iter() {
            if let Some(pos) = self.rep_position[t] {
                terms.push((pos, c.clone()));
            } else {
                // e_t ≡ e_t − b_t, and b_t is supported on t and representatives
                let row = &self.sub.basis()[self.pivot_row[t].unwrap()];
                for (u, d) in row.iter().skip(1) {
                    terms.push((self.rep_position[u].unwrap(), -(c.clone() * d)));
                }
            }
        }
        SparseVec::from_entries(terms)
    }

    /// The projection as a `dim × ambient_dim` matrix.
    pub fn projection(&self) -> Matrix<F> {
        let cols: Vec<_> = (0..self.ambient_dim).map(|t| self.project(&SparseVec::unit(t))).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// The inclusion of representative coordinates, `ambient_dim × dim`.
    pub fn inclusion(&self) -> Matrix<F> {
        Matrix::from_entries(
            self.ambient_dim,
            self.dim(),
            self.rep_indices.iter().enumerate().map(|(k, &t)| (t, k, F::one())),
        )
    }
}

/// See [`QuotientData::new`].
pub fn quotient_data<F: Scalar>(sub: Subspace<F>) -> QuotientData<F> {
    QuotientData::new(sub)
}
