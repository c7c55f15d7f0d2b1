use alloc::vec::Vec;

use crate::scalars::Scalar;

/// A sparse vector: nonzero `(index, value)` pairs sorted by index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F: Scalar> Default for SparseVec<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Scalar> SparseVec<F> {
    pub fn zero() -> Self {
        Self { entries: Vec::new() }
    }

    /// The standard basis vector `e_i`.
    pub fn unit(i: usize) -> Self {
        Self { entries: alloc::vec![(i, F::one())] }
    }

    /// Builds a vector from arbitrary pairs: sorts, sums duplicates, drops zeros.
    pub fn from_entries<I: IntoIterator<Item = (usize, F)>>(entries: I) -> Self {
        let mut entries: Vec<(usize, F)> = entries.into_iter().collect();
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, F)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc = acc.clone() + c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { entries: out }
    }

    /// Wraps pairs already sorted by strictly increasing index with no zeros.
    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, F)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        Self { entries }
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, F)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&F> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    /// First nonzero coordinate.
    pub fn leading(&self) -> Option<(usize, &F)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { entries: self.entries.iter().map(|(i, x)| (*i, x.clone() * c)).collect() }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &F, other: &Self) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) if i == j => {
                    let v = x.clone() + y.clone() * c;
                    if !v.is_zero() {
                        out.push((*i, v));
                    }
                    a.next();
                    b.next();
                }
                (Some((i, x)), Some((j, _))) if i < j => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (Some(_), Some((j, y))) | (None, Some((j, y))) => {
                    out.push((*j, y.clone() * c));
                    b.next();
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, None) => break,
            }
        }
        Self { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.axpy(&F::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.axpy(&(-F::one()), other)
    }

    pub fn dot(&self, other: &Self) -> F {
        let (short, long) = if self.nnz() <= other.nnz() { (self, other) } else { (other, self) };
        short
            .iter()
            .filter_map(|(i, x)| long.get(i).map(|y| x.clone() * y))
            .fold(F::zero(), |acc, t| acc + t)
    }

    /// Applies a fallible map to every entry, dropping entries that map to zero.
    pub fn try_map<G: Scalar, E>(&self, mut f: impl FnMut(&F) -> Result<G, E>) -> Result<SparseVec<G>, E> {
        let mut out = Vec::with_capacity(self.entries.len());
        for (i, c) in &self.entries {
            let v = f(c)?;
            if !v.is_zero() {
                out.push((*i, v));
            }
        }
        Ok(SparseVec { entries: out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::BigRat;

    fn v(es: &[(usize, i64)]) -> SparseVec<BigRat> {
        SparseVec::from_entries(es.iter().map(|&(i, c)| (i, BigRat::from_int(c))))
    }

    #[test]
    fn axpy_merges_and_cancels() {
        let a = v(&[(0, 1), (2, 3), (5, 1)]);
        let b = v(&[(1, 4), (2, 1), (6, 2)]);
        assert_eq!(a.axpy(&BigRat::from_int(-3), &b), v(&[(0, 1), (1, -12), (5, 1), (6, -6)]));
        assert_eq!(a.sub(&a), SparseVec::zero());
    }

    #[test]
    fn from_entries_normalizes() {
        assert_eq!(v(&[(3, 1), (1, 2), (3, -1)]), v(&[(1, 2)]));
        assert_eq!(v(&[(0, 2), (4, 1)]).dot(&v(&[(4, 5), (7, 1)])), BigRat::from_int(5));
    }
}
