use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{GenKind, Generator, Representation, UqrsError};
use crate::linalg::{Matrix, SparseVec, Subspace};
use crate::scalars::Params;

/// An integral weight `Σ c_j ε_j` of `gl_n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn zero(n: usize) -> Self {
        Self { coords: vec![0; n] }
    }

    /// `ε_j`, 1-based.
    pub fn epsilon(n: usize, j: usize) -> Self {
        let mut w = Self::zero(n);
        w.coords[j - 1] = 1;
        w
    }

    /// The fundamental weight `ϖ_k = ε_1 + … + ε_k`.
    pub fn fundamental(n: usize, k: usize) -> Self {
        Self { coords: (0..n).map(|j| (j < k) as i64).collect() }
    }

    /// `ε_{i_1} + … + ε_{i_k}`, the weight of `v_{i_1} ⊗ … ⊗ v_{i_k}`.
    pub fn of_tuple(n: usize, tuple: &[usize]) -> Self {
        let mut w = Self::zero(n);
        for &i in tuple {
            w.coords[i - 1] += 1;
        }
        w
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// The character `λ̂` on the group-likes: `values[i-1] = (λ̂(ω_i), λ̂(ω_i′))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightChar<F> {
    pub values: Vec<(F, F)>,
}

/// `λ̂(ω_i) = r^{⟨ε_i,λ⟩} s^{⟨ε_{i+1},λ⟩}` and `λ̂(ω_i′) = r^{⟨ε_{i+1},λ⟩} s^{⟨ε_i,λ⟩}`.
pub fn weight_char<P: Params>(params: &P, weight: &Weight) -> WeightChar<P::F> {
    let c = &weight.coords;
    let values = (1..weight.n())
        .map(|i| (params.monomial(c[i - 1], c[i]), params.monomial(c[i], c[i - 1])))
        .collect();
    WeightChar { values }
}

/// Weight of every basis vector, read off the diagonal group-like actions.
pub fn basis_weights<P: Params>(params: &P, rep: &Representation<P::F>) -> Result<Vec<Weight>, UqrsError> {
    let n = rep.n();
    for i in 1..n {
        for kind in [GenKind::W, GenKind::Wp] {
            let g = Generator::new(kind, i);
            if !rep.get(g).is_diagonal() {
                return Err(UqrsError::NonDiagonalAction(g));
            }
        }
    }
    // group basis vectors by eigenvalue profile so exponents are extracted
    // once per distinct profile
    let mut profiles: BTreeMap<Vec<P::F>, Vec<usize>> = BTreeMap::new();
    for b in 0..rep.dim() {
        let profile: Vec<P::F> = (1..n)
            .flat_map(|i| [rep.w(i).diagonal_entry(b), rep.wp(i).diagonal_entry(b)])
            .collect();
        profiles.entry(profile).or_default().push(b);
    }
    let mut out = vec![Weight::zero(n); rep.dim()];
    for (profile, members) in profiles {
        let basis_index = members[0];
        let weight = weight_from_profile(params, &profile, n, basis_index)?;
        for b in members {
            out[b] = weight.clone();
        }
    }
    Ok(out)
}

fn weight_from_profile<P: Params>(params: &P, profile: &[P::F], n: usize, basis_index: usize) -> Result<Weight, UqrsError> {
    let exps = profile
        .iter()
        .map(|x| params.monomial_exponents(x).ok_or(UqrsError::NonMonomialEigenvalue { basis_index }))
        .collect::<Result<Vec<_>, _>>()?;
    // ω_i ~ r^{c_i} s^{c_{i+1}}, ω_i′ ~ r^{c_{i+1}} s^{c_i}
    let mut coords = vec![0; n];
    for i in 1..n {
        let (a, b) = exps[2 * (i - 1)];
        let (ap, bp) = exps[2 * (i - 1) + 1];
        if ap != b || bp != a || (i > 1 && coords[i - 1] != a) {
            return Err(UqrsError::InconsistentWeight { basis_index });
        }
        coords[i - 1] = a;
        coords[i] = b;
    }
    Ok(Weight { coords })
}

/// Decomposes a module with diagonal group-like action into weight spaces.
pub fn weight_spaces<P: Params>(
    params: &P,
    rep: &Representation<P::F>,
) -> Result<BTreeMap<Weight, Subspace<P::F>>, UqrsError> {
    let weights = basis_weights(params, rep)?;
    let mut groups: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (b, w) in weights.into_iter().enumerate() {
        groups.entry(w).or_default().push(b);
    }
    Ok(groups
        .into_iter()
        .map(|(w, idx)| (w, Subspace::span(rep.dim(), idx.into_iter().map(SparseVec::unit))))
        .collect())
}

/// A basis of `∩_i ker e_i`, each vector of a single weight. Weights are
/// listed in decreasing lexicographic order of their coordinates.
pub fn highest_weight_vectors<P: Params>(
    params: &P,
    rep: &Representation<P::F>,
) -> Result<Vec<(SparseVec<P::F>, Weight)>, UqrsError> {
    let weights = basis_weights(params, rep)?;
    let mut groups: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (b, w) in weights.into_iter().enumerate() {
        groups.entry(w).or_default().push(b);
    }
    let columns: Vec<Matrix<P::F>> = (1..rep.n()).map(|i| rep.e(i).transpose()).collect();
    let dim = rep.dim();
    let mut out = Vec::new();
    for (weight, idx) in groups.into_iter().rev() {
        // stacked e_i restricted to this weight space, rows compressed
        let mut row_ids: BTreeMap<usize, usize> = BTreeMap::new();
        let mut triples = Vec::new();
        for (local, &b) in idx.iter().enumerate() {
            for (i, cols) in columns.iter().enumerate() {
                for (row, c) in cols.row(b).iter() {
                    let next = row_ids.len();
                    let id = *row_ids.entry(i * dim + row).or_insert(next);
                    triples.push((id, local, c.clone()));
                }
            }
        }
        let local = Matrix::from_entries(row_ids.len(), idx.len(), triples);
        for v in local.kernel().basis() {
            let lifted = SparseVec::from_entries(v.iter().map(|(k, c)| (idx[k], c.clone())));
            out.push((lifted, weight.clone()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{RatFunc, Sampled, Symbolic};
    use crate::uqrs::{natural_rep, tensor_index, tensor_power_rep};

    #[test]
    fn char_of_epsilon_one() {
        let ch = weight_char(&Symbolic, &Weight::epsilon(2, 1));
        assert_eq!(ch.values, vec![(RatFunc::r(), RatFunc::s())]);
    }

    #[test]
    fn char_of_fundamental_weights() {
        let rs = &RatFunc::r() * &RatFunc::s();
        for n in 2..=5 {
            for k in 1..n {
                let ch = weight_char(&Symbolic, &Weight::fundamental(n, k));
                for (i, (w, _)) in ch.values.iter().enumerate() {
                    let i = i + 1;
                    let expected = match i.cmp(&k) {
                        core::cmp::Ordering::Less => rs.clone(),
                        core::cmp::Ordering::Equal => RatFunc::r(),
                        core::cmp::Ordering::Greater => RatFunc::one(),
                    };
                    assert_eq!(*w, expected, "n={n} k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn char_of_zero_is_trivial() {
        let ch = weight_char(&Symbolic, &Weight::zero(4));
        assert!(ch.values.iter().all(|(a, b)| a.is_one() && b.is_one()));
    }

    #[test]
    fn natural_rep_weights() {
        let spaces = weight_spaces(&Symbolic, &natural_rep(&Symbolic, 2).unwrap()).unwrap();
        let got: Vec<_> = spaces.iter().map(|(w, s)| (w.clone(), s.dim())).collect();
        assert_eq!(got, vec![(Weight::epsilon(2, 2), 1), (Weight::epsilon(2, 1), 1)]);
    }

    #[test]
    fn tensor_square_weights() {
        let p = Sampled::default();
        let v2 = tensor_power_rep(&natural_rep(&p, 2).unwrap(), 2).unwrap();
        let spaces = weight_spaces(&p, &v2).unwrap();
        let dims: BTreeMap<_, _> = spaces.iter().map(|(w, s)| (w.coords.clone(), s.dim())).collect();
        assert_eq!(dims, BTreeMap::from([(vec![2, 0], 1), (vec![1, 1], 2), (vec![0, 2], 1)]));
    }

    #[test]
    fn natural_rep_highest_vector_is_v1() {
        for n in 2..=4 {
            let hw = highest_weight_vectors(&Symbolic, &natural_rep(&Symbolic, n).unwrap()).unwrap();
            assert_eq!(hw, vec![(SparseVec::unit(0), Weight::epsilon(n, 1))]);
        }
    }

    #[test]
    fn tensor_square_highest_vectors() {
        let v2 = tensor_power_rep(&natural_rep(&Symbolic, 2).unwrap(), 2).unwrap();
        let hw = highest_weight_vectors(&Symbolic, &v2).unwrap();
        let alt = SparseVec::from_entries([
            (tensor_index(2, &[1, 2]), RatFunc::one()),
            (tensor_index(2, &[2, 1]), -RatFunc::r()),
        ]);
        assert_eq!(
            hw,
            vec![
                (SparseVec::unit(tensor_index(2, &[1, 1])), Weight { coords: vec![2, 0] }),
                (alt, Weight { coords: vec![1, 1] }),
            ]
        );
    }

    #[test]
    fn non_diagonal_group_like_is_rejected() {
        let v = natural_rep(&Symbolic, 2).unwrap();
        let g = Generator::new(GenKind::W, 1);
        let bad = v.clone().with_generator(g, v.e(1).add(v.w(1))).unwrap();
        assert_eq!(weight_spaces(&Symbolic, &bad), Err(UqrsError::NonDiagonalAction(g)));
    }
}
