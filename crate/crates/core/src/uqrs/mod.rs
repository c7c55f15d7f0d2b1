//! Representations of `U_{r,s}(sl_n)`.
//!
//! A [`Representation`] is a list of matrices, one per generator symbol
//! `e_i, f_i, ω_i, ω_i′` and the inverses of the group-likes, for
//! `1 ≤ i ≤ n − 1`. Generator indices are 1-based to match their names; basis
//! indices of the module are 0-based.

mod hopf;
mod relations;
mod weights;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::Matrix;
use crate::scalars::{Params, Scalar};

pub use hopf::hopf_antipode_check;
pub use relations::check_defining_relations;
pub use weights::{basis_weights, highest_weight_vectors, weight_char, weight_spaces, Weight, WeightChar};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenKind {
    E,
    F,
    W,
    Wp,
    WInv,
    WpInv,
}

impl GenKind {
    pub const ALL: [GenKind; 6] = [GenKind::E, GenKind::F, GenKind::W, GenKind::Wp, GenKind::WInv, GenKind::WpInv];
}

/// A generator symbol such as `e_2` or `(ω_1′)^{-1}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator {
    pub kind: GenKind,
    /// 1-based, `1 ≤ index ≤ n − 1`.
    pub index: usize,
}

impl Generator {
    pub fn new(kind: GenKind, index: usize) -> Self {
        Self { kind, index }
    }

    /// All generator symbols of `U_{r,s}(sl_n)`.
    pub fn all(n: usize) -> impl Iterator<Item = Generator> {
        (1..n).flat_map(|i| GenKind::ALL.into_iter().map(move |k| Generator::new(k, i)))
    }
}

/// Serialization key: `e1`, `f1`, `w1`, `wp1`, `w1_inv`, `wp1_inv`.
impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = self.index;
        match self.kind {
            GenKind::E => write!(f, "e{i}"),
            GenKind::F => write!(f, "f{i}"),
            GenKind::W => write!(f, "w{i}"),
            GenKind::Wp => write!(f, "wp{i}"),
            GenKind::WInv => write!(f, "w{i}_inv"),
            GenKind::WpInv => write!(f, "wp{i}_inv"),
        }
    }
}

impl core::str::FromStr for Generator {
    type Err = UqrsError;

    fn from_str(s: &str) -> Result<Self, UqrsError> {
        let bad = || UqrsError::UnknownGenerator;
        let (body, inv) = match s.strip_suffix("_inv") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let (kind, digits) = if let Some(d) = body.strip_prefix("wp") {
            (if inv { GenKind::WpInv } else { GenKind::Wp }, d)
        } else if let Some(d) = body.strip_prefix('w') {
            (if inv { GenKind::WInv } else { GenKind::W }, d)
        } else if let Some(d) = body.strip_prefix('e').filter(|_| !inv) {
            (GenKind::E, d)
        } else if let Some(d) = body.strip_prefix('f').filter(|_| !inv) {
            (GenKind::F, d)
        } else {
            return Err(bad());
        };
        let index = digits.parse().map_err(|_| bad())?;
        Ok(Generator::new(kind, index))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UqrsError {
    InvalidRank { n: usize },
    InvalidPower { k: usize },
    MissingGenerator(Generator),
    UnknownGenerator,
    ShapeMismatch { generator: Generator, rows: usize, cols: usize, dim: usize },
    NonDiagonalAction(Generator),
    /// A group-like eigenvalue that is not of the form `r^a s^b`.
    NonMonomialEigenvalue { basis_index: usize },
    /// Eigenvalues of `ω_i`, `ω_i′` that no integral weight produces.
    InconsistentWeight { basis_index: usize },
}

impl fmt::Display for UqrsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidRank { n } => write!(f, "rank parameter n = {n} must be at least 2"),
            Self::InvalidPower { k } => write!(f, "tensor power k = {k} must be at least 1"),
            Self::MissingGenerator(g) => write!(f, "representation has no matrix for {g}"),
            Self::UnknownGenerator => f.write_str("unknown generator symbol"),
            Self::ShapeMismatch { generator, rows, cols, dim } => {
                write!(f, "{generator} is {rows}x{cols}, expected {dim}x{dim}")
            }
            Self::NonDiagonalAction(g) => write!(f, "{g} does not act diagonally"),
            Self::NonMonomialEigenvalue { basis_index } => {
                write!(f, "eigenvalue on basis vector {basis_index} is not a monomial in r, s")
            }
            Self::InconsistentWeight { basis_index } => {
                write!(f, "eigenvalues on basis vector {basis_index} do not come from an integral weight")
            }
        }
    }
}

impl core::error::Error for UqrsError {}

/// A finite-dimensional module given by generator matrices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation<F> {
    n: usize,
    dim: usize,
    gens: BTreeMap<Generator, Matrix<F>>,
}

impl<F: Scalar> Representation<F> {
    /// Checks that every generator of `U_{r,s}(sl_n)` has a `dim × dim` matrix.
    pub fn new(n: usize, dim: usize, gens: BTreeMap<Generator, Matrix<F>>) -> Result<Self, UqrsError> {
        if n < 2 {
            return Err(UqrsError::InvalidRank { n });
        }
        for g in Generator::all(n) {
            let m = gens.get(&g).ok_or(UqrsError::MissingGenerator(g))?;
            if m.nrows() != dim || m.ncols() != dim {
                return Err(UqrsError::ShapeMismatch { generator: g, rows: m.nrows(), cols: m.ncols(), dim });
            }
        }
        if gens.keys().any(|g| g.index == 0 || g.index >= n) {
            return Err(UqrsError::UnknownGenerator);
        }
        Ok(Self { n, dim, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &BTreeMap<Generator, Matrix<F>> {
        &self.gens
    }

    pub fn get(&self, g: Generator) -> &Matrix<F> {
        &self.gens[&g]
    }

    pub fn e(&self, i: usize) -> &Matrix<F> {
        self.get(Generator::new(GenKind::E, i))
    }

    pub fn f(&self, i: usize) -> &Matrix<F> {
        self.get(Generator::new(GenKind::F, i))
    }

    pub fn w(&self, i: usize) -> &Matrix<F> {
        self.get(Generator::new(GenKind::W, i))
    }

    pub fn wp(&self, i: usize) -> &Matrix<F> {
        self.get(Generator::new(GenKind::Wp, i))
    }

    pub fn w_inv(&self, i: usize) -> &Matrix<F> {
        self.get(Generator::new(GenKind::WInv, i))
    }

    pub fn wp_inv(&self, i: usize) -> &Matrix<F> {
        self.get(Generator::new(GenKind::WpInv, i))
    }

    /// Replaces one generator matrix (keeps the shape invariant).
    pub fn with_generator(mut self, g: Generator, m: Matrix<F>) -> Result<Self, UqrsError> {
        if m.nrows() != self.dim || m.ncols() != self.dim {
            return Err(UqrsError::ShapeMismatch { generator: g, rows: m.nrows(), cols: m.ncols(), dim: self.dim });
        }
        self.gens.insert(g, m);
        Ok(self)
    }

    /// Applies `f` to every generator matrix.
    pub fn try_map<G: Scalar, E>(&self, mut f: impl FnMut(&Matrix<F>) -> Result<Matrix<G>, E>) -> Result<Representation<G>, E> {
        let gens = self
            .gens
            .iter()
            .map(|(g, m)| Ok((*g, f(m)?)))
            .collect::<Result<BTreeMap<_, _>, E>>()?;
        Ok(Representation { n: self.n, dim: self.dim, gens })
    }
}

/// The natural `n`-dimensional module `V` with basis `v_1, …, v_n`:
/// `e_j = E_{j,j+1}`, `f_j = E_{j+1,j}`, `ω_j = r E_jj + s E_{j+1,j+1} + Σ_other E_kk`
/// and `ω_j′` the same with `r` and `s` swapped.
pub fn natural_rep<P: Params>(params: &P, n: usize) -> Result<Representation<P::F>, UqrsError> {
    if n < 2 {
        return Err(UqrsError::InvalidRank { n });
    }
    let (r, s) = (params.r(), params.s());
    let diag = |j: usize, at_j: &P::F, at_next: &P::F| {
        Matrix::diagonal((0..n).map(|k| match k {
            k if k == j - 1 => at_j.clone(),
            k if k == j => at_next.clone(),
            _ => P::F::one(),
        }))
    };
    let (r_inv, s_inv) = (r.inv().unwrap(), s.inv().unwrap());
    let mut gens = BTreeMap::new();
    for j in 1..n {
        gens.insert(Generator::new(GenKind::E, j), Matrix::unit(n, j - 1, j));
        gens.insert(Generator::new(GenKind::F, j), Matrix::unit(n, j, j - 1));
        gens.insert(Generator::new(GenKind::W, j), diag(j, &r, &s));
        gens.insert(Generator::new(GenKind::Wp, j), diag(j, &s, &r));
        gens.insert(Generator::new(GenKind::WInv, j), diag(j, &r_inv, &s_inv));
        gens.insert(Generator::new(GenKind::WpInv, j), diag(j, &s_inv, &r_inv));
    }
    Representation::new(n, n, gens)
}

/// The `k`-th tensor power of `base` through the iterated coproduct:
///
/// * `e_i ↦ Σ_j ω_i^{⊗(j−1)} ⊗ e_i ⊗ 1^{⊗(k−j)}`
/// * `f_i ↦ Σ_j 1^{⊗(j−1)} ⊗ f_i ⊗ (ω_i′)^{⊗(k−j)}`
/// * group-likes `ω ↦ ω^{⊗k}`.
///
/// Basis vectors are ordered lexicographically on index tuples.
pub fn tensor_power_rep<F: Scalar>(base: &Representation<F>, k: usize) -> Result<Representation<F>, UqrsError> {
    if k < 1 {
        return Err(UqrsError::InvalidPower { k });
    }
    if k == 1 {
        return Ok(base.clone());
    }
    let d = base.dim;
    let id_powers: Vec<Matrix<F>> = (0..k).map(|m| Matrix::identity(d.pow(m as u32))).collect();
    let powers = |m: &Matrix<F>| -> Vec<Matrix<F>> {
        let mut out = Vec::with_capacity(k + 1);
        out.push(Matrix::identity(1));
        for p in 0..k {
            let next = out[p].kron(m);
            out.push(next);
        }
        out
    };
    let mut gens = BTreeMap::new();
    for i in 1..base.n {
        let w_pow = powers(base.w(i));
        let wp_pow = powers(base.wp(i));
        let e = (1..=k).fold(Matrix::zeros(d.pow(k as u32), d.pow(k as u32)), |acc, j| {
            acc.add(&w_pow[j - 1].kron(base.e(i)).kron(&id_powers[k - j]))
        });
        let f = (1..=k).fold(Matrix::zeros(d.pow(k as u32), d.pow(k as u32)), |acc, j| {
            acc.add(&id_powers[j - 1].kron(base.f(i)).kron(&wp_pow[k - j]))
        });
        gens.insert(Generator::new(GenKind::E, i), e);
        gens.insert(Generator::new(GenKind::F, i), f);
        gens.insert(Generator::new(GenKind::W, i), w_pow[k].clone());
        gens.insert(Generator::new(GenKind::Wp, i), wp_pow[k].clone());
        gens.insert(Generator::new(GenKind::WInv, i), base.w_inv(i).kron_power(k));
        gens.insert(Generator::new(GenKind::WpInv, i), base.wp_inv(i).kron_power(k));
    }
    Representation::new(base.n, d.pow(k as u32), gens)
}

/// Position of `v_{i_1} ⊗ … ⊗ v_{i_k}` (1-based indices) in the lexicographic
/// basis of `V^{⊗k}`, 0-based.
pub fn tensor_index(n: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * n + (i - 1))
}

/// Inverse of [`tensor_index`].
pub fn tensor_tuple(n: usize, k: usize, mut index: usize) -> Vec<usize> {
    let mut out = alloc::vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = index % n + 1;
        index /= n;
    }
    out
}
