//! The constant R-matrix on `V ⊗ V`, its Yang-Baxterization `R(z)`, and the
//! identities they satisfy.
//!
//! `R(z)` is never a matrix over a field containing `z`. It is the pencil
//! `A + z·B`; identities in `z` are certified by evaluation.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{annihilation_check, Matrix};
use crate::report::Report;
use crate::scalars::{Params, QFunc, RatFunc, Scalar, ScalarError, Symbolic};
use crate::uqrs::{natural_rep, tensor_power_rep, UqrsError};

/// Grid for the spectral Yang-Baxter check. Both sides have degree at most
/// two in each of `z` and `w`, so agreement on three values per variable
/// already forces equality.
pub const YBE_GRID: [i64; 4] = [1, 2, 3, 5];

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RMatrixError {
    SingularInput,
    /// Two constructions of `R(z)` that must agree do not.
    InternalMismatch(&'static str),
    Representation(UqrsError),
    Scalar(ScalarError),
}

impl fmt::Display for RMatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SingularInput => f.write_str("R-matrix is not invertible"),
            Self::InternalMismatch(what) => write!(f, "constructions of R(z) disagree: {what}"),
            Self::Representation(e) => write!(f, "{e}"),
            Self::Scalar(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RMatrixError {}

impl From<ScalarError> for RMatrixError {
    fn from(e: ScalarError) -> Self {
        Self::Scalar(e)
    }
}

impl From<UqrsError> for RMatrixError {
    fn from(e: UqrsError) -> Self {
        Self::Representation(e)
    }
}

/// `R(z) = A + z·B` on `V ⊗ V` with `dim V = n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectralRMatrix<F> {
    pub n: usize,
    pub a: Matrix<F>,
    pub b: Matrix<F>,
}

impl<F: Scalar> SpectralRMatrix<F> {
    pub fn eval(&self, z: &F) -> Matrix<F> {
        self.a.axpy(z, &self.b)
    }

    pub fn try_map<G: Scalar, E>(&self, mut f: impl FnMut(&Matrix<F>) -> Result<Matrix<G>, E>) -> Result<SpectralRMatrix<G>, E> {
        Ok(SpectralRMatrix { n: self.n, a: f(&self.a)?, b: f(&self.b)? })
    }
}

/// `R = Σ E_ii⊗E_ii + r Σ_{i<j} E_ji⊗E_ij + s⁻¹ Σ_{i<j} E_ij⊗E_ji + (1 − rs⁻¹) Σ_{i<j} E_jj⊗E_ii`.
pub fn build_r<P: Params>(params: &P, n: usize) -> Matrix<P::F> {
    let r = params.r();
    let s_inv = params.s().inv().expect("s ≠ 0");
    let cross = P::F::one() - params.ratio();
    let idx = |a: usize, b: usize| a * n + b;
    let mut entries = Vec::new();
    for i in 0..n {
        entries.push((idx(i, i), idx(i, i), P::F::one()));
        for j in (i + 1)..n {
            // v_i⊗v_j ↦ r v_j⊗v_i;  v_j⊗v_i ↦ s⁻¹ v_i⊗v_j + (1 − rs⁻¹) v_j⊗v_i
            entries.push((idx(j, i), idx(i, j), r.clone()));
            entries.push((idx(i, j), idx(j, i), s_inv.clone()));
            entries.push((idx(j, i), idx(j, i), cross.clone()));
        }
    }
    Matrix::from_entries(n * n, n * n, entries)
}

/// `R⁻¹ = r⁻¹s·R + (1 − r⁻¹s)·I`.
pub fn build_r_inverse<P: Params>(params: &P, n: usize) -> Matrix<P::F> {
    let c = params.monomial(-1, 1);
    let r = build_r(params, n);
    r.scale(&c).add(&Matrix::scalar(n * n, P::F::one() - c))
}

/// `R(z) = λ₂⁻¹·R + z·λ₁·R⁻¹`, for `R` on `V ⊗ V`.
pub fn yang_baxterize<F: Scalar>(r: &Matrix<F>, lambda1: &F, lambda2: &F) -> Result<SpectralRMatrix<F>, RMatrixError> {
    let dim = r.nrows();
    let n = (0..=dim).find(|n| n * n >= dim).unwrap_or(0);
    if !r.is_square() || n * n != dim {
        return Err(RMatrixError::SingularInput);
    }
    let r_inv = r.inverse().ok_or(RMatrixError::SingularInput)?;
    let l2_inv = lambda2.inv().ok_or(RMatrixError::SingularInput)?;
    if lambda1.is_zero() {
        return Err(RMatrixError::SingularInput);
    }
    Ok(SpectralRMatrix { n, a: r.scale(&l2_inv), b: r_inv.scale(lambda1) })
}

/// `R(z)` written out entrywise:
/// `(1 − z rs⁻¹) Σ E_ii⊗E_ii + (1 − z)(r Σ_{i<j} E_ji⊗E_ij + s⁻¹ Σ_{i<j} E_ij⊗E_ji)
///  + z(1 − rs⁻¹) Σ_{i<j} E_ii⊗E_jj + (1 − rs⁻¹) Σ_{i<j} E_jj⊗E_ii`.
pub fn build_r_z_direct<P: Params>(params: &P, n: usize) -> SpectralRMatrix<P::F> {
    let one = P::F::one();
    let q = params.ratio();
    let r = params.r();
    let s_inv = params.s().inv().expect("s ≠ 0");
    let cross = one.clone() - &q;
    let idx = |a: usize, b: usize| a * n + b;
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for i in 0..n {
        a.push((idx(i, i), idx(i, i), one.clone()));
        b.push((idx(i, i), idx(i, i), -q.clone()));
        for j in (i + 1)..n {
            a.push((idx(j, i), idx(i, j), r.clone()));
            b.push((idx(j, i), idx(i, j), -r.clone()));
            a.push((idx(i, j), idx(j, i), s_inv.clone()));
            b.push((idx(i, j), idx(j, i), -s_inv.clone()));
            b.push((idx(i, j), idx(i, j), cross.clone()));
            a.push((idx(j, i), idx(j, i), cross.clone()));
        }
    }
    SpectralRMatrix { n, a: Matrix::from_entries(n * n, n * n, a), b: Matrix::from_entries(n * n, n * n, b) }
}

/// `(1 − z)R − z(rs⁻¹ − 1)I`.
pub fn build_r_z_affine<P: Params>(params: &P, n: usize) -> SpectralRMatrix<P::F> {
    let r = build_r(params, n);
    let shift = Matrix::scalar(n * n, P::F::one() - params.ratio());
    SpectralRMatrix { n, b: r.neg().add(&shift), a: r }
}

/// `R(z)`, built entrywise and cross-checked against the Yang-Baxterization
/// of `R` with `λ₁ = −rs⁻¹`, `λ₂ = 1` and against `(1 − z)R − z(rs⁻¹ − 1)I`.
pub fn build_r_z<P: Params>(params: &P, n: usize) -> Result<SpectralRMatrix<P::F>, RMatrixError> {
    let direct = build_r_z_direct(params, n);
    let ybz = yang_baxterize(&build_r(params, n), &(-params.ratio()), &P::F::one())?;
    if ybz != direct {
        return Err(RMatrixError::InternalMismatch("entrywise vs Yang-Baxterization"));
    }
    if build_r_z_affine(params, n) != direct {
        return Err(RMatrixError::InternalMismatch("entrywise vs (1-z)R - z(rs^-1 - 1)I"));
    }
    Ok(direct)
}

/// `I^{⊗(i−1)} ⊗ m ⊗ I^{⊗(k−i−1)}` for `m` on `V ⊗ V`, `1 ≤ i < k`.
pub fn embed_at<F: Scalar>(m: &Matrix<F>, n: usize, k: usize, i: usize) -> Matrix<F> {
    assert!(1 <= i && i < k, "position {i} out of range for k = {k}");
    Matrix::identity(n.pow(i as u32 - 1))
        .kron(m)
        .kron(&Matrix::identity(n.pow((k - i - 1) as u32)))
}

/// `R₁R₂R₁ = R₂R₁R₂` on `V^{⊗3}` and `R₁R₃ = R₃R₁` on `V^{⊗4}`.
pub fn check_braid_constant<P: Params>(params: &P, n: usize) -> Report<P::F> {
    let r = build_r(params, n);
    let mut report = Report::new("braid relations");
    let (r1, r2) = (embed_at(&r, n, 3, 1), embed_at(&r, n, 3, 2));
    report.check_eq("R1R2R1=R2R1R2", &r1.mul(&r2).mul(&r1), &r2.mul(&r1).mul(&r2));
    let (r1, r3) = (embed_at(&r, n, 4, 1), embed_at(&r, n, 4, 3));
    report.check_eq("R1R3=R3R1", &r1.mul(&r3), &r3.mul(&r1));
    report
}

/// `R₁(z)R₂(zw)R₁(w) = R₂(w)R₁(zw)R₂(z)` at one point.
pub fn check_ybe_at<F: Scalar>(rz: &SpectralRMatrix<F>, z: &F, w: &F, report: &mut Report<F>) -> bool {
    let n = rz.n;
    let zw = z.clone() * w;
    let at = |x: &F, pos: usize| embed_at(&rz.eval(x), n, 3, pos);
    let lhs = at(z, 1).mul(&at(&zw, 2)).mul(&at(w, 1));
    let rhs = at(w, 2).mul(&at(&zw, 1)).mul(&at(z, 2));
    report.check_eq(format!("YBE(z={z},w={w})"), &lhs, &rhs)
}

/// The spectral Yang-Baxter equation on the grid [`YBE_GRID`]².
///
/// Entries of both sides are polynomials of degree at most 2 in `z` and in
/// `w`, so agreement on a product grid of at least 3×3 distinct points is
/// equivalent to the polynomial identity.
pub fn check_ybe_spectral<P: Params>(params: &P, n: usize) -> Result<Report<P::F>, RMatrixError> {
    let rz = build_r_z(params, n)?;
    let mut report = Report::new("spectral Yang-Baxter equation");
    for z in YBE_GRID {
        for w in YBE_GRID {
            check_ybe_at(&rz, &P::F::from_int(z), &P::F::from_int(w), &mut report);
        }
    }
    Ok(report)
}

/// `(R − I)(R + rs⁻¹I) = 0`, neither factor alone vanishes, and
/// `R² = (1 − rs⁻¹)R + rs⁻¹I`.
pub fn check_min_poly<P: Params>(params: &P, n: usize) -> Report<P::F> {
    let r = build_r(params, n);
    let q = params.ratio();
    let one = P::F::one();
    let mut report = Report::new("minimal polynomial");
    let both = annihilation_check(&r, &[one.clone(), -q.clone()]);
    report.check("(R-I)(R+qI)=0", both, None);
    report.check("R-I!=0", !annihilation_check(&r, &[one.clone()]), None);
    report.check("R+qI!=0", !annihilation_check(&r, &[-q.clone()]), None);
    let quadratic = r.scale(&(one - &q)).add(&Matrix::scalar(n * n, q));
    report.check_eq("R^2=(1-q)R+qI", &r.mul(&r), &quadratic);
    report
}

/// Every `R_i` commutes with every generator on `V^{⊗k}`.
pub fn check_module_morphism<P: Params>(params: &P, n: usize, k: usize) -> Result<Report<P::F>, RMatrixError> {
    let rep = tensor_power_rep(&natural_rep(params, n)?, k)?;
    let r = build_r(params, n);
    let mut report = Report::new("R-matrix is a module map");
    for i in 1..k {
        let ri = embed_at(&r, n, k, i);
        for (g, m) in rep.generators() {
            report.check_eq(format!("[R{i},{g}]"), &ri.mul(m), &m.mul(&ri));
        }
    }
    Ok(report)
}

/// The one-parameter spectral R-matrix:
/// `(1 − zq²) Σ E_ii⊗E_ii + (1 − z)q Σ_{i≠j} E_ij⊗E_ji
///  + (1 − q²) Σ_{i>j} E_ii⊗E_jj + z(1 − q²) Σ_{i<j} E_ii⊗E_jj`.
pub fn jimbo_r_z(n: usize) -> SpectralRMatrix<QFunc> {
    let q = QFunc::q();
    let q2 = &q * &q;
    let cross = QFunc::one() - &q2;
    let idx = |a: usize, b: usize| a * n + b;
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for i in 0..n {
        a.push((idx(i, i), idx(i, i), QFunc::one()));
        b.push((idx(i, i), idx(i, i), -q2.clone()));
        for j in 0..n {
            if i == j {
                continue;
            }
            a.push((idx(i, j), idx(j, i), q.clone()));
            b.push((idx(i, j), idx(j, i), -q.clone()));
            if i > j {
                a.push((idx(i, j), idx(i, j), cross.clone()));
            } else {
                b.push((idx(i, j), idx(i, j), cross.clone()));
            }
        }
    }
    SpectralRMatrix { n, a: Matrix::from_entries(n * n, n * n, a), b: Matrix::from_entries(n * n, n * n, b) }
}

/// Substitutes `r ↦ q`, `s ↦ q⁻¹` into the symbolic `R(z)` and compares it
/// with [`jimbo_r_z`], coefficient by coefficient in `z`.
pub fn jimbo_compare(n: usize) -> Result<Report<QFunc>, RMatrixError> {
    let rz = build_r_z(&Symbolic, n)?;
    let special = rz.try_map(|m| m.try_map(RatFunc::specialize_jimbo))?;
    let expected = jimbo_r_z(n);
    let mut report = Report::new("one-parameter specialization");
    report.check_eq("R(z)|z^0", &special.a, &expected.a);
    report.check_eq("R(z)|z^1", &special.b, &expected.b);
    Ok(report)
}
