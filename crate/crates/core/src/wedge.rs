//! The `(r,s)`-symmetric and antisymmetric squares of `V` and the wedge
//! modules `Λ^k_{r,s}(V) = V^{⊗k} / Σ_i V^{⊗i} ⊗ S²_{r,s}(V) ⊗ V^{⊗(k−i−2)}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{Matrix, QuotientData, SparseVec, Subspace};
use crate::report::Report;
use crate::rmatrix::{build_r_z, RMatrixError};
use crate::scalars::{Params, Scalar};
use crate::uqrs::{
    basis_weights, check_defining_relations, highest_weight_vectors, natural_rep, tensor_index, tensor_power_rep,
    tensor_tuple, weight_char, GenKind, Generator, Representation, UqrsError, Weight,
};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WedgeError {
    Representation(UqrsError),
    /// A generator does not preserve the summed insertions of `S²`.
    WellDefinednessFailure { generator: Generator, basis_vector: usize },
    /// The coset representatives are not the strictly increasing tuples.
    UnexpectedRepresentatives,
    /// The induced module fails a defining relation.
    InducedRelationFails(String),
    InvalidTuple,
}

impl fmt::Display for WedgeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Representation(e) => write!(f, "{e}"),
            Self::WellDefinednessFailure { generator, basis_vector } => {
                write!(f, "{generator} maps basis vector {basis_vector} of the relation space outside it")
            }
            Self::UnexpectedRepresentatives => f.write_str("coset representatives are not the increasing tuples"),
            Self::InducedRelationFails(name) => write!(f, "induced module fails {name}"),
            Self::InvalidTuple => f.write_str("tuple has the wrong length or an entry outside 1..n"),
        }
    }
}

impl core::error::Error for WedgeError {}

impl From<UqrsError> for WedgeError {
    fn from(e: UqrsError) -> Self {
        Self::Representation(e)
    }
}

fn sym2_spanning<P: Params>(params: &P, n: usize) -> Vec<SparseVec<P::F>> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(SparseVec::unit(tensor_index(n, &[i, i])));
        for j in (i + 1)..=n {
            out.push(SparseVec::from_entries([
                (tensor_index(n, &[i, j]), P::F::one()),
                (tensor_index(n, &[j, i]), params.s()),
            ]));
        }
    }
    out
}

/// `S²_{r,s}(V)`, spanned by `v_i⊗v_i` and `v_i⊗v_j + s·v_j⊗v_i` for `i < j`.
pub fn sym2<P: Params>(params: &P, n: usize) -> Subspace<P::F> {
    Subspace::span(n * n, sym2_spanning(params, n))
}

/// `Λ²_{r,s}(V)`, spanned by `v_i⊗v_j − r·v_j⊗v_i` for `i < j`.
pub fn alt2<P: Params>(params: &P, n: usize) -> Subspace<P::F> {
    let vectors = (1..=n).flat_map(|i| {
        ((i + 1)..=n).map(move |j| {
            SparseVec::from_entries([(tensor_index(n, &[i, j]), P::F::one()), (tensor_index(n, &[j, i]), -params.r())])
        })
    });
    Subspace::span(n * n, vectors)
}

/// `Im R(rs⁻¹) = S² = Ker R(r⁻¹s)` and `Ker R(rs⁻¹) = Λ² = Im R(r⁻¹s)`.
pub fn spectral_projector_check<P: Params>(params: &P, n: usize) -> Result<Report<P::F>, RMatrixError> {
    let rz = build_r_z(params, n)?;
    let (sym, alt) = (sym2(params, n), alt2(params, n));
    let q = params.ratio();
    let q_inv = q.inv().expect("r ≠ 0");
    let at_q = rz.eval(&q).kernel_image_rank();
    let at_q_inv = rz.eval(&q_inv).kernel_image_rank();
    let mut report = Report::new("special values of R(z)");
    let mut eq = |name: &str, got: &Subspace<P::F>, want: &Subspace<P::F>| {
        let detail = format!("dim {} vs {}", got.dim(), want.dim());
        report.check(name, got == want, Some(detail));
    };
    eq("Im R(rs^-1) = S2", &at_q.image, &sym);
    eq("Ker R(rs^-1) = L2", &at_q.kernel, &alt);
    eq("Ker R(r^-1s) = S2", &at_q_inv.kernel, &sym);
    eq("Im R(r^-1s) = L2", &at_q_inv.image, &alt);
    Ok(report)
}

/// `Λ^k_{r,s}(V)` with the module structure induced from `V^{⊗k}`.
///
/// The quotient basis is labelled by strictly increasing tuples in
/// lexicographic order; label `(i_1, …, i_k)` is the coset of
/// `v_{i_1} ⊗ … ⊗ v_{i_k}`.
///
/// The relation space and its quotient data are held in reversed
/// lexicographic coordinates (`t ↦ D − 1 − t`, `D = n^k`), so that each
/// pivot is the lexicographically last coordinate of its row.
#[derive(Clone, Debug)]
pub struct QuotientModule<F> {
    n: usize,
    k: usize,
    ambient_dim: usize,
    qdata: QuotientData<F>,
    induced: Representation<F>,
    labels: Vec<Vec<usize>>,
}

impl<F: Scalar> QuotientModule<F> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the summed insertions of `S²`.
    pub fn relation_dim(&self) -> usize {
        self.qdata.sub().dim()
    }

    /// Quotient data in reversed lexicographic coordinates.
    pub fn quotient_data(&self) -> &QuotientData<F> {
        &self.qdata
    }

    pub fn induced(&self) -> &Representation<F> {
        &self.induced
    }

    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    /// Coset of a vector of `V^{⊗k}` (lexicographic coordinates), expanded
    /// in the labelled basis.
    pub fn project(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let (d, q) = (self.ambient_dim, self.dim());
        let reversed = SparseVec::from_entries(v.iter().map(|(t, c)| (d - 1 - t, c.clone())));
        let image = self.qdata.project(&reversed);
        SparseVec::from_entries(image.iter().map(|(p, c)| (q - 1 - p, c.clone())))
    }

    /// `v_{i_1} ∧ … ∧ v_{i_k}` in the labelled basis; zero if an index repeats.
    pub fn straighten(&self, tuple: &[usize]) -> Result<SparseVec<F>, WedgeError> {
        if tuple.len() != self.k || tuple.iter().any(|&i| i == 0 || i > self.n) {
            return Err(WedgeError::InvalidTuple);
        }
        Ok(self.project(&SparseVec::unit(tensor_index(self.n, tuple))))
    }
}

fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// The trivial module of `V^{⊗0}`: `e_i, f_i ↦ 0` and group-likes `↦ 1`.
fn trivial_rep<F: Scalar>(n: usize) -> Result<Representation<F>, UqrsError> {
    let gens = Generator::all(n)
        .map(|g| {
            let m = match g.kind {
                GenKind::E | GenKind::F => Matrix::zeros(1, 1),
                _ => Matrix::identity(1),
            };
            (g, m)
        })
        .collect();
    Representation::new(n, 1, gens)
}

/// Builds `Λ^k_{r,s}(V)` for `dim V = n`: sums the positional insertions of
/// `S²`, checks that every generator preserves the sum, and induces the
/// action on the quotient. `k = 0` gives the trivial module and `k > n` the
/// zero module.
pub fn build_wedge_module<P: Params>(params: &P, n: usize, k: usize) -> Result<QuotientModule<P::F>, WedgeError> {
    if n < 2 {
        return Err(UqrsError::InvalidRank { n }.into());
    }
    if k == 0 {
        let qdata = QuotientData::new(Subspace::zero(1));
        return Ok(QuotientModule { n, k, ambient_dim: 1, qdata, induced: trivial_rep(n)?, labels: vec![Vec::new()] });
    }
    let d = n.pow(k as u32);
    let sym = sym2_spanning(params, n);
    let mut insertions = Vec::new();
    for pos in 0..k.saturating_sub(1) {
        let (outer, inner) = (n.pow((k - pos) as u32), n.pow((k - pos - 2) as u32));
        for a in 0..n.pow(pos as u32) {
            for y in &sym {
                for c in 0..inner {
                    let entries = y.iter().map(|(t, v)| (d - 1 - (a * outer + t * inner + c), v.clone()));
                    insertions.push(SparseVec::from_entries(entries));
                }
            }
        }
    }
    let qdata = QuotientData::new(Subspace::span(d, insertions));
    let q = qdata.dim();
    // representative positions are ascending in reversed coordinates
    let labels: Vec<Vec<usize>> = qdata
        .rep_indices()
        .iter()
        .rev()
        .map(|&t| tensor_tuple(n, k, d - 1 - t))
        .collect();
    if labels != increasing_tuples(n, k) {
        return Err(WedgeError::UnexpectedRepresentatives);
    }
    let induced = if q == 0 {
        let gens = Generator::all(n).map(|g| (g, Matrix::zeros(0, 0))).collect();
        Representation::new(n, 0, gens)?
    } else {
        let ambient = tensor_power_rep(&natural_rep(params, n)?, k)?;
        // projection V^{⊗k} → quotient, lexicographic columns, label rows
        let proj_cols: Vec<SparseVec<P::F>> = (0..d)
            .map(|t| {
                let image = qdata.project(&SparseVec::unit(d - 1 - t));
                SparseVec::from_entries(image.iter().map(|(p, c)| (q - 1 - p, c.clone())))
            })
            .collect();
        let proj = Matrix::from_columns(q, &proj_cols);
        let relation_basis: Vec<SparseVec<P::F>> = qdata
            .sub()
            .basis()
            .iter()
            .map(|b| SparseVec::from_entries(b.iter().map(|(t, c)| (d - 1 - t, c.clone()))))
            .collect();
        let label_index: Vec<usize> = labels.iter().map(|t| tensor_index(n, t)).collect();
        let mut gens = BTreeMap::new();
        for (g, m) in ambient.generators() {
            let pg = proj.mul(m);
            if let Some(bad) = relation_basis.iter().position(|b| !pg.mul_vec(b).is_zero()) {
                return Err(WedgeError::WellDefinednessFailure { generator: *g, basis_vector: bad });
            }
            let cols: Vec<SparseVec<P::F>> = label_index.iter().map(|&t| pg.column(t)).collect();
            gens.insert(*g, Matrix::from_columns(q, &cols));
        }
        Representation::new(n, q, gens)?
    };
    let relations = check_defining_relations(params, &induced);
    if let Some(bad) = relations.failures().next() {
        return Err(WedgeError::InducedRelationFails(bad.name.clone()));
    }
    Ok(QuotientModule { n, k, ambient_dim: d, qdata, induced, labels })
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Checks that the coset of `v_1 ⊗ … ⊗ v_k` is a highest weight vector of
/// weight `ϖ_k` generating the module, that `dim = C(n, k)`, and that the
/// weights are `ε_{i_1} + … + ε_{i_k}` (`i_1 < … < i_k`), each once.
pub fn verify_fundamental<P: Params>(params: &P, module: &QuotientModule<P::F>) -> Result<Report<P::F>, WedgeError> {
    let (n, k) = (module.n, module.k);
    let rep = &module.induced;
    let mut report = Report::new(format!("fundamental module n={n} k={k}"));
    report.check(
        "dim=C(n,k)",
        module.dim() == binomial(n, k),
        Some(format!("dim {} vs {}", module.dim(), binomial(n, k))),
    );
    if k > n {
        return Ok(report);
    }
    let top: Vec<usize> = (1..=k).collect();
    let hv = module.straighten(&top)?;
    report.check("highest vector is nonzero", !hv.is_zero(), None);
    let as_col = |v: &SparseVec<P::F>| Matrix::from_columns(rep.dim(), core::slice::from_ref(v));
    let hv_col = as_col(&hv);
    let weight = Weight::fundamental(n, k);
    let chi = weight_char(params, &weight);
    for i in 1..n {
        report.check_zero(format!("e{i}.hv=0"), &rep.e(i).mul(&hv_col));
        let (w, wp) = &chi.values[i - 1];
        report.check_eq(format!("w{i}.hv"), &rep.w(i).mul(&hv_col), &hv_col.scale(w));
        report.check_eq(format!("wp{i}.hv"), &rep.wp(i).mul(&hv_col), &hv_col.scale(wp));
    }

    let weights = basis_weights(params, rep)?;
    let expected: Vec<Weight> = module.labels.iter().map(|t| Weight::of_tuple(n, t)).collect();
    let mut distinct = weights.clone();
    distinct.sort();
    distinct.dedup();
    report.check("weights of labels", weights == expected, None);
    report.check(
        "weights have multiplicity one",
        distinct.len() == weights.len(),
        Some(format!("{} distinct of {}", distinct.len(), weights.len())),
    );

    let hws = highest_weight_vectors(params, rep)?;
    report.check(
        "unique highest weight line",
        hws.len() == 1 && hws[0].1 == weight,
        Some(format!("{} highest weight vectors", hws.len())),
    );

    // closure of the highest vector under all f_i
    let mut span = Subspace::span(rep.dim(), [hv.clone()]);
    let mut frontier = vec![hv];
    while let Some(v) = frontier.pop() {
        for i in 1..n {
            let u = rep.f(i).mul_vec(&v);
            if !span.contains(&u) {
                span = Subspace::span(rep.dim(), span.basis().iter().cloned().chain([u.clone()]));
                frontier.push(u);
            }
        }
    }
    report.check(
        "cyclic under f",
        span.dim() == rep.dim(),
        Some(format!("span dim {} of {}", span.dim(), rep.dim())),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{RatFunc, Sampled, Symbolic};

    #[test]
    fn sym_and_alt_n2() {
        let s = RatFunc::s();
        let sym = sym2(&Symbolic, 2);
        assert_eq!(sym.dim(), 3);
        let mixed = SparseVec::from_entries([(1, RatFunc::one()), (2, s)]);
        assert!(sym.contains(&mixed));
        assert!(sym.contains(&SparseVec::unit(0)) && sym.contains(&SparseVec::unit(3)));
        let alt = alt2(&Symbolic, 2);
        assert_eq!(alt.basis(), &[SparseVec::from_entries([(1, RatFunc::one()), (2, -RatFunc::r())])]);
    }

    #[test]
    fn sym_and_alt_are_complementary() {
        let p = Sampled::default();
        for n in 2..=6 {
            let (s, a) = (sym2(&p, n), alt2(&p, n));
            assert_eq!((s.dim(), a.dim()), (n * (n + 1) / 2, n * (n - 1) / 2));
            assert_eq!(Subspace::sum(&[s, a]).unwrap().dim(), n * n);
        }
    }

    #[test]
    fn special_values_n2_n3() {
        assert!(spectral_projector_check(&Symbolic, 2).unwrap().passed());
        let p = Sampled::default();
        let report = spectral_projector_check(&p, 3).unwrap();
        assert!(report.passed());
        let rz = build_r_z(&p, 3).unwrap();
        assert_eq!(rz.eval(&p.ratio()).rank(), 6);
    }

    #[test]
    fn wedge_k1_is_natural() {
        let m = build_wedge_module(&Symbolic, 3, 1).unwrap();
        assert_eq!(m.induced(), &natural_rep(&Symbolic, 3).unwrap());
        assert_eq!(m.labels(), &[vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn wedge_3_2() {
        let m = build_wedge_module(&Symbolic, 3, 2).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.relation_dim(), 6);
        assert_eq!(m.labels(), &[vec![1, 2], vec![1, 3], vec![2, 3]]);
        let rep = m.induced();
        // e₁(v₂∧v₃) = v₁∧v₃, e₁(v₁∧v₂) = 0, f₁(v₁∧v₃) = v₂∧v₃
        assert_eq!(rep.e(1).mul_vec(&SparseVec::unit(2)), SparseVec::unit(1));
        assert!(rep.e(1).mul_vec(&SparseVec::unit(0)).is_zero());
        assert_eq!(rep.f(1).mul_vec(&SparseVec::unit(1)), SparseVec::unit(2));
        let rs = &RatFunc::r() * &RatFunc::s();
        assert_eq!(rep.w(1).mul_vec(&SparseVec::unit(0)), SparseVec::from_entries([(0, rs)]));
        assert!(verify_fundamental(&Symbolic, &m).unwrap().passed());
    }

    #[test]
    fn wedge_2_2_is_one_dimensional() {
        let m = build_wedge_module(&Symbolic, 2, 2).unwrap();
        assert_eq!(m.dim(), 1);
        let rep = m.induced();
        assert!(rep.e(1).is_zero() && rep.f(1).is_zero());
        assert_eq!(*rep.w(1), Matrix::scalar(1, &RatFunc::r() * &RatFunc::s()));
    }

    #[test]
    fn wedge_4_2_and_zero_module() {
        let p = Sampled::default();
        assert_eq!(build_wedge_module(&p, 4, 2).unwrap().dim(), 6);
        let zero = build_wedge_module(&p, 2, 3).unwrap();
        assert_eq!((zero.dim(), zero.relation_dim()), (0, 8));
        assert!(verify_fundamental(&p, &zero).unwrap().passed());
    }

    #[test]
    fn wedge_k0_is_trivial() {
        let p = Sampled::default();
        let m = build_wedge_module(&p, 3, 0).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(verify_fundamental(&p, &m).unwrap().passed());
    }

    #[test]
    fn straighten_examples() {
        let m = build_wedge_module(&Symbolic, 3, 2).unwrap();
        let s_inv = RatFunc::s().inv().unwrap();
        assert_eq!(m.straighten(&[2, 1]).unwrap(), SparseVec::from_entries([(0, -s_inv.clone())]));
        assert!(m.straighten(&[1, 1]).unwrap().is_zero());
        assert_eq!(m.straighten(&[1, 4]), Err(WedgeError::InvalidTuple));
        let m = build_wedge_module(&Symbolic, 3, 3).unwrap();
        assert_eq!(m.straighten(&[3, 1, 2]).unwrap(), SparseVec::from_entries([(0, &s_inv * &s_inv)]));
    }

    #[test]
    fn sampled_fundamentals_n4() {
        let p = Sampled::from_ints(3, 5).unwrap();
        for k in 0..=5 {
            let m = build_wedge_module(&p, 4, k).unwrap();
            assert_eq!(m.dim(), binomial(4, k));
            assert!(verify_fundamental(&p, &m).unwrap().passed(), "k = {k}");
        }
    }

    #[test]
    fn binomials() {
        assert_eq!((binomial(6, 3), binomial(2, 3), binomial(5, 0)), (20, 0, 1));
    }
}
